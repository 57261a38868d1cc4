"""Synthetic EEG generation, reference signals, and preprocessing."""

from .artifacts import ArtifactReport, reject_artifacts
from .filters import bandpass_filter, filtfilt_sos, notch_filter
from .preprocess import PreprocessConfig, preprocess
from .reference import AliasingError, ReferenceMatrix, make_reference
from .synth import StimulusSpec, default_stimulus, measure_snr_db, synthesize_trial
from .types import AcquisitionConfig, EegTrial, load_trial, save_trial

__all__ = [
    "AcquisitionConfig",
    "AliasingError",
    "ArtifactReport",
    "EegTrial",
    "PreprocessConfig",
    "ReferenceMatrix",
    "StimulusSpec",
    "bandpass_filter",
    "default_stimulus",
    "filtfilt_sos",
    "load_trial",
    "make_reference",
    "measure_snr_db",
    "notch_filter",
    "preprocess",
    "reject_artifacts",
    "save_trial",
    "synthesize_trial",
]
