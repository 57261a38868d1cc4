"""Task-discriminant component analysis: calibration and inference."""

from .augment import AugmentedTrial, augment_delays, augment_secondary
from .model import (
    CalibrationSet,
    CorrelationVector,
    FitDiagnostics,
    TargetDecision,
    TdcaConfig,
    TdcaModel,
    classify,
    fit,
    score,
)
from .projection import DegenerateReferenceError, ProjectionMatrix, class_projection
from .serialize import load_model, model_from_dict, model_to_dict, save_model

__all__ = [
    "AugmentedTrial",
    "CalibrationSet",
    "CorrelationVector",
    "DegenerateReferenceError",
    "FitDiagnostics",
    "ProjectionMatrix",
    "TargetDecision",
    "TdcaConfig",
    "TdcaModel",
    "augment_delays",
    "augment_secondary",
    "class_projection",
    "classify",
    "fit",
    "load_model",
    "model_from_dict",
    "model_to_dict",
    "save_model",
    "score",
]
