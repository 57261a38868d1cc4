"""Standard preprocessing chain: notch -> bandpass -> artifact screen."""

from __future__ import annotations

from dataclasses import dataclass

from .artifacts import ArtifactReport, reject_artifacts
from .filters import bandpass_filter, notch_filter
from .types import EegTrial


@dataclass(frozen=True)
class PreprocessConfig:
    notch_hz: float = 50.0
    notch_q: float = 30.0
    band_lo_hz: float = 6.0
    band_hi_hz: float = 90.0
    peak_uv: float = 100.0


def preprocess(
    trial: EegTrial, cfg: PreprocessConfig = PreprocessConfig()
) -> EegTrial | ArtifactReport:
    """Run the full chain; returns an ArtifactReport instead when the trial is dirty."""
    screened = reject_artifacts(trial, cfg.peak_uv)
    if isinstance(screened, ArtifactReport):
        return screened
    out = notch_filter(trial, cfg.notch_hz, cfg.notch_q)
    out = bandpass_filter(out, cfg.band_lo_hz, cfg.band_hi_hz)
    return out
