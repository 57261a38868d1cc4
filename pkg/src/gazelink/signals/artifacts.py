"""Amplitude-threshold artifact screening."""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from .types import EegTrial


@dataclass(frozen=True)
class ArtifactReport:
    """Channels and sample indices whose absolute amplitude broke the threshold."""

    peak_uv: float
    channels: tuple[int, ...]
    sample_indices: tuple[tuple[int, int], ...]  # (channel, sample) pairs
    max_abs_uv: float


def reject_artifacts(trial: EegTrial, peak_uv: float = 100.0) -> EegTrial | ArtifactReport:
    """Accept the trial if every sample stays within +/- peak_uv microvolts.

    Returns the trial unchanged when clean, otherwise an ArtifactReport
    listing every offending channel and (channel, sample) index.
    """
    if peak_uv <= 0:
        raise ValueError(f"peak_uv must be > 0, got {peak_uv}")
    mask = np.abs(trial.samples) > peak_uv
    if not mask.any():
        return trial
    ch_idx, s_idx = np.nonzero(mask)
    return ArtifactReport(
        peak_uv=peak_uv,
        channels=tuple(sorted(set(int(c) for c in ch_idx))),
        sample_indices=tuple((int(c), int(s)) for c, s in zip(ch_idx, s_idx)),
        max_abs_uv=float(np.max(np.abs(trial.samples))),
    )
