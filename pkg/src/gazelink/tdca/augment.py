"""Delay-stacking (primary) and reference-projection (secondary) augmentation."""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from ..signals.types import EegTrial
from .projection import ProjectionMatrix


@dataclass(frozen=True)
class AugmentedTrial:
    """Delay-stacked trial: (delay_count+1) * n_channels rows, epoch length columns.

    Block d holds the original matrix shifted left by d samples with the
    vacated trailing columns zero-filled; block 0 is the untouched trial.
    """

    values: np.ndarray
    delay_count: int
    n_channels: int


def augment_delays(trial: EegTrial, delay_count: int) -> AugmentedTrial:
    """Stack ``delay_count`` left-shifted, zero-padded copies under the trial."""
    n_ch, n_p = trial.samples.shape
    if delay_count < 0:
        raise ValueError(f"delay_count must be >= 0, got {delay_count}")
    if delay_count >= n_p:
        raise ValueError(
            f"delay_count {delay_count} must be smaller than epoch length {n_p}"
        )
    blocks = np.zeros(((delay_count + 1) * n_ch, n_p))
    for d in range(delay_count + 1):
        rows = slice(d * n_ch, (d + 1) * n_ch)
        blocks[rows, : n_p - d] = trial.samples[:, d:]
    return AugmentedTrial(values=blocks, delay_count=delay_count, n_channels=n_ch)


def augment_secondary(aug: AugmentedTrial, proj: ProjectionMatrix) -> np.ndarray:
    """Concatenate the trial with its projection onto the reference subspace.

    Returns the feature matrix [X, X P] of shape (rows, 2 * epoch length).
    """
    n_p = aug.values.shape[1]
    if proj.q_factor.shape[0] != n_p:
        raise ValueError(
            f"projection built for {proj.q_factor.shape[0]} samples, trial has {n_p}"
        )
    projected = (aug.values @ proj.q_factor) @ proj.q_factor.T
    return np.concatenate([aug.values, projected], axis=1)
