"""Orthogonal projectors onto per-class sine/cosine reference subspaces."""

from __future__ import annotations

from dataclasses import dataclass, field

import numpy as np
from scipy import linalg as sla

from ..signals.reference import make_reference
from ..signals.types import AcquisitionConfig


class DegenerateReferenceError(ValueError):
    """The reference matrix lost column rank (e.g. a harmonic hit Nyquist)."""


@dataclass
class ProjectionMatrix:
    """Projector onto the span of one class's harmonic reference signals.

    ``q_factor`` is the orthonormal basis (epoch_len x 2*n_harmonics); the
    full projector P = Q Q^T is materialized lazily since only tests and
    diagnostics need it.
    """

    class_idx: int
    stimulus_freq_hz: float
    n_harmonics: int
    q_factor: np.ndarray
    _values: np.ndarray | None = field(default=None, repr=False)

    @property
    def values(self) -> np.ndarray:
        if self._values is None:
            self._values = self.q_factor @ self.q_factor.T
        return self._values

    @property
    def rank(self) -> int:
        return self.q_factor.shape[1]


def class_projection(
    freq_hz: float,
    config: AcquisitionConfig,
    n_harmonics: int,
    class_idx: int = -1,
) -> ProjectionMatrix:
    """Build the orthogonal projector for one stimulus frequency.

    Uses the economic QR factorization of the reference matrix; a collapsed
    column (degenerate frequency, e.g. a harmonic landing exactly on a
    multiple of half the sampling rate) is reported instead of silently
    producing a rank-deficient projector.
    """
    ref = make_reference(freq_hz, config, n_harmonics)
    q, r = sla.qr(ref.values, mode="economic")
    diag = np.abs(np.diag(r))
    tol = max(ref.values.shape) * np.finfo(float).eps * (diag.max() if diag.size else 0.0)
    if np.any(diag <= tol):
        bad = int(np.argmax(diag <= tol))
        raise DegenerateReferenceError(
            f"reference for {freq_hz} Hz is rank-deficient at column {bad} "
            f"(|r_kk|={diag[bad]:.3e})"
        )
    return ProjectionMatrix(
        class_idx=class_idx,
        stimulus_freq_hz=freq_hz,
        n_harmonics=n_harmonics,
        q_factor=q,
    )
