"""Sine/cosine reference matrices for frequency-coded stimulus classes."""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from .types import AcquisitionConfig


class AliasingError(ValueError):
    """A requested harmonic would fold over the Nyquist frequency."""

    def __init__(self, freq_hz: float, harmonic: int, nyquist_hz: float):
        self.freq_hz = freq_hz
        self.harmonic = harmonic
        self.nyquist_hz = nyquist_hz
        super().__init__(
            f"harmonic {harmonic} of {freq_hz} Hz is {freq_hz * harmonic} Hz, "
            f"at or above Nyquist ({nyquist_hz} Hz)"
        )


@dataclass(frozen=True)
class ReferenceMatrix:
    """Stacked sin/cos harmonics of one stimulus frequency.

    ``values`` has shape (epoch_len_samples, 2 * n_harmonics); column pair
    (2h-2, 2h-1) holds sin and cos of harmonic h evaluated on the 1-based
    time base t_k = k / f_s.
    """

    stimulus_freq_hz: float
    n_harmonics: int
    values: np.ndarray


def make_reference(
    freq_hz: float, config: AcquisitionConfig, n_harmonics: int
) -> ReferenceMatrix:
    """Build the reference matrix for one stimulus frequency.

    Parameters
    ----------
    freq_hz : float
        Fundamental stimulus frequency in Hz; must be positive.
    config : AcquisitionConfig
        Supplies the sampling rate and epoch length.
    n_harmonics : int
        Number of harmonics to stack; every harmonic must stay below Nyquist.

    Raises
    ------
    AliasingError
        If ``freq_hz * h`` reaches Nyquist for any harmonic h, naming the
        first offending harmonic.
    """
    if freq_hz <= 0:
        raise ValueError(f"freq_hz must be > 0, got {freq_hz}")
    if n_harmonics < 1:
        raise ValueError(f"n_harmonics must be >= 1, got {n_harmonics}")
    for h in range(1, n_harmonics + 1):
        if freq_hz * h >= config.nyquist_hz:
            raise AliasingError(freq_hz, h, config.nyquist_hz)

    t = config.time_base()
    cols = np.empty((config.epoch_len_samples, 2 * n_harmonics))
    for h in range(1, n_harmonics + 1):
        phase = 2.0 * np.pi * h * freq_hz * t
        cols[:, 2 * h - 2] = np.sin(phase)
        cols[:, 2 * h - 1] = np.cos(phase)
    return ReferenceMatrix(stimulus_freq_hz=freq_hz, n_harmonics=n_harmonics, values=cols)
