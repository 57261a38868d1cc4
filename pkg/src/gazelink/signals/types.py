"""Acquisition metadata and the multi-channel EEG epoch container."""

from __future__ import annotations

import json
from dataclasses import dataclass, field

import numpy as np

TRIAL_SCHEMA_VERSION = 1


@dataclass(frozen=True)
class AcquisitionConfig:
    """Sampling geometry of one acquisition setup.

    Desk-scale defaults (8 channels, 250 Hz, 1 s epochs) stand in for
    heavier lab rigs; everything downstream reads the values from here.
    """

    n_channels: int = 8
    sample_rate_hz: float = 250.0
    epoch_len_samples: int = 250

    def __post_init__(self):
        if self.n_channels < 1:
            raise ValueError(f"n_channels must be >= 1, got {self.n_channels}")
        if self.sample_rate_hz <= 0:
            raise ValueError(f"sample_rate_hz must be > 0, got {self.sample_rate_hz}")
        if self.epoch_len_samples < 2:
            raise ValueError(
                f"epoch_len_samples must be >= 2, got {self.epoch_len_samples}"
            )

    @property
    def nyquist_hz(self) -> float:
        return self.sample_rate_hz / 2.0

    def time_base(self) -> np.ndarray:
        """Sample times in seconds, 1-based: t_k = k / f_s for k = 1..N_p."""
        return np.arange(1, self.epoch_len_samples + 1) / self.sample_rate_hz


@dataclass
class EegTrial:
    """One epoch of multi-channel EEG, shape (n_channels, epoch_len_samples), in microvolts."""

    samples: np.ndarray
    config: AcquisitionConfig
    true_class: int | None = None

    def __post_init__(self):
        self.samples = np.asarray(self.samples, dtype=float)
        expected = (self.config.n_channels, self.config.epoch_len_samples)
        if self.samples.shape != expected:
            raise ValueError(
                f"samples shape {self.samples.shape} does not match config {expected}"
            )
        if not np.all(np.isfinite(self.samples)):
            raise ValueError("samples contain non-finite values")

    def with_samples(self, samples: np.ndarray) -> "EegTrial":
        """Copy of this trial with the sample matrix replaced (metadata kept)."""
        return EegTrial(samples=samples, config=self.config, true_class=self.true_class)

    def to_dict(self) -> dict:
        d = {
            "schema_version": TRIAL_SCHEMA_VERSION,
            "sample_rate_hz": self.config.sample_rate_hz,
            "n_channels": self.config.n_channels,
            "samples": self.samples.tolist(),
        }
        if self.true_class is not None:
            d["true_class"] = int(self.true_class)
        return d

    @classmethod
    def from_dict(cls, d: dict) -> "EegTrial":
        samples = np.asarray(d["samples"], dtype=float)
        if samples.ndim != 2:
            raise ValueError("samples must be a channel-major 2-D array")
        if samples.shape[0] != d["n_channels"]:
            raise ValueError(
                f"n_channels={d['n_channels']} but samples has {samples.shape[0]} rows"
            )
        config = AcquisitionConfig(
            n_channels=samples.shape[0],
            sample_rate_hz=float(d["sample_rate_hz"]),
            epoch_len_samples=samples.shape[1],
        )
        return cls(samples=samples, config=config, true_class=d.get("true_class"))


def save_trial(trial: EegTrial, path: str) -> None:
    with open(path, "w", encoding="utf-8") as f:
        json.dump(trial.to_dict(), f)


def load_trial(path: str) -> EegTrial:
    with open(path, "r", encoding="utf-8") as f:
        return EegTrial.from_dict(json.load(f))
