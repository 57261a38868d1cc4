"""Forward-model synthesis of SSVEP epochs for calibration and benchmarks.

Each stimulus class drives a bank of harmonic sinusoids with class-stable
phases; a fixed mixing matrix projects the harmonics onto the channels, and
the epoch is completed with white + 1/f noise and a mains-frequency tone.
The noise is rescaled per trial so the realized signal-to-noise ratio
(harmonic power over total noise power, averaged across channels) hits the
requested value exactly.
"""

from __future__ import annotations

from dataclasses import dataclass, field

import numpy as np

from .types import AcquisitionConfig, EegTrial

# Power split of the noise components (white, 1/f, alpha rhythm, mains tone).
_NOISE_MIX = (0.4, 0.25, 0.25, 0.1)
_LINE_FREQ_HZ = 50.0
_ALPHA_BAND_HZ = (8.0, 13.0)
_TARGET_RMS_UV = 5.0

_GOLDEN = 0.618033988749895


def _default_phases(n_classes: int, n_harmonics: int) -> np.ndarray:
    """Class-stable harmonic phases, spread by a golden-ratio sequence."""
    c = np.arange(n_classes)[:, None]
    h = np.arange(n_harmonics)[None, :]
    return 2.0 * np.pi * np.mod(_GOLDEN * (c + 1) + 0.25 * h, 1.0)


@dataclass
class StimulusSpec:
    """Forward model shared by every synthesized trial of one task.

    ``mixing`` maps harmonic sources to channels (n_channels x n_harmonics);
    ``class_phases_rad`` pins each class's harmonic phases so trials of one
    class stay phase-locked across repetitions.
    """

    class_freqs_hz: tuple[float, ...]
    harmonic_amplitudes: tuple[float, ...]
    mixing: np.ndarray
    snr_db: float
    class_phases_rad: np.ndarray = field(default=None)  # type: ignore[assignment]

    def __post_init__(self):
        if len(set(self.class_freqs_hz)) != len(self.class_freqs_hz):
            raise ValueError("class frequencies must be pairwise distinct")
        if not any(a > 0 for a in self.harmonic_amplitudes):
            raise ValueError("at least one harmonic amplitude must be > 0")
        self.mixing = np.asarray(self.mixing, dtype=float)
        if self.mixing.shape[1] != len(self.harmonic_amplitudes):
            raise ValueError("mixing columns must match harmonic count")
        if self.class_phases_rad is None:
            self.class_phases_rad = _default_phases(
                len(self.class_freqs_hz), len(self.harmonic_amplitudes)
            )
        self.class_phases_rad = np.asarray(self.class_phases_rad, dtype=float)

    @property
    def n_classes(self) -> int:
        return len(self.class_freqs_hz)

    @property
    def n_harmonics(self) -> int:
        return len(self.harmonic_amplitudes)


def default_stimulus(
    config: AcquisitionConfig,
    class_freqs_hz: tuple[float, ...] | list[float],
    n_harmonics: int = 3,
    snr_db: float = 0.0,
    seed: int = 0,
) -> StimulusSpec:
    """Seeded forward model with SSVEP-like harmonic decay."""
    rng = np.random.default_rng(seed)
    amps = tuple(1.0 / (1.0 + 0.8 * h) for h in range(n_harmonics))
    # Smooth scalp-like projection: each harmonic source reaches all channels
    # with random but fixed gains, biased toward a common topography.
    common = rng.normal(size=(config.n_channels, 1))
    mixing = 0.7 * common + 0.5 * rng.normal(size=(config.n_channels, n_harmonics))
    return StimulusSpec(
        class_freqs_hz=tuple(float(f) for f in class_freqs_hz),
        harmonic_amplitudes=amps,
        mixing=mixing,
        snr_db=snr_db,
    )


def _pink_noise(rng: np.random.Generator, n_channels: int, n_samples: int) -> np.ndarray:
    """Gaussian noise with ~1/f power shaping (flat below the first bin)."""
    white = rng.normal(size=(n_channels, n_samples))
    spec = np.fft.rfft(white, axis=1)
    freqs = np.fft.rfftfreq(n_samples)
    shaping = np.ones_like(freqs)
    nonzero = freqs > 0
    shaping[nonzero] = 1.0 / np.sqrt(freqs[nonzero] / freqs[nonzero][0])
    out = np.fft.irfft(spec * shaping, n=n_samples, axis=1)
    return out


def _alpha_noise(
    rng: np.random.Generator, n_channels: int, n_samples: int, sample_rate_hz: float
) -> np.ndarray:
    """Band-limited Gaussian noise mimicking the occipital alpha rhythm."""
    white = rng.normal(size=(n_channels, n_samples))
    spec = np.fft.rfft(white, axis=1)
    freqs = np.fft.rfftfreq(n_samples, d=1.0 / sample_rate_hz)
    center = 0.5 * (_ALPHA_BAND_HZ[0] + _ALPHA_BAND_HZ[1])
    width = 0.5 * (_ALPHA_BAND_HZ[1] - _ALPHA_BAND_HZ[0])
    shaping = np.exp(-0.5 * ((freqs - center) / width) ** 2)
    return np.fft.irfft(spec * shaping, n=n_samples, axis=1)


def _mean_power(x: np.ndarray) -> float:
    return float(np.mean(x**2))


def synthesize_trial(
    spec: StimulusSpec, config: AcquisitionConfig, class_idx: int, seed: int
) -> EegTrial:
    """Render one epoch of the given class; bit-identical for a fixed seed."""
    if not 0 <= class_idx < spec.n_classes:
        raise ValueError(
            f"class_idx {class_idx} out of range for {spec.n_classes} classes"
        )
    if spec.mixing.shape[0] != config.n_channels:
        raise ValueError(
            f"mixing has {spec.mixing.shape[0]} channel rows, config wants {config.n_channels}"
        )
    rng = np.random.default_rng(seed)
    t = config.time_base()
    f0 = spec.class_freqs_hz[class_idx]

    sources = np.empty((spec.n_harmonics, config.epoch_len_samples))
    for h in range(spec.n_harmonics):
        phase = spec.class_phases_rad[class_idx, h]
        sources[h] = spec.harmonic_amplitudes[h] * np.sin(
            2.0 * np.pi * (h + 1) * f0 * t + phase
        )
    sig = spec.mixing @ sources

    white = rng.normal(size=sig.shape)
    pink = _pink_noise(rng, config.n_channels, config.epoch_len_samples)
    alpha = _alpha_noise(
        rng, config.n_channels, config.epoch_len_samples, config.sample_rate_hz
    )
    line_phase = rng.uniform(0, 2 * np.pi)
    line_gain = rng.uniform(0.5, 1.5, size=(config.n_channels, 1))
    line = line_gain * np.sin(2.0 * np.pi * _LINE_FREQ_HZ * t + line_phase)

    noise = np.zeros_like(sig)
    for frac, comp in zip(_NOISE_MIX, (white, pink, alpha, line)):
        p = _mean_power(comp)
        if p > 0:
            noise += np.sqrt(frac / p) * comp
    # AC-coupled front end: the epoch carries no DC, so the SNR accounting
    # should not either.
    noise -= noise.mean(axis=1, keepdims=True)

    p_sig = _mean_power(sig)
    p_noise = _mean_power(noise)
    target_noise_power = p_sig / 10.0 ** (spec.snr_db / 10.0)
    noise *= np.sqrt(target_noise_power / p_noise)

    combined = sig + noise
    rms = np.sqrt(_mean_power(combined))
    if rms > 0:
        combined *= _TARGET_RMS_UV / rms
    return EegTrial(samples=combined, config=config, true_class=class_idx)


def measure_snr_db(
    trial: EegTrial, stimulus_freq_hz: float, n_harmonics: int
) -> float:
    """Periodogram estimate of harmonic power over everything else, in dB.

    Signal power is read from the channel-summed DFT bins nearest each
    harmonic after subtracting a local noise floor; the floor is a quadratic
    fit to the log of the neighboring bins (bias-corrected for the
    chi-square distribution of periodogram ordinates), so sloped or humped
    noise spectra do not skew the estimate. All remaining power is noise.
    """
    from scipy.special import digamma

    x = trial.samples - trial.samples.mean(axis=1, keepdims=True)
    n = trial.config.epoch_len_samples
    fs = trial.config.sample_rate_hz
    z = np.sum(np.abs(np.fft.rfft(x, axis=1)) ** 2, axis=0)
    freqs = np.fft.rfftfreq(n, d=1.0 / fs)
    n_ch = x.shape[0]
    log_bias = float(digamma(n_ch) - np.log(n_ch))

    sig_bins = set()
    for h in range(1, n_harmonics + 1):
        f = stimulus_freq_hz * h
        if f >= fs / 2:
            break
        sig_bins.add(int(np.argmin(np.abs(freqs - f))))

    half_w = 4
    sig_power = 0.0
    for b in sorted(sig_bins):
        nb = [
            i
            for i in range(max(1, b - half_w), min(len(z), b + half_w + 1))
            if abs(i - b) > 1
        ]
        xs = np.array(nb, dtype=float)
        design = np.vstack([xs**2, xs, np.ones_like(xs)]).T
        coef, *_ = np.linalg.lstsq(design, np.log(z[nb]), rcond=None)
        floor = np.exp(coef[0] * b * b + coef[1] * b + coef[2] - log_bias)
        sig_power += max(float(z[b]) - floor, 0.0)
    noise_power = float(np.sum(z)) - sig_power
    return 10.0 * np.log10(sig_power / noise_power)
