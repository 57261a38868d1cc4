import numpy as np
import pytest

from gazelink.signals import AcquisitionConfig, make_reference
from gazelink.tdca import DegenerateReferenceError, class_projection

from naive_tdca import gram_schmidt

CFG = AcquisitionConfig(n_channels=1, sample_rate_hz=250, epoch_len_samples=125)


def test_trace_equals_rank():
    proj = class_projection(11.0, CFG, 4)
    assert np.trace(proj.values) == pytest.approx(8.0, abs=1e-9)


def test_projector_fixes_its_own_range():
    proj = class_projection(9.4, CFG, 3)
    y = make_reference(9.4, CFG, 3).values
    np.testing.assert_allclose(y.T @ proj.values, y.T, atol=1e-9)


def test_idempotent_and_symmetric():
    proj = class_projection(13.0, CFG, 5)
    p = proj.values
    assert np.max(np.abs(p @ p - p)) < 1e-9
    assert np.max(np.abs(p - p.T)) < 1e-9


def test_annihilates_orthogonal_complement():
    # Build a vector orthogonal to the reference span with Gram-Schmidt.
    rng = np.random.default_rng(2)
    y = make_reference(10.0, CFG, 2).values
    basis = gram_schmidt(y)
    v = rng.normal(size=CFG.epoch_len_samples)
    for i in range(basis.shape[1]):
        v -= (basis[:, i] @ v) * basis[:, i]
    proj = class_projection(10.0, CFG, 2)
    assert np.linalg.norm(v @ proj.values) < 1e-9 * np.linalg.norm(v)


def test_degenerate_frequency_reported():
    # A harmonic exactly at half the sampling rate collapses its cosine pair.
    cfg = AcquisitionConfig(n_channels=1, sample_rate_hz=100, epoch_len_samples=80)
    with pytest.raises((DegenerateReferenceError, ValueError)):
        class_projection(25.0, cfg, 2)  # 2nd harmonic = 50 Hz = Nyquist
