import numpy as np
import pytest

from gazelink.signals import AcquisitionConfig, EegTrial
from gazelink.tdca import CalibrationSet, TdcaConfig, classify, fit
from gazelink.tdca.projection import class_projection


def sinusoid_trial(cfg, freq, phase=0.0, noise=0.0, seed=0, true_class=None):
    rng = np.random.default_rng(seed)
    t = cfg.time_base()
    base = np.sin(2 * np.pi * freq * t + phase)
    gains = np.linspace(1.0, 2.0, cfg.n_channels)[:, None]
    samples = gains * base + noise * rng.normal(size=(cfg.n_channels, cfg.epoch_len_samples))
    return EegTrial(samples, cfg, true_class=true_class)


def toy_calibration(noise=0.05, trials_per_class=4, seed0=0):
    cfg = AcquisitionConfig(n_channels=2, sample_rate_hz=64, epoch_len_samples=16)
    freqs = (8.0, 12.0, 16.0)
    trials = []
    for c, f in enumerate(freqs):
        for r in range(trials_per_class):
            trials.append(
                sinusoid_trial(cfg, f, noise=noise, seed=seed0 + 100 * c + r, true_class=c)
            )
    tdca_cfg = TdcaConfig(class_freqs_hz=freqs, delay_count=1, n_harmonics=1, subspace_dim=2)
    return CalibrationSet(trials), tdca_cfg


def test_two_class_noiseless_training_accuracy():
    cfg = AcquisitionConfig(n_channels=2, sample_rate_hz=250, epoch_len_samples=250)
    freqs = (10.0, 15.0)
    trials = [
        sinusoid_trial(cfg, f, phase=0.1 * r, noise=0.0, true_class=c)
        for c, f in enumerate(freqs)
        for r in range(3)
    ]
    model = fit(
        CalibrationSet(trials),
        TdcaConfig(class_freqs_hz=freqs, delay_count=0, n_harmonics=1, subspace_dim=2),
    )
    for trial in trials:
        assert classify(model, trial).decided_class == trial.true_class


def test_duplicated_trials_regularized_solve_finite():
    cfg = AcquisitionConfig(n_channels=2, sample_rate_hz=64, epoch_len_samples=16)
    freqs = (8.0, 16.0)
    one_a = sinusoid_trial(cfg, 8.0, noise=0.01, seed=1, true_class=0)
    one_b = sinusoid_trial(cfg, 16.0, noise=0.01, seed=2, true_class=1)
    trials = [one_a, one_a, one_b, one_b]  # zero within-class scatter
    model = fit(
        CalibrationSet(trials),
        TdcaConfig(class_freqs_hz=freqs, delay_count=1, n_harmonics=1, subspace_dim=2),
    )
    assert np.all(np.isfinite(model.filters))
    assert model.diagnostics.within_scatter_singular


def test_toy_generalized_eigenvalue_matches_dense_oracle():
    calib, cfg = toy_calibration()
    model = fit(calib, cfg)
    diag = model.diagnostics
    s_w_reg = diag.within_scatter + diag.regularization * np.eye(diag.within_scatter.shape[0])
    # Independent dense solver: plain eigendecomposition of inv(Sw) @ Sb.
    vals = np.linalg.eigvals(np.linalg.inv(s_w_reg) @ diag.between_scatter)
    lead_oracle = float(np.max(vals.real))
    lead = float(diag.eigenvalues[0])
    assert abs(lead - lead_oracle) <= 1e-8 * abs(lead_oracle)


def objective_ratios(calib, cfg, model):
    """Plain scatter-form ratio and projector direct-sum form, built naively."""
    from gazelink.tdca.augment import augment_delays

    w = model.filters
    acq = calib.config
    stacked = [augment_delays(t, cfg.delay_count).values for t in calib.trials]
    labels = [t.true_class for t in calib.trials]
    n_c = cfg.n_classes
    n_t = len(stacked)
    grand = np.mean(stacked, axis=0)
    means = [np.mean([x for x, y in zip(stacked, labels) if y == c], axis=0) for c in range(n_c)]
    projs = [class_projection(f, acq, cfg.n_harmonics).values for f in cfg.class_freqs_hz]

    ratio_scatter = float(
        np.trace(w.T @ model.diagnostics.between_scatter @ w)
        / np.trace(w.T @ model.diagnostics.within_scatter @ w)
    )

    # Direct-sum form: H matrices without the projection halves, paired with
    # block-diagonal projector sums (P + I).
    hb = np.concatenate([means[c] - grand for c in range(n_c)], axis=1) / np.sqrt(n_c)
    hw = np.concatenate(
        [x - means[y] for x, y in zip(stacked, labels)], axis=1
    ) / np.sqrt(n_t)
    n_p = acq.epoch_len_samples
    pb = np.zeros((n_c * n_p, n_c * n_p))
    for c in range(n_c):
        pb[c * n_p : (c + 1) * n_p, c * n_p : (c + 1) * n_p] = projs[c]
    pw = np.zeros((n_t * n_p, n_t * n_p))
    for j, y in enumerate(labels):
        pw[j * n_p : (j + 1) * n_p, j * n_p : (j + 1) * n_p] = projs[y]
    num = np.trace(w.T @ hb @ (pb + np.eye(n_c * n_p)) @ hb.T @ w)
    den = np.trace(w.T @ hw @ (pw + np.eye(n_t * n_p)) @ hw.T @ w)
    return ratio_scatter, float(num / den)


def test_objective_equivalence_scatter_vs_direct_sum():
    calib, cfg = toy_calibration()
    model = fit(calib, cfg)
    r_scatter, r_projector = objective_ratios(calib, cfg, model)
    assert abs(r_scatter - r_projector) <= 1e-6 * abs(r_projector)


def test_filters_ordered_by_descending_eigenvalue():
    calib, cfg = toy_calibration()
    model = fit(calib, cfg)
    eig = model.diagnostics.eigenvalues
    assert np.all(np.diff(eig) <= 1e-12)


def test_unknown_class_rejected():
    calib, cfg = toy_calibration()
    bad_cfg = TdcaConfig(class_freqs_hz=(8.0, 12.0), delay_count=1, n_harmonics=1, subspace_dim=2)
    with pytest.raises(ValueError):
        fit(calib, bad_cfg)


def test_insufficient_trials_rejected():
    cfg = AcquisitionConfig(n_channels=2, sample_rate_hz=64, epoch_len_samples=16)
    trials = [
        sinusoid_trial(cfg, 8.0, true_class=0),
        sinusoid_trial(cfg, 8.0, seed=1, true_class=0),
        sinusoid_trial(cfg, 12.0, true_class=1),
    ]
    with pytest.raises(ValueError):
        CalibrationSet(trials)


def test_subspace_dim_capped():
    calib, _ = toy_calibration()
    cfg = TdcaConfig(class_freqs_hz=(8.0, 12.0, 16.0), delay_count=1, n_harmonics=1, subspace_dim=5)
    with pytest.raises(ValueError):
        fit(calib, cfg)  # (l+1)*n_ch = 4 < 5
