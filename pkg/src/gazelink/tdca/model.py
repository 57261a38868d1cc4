"""TDCA calibration and inference.

Calibration stacks delay-augmented trials, projects them onto per-class
harmonic reference subspaces, and solves a multi-class Fisher criterion
(between-class over within-class scatter) as a generalized eigenproblem.
Inference correlates a test trial's filtered features against each class
template and picks the class with the highest Pearson correlation.
"""

from __future__ import annotations

from dataclasses import dataclass, field

import numpy as np
from scipy import linalg as sla

from ..signals.types import AcquisitionConfig, EegTrial
from .augment import AugmentedTrial, augment_delays
from .projection import ProjectionMatrix, class_projection

_REG_SCALE = 1e-6


@dataclass(frozen=True)
class TdcaConfig:
    """Decoder hyperparameters; ``class_freqs_hz`` fixes the class order."""

    class_freqs_hz: tuple[float, ...]
    delay_count: int = 2
    n_harmonics: int = 5
    subspace_dim: int = 8

    def __post_init__(self):
        if self.delay_count < 0:
            raise ValueError("delay_count must be >= 0")
        if self.n_harmonics < 1:
            raise ValueError("n_harmonics must be >= 1")
        if self.subspace_dim < 1:
            raise ValueError("subspace_dim must be >= 1")
        if len(set(self.class_freqs_hz)) != len(self.class_freqs_hz):
            raise ValueError("class frequencies must be pairwise distinct")

    @property
    def n_classes(self) -> int:
        return len(self.class_freqs_hz)


@dataclass
class CalibrationSet:
    """Labelled trials sharing one acquisition config, >= 2 per class."""

    trials: list[EegTrial]

    def __post_init__(self):
        if not self.trials:
            raise ValueError("calibration set is empty")
        cfg = self.trials[0].config
        counts: dict[int, int] = {}
        for t in self.trials:
            if t.true_class is None:
                raise ValueError("calibration trials must carry true_class")
            if t.config != cfg:
                raise ValueError("calibration trials must share one acquisition config")
            counts[t.true_class] = counts.get(t.true_class, 0) + 1
        low = [c for c, n in counts.items() if n < 2]
        if low:
            raise ValueError(f"classes with fewer than 2 trials: {sorted(low)}")
        self._counts = counts

    @property
    def config(self) -> AcquisitionConfig:
        return self.trials[0].config

    @property
    def n_trials(self) -> int:
        return len(self.trials)

    @property
    def n_blocks(self) -> int:
        return min(self._counts.values())

    @property
    def class_counts(self) -> dict[int, int]:
        return dict(self._counts)


@dataclass
class FitDiagnostics:
    """Scatter matrices and solver details kept for audits and oracles."""

    between_scatter: np.ndarray
    within_scatter: np.ndarray
    eigenvalues: np.ndarray
    regularization: float
    within_scatter_singular: bool


@dataclass
class TdcaModel:
    """Calibrated decoder: spatial filters, class templates, class projectors."""

    config: TdcaConfig
    acquisition: AcquisitionConfig
    filters: np.ndarray  # ((l+1)*n_ch, subspace_dim), descending eigenvalue order
    templates: list[np.ndarray]  # per class, ((l+1)*n_ch, 2*n_p)
    projections: list[ProjectionMatrix]
    diagnostics: FitDiagnostics | None = None
    _template_feats: list[np.ndarray] = field(default_factory=list, repr=False)

    def __post_init__(self):
        if not self._template_feats:
            self._template_feats = [self.filters.T @ t for t in self.templates]

    @property
    def n_classes(self) -> int:
        return self.config.n_classes


@dataclass(frozen=True)
class CorrelationVector:
    """Per-class correlation scores; flagged classes had zero-variance features."""

    scores: np.ndarray
    zero_variance: tuple[int, ...] = ()


@dataclass(frozen=True)
class TargetDecision:
    scores: np.ndarray
    decided_class: int
    decided_freq_hz: float
    margin: float
    tie: bool
    zero_variance: tuple[int, ...] = ()


def _augment(trial: EegTrial, delay_count: int) -> AugmentedTrial:
    return augment_delays(trial, delay_count)


def fit(calib: CalibrationSet, cfg: TdcaConfig) -> TdcaModel:
    """Calibrate a decoder from labelled trials.

    Between-class scatter uses class means minus the grand mean of the
    delay-augmented trials, each deviation projection-augmented with its own
    class's projector; within-class scatter uses per-trial deviations from
    the class mean, likewise projection-augmented. This construction keeps
    the plain scatter form and the projector direct-sum form of the
    objective exactly equal, which the acceptance suite checks.
    """
    acq = calib.config
    n_ch = acq.n_channels
    l = cfg.delay_count
    dim = (l + 1) * n_ch
    if cfg.subspace_dim > dim:
        raise ValueError(
            f"subspace_dim {cfg.subspace_dim} exceeds augmented dimension {dim}"
        )
    for t in calib.trials:
        if not 0 <= t.true_class < cfg.n_classes:
            raise ValueError(
                f"trial class {t.true_class} outside configured classes"
            )

    projections = [
        class_projection(f, acq, cfg.n_harmonics, class_idx=i)
        for i, f in enumerate(cfg.class_freqs_hz)
    ]

    stacked = [_augment(t, l).values for t in calib.trials]
    labels = [t.true_class for t in calib.trials]
    grand = np.mean(stacked, axis=0)
    class_means: dict[int, np.ndarray] = {}
    for c in range(cfg.n_classes):
        members = [x for x, y in zip(stacked, labels) if y == c]
        if members:
            class_means[c] = np.mean(members, axis=0)

    present = sorted(class_means)
    n_c = len(present)
    n_t = calib.n_trials

    hb_blocks = []
    for c in present:
        q = projections[c].q_factor
        dev = class_means[c] - grand
        hb_blocks.append(np.concatenate([dev, (dev @ q) @ q.T], axis=1))
    hb = np.concatenate(hb_blocks, axis=1) / np.sqrt(n_c)

    hw_blocks = []
    for x, y in zip(stacked, labels):
        q = projections[y].q_factor
        dev = x - class_means[y]
        hw_blocks.append(np.concatenate([dev, (dev @ q) @ q.T], axis=1))
    hw = np.concatenate(hw_blocks, axis=1) / np.sqrt(n_t)

    s_b = hb @ hb.T
    s_w = hw @ hw.T

    eps = _REG_SCALE * np.trace(s_w) / dim
    if eps <= 0.0:
        eps = _REG_SCALE
    s_w_reg = s_w + eps * np.eye(dim)
    min_eig = float(sla.eigvalsh(s_w)[0])
    singular = min_eig <= dim * np.finfo(float).eps * max(1.0, float(np.trace(s_w)))

    eigvals, eigvecs = sla.eigh(s_b, s_w_reg)
    order = np.argsort(eigvals)[::-1]
    eigvals = eigvals[order]
    w = eigvecs[:, order[: cfg.subspace_dim]]
    # Deterministic sign: largest-magnitude entry of each filter positive.
    for k in range(w.shape[1]):
        j = int(np.argmax(np.abs(w[:, k])))
        if w[j, k] < 0:
            w[:, k] = -w[:, k]

    templates = []
    for c in range(cfg.n_classes):
        mean = class_means.get(c)
        if mean is None:
            # No trials for this class: classifier still needs a slot.
            mean = np.zeros((dim, acq.epoch_len_samples))
        q = projections[c].q_factor
        templates.append(np.concatenate([mean, (mean @ q) @ q.T], axis=1))

    diagnostics = FitDiagnostics(
        between_scatter=s_b,
        within_scatter=s_w,
        eigenvalues=eigvals,
        regularization=float(eps),
        within_scatter_singular=bool(singular),
    )
    return TdcaModel(
        config=cfg,
        acquisition=acq,
        filters=w,
        templates=templates,
        projections=projections,
        diagnostics=diagnostics,
    )


def _pearson(u: np.ndarray, v: np.ndarray) -> tuple[float, bool]:
    u = u - u.mean()
    v = v - v.mean()
    su = float(np.linalg.norm(u))
    sv = float(np.linalg.norm(v))
    if su == 0.0 or sv == 0.0:
        return 0.0, True
    return float(u @ v / (su * sv)), False


def score(model: TdcaModel, trial: EegTrial) -> CorrelationVector:
    """Correlate the trial's filtered features against every class template."""
    if trial.config != model.acquisition:
        raise ValueError("trial acquisition config does not match the model")
    aug = _augment(trial, model.config.delay_count)
    filtered = model.filters.T @ aug.values  # (k, n_p)
    scores = np.empty(model.n_classes)
    flagged = []
    for c in range(model.n_classes):
        q = model.projections[c].q_factor
        feats = np.concatenate([filtered, (filtered @ q) @ q.T], axis=1)
        rho, flat = _pearson(feats.ravel(), model._template_feats[c].ravel())
        scores[c] = rho
        if flat:
            flagged.append(c)
    return CorrelationVector(scores=scores, zero_variance=tuple(flagged))


def decide(
    scores: np.ndarray,
    class_freqs_hz: tuple[float, ...],
    zero_variance: tuple[int, ...] = (),
) -> TargetDecision:
    """Argmax decision with deterministic tie-breaking toward the lowest index."""
    scores = np.asarray(scores, dtype=float)
    decided = int(np.argmax(scores))
    top = float(scores[decided])
    if len(scores) > 1:
        runner = float(np.sort(scores)[-2])
        margin = top - runner
        tie = margin == 0.0
    else:
        margin = 1.0
        tie = False
    return TargetDecision(
        scores=scores,
        decided_class=decided,
        decided_freq_hz=class_freqs_hz[decided],
        margin=margin,
        tie=tie,
        zero_variance=zero_variance,
    )


def classify(model: TdcaModel, trial: EegTrial) -> TargetDecision:
    """Pick the class with the largest correlation; ties go to the lowest index."""
    vec = score(model, trial)
    return decide(vec.scores, model.config.class_freqs_hz, vec.zero_variance)
