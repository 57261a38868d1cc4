"""Versioned JSON persistence for calibrated decoders."""

from __future__ import annotations

import json

import numpy as np

from ..signals.types import AcquisitionConfig
from .model import TdcaConfig, TdcaModel
from .projection import ProjectionMatrix

MODEL_SCHEMA_VERSION = 1


def model_to_dict(model: TdcaModel) -> dict:
    return {
        "schema_version": MODEL_SCHEMA_VERSION,
        "config": {
            "class_freqs_hz": list(model.config.class_freqs_hz),
            "delay_count": model.config.delay_count,
            "n_harmonics": model.config.n_harmonics,
            "subspace_dim": model.config.subspace_dim,
        },
        "acquisition": {
            "n_channels": model.acquisition.n_channels,
            "sample_rate_hz": model.acquisition.sample_rate_hz,
            "epoch_len_samples": model.acquisition.epoch_len_samples,
        },
        "filters": model.filters.tolist(),
        "templates": [t.tolist() for t in model.templates],
        "projection_q": [p.q_factor.tolist() for p in model.projections],
    }


def model_from_dict(d: dict) -> TdcaModel:
    if d.get("schema_version") != MODEL_SCHEMA_VERSION:
        raise ValueError(f"unsupported model schema_version {d.get('schema_version')}")
    cfg = TdcaConfig(
        class_freqs_hz=tuple(d["config"]["class_freqs_hz"]),
        delay_count=d["config"]["delay_count"],
        n_harmonics=d["config"]["n_harmonics"],
        subspace_dim=d["config"]["subspace_dim"],
    )
    acq = AcquisitionConfig(**d["acquisition"])
    projections = [
        ProjectionMatrix(
            class_idx=i,
            stimulus_freq_hz=cfg.class_freqs_hz[i],
            n_harmonics=cfg.n_harmonics,
            q_factor=np.asarray(q, dtype=float),
        )
        for i, q in enumerate(d["projection_q"])
    ]
    return TdcaModel(
        config=cfg,
        acquisition=acq,
        filters=np.asarray(d["filters"], dtype=float),
        templates=[np.asarray(t, dtype=float) for t in d["templates"]],
        projections=projections,
        diagnostics=None,
    )


def save_model(model: TdcaModel, path: str) -> None:
    with open(path, "w", encoding="utf-8") as f:
        json.dump(model_to_dict(model), f)


def load_model(path: str) -> TdcaModel:
    with open(path, "r", encoding="utf-8") as f:
        return model_from_dict(json.load(f))
