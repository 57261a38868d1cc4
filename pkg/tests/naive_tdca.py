"""Deliberately naive, loop-based reference path for decoder verification.

Everything here is written with explicit index loops and Gram-Schmidt
orthonormalization, independent of the package's vectorized implementation.
Only the fitted filters and templates are taken from the model under test.
"""

import math

import numpy as np


def naive_reference(freq_hz, sample_rate_hz, n_samples, n_harmonics):
    y = np.zeros((n_samples, 2 * n_harmonics))
    for k in range(n_samples):
        t = (k + 1) / sample_rate_hz
        for h in range(1, n_harmonics + 1):
            y[k, 2 * h - 2] = math.sin(2 * math.pi * h * freq_hz * t)
            y[k, 2 * h - 1] = math.cos(2 * math.pi * h * freq_hz * t)
    return y


def gram_schmidt(columns):
    """Modified Gram-Schmidt orthonormalization of the columns of a matrix."""
    a = np.array(columns, dtype=float)
    n_rows, n_cols = a.shape
    q = np.zeros_like(a)
    for j in range(n_cols):
        v = a[:, j].copy()
        for i in range(j):
            v -= (q[:, i] @ v) * q[:, i]
        # second sweep for numerical orthogonality
        for i in range(j):
            v -= (q[:, i] @ v) * q[:, i]
        norm = math.sqrt(float(v @ v))
        q[:, j] = v / norm
    return q


def naive_projector(freq_hz, sample_rate_hz, n_samples, n_harmonics):
    y = naive_reference(freq_hz, sample_rate_hz, n_samples, n_harmonics)
    q = gram_schmidt(y)
    p = np.zeros((n_samples, n_samples))
    for i in range(n_samples):
        for j in range(n_samples):
            acc = 0.0
            for k in range(q.shape[1]):
                acc += q[i, k] * q[j, k]
            p[i, j] = acc
    return p


def naive_augment(x, delay_count):
    n_ch, n_p = x.shape
    out = np.zeros(((delay_count + 1) * n_ch, n_p))
    for d in range(delay_count + 1):
        for c in range(n_ch):
            for s in range(n_p):
                src = s + d
                out[d * n_ch + c, s] = x[c, src] if src < n_p else 0.0
    return out


def naive_pearson(u, v):
    n = len(u)
    mu = sum(u) / n
    mv = sum(v) / n
    num = 0.0
    du = 0.0
    dv = 0.0
    for a, b in zip(u, v):
        num += (a - mu) * (b - mv)
        du += (a - mu) ** 2
        dv += (b - mv) ** 2
    if du == 0.0 or dv == 0.0:
        return 0.0
    return num / math.sqrt(du * dv)


def naive_scores(filters, templates, class_freqs, n_harmonics, trial_samples, fs):
    """Per-class correlations for one trial, recomputing projections from scratch."""
    delay_count = filters.shape[0] // trial_samples.shape[0] - 1
    n_p = trial_samples.shape[1]
    aug = naive_augment(trial_samples, delay_count)
    filtered = filters.T @ aug
    rhos = []
    for c, f in enumerate(class_freqs):
        p = naive_projector(f, fs, n_p, n_harmonics)
        feats = np.concatenate([filtered, filtered @ p], axis=1)
        tmpl = filters.T @ templates[c]
        rhos.append(naive_pearson(feats.ravel().tolist(), tmpl.ravel().tolist()))
    return np.array(rhos)
