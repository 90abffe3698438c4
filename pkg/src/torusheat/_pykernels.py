"""Pure-Python (numpy) lattice sums; fallback for the compiled ``_ckernels``.

Both backends share one signature.  The Gram form is passed as its three
entries ``g11, g12, g22``; ``xs, ys`` are fractional coordinates (not reduced);
``radius`` bounds the summation index (spectral) or the shifted index
``n + u`` (periodized) in Euclidean norm; terms whose exponent exceeds
``log_cut`` are dropped.
"""

import math

import numpy as np

_BATCH = 2048


def spectral_sum(g11, g12, g22, t, xs, ys, radius, log_cut):
    """sum_n exp(-pi t n'Gn) cos(2 pi (n1 y - n2 x)) over the ball |n| <= radius."""
    xs = np.ascontiguousarray(xs, dtype=float)
    ys = np.ascontiguousarray(ys, dtype=float)
    nmax = int(math.floor(radius))
    idx = np.arange(-nmax, nmax + 1)
    k, l = np.meshgrid(idx, idx, indexing="ij")
    k = k.ravel()
    l = l.ravel()
    # half-plane; the (n, -n) pair contributes 2 cos
    half = (k > 0) | ((k == 0) & (l > 0))
    expo = math.pi * t * (g11 * k * k + 2.0 * g12 * k * l + g22 * l * l)
    keep = half & (k * k + l * l <= radius * radius) & (expo <= log_cut)
    k = k[keep].astype(float)
    l = l[keep].astype(float)
    w = np.exp(-expo[keep])
    out = np.empty(xs.shape[0])
    for s in range(0, xs.shape[0], _BATCH):
        x = xs[s : s + _BATCH, None]
        y = ys[s : s + _BATCH, None]
        out[s : s + _BATCH] = 1.0 + 2.0 * (np.cos(2.0 * math.pi * (k * y - l * x)) @ w)
    return out


def periodized_sum(g11, g12, g22, t, xs, ys, radius, log_cut):
    """(1/t) sum_n exp(-(pi/t) (n+u)'G(n+u)) over |n + u| <= radius."""
    xs = np.ascontiguousarray(xs, dtype=float)
    ys = np.ascontiguousarray(ys, dtype=float)
    out = np.empty(xs.shape[0])
    c = math.pi / t
    for s in range(0, xs.shape[0], _BATCH):
        x = xs[s : s + _BATCH]
        y = ys[s : s + _BATCH]
        k = np.arange(math.floor(-x.max() - radius), math.ceil(-x.min() + radius) + 1)
        l = np.arange(math.floor(-y.max() - radius), math.ceil(-y.min() + radius) + 1)
        a = x[:, None, None] + k[None, :, None]
        b = y[:, None, None] + l[None, None, :]
        expo = c * (g11 * a * a + 2.0 * g12 * a * b + g22 * b * b)
        keep = (a * a + b * b <= radius * radius) & (expo <= log_cut)
        w = np.where(keep, np.exp(-np.where(keep, expo, 0.0)), 0.0)
        out[s : s + _BATCH] = w.reshape(w.shape[0], -1).sum(axis=1) / t
    return out
