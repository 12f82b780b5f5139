"""Separating instability noise from the smooth part of the error estimator.

The local error estimator of the step-doubling scheme contains both the
deterministic truncation error (smooth in space) and grid-scale jitter from
incipient numerical instability.  Smoothing the estimator in real space and
subtracting isolates the jitter: the smoother reproduces locally-polynomial
fields exactly, so only content it cannot represent survives.  The modulus
of the spectral difference is the per-mode noise measure fed to the
damping controller.
"""

from __future__ import annotations

import numpy as np

from .errors import ConfigurationError

DEFAULT_HALF_WIDTH = 2


def lagrange_weights(n_half):
    """Stencil weights of the degree-(2*n_half-1) interpolant at offset 0.

    The interpolation nodes are the offsets -n_half..-1, 1..n_half (the
    center point itself is excluded, otherwise the residual would vanish
    identically).  For n_half=2 the weights are (-1, 4, 4, -1)/6.
    """
    if n_half < 1:
        raise ConfigurationError(f"n_half must be >= 1, got {n_half}")
    offsets = [m for m in range(-n_half, n_half + 1) if m != 0]
    weights = []
    for m in offsets:
        w = 1.0
        for mp in offsets:
            if mp != m:
                w *= (0.0 - mp) / (m - mp)
        weights.append(w)
    return np.array(offsets), np.array(weights)


def smooth_1d(field, n_half=DEFAULT_HALF_WIDTH):
    """Periodic neighbor-polynomial smoothing of a 1D field.

    Each point is replaced by the value at its own node of the Lagrange
    polynomial through its 2*n_half neighbors, with periodic wraparound.
    """
    field = np.asarray(field, dtype=float)
    if field.ndim != 1:
        raise ConfigurationError("smooth_1d expects a 1D field")
    if field.shape[0] < 2 * n_half + 1:
        raise ConfigurationError(
            f"grid of {field.shape[0]} points too small for n_half={n_half}"
        )
    offsets, weights = lagrange_weights(n_half)
    out = np.zeros_like(field)
    for m, w in zip(offsets, weights):
        out += w * np.roll(field, -m)
    return out


def smooth_2d(field):
    """Four-neighbor average of a 2D periodic field.

    Uses the edge neighbors (j+-1 in each direction), not the diagonal
    ones: the diagonal stencil decouples adjacent nodes into independent
    sublattices and lets checkerboard noise through undetected.
    """
    field = np.asarray(field, dtype=float)
    if field.ndim != 2:
        raise ConfigurationError("smooth_2d expects a 2D field")
    return 0.25 * (
        np.roll(field, 1, axis=0)
        + np.roll(field, -1, axis=0)
        + np.roll(field, 1, axis=1)
        + np.roll(field, -1, axis=1)
    )


def noise_spectrum(estimator, smoothed):
    """Per-mode noise measure: modulus of the spectral difference."""
    estimator = np.asarray(estimator, dtype=float)
    smoothed = np.asarray(smoothed, dtype=float)
    if estimator.shape != smoothed.shape:
        raise ConfigurationError("estimator and smoothed field must share a grid")
    diff = estimator - smoothed
    spec = np.fft.fft(diff) if diff.ndim == 1 else np.fft.fft2(diff)
    return np.abs(spec)


def noise_measure(estimator, n_half=DEFAULT_HALF_WIDTH):
    """Smooth-and-subtract noise measure of a single error-estimator field."""
    estimator = np.asarray(estimator, dtype=float)
    smoothed = smooth_1d(estimator, n_half) if estimator.ndim == 1 else smooth_2d(estimator)
    return noise_spectrum(estimator, smoothed)


def noise_measure_max(estimator_x, estimator_y, n_half=DEFAULT_HALF_WIDTH):
    """Componentwise max of the noise measures of two estimator fields.

    Used for two-component states (interface coordinates): a mode counts as
    noisy if either component is noisy.
    """
    eps_x = noise_measure(estimator_x, n_half)
    eps_y = noise_measure(estimator_y, n_half)
    return np.maximum(eps_x, eps_y)
