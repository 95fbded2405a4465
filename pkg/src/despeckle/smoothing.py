"""Gaussian pre-smoothing for the diffusion indicators.

Every adaptive coefficient in the solvers is evaluated on a regularised
image, obtained by separable convolution with a sampled, normalised
Gaussian.  Boundaries use replicate extension, the discrete counterpart of
the solvers' zero-flux condition, so constant images are exact fixed
points.
"""

from __future__ import annotations

import math
from dataclasses import dataclass

import numpy as np

from .grid import as_array, same_kind


@dataclass(frozen=True, eq=False)
class GaussianKernel:
    """Normalised 1-D Gaussian taps over offsets -radius..radius."""

    sigma: float
    radius: int
    weights: np.ndarray

    def __post_init__(self) -> None:
        w = np.asarray(self.weights, dtype=np.float64)
        w.setflags(write=False)
        object.__setattr__(self, "weights", w)


def gaussian_kernel(sigma: float) -> GaussianKernel:
    """Sampled Gaussian with radius ceil(4*sigma), normalised to unit sum."""
    if not sigma > 0:
        raise ValueError(f"sigma must be positive, got {sigma}")
    radius = math.ceil(4.0 * sigma)
    offsets = np.arange(-radius, radius + 1, dtype=np.float64)
    weights = np.exp(-(offsets**2) / (2.0 * sigma * sigma))
    weights /= weights.sum()
    return GaussianKernel(float(sigma), radius, weights)


def convolve_separable(image: np.ndarray, weights: np.ndarray) -> np.ndarray:
    """Convolve rows then columns with a symmetric kernel, replicate-padded."""
    out = _convolve_axis(np.asarray(image, dtype=np.float64), weights, axis=1)
    return _convolve_axis(out, weights, axis=0)


def smooth(image, sigma: float):
    """Gaussian-smoothed copy of the image (the coefficient indicator)."""
    kernel = gaussian_kernel(sigma)
    return same_kind(image, convolve_separable(as_array(image), kernel.weights))


def _convolve_axis(arr: np.ndarray, weights: np.ndarray, axis: int) -> np.ndarray:
    radius = (len(weights) - 1) // 2
    pad = [(0, 0), (0, 0)]
    pad[axis] = (radius, radius)
    padded = np.pad(arr, pad, mode="edge")
    out = np.zeros_like(arr)
    n = arr.shape[axis]
    for tap, w in enumerate(weights):
        sl = [slice(None), slice(None)]
        sl[axis] = slice(tap, tap + n)
        out += w * padded[tuple(sl)]
    return out
