"""L-look multiplicative speckle synthesis.

A speckled observation is ``clean * eta`` with ``eta`` drawn i.i.d. from
Gamma(shape=L, scale=1/L), the unit-mean convention: E[eta] = 1 and
Var[eta] = 1/L, so larger look counts mean weaker noise.

Gamma variates come from the Marsaglia-Tsang squeeze method, run on top of
the package's xoshiro256** lanes (see :mod:`despeckle.rng`).  Each attempt
consumes a fixed number of uniforms from its lane -- three for shape >= 1
(two for the Box-Muller normal, one for the acceptance test) plus a fourth,
used only on acceptance, when shape < 1 (the u^(1/shape) boost).  Fixed
consumption keeps the streams identical whether the lanes are stepped one
at a time or all together.

Images are speckled row by row: row ``i`` uses the sub-stream seeded with
``derive_seed(seed, i)``; color channels first split the seed per channel
with ``derive_seed(seed, channel)``.  Identical NoiseSpec therefore means a
bit-for-bit identical noisy image, independent of how rows are scheduled.
"""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from .grid import ColorImage, ImageGrid
from .rng import Xoshiro256StarStar, derive_seed

_SQUEEZE = 0.0331


@dataclass(frozen=True)
class NoiseSpec:
    """Number of looks L plus the seed of the speckle field."""

    looks: int
    seed: int

    def __post_init__(self) -> None:
        if self.looks < 1:
            raise ValueError(f"looks must be >= 1, got {self.looks}")
        object.__setattr__(self, "seed", int(self.seed) & ((1 << 64) - 1))


def sample_gamma(shape: float, scale: float, rng: Xoshiro256StarStar) -> float:
    """One Gamma(shape, scale) draw from a single-lane generator."""
    if rng.lanes != 1:
        raise ValueError("sample_gamma expects a single-lane generator")
    return float(_gamma_lanes(rng, shape, scale, 1)[0, 0])


def gamma_field(shape: float, scale: float, seed: int, size: tuple[int, int]) -> np.ndarray:
    """A (rows, cols) array of Gamma(shape, scale) draws, one lane per row.

    Row ``i`` is the sub-stream ``derive_seed(seed, i)``; within a row,
    draws are accepted in column order.
    """
    rows, cols = size
    if rows < 1 or cols < 1:
        raise ValueError(f"field size must be positive, got {size}")
    lane_seeds = [derive_seed(seed, i) for i in range(rows)]
    return _gamma_lanes(Xoshiro256StarStar(lane_seeds), shape, scale, cols)


def apply_speckle(clean: ImageGrid, spec: NoiseSpec) -> ImageGrid:
    """Multiply a clean image by a seeded L-look gamma speckle field."""
    if np.any(clean.data < 0):
        raise ValueError("speckle input must be nonnegative")
    eta = gamma_field(float(spec.looks), 1.0 / spec.looks, spec.seed, clean.shape)
    return clean.like(clean.data * eta)


def apply_speckle_color(clean: ColorImage, spec: NoiseSpec) -> ColorImage:
    """Independent per-channel speckle; channel c uses derive_seed(seed, c)."""
    noisy = [
        apply_speckle(chan, NoiseSpec(spec.looks, derive_seed(spec.seed, c)))
        for c, chan in enumerate(clean.channels())
    ]
    return ColorImage(*noisy)


def _gamma_lanes(
    rng: Xoshiro256StarStar, shape: float, scale: float, quota: int
) -> np.ndarray:
    """Fill ``quota`` Gamma(shape, scale) draws per lane; returns (lanes, quota).

    Marsaglia-Tsang: with d = a - 1/3 and c = 1/sqrt(9d), propose
    v = (1 + c*x)^3 for standard-normal x and accept d*v when
    u < 1 - 0.0331 x^4 (squeeze) or log u < x^2/2 + d(1 - v + log v).
    For shape < 1 the draw targets shape+1 and is boosted by u^(1/shape).
    """
    if not (shape > 0) or not (scale > 0):
        raise ValueError(f"shape and scale must be positive, got {shape}, {scale}")

    boost = shape < 1.0
    a = shape + 1.0 if boost else shape
    d = a - 1.0 / 3.0
    c = 1.0 / np.sqrt(9.0 * d)

    lanes = rng.lanes
    out = np.empty((lanes, quota), dtype=np.float64)
    fill = np.zeros(lanes, dtype=np.intp)

    while True:
        u1 = rng.next_uniform()
        u2 = rng.next_uniform()
        x = np.sqrt(-2.0 * np.log(u1)) * np.cos(2.0 * np.pi * u2)
        v = (1.0 + c * x) ** 3
        u = rng.next_uniform()
        with np.errstate(invalid="ignore", divide="ignore"):
            squeeze = u < 1.0 - _SQUEEZE * x**4
            logtest = np.log(u) < 0.5 * x**2 + d * (1.0 - v + np.log(v))
        accept = (v > 0.0) & (squeeze | logtest)
        value = d * v * scale
        if boost:
            u4 = rng.next_uniform()
            value = value * u4 ** (1.0 / shape)

        take = accept & (fill < quota)
        idx = np.nonzero(take)[0]
        if idx.size:
            out[idx, fill[idx]] = value[idx]
            fill[idx] += 1
            if fill.min() >= quota:
                return out
