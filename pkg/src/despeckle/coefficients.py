"""Adaptive diffusion-coefficient fields.

Three pointwise indicators, all evaluated on the Gaussian-smoothed image:

* ``c1_gray``       2|v|^alpha / (|v|^alpha + M^alpha) with M = max|v|;
                    in [0, 1], equal to 1 at the brightest pixel, 0 at
                    black pixels.  Suppresses diffusion in dark regions.
* ``c2_laplacian``  1 / (1 + (|Lap v| / k)^2); in (0, 1], small near
                    Laplacian edges.
* ``c3_gradient``   the same falloff driven by |grad v|.

Each model multiplies a subset of these into the field(s) its spatial
operators see; :func:`coeff_field` returns that per-model combination.

Note on parameter names: ``k`` is the edge threshold (in intensity units),
often written beta in the diffusion literature; ``alpha`` is the intensity
sensitivity exponent.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import NamedTuple, Optional

import numpy as np

from .grid import as_array, same_kind
from .models import Model
from .smoothing import smooth
from .stencils import GridSpacing, gradient_magnitude, laplacian


@dataclass(frozen=True)
class CoeffParams:
    """Knobs of the coefficient fields."""

    alpha: float = 1.0
    k: float = 2.0
    eps_guard: float = 1e-12

    def __post_init__(self) -> None:
        if not (self.alpha > 0 and self.k > 0 and self.eps_guard > 0):
            raise ValueError(f"alpha, k and eps_guard must be positive, got {self}")


class CoeffFields(NamedTuple):
    """Per-model coefficient fields.

    ``grad`` multiplies the gradient in the second-order divergence term,
    ``lap`` multiplies the Laplacian in the fourth-order term; a model that
    lacks one of the terms gets None there.
    """

    grad: Optional[object]
    lap: Optional[object]


def c1_gray(smoothed, alpha: float):
    """Grayscale indicator; all zeros for an all-zero image (defined limit)."""
    v = np.abs(as_array(smoothed))
    m = float(v.max())
    if m == 0.0:
        return same_kind(smoothed, np.zeros_like(v))
    p = v**alpha
    return same_kind(smoothed, 2.0 * p / (p + m**alpha))


def c2_laplacian(lap_smoothed, k: float):
    """Laplacian-driven falloff 1 / (1 + (|x|/k)^2)."""
    if not k > 0:
        raise ValueError(f"k must be positive, got {k}")
    x = as_array(lap_smoothed)
    with np.errstate(over="ignore"):  # huge |x| legitimately drives the field to 0
        return same_kind(lap_smoothed, 1.0 / (1.0 + (x / k) ** 2))


def c3_gradient(grad_mag_smoothed, k: float):
    """Gradient-driven falloff 1 / (1 + (|x|/k)^2)."""
    return c2_laplacian(grad_mag_smoothed, k)


def coeff_field(
    model,
    current,
    params: CoeffParams,
    sigma: float,
    spacing: GridSpacing = GridSpacing(),
) -> CoeffFields:
    """The coefficient field(s) a model needs, evaluated on ``current``.

    The image is first smoothed with the given sigma; indicators are then
    combined per model:

        TDM     grad = C1*C3
        TDFM    lap  = C1*C2
        MODEL1  grad = C1*C3,  lap = C2
        MODEL2  grad = C1*C3 (second-order equation),
                lap  = C1*C2 (fourth-order equation)
    """
    model = Model.parse(model)
    v = smooth(as_array(current), sigma)
    c1 = c1_gray(v, params.alpha)

    grad = lap = None
    if model in (Model.TDM, Model.MODEL1, Model.MODEL2):
        grad = c1 * c3_gradient(gradient_magnitude(v, spacing), params.k)
    if model in (Model.TDFM, Model.MODEL1, Model.MODEL2):
        c2 = c2_laplacian(laplacian(v, spacing), params.k)
        lap = c2 if model is Model.MODEL1 else c1 * c2

    wrap = lambda arr: None if arr is None else same_kind(current, arr)
    return CoeffFields(wrap(grad), wrap(lap))
