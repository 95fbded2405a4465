"""Explicit telegraph time-steppers for the four despeckling models.

All models share the damped second-order-in-time update

    (I+ - 2I + I-) / dt^2 + gamma (I+ - I) / dt = RHS,

solved for I+ pointwise (the damping term is implicit, so large gamma is
harmless).  They differ only in the RHS:

    TDM     div(C1*C3 grad I)
    TDFM    -Lap(C1*C2 Lap I) - S
    MODEL1  A div(C1*C3 grad I) - (1-A) Lap(C2 Lap I) - S
    MODEL2  fourth-order equation: -Lap(C1*C2 Lap I) - S
            second-order companion: div(C1*C3 grad I)

with S the fidelity source of :func:`despeckle.stencils.fidelity_source`.
MODEL2 alternates its two equations every iteration; the fourth-order
sub-stepper keeps its own two-level time history while the second-order
one is re-seeded from the fourth-order output (see
:func:`_model2_iteration` for why).

Runs start from I0 = f with zero initial velocity (I(-1) = I0) and stop
when the squared relative change ||I+ - I||^2 / ||I||^2 drops to ``tol``
or the iteration cap is hit.
"""

from __future__ import annotations

from dataclasses import dataclass, field, replace
from typing import Optional

import numpy as np

from .coefficients import CoeffFields, CoeffParams, coeff_field
from .grid import ColorImage, ImageGrid, as_array, same_kind
from .metrics import SsimConfig, mssim, psnr
from .models import Model
from .stencils import GridSpacing, fd2_div, fd4, fidelity_source

COUPLE_ORDERS = ("fourth-first", "second-first")


class SolverDivergenceError(RuntimeError):
    """The iterate picked up NaN/Inf values; names the offending iteration."""

    def __init__(self, iteration: int) -> None:
        super().__init__(
            f"solver diverged: non-finite values at iteration {iteration} "
            "(reduce dt or increase gamma)"
        )
        self.iteration = iteration


@dataclass
class SolverParams:
    """Every scalar knob of a denoising run.

    ``dt=None`` picks the model's stable default: 0.1 for the second-order
    dominant schemes (TDM, MODEL1 with A >= 0.5), 0.05 where the explicit
    fourth-order stencil limits the step (TDFM, MODEL2, MODEL1 with A < 0.5).
    ``weight_a`` only matters for MODEL1; ``lam`` is ignored by TDM, whose
    equation carries no fidelity term.
    """

    model: Model
    alpha: float = 1.0
    k: float = 2.0
    gamma: float = 5.0
    lam: float = 0.1
    weight_a: float = 0.7
    dt: Optional[float] = None
    spacing: GridSpacing = field(default_factory=GridSpacing)
    sigma: float = 1.0
    eps: float = 1e-6
    max_iters: int = 500
    tol: float = 1e-4
    fidelity: bool = True
    couple_order: str = "fourth-first"
    smooth_once: bool = False

    def __post_init__(self) -> None:
        self.model = Model.parse(self.model)
        if not 0.0 <= self.weight_a <= 1.0:
            raise ValueError(f"weight A must lie in [0, 1], got {self.weight_a}")
        if self.dt is not None and not self.dt > 0:
            raise ValueError(f"dt must be positive, got {self.dt}")
        if not (self.sigma > 0 and self.eps > 0 and self.tol > 0):
            raise ValueError("sigma, eps and tol must be positive")
        if self.gamma < 0 or self.lam < 0:
            raise ValueError("gamma and lambda must be nonnegative")
        if self.max_iters < 1:
            raise ValueError(f"max_iters must be >= 1, got {self.max_iters}")
        if self.couple_order not in COUPLE_ORDERS:
            raise ValueError(
                f"couple_order must be one of {COUPLE_ORDERS}, got {self.couple_order!r}"
            )

    def resolved_dt(self) -> float:
        if self.dt is not None:
            return self.dt
        if self.model is Model.TDM:
            return 0.1
        if self.model is Model.MODEL1 and self.weight_a >= 0.5:
            return 0.1
        return 0.05

    def coeff_params(self) -> CoeffParams:
        return CoeffParams(alpha=self.alpha, k=self.k)

    def with_model(self, model) -> "SolverParams":
        return replace(self, model=Model.parse(model))


@dataclass
class RunTrace:
    """Per-iteration record of a solver run."""

    iterations: int
    rel_changes: list[float]
    stop_reason: str  # "converged" | "max_iters"
    psnr_per_iter: Optional[list[float]] = None
    mssim_per_iter: Optional[list[float]] = None


def telegraph_step(I_n, I_nm1, rhs, dt: float, gamma: float):
    """One damped second-order time step, damping handled implicitly."""
    a = as_array(I_n)
    b = as_array(I_nm1)
    r = as_array(rhs)
    if a.shape != b.shape or a.shape != r.shape:
        raise ValueError(
            f"shape mismatch: I_n {a.shape}, I_nm1 {b.shape}, rhs {r.shape}"
        )
    inv_dt2 = 1.0 / (dt * dt)
    g_dt = gamma / dt
    new = (r + (2.0 * a - b) * inv_dt2 + g_dt * a) / (inv_dt2 + g_dt)
    return same_kind(I_n, new)


def assemble_rhs(model, I_n, f, params: SolverParams):
    """The model's main RHS evaluated at the current iterate.

    For MODEL2 this is the fourth-order equation's RHS; the second-order
    companion is produced by :func:`model2_second_rhs` and sequenced by
    :func:`run_solver`.
    """
    model = Model.parse(model)
    indicator = f if params.smooth_once else I_n
    fields = coeff_field(
        model, as_array(indicator), params.coeff_params(), params.sigma, params.spacing
    )
    rhs = _main_rhs(model, as_array(I_n), as_array(f), fields, params)
    return same_kind(I_n, rhs)


def model2_second_rhs(I_n, params: SolverParams, indicator=None):
    """MODEL2's second-order companion RHS, div(C1*C3 grad I); no fidelity."""
    src = as_array(I_n if indicator is None else indicator)
    fields = coeff_field(
        Model.MODEL2, src, params.coeff_params(), params.sigma, params.spacing
    )
    return same_kind(I_n, fd2_div(fields.grad, as_array(I_n), params.spacing))


def _main_rhs(
    model: Model, I: np.ndarray, f: np.ndarray, fields: CoeffFields, params: SolverParams
) -> np.ndarray:
    h = params.spacing
    if model is Model.TDM:
        return fd2_div(fields.grad, I, h)
    S = fidelity_source(I, f, params.lam, params.eps) if params.fidelity else 0.0
    if model in (Model.TDFM, Model.MODEL2):
        return -fd4(fields.lap, I, h) - S
    # MODEL1: affine blend of the second- and fourth-order terms.
    A = params.weight_a
    return A * fd2_div(fields.grad, I, h) - (1.0 - A) * fd4(fields.lap, I, h) - S


def run_solver(
    f: ImageGrid, params: SolverParams, reference: Optional[ImageGrid] = None
) -> tuple[ImageGrid, RunTrace]:
    """Despeckle ``f``; returns the restored image and the run trace.

    When ``reference`` is given, PSNR and MSSIM against it are recorded at
    every iteration (which costs roughly as much as the iteration itself --
    omit the reference for production runs and evaluate at the end).

    The iterate is never clamped during the run; only the returned image is
    clipped to [0, range_max].
    """
    grid = f if isinstance(f, ImageGrid) else ImageGrid(f)
    if grid.height < 3 or grid.width < 3:
        raise ValueError(f"solver needs at least 3x3 images, got {grid.shape}")
    if np.any(grid.data < 0):
        raise ValueError("solver input must be nonnegative")

    model = params.model
    dt = params.resolved_dt()
    gamma = params.gamma
    obs = grid.data

    cached = None
    if params.smooth_once:
        cached = coeff_field(model, obs, params.coeff_params(), params.sigma, params.spacing)

    ssim_cfg = None
    if reference is not None:
        ssim_cfg = SsimConfig(dynamic_range=reference.range_max)

    I = np.array(obs)
    prev = I.copy()  # zero initial velocity: I(-1) = I(0)
    if model is Model.MODEL2:
        hist4 = I.copy()

    rel_changes: list[float] = []
    psnrs: list[float] = []
    mssims: list[float] = []
    stop_reason = "max_iters"

    for n in range(1, params.max_iters + 1):
        if model is Model.MODEL2:
            new, fourth_input = _model2_iteration(I, hist4, obs, cached, params, dt, gamma)
            hist4 = fourth_input
        else:
            fields = cached or coeff_field(
                model, I, params.coeff_params(), params.sigma, params.spacing
            )
            rhs = _main_rhs(model, I, obs, fields, params)
            new = telegraph_step(I, prev, rhs, dt, gamma)
            prev = I

        if not np.all(np.isfinite(new)):
            raise SolverDivergenceError(n)

        diff = new - I
        with np.errstate(over="ignore"):
            num = float(np.sum(diff * diff))
            den = float(np.sum(I * I))
        rel = num / den if den > 0.0 else (0.0 if num == 0.0 else np.inf)
        rel_changes.append(rel)

        if reference is not None:
            restored = grid.like(np.clip(new, 0.0, grid.range_max))
            psnrs.append(psnr(reference, restored))
            mssims.append(mssim(reference, restored, ssim_cfg))

        I = new
        if rel <= params.tol:
            stop_reason = "converged"
            break

    trace = RunTrace(
        iterations=len(rel_changes),
        rel_changes=rel_changes,
        stop_reason=stop_reason,
        psnr_per_iter=psnrs if reference is not None else None,
        mssim_per_iter=mssims if reference is not None else None,
    )
    return grid.like(np.clip(I, 0.0, grid.range_max)), trace


def _model2_iteration(I, hist4, obs, cached, params, dt, gamma):
    """One MODEL2 outer iteration: both sub-steps, in the configured order.

    The fourth-order sub-stepper keeps a genuine two-level history of the
    iterates it stepped from.  The second-order sub-stepper's history is
    re-seeded from the fourth-order output each outer iteration, i.e. it
    steps from rest; letting it carry momentum across the alternation is
    unstable (cross-stage eigenvalues exceed 1 for weak damping).
    Coefficients are evaluated on each sub-step's own input.

    Returns ``(new_iterate, fourth_stage_input)``; the caller stores the
    latter as the fourth-order history for the next iteration.
    """

    def fields_on(src):
        return cached or coeff_field(
            Model.MODEL2, src, params.coeff_params(), params.sigma, params.spacing
        )

    def fourth_step(src, hist):
        flds = fields_on(src)
        S = fidelity_source(src, obs, params.lam, params.eps) if params.fidelity else 0.0
        rhs = -fd4(flds.lap, src, params.spacing) - S
        return telegraph_step(src, hist, rhs, dt, gamma)

    def second_step(src):
        flds = fields_on(src)
        rhs = fd2_div(flds.grad, src, params.spacing)
        return telegraph_step(src, src, rhs, dt, gamma)

    if params.couple_order == "fourth-first":
        mid = fourth_step(I, hist4)
        return second_step(mid), I
    mid = second_step(I)
    return fourth_step(mid, hist4), mid


def denoise_color(image: ColorImage, params: SolverParams) -> ColorImage:
    """Run the solver independently on each RGB channel and merge."""
    restored = [run_solver(chan, params)[0] for chan in image.channels()]
    return ColorImage(*restored)
