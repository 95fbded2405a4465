"""Telegraph-diffusion despeckling toolkit.

A numpy library for removing multiplicative (gamma/speckle) noise from
images with damped second- and fourth-order diffusion PDEs, plus the
supporting pieces: L-look speckle synthesis, Netpbm file I/O, and the
PSNR/MSSIM/Speckle-Index evaluation metrics.  The ``despeckle`` command
(see :mod:`despeckle.cli`) wraps it all for batch use.
"""

from .coefficients import CoeffFields, CoeffParams, c1_gray, c2_laplacian, c3_gradient, coeff_field
from .grid import ColorImage, ImageGrid, merge_channels, split_channels
from .metrics import SsimConfig, mssim, psnr, speckle_index, ssim_map
from .models import Model
from .netpbm import NetpbmError, load_pgm, load_ppm, save_pgm, save_ppm
from .noise import NoiseSpec, apply_speckle, apply_speckle_color, gamma_field, sample_gamma
from .rng import Xoshiro256StarStar, derive_seed
from .smoothing import GaussianKernel, gaussian_kernel, smooth
from .solver import (
    RunTrace,
    SolverDivergenceError,
    SolverParams,
    assemble_rhs,
    denoise_color,
    model2_second_rhs,
    run_solver,
    telegraph_step,
)
from .stencils import GridSpacing, fd2_div, fd4, fidelity_source, gradient_magnitude, laplacian

__version__ = "0.1.0"

__all__ = [
    "CoeffFields",
    "CoeffParams",
    "ColorImage",
    "GaussianKernel",
    "GridSpacing",
    "ImageGrid",
    "Model",
    "NetpbmError",
    "NoiseSpec",
    "RunTrace",
    "SolverDivergenceError",
    "SolverParams",
    "SsimConfig",
    "Xoshiro256StarStar",
    "apply_speckle",
    "apply_speckle_color",
    "assemble_rhs",
    "c1_gray",
    "c2_laplacian",
    "c3_gradient",
    "coeff_field",
    "denoise_color",
    "derive_seed",
    "fd2_div",
    "fd4",
    "fidelity_source",
    "gamma_field",
    "gaussian_kernel",
    "gradient_magnitude",
    "laplacian",
    "load_pgm",
    "load_ppm",
    "merge_channels",
    "model2_second_rhs",
    "mssim",
    "psnr",
    "run_solver",
    "sample_gamma",
    "save_pgm",
    "save_ppm",
    "smooth",
    "speckle_index",
    "split_channels",
    "ssim_map",
    "telegraph_step",
]
