"""Restoration quality metrics: PSNR, SSIM/MSSIM, and the Speckle Index.

PSNR uses the reference image's own peak by default (override with
``peak``).  SSIM follows the usual windowed form with Gaussian-weighted
local moments; MSSIM is the plain mean of the SSIM map.  The Speckle Index
sigma/mu is the no-reference homogeneity measure used for SAR/ultrasound
inputs: lower is cleaner.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from typing import Optional

import numpy as np

from .grid import as_array, same_kind
from .smoothing import convolve_separable


@dataclass(frozen=True)
class SsimConfig:
    """SSIM window and stabilising constants.

    ``c1``/``c2`` default to the customary (0.01 D)^2 and (0.03 D)^2 for
    dynamic range D.
    """

    window_size: int = 11
    window_sigma: float = 1.5
    dynamic_range: float = 255.0
    c1: Optional[float] = None
    c2: Optional[float] = None

    def __post_init__(self) -> None:
        if self.window_size < 1 or self.window_size % 2 == 0:
            raise ValueError(f"window_size must be odd and positive, got {self.window_size}")
        if not (self.window_sigma > 0 and self.dynamic_range > 0):
            raise ValueError("window_sigma and dynamic_range must be positive")
        if self.c1 is None:
            object.__setattr__(self, "c1", (0.01 * self.dynamic_range) ** 2)
        if self.c2 is None:
            object.__setattr__(self, "c2", (0.03 * self.dynamic_range) ** 2)
        if not (self.c1 > 0 and self.c2 > 0):
            raise ValueError("c1 and c2 must be positive")

    def window(self) -> np.ndarray:
        radius = (self.window_size - 1) // 2
        offsets = np.arange(-radius, radius + 1, dtype=np.float64)
        w = np.exp(-(offsets**2) / (2.0 * self.window_sigma**2))
        return w / w.sum()


def psnr(reference, test, peak: Optional[float] = None) -> float:
    """Peak signal-to-noise ratio in dB; +inf for identical images.

    ``peak`` defaults to the reference image's maximum value.
    """
    ref = as_array(reference)
    tst = as_array(test)
    if ref.shape != tst.shape:
        raise ValueError(f"shape mismatch: reference {ref.shape}, test {tst.shape}")
    if peak is None:
        peak = float(ref.max())
    if not peak > 0:
        raise ValueError(f"peak intensity must be positive, got {peak}")
    diff = ref - tst
    mse = float(np.mean(diff * diff))
    if mse == 0.0:
        return math.inf
    return 10.0 * math.log10(peak * peak / mse)


def ssim_map(reference, test, cfg: SsimConfig = SsimConfig()):
    """Per-pixel structural similarity with Gaussian-weighted local moments.

    Windows extend past the border by replicate padding, consistent with
    the rest of the package.  Values lie in [-1, 1]; the map is exactly 1
    where the images agree.
    """
    x = as_array(reference)
    y = as_array(test)
    if x.shape != y.shape:
        raise ValueError(f"shape mismatch: reference {x.shape}, test {y.shape}")
    w = cfg.window()

    mu_x = convolve_separable(x, w)
    mu_y = convolve_separable(y, w)
    var_x = convolve_separable(x * x, w) - mu_x * mu_x
    var_y = convolve_separable(y * y, w) - mu_y * mu_y
    cov = convolve_separable(x * y, w) - mu_x * mu_y

    num = (2.0 * mu_x * mu_y + cfg.c1) * (2.0 * cov + cfg.c2)
    den = (mu_x * mu_x + mu_y * mu_y + cfg.c1) * (var_x + var_y + cfg.c2)
    return same_kind(reference, num / den)


def mssim(reference, test, cfg: SsimConfig = SsimConfig()) -> float:
    """Mean of the SSIM map over all windows."""
    return float(np.mean(as_array(ssim_map(reference, test, cfg))))


def speckle_index(image) -> float:
    """Population standard deviation over mean of the whole image."""
    a = as_array(image)
    mu = float(a.mean())
    if mu <= 0:
        raise ValueError(f"speckle index needs a positive mean, got {mu}")
    return float(a.std()) / mu
