"""Deterministic synthetic test images.

Stand-ins for the classic benchmark photographs, built from closed-form
shapes so every run sees byte-identical pixels without shipping binary
data.  Intensities stay well inside (0, 255): multiplicative noise fixes
black pixels, so a strictly positive floor keeps the noise model active
everywhere.
"""

from __future__ import annotations

import numpy as np

from .grid import ColorImage, ImageGrid


def _unit_grid(size: int) -> tuple[np.ndarray, np.ndarray]:
    u = (np.arange(size, dtype=np.float64) + 0.5) / size
    return np.meshgrid(u, u, indexing="ij")  # (y, x)


def parrots_like(size: int = 256) -> ImageGrid:
    """Cartoon-style image: smooth shading, soft blobs, and sharp edges.

    Mimics the structure mix of a natural photograph (large smooth regions
    separated by strong contours) that second-order diffusion handles well.
    """
    y, x = _unit_grid(size)
    img = 95.0 + 70.0 * x + 30.0 * y  # smooth illumination ramp

    def blob(cx, cy, rx, ry, amplitude, power=2.0):
        q = ((x - cx) / rx) ** 2 + ((y - cy) / ry) ** 2
        return amplitude * np.exp(-(q**power))

    img += blob(0.32, 0.38, 0.20, 0.26, 85.0)  # head
    img += blob(0.62, 0.62, 0.16, 0.14, -55.0)  # wing shadow
    img += blob(0.75, 0.25, 0.10, 0.10, 60.0, power=3.0)  # eye highlight
    img += blob(0.20, 0.75, 0.12, 0.20, -40.0)

    img = np.where((x - y > 0.28) & (x - y < 0.40) & (y > 0.55), img + 70.0, img)  # beak wedge
    img = np.where(np.abs(x + 0.6 * y - 0.85) < 0.015, 40.0, img)  # thin branch

    return ImageGrid(np.clip(img, 20.0, 240.0))


def texture_like(size: int = 256) -> ImageGrid:
    """Oscillatory texture with wavelengths of 10-30 pixels.

    The texture scale stays well above the pixel scale so that a denoiser
    can in principle separate speckle from signal.
    """
    y, x = _unit_grid(size)
    img = 128.0
    img = img + 42.0 * np.sin(2.0 * np.pi * (9.0 * x + 2.0 * np.sin(2.0 * np.pi * 3.0 * y)))
    img = img + 30.0 * np.sin(2.0 * np.pi * (6.0 * (0.6 * x + 0.8 * y)))
    img = img + 18.0 * np.sin(2.0 * np.pi * 12.0 * y)
    return ImageGrid(np.clip(img, 25.0, 230.0))


def piecewise_constant(size: int = 128) -> ImageGrid:
    """Flat regions with sharp boundaries: a SAR-scene-style phantom."""
    y, x = _unit_grid(size)
    img = np.full((size, size), 70.0)
    img = np.where((x > 0.15) & (x < 0.45) & (y > 0.2) & (y < 0.8), 150.0, img)
    img = np.where((x - 0.72) ** 2 + (y - 0.35) ** 2 < 0.03, 210.0, img)
    img = np.where(np.abs(y - 0.85) < 0.05, 40.0, img)
    return ImageGrid(img)


def caps_like(size: int = 128) -> ColorImage:
    """Color phantom with channel-distinct smooth shapes."""
    y, x = _unit_grid(size)
    base = 90.0 + 50.0 * x

    def disk(cx, cy, r, amplitude):
        return amplitude * np.exp(-(((x - cx) ** 2 + (y - cy) ** 2) / (r * r)) ** 2)

    r = base + disk(0.35, 0.40, 0.22, 110.0)
    g = base + disk(0.60, 0.55, 0.25, 90.0) + 15.0 * y
    b = base + disk(0.50, 0.30, 0.18, 70.0) + 30.0 * (1.0 - x)
    return ColorImage(
        ImageGrid(np.clip(r, 20.0, 240.0)),
        ImageGrid(np.clip(g, 20.0, 240.0)),
        ImageGrid(np.clip(b, 20.0, 240.0)),
    )
