"""Image containers.

All pixel data is held as double-precision, row-major 2-D arrays (row index
``i`` runs down the y axis, column index ``j`` along the x axis).  Grids are
immutable after construction -- the backing array is marked read-only -- so
they can be shared freely between solver runs and threads.
"""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np


def as_array(image) -> np.ndarray:
    """Return the 2-D float64 pixel array behind an ImageGrid or ndarray."""
    if isinstance(image, ImageGrid):
        return image.data
    arr = np.asarray(image, dtype=np.float64)
    if arr.ndim != 2:
        raise ValueError(f"expected a 2-D image array, got ndim={arr.ndim}")
    return arr


def same_kind(template, data: np.ndarray):
    """Wrap ``data`` like ``template``: ImageGrid in, ImageGrid out."""
    if isinstance(template, ImageGrid):
        return template.like(data)
    return data


@dataclass(frozen=True, eq=False)
class ImageGrid:
    """A real-valued image with a declared intensity range.

    ``range_max`` is the nominal peak intensity (255 for 8-bit sources); it
    drives file-output clamping and the default PSNR/SSIM dynamic range.
    Pixel values themselves are unrestricted reals, except that they must be
    finite.
    """

    data: np.ndarray
    range_max: float = 255.0

    def __post_init__(self) -> None:
        arr = np.array(self.data, dtype=np.float64, order="C", copy=True)
        if arr.ndim != 2:
            raise ValueError(f"image data must be 2-D, got ndim={arr.ndim}")
        if arr.shape[0] < 1 or arr.shape[1] < 1:
            raise ValueError(f"image must have at least one row and column, got {arr.shape}")
        if not np.all(np.isfinite(arr)):
            raise ValueError("image data contains NaN or Inf")
        if not (np.isfinite(self.range_max) and self.range_max > 0):
            raise ValueError(f"range_max must be positive and finite, got {self.range_max}")
        arr.setflags(write=False)
        object.__setattr__(self, "data", arr)
        object.__setattr__(self, "range_max", float(self.range_max))

    @property
    def height(self) -> int:
        return self.data.shape[0]

    @property
    def width(self) -> int:
        return self.data.shape[1]

    @property
    def shape(self) -> tuple[int, int]:
        return self.data.shape

    def like(self, data: np.ndarray) -> "ImageGrid":
        """A new grid with this grid's range_max and the given pixels."""
        return ImageGrid(data, self.range_max)

    def __eq__(self, other) -> bool:
        if not isinstance(other, ImageGrid):
            return NotImplemented
        return self.range_max == other.range_max and np.array_equal(self.data, other.data)


@dataclass(frozen=True)
class ColorImage:
    """Three equally sized channels in R, G, B order."""

    r: ImageGrid
    g: ImageGrid
    b: ImageGrid

    def __post_init__(self) -> None:
        for name, chan in (("g", self.g), ("b", self.b)):
            if chan.shape != self.r.shape:
                raise ValueError(
                    f"channel {name} has shape {chan.shape}, expected {self.r.shape}"
                )
            if chan.range_max != self.r.range_max:
                raise ValueError(
                    f"channel {name} has range_max {chan.range_max}, "
                    f"expected {self.r.range_max}"
                )

    @property
    def height(self) -> int:
        return self.r.height

    @property
    def width(self) -> int:
        return self.r.width

    @property
    def range_max(self) -> float:
        return self.r.range_max

    def channels(self) -> tuple[ImageGrid, ImageGrid, ImageGrid]:
        return (self.r, self.g, self.b)


def split_channels(image: ColorImage) -> tuple[ImageGrid, ImageGrid, ImageGrid]:
    """The R, G, B channels as three independent grids.

    Grids are immutable, so the returned channels can never interfere with
    each other or with the source image.
    """
    return image.channels()


def merge_channels(r: ImageGrid, g: ImageGrid, b: ImageGrid) -> ColorImage:
    """Reassemble three channels into a color image (inverse of split)."""
    return ColorImage(r, g, b)
