"""Color image model: R/G/B plane handling and 8-bit quantization.

A plane is a 2D float64 numpy array indexed ``[row, column]``. A color
image is three planes of identical shape, one per channel, in R, G, B
order. Planes loaded from an 8-bit file hold integer values in
[0, 255]; intermediate pipeline stages may hold arbitrary reals until
:func:`quantize_plane` turns them back into writable 8-bit values.
"""

from dataclasses import dataclass

import numpy as np

from .errors import DimensionMismatch


def as_plane(samples) -> np.ndarray:
    """Coerce ``samples`` to a 2D float64 array with positive dimensions."""
    plane = np.asarray(samples, dtype=np.float64)
    if plane.ndim != 2:
        raise DimensionMismatch(f"a plane must be 2D, got a {plane.ndim}D array")
    if plane.size == 0:
        raise DimensionMismatch(
            f"a plane must have positive dimensions, got {plane.shape}"
        )
    return plane


@dataclass
class ColorImage:
    """Three same-size color planes, in R, G, B order."""

    r: np.ndarray
    g: np.ndarray
    b: np.ndarray

    def __post_init__(self):
        self.r = as_plane(self.r)
        self.g = as_plane(self.g)
        self.b = as_plane(self.b)
        if not (self.r.shape == self.g.shape == self.b.shape):
            raise DimensionMismatch(
                "color planes must share dimensions, got "
                f"R{self.r.shape}, G{self.g.shape}, B{self.b.shape}"
            )

    @property
    def height(self) -> int:
        return self.r.shape[0]

    @property
    def width(self) -> int:
        return self.r.shape[1]

    @property
    def planes(self) -> tuple[np.ndarray, np.ndarray, np.ndarray]:
        return self.r, self.g, self.b


def split_planes(image: ColorImage) -> tuple[np.ndarray, np.ndarray, np.ndarray]:
    """Return independent copies of the R, G, B planes, in that order."""
    return image.r.copy(), image.g.copy(), image.b.copy()


def merge_planes(r, g, b) -> ColorImage:
    """Compose three same-size planes into a color image.

    Samples are carried through unchanged as real values; quantization
    for 8-bit output is a separate step.
    """
    return ColorImage(as_plane(r).copy(), as_plane(g).copy(), as_plane(b).copy())


def quantize_plane(plane) -> np.ndarray:
    """Clamp samples to [0, 255], then round half-away-from-zero to integers.

    Idempotent; the result is integer-valued but stays float64 so it can
    feed back into the real-valued pipeline.
    """
    clamped = np.clip(as_plane(plane), 0.0, 255.0)
    # All values are non-negative after clamping, so half-away-from-zero
    # reduces to floor(x + 0.5). numpy's round() would round half-to-even.
    return np.floor(clamped + 0.5)


def quantize_image(image: ColorImage) -> ColorImage:
    """Apply :func:`quantize_plane` to each channel."""
    return ColorImage(
        quantize_plane(image.r), quantize_plane(image.g), quantize_plane(image.b)
    )
