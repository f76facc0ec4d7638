"""MSE and PSNR image quality metrics, per channel and pooled.

PSNR uses a fixed peak of 255 (8-bit full scale) even on real-valued
planes, so numbers stay comparable between the quantized and
unquantized pipeline paths. Identical inputs give MSE 0 and an infinite
PSNR.
"""

import math
from dataclasses import dataclass

import numpy as np

from .errors import DimensionMismatch
from .planes import ColorImage, as_plane

PEAK = 255.0


@dataclass
class MetricsReport:
    """MSE/PSNR per channel (R, G, B) plus pooled over all samples.

    The overall PSNR derives from the pooled MSE over all
    3 * width * height samples, not from averaging per-channel PSNRs.
    """

    mse_per_channel: tuple[float, float, float]
    psnr_per_channel: tuple[float, float, float]
    mse_overall: float
    psnr_overall: float


def mse(f, g) -> float:
    """Mean squared difference over all samples of two same-size planes."""
    fp, gp = as_plane(f), as_plane(g)
    if fp.shape != gp.shape:
        raise DimensionMismatch(f"plane shapes differ: {fp.shape} vs {gp.shape}")
    return float(np.mean((fp - gp) ** 2))


def psnr_from_mse(value: float) -> float:
    """PSNR in dB for a given MSE; infinite when the MSE is zero."""
    if value == 0.0:
        return math.inf
    return 10.0 * math.log10(PEAK**2 / value)


def psnr(f, g) -> float:
    """Peak signal-to-noise ratio between two same-size planes, in dB."""
    return psnr_from_mse(mse(f, g))


def compare_images(a: ColorImage, b: ColorImage) -> MetricsReport:
    """Full metrics report between two same-size color images."""
    if (a.height, a.width) != (b.height, b.width):
        raise DimensionMismatch(
            f"image sizes differ: {a.width}x{a.height} vs {b.width}x{b.height}"
        )
    per_channel = tuple(mse(pa, pb) for pa, pb in zip(a.planes, b.planes))
    # Equal-size channels, so pooling all samples is the plain mean.
    overall = sum(per_channel) / 3.0
    return MetricsReport(
        mse_per_channel=per_channel,
        psnr_per_channel=tuple(psnr_from_mse(m) for m in per_channel),
        mse_overall=overall,
        psnr_overall=psnr_from_mse(overall),
    )
