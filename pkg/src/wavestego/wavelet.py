"""From-scratch 2D Haar wavelet transform, orthonormal convention.

Single-level analysis maps each non-overlapping 2x2 block
``[a b; c d]`` (a = top-left, b = top-right, c = bottom-left,
d = bottom-right) to one sample per sub-band::

    LL = (a + b + c + d) / 2      HL = (a - b + c - d) / 2
    LH = (a + b - c - d) / 2      HH = (a - b - c + d) / 2

The factor 1/2 per block makes the transform orthonormal: the sum of
squared samples over the four sub-bands equals that of the input
(Parseval), and synthesis is the exact transpose. Multi-level
decomposition re-applies the analysis to the LL band, yielding 3N+1
sub-band planes after N levels.
"""

from dataclasses import dataclass

import numpy as np

from .errors import DimensionMismatch, OddDimension, TooSmall
from .planes import as_plane


@dataclass
class SubBandSet:
    """The four sub-bands of one plane at one decomposition level."""

    ll: np.ndarray
    lh: np.ndarray
    hl: np.ndarray
    hh: np.ndarray

    def __post_init__(self):
        self.ll = as_plane(self.ll)
        self.lh = as_plane(self.lh)
        self.hl = as_plane(self.hl)
        self.hh = as_plane(self.hh)
        shapes = {band.shape for band in (self.ll, self.lh, self.hl, self.hh)}
        if len(shapes) != 1:
            raise DimensionMismatch(f"sub-bands must share dimensions, got {shapes}")


@dataclass
class MultiLevelDecomposition:
    """Detail triples from level 1 (finest) to level N, plus the final LL.

    Holds 3N+1 sub-band planes in total; the level-i planes are
    1/2^i the size of the original in each dimension.
    """

    levels: int
    detail_chain: list[tuple[np.ndarray, np.ndarray, np.ndarray]]
    final_ll: np.ndarray


def _check_transformable(plane: np.ndarray) -> None:
    height, width = plane.shape
    if height < 2 or width < 2:
        raise TooSmall(f"plane must be at least 2x2 to transform, got {width}x{height}")
    if height % 2 or width % 2:
        raise OddDimension(
            f"plane dimensions must be even to transform, got {width}x{height}"
        )


def haar_forward(plane) -> SubBandSet:
    """Single-level 2D Haar analysis of an even-dimensioned plane."""
    p = as_plane(plane)
    _check_transformable(p)
    a = p[0::2, 0::2]
    b = p[0::2, 1::2]
    c = p[1::2, 0::2]
    d = p[1::2, 1::2]
    return SubBandSet(
        ll=(a + b + c + d) / 2,
        lh=(a + b - c - d) / 2,
        hl=(a - b + c - d) / 2,
        hh=(a - b - c + d) / 2,
    )


def haar_inverse(bands: SubBandSet) -> np.ndarray:
    """Exact inverse of :func:`haar_forward`; output is 2x the band size."""
    ll, lh, hl, hh = bands.ll, bands.lh, bands.hl, bands.hh
    height, width = ll.shape
    plane = np.empty((2 * height, 2 * width), dtype=np.float64)
    plane[0::2, 0::2] = (ll + hl + lh + hh) / 2
    plane[0::2, 1::2] = (ll - hl + lh - hh) / 2
    plane[1::2, 0::2] = (ll + hl - lh - hh) / 2
    plane[1::2, 1::2] = (ll - hl - lh + hh) / 2
    return plane


def decompose(plane, levels: int) -> MultiLevelDecomposition:
    """Recursively analyse the LL band ``levels`` times.

    Dimensions must be divisible by 2**levels (checked level by level,
    so the error names the first level that fails).
    """
    if levels < 1:
        raise ValueError(f"levels must be a positive integer, got {levels}")
    source = as_plane(plane)
    current = source
    detail_chain = []
    for level in range(1, levels + 1):
        try:
            bands = haar_forward(current)
        except (OddDimension, TooSmall) as exc:
            raise OddDimension(
                f"plane of {source.shape[1]}x{source.shape[0]} cannot be "
                f"decomposed to level {level}: {exc}"
            ) from exc
        detail_chain.append((bands.lh, bands.hl, bands.hh))
        current = bands.ll
    return MultiLevelDecomposition(levels=levels, detail_chain=detail_chain, final_ll=current)


def reconstruct(decomposition: MultiLevelDecomposition) -> np.ndarray:
    """Invert :func:`decompose`, synthesizing from coarsest to finest."""
    current = decomposition.final_ll
    for lh, hl, hh in reversed(decomposition.detail_chain):
        if lh.shape != current.shape:
            raise DimensionMismatch(
                f"detail bands of shape {lh.shape} do not match the "
                f"{current.shape} approximation above them"
            )
        current = haar_inverse(SubBandSet(ll=current, lh=lh, hl=hl, hh=hh))
    return current
