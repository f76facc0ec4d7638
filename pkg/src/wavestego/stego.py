"""Embed one color image inside another by blending Haar DWT sub-bands.

Each R/G/B plane of the cover and secret is decomposed independently,
then every selected sub-band is alpha-blended::

    stego_band = (1 - alpha) * cover_band + alpha * secret_band

so small alpha keeps the stego visually close to the cover and large
alpha favors later recovery of the secret. (Some formulations put the
weights the other way around, with alpha on the cover; substitute
``1 - alpha`` to match such a convention.) Extraction subtracts the
cover's weighted bands from the stego's, which yields
``alpha * secret_band``; with ``renormalize=True`` the result is divided
by alpha to restore the secret's original scale. The scheme is
non-blind: the original cover (plus the alpha, level count and band
mask used at embed time) is required to extract.

Because the transform and the blend are both linear, blending every
sub-band is exactly equivalent to blending the images in the spatial
domain; that identity is the main correctness check in the tests.
"""

from dataclasses import dataclass

import numpy as np

from .errors import (
    AlphaUnderflow,
    DimensionMismatch,
    InvalidAlpha,
    InvalidBandMask,
    SizeMismatch,
)
from .planes import ColorImage, merge_planes, quantize_image
from .wavelet import MultiLevelDecomposition, SubBandSet, decompose, reconstruct

BAND_NAMES = ("LL", "LH", "HL", "HH")
ALL_BANDS = frozenset(BAND_NAMES)

# Renormalization divides by alpha; below this, quantization noise in the
# stego would be amplified past full scale and the division is refused.
MIN_RENORMALIZE_ALPHA = 1e-6


@dataclass
class StegoParams:
    """Embedding/extraction parameters: shared secrets of the scheme.

    ``alpha`` must lie strictly inside (0, 1) for embedding and
    extraction; the degenerate endpoints hide nothing recoverable
    (0) or destroy the cover (1). ``band_mask`` selects which
    sub-bands carry payload, at every decomposition level.
    """

    alpha: float
    levels: int = 1
    band_mask: frozenset[str] = ALL_BANDS
    renormalize: bool = False

    def __post_init__(self):
        mask = frozenset(str(name).upper() for name in self.band_mask)
        unknown = mask - ALL_BANDS
        if unknown:
            raise InvalidBandMask(f"unknown sub-band name(s): {sorted(unknown)}")
        if not mask:
            raise InvalidBandMask("band mask must select at least one sub-band")
        self.band_mask = mask
        if self.levels < 1:
            raise ValueError(f"levels must be a positive integer, got {self.levels}")


@dataclass
class EmbedOutput:
    """Stego image in both real-valued and 8-bit-ready form."""

    stego: ColorImage
    stego_quantized: ColorImage


def _check_alpha_in_range(alpha: float) -> None:
    if not 0.0 < alpha < 1.0:
        raise InvalidAlpha(f"alpha must be strictly between 0 and 1, got {alpha}")


def _check_renormalizable(params: StegoParams) -> None:
    if params.renormalize and params.alpha < MIN_RENORMALIZE_ALPHA:
        raise AlphaUnderflow(
            f"cannot renormalize with alpha={params.alpha}; "
            f"minimum is {MIN_RENORMALIZE_ALPHA}"
        )


def blend_bands(cover: SubBandSet, secret: SubBandSet, params: StegoParams) -> SubBandSet:
    """Blend the secret's masked sub-bands into the cover's.

    Bands outside the mask are copied from the cover unchanged.
    """
    if cover.ll.shape != secret.ll.shape:
        raise DimensionMismatch(
            f"cover bands {cover.ll.shape} and secret bands {secret.ll.shape} differ"
        )
    alpha = params.alpha
    blended = {}
    for name in BAND_NAMES:
        attr = name.lower()
        cover_band = getattr(cover, attr)
        if name in params.band_mask:
            blended[attr] = (1.0 - alpha) * cover_band + alpha * getattr(secret, attr)
        else:
            blended[attr] = cover_band.copy()
    return SubBandSet(**blended)


def unblend_bands(stego: SubBandSet, cover: SubBandSet, params: StegoParams) -> SubBandSet:
    """Recover the secret's contribution from blended sub-bands.

    For each masked band, ``stego_band - (1 - alpha) * cover_band``
    equals ``alpha * secret_band`` when the stego is unmodified; with
    ``renormalize`` the band is divided by alpha to undo the scaling.
    Bands outside the mask carry no secret content and come back zero.
    """
    if stego.ll.shape != cover.ll.shape:
        raise DimensionMismatch(
            f"stego bands {stego.ll.shape} and cover bands {cover.ll.shape} differ"
        )
    _check_renormalizable(params)
    alpha = params.alpha
    recovered = {}
    for name in BAND_NAMES:
        attr = name.lower()
        if name in params.band_mask:
            raw = getattr(stego, attr) - (1.0 - alpha) * getattr(cover, attr)
            recovered[attr] = raw / alpha if params.renormalize else raw
        else:
            recovered[attr] = np.zeros_like(getattr(cover, attr))
    return SubBandSet(**recovered)


def _blend_decompositions(
    cover: MultiLevelDecomposition,
    secret: MultiLevelDecomposition,
    params: StegoParams,
) -> MultiLevelDecomposition:
    alpha = params.alpha
    mask = params.band_mask

    def mix(cover_band, secret_band, name):
        if name in mask:
            return (1.0 - alpha) * cover_band + alpha * secret_band
        return cover_band.copy()

    chain = [
        (mix(c_lh, s_lh, "LH"), mix(c_hl, s_hl, "HL"), mix(c_hh, s_hh, "HH"))
        for (c_lh, c_hl, c_hh), (s_lh, s_hl, s_hh) in zip(
            cover.detail_chain, secret.detail_chain
        )
    ]
    final_ll = mix(cover.final_ll, secret.final_ll, "LL")
    return MultiLevelDecomposition(cover.levels, chain, final_ll)


def _unblend_decompositions(
    stego: MultiLevelDecomposition,
    cover: MultiLevelDecomposition,
    params: StegoParams,
) -> MultiLevelDecomposition:
    alpha = params.alpha
    mask = params.band_mask

    def recover(stego_band, cover_band, name):
        if name not in mask:
            return np.zeros_like(cover_band)
        raw = stego_band - (1.0 - alpha) * cover_band
        return raw / alpha if params.renormalize else raw

    chain = [
        (recover(t_lh, c_lh, "LH"), recover(t_hl, c_hl, "HL"), recover(t_hh, c_hh, "HH"))
        for (t_lh, t_hl, t_hh), (c_lh, c_hl, c_hh) in zip(
            stego.detail_chain, cover.detail_chain
        )
    ]
    final_ll = recover(stego.final_ll, cover.final_ll, "LL")
    return MultiLevelDecomposition(cover.levels, chain, final_ll)


def embed(cover: ColorImage, secret: ColorImage, params: StegoParams) -> EmbedOutput:
    """Hide ``secret`` inside ``cover``, plane by plane.

    Both images must be the same size, with dimensions divisible by
    2**levels. Returns the real-valued stego alongside its quantized
    (8-bit-ready) counterpart.
    """
    _check_alpha_in_range(params.alpha)
    if (cover.height, cover.width) != (secret.height, secret.width):
        raise SizeMismatch(
            "cover and secret images must be the same size, got "
            f"{cover.width}x{cover.height} and {secret.width}x{secret.height}"
        )
    stego_planes = []
    for cover_plane, secret_plane in zip(cover.planes, secret.planes):
        blended = _blend_decompositions(
            decompose(cover_plane, params.levels),
            decompose(secret_plane, params.levels),
            params,
        )
        stego_planes.append(reconstruct(blended))
    stego = merge_planes(*stego_planes)
    return EmbedOutput(stego=stego, stego_quantized=quantize_image(stego))


def extract(stego: ColorImage, cover: ColorImage, params: StegoParams) -> ColorImage:
    """Recover the secret from a stego image, given the original cover.

    ``params`` must match the values used at embed time. Without
    ``renormalize`` the result approximates ``alpha * secret``; with it,
    extraction from the real-valued (unquantized) stego reproduces the
    secret essentially exactly. The returned planes are real-valued;
    quantize before writing to an 8-bit file.
    """
    _check_alpha_in_range(params.alpha)
    _check_renormalizable(params)
    if (stego.height, stego.width) != (cover.height, cover.width):
        raise SizeMismatch(
            "stego and cover images must be the same size, got "
            f"{stego.width}x{stego.height} and {cover.width}x{cover.height}"
        )
    secret_planes = []
    for stego_plane, cover_plane in zip(stego.planes, cover.planes):
        recovered = _unblend_decompositions(
            decompose(stego_plane, params.levels),
            decompose(cover_plane, params.levels),
            params,
        )
        secret_planes.append(reconstruct(recovered))
    return merge_planes(*secret_planes)
