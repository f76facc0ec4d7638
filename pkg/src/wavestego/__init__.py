"""Wavelet-domain color image steganography via alpha blending.

A true-color secret image is hidden inside a same-size cover image by
blending corresponding Haar DWT sub-bands of each RGB plane; the secret
is recovered given the cover and the blending parameters.
"""

from .errors import (
    AlphaUnderflow,
    BadMagic,
    DimensionMismatch,
    InvalidAlpha,
    InvalidBandMask,
    NotQuantized,
    OddDimension,
    SizeMismatch,
    TooSmall,
    TruncatedPayload,
    UnsupportedFormat,
    WavestegoError,
)
from .imageio import load_image, read_float_dump, save_image, write_float_dump
from .metrics import MetricsReport, compare_images, mse, psnr
from .planes import (
    ColorImage,
    merge_planes,
    quantize_image,
    quantize_plane,
    split_planes,
)
from .stego import (
    ALL_BANDS,
    BAND_NAMES,
    EmbedOutput,
    StegoParams,
    blend_bands,
    embed,
    extract,
    unblend_bands,
)
from .wavelet import (
    MultiLevelDecomposition,
    SubBandSet,
    decompose,
    haar_forward,
    haar_inverse,
    reconstruct,
)

__version__ = "0.1.0"

__all__ = [
    "ALL_BANDS",
    "AlphaUnderflow",
    "BAND_NAMES",
    "BadMagic",
    "ColorImage",
    "DimensionMismatch",
    "EmbedOutput",
    "InvalidAlpha",
    "InvalidBandMask",
    "MetricsReport",
    "MultiLevelDecomposition",
    "NotQuantized",
    "OddDimension",
    "SizeMismatch",
    "StegoParams",
    "SubBandSet",
    "TooSmall",
    "TruncatedPayload",
    "UnsupportedFormat",
    "WavestegoError",
    "blend_bands",
    "compare_images",
    "decompose",
    "embed",
    "extract",
    "haar_forward",
    "haar_inverse",
    "load_image",
    "merge_planes",
    "mse",
    "psnr",
    "quantize_image",
    "quantize_plane",
    "read_float_dump",
    "reconstruct",
    "save_image",
    "split_planes",
    "unblend_bands",
    "write_float_dump",
]
