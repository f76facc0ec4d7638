"""Exception types shared across the package."""


class WavestegoError(Exception):
    """Base class for every error raised by this package."""


class DimensionMismatch(WavestegoError):
    """Planes or sub-bands that must share dimensions do not."""


class SizeMismatch(DimensionMismatch):
    """Two images that must be the same size are not."""


class OddDimension(WavestegoError):
    """A plane dimension is not divisible by 2 where the transform needs it."""


class TooSmall(WavestegoError):
    """A plane is too small to transform (either dimension below 2)."""


class InvalidAlpha(WavestegoError):
    """Blending weight outside the open interval (0, 1)."""


class AlphaUnderflow(WavestegoError):
    """Alpha too close to zero to divide by safely during renormalization."""


class InvalidBandMask(WavestegoError):
    """Band mask is empty or names an unknown sub-band."""


class UnsupportedFormat(WavestegoError):
    """File is not a lossless 8-bit RGB raster (or a readable float dump)."""


class NotQuantized(WavestegoError):
    """Samples are not integer-valued in [0, 255] where 8-bit output requires it."""


class BadMagic(WavestegoError):
    """Float dump file does not start with the expected magic bytes."""


class TruncatedPayload(WavestegoError):
    """Float dump payload length disagrees with what the header declares."""
