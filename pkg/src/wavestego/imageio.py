"""I/O for images and raw coefficient data.

Raster files must be lossless 8-bit RGB: a lossy save recompresses the
pixel values and destroys embedded coefficients, so lossy formats,
other bit depths, grayscale and alpha channels are all refused rather
than converted.

The float dump is a fixed little-endian binary layout for real-valued
planes; it carries the unquantized stego so extraction can bypass the
8-bit rounding step entirely. Layout::

    offset 0   magic, 4 bytes ASCII "STGF"
    offset 4   version, uint16 (currently 1)
    offset 6   width, uint32
    offset 10  height, uint32
    offset 14  plane count, uint8 (3 for RGB)
    offset 15  payload: plane_count planes of width*height float64
               samples, row-major, planes in R, G, B order

Both formats round-trip bit-exactly.
"""

import struct
from pathlib import Path

import numpy as np
from PIL import Image, UnidentifiedImageError

from .errors import (
    BadMagic,
    NotQuantized,
    TruncatedPayload,
    UnsupportedFormat,
)
from .planes import ColorImage

# Formats Pillow reads/writes without loss for 8-bit RGB.
_LOSSLESS_FORMATS = {"PNG", "BMP", "PPM", "TIFF"}
_SAVE_SUFFIXES = {
    ".png": "PNG",
    ".bmp": "BMP",
    ".ppm": "PPM",
    ".tif": "TIFF",
    ".tiff": "TIFF",
}

FLOAT_DUMP_MAGIC = b"STGF"
FLOAT_DUMP_VERSION = 1
_HEADER = struct.Struct("<4sHIIB")


def load_image(path) -> ColorImage:
    """Load a lossless 8-bit RGB raster file into float64 planes.

    Sample values come through unaltered (no color management, no
    gamma); row 0, column 0 is the stored image's top-left pixel.
    """
    try:
        with Image.open(path) as im:
            image_format = im.format
            if image_format not in _LOSSLESS_FORMATS:
                raise UnsupportedFormat(
                    f"{path}: format {image_format} is not a supported "
                    "lossless RGB format (use PNG, BMP, PPM or TIFF)"
                )
            if im.mode != "RGB":
                detail = "has an alpha channel" if "A" in im.mode else "is not 8-bit RGB"
                raise UnsupportedFormat(
                    f"{path}: mode {im.mode} {detail}; three 8-bit color "
                    "channels are required"
                )
            pixels = np.asarray(im, dtype=np.float64)
    except UnidentifiedImageError as exc:
        raise UnsupportedFormat(f"{path}: not a recognized image file") from exc
    return ColorImage(pixels[:, :, 0], pixels[:, :, 1], pixels[:, :, 2])


def save_image(image: ColorImage, path) -> None:
    """Write an already-quantized image as a lossless 8-bit RGB file."""
    for name, plane in zip("RGB", image.planes):
        if (
            not np.all(np.isfinite(plane))
            or np.any(plane != np.floor(plane))
            or plane.min() < 0
            or plane.max() > 255
        ):
            raise NotQuantized(
                f"{name} plane contains samples outside integer [0, 255]; "
                "quantize before saving"
            )
    suffix = Path(path).suffix.lower()
    if suffix not in _SAVE_SUFFIXES:
        raise UnsupportedFormat(
            f"{path}: cannot save losslessly with suffix {suffix!r} "
            "(use .png, .bmp, .ppm or .tiff)"
        )
    pixels = np.stack(image.planes, axis=-1).astype(np.uint8)
    Image.fromarray(pixels, mode="RGB").save(path, format=_SAVE_SUFFIXES[suffix])


def write_float_dump(image: ColorImage, path) -> None:
    """Serialize real-valued planes to the float dump layout, bit-exactly."""
    header = _HEADER.pack(
        FLOAT_DUMP_MAGIC, FLOAT_DUMP_VERSION, image.width, image.height, 3
    )
    with open(path, "wb") as handle:
        handle.write(header)
        for plane in image.planes:
            handle.write(np.ascontiguousarray(plane, dtype="<f8").tobytes())


def read_float_dump(path) -> ColorImage:
    """Read a float dump written by :func:`write_float_dump`."""
    data = Path(path).read_bytes()
    if len(data) < 4 or data[:4] != FLOAT_DUMP_MAGIC:
        raise BadMagic(f"{path}: not a float dump (bad magic bytes)")
    if len(data) < _HEADER.size:
        raise TruncatedPayload(
            f"{path}: header needs {_HEADER.size} bytes, file has {len(data)}"
        )
    _, version, width, height, plane_count = _HEADER.unpack_from(data)
    if version != FLOAT_DUMP_VERSION:
        raise UnsupportedFormat(f"{path}: unsupported float dump version {version}")
    if plane_count != 3:
        raise UnsupportedFormat(
            f"{path}: {plane_count} planes declared, only 3 (RGB) supported"
        )
    expected = plane_count * width * height * 8
    actual = len(data) - _HEADER.size
    if actual != expected:
        raise TruncatedPayload(
            f"{path}: payload of {actual} bytes, header requires {expected}"
        )
    samples = np.frombuffer(data, dtype="<f8", offset=_HEADER.size)
    planes = samples.reshape(plane_count, height, width)
    return ColorImage(planes[0].copy(), planes[1].copy(), planes[2].copy())
