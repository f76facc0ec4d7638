import struct

import numpy as np
import pytest
from PIL import Image
from numpy.testing import assert_array_equal

from wavestego import (
    BadMagic,
    ColorImage,
    NotQuantized,
    TruncatedPayload,
    UnsupportedFormat,
    load_image,
    quantize_image,
    read_float_dump,
    save_image,
    write_float_dump,
)

from conftest import random_image


class TestRasterRoundTrip:
    def test_known_2x2_pixels(self, tmp_path):
        image = ColorImage(
            [[10.0, 20.0], [30.0, 40.0]],
            [[50.0, 60.0], [70.0, 80.0]],
            [[90.0, 100.0], [110.0, 120.0]],
        )
        path = tmp_path / "known.png"
        save_image(image, path)
        loaded = load_image(path)
        for before, after in zip(image.planes, loaded.planes):
            assert_array_equal(before, after)

    @pytest.mark.parametrize("suffix", [".png", ".bmp", ".ppm", ".tiff"])
    def test_random_images_round_trip(self, tmp_path, suffix):
        rng = np.random.default_rng(179)
        image = random_image(rng, 9, 13, integer=True)
        path = tmp_path / f"random{suffix}"
        save_image(image, path)
        loaded = load_image(path)
        for before, after in zip(image.planes, loaded.planes):
            assert_array_equal(before, after)

    def test_all_zero_image(self, tmp_path):
        image = ColorImage(np.zeros((3, 3)), np.zeros((3, 3)), np.zeros((3, 3)))
        path = tmp_path / "zero.png"
        save_image(image, path)
        loaded = load_image(path)
        assert all(np.all(plane == 0.0) for plane in loaded.planes)

    def test_row_zero_is_top_of_stored_image(self, tmp_path):
        # top pixel red, bottom pixel blue
        image = ColorImage([[255.0], [0.0]], [[0.0], [0.0]], [[0.0], [255.0]])
        path = tmp_path / "orient.png"
        save_image(image, path)
        with Image.open(path) as im:
            assert im.getpixel((0, 0)) == (255, 0, 0)
            assert im.getpixel((0, 1)) == (0, 0, 255)


class TestLoadRejections:
    def test_grayscale_rejected(self, tmp_path):
        path = tmp_path / "gray.png"
        Image.new("L", (4, 4), color=128).save(path)
        with pytest.raises(UnsupportedFormat):
            load_image(path)

    def test_alpha_channel_rejected(self, tmp_path):
        path = tmp_path / "rgba.png"
        Image.new("RGBA", (4, 4), color=(1, 2, 3, 4)).save(path)
        with pytest.raises(UnsupportedFormat):
            load_image(path)

    def test_palette_rejected(self, tmp_path):
        path = tmp_path / "palette.png"
        Image.new("RGB", (4, 4), color=(9, 9, 9)).convert("P").save(path)
        with pytest.raises(UnsupportedFormat):
            load_image(path)

    def test_lossy_format_rejected(self, tmp_path):
        path = tmp_path / "photo.jpg"
        Image.new("RGB", (8, 8), color=(10, 20, 30)).save(path, quality=95)
        with pytest.raises(UnsupportedFormat):
            load_image(path)

    def test_unrecognized_bytes_rejected(self, tmp_path):
        path = tmp_path / "junk.png"
        path.write_bytes(b"this is not an image at all")
        with pytest.raises(UnsupportedFormat):
            load_image(path)

    def test_missing_file_raises_oserror(self, tmp_path):
        with pytest.raises(OSError):
            load_image(tmp_path / "absent.png")


class TestSaveRejections:
    def test_fractional_samples_rejected(self, tmp_path):
        image = ColorImage([[127.5]], [[0.0]], [[0.0]])
        with pytest.raises(NotQuantized):
            save_image(image, tmp_path / "bad.png")

    @pytest.mark.parametrize("value", [-1.0, 256.0, float("nan")])
    def test_out_of_range_samples_rejected(self, tmp_path, value):
        image = ColorImage([[value]], [[0.0]], [[0.0]])
        with pytest.raises(NotQuantized):
            save_image(image, tmp_path / "bad.png")

    def test_lossy_suffix_rejected(self, tmp_path):
        image = ColorImage([[1.0]], [[2.0]], [[3.0]])
        with pytest.raises(UnsupportedFormat):
            save_image(image, tmp_path / "out.jpg")


class TestFloatDump:
    def test_round_trip_is_bit_exact(self, tmp_path):
        rng = np.random.default_rng(181)
        image = ColorImage(
            rng.uniform(-1e6, 1e6, size=(5, 7)),
            rng.uniform(-1e-9, 1e-9, size=(5, 7)),
            rng.standard_normal((5, 7)) * 1e300,
        )
        path = tmp_path / "planes.stgf"
        write_float_dump(image, path)
        loaded = read_float_dump(path)
        for before, after in zip(image.planes, loaded.planes):
            assert_array_equal(before, after)
        assert before.dtype == after.dtype == np.float64

    def test_quantized_stego_survives_dump(self, tmp_path):
        rng = np.random.default_rng(191)
        image = quantize_image(random_image(rng, 4, 4))
        path = tmp_path / "q.stgf"
        write_float_dump(image, path)
        loaded = read_float_dump(path)
        for before, after in zip(image.planes, loaded.planes):
            assert_array_equal(before, after)

    def test_bad_magic_rejected(self, tmp_path):
        path = tmp_path / "bad.stgf"
        path.write_bytes(b"XXXX" + bytes(32))
        with pytest.raises(BadMagic):
            read_float_dump(path)

    def test_truncated_payload_rejected(self, tmp_path):
        # header declares 2x2x3, which needs 96 payload bytes; give 95
        path = tmp_path / "short.stgf"
        header = struct.pack("<4sHIIB", b"STGF", 1, 2, 2, 3)
        path.write_bytes(header + bytes(95))
        with pytest.raises(TruncatedPayload):
            read_float_dump(path)

    def test_oversized_payload_rejected(self, tmp_path):
        path = tmp_path / "long.stgf"
        header = struct.pack("<4sHIIB", b"STGF", 1, 2, 2, 3)
        path.write_bytes(header + bytes(97))
        with pytest.raises(TruncatedPayload):
            read_float_dump(path)

    def test_truncated_header_rejected(self, tmp_path):
        path = tmp_path / "stub.stgf"
        path.write_bytes(b"STGF\x01")
        with pytest.raises(TruncatedPayload):
            read_float_dump(path)

    def test_unknown_version_rejected(self, tmp_path):
        path = tmp_path / "v2.stgf"
        header = struct.pack("<4sHIIB", b"STGF", 2, 1, 1, 3)
        path.write_bytes(header + bytes(24))
        with pytest.raises(UnsupportedFormat):
            read_float_dump(path)

    def test_header_layout_is_frozen(self, tmp_path):
        image = ColorImage([[1.0, 2.0]], [[3.0, 4.0]], [[5.0, 6.0]])
        path = tmp_path / "layout.stgf"
        write_float_dump(image, path)
        data = path.read_bytes()
        assert data[:4] == b"STGF"
        version, width, height, planes = struct.unpack("<HIIB", data[4:15])
        assert (version, width, height, planes) == (1, 2, 1, 3)
        assert len(data) == 15 + 3 * 2 * 1 * 8
        first_sample = struct.unpack("<d", data[15:23])[0]
        assert first_sample == 1.0
