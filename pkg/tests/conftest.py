from pathlib import Path

import numpy as np
import pytest

from wavestego import ColorImage, load_image

FIXTURES_DIR = Path(__file__).resolve().parent.parent / "fixtures"


def random_plane(rng, height, width, low=0.0, high=255.0):
    return rng.uniform(low, high, size=(height, width))


def random_image(rng, height, width, integer=False):
    """Random test image; ``integer=True`` mimics an 8-bit file's planes."""
    if integer:
        data = rng.integers(0, 256, size=(3, height, width)).astype(np.float64)
    else:
        data = rng.uniform(0.0, 255.0, size=(3, height, width))
    return ColorImage(data[0], data[1], data[2])


@pytest.fixture(scope="session")
def cover_image():
    return load_image(FIXTURES_DIR / "cover.png")


@pytest.fixture(scope="session")
def secret_image():
    return load_image(FIXTURES_DIR / "secret.png")
