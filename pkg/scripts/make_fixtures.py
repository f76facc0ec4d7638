#!/usr/bin/env python3
"""Regenerate the natural-photograph fixture pair in fixtures/.

Crops two public-domain photographs bundled with scikit-image to
256x256 and writes them through the package's own saver, so the files
are deterministic and match the loader's byte-exactness contract.
Needs scikit-image, which is a build-time tool only, not a runtime
dependency.
"""

from pathlib import Path

import skimage.data

from wavestego import ColorImage, save_image

FIXTURES = Path(__file__).resolve().parent.parent / "fixtures"


def to_color_image(pixels):
    rgb = pixels.astype(float)
    return ColorImage(rgb[:, :, 0], rgb[:, :, 1], rgb[:, :, 2])


def main():
    FIXTURES.mkdir(exist_ok=True)

    astronaut = skimage.data.astronaut()  # 512x512, portrait photograph
    cover = astronaut[64:320, 128:384]
    save_image(to_color_image(cover), FIXTURES / "cover.png")

    chelsea = skimage.data.chelsea()  # 300x451, cat photograph
    secret = chelsea[22:278, 100:356]
    save_image(to_color_image(secret), FIXTURES / "secret.png")

    print(f"wrote {FIXTURES / 'cover.png'} and {FIXTURES / 'secret.png'}")


if __name__ == "__main__":
    main()
