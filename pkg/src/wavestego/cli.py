"""Command-line surface: embed, extract, metrics, and the alpha sweep.

Exit codes: 0 success, 2 usage error, 3 dimension mismatch or odd
dimensions, 4 I/O or file format error.
"""

import argparse
import csv
import math
import sys
from dataclasses import dataclass

from .errors import (
    AlphaUnderflow,
    BadMagic,
    DimensionMismatch,
    InvalidAlpha,
    InvalidBandMask,
    NotQuantized,
    OddDimension,
    TooSmall,
    TruncatedPayload,
    UnsupportedFormat,
)
from .imageio import load_image, read_float_dump, save_image, write_float_dump
from .metrics import MetricsReport, compare_images
from .planes import ColorImage, quantize_image
from .stego import ALL_BANDS, StegoParams, embed, extract

EXIT_OK = 0
EXIT_USAGE = 2
EXIT_DIMENSION = 3
EXIT_IO = 4

SWEEP_CSV_HEADER = (
    "alpha",
    "psnr_cover_stego",
    "psnr_secret_extracted",
    "mse_cover_stego",
    "mse_secret_extracted",
    "path",
)

DEFAULT_ALPHAS = "0.1:0.9:0.1"


@dataclass
class SweepRow:
    """One alpha's quality numbers for both sides of the trade-off."""

    alpha: float
    psnr_cover_stego: float
    psnr_secret_extracted: float
    mse_cover_stego: float
    mse_secret_extracted: float
    path: str


def run_sweep(
    cover: ColorImage,
    secret: ColorImage,
    alphas,
    levels: int = 1,
    band_mask=ALL_BANDS,
    renormalize: bool = False,
    path: str = "quantized",
) -> list[SweepRow]:
    """Embed and extract at each alpha, measuring both PSNR columns.

    ``path`` selects whether extraction (and the stego-side metric) uses
    the quantized 8-bit stego or the in-memory real-valued one. The
    extracted image is always compared in its quantized form, the form
    the extract command actually delivers; on the float path with
    renormalization that makes exact recovery read as an infinite PSNR.
    """
    if path not in ("quantized", "float"):
        raise ValueError(f"path must be 'quantized' or 'float', got {path!r}")
    rows = []
    for alpha in alphas:
        params = StegoParams(
            alpha=alpha, levels=levels, band_mask=band_mask, renormalize=renormalize
        )
        output = embed(cover, secret, params)
        stego = output.stego_quantized if path == "quantized" else output.stego
        extracted = quantize_image(extract(stego, cover, params))
        cover_stego = compare_images(cover, stego)
        secret_extracted = compare_images(secret, extracted)
        rows.append(
            SweepRow(
                alpha=alpha,
                psnr_cover_stego=cover_stego.psnr_overall,
                psnr_secret_extracted=secret_extracted.psnr_overall,
                mse_cover_stego=cover_stego.mse_overall,
                mse_secret_extracted=secret_extracted.mse_overall,
                path=path,
            )
        )
    return rows


def _fmt(value: float) -> str:
    return "inf" if math.isinf(value) else f"{value:.4f}"


def _alpha_arg(text: str) -> float:
    try:
        value = float(text)
    except ValueError:
        raise argparse.ArgumentTypeError(f"not a number: {text!r}")
    if not 0.0 < value < 1.0:
        raise argparse.ArgumentTypeError("alpha must be strictly between 0 and 1")
    return value


def _levels_arg(text: str) -> int:
    try:
        value = int(text)
    except ValueError:
        raise argparse.ArgumentTypeError(f"not an integer: {text!r}")
    if value < 1:
        raise argparse.ArgumentTypeError("levels must be a positive integer")
    return value


def _bands_arg(text: str) -> frozenset[str]:
    names = frozenset(part.strip().upper() for part in text.split(",") if part.strip())
    if not names:
        raise argparse.ArgumentTypeError("band list must not be empty")
    unknown = names - ALL_BANDS
    if unknown:
        raise argparse.ArgumentTypeError(
            f"unknown band(s) {sorted(unknown)}; choose from LL,LH,HL,HH"
        )
    return names


def _alphas_arg(text: str) -> list[float]:
    parts = text.split(":")
    if len(parts) != 3:
        raise argparse.ArgumentTypeError("alpha range must look like start:stop:step")
    try:
        start, stop, step = (float(part) for part in parts)
    except ValueError:
        raise argparse.ArgumentTypeError(f"non-numeric alpha range: {text!r}")
    if step <= 0.0:
        raise argparse.ArgumentTypeError("alpha step must be positive")
    count = math.floor((stop - start) / step + 1e-9) + 1
    if count < 1:
        raise argparse.ArgumentTypeError("alpha range is empty")
    alphas = [round(start + i * step, 12) for i in range(count)]
    if alphas[0] <= 0.0 or alphas[-1] >= 1.0:
        raise argparse.ArgumentTypeError("alpha range must stay strictly inside (0, 1)")
    return alphas


def _crop_even(image: ColorImage, multiple: int) -> ColorImage:
    """Crop from the bottom/right so both dimensions divide ``multiple``."""
    height = (image.height // multiple) * multiple
    width = (image.width // multiple) * multiple
    if height == 0 or width == 0:
        raise TooSmall(
            f"image of {image.width}x{image.height} is too small to crop to "
            f"a multiple of {multiple}"
        )
    if (height, width) == (image.height, image.width):
        return image
    return ColorImage(
        image.r[:height, :width], image.g[:height, :width], image.b[:height, :width]
    )


def cmd_embed(args) -> int:
    cover = load_image(args.cover)
    secret = load_image(args.secret)
    if args.crop_even:
        multiple = 2**args.levels
        cover = _crop_even(cover, multiple)
        secret = _crop_even(secret, multiple)
    params = StegoParams(alpha=args.alpha, levels=args.levels, band_mask=args.bands)
    output = embed(cover, secret, params)
    save_image(output.stego_quantized, args.out)
    if args.float_out:
        write_float_dump(output.stego, args.float_out)
    return EXIT_OK


def cmd_extract(args) -> int:
    stego = read_float_dump(args.float_in) if args.float_in else load_image(args.stego)
    cover = load_image(args.cover)
    params = StegoParams(
        alpha=args.alpha,
        levels=args.levels,
        band_mask=args.bands,
        renormalize=args.renormalize,
    )
    secret = extract(stego, cover, params)
    save_image(quantize_image(secret), args.out)
    return EXIT_OK


def _print_report(report: MetricsReport, output_format: str) -> None:
    labels = ("R", "G", "B")
    rows = [
        (label, report.mse_per_channel[i], report.psnr_per_channel[i])
        for i, label in enumerate(labels)
    ]
    rows.append(("overall", report.mse_overall, report.psnr_overall))
    if output_format == "csv":
        writer = csv.writer(sys.stdout, lineterminator="\n")
        writer.writerow(("channel", "mse", "psnr_db"))
        for label, mse_value, psnr_value in rows:
            writer.writerow((label, _fmt(mse_value), _fmt(psnr_value)))
    else:
        print(f"{'channel':<8} {'mse':>14} {'psnr_db':>10}")
        for label, mse_value, psnr_value in rows:
            print(f"{label:<8} {_fmt(mse_value):>14} {_fmt(psnr_value):>10}")


def cmd_metrics(args) -> int:
    reference = load_image(args.ref)
    test = load_image(args.test)
    _print_report(compare_images(reference, test), args.format)
    return EXIT_OK


def cmd_sweep(args) -> int:
    cover = load_image(args.cover)
    secret = load_image(args.secret)
    rows = run_sweep(
        cover,
        secret,
        args.alphas,
        levels=args.levels,
        band_mask=args.bands,
        renormalize=args.renormalize,
        path=args.path,
    )
    with open(args.out, "w", newline="") as handle:
        writer = csv.writer(handle, lineterminator="\n")
        writer.writerow(SWEEP_CSV_HEADER)
        for row in rows:
            writer.writerow(
                (
                    f"{row.alpha:g}",
                    _fmt(row.psnr_cover_stego),
                    _fmt(row.psnr_secret_extracted),
                    _fmt(row.mse_cover_stego),
                    _fmt(row.mse_secret_extracted),
                    row.path,
                )
            )
    best_stego = max(rows, key=lambda row: row.psnr_cover_stego)
    best_secret = max(rows, key=lambda row: row.psnr_secret_extracted)
    print(f"best psnr_cover_stego at alpha={best_stego.alpha:g}")
    print(f"best psnr_secret_extracted at alpha={best_secret.alpha:g}")
    return EXIT_OK


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="wavestego",
        description="Hide a color image inside another by alpha-blending "
        "Haar DWT sub-bands, and recover it given the cover and alpha.",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    embed_p = sub.add_parser("embed", help="hide a secret image inside a cover image")
    embed_p.add_argument("--cover", required=True, help="cover image path")
    embed_p.add_argument("--secret", required=True, help="secret image path (same size)")
    embed_p.add_argument("--alpha", required=True, type=_alpha_arg,
                         help="blending weight on the secret, in (0, 1)")
    embed_p.add_argument("--out", required=True, help="output path for the stego image")
    embed_p.add_argument("--levels", type=_levels_arg, default=1,
                         help="wavelet decomposition levels (default 1)")
    embed_p.add_argument("--bands", type=_bands_arg, default=ALL_BANDS,
                         help="comma list of sub-bands to blend (default LL,LH,HL,HH)")
    embed_p.add_argument("--float-out", metavar="PATH",
                         help="also write the unquantized stego as a float dump")
    embed_p.add_argument("--crop-even", action="store_true",
                         help="pre-crop inputs (bottom/right) to dimensions "
                         "divisible by 2**levels instead of erroring")
    embed_p.set_defaults(func=cmd_embed)

    extract_p = sub.add_parser("extract", help="recover the secret from a stego image")
    stego_src = extract_p.add_mutually_exclusive_group(required=True)
    stego_src.add_argument("--stego", help="stego image path")
    stego_src.add_argument("--float-in", metavar="PATH",
                           help="read the unquantized stego from a float dump instead")
    extract_p.add_argument("--cover", required=True, help="original cover image path")
    extract_p.add_argument("--alpha", required=True, type=_alpha_arg,
                           help="alpha used at embed time")
    extract_p.add_argument("--out", required=True, help="output path for the secret")
    extract_p.add_argument("--levels", type=_levels_arg, default=1)
    extract_p.add_argument("--bands", type=_bands_arg, default=ALL_BANDS)
    extract_p.add_argument("--renormalize", action="store_true",
                           help="divide recovered coefficients by alpha to restore "
                           "the secret's original scale")
    extract_p.set_defaults(func=cmd_extract)

    metrics_p = sub.add_parser("metrics", help="MSE/PSNR between two images")
    metrics_p.add_argument("--ref", required=True, help="reference image path")
    metrics_p.add_argument("--test", required=True, help="image to compare against it")
    metrics_p.add_argument("--format", choices=("text", "csv"), default="text")
    metrics_p.set_defaults(func=cmd_metrics)

    sweep_p = sub.add_parser("sweep",
                             help="embed/extract across an alpha range, writing a CSV")
    sweep_p.add_argument("--cover", required=True)
    sweep_p.add_argument("--secret", required=True)
    sweep_p.add_argument("--alphas", type=_alphas_arg, default=DEFAULT_ALPHAS,
                         help=f"alpha range start:stop:step (default {DEFAULT_ALPHAS})")
    sweep_p.add_argument("--out", required=True, help="output CSV path")
    sweep_p.add_argument("--path", choices=("quantized", "float"), default="quantized",
                         help="extract from the 8-bit stego or the real-valued one")
    sweep_p.add_argument("--levels", type=_levels_arg, default=1)
    sweep_p.add_argument("--bands", type=_bands_arg, default=ALL_BANDS)
    sweep_p.add_argument("--renormalize", action="store_true")
    sweep_p.set_defaults(func=cmd_sweep)

    return parser


def main(argv=None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:  # argparse already printed usage/help
        return int(exc.code or 0)
    try:
        return args.func(args)
    except (InvalidAlpha, InvalidBandMask, AlphaUnderflow) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_USAGE
    except (OddDimension, TooSmall, DimensionMismatch) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_DIMENSION
    except (UnsupportedFormat, NotQuantized, BadMagic, TruncatedPayload, OSError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_IO


if __name__ == "__main__":
    sys.exit(main())
