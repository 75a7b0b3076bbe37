"""Standalone figure-rendering command.

Mirrors the `arago` exit-code contract: 0 success, 2 invalid input,
3 numerical failure (sidecar mismatch), 4 I/O failure.
"""

from __future__ import annotations

import argparse
import sys

from .render import FigureSpec, SidecarMismatchError, render_profile

EXIT_OK = 0
EXIT_INVALID_INPUT = 2
EXIT_NUMERICAL = 3
EXIT_IO = 4


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="arago-render",
        description="Render a diffraction-profile CSV into an annotated image.",
    )
    parser.add_argument("--input", required=True, help="profile CSV path")
    parser.add_argument(
        "--scenario", default=None,
        help="optional sidecar JSON with a reference fwhm_m to cross-check",
    )
    parser.add_argument("--output", required=True, help="output image path (raster)")
    parser.add_argument(
        "--no-fwhm", action="store_true",
        help="skip the FWHM span annotation",
    )
    return parser


def main(argv: list[str] | None = None) -> int:
    args = build_parser().parse_args(argv)
    spec = FigureSpec(
        input_csv=args.input,
        output_image=args.output,
        scenario_json=args.scenario,
        annotate_fwhm=not args.no_fwhm,
    )
    try:
        result = render_profile(spec)
    except SidecarMismatchError as exc:
        print(f"arago-render: numerical failure: {exc}", file=sys.stderr)
        return EXIT_NUMERICAL
    except ValueError as exc:
        print(f"arago-render: invalid input: {exc}", file=sys.stderr)
        return EXIT_INVALID_INPUT
    except OSError as exc:
        print(f"arago-render: I/O failure: {exc}", file=sys.stderr)
        return EXIT_IO
    for warning in result.warnings:
        print(f"arago-render: warning: {warning}", file=sys.stderr)
    if result.annotation is not None:
        print(f"{result.output_image}: {result.annotation}")
    else:
        print(f"{result.output_image}: rendered without FWHM annotation")
    return EXIT_OK


if __name__ == "__main__":
    sys.exit(main())
