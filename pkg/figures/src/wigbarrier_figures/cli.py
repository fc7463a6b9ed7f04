"""Entry point: render <figure_kind> --in <csv> --out <image>."""

import argparse
import sys
from pathlib import Path

from .jobs import FIGURE_KINDS, FigureInputError, FigureJob
from .render import MirrorAssertionError, render


def build_parser():
    parser = argparse.ArgumentParser(
        prog="render",
        description="Render figures from wigbarrier CSV outputs",
    )
    parser.add_argument("figure_kind", choices=FIGURE_KINDS)
    parser.add_argument("--in", dest="input_csv", required=True, help="input CSV path")
    parser.add_argument("--out", dest="output_image", required=True, help="output image path")
    parser.add_argument("--dpi", type=int, default=150)
    parser.add_argument("--view-elev", type=float, default=None,
                        help="surface view elevation, degrees")
    parser.add_argument("--view-azim", type=float, default=None,
                        help="surface view azimuth, degrees")
    return parser


def main(argv=None):
    args = build_parser().parse_args(argv)
    job = FigureJob(
        input_csv=Path(args.input_csv),
        figure_kind=args.figure_kind,
        output_image=Path(args.output_image),
    )
    try:
        render(job, dpi=args.dpi, view_elev=args.view_elev, view_azim=args.view_azim)
    except (FigureInputError, MirrorAssertionError) as exc:
        print(f"render: {exc}", file=sys.stderr)
        return 1
    return 0


if __name__ == "__main__":
    sys.exit(main())
