"""Command line for rendering diraczb output files into figures.

Exit codes: 0 success, 2 bad inputs/usage.
"""

import argparse
import sys
from pathlib import Path

from .io import InputError
from .render import PANELS, FigureSpec, render_scan_figure, render_trace_figure


def _build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="zbfigures",
                                     description="render diraczb CSV/JSON outputs")
    sub = parser.add_subparsers(dest="command", required=True)

    trace = sub.add_parser("trace", help="stacked velocity panels with period markers")
    trace.add_argument("--trace", required=True, type=Path, help="trace.csv path")
    trace.add_argument("--metadata", required=True, type=Path, help="metadata.json path")
    trace.add_argument("--revivals", type=Path, help="revivals.json (annotates the revival panel)")
    trace.add_argument("--panels", nargs="+", default=list(PANELS),
                       help=f"panels to stack, from {sorted(PANELS)}")
    trace.add_argument("--out", required=True, type=Path, help="output image (.png/.svg)")

    scan = sub.add_parser("scan", help="time scales vs frequency (log-log)")
    scan.add_argument("--scan", required=True, type=Path, help="scan.csv path")
    scan.add_argument("--out", required=True, type=Path, help="output image (.png/.svg)")
    return parser


def main(argv=None) -> int:
    args = _build_parser().parse_args(argv)
    try:
        if args.command == "trace":
            spec = FigureSpec(trace_csv=args.trace, metadata_json=args.metadata,
                              panels=tuple(args.panels), output=args.out,
                              revivals_json=args.revivals)
            path = render_trace_figure(spec)
        else:
            path = render_scan_figure(args.scan, args.out)
    except (InputError, OSError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2
    print(f"wrote {path}")
    return 0


if __name__ == "__main__":
    sys.exit(main())
