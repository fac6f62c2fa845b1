"""Command line entry point.

    quboip run --input img.pgm --out-dir out/ [--backend both] [--noise-flip-prob 0.01]
    quboip slice --input img.pgm --out-dir planes/
    quboip edge --input plane.pbm --out-dir out/ --backend classical
    quboip compare a.pbm b.pbm [--out-dir out/]

Exit codes: 0 success, 2 usage error, 3 I/O or parse error.
"""

from __future__ import annotations

import argparse
import logging
import sys
from pathlib import Path

from .image_io import NetpbmError, load_image, save_image
from .metrics import compare
from .pipeline import PipelineConfig, prepare_gray, quantum_edges, run_pipeline, select_plane
from .edge import KernelSpec, bed_classical

EXIT_USAGE = 2
EXIT_IO = 3


def _odd_width(text):
    w = int(text)
    if w < 3 or w % 2 == 0:
        raise argparse.ArgumentTypeError(f"kernel size must be odd and >= 3, got {w}")
    return w


def _positive(text):
    n = int(text)
    if n < 1:
        raise argparse.ArgumentTypeError(f"expected a positive integer, got {n}")
    return n


def _probability(text):
    p = float(text)
    if not 0.0 <= p <= 1.0:
        raise argparse.ArgumentTypeError(f"probability must lie in [0, 1], got {p}")
    return p


def _add_kernel_args(p):
    p.add_argument("--bitplane", type=int, default=None, help="bitplane index (default: MSB)")
    p.add_argument("--kernel-size", type=_odd_width, default=3)
    p.add_argument("--passes", type=_positive, default=1)
    p.add_argument("--window-mode", choices=("prose", "matlab"), default="prose")


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="quboip", description="Quantum-Boolean image processing")
    parser.add_argument("-v", "--verbose", action="store_true")
    sub = parser.add_subparsers(dest="command", required=True)

    run = sub.add_parser("run", help="full classical vs quantum edge experiment")
    run.add_argument("--input", type=Path, required=True)
    run.add_argument("--out-dir", type=Path, required=True)
    _add_kernel_args(run)
    run.add_argument("--backend", choices=("classical", "quantum", "both"), default="both")
    run.add_argument("--noise-flip-prob", type=_probability, default=0.0)
    run.add_argument("--seed", type=int, default=0)
    run.add_argument("--emit-bitplanes", action="store_true")
    run.add_argument("--emit-error-map", action="store_true")
    run.add_argument("--no-report", dest="emit_report", action="store_false")

    sl = sub.add_parser("slice", help="write every bitplane as PBM")
    sl.add_argument("--input", type=Path, required=True)
    sl.add_argument("--out-dir", type=Path, required=True)

    edge = sub.add_parser("edge", help="run one edge detector backend")
    edge.add_argument("--input", type=Path, required=True)
    edge.add_argument("--out-dir", type=Path, required=True)
    _add_kernel_args(edge)
    edge.add_argument("--backend", choices=("classical", "quantum"), default="classical")
    edge.add_argument("--noise-flip-prob", type=_probability, default=0.0)
    edge.add_argument("--seed", type=int, default=0)

    cmp_ = sub.add_parser("compare", help="OOIE report for two PBM images")
    cmp_.add_argument("first", type=Path)
    cmp_.add_argument("second", type=Path)
    cmp_.add_argument("--out-dir", type=Path, default=None)
    cmp_.add_argument("--emit-error-map", action="store_true")
    return parser


def _cmd_run(args):
    cfg = PipelineConfig(
        input=args.input,
        out_dir=args.out_dir,
        bitplane=args.bitplane,
        kernel_size=args.kernel_size,
        passes=args.passes,
        window_mode=args.window_mode,
        backend=args.backend,
        noise_flip_prob=args.noise_flip_prob,
        seed=args.seed,
        emit_bitplanes=args.emit_bitplanes,
        emit_error_map=args.emit_error_map,
        emit_report=args.emit_report,
    )
    result = run_pipeline(cfg)
    if result.report is not None:
        sys.stdout.write(result.report.to_text())


def _cmd_slice(args):
    gray, depth = prepare_gray(load_image(args.input))
    stack, _ = select_plane(gray, depth)
    args.out_dir.mkdir(parents=True, exist_ok=True)
    for b, plane in enumerate(stack):
        save_image(plane, args.out_dir / f"plane{b}.pbm")


def _cmd_edge(args):
    gray, depth = prepare_gray(load_image(args.input))
    stack, index = select_plane(gray, depth, args.bitplane)
    kernel = KernelSpec(args.kernel_size, args.passes, args.window_mode)
    if args.backend == "classical":
        out = bed_classical(stack[index], kernel)
    else:
        out = quantum_edges(stack[index], kernel, args.noise_flip_prob, args.seed)
    args.out_dir.mkdir(parents=True, exist_ok=True)
    save_image(out, args.out_dir / f"edge_{args.backend}.pbm")


def _cmd_compare(args):
    a, b = load_image(args.first), load_image(args.second)
    if a.dtype != bool or b.dtype != bool:
        raise NetpbmError("compare expects two PBM images", 0)
    report = compare(a, b)
    if args.out_dir is not None:
        args.out_dir.mkdir(parents=True, exist_ok=True)
        report.write(
            args.out_dir / "report.txt",
            args.out_dir / "error_map.pbm" if args.emit_error_map else None,
        )
    sys.stdout.write(report.to_text())


_COMMANDS = {"run": _cmd_run, "slice": _cmd_slice, "edge": _cmd_edge, "compare": _cmd_compare}


def main(argv=None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)  # exits with status 2 on bad flags
    logging.basicConfig(level=logging.INFO if args.verbose else logging.WARNING, format="%(levelname)s %(message)s")
    try:
        _COMMANDS[args.command](args)
    except (OSError, NetpbmError) as exc:
        print(f"quboip: error: {exc}", file=sys.stderr)
        return EXIT_IO
    except ValueError as exc:
        parser.print_usage(sys.stderr)
        print(f"quboip: error: {exc}", file=sys.stderr)
        return EXIT_USAGE
    return 0


if __name__ == "__main__":
    sys.exit(main())
