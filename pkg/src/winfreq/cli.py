"""Command-line front end for the benchmark harness.

Subcommands: rmse, window-sweep, throughput, singles, gen-zipf,
gap-table.  Any flag can instead come from a JSON config file passed
with --config (keys are the long flag names, dashes or underscores);
explicit flags win over config values.

Oracle specs: perfect | gaussian:SIGMA | flip:P | constant:true|false |
file:PATH.  Eps lists accept fractions ("1/32") or decimals.
"""

from __future__ import annotations

import argparse
import json
import logging
import sys
from fractions import Fraction

from . import bench
from .oracles import NO_NEXT, build_gap_table
from .workload import gen_zipf, read_trace


def parse_eps_list(text: str) -> list[float]:
    out = []
    for tok in text.split(","):
        tok = tok.strip()
        if not tok:
            continue
        out.append(float(Fraction(tok)))
    if not out:
        raise argparse.ArgumentTypeError("empty eps list")
    return out


def parse_int_list(text: str) -> list[int]:
    out = [int(tok) for tok in text.split(",") if tok.strip()]
    if not out:
        raise argparse.ArgumentTypeError("empty list")
    return out


def parse_variant_list(text: str) -> list[str]:
    out = [tok.strip() for tok in text.split(",") if tok.strip()]
    for v in out:
        if v not in bench.VARIANTS:
            raise argparse.ArgumentTypeError(f"unknown variant: {v!r}")
    if not out:
        raise argparse.ArgumentTypeError("empty variant list")
    return out


def parse_zipf(text: str) -> tuple[int, int, float]:
    parts = text.split(",")
    if len(parts) != 3:
        raise argparse.ArgumentTypeError("zipf spec is UNIVERSE,LENGTH,ALPHA")
    return int(parts[0]), int(parts[1]), float(parts[2])


def _add_workload_flags(p: argparse.ArgumentParser) -> None:
    p.add_argument("--trace", help="trace file path")
    p.add_argument("--format", choices=("lines", "pairs"), default=None,
                   help="trace file format (default lines)")
    p.add_argument("--zipf", type=parse_zipf, default=None,
                   help="synthetic workload UNIVERSE,LENGTH,ALPHA (alternative to --trace)")


def _add_grid_flags(p: argparse.ArgumentParser) -> None:
    _add_workload_flags(p)
    p.add_argument("--w", type=int, help="window size (arrivals)")
    p.add_argument("--eps", type=parse_eps_list, help="comma list, fractions allowed: 1/16,1/32")
    p.add_argument("--variant", type=parse_variant_list, help="comma list from: wcss,lwcss")
    p.add_argument("--oracle", help="oracle spec (default perfect)")
    p.add_argument("--seeds", type=parse_int_list, help="comma list of seeds (default 0,1,2,3,4)")
    p.add_argument("--id-bytes", type=int, default=None, help="bytes per item id in the memory model")
    p.add_argument("--out", help="output CSV path")


def build_parser() -> argparse.ArgumentParser:
    root = argparse.ArgumentParser(prog="winfreq", description=__doc__,
                                   formatter_class=argparse.RawDescriptionHelpFormatter)
    root.add_argument("--config", help="JSON file of flag defaults (key = flag name)")
    root.add_argument("-v", "--verbose", action="store_true", help="debug logging")
    sub = root.add_subparsers(dest="command", required=True)

    p = sub.add_parser("rmse", help="accuracy grid: one CSV row per (variant, eps, seed)")
    _add_grid_flags(p)

    p = sub.add_parser("window-sweep", help="rmse grid repeated across window sizes")
    _add_grid_flags(p)
    p.add_argument("--w-list", type=parse_int_list, help="comma list of window sizes")

    p = sub.add_parser("throughput", help="timed update/query passes (median of 3)")
    _add_grid_flags(p)
    p.add_argument("--ops", type=int, default=None,
                   help=f"operations per pass (min {bench.MIN_THROUGHPUT_OPS})")

    p = sub.add_parser("singles", help="singles ratio across frame sizes")
    _add_workload_flags(p)
    p.add_argument("--seed", type=int, default=0, help="seed for --zipf workloads")
    p.add_argument("--frames", type=parse_int_list, help="comma list of frame sizes")
    p.add_argument("--denominator", choices=("distinct", "arrivals"), default=None)
    p.add_argument("--out", help="output CSV path")

    p = sub.add_parser("gen-zipf", help="write a synthetic Zipf trace (lines format)")
    p.add_argument("--universe", type=int, required=True)
    p.add_argument("--length", type=int, required=True)
    p.add_argument("--alpha", type=float, required=True)
    p.add_argument("--seed", type=int, default=0)
    p.add_argument("--out", required=True)

    p = sub.add_parser("gap-table", help="next-occurrence gaps for a trace, one per line (-1 = none)")
    p.add_argument("--trace", required=True)
    p.add_argument("--format", choices=("lines", "pairs"), default="lines")
    p.add_argument("--out", required=True)
    return root


def apply_config_file(args: argparse.Namespace, parser: argparse.ArgumentParser) -> None:
    """Fill unset flags from the JSON config, parsing strings through the
    same converters the flags use."""
    if not args.config:
        return
    with open(args.config, "r", encoding="utf-8") as fh:
        raw = json.load(fh)
    if not isinstance(raw, dict):
        raise SystemExit(f"{args.config}: config must be a JSON object")
    converters = {
        "eps": lambda v: parse_eps_list(v) if isinstance(v, str) else [float(x) for x in v],
        "variant": lambda v: parse_variant_list(v) if isinstance(v, str) else list(v),
        "seeds": lambda v: parse_int_list(v) if isinstance(v, str) else [int(x) for x in v],
        "w_list": lambda v: parse_int_list(v) if isinstance(v, str) else [int(x) for x in v],
        "frames": lambda v: parse_int_list(v) if isinstance(v, str) else [int(x) for x in v],
        "zipf": lambda v: parse_zipf(v) if isinstance(v, str) else (int(v[0]), int(v[1]), float(v[2])),
    }
    for key, value in raw.items():
        attr = key.replace("-", "_")
        if not hasattr(args, attr):
            raise SystemExit(f"{args.config}: unknown config key {key!r}")
        if getattr(args, attr) is None or getattr(args, attr) is False:
            conv = converters.get(attr)
            setattr(args, attr, conv(value) if conv else value)


def _grid_config(args: argparse.Namespace) -> bench.ExperimentConfig:
    if args.w is None:
        raise SystemExit("missing --w")
    if args.eps is None:
        raise SystemExit("missing --eps")
    zipf = args.zipf
    trace = args.trace
    if trace is None and zipf is None:
        raise SystemExit("provide --trace or --zipf")
    if trace is not None and zipf is not None:
        raise SystemExit("provide only one of --trace / --zipf")
    return bench.ExperimentConfig(
        window=args.w,
        eps=args.eps,
        variants=args.variant or list(bench.VARIANTS),
        oracle=args.oracle or "perfect",
        seeds=args.seeds or [0, 1, 2, 3, 4],
        trace=trace,
        trace_format=args.format or "lines",
        zipf=zipf,
        out=args.out,
        id_bytes=args.id_bytes if args.id_bytes is not None else 8,
    )


def main(argv: list[str] | None = None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    logging.basicConfig(
        level=logging.DEBUG if args.verbose else logging.INFO,
        format="%(levelname)s %(name)s: %(message)s",
    )
    apply_config_file(args, parser)

    if args.command == "rmse":
        rows = bench.rmse_run(_grid_config(args))
    elif args.command == "window-sweep":
        if args.w_list is None:
            raise SystemExit("missing --w-list")
        config = _grid_config(args) if args.w is not None else None
        if config is None:
            args.w = args.w_list[0]
            config = _grid_config(args)
        rows = bench.window_sweep(config, args.w_list)
    elif args.command == "throughput":
        rows = bench.throughput_run(_grid_config(args), args.ops or bench.MIN_THROUGHPUT_OPS)
    elif args.command == "singles":
        if args.frames is None:
            raise SystemExit("missing --frames")
        if args.trace is not None:
            trace = read_trace(args.trace, args.format or "lines")
        elif args.zipf is not None:
            universe, length, alpha = args.zipf
            trace = gen_zipf(universe, length, alpha, args.seed)
        else:
            raise SystemExit("provide --trace or --zipf")
        results = bench.singles_sweep(trace, args.frames, args.denominator or "distinct")
        if args.out:
            bench.write_singles_csv(results, args.out)
        for frame_size, ratio in results:
            print(f"{frame_size},{ratio:.6f}")
        return 0
    elif args.command == "gen-zipf":
        trace = gen_zipf(args.universe, args.length, args.alpha, args.seed)
        with open(args.out, "w", encoding="utf-8", newline="\n") as fh:
            fh.write("\n".join(trace) + "\n")
        print(f"wrote {len(trace)} arrivals to {args.out}")
        return 0
    elif args.command == "gap-table":
        trace = read_trace(args.trace, args.format)
        table = build_gap_table(trace)
        with open(args.out, "w", encoding="utf-8", newline="\n") as fh:
            for gap in table.gaps.tolist():
                fh.write(f"{-1 if gap == NO_NEXT else gap}\n")
        print(f"wrote {len(table)} gaps to {args.out}")
        return 0
    else:  # pragma: no cover
        raise SystemExit(f"unknown command {args.command!r}")

    if args.out:
        print(f"wrote {len(rows)} rows to {args.out}")
    else:
        print(bench.CSV_HEADER)
        for row in rows:
            print(",".join(row.csv_values()))
    return 0


if __name__ == "__main__":
    sys.exit(main())
