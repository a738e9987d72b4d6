"""Command-line interface.

Subcommands: ``run`` computes one reduced basis, ``verify`` additionally
checks it and signals failures through the exit code, ``bench table1`` runs
the full ordering x backend matrix over the corpus and ``bench permute``
sweeps all variable orders of one system.

Exit codes: 0 success, 1 verification failure, 2 input error, 3 capacity
error (a 64-bit coefficient or prime-image overflow while running).
Deterministic results go to stdout; timings and progress go to stderr.
"""

from __future__ import annotations

import argparse
import json
import sys
from pathlib import Path

from . import bench
from .buchberger import compute_groebner
from .corpus import (
    CORPUS_NAMES,
    builtin,
    first_appearance_order,
    parse_system,
    permute_vars,
)
from .errors import CapacityError, InputError, PrimeGBError
from .powerprods import Ordering
from .rationals import Backend
from .verify import verify_result

_ORDERINGS = {o.value: o for o in Ordering}
_BACKENDS = {b.value: b for b in Backend}

EXIT_OK = 0
EXIT_VERIFY_FAILED = 1
EXIT_INPUT_ERROR = 2
EXIT_CAPACITY_ERROR = 3


def _add_selectors(parser):
    src = parser.add_mutually_exclusive_group(required=True)
    src.add_argument("--system", help=f"corpus system ({', '.join(CORPUS_NAMES)})")
    src.add_argument("--input", help="path to a polynomial-system text file")
    parser.add_argument(
        "--var-order",
        help="variable permutation, e.g. 'acb' (default: declared order)",
    )
    parser.add_argument(
        "--ordering", choices=sorted(_ORDERINGS), default="prime",
        help="term order (default: prime)",
    )
    parser.add_argument(
        "--backend", choices=sorted(_BACKENDS), default="big",
        help="coefficient arithmetic (default: big)",
    )


def _load_system(args):
    if args.system:
        system = builtin(args.system)
    else:
        text = Path(args.input).read_text("utf-8")
        system = parse_system(
            text, first_appearance_order(text), name=Path(args.input).stem
        )
    if args.var_order:
        system = permute_vars(system, args.var_order)
    return system


def _cmd_run(args):
    system = _load_system(args)
    result = compute_groebner(
        system, _ORDERINGS[args.ordering], _BACKENDS[args.backend]
    )
    print(
        f"system: {system.name}  variables: {system.vartable.order_label}  "
        f"ordering: {args.ordering}  backend: {args.backend}"
    )
    print(f"basis size: {len(result.basis)}")
    print(f"stats: {result.stats.summary()}")
    if args.print_basis:
        print(result.render())
    print(f"duration: {result.duration_ms:.2f} ms", file=sys.stderr)
    return EXIT_OK


def _cmd_verify(args):
    system = _load_system(args)
    result = compute_groebner(
        system, _ORDERINGS[args.ordering], _BACKENDS[args.backend]
    )
    report = verify_result(system, result)
    if args.json:
        payload = report.to_dict()
        payload["system"] = system.name
        payload["basis_size"] = len(result.basis)
        print(json.dumps(payload, indent=2))
    else:
        print(f"system: {system.name}  basis size: {len(result.basis)}")
        print(report.render())
    return EXIT_OK if report.ok else EXIT_VERIFY_FAILED


def _bench_config(args, systems=None):
    return bench.BenchConfig(
        systems=tuple(systems) if systems else CORPUS_NAMES,
        repeats=args.repeats,
        timeout_s=args.timeout,
    )


def _emit(records, fmt, renderer, output):
    text = bench.records_to_csv(records) if fmt == "csv" else renderer(records)
    if output:
        Path(output).write_text(text, "utf-8")
        print(f"wrote {output}", file=sys.stderr)
    else:
        print(text, end="")


def _cmd_bench_table1(args):
    systems = args.systems.split(",") if args.systems else None
    records = []
    config = _bench_config(args, systems)
    for name in config.systems:
        for backend in config.backends:
            for ordering in config.orderings:
                print(
                    f"running {name} [{ordering.value}/{backend.value}] ...",
                    file=sys.stderr,
                )
                records.append(
                    bench.run_case(
                        name, ordering, backend,
                        repeats=config.repeats, timeout_s=config.timeout_s,
                    )
                )
    _emit(records, args.format, bench.render_matrix_markdown, args.output)
    return EXIT_OK


def _cmd_bench_permute(args):
    config = _bench_config(args)
    records = bench.run_permutations(args.system, config)
    _emit(records, args.format, bench.render_permutations_markdown, args.output)
    return EXIT_OK


def build_parser():
    parser = argparse.ArgumentParser(
        prog="primegb",
        description="Reduced Gröbner bases with interchangeable power-product "
        "representations, plus a benchmark harness.",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    p_run = sub.add_parser("run", help="compute one reduced basis")
    _add_selectors(p_run)
    p_run.add_argument("--print-basis", action="store_true")
    p_run.set_defaults(func=_cmd_run)

    p_verify = sub.add_parser("verify", help="compute and independently check")
    _add_selectors(p_verify)
    p_verify.add_argument("--json", action="store_true", help="structured report")
    p_verify.set_defaults(func=_cmd_verify)

    p_bench = sub.add_parser("bench", help="benchmark harness")
    bench_sub = p_bench.add_subparsers(dest="bench_command", required=True)

    def add_bench_opts(p):
        p.add_argument("--repeats", type=int, default=5)
        p.add_argument("--timeout", type=float, default=600.0, help="seconds per run")
        p.add_argument("--format", choices=("csv", "md"), default="md")
        p.add_argument("--output", help="write to file instead of stdout")

    p_t1 = bench_sub.add_parser(
        "table1", help="ordering x backend matrix over the corpus"
    )
    add_bench_opts(p_t1)
    p_t1.add_argument("--systems", help="comma-separated subset of the corpus")
    p_t1.set_defaults(func=_cmd_bench_table1)

    p_perm = bench_sub.add_parser(
        "permute", help="all variable orders of one system"
    )
    add_bench_opts(p_perm)
    p_perm.add_argument("--system", required=True)
    p_perm.set_defaults(func=_cmd_bench_permute)

    return parser


def main(argv=None):
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        return args.func(args)
    except CapacityError as exc:
        print(f"capacity error: {exc}", file=sys.stderr)
        return EXIT_CAPACITY_ERROR
    except (InputError, OSError) as exc:
        print(f"input error: {exc}", file=sys.stderr)
        return EXIT_INPUT_ERROR
    except PrimeGBError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_VERIFY_FAILED


if __name__ == "__main__":
    sys.exit(main())
