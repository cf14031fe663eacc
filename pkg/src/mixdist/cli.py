"""mixdist command line: dist, validate, gen, bench, report.

Exit codes: 0 success; 2 parse/validation/spec problems; 3 incomparable
label sets; 4 accumulator overflow. Every error prints exactly one line
to the diagnostic stream, prefixed with a greppable code (E_PARSE,
E_COMPARE, E_OVERFLOW, E_SPEC).

Distances print in time units (ticks / 10**6) as shortest decimals with
at most six fractional digits; --raw-ticks switches to the exact integer
tick count, and --normalize divides by the number of leaf pairs C(n,2).
"""

from __future__ import annotations

import argparse
import sys
from decimal import ROUND_HALF_EVEN, Decimal

from .bench import BENCH_ALGOS, format_csv, run_grid
from .errors import EmptyInputError, InvalidSpecError, MixdistError, TreeValidationError
from .generate import PAIR_MODES, SHAPES, TIME_MODELS, GenSpec, random_comparable_pair, random_mixture_tree
from .distance import ALGORITHMS, mixture_distance
from .newick import read_tree_file, ticks_to_decimal, write_newick
from .nodal import nodal_distance
from .tree import STRICT, TICKS_PER_UNIT, WEAK, validate

_EXIT_BY_CODE = {"E_PARSE": 2, "E_SPEC": 2, "E_COMPARE": 3, "E_OVERFLOW": 4}


def _fail(exc: Exception, code: str | None = None) -> int:
    code = code or getattr(exc, "code", "E_SPEC")
    message = str(exc).replace("\n", "; ") or exc.__class__.__name__
    print(f"{code}: {message}", file=sys.stderr)
    return _EXIT_BY_CODE[code]


def _load(path: str, strictness: str):
    """Parse a tree file; annotate errors with the file name."""
    try:
        trees = read_tree_file(path, strictness)
    except TreeValidationError as exc:
        exc.args = (f"{path}: {exc.args[0]}",) + exc.args[1:]
        raise
    if not trees:
        raise EmptyInputError(f"{path}: no trees in file")
    return trees


def _format_units(ticks: int, pairs: int | None) -> str:
    if pairs is None:
        return ticks_to_decimal(ticks)
    exact = Decimal(ticks) / (Decimal(pairs) * TICKS_PER_UNIT)
    quantized = exact.quantize(Decimal("0.000001"), rounding=ROUND_HALF_EVEN)
    text = format(quantized, "f").rstrip("0").rstrip(".")
    return text or "0"


def _format_count(value: int, pairs: int | None) -> str:
    if pairs is None:
        return str(value)
    quantized = (Decimal(value) / Decimal(pairs)).quantize(Decimal("0.000001"), rounding=ROUND_HALF_EVEN)
    text = format(quantized, "f").rstrip("0").rstrip(".")
    return text or "0"


def cmd_dist(args) -> int:
    strictness = WEAK if args.weak else STRICT
    trees1 = _load(args.tree1, strictness)
    if args.tree1 == args.tree2 and len(trees1) >= 2:
        # Same file twice: compare its first two trees (gen --pair output).
        t1, t2 = trees1[0][1], trees1[1][1]
    else:
        t1 = trees1[0][1]
        t2 = _load(args.tree2, strictness)[0][1]
    pairs = None
    if args.normalize:
        if t1.n < 2:
            raise InvalidSpecError("--normalize requires at least 2 leaves")
        pairs = t1.n * (t1.n - 1) // 2
    if args.algo == "nodal":
        print(_format_count(nodal_distance(t1, t2), pairs))
        return 0
    ticks = mixture_distance(t1, t2, args.algo)
    if args.raw_ticks:
        print(_format_count(ticks, pairs))
    else:
        print(_format_units(ticks, pairs))
    return 0


def cmd_validate(args) -> int:
    strictness = WEAK if args.weak else STRICT
    # Ingest weakly so strict violations are listed rather than thrown.
    trees = _load(args.path, WEAK)
    failed = False
    for lineno, tree in trees:
        report = validate(tree, strictness)
        if report.ok:
            continue
        failed = True
        for v in report.violations:
            print(f"line {lineno}: {v.code} node={v.node}: {v.message}")
    if failed:
        return 2
    print("OK")
    return 0


def cmd_gen(args) -> int:
    spec = GenSpec(
        n=args.leaves,
        seed=args.seed,
        shape=args.shape,
        time_model=args.time_model,
        max_step=args.max_step,
    )
    if args.pair:
        t1, t2 = random_comparable_pair(spec, args.pair)
        lines = [write_newick(t1), write_newick(t2)]
    else:
        lines = [write_newick(random_mixture_tree(spec))]
    text = "\n".join(lines) + "\n"
    if args.out:
        with open(args.out, "w", encoding="ascii") as fh:
            fh.write(text)
    else:
        sys.stdout.write(text)
    return 0


def cmd_bench(args) -> int:
    shapes = [s.strip() for s in args.shapes.split(",") if s.strip()]
    algos = [a.strip() for a in args.algos.split(",") if a.strip()]
    for shape in shapes:
        if shape not in SHAPES:
            raise InvalidSpecError(f"unknown shape {shape!r}; choose from {SHAPES}")
    for algo in algos:
        if algo not in BENCH_ALGOS:
            raise InvalidSpecError(f"unknown algorithm {algo!r}; choose from {BENCH_ALGOS}")
    if not shapes or not algos:
        raise InvalidSpecError("need at least one shape and one algorithm")
    records = run_grid(
        shapes,
        algos,
        args.min_exp,
        args.max_exp,
        args.repeats,
        args.seed,
        allow_big_naive=args.allow_big_naive,
        verbose=args.verbose,
    )
    sys.stdout.write(format_csv(records))
    return 0


def cmd_report(args) -> int:
    if args.bench == "-":
        text = sys.stdin.read()
    else:
        with open(args.bench, "r", encoding="ascii") as fh:
            text = fh.read()
    from .report import write_report

    try:
        created = write_report(text, args.out)
    except ValueError as exc:
        raise InvalidSpecError(str(exc)) from exc
    for path in created:
        print(path)
    return 0


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="mixdist", description="Mixture-tree distance toolkit")
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("dist", help="distance between the first trees of two Newick files")
    p.add_argument("tree1")
    p.add_argument("tree2")
    p.add_argument("--algo", choices=ALGORITHMS + ("nodal",), default="fast")
    p.add_argument("--normalize", action="store_true", help="divide by C(n,2)")
    p.add_argument("--raw-ticks", action="store_true", help="print integer ticks, not time units")
    p.add_argument("--weak", action="store_true", help="accept non-strict (>=) time monotonicity")
    p.set_defaults(func=cmd_dist)

    p = sub.add_parser("validate", help="check every tree in a Newick file")
    p.add_argument("path")
    p.add_argument("--weak", action="store_true", help="validate with >= monotonicity")
    p.set_defaults(func=cmd_validate)

    p = sub.add_parser("gen", help="generate seeded random trees as canonical Newick")
    p.add_argument("--leaves", type=int, required=True)
    p.add_argument("--seed", type=int, default=0)
    p.add_argument("--shape", choices=SHAPES, default="random")
    p.add_argument("--time-model", choices=TIME_MODELS, default="unit_coalescent")
    p.add_argument("--max-step", type=int, default=999_999, help="jitter bound in ticks")
    p.add_argument("--pair", choices=PAIR_MODES, default=None, help="emit a comparable pair (two lines)")
    p.add_argument("--out", default=None, help="output path (default: standard output)")
    p.set_defaults(func=cmd_gen)

    p = sub.add_parser("bench", help="time engines over 2^min-exp..2^max-exp leaves, CSV to stdout")
    p.add_argument("--shapes", default="complete", help="comma list from " + ",".join(SHAPES))
    p.add_argument("--algos", default="fast,coloring", help="comma list from " + ",".join(BENCH_ALGOS))
    p.add_argument("--min-exp", type=int, default=10)
    p.add_argument("--max-exp", type=int, default=13)
    p.add_argument("--repeats", type=int, default=5)
    p.add_argument("--seed", type=int, default=1)
    p.add_argument("--allow-big-naive", action="store_true", help="lift the n<=2^13 cap on naive")
    p.add_argument("--verbose", action="store_true", help="per-repeat seconds on the diagnostic stream")
    p.set_defaults(func=cmd_bench)

    p = sub.add_parser("report", help="render a bench CSV into figures and a slope table")
    p.add_argument("--bench", required=True, help="bench CSV path, or - for standard input")
    p.add_argument("--out", required=True, help="output directory")
    p.set_defaults(func=cmd_report)

    return parser


def main(argv=None) -> int:
    args = build_parser().parse_args(argv)
    try:
        return args.func(args)
    except MixdistError as exc:
        return _fail(exc)
    except OSError as exc:
        return _fail(exc, code="E_PARSE")


if __name__ == "__main__":
    sys.exit(main())
