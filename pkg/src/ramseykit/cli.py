"""Command-line entry point.

Exit codes:
    construct   0 avoiding witness written, 2 ingredient fails its targets,
                3 kappa or outer ingredient unavailable, 4 bad input
    verify      0 AVOIDS, 1 CONTAINS, 4 bad input, 5 target/class count mismatch
    search      0 exact value, 1 lower bound only, 2 budget exhausted, 4 bad input
    predict     0 value printed, 1 outside proven range, 4 bad input
    export-dot  0 written, 4 bad input
"""

from __future__ import annotations

import argparse
import sys

from .coloring import (Coloring, ColoringError, class_name, format_dot, load_coloring,
                       save_coloring)
from .construct import (ConstructError, InvalidIngredient, builtin_outer, known_kappa,
                        lower_bound_witness, predicted_value)
from .detect import TargetCountMismatch, verify_coloring
from .search import EXACT, LOWER_BOUND_ONLY, Budget, search_ramsey
from .targets import Clique, Cycle, TargetError, TargetSpec, parse_targets

EXIT_BAD_INPUT = 4


def _fail(msg: str, code: int) -> int:
    print(f"error: {msg}", file=sys.stderr)
    return code


def _sizes(text: str) -> list[int]:
    try:
        return [int(x) for x in text.split(",")]
    except ValueError:
        raise ConstructError(f"expected comma-separated integers, got {text!r}") from None


def _load(path: str) -> Coloring:
    try:
        return load_coloring(path)
    except OSError as exc:
        raise ColoringError(f"cannot read {path}: {exc.strerror}") from None


def cmd_construct(args: argparse.Namespace) -> int:
    try:
        if args.cycle is not None:
            if not args.cliques:
                return _fail("--cycle needs --cliques", EXIT_BAD_INPUT)
            cliques = _sizes(args.cliques)
            if args.cycle < 3 or min(cliques) < 2:
                return _fail("need cycle length >= 3 and clique sizes >= 2", EXIT_BAD_INPUT)
            kappa = known_kappa(cliques)
            if kappa is None:
                return _fail(f"R(K_{', K_'.join(map(str, cliques))}) is not tabulated", 3)
            outer = _load(args.outer) if args.outer else builtin_outer(cliques)
            if outer is None:
                return _fail(f"no built-in outer coloring for kappa={kappa}; pass --outer FILE", 3)
            inner = Coloring.monochrome(args.cycle - 1)
            t = TargetSpec((Cycle(args.cycle),) + tuple(Clique(k) for k in cliques))
        else:
            if not (args.inner and args.outer and args.targets):
                return _fail("give --cycle/--cliques or all of --inner, --outer, --targets",
                             EXIT_BAD_INPUT)
            inner, outer = _load(args.inner), _load(args.outer)
            t = parse_targets(args.targets)
        result = lower_bound_witness(inner, outer, t)
    except InvalidIngredient as exc:
        return _fail(str(exc), 2)
    except (ColoringError, TargetError, ConstructError, TargetCountMismatch) as exc:
        return _fail(str(exc), EXIT_BAD_INPUT)
    save_coloring(result, args.output)
    bound = inner.p * outer.p + 1
    print(f"wrote {args.output}: {result.p} vertices, {result.r} classes")
    print("classes: " + ", ".join(f"{i} {class_name(i)} {x}" for i, x in enumerate(t)))
    print(f"bound: R({t}) >= (gamma-1)(kappa-1)+1 = ({inner.p})({outer.p})+1 = {bound}")
    return 0


def cmd_verify(args: argparse.Namespace) -> int:
    try:
        c = _load(args.file)
        t = parse_targets(args.targets)
        w = verify_coloring(c, t)
    except TargetCountMismatch as exc:
        return _fail(str(exc), 5)
    except (ColoringError, TargetError) as exc:
        return _fail(str(exc), EXIT_BAD_INPUT)
    if w is None:
        print("AVOIDS")
        return 0
    i = w.class_index
    print("CONTAINS")
    print(w.format(f"{class_name(i)} {t[i]}"))
    return 1


def cmd_search(args: argparse.Namespace) -> int:
    try:
        t = parse_targets(args.targets)
    except TargetError as exc:
        return _fail(str(exc), EXIT_BAD_INPUT)
    if args.max < 1:
        return _fail("--max must be at least 1", EXIT_BAD_INPUT)
    budget = Budget(args.budget_nodes, args.budget_seconds)
    outcome = search_ramsey(t, args.max, budget, args.threads)
    sys.stdout.write(outcome.report())
    if args.timing:
        print(f"wall time: {outcome.stats.seconds:.3f} s", file=sys.stderr)
    return {EXACT: 0, LOWER_BOUND_ONLY: 1}.get(outcome.kind, 2)


def cmd_predict(args: argparse.Namespace) -> int:
    try:
        pred = predicted_value(args.cycle, _sizes(args.cliques))
    except ConstructError as exc:
        return _fail(str(exc), EXIT_BAD_INPUT)
    print(pred)
    return 0 if pred.value is not None else 1


def cmd_export_dot(args: argparse.Namespace) -> int:
    try:
        c = _load(args.file)
    except ColoringError as exc:
        return _fail(str(exc), EXIT_BAD_INPUT)
    with open(args.output, "w", encoding="utf-8", newline="\n") as fh:
        fh.write(format_dot(c))
    return 0


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="ramseykit", description=__doc__.split("\n")[0])
    parser.add_argument("--seed", type=int, default=None, help="reserved; all commands are deterministic")
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("construct", help="write a blow-up coloring that avoids the targets")
    p.add_argument("--cycle", type=int, help="cycle length N (inner ingredient: monochrome K_{N-1})")
    p.add_argument("--cliques", help="clique sizes a,b,... for the outer classes")
    p.add_argument("--inner", help="inner coloring file")
    p.add_argument("--outer", help="outer coloring file")
    p.add_argument("--targets", help="targets: inner classes first, then one clique per outer class")
    p.add_argument("-o", "--output", required=True)
    p.set_defaults(func=cmd_construct)

    p = sub.add_parser("verify", help="check a coloring against per-class targets")
    p.add_argument("file")
    p.add_argument("--targets", required=True)
    p.set_defaults(func=cmd_verify)

    p = sub.add_parser("search", help="exhaustive search for the Ramsey number")
    p.add_argument("--targets", required=True)
    p.add_argument("--max", type=int, required=True, help="largest K_p to examine")
    p.add_argument("--threads", type=int, default=1)
    p.add_argument("--budget-nodes", type=int, default=None)
    p.add_argument("--budget-seconds", type=float, default=None)
    p.add_argument("--timing", action="store_true", help="print wall time to stderr")
    p.set_defaults(func=cmd_search)

    p = sub.add_parser("predict", help="exact value from the proven cycle-clique formula")
    p.add_argument("--cycle", type=int, required=True)
    p.add_argument("--cliques", required=True)
    p.set_defaults(func=cmd_predict)

    p = sub.add_parser("export-dot", help="write Graphviz DOT for a coloring file")
    p.add_argument("file")
    p.add_argument("-o", "--output", required=True)
    p.set_defaults(func=cmd_export_dot)
    return parser


def main(argv: list[str] | None = None) -> int:
    args = build_parser().parse_args(argv)
    return args.func(args)


if __name__ == "__main__":
    sys.exit(main())
