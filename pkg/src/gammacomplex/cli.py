"""Command-line surface: construction, verification sweeps, and JSON reports.

Exit codes: 0 when every requested check passes, 1 when a mathematical
identity fails (an alarm, since it would falsify a proven statement),
2 for malformed or invalid input.  Sweep reports are JSON lines, one
object per instance, and identical invocations produce byte-identical
output.
"""

from __future__ import annotations

import argparse
import json
import sys

from .checks import deep_report
from .complexes import FaceComplex, FlagComplex
from .nestohedra import (
    BuildingSet,
    FlagOrdering,
    find_decomposition,
    find_flag_ordering,
    is_flag_building_set,
    validate_building_set,
    validate_ordering,
    verify_ordering_equivalence,
)
from .polynomials import f_from_counts, f_poly, report_from_f
from .subdivision import (
    SubdivisionSequence,
    extend,
    gamma_complex,
    new_sequence,
    random_sequence,
    verify_f_equals_gamma,
)

EXIT_OK = 0
EXIT_FALSIFIED = 1
EXIT_INPUT = 2

# The built-in worked example: three subdivisions of the 3-sphere
# cross-polytope boundary (ids 0..7), chosen so that the gamma complex
# is one edge plus an isolated vertex.
EXAMPLE_D = 4
EXAMPLE_STEPS = ((0, 2), (4, 6), (0, 9))


def example_vertex_name(d: int, v: int) -> str:
    if v < 2 * d:
        sign = "+" if v % 2 == 0 else "-"
        return f"{sign}e{v // 2 + 1}"
    return f"w{v - 2 * d + 1}"


def build_example_sequence() -> SubdivisionSequence:
    seq = new_sequence(EXAMPLE_D)
    for edge in EXAMPLE_STEPS:
        seq = extend(seq, edge)
    return seq


class _Output:
    def __init__(self, path: str | None):
        self.path = path
        self.lines: list[str] = []

    def emit(self, line: str) -> None:
        if self.path is None:
            print(line)
        else:
            self.lines.append(line)

    def close(self) -> None:
        if self.path is not None:
            with open(self.path, "w") as handle:
                handle.write("".join(f"{line}\n" for line in self.lines))


def _dumps(obj) -> str:
    return json.dumps(obj, sort_keys=True)


def _table_row(report: dict) -> str:
    keys = sorted(report)
    return "  ".join(f"{key}={report[key]}" for key in keys)


def cmd_example(args, out: _Output) -> int:
    seq = build_example_sequence()
    names = lambda v: example_vertex_name(seq.d, v)
    for j in range(1, seq.k + 1):
        out.emit(f"K after step {j}:")
        table = seq.k_tables[j]
        for v in sorted(table):
            if v <= 2 * seq.d + j - 1:
                ks = ", ".join(names(x) for x in sorted(table[v]))
                out.emit(f"  K({names(v)}) = {{{ks}}}")
    edges = ", ".join(f"{{{names(a)}, {names(b)}}}" for a, b in gamma_complex(seq).edges())
    out.emit(f"gamma complex edges: {edges or '(none)'}")
    report = verify_f_equals_gamma(seq)
    out.emit(_dumps(report) if args.format == "json" else _table_row(report))
    return EXIT_OK if report["equal"] else EXIT_FALSIFIED


def _verify_instances(args):
    if args.random is not None:
        d, k, seed, trials = args.random
        for i in range(trials):
            yield i, seed + i, random_sequence(d, k, seed + i)
    else:
        with open(args.seq_file) as handle:
            seq = SubdivisionSequence.from_json(handle.read())
        yield 0, None, seq


def cmd_verify(args, out: _Output) -> int:
    if args.random is None and args.seq_file is None:
        raise ValueError("provide a sequence file or --random D K SEED TRIALS")
    all_ok = True
    for index, seed, seq in _verify_instances(args):
        report = verify_f_equals_gamma(seq)
        report["instance"] = index
        if seed is not None:
            report["seed"] = seed
        if args.deep:
            report.update(deep_report(seq))
        ok = all(v for v in report.values() if isinstance(v, bool))
        all_ok = all_ok and ok
        out.emit(_dumps(report) if args.format == "json" else _table_row(report))
    return EXIT_OK if all_ok else EXIT_FALSIFIED


def cmd_nestohedron(args, out: _Output) -> int:
    with open(args.building_set) as handle:
        bs = BuildingSet.from_json(handle.read())
    if not validate_building_set(bs):
        raise ValueError("input is not a building set")
    if not bs.is_connected():
        raise ValueError("building set is not connected")
    if not is_flag_building_set(bs):
        raise ValueError("not a flag building set")
    if args.ordering is not None:
        with open(args.ordering) as handle:
            ordering = FlagOrdering.from_json_obj(bs, json.load(handle))
        validate_ordering(ordering)
    else:
        rng = None
        if args.seed is not None:
            import random as _random

            rng = _random.Random(args.seed)
        ordering = find_flag_ordering(bs, find_decomposition(bs), rng)
    report = verify_ordering_equivalence(ordering)
    out.emit(_dumps(report) if args.format == "json" else _table_row(report))
    ok = report["equal"] and report["isomorphic"] and report["uv_match"] and report["bridge"]
    return EXIT_OK if ok else EXIT_FALSIFIED


def cmd_gamma(args, out: _Output) -> int:
    with open(args.file) as handle:
        obj = json.load(handle)
    if "steps" in obj:
        seq = SubdivisionSequence.from_json_obj(obj)
        d = args.d if args.d is not None else seq.d
        f = f_poly(seq.final, d)
    elif "facets" in obj:
        fc = FaceComplex.from_json_obj(obj)
        counts = fc.f_counts()
        d = args.d if args.d is not None else max(counts)
        if max(counts) > d:
            raise ValueError(f"found a face of {max(counts)} vertices but d={d}")
        f = f_from_counts(counts)
    elif "edges" in obj:
        c = FlagComplex.from_json_obj(obj)
        d = args.d if args.d is not None else max(c.clique_count_by_size())
        f = f_poly(c, d)
    else:
        raise ValueError("file is neither a sequence, a facet list, nor an edge list")
    report = report_from_f(f, d)
    out.emit(_dumps(report.to_json_obj()) if args.format == "json" else _table_row(report.to_json_obj()))
    return EXIT_OK


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="gammacomplex",
        description="Edge subdivisions of cross-polytope boundaries, gamma vectors, "
        "gamma complexes, and nestohedron orderings.",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    def common(p):
        p.add_argument("--output", metavar="PATH", help="write the report here instead of stdout")
        p.add_argument("--format", choices=("json", "table"), default="json")

    p_example = sub.add_parser("example", help="replay the built-in three-step worked example")
    common(p_example)

    p_verify = sub.add_parser("verify", help="check f(gamma complex) == gamma(final complex)")
    p_verify.add_argument("seq_file", nargs="?", help="JSON subdivision sequence")
    p_verify.add_argument(
        "--random",
        nargs=4,
        type=int,
        metavar=("D", "K", "SEED", "TRIALS"),
        help="verify TRIALS random sequences with seeds SEED, SEED+1, ...",
    )
    p_verify.add_argument(
        "--deep",
        action="store_true",
        help="also run the K/W recursion, link, phi, restriction, increment and oracle suites",
    )
    common(p_verify)

    p_nesto = sub.add_parser("nestohedron", help="check a flag building set's two gamma complexes agree")
    p_nesto.add_argument("building_set", help="JSON building set")
    p_nesto.add_argument("ordering", nargs="?", help="JSON flag ordering (found automatically if omitted)")
    p_nesto.add_argument("--seed", type=int, help="randomize the ordering search with this seed")
    common(p_nesto)

    p_gamma = sub.add_parser("gamma", help="f, h and gamma of a complex or sequence file")
    p_gamma.add_argument("file", help="JSON complex (edges or facets) or sequence")
    p_gamma.add_argument("--d", type=int, help="dimension parameter (default: inferred)")
    common(p_gamma)

    return parser


def main(argv=None) -> int:
    args = build_parser().parse_args(argv)
    out = _Output(getattr(args, "output", None))
    handlers = {
        "example": cmd_example,
        "verify": cmd_verify,
        "nestohedron": cmd_nestohedron,
        "gamma": cmd_gamma,
    }
    try:
        code = handlers[args.command](args, out)
    except json.JSONDecodeError as exc:
        print(f"error: invalid JSON at line {exc.lineno}, column {exc.colno}: {exc.msg}", file=sys.stderr)
        return EXIT_INPUT
    except (OSError, KeyError, TypeError, ValueError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_INPUT
    out.close()
    return code


def entrypoint() -> None:
    raise SystemExit(main())


if __name__ == "__main__":
    entrypoint()
