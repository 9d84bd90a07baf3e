"""Command-line front-end.

Subcommands:
    order     find a perfect elimination ordering or print a forbidden pair
    check     verify a given order against a chosen three-point class
    classify  report the ordering classes of a matrix
    power     run the chordal-power equivalences on a graph

Exit codes: 0 positive answer, 1 negative answer with certificate,
2 usage or parse error, 3 internal inconsistency.
"""

import argparse
import sys

from .certificates import (
    CertificateError,
    Forbidden,
    Ordering,
    certificate_is_valid,
    extract_certificate,
    format_certificate,
)
from .classes import (
    check_power_corollary,
    classify,
    duchet_power_check,
    find_cocomparability_violation,
    find_interval_violation,
    find_robinson_violation,
)
from .matrix import MatrixFormatError, SymmetricMatrix, adjacency_matrix, parse_graph, parse_matrix
from .orderings import LinearOrder, find_peo_violation

EXIT_OK = 0
EXIT_NEGATIVE = 1
EXIT_USAGE = 2
EXIT_INTERNAL = 3

_VIOLATION_FINDERS = {
    "peo": find_peo_violation,
    "robinson": find_robinson_violation,
    "interval": find_interval_violation,
    "cocomparability": find_cocomparability_violation,
}


def read_flat_map(text: str) -> dict[str, str]:
    """Parse machine output back into a flat key/value map."""
    out = {}
    for line in text.splitlines():
        line = line.strip()
        if not line or line.startswith("#"):
            continue
        key, _, value = line.partition("=")
        out[key] = value
    return out


def _load_matrix(path: str, fmt: str) -> SymmetricMatrix:
    try:
        with open(path, "r", encoding="utf-8") as fh:
            text = fh.read()
    except OSError as exc:
        raise MatrixFormatError(f"cannot read {path}: {exc}") from exc
    if fmt == "graph":
        return adjacency_matrix(parse_graph(text))
    return parse_matrix(text)


def _load_graph(path: str):
    try:
        with open(path, "r", encoding="utf-8") as fh:
            text = fh.read()
    except OSError as exc:
        raise MatrixFormatError(f"cannot read {path}: {exc}") from exc
    return parse_graph(text)


def _bool(v) -> str:
    if v is None:
        return "skipped"
    return "yes" if v else "no"


def _cmd_order(args) -> int:
    a = _load_matrix(args.input, args.format)
    cert = extract_certificate(a)
    if not certificate_is_valid(a, cert):
        print("internal error: certificate failed validation", file=sys.stderr)
        return EXIT_INTERNAL
    if isinstance(cert, Ordering):
        if args.machine:
            print("result=peo")
            print(f"order={cert.order.serialize()}")
        else:
            print(format_certificate(cert))
        return EXIT_OK
    if args.machine:
        print("result=no-peo")
        print(f"walk1={cert.walks[0].serialize()}")
        print(f"walk2={cert.walks[1].serialize()}")
    else:
        print("NO-PEO")
        print(format_certificate(cert))
    return EXIT_NEGATIVE


def _cmd_check(args) -> int:
    a = _load_matrix(args.input, args.format)
    try:
        pi = LinearOrder.parse(args.order, a.n)
    except ValueError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_USAGE
    viol = _VIOLATION_FINDERS[args.cls](a, pi)
    if viol is None:
        print("result=ok" if args.machine else "OK")
        return EXIT_OK
    triple = f"{viol.x} {viol.y} {viol.z}"
    if args.machine:
        print("result=violation")
        print(f"triple={triple}")
    else:
        print(f"VIOLATION: {triple}")
    return EXIT_NEGATIVE


def _cmd_classify(args) -> int:
    a = _load_matrix(args.input, args.format)
    report = classify(a, max_len=args.max_len)
    cert = extract_certificate(a)
    if not certificate_is_valid(a, cert):
        print("internal error: certificate failed validation", file=sys.stderr)
        return EXIT_INTERNAL
    levels = ",".join(_bool(f) for f in report.levels_chordal)
    rows = [
        ("ultrametric", _bool(report.ultrametric)),
        ("levels_chordal", levels),
        ("has_wc_cycle", _bool(report.has_weighted_chordless_cycle)),
        ("peo_exists", _bool(report.peo_exists)),
        ("simplicial", str(report.simplicial) if report.simplicial else "none"),
        ("single_walk_certificate", _bool(report.single_walk_certificate)),
        ("robinson_exists", _bool(report.robinson_exists)),
        ("interval_exists", _bool(report.interval_exists)),
        ("cocomparability_exists", _bool(report.cocomparability_exists)),
        ("certificate", format_certificate(cert)),
    ]
    if args.machine:
        for key, value in rows:
            print(f"{key}={value}")
    else:
        for key, value in rows:
            print(f"{key.replace('_', '-')}: {value}")
    return EXIT_OK


def _cmd_power(args) -> int:
    g = _load_graph(args.input)
    corollary = check_power_corollary(g)
    duchet = duchet_power_check(g, args.kmax)
    rows = [
        ("peo_exists", _bool(corollary.peo_exists)),
        ("no_wc_cycle", _bool(corollary.no_weighted_chordless_cycle)),
        ("levels_chordal", _bool(corollary.levels_chordal)),
        ("g_and_g2_chordal", _bool(corollary.g_and_g2_chordal)),
        ("powers_chordal", ",".join(_bool(f) for f in duchet.chordal_by_power)),
    ]
    if args.machine:
        for key, value in rows:
            print(f"{key}={value}")
    else:
        for key, value in rows:
            print(f"{key.replace('_', '-')}: {value}")
    if not corollary.consistent or not duchet.consistent:
        print("internal error: equivalent chordal-power flags disagree", file=sys.stderr)
        return EXIT_INTERNAL
    return EXIT_OK


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="elimord",
        description="Perfect elimination orderings of symmetric matrices: "
                    "construction, certificates, and related ordering classes.")
    parser.add_argument("--seed", type=int, default=0,
                        help="seed reserved for randomized suites (unused by the "
                             "deterministic subcommands)")
    sub = parser.add_subparsers(dest="command", required=True)

    def common(p, graph_default=False):
        p.add_argument("input", help="input file")
        p.add_argument("--format", choices=("matrix", "graph"),
                       default="graph" if graph_default else "matrix",
                       help="input format (graph files become 0/1 matrices)")
        p.add_argument("--machine", action="store_true", help="key=value output")

    p_order = sub.add_parser("order", help="find a PEO or a forbidden pair")
    common(p_order)
    p_order.set_defaults(func=_cmd_order)

    p_check = sub.add_parser("check", help="check an order against a class")
    common(p_check)
    p_check.add_argument("order", help="space-separated 1-based order")
    p_check.add_argument("--class", dest="cls", default="peo",
                         choices=tuple(_VIOLATION_FINDERS),
                         help="three-point condition to check")
    p_check.set_defaults(func=_cmd_check)

    p_classify = sub.add_parser("classify", help="ordering-class report")
    common(p_classify)
    p_classify.add_argument("--max-len", type=int, default=None,
                            help="length cap for the single-walk certificate search")
    p_classify.set_defaults(func=_cmd_classify)

    p_power = sub.add_parser("power", help="chordal-power equivalences for a graph")
    common(p_power, graph_default=True)
    p_power.add_argument("--kmax", type=int, default=4,
                         help="highest power to test for chordality")
    p_power.set_defaults(func=_cmd_power)
    return parser


def main(argv=None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return EXIT_USAGE if exc.code else EXIT_OK
    try:
        return args.func(args)
    except (MatrixFormatError, ValueError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_USAGE
    except CertificateError as exc:
        print(f"internal error: {exc}", file=sys.stderr)
        return EXIT_INTERNAL


if __name__ == "__main__":
    sys.exit(main())
