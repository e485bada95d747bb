"""Command-line front end.

Exit codes: 0 when everything checked out, 1 when a verification failed
(the counterexample goes to stderr), 2 for usage errors.  The default
output format can be set with ``SLOPEVAR_FORMAT`` (plain, csv or json).
"""

from __future__ import annotations

import argparse
import csv
import io
import json
import os
import sys

from . import __version__
from .bijections import btp_count, enumerate_btp
from .complex import facets_with_trees, minimal_forbidden_paths, path_text
from .enumeration import DPT_ENUMERATE_LIMIT, degree_lower_bound, double_factorial, dpt
from .errors import (CompletionBudgetExceeded, MethodDisagreement, ScaleLimit,
                     SlopevarError, VerificationFailure)
from .graph import Wheel
from .groebner import certify_groebner, k4_generation_probe
from .polynomial import TermOrder, normalize_sign
from .shelling import (FTRANSFORM_LIMIT, METHODS, SHELLING_LIMIT, h_vector,
                       h_vector_checked, hilbert_series, hilbert_series_text,
                       m_recurrence, matching_census, verify_shelling)
from .treepoly import leading_tree_with_case, wheel_polynomial

FORMATS = ("plain", "csv", "json")
FORMAT_ENV = "SLOPEVAR_FORMAT"
MATCHING_ENUM_LIMIT = 7


class UsageError(Exception):
    pass


def _default_format() -> str:
    value = os.environ.get(FORMAT_ENV, "plain")
    if value not in FORMATS:
        raise UsageError(f"{FORMAT_ENV} must be one of {', '.join(FORMATS)}, got {value!r}")
    return value


def _csv(header, rows) -> str:
    buf = io.StringIO()
    w = csv.writer(buf, lineterminator="\n")
    w.writerow(header)
    w.writerows(rows)
    return buf.getvalue()


def _json(obj) -> str:
    return json.dumps(obj, indent=2, sort_keys=True) + "\n"


def _edges_text(E) -> str:
    return " ".join(f"{u}-{v}" for u, v in sorted(E))


def _order(args) -> TermOrder:
    return TermOrder(kind=args.order)


def _wheel(text) -> Wheel:
    try:
        return Wheel.parse(text)
    except ValueError as exc:
        raise UsageError(str(exc)) from exc


# -- subcommands ----------------------------------------------------------------

def cmd_treepoly(args, fmt):
    W = _wheel(args.wheel)
    order = _order(args)
    p = normalize_sign(wheel_polynomial(W), order)
    if fmt == "json":
        return _json({"wheel": str(W), "order": order.kind, "terms": len(p),
                      "polynomial": p.to_text(order)})
    return p.to_text(order) + "\n"


def cmd_leading_tree(args, fmt):
    W = _wheel(args.wheel)
    T, case = leading_tree_with_case(W, _order(args))
    if fmt == "json":
        return _json({"wheel": str(W), "order": args.order, "case": case,
                      "edges": [list(e) for e in sorted(T)]})
    if fmt == "csv":
        return _csv(["u", "v", "case"], [(u, v, case) for u, v in sorted(T)])
    return f"{_edges_text(T)}\ncase: {case}\n"


def cmd_facets(args, fmt):
    pairs = facets_with_trees(args.n)
    if fmt == "json":
        out = []
        for F, T in pairs:
            item = {"edges": [list(e) for e in sorted(F)]}
            if args.decomp:
                item["tree"] = T.to_json()
            out.append(item)
        return _json({"n": args.n, "count": len(out), "facets": out})
    if fmt == "csv":
        header = ["index", "edges"] + (["tree"] if args.decomp else [])
        rows = [[i, _edges_text(F)] + ([T.to_text()] if args.decomp else [])
                for i, (F, T) in enumerate(pairs)]
        return _csv(header, rows)
    lines = []
    for F, T in pairs:
        lines.append(_edges_text(F) + (f"  {T.to_text()}" if args.decomp else ""))
    return "\n".join(lines) + "\n"


def cmd_hvector(args, fmt):
    if args.method:
        h = h_vector(args.n, args.method)
        used = [args.method]
    else:
        used = [m for m in METHODS
                if not (m == "shelling" and args.n > SHELLING_LIMIT)
                and not (m == "ftransform" and args.n > FTRANSFORM_LIMIT)
                and not (m == "matchings" and args.n - 2 > MATCHING_ENUM_LIMIT)]
        h = h_vector_checked(args.n, used)
    if fmt == "json":
        return _json({"n": args.n, "methods": used, "h": h})
    return _csv(["n", "k", "h"], [(args.n, k, v) for k, v in enumerate(h)])


def cmd_hilbert(args, fmt):
    if fmt == "json":
        num, exp = hilbert_series(args.n)
        return _json({"n": args.n, "numerator": num, "denominator_exponent": exp,
                      "text": hilbert_series_text(args.n)})
    return hilbert_series_text(args.n) + "\n"


def cmd_shelling(args, fmt):
    cert = verify_shelling(args.n)
    if fmt == "json":
        return _json(cert.to_json() if args.full else {
            "n": cert.n, "facets": len(cert.facets), "sh1_pairs_checked": cert.pairs_checked,
            "histogram": cert.histogram(), "verified": True})
    hist = cert.histogram()
    return (f"n={cert.n} facets={len(cert.facets)} sh1_pairs={cert.pairs_checked} "
            f"sh2_witnesses={sum(len(w) for w in cert.witnesses)} "
            f"histogram={','.join(map(str, hist))} verified\n")


def _count_rows(family, n, k):
    """Rows ``(family, n, k, value)``; cross-checks methods where both are affordable."""
    rows = []
    if family == "matchings":
        m = n - 2 if n >= 2 else 0
        values = [m_recurrence(m, j) for j in range(m + 1)]
        if m <= MATCHING_ENUM_LIMIT and values != matching_census(m):
            raise MethodDisagreement("matching recurrence disagrees with enumeration",
                                     witness={"n": n})
        if sum(values) != double_factorial(2 * m - 1):
            raise MethodDisagreement("matching total is not the double factorial",
                                     witness={"n": n})
        ks = range(m + 1) if k is None else [k]
        rows = [(family, n, j, m_recurrence(m, j)) for j in ks]
    elif family == "btp":
        value = btp_count(n - 1)
        if n - 1 <= 8 and len(enumerate_btp(range(2, n + 1))) != value:
            raise MethodDisagreement("partition enumeration disagrees with (2n-5)!!",
                                     witness={"n": n})
        rows = [(family, n, "", value)]
    elif family == "dpt":
        ks = range(1, n + 1) if k is None else [k]
        for j in ks:
            value = dpt(n, j)
            if n <= DPT_ENUMERATE_LIMIT and dpt(n, j, "enumerate") != value:
                raise MethodDisagreement("dpt recurrence disagrees with enumeration",
                                         witness={"n": n, "k": j})
            rows.append((family, n, j, value))
    elif family == "e":
        ks = range(1, n + 1) if k is None else [k]
        for j in ks:
            value = degree_lower_bound(n, j)
            if j < n and dpt(n - 1, n - j) != value:
                raise MethodDisagreement("e(n,k) differs from dpt(n-1,n-k)",
                                         witness={"n": n, "k": j})
            rows.append((family, n, j, value))
    return rows


def cmd_count(args, fmt):
    rows = _count_rows(args.family, args.n, args.k)
    if fmt == "json":
        return _json([dict(zip(("family", "n", "k", "value"), r)) for r in rows])
    return _csv(["family", "n", "k", "value"], rows)


def cmd_groebner(args, fmt):
    order = TermOrder(kind=args.order, n=args.n)
    if args.k4_probe:
        try:
            report = k4_generation_probe(args.n, max_pairs=args.budget, order=order)
        except CompletionBudgetExceeded as exc:
            report = {"n": args.n, "order": order.kind, "inconclusive": str(exc)}
        out = _json(report)
        if report.get("all_zero") is False:
            raise VerificationFailure("some wheel polynomial is not generated by the K4 polynomials",
                                      witness=report["nonzero_remainders"])
        return out
    cert = certify_groebner(args.n, order, allow_slow=args.allow_slow, jobs=args.jobs)
    if not args.pairs:
        cert = {k: v for k, v in cert.items() if k != "pair_outcomes"}
    return _json(cert)


def cmd_forbidden(args, fmt):
    paths = minimal_forbidden_paths(args.n, args.order)
    if fmt == "json":
        return _json({"n": args.n, "order": args.order, "b": len(paths),
                      "paths": [list(p) for p in paths]})
    if fmt == "csv":
        return _csv(["path"], [[path_text(p)] for p in paths])
    return "".join(path_text(p) + "\n" for p in paths) + f"b({args.n}) = {len(paths)}\n"


# -- parser ------------------------------------------------------------------------

def _positive(text):
    value = int(text)
    if value < 1:
        raise argparse.ArgumentTypeError("must be a positive integer")
    return value


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="slopevar", description=__doc__.splitlines()[0])
    parser.add_argument("--version", action="version", version=f"%(prog)s {__version__}")
    parser.add_argument("--format", choices=FORMATS, default=None,
                        help=f"output format (default: ${FORMAT_ENV} or plain)")
    parser.add_argument("-o", "--output", default=None, help="write to this file instead of stdout")
    parser.add_argument("--jobs", type=_positive, default=1, help="worker processes for parallel work")
    sub = parser.add_subparsers(dest="command", required=True)

    def order_flag(p):
        p.add_argument("--order", choices=("glex", "grevlex"), default="glex")

    p = sub.add_parser("treepoly", help="tree polynomial of a wheel")
    p.add_argument("--wheel", required=True, help='wheel as "c;s1,...,sk"')
    order_flag(p)
    p.set_defaults(func=cmd_treepoly)

    p = sub.add_parser("leading-tree", help="leading tree of a wheel and the case used")
    p.add_argument("--wheel", required=True)
    order_flag(p)
    p.set_defaults(func=cmd_leading_tree)

    p = sub.add_parser("facets", help="facets of the complex on [1, n]")
    p.add_argument("-n", type=_positive, required=True)
    p.add_argument("--decomp", action="store_true", help="include decomposition trees")
    p.set_defaults(func=cmd_facets)

    p = sub.add_parser("hvector", help="h-vector as CSV rows n,k,h")
    p.add_argument("-n", type=_positive, required=True)
    p.add_argument("--method", choices=METHODS, default=None,
                   help="single method (default: every affordable method, cross-checked)")
    p.set_defaults(func=cmd_hvector)

    p = sub.add_parser("hilbert", help="Hilbert series as a rational function")
    p.add_argument("-n", type=_positive, required=True)
    p.set_defaults(func=cmd_hilbert)

    p = sub.add_parser("shelling", help="verify the shelling order")
    p.add_argument("-n", type=_positive, required=True)
    p.add_argument("--verify", action="store_true", required=True)
    p.add_argument("--full", action="store_true", help="json: include every facet and witness")
    p.set_defaults(func=cmd_shelling)

    p = sub.add_parser("count", help="enumeration tables as CSV family,n,k,value",
                       description="Every family is indexed so its total is (2n-5)!!: matchings of "
                       "[1, 2n-4] by long pairs, partitions of [2, n], decreasing planar trees "
                       "on [1, n] by largest leaf, and the degree bound e(n, k).")
    p.add_argument("--family", choices=("matchings", "btp", "dpt", "e"), required=True)
    p.add_argument("-n", type=_positive, required=True)
    p.add_argument("-k", type=int, default=None)
    p.set_defaults(func=cmd_count)

    p = sub.add_parser("groebner", help="Groebner certificate or K4 generation probe")
    p.add_argument("-n", type=_positive, required=True)
    mode = p.add_mutually_exclusive_group(required=True)
    mode.add_argument("--certify", action="store_true")
    mode.add_argument("--k4-probe", action="store_true")
    order_flag(p)
    p.add_argument("--allow-slow", action="store_true", help="permit n > 5")
    p.add_argument("--pairs", action="store_true", help="list every pair outcome")
    p.add_argument("--budget", type=_positive, default=4000, help="pair budget for --k4-probe")
    p.set_defaults(func=cmd_groebner)

    p = sub.add_parser("forbidden", help="minimal forbidden paths on [1, n]")
    p.add_argument("-n", type=_positive, required=True)
    p.add_argument("--minimal", action="store_true", required=True)
    order_flag(p)
    p.set_defaults(func=cmd_forbidden)
    return parser


def main(argv=None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return int(exc.code or 0)
    try:
        fmt = args.format or _default_format()
        text = args.func(args, fmt)
    except UsageError as exc:
        print(f"slopevar: {exc}", file=sys.stderr)
        return 2
    except VerificationFailure as exc:
        print(f"slopevar: verification failed: {exc}", file=sys.stderr)
        if exc.witness is not None:
            print(json.dumps(exc.witness, default=str, sort_keys=True), file=sys.stderr)
        return 1
    except (ScaleLimit, ValueError, SlopevarError) as exc:
        print(f"slopevar: {exc}", file=sys.stderr)
        return 2
    if args.output:
        with open(args.output, "w", encoding="utf-8") as fh:
            fh.write(text)
    else:
        sys.stdout.write(text)
    return 0


if __name__ == "__main__":
    sys.exit(main())
