"""Command-line surface.

Every engine operation is exposed as a subcommand over the shared input
grammar.  Output is a human-readable summary or, with ``--json``, a
byte-stable JSON document (fixed key order, no timestamps).

Exit codes: 0 success, 1 usage or parse error, 2 unsupported input or
combination, 3 internal consistency failure (criterion vs direct
mismatch, oracle mismatch, scan-shell violation).

The environment variable ``ULRICH_SCAN_CAP`` overrides the default cap
on scan-box volumes.
"""

from __future__ import annotations

import argparse
import json
import os
import sys

from . import kernelbundle, search
from .cohomology import cohomology, euler_characteristic, toric_cech_oracle
from .errors import (
    EngineError,
    InternalInconsistency,
    ParseError,
    ScanBoxTooSmall,
)
from .picard import (
    ProjBundle,
    is_very_ample,
    parse_bundle,
    parse_divisor,
    parse_variety,
)
from .search import SearchBox
from .ulrich import (
    direct_ulrich_check,
    is_ulrich,
    pullback_ulrich_criterion,
    semiorthogonality_probe,
)


class _Parser(argparse.ArgumentParser):
    def error(self, message):
        raise ParseError(message)


def _build_parser() -> _Parser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--json", action="store_true", help="emit JSON")
    common.add_argument("--minus-basis", action="store_true",
                        help="read Hirzebruch coordinates as (f, C-) instead "
                             "of the internal (f, C+)")

    parser = _Parser(prog="ulrich",
                     description="exact sheaf cohomology and Ulrich-bundle "
                                 "search on projective bundles")
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("coh", parents=[common], help="cohomology table")
    p.add_argument("variety")
    p.add_argument("bundle")

    p = sub.add_parser("chi", parents=[common], help="Euler characteristic")
    p.add_argument("variety")
    p.add_argument("bundle")

    p = sub.add_parser("ample", parents=[common], help="very-ampleness test")
    p.add_argument("variety")
    p.add_argument("divisor")

    p = sub.add_parser("ulrich", parents=[common], help="Ulrich definition check")
    p.add_argument("variety")
    p.add_argument("bundle")
    p.add_argument("--pol", required=True, help="polarisation divisor")

    p = sub.add_parser("criterion", parents=[common],
                       help="base-side pullback Ulrich criterion")
    p.add_argument("pb", help="projective bundle PB(base;...)")
    p.add_argument("bundle", help="split bundle on the base")
    p.add_argument("--pol", required=True, help="base divisor A")

    p = sub.add_parser("direct", parents=[common],
                       help="direct Ulrich check on P(E), cross-asserted")
    p.add_argument("pb")
    p.add_argument("bundle")
    p.add_argument("--pol", required=True)

    p = sub.add_parser("probe", parents=[common],
                       help="semiorthogonality probe Hom(pullback L1, pullback L2 (-pH))")
    p.add_argument("pb")
    p.add_argument("l1")
    p.add_argument("l2")
    p.add_argument("-p", type=int, required=True, dest="twist")

    p = sub.add_parser("enum-zero", parents=[common],
                       help="line bundles with no cohomology in a box")
    p.add_argument("variety")
    p.add_argument("--box", type=int, required=True)

    p = sub.add_parser("enum-ulrich", parents=[common],
                       help="Ulrich line bundles in a box")
    p.add_argument("variety")
    p.add_argument("--pol", required=True)
    p.add_argument("--box", type=int, required=True)

    p = sub.add_parser("search-pb", parents=[common],
                       help="base line bundles F with pullback(F)(D) Ulrich")
    p.add_argument("pb")
    p.add_argument("--pol", required=True)
    p.add_argument("--box", type=int, required=True)

    p = sub.add_parser("kernel", parents=[common],
                       help="kernel-bundle presentation on P^n")
    p.add_argument("n", type=int)
    p.add_argument("d", type=int)
    group = p.add_mutually_exclusive_group()
    group.add_argument("--sym", action="store_true",
                       help="symmetric-power presentation instead of staircase")
    group.add_argument("--random", type=int, metavar="SEED",
                       help="seeded random matrix with staircase dimensions")
    p.add_argument("--twist", type=int, default=None,
                   help="also print the kernel cohomology table at this twist")

    p = sub.add_parser("prop61", parents=[common],
                       help="rank-n Ulrich construction on P(O(1)+O^d) over P^n")
    p.add_argument("n", type=int)
    p.add_argument("d", type=int)
    p.add_argument("--box", type=int, default=8, help="line-bundle search box")
    p.add_argument("--bound", type=int, default=4,
                   help="presentation parameter bound")

    p = sub.add_parser("oracle", parents=[common],
                       help="toric Cech cross-check of the engine")
    p.add_argument("variety")
    p.add_argument("divisor")

    return parser


def _scan_cap() -> int | None:
    raw = os.environ.get("ULRICH_SCAN_CAP")
    return int(raw) if raw else None


def _emit(payload: dict, as_json: bool, human_lines) -> None:
    if as_json:
        print(json.dumps(payload))
    else:
        for line in human_lines:
            print(line)


def _report_lines(report) -> list:
    lines = [f"candidate:    {report.candidate}",
             f"polarisation: {report.polarisation}",
             f"verdict:      {'Ulrich' if report.verdict else 'not Ulrich'}"
             + (" (generic model)" if report.generic else "")]
    for c in report.checks:
        lines.append(f"  {c.label:>6}: h = {c.table.h}  "
                     f"{'ok' if c.ok else 'NONZERO'}")
    for note in report.notes:
        lines.append(f"note: {note}")
    return lines


def _scan_lines(result) -> list:
    lines = [f"results: {[list(c) for c in result.results]}"]
    if result.closed_form is not None:
        summary = result.closed_form.get("members",
                                         result.closed_form.get("families"))
        lines.append(f"closed form: {summary}")
    for note in result.erratum_notes:
        lines.append(f"note: {note}")
    return lines


def _dispatch(args) -> tuple:
    """Returns (payload, human lines) plus an optional exit-code override."""
    minus = args.minus_basis
    if args.command == "coh":
        v = parse_variety(args.variety)
        bundle = parse_bundle(args.bundle, v, minus)
        table = cohomology(v, bundle)
        return table.to_json(), [str(table)]
    if args.command == "chi":
        v = parse_variety(args.variety)
        bundle = parse_bundle(args.bundle, v, minus)
        chi = euler_characteristic(v, bundle)
        return {"chi": chi}, [f"chi = {chi}"]
    if args.command == "ample":
        v = parse_variety(args.variety)
        d = parse_divisor(args.divisor, v, minus)
        verdict = is_very_ample(v, d)
        payload = {"very_ample": bool(verdict),
                   "sufficient_only": verdict.sufficient_only}
        return payload, [f"very ample: {bool(verdict)}"
                         + (" (sufficient bound only)" if verdict.sufficient_only
                            else "")]
    if args.command == "ulrich":
        v = parse_variety(args.variety)
        bundle = parse_bundle(args.bundle, v, minus)
        pol = parse_divisor(args.pol, v, minus)
        report = is_ulrich(v, bundle, pol)
        return report.to_json(), _report_lines(report)
    if args.command in ("criterion", "direct"):
        pb = _parse_pb(args.pb)
        bundle = parse_bundle(args.bundle, pb.base, minus)
        pol = parse_divisor(args.pol, pb.base, minus)
        if args.command == "criterion":
            report = pullback_ulrich_criterion(pb.base, pb.summands, bundle, pol)
        else:
            report = direct_ulrich_check(pb, bundle, pol)
        return report.to_json(), _report_lines(report)
    if args.command == "probe":
        pb = _parse_pb(args.pb)
        l1 = parse_divisor(args.l1, pb.base, minus)
        l2 = parse_divisor(args.l2, pb.base, minus)
        table = semiorthogonality_probe(pb, l1, l2, args.twist)
        return table.to_json(), [str(table)]
    if args.command == "enum-zero":
        v = parse_variety(args.variety)
        box = SearchBox.symmetric(v, args.box)
        result = search.zero_cohomology_line_bundles(v, box, _scan_cap())
        return result.to_json(), _scan_lines(result)
    if args.command == "enum-ulrich":
        v = parse_variety(args.variety)
        pol = parse_divisor(args.pol, v, minus)
        box = SearchBox.symmetric(v, args.box)
        result = search.ulrich_line_bundles(v, pol, box, _scan_cap())
        return result.to_json(), _scan_lines(result)
    if args.command == "search-pb":
        pb = _parse_pb(args.pb)
        pol = parse_divisor(args.pol, pb.base, minus)
        box = SearchBox.symmetric(pb.base, args.box)
        result = search.pullback_ulrich_line_search(pb, pol, box, _scan_cap())
        return result.to_json(), _scan_lines(result)
    if args.command == "kernel":
        return _run_kernel(args)
    if args.command == "prop61":
        result = kernelbundle.prop61_builder(args.n, args.d,
                                             line_box=args.box,
                                             presentation_bound=args.bound)
        lines = _report_lines(result.report)
        if result.presentation is not None:
            lines.append(f"presentation: {result.presentation}")
        return result.to_json(), lines
    if args.command == "oracle":
        v = parse_variety(args.variety)
        d = parse_divisor(args.divisor, v, minus)
        engine = cohomology(v, d)
        cech = toric_cech_oracle(v, d)
        agree = engine.h == cech.h
        payload = {"engine": engine.to_json(), "oracle": cech.to_json(),
                   "agree": agree}
        lines = [f"engine: {engine}", f"oracle: {cech}", f"agree: {agree}"]
        # a disagreement is an engine bug: report it, but exit 3
        return payload, lines, (0 if agree else 3)
    raise ParseError(f"unknown command {args.command!r}")


def _parse_pb(text: str) -> ProjBundle:
    v = parse_variety(text)
    if not isinstance(v, ProjBundle):
        raise ParseError(f"expected a projective bundle PB(...), got {text!r}")
    return v


def _run_kernel(args) -> tuple:
    if args.random is not None:
        pres = kernelbundle.random_presentation(args.n, args.d, args.random)
    elif args.sym:
        pres = kernelbundle.sym_euler_presentation(args.n, args.d)
    else:
        pres = kernelbundle.staircase_presentation(args.n, args.d)
    lines = [f"presentation: {pres}",
             f"map: O({pres.matrix.d})^{pres.matrix.b1} -> "
             f"O({pres.matrix.d + 1})^{pres.matrix.b2}, kernel rank {pres.rank}",
             f"surjectivity: {pres.surjectivity.method} "
             f"(exact={pres.surjectivity.exact})"]
    if args.twist is not None:
        table = kernelbundle.kernel_cohomology(pres, args.twist)
        payload = {"presentation": pres.to_json(),
                   "twist": args.twist, "table": table.to_json()}
        lines.append(f"H(F({args.twist:+d})): {table}")
        return payload, lines
    lemma = kernelbundle.lemma_conditions_check(pres)
    payload = {"presentation": pres.to_json(), "lemma": lemma.to_json()}
    lines.append(f"orthogonality conditions: "
                 f"{'pass' if lemma.passed else 'FAIL'}")
    for label, table in lemma.tables:
        lines.append(f"  {label}: h = {table.h}")
    return payload, lines


def run(argv) -> int:
    """Execute one CLI request; returns the process exit code."""
    parser = _build_parser()
    try:
        args = parser.parse_args(argv)
    except ParseError as err:
        print(json.dumps({"error": err.code, "detail": str(err)}))
        return 1
    as_json = getattr(args, "json", False)
    try:
        out = _dispatch(args)
    except ParseError as err:
        print(json.dumps({"error": err.code, "detail": str(err)}))
        return 1
    except (InternalInconsistency, ScanBoxTooSmall) as err:
        print(json.dumps({"error": err.code, "detail": str(err)}))
        return 3
    except EngineError as err:
        print(json.dumps({"error": err.code, "detail": str(err)}))
        return 2
    payload, lines = out[0], out[1]
    code = out[2] if len(out) > 2 else 0
    _emit(payload, as_json, lines)
    return code


def main() -> None:
    sys.exit(run(sys.argv[1:]))


if __name__ == "__main__":
    main()
