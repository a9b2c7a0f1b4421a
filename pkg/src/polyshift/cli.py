"""Command-line interface: ``polyshift hs | soc | check | betti | fuzz``.

Inputs are read from ``--input FILE`` (or ``-`` for stdin) in either the
generator-list grammar or the family-document dialect.  Reports are JSON
(``--json`` for compact machine output) and are byte-reproducible from the
input and seed; wall-clock timings appear only under ``--timings``.

Exit codes: 0 success, 1 usage or parse error, 2 precondition violation,
3 resource cap exceeded, 4 internal cross-route disagreement.
"""

from __future__ import annotations

import argparse
import json
import sys
import time
from typing import Any, Optional

from .errors import (
    DegreeMismatchError,
    DimensionMismatchError,
    FamilySpecError,
    LinearityError,
    NotStronglyStableError,
    ParseError,
    PolyshiftError,
    PreconditionError,
    ResourceCapError,
    RouteDisagreementError,
    SupportError,
    UnsupportedFamilyError,
    ZeroIdealError,
)
from .families import check_exchange, is_strongly_stable
from .fuzzlab import CONJECTURE_KEYS, CampaignConfig, run_campaign
from .monomials import (
    MonomialIdeal,
    VariableOrder,
    monomial_multiples,
    x_of,
)
from .oracle import betti_table
from .quotients import (
    QuotientCertificate,
    certify_lex,
    find_admissible_order,
    homological_shift,
    shifts_by_distance,
)
from .socle import (
    SocleReport,
    family_socle,
    intersection_graph,
    max_pd,
    socle_colon,
    socle_exchange,
    socle_report,
    spanning_tree_socle,
)
from .textio import (
    IdealSource,
    format_ideal,
    format_spec,
    ideal_to_json,
    parse_ideal,
    parse_variable_order,
)

USAGE_EXIT = 1
PRECONDITION_EXIT = 2
RESOURCE_EXIT = 3
DISAGREEMENT_EXIT = 4

_PRECONDITION_ERRORS = (
    DegreeMismatchError,
    DimensionMismatchError,
    FamilySpecError,
    LinearityError,
    NotStronglyStableError,
    PreconditionError,
    SupportError,
    UnsupportedFamilyError,
    ZeroIdealError,
)


class _Parser(argparse.ArgumentParser):
    def error(self, message):  # exit 1 on usage errors, not argparse's 2
        self.print_usage(sys.stderr)
        sys.stderr.write(f"{self.prog}: error: {message}\n")
        raise SystemExit(USAGE_EXIT)


def _read_input(path: str) -> str:
    if path == "-":
        return sys.stdin.read()
    with open(path, "r", encoding="utf-8") as handle:
        return handle.read()


def _load_source(args) -> IdealSource:
    return parse_ideal(_read_input(args.input))


def _emit(report: dict[str, Any], args) -> None:
    if getattr(args, "json", False):
        print(json.dumps(report, sort_keys=True))
    else:
        print(json.dumps(report, indent=2, sort_keys=True))


def _shift_map(ideals: dict[int, MonomialIdeal]) -> dict[str, list[str]]:
    return {str(j): [str(g) for g in ideal.gens] for j, ideal in sorted(ideals.items())}


def cmd_hs(args) -> int:
    source = _load_source(args)
    I = source.ideal
    if I.is_zero:
        raise ZeroIdealError("shift ideals of the zero ideal are all zero")
    vo = (
        parse_variable_order(args.order, I.n)
        if args.order
        else VariableOrder.identity(I.n)
    )
    want = ("certificate", "distance", "oracle") if args.route == "all" else (args.route,)
    timings: dict[str, float] = {}

    cert = None
    cert_reason = None
    result = certify_lex(I, vo)
    if isinstance(result, QuotientCertificate):
        cert = result
    else:
        search = find_admissible_order(I)
        if search.status == "certified":
            cert = search.certificate
            cert_reason = "lex order under the given variable order failed; found another admissible order"
        else:
            cert_reason = f"no admissible order ({search.status})"

    table = None
    pd: Optional[int] = None
    if cert is not None:
        pd = cert.projective_dimension
    if "oracle" in want or pd is None:
        start = time.perf_counter()
        table = betti_table(I)
        timings["oracle"] = time.perf_counter() - start
        pd = table.pd if pd is None else pd

    levels = (
        [args.j]
        if args.j is not None and not args.all
        else list(range(pd + 2))
    )
    routes: dict[str, Any] = {}
    for route in want:
        if route == "certificate":
            if cert is None:
                routes[route] = {"status": "skipped", "reason": cert_reason}
                continue
            start = time.perf_counter()
            shifts = {j: homological_shift(cert, j) for j in levels}
            timings["certificate"] = time.perf_counter() - start
            entry: dict[str, Any] = {"status": "ok", "shifts": _shift_map(shifts)}
            if cert_reason:
                entry["note"] = cert_reason
            routes[route] = entry
        elif route == "distance":
            if cert is None:
                routes[route] = {"status": "skipped", "reason": cert_reason}
                continue
            if not I.is_equigenerated:
                routes[route] = {
                    "status": "skipped",
                    "reason": "distance route requires an equigenerated ideal",
                }
                continue
            start = time.perf_counter()
            shifts = {j: shifts_by_distance(cert, j) for j in levels}
            timings["distance"] = time.perf_counter() - start
            routes[route] = {"status": "ok", "shifts": _shift_map(shifts)}
        else:
            if table is None:
                start = time.perf_counter()
                table = betti_table(I)
                timings["oracle"] = time.perf_counter() - start
            shifts = {j: table.shift_ideal(j) for j in levels}
            routes[route] = {"status": "ok", "shifts": _shift_map(shifts)}

    computed = [r["shifts"] for r in routes.values() if r["status"] == "ok"]
    agreement = None
    if len(computed) > 1:
        agreement = all(c == computed[0] for c in computed[1:])
    report = {
        "command": "hs",
        "input": format_ideal(I),
        "n": I.n,
        "variable_order": str(vo),
        "pd": pd,
        "routes": routes,
        "agreement": agreement,
    }
    if source.spec is not None:
        report["family"] = format_spec(source.spec)
    if args.timings:
        report["timings"] = timings
    _emit(report, args)
    if agreement is False:
        raise RouteDisagreementError("shift routes disagree; see report")
    return 0


def cmd_soc(args) -> int:
    source = _load_source(args)
    I = source.ideal
    report: dict[str, Any] = {
        "command": "soc",
        "input": format_ideal(I),
        "n": I.n,
        "variable_order": str(VariableOrder.identity(I.n)),
    }
    if source.spec is not None:
        report["family"] = format_spec(source.spec)

    base: SocleReport = socle_report(I)
    report["socle"] = ideal_to_json(base.socle)
    report["max_pd"] = base.max_pd
    report["route"] = base.route
    report["witness"] = None if base.witness is None else str(base.witness)
    report["top_shift"] = ideal_to_json(
        monomial_multiples(base.socle, x_of(range(1, I.n + 1), I.n))
        if not base.socle.is_zero
        else MonomialIdeal(I.n)
    )

    routes: dict[str, Any] = {}
    colon = socle_colon(I, linearity_certified=True)
    routes["colon"] = ideal_to_json(colon)
    cert = certify_lex(I)
    if isinstance(cert, QuotientCertificate) and I.support == tuple(
        range(1, I.n + 1)
    ):
        routes["exchange-formula"] = ideal_to_json(socle_exchange(cert))
    if source.spec is not None:
        try:
            routes["closed-form"] = ideal_to_json(family_socle(source.spec))
        except (UnsupportedFamilyError, DegreeMismatchError) as exc:
            routes["closed-form"] = {"skipped": str(exc)}
    report["routes"] = routes
    values = [v for v in routes.values() if "skipped" not in v]
    agreement = all(v == values[0] for v in values[1:]) if len(values) > 1 else None
    report["agreement"] = agreement

    from .fuzzlab import _as_transversal

    tspec = _as_transversal(source.spec) if source.spec is not None else None
    if tspec is not None:
        graph = intersection_graph(tspec)
        candidates = spanning_tree_socle(tspec)
        report["intersection_graph"] = {
            "vertices": graph.num_vertices,
            "edges": [list(e) for e in graph.edges],
            "connected": graph.is_connected,
            "components": graph.component_count(),
        }
        report["spanning_tree_socle"] = ideal_to_json(candidates)
        report["spanning_tree_equals_socle"] = candidates == base.socle
    _emit(report, args)
    if agreement is False:
        raise RouteDisagreementError("socle routes disagree; see report")
    return 0


def cmd_check(args) -> int:
    source = _load_source(args)
    I = source.ideal
    report: dict[str, Any] = {
        "command": "check",
        "input": format_ideal(I),
        "n": I.n,
        "property": args.property,
    }
    if args.property in ("polymatroidal", "strong-exchange"):
        mode = "exchange" if args.property == "polymatroidal" else "strong"
        result = check_exchange(I, mode)
        report["verdict"] = bool(result.holds)
        if result.witness:
            report["witness"] = [
                str(w) if not isinstance(w, int) else w for w in result.witness
            ]
        if result.reason:
            report["reason"] = result.reason
    elif args.property == "matroidal":
        if not I.is_squarefree:
            offender = next(g for g in I.gens if not g.is_squarefree)
            report["verdict"] = False
            report["reason"] = "not squarefree"
            report["witness"] = [str(offender)]
        else:
            result = check_exchange(I, "exchange")
            report["verdict"] = bool(result.holds)
            if result.witness:
                report["witness"] = [
                    str(w) if not isinstance(w, int) else w for w in result.witness
                ]
    elif args.property == "strongly-stable":
        result = is_strongly_stable(I)
        report["verdict"] = bool(result.holds)
        if result.witness:
            u, i, j = result.witness
            report["witness"] = [str(u), i, j]
    else:  # linear-quotients
        search = find_admissible_order(I)
        report["verdict"] = search.status == "certified"
        report["status"] = search.status
        if search.certificate is not None:
            cert = search.certificate
            report["order"] = [str(g) for g in cert.ordered_gens]
            report["colon_variables"] = [list(s) for s in cert.colon_vars]
    _emit(report, args)
    return 0


def cmd_betti(args) -> int:
    source = _load_source(args)
    I = source.ideal
    table = (
        betti_table(I, args.prime)
        if args.cap is None
        else betti_table(I, args.prime, cap=args.cap)
    )
    entries = [
        {"i": i, "multidegree": str(a), "rank": r}
        for (i, a), r in sorted(
            table.entries.items(),
            key=lambda kv: (kv[0][0], tuple(-e for e in kv[0][1].exponents)),
        )
    ]
    report = {
        "command": "betti",
        "input": format_ideal(I),
        "n": I.n,
        "prime": table.prime,
        "pd": table.pd,
        "totals": {str(i): t for i, t in table.totals().items()},
        "entries": entries,
        "max_pd": max_pd(I) if not I.is_zero else False,
    }
    _emit(report, args)
    return 0


def _parse_budget(text: str) -> dict[str, int]:
    out: dict[str, int] = {}
    if not text:
        return out
    for piece in text.split(","):
        if "=" not in piece:
            raise ParseError(f"budget entries look like key=value, got {piece!r}")
        key, _, value = piece.partition("=")
        key = key.strip()
        if key not in ("n_max", "degree_max", "gen_max"):
            raise ParseError(f"unknown budget key {key!r}")
        out[key] = int(value)
    return out


def cmd_fuzz(args) -> int:
    budget = _parse_budget(args.budget or "")
    conjectures = (
        frozenset(c.strip() for c in args.conjectures.split(",") if c.strip())
        if args.conjectures
        else frozenset(CONJECTURE_KEYS)
    )
    config = CampaignConfig(
        seed=args.seed,
        instance_count=args.count,
        conjectures=conjectures,
        **budget,
    )
    handle = None
    sink = None
    if args.output:
        handle = open(args.output, "w", encoding="utf-8")
        sink = lambda line: handle.write(line + "\n")
    try:
        summary = run_campaign(config, sink)
    finally:
        if handle is not None:
            handle.close()
    _emit(summary.to_json(), args)
    if summary.disagreements:
        raise RouteDisagreementError(
            f"{len(summary.disagreements)} cross-route disagreements; see report"
        )
    return 0


def build_parser() -> argparse.ArgumentParser:
    parser = _Parser(prog="polyshift")
    sub = parser.add_subparsers(dest="command", required=True)

    def common(p):
        p.add_argument("--input", required=True, help="input file, or - for stdin")
        p.add_argument("--json", action="store_true", help="compact JSON output")

    hs = sub.add_parser("hs", help="homological shift ideals")
    common(hs)
    hs.add_argument("-j", type=int, default=None, help="single homological index")
    hs.add_argument("--all", action="store_true", help="all indices up to pd (default)")
    hs.add_argument(
        "--route",
        choices=["certificate", "distance", "oracle", "all"],
        default="all",
    )
    hs.add_argument("--order", default=None, help='variable order like "x2>x1>x3"')
    hs.add_argument("--timings", action="store_true", help="include wall-clock timings")

    soc = sub.add_parser("soc", help="socle ideal and maximal projective dimension")
    common(soc)

    chk = sub.add_parser("check", help="classify an ideal")
    common(chk)
    chk.add_argument(
        "--property",
        required=True,
        choices=[
            "polymatroidal",
            "matroidal",
            "strong-exchange",
            "strongly-stable",
            "linear-quotients",
        ],
    )

    bet = sub.add_parser("betti", help="multigraded Betti table via the homology oracle")
    common(bet)
    bet.add_argument("--prime", type=int, default=None)
    bet.add_argument("--cap", type=int, default=None, help="lcm-lattice size cap")

    fz = sub.add_parser("fuzz", help="run a conjecture-fuzzing campaign")
    fz.add_argument("--seed", type=int, required=True)
    fz.add_argument("--count", type=int, required=True)
    fz.add_argument("--budget", default=None, help="n_max=5,degree_max=4,gen_max=120")
    fz.add_argument(
        "--conjectures", default=None, help="comma list of bbh,chl,transversal_socle"
    )
    fz.add_argument("--output", default=None, help="JSON-lines report path")
    fz.add_argument("--json", action="store_true", help="compact JSON output")
    return parser


_COMMANDS = {
    "hs": cmd_hs,
    "soc": cmd_soc,
    "check": cmd_check,
    "betti": cmd_betti,
    "fuzz": cmd_fuzz,
}


def main(argv: Optional[list[str]] = None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
        return _COMMANDS[args.command](args)
    except SystemExit as exc:
        return int(exc.code or 0)
    except ParseError as exc:
        print(f"parse error: {exc}", file=sys.stderr)
        return USAGE_EXIT
    except ResourceCapError as exc:
        print(f"resource cap: {exc}", file=sys.stderr)
        return RESOURCE_EXIT
    except RouteDisagreementError as exc:
        print(f"internal disagreement: {exc}", file=sys.stderr)
        return DISAGREEMENT_EXIT
    except _PRECONDITION_ERRORS as exc:
        print(f"precondition: {exc}", file=sys.stderr)
        return PRECONDITION_EXIT
    except PolyshiftError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return PRECONDITION_EXIT
    except OSError as exc:
        print(f"i/o error: {exc}", file=sys.stderr)
        return USAGE_EXIT


if __name__ == "__main__":
    raise SystemExit(main())
