"""Command-line entry point.

Exit status: 0 on success, 2 on usage, validation or budget errors, 3 when
`verify` finds the partition pipeline and the normal-form oracle disagreeing.
"""
from __future__ import annotations

import argparse
import logging
import sys
import time
from typing import Optional, Sequence

from . import algebra, amalgam, partitions, pipeline, radial, reference, verify
from .algebra import DEFAULT_CAP, BudgetError
from .laurent import HLaurent
from .report import FORMATS, MomentReport, emit, emit_records
from .words import Letter

log = logging.getLogger("freemoments")

METHODS = ("pipeline", "amalgam", "f4")


def _degree_discrepancies(n: int) -> list[reference.Discrepancy]:
    locs = {pv.location for pv in reference.PRINTED_VALUES if pv.degree == n}
    return [d for d in reference.printed_value_discrepancies(n) if d.location in locs]


def _moment_report(n: int, method: str, cap: int, timing: bool) -> MomentReport:
    t0 = time.perf_counter()
    strata = None
    if method == "pipeline":
        value = pipeline.expect_xy(n, cap)
        if n % 2 == 0:
            strata = pipeline.moment_xy(n, cap).strata
    elif method == "amalgam":
        value = amalgam.oracle_moments(n, cap)[n][0]
    else:
        if n > cap:
            raise BudgetError(f"degree {n} exceeds cap {cap}")
        tau = verify.f4_tau(n)
        if tau is None:
            raise BudgetError(f"the F_4 count is only corrected up to degree {verify.F4_MAX_DEGREE}")
        value = HLaurent({0: tau})
    elapsed = (time.perf_counter() - t0) * 1000 if timing else None
    return MomentReport(n, method, value, strata, _degree_discrepancies(n), elapsed)


def _degrees(args) -> list[int]:
    if args.degree is not None:
        return [args.degree]
    if args.max_degree is not None:
        return list(range(2, args.max_degree + 1, 2))
    raise ValueError("give --degree or --max-degree")


def cmd_moment(args) -> int:
    reports = [_moment_report(n, args.method, args.cap, args.timing) for n in _degrees(args)]
    sys.stdout.write(emit(reports, args.format).decode("utf-8"))
    return 0


def cmd_cumulant(args) -> int:
    reports = []
    for n in _degrees(args):
        t0 = time.perf_counter()
        if n % 2:
            value = HLaurent.zero()
        elif args.method == "pipeline":
            value = pipeline.cumulant_xy(n, args.cap)
        elif args.method == "amalgam":
            value = pipeline.trivial_cumulant(n, amalgam.generating_element(), args.cap)
        else:
            raise BudgetError("cumulants are available from the pipeline and amalgam methods only")
        elapsed = (time.perf_counter() - t0) * 1000 if args.timing else None
        reports.append(MomentReport(n, args.method, value, elapsed_ms=elapsed))
    sys.stdout.write(emit(reports, args.format).decode("utf-8"))
    return 0


def cmd_expand(args) -> int:
    n = args.degree
    if n is None or n < 1:
        raise BudgetError("expand needs --degree >= 1")
    poly = radial.radial_power(n, args.rank)
    records = [{"n": str(k), "beta": str(c)} for k, c in poly.rows()]
    if args.format == "json":
        prefix = f"x^{n} expansion"
        flagged = [d.to_json() for d in reference.printed_value_discrepancies(0)
                   if args.rank == 2 and d.location.startswith(prefix)]
        payload = {"degree": n, "rank": args.rank, "rows": records, "discrepancies": flagged}
        out = emit_records([payload], "json")
    else:
        out = emit_records(records, args.format, ["n", "beta"])
    sys.stdout.write(out)
    return 0


def cmd_expect(args) -> int:
    n = args.degree
    if n is None or n < 1:
        raise BudgetError("expect needs --degree >= 1")
    if n > args.cap:
        raise BudgetError(f"degree {n} exceeds cap {args.cap}")
    if args.method == "amalgam":
        value = algebra.cond_expect(algebra.sphere_sum(1) ** n)
    else:
        value = radial.expect_power(n)
    rec = {"degree": n, "tau": str(value.trace()), "expectation": value.to_json()}
    sys.stdout.write(emit_records([rec], args.format, ["degree", "tau", "expectation"]))
    return 0


def cmd_partitions(args) -> int:
    n = args.degree
    if n is None:
        raise BudgetError("partitions needs --degree")
    records = [{"stratum": partitions.stratum_label(k), "count": str(len(v))}
               for k, v in partitions.even_strata(n).items()]
    if args.format == "json":
        payload = {"degree": n, "nc_count": str(len(partitions.enumerate_nc(n))),
                   "strata": {r["stratum"]: r["count"] for r in records}}
        sys.stdout.write(emit_records([payload], "json"))
    else:
        sys.stdout.write(emit_records(records, args.format, ["stratum", "count"]))
    return 0


def _letter(s: str) -> Letter:
    try:
        letter = Letter[s]
    except KeyError:
        raise argparse.ArgumentTypeError(f"letter must be one of a, A, b, B, not {s!r}") from None
    if letter.factor != 1:
        raise argparse.ArgumentTypeError("letters must come from a, b and their inverses")
    return letter


def cmd_fpq(args) -> int:
    value = algebra.f_pq(args.k, args.l, args.p, args.q)
    claimed = reference.f_pq_closed_form(args.k, args.l, args.p, args.q)
    rec = {
        "k": args.k, "l": args.l, "p": args.p.name, "q": args.q.name,
        "value": value.to_json(),
        "closed_form": None if claimed is None else claimed.to_json(),
        "closed_form_matches": None if claimed is None else claimed == value,
    }
    sys.stdout.write(emit_records([rec], args.format, list(rec)))
    return 0


def cmd_verify(args) -> int:
    max_degree = args.max_degree if args.max_degree is not None else (args.degree or 8)
    rep = verify.verify_cross(max_degree, args.cap)
    if args.format == "json":
        sys.stdout.write(emit_records([rep.to_json()], "json"))
    else:
        cols = ["degree", "pipeline_tau", "amalgam_tau", "f4_tau", "agree", "f4_agree"]
        sys.stdout.write(emit_records([r.to_json() for r in rep.rows], args.format, cols))
        if args.format == "text":
            for d in rep.discrepancies:
                sys.stdout.write(f"printed {d.paper_value} vs computed {d.computed_value} at {d.location}\n")
    return 0 if rep.ok else 3


COMMANDS = {
    "moment": cmd_moment,
    "cumulant": cmd_cumulant,
    "expand": cmd_expand,
    "expect": cmd_expect,
    "partitions": cmd_partitions,
    "fpq": cmd_fpq,
    "verify": cmd_verify,
}


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="freemoments",
        description="Exact B-valued and scalar moments of x+y in L(F2) *_{L(F1)} L(F2).",
    )
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("-n", "--degree", type=int)
    common.add_argument("--max-degree", type=int)
    common.add_argument("--method", choices=METHODS, default="pipeline")
    common.add_argument("--format", choices=FORMATS, default="text")
    common.add_argument("--cap", type=int, default=DEFAULT_CAP, help="degree budget (default %(default)s)")
    common.add_argument("--timing", action="store_true", help="include elapsed_ms in reports")
    common.add_argument("-v", "--verbose", action="store_true")
    sub = parser.add_subparsers(dest="command", required=True)
    for name in COMMANDS:
        sp = sub.add_parser(name, parents=[common])
        if name == "expand":
            sp.add_argument("--rank", type=int, default=2, help="free group rank N")
        if name == "fpq":
            sp.add_argument("-k", type=int, required=True)
            sp.add_argument("-l", type=int, required=True)
            sp.add_argument("-p", type=_letter, required=True)
            sp.add_argument("-q", type=_letter, required=True)
    return parser


def main(argv: Optional[Sequence[str]] = None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    logging.basicConfig(level=logging.DEBUG if args.verbose else logging.WARNING,
                        format="%(levelname)s %(name)s: %(message)s")
    try:
        return COMMANDS[args.command](args)
    except (BudgetError, ValueError) as exc:
        log.debug("command failed", exc_info=True)
        sys.stderr.write(f"error: {exc}\n")
        return 2


if __name__ == "__main__":
    sys.exit(main())
