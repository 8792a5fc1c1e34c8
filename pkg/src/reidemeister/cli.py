"""Command-line front end.

Exit codes: 0 ok, 1 a verification check failed, 2 bad input, 3 (N, eps)
incompatible with theta, 4 general theta without --coeff-bound, 5 a stated
closed form disagrees with the computed spectrum.
"""

from __future__ import annotations

import argparse
import math
import sys
from pathlib import Path

from .cokernel import INF, ExtNat, coker_card_formula, coker_card_oracle
from .groups import AutoDesc, GroupDesc, IncompatibleAutomorphism, reidemeister_semidirect
from .matrices import (
    clear_p_denominators, format_matrix, nullspace, parse_matrix, parse_vector, smith_normal_form,
)
from .rings import RingDesc, is_member, parse_rational
from .spectrum.catalog import DOCUMENTED_DISCREPANCIES, STATED, closed_form
from .spectrum.centralizer import SPEC_INF_ONLY
from .spectrum.classify import classify_theta
from .spectrum.enumerate import EnumBound, SpectrumReport, UnsupportedTheta, enumerate_spectrum
from .verify import DISCREPANCY, FAIL, run_verification

EXIT_OK, EXIT_FAILED, EXIT_INPUT, EXIT_INCOMPATIBLE, EXIT_UNSUPPORTED, EXIT_DISCREPANCY = 0, 1, 2, 3, 4, 5


class InputError(ValueError):
    pass


# -- documents ---------------------------------------------------------------

def parse_document(text: str, allowed: set[str]) -> dict[str, str]:
    """``key: value`` lines; '#' starts a comment."""
    fields: dict[str, str] = {}
    for lineno, raw in enumerate(text.splitlines(), 1):
        line = raw.split("#", 1)[0].strip()
        if not line:
            continue
        key, sep, value = line.partition(":")
        key = key.strip()
        if not sep:
            raise InputError(f"line {lineno}: expected 'key: value'")
        if key not in allowed:
            raise InputError(f"line {lineno}: unknown field {key!r}")
        if key in fields:
            raise InputError(f"line {lineno}: duplicate field {key!r}")
        fields[key] = value.strip()
    return fields


def parse_group(text: str) -> GroupDesc:
    doc = parse_document(text, {"ring", "p", "n", "theta", "label"})
    for key in ("ring", "theta"):
        if key not in doc:
            raise InputError(f"group document lacks {key!r}")
    ring_text = doc["ring"]
    if ring_text == "Z[1/p]":
        if "p" not in doc:
            raise InputError("ring Z[1/p] needs a 'p' field")
        ring_text = f"Z[1/{doc['p']}]"
    try:
        ring = RingDesc.parse(ring_text)
        theta = parse_matrix(doc["theta"])
    except ValueError as exc:
        raise InputError(str(exc)) from exc
    if ring.kind == RingDesc.INTEGERS:
        raise InputError("kernel ring must be Q or Z[1/p]")
    if "p" in doc and ring.p != int(parse_rational(doc["p"])):
        raise InputError("field 'p' disagrees with the ring")
    if "n" in doc:
        try:
            n = int(doc["n"])
        except ValueError:
            raise InputError(f"n must be a positive integer, got {doc['n']!r}") from None
        if n != theta.rows:
            raise InputError(f"n = {n} but theta is {theta.rows}x{theta.cols}")
    try:
        return GroupDesc(ring, theta, doc.get("label", ""))
    except ValueError as exc:
        raise InputError(str(exc)) from exc


def parse_auto(text: str, group: GroupDesc) -> AutoDesc:
    doc = parse_document(text, {"N", "eps", "z"})
    for key in ("N", "eps"):
        if key not in doc:
            raise InputError(f"automorphism document lacks {key!r}")
    if doc["eps"] not in ("+1", "1", "-1"):
        raise InputError(f"eps must be +1 or -1, got {doc['eps']!r}")
    try:
        N = parse_matrix(doc["N"])
        z = parse_vector(doc["z"]) if "z" in doc else ()
        auto = AutoDesc(N, int(doc["eps"]), z)
    except ValueError as exc:
        raise InputError(str(exc)) from exc
    if N.rows != group.n:
        raise InputError(f"N is {N.rows}x{N.cols} but the kernel has rank {group.n}")
    if not all(is_member(x, group.ring) for x in auto.z):
        raise InputError(f"z has entries outside {group.ring}")
    return auto


def _read(path: str) -> str:
    try:
        return Path(path).read_text()
    except OSError as exc:
        raise InputError(f"cannot read {path}: {exc.strerror}") from exc


# -- commands ----------------------------------------------------------------

def cmd_rnum(args, out) -> int:
    group = parse_group(_read(args.group))
    auto = parse_auto(_read(args.auto), group)
    try:
        result = reidemeister_semidirect(group, auto)
    except IncompatibleAutomorphism as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_INCOMPATIBLE
    if args.format == "lines":
        print(f"R {result.total}", file=out)
        if result.parts:
            print(f"PARTS {result.parts[0]} {result.parts[1]}", file=out)
    else:
        print(f"R = {result}", file=out)
    return EXIT_OK


def _bound(args) -> EnumBound:
    try:
        return EnumBound(args.bound, args.value_cap, args.coeff_bound)
    except ValueError as exc:
        raise InputError(str(exc)) from exc


def _closed_form_lines(report: SpectrumReport) -> list[str]:
    lines = []
    for comp in report.comparisons:
        spec = comp.spec
        if comp.matches:
            lines.append(f"CLOSED-FORM {spec.clause_id} MATCH variant={spec.variant} set={spec.text}")
            continue
        details = [f"variant={spec.variant}", f"set={spec.text}"]
        if comp.missing_from_closed_form:
            details.append("computed-not-in-set=" + ",".join(map(str, comp.missing_from_closed_form)))
        if comp.missing_from_computed:
            details.append("in-set-not-attained=" + ",".join(map(str, comp.missing_from_computed)))
        lines.append(f"CLOSED-FORM {spec.clause_id} DISCREPANCY " + " ".join(details))
    return lines


def cmd_spectrum(args, out) -> int:
    group = parse_group(_read(args.group))
    try:
        report = enumerate_spectrum(group, _bound(args), jobs=args.jobs)
    except UnsupportedTheta as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_UNSUPPORTED
    human = args.format == "human"
    if human:
        print(f"group {group.ring}, theta {format_matrix(group.theta)}"
              + (f" ({group.label})" if group.label else ""), file=out)
        print(f"case {report.theta_case}; search {report.search}; "
              f"exponent bound {report.bound.t}, value cap {report.bound.value_cap}", file=out)
        for note in report.notes:
            print(f"note: {note}", file=out)
    for k, auto in report.computed.items():
        print(f"SPEC {k} WITNESS {format_matrix(auto.N)}", file=out)
    print("SPEC inf", file=out)
    for line in _closed_form_lines(report):
        print(line, file=out)
    if report.generic_only:
        print("SAFETY-NET values found only by generic search: "
              + ",".join(map(str, report.generic_only)), file=out)
    if human and report.discrepancy and report.documented:
        print(f"note: {DOCUMENTED_DISCREPANCIES[report.closed_form_id]}", file=out)
    return EXIT_DISCREPANCY if report.discrepancy or report.generic_only else EXIT_OK


def _spec_text(clause: str | None, p: int | None) -> str | None:
    specs = closed_form(clause, p)
    if not specs:
        return None
    stated = next(s for s in specs if s.variant == STATED)
    if stated.text == "{}":
        return "{inf}"
    return f"{stated.text} u {{inf}}"


def cmd_classify(args, out) -> int:
    group = parse_group(_read(args.group))
    case = classify_theta(group)
    p = group.ring.p
    print(f"theta case: {case}", file=out)
    if case.clause is not None:
        base = case.clause.split("[", 1)[0]
        print(f"case {base}, Spec = {_spec_text(case.clause, p)}", file=out)
        print(f"clause: {case.clause}", file=out)
        if case.clause in DOCUMENTED_DISCREPANCIES:
            print(f"note: {DOCUMENTED_DISCREPANCIES[case.clause]}", file=out)
    if group.ring.kind == RingDesc.RATIONALS:
        decision = enumerate_spectrum(group).decision
        if decision.verdict == SPEC_INF_ONLY:
            print(f"R-infinity: yes ({decision.certificate})", file=out)
        else:
            print(f"R-infinity: no (witness N = {format_matrix(decision.witness)} has R = 2)", file=out)
    elif case.clause is None:
        print("R-infinity: undecided (no closed form; try 'spectrum --coeff-bound')", file=out)
    else:
        empty = _spec_text(case.clause, p) == "{inf}"
        print(f"R-infinity: {'yes' if empty else 'no'}", file=out)
    return EXIT_OK


def cmd_verify(args, out) -> int:
    results = run_verification(_bound(args))
    for result in results:
        print(result.line(), file=out)
    failed = sum(r.status == FAIL for r in results)
    flagged = sum(r.status == DISCREPANCY for r in results)
    print(f"{len(results)} checks, {failed} failed, {flagged} documented discrepancies", file=out)
    return EXIT_FAILED if failed else EXIT_OK


def cmd_oracle(args, out) -> int:
    try:
        ring = RingDesc.parse(args.ring)
        m = parse_matrix(args.matrix)
    except ValueError as exc:
        raise InputError(str(exc)) from exc
    if not m.is_square:
        raise InputError("matrix must be square")
    try:
        formula = coker_card_formula(m, ring)
    except ValueError as exc:
        raise InputError(str(exc)) from exc
    print(f"formula {formula}", file=out)
    if ring.kind == RingDesc.RATIONALS:
        kernel = nullspace(m)
        oracle = INF if kernel else ExtNat(1)
        print(f"kernel dimension over Q {len(kernel)}", file=out)
    else:
        cleared, shift = (m, 0) if ring.kind == RingDesc.INTEGERS else clear_p_denominators(m, ring.p)
        diagonal = smith_normal_form(cleared).diagonal
        prefix = "" if ring.kind == RingDesc.INTEGERS else f"cleared p^{shift} * M, "
        print(f"{prefix}Smith diagonal {','.join(map(str, diagonal))}", file=out)
        if ring.kind == RingDesc.P_LOCAL:
            oracle = coker_card_oracle(m, ring.p)
        else:
            oracle = INF if 0 in diagonal else ExtNat(math.prod(int(d) for d in diagonal))
    print(f"oracle {oracle}", file=out)
    agree = oracle == formula
    print(f"agree {'yes' if agree else 'no'}", file=out)
    return EXIT_OK if agree else EXIT_FAILED


# -- entry point -----------------------------------------------------------------

def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="reidemeister",
        description="Reidemeister numbers and spectra of Q^n and Z[1/p]^n semidirect Z.")
    sub = parser.add_subparsers(dest="command", required=True)

    def with_format(p):
        p.add_argument("--format", choices=("human", "lines"), default="human")
        return p

    def with_bounds(p):
        p.add_argument("--bound", type=int, default=4, help="exponent bound t (default 4)")
        p.add_argument("--value-cap", type=int, default=1000, help="largest R reported (default 1000)")
        p.add_argument("--coeff-bound", type=int, default=None,
                       help="coefficient bound for the generic centralizer search")
        return p

    p = with_format(sub.add_parser("rnum", help="Reidemeister number of one automorphism"))
    p.add_argument("group")
    p.add_argument("auto")
    p.set_defaults(func=cmd_rnum)

    p = with_bounds(with_format(sub.add_parser("spectrum", help="bounded Reidemeister spectrum")))
    p.add_argument("group")
    p.add_argument("--jobs", type=int, default=1, help="worker processes (output does not depend on it)")
    p.set_defaults(func=cmd_spectrum)

    p = with_format(sub.add_parser("classify", help="theta case, clause and R-infinity verdict"))
    p.add_argument("group")
    p.set_defaults(func=cmd_classify)

    p = with_bounds(with_format(sub.add_parser("verify", help="reproduce every catalogued spectrum")))
    p.set_defaults(func=cmd_verify)

    p = with_format(sub.add_parser("oracle", help="cokernel size: determinant formula vs Smith form"))
    p.add_argument("matrix", help="matrix text, rows split by ';' and entries by ','")
    p.add_argument("--ring", default="Q", help="Q, Z or Z[1/p] (default Q)")
    p.set_defaults(func=cmd_oracle)
    return parser


def main(argv: list[str] | None = None, out=None) -> int:
    out = out or sys.stdout
    args = build_parser().parse_args(argv)
    try:
        return args.func(args, out)
    except InputError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_INPUT


if __name__ == "__main__":
    sys.exit(main())
