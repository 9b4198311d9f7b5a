"""Batch front-end: load or generate a semigroup, verify, emit JSON reports.

Exit codes: 0 all requested checks pass, 1 a verified failure with a
certificate, 2 malformed input.  Reports are deterministic byte-for-byte for
a fixed configuration: keys are sorted and nothing time-dependent is embedded.
"""

import argparse
import json
import sys

from . import __version__
from .algebras import element, format_element, verify_isomorphism
from .categories import build_category, category_to_json, verify_axioms
from .ehresmann import (
    check_variety,
    derive_structure,
    is_left_restriction,
    is_right_restriction,
    maximal_subsemilattices,
    order_containment,
)
from .errors import SemicatError
from .reports import jsonable
from .reptheory import (
    ei_report,
    radical_oracle,
    radical_span,
    reg_e,
    semigroup_mul,
    semisimple_image_check,
)
from .semigroups import from_interchange, is_subsemilattice
from .zoo import parse_zoo_spec

SCHEMA_VERSION = 1


class InputError(Exception):
    pass


def _load(args):
    if args.zoo:
        try:
            return parse_zoo_spec(args.zoo), None
        except ValueError as err:
            raise InputError(str(err)) from err
    try:
        with open(args.input, "r", encoding="utf-8") as fh:
            obj = json.load(fh)
    except OSError as err:
        raise InputError(f"cannot read {args.input}: {err}") from err
    except json.JSONDecodeError as err:
        raise InputError(f"{args.input} is not valid JSON: {err}") from err
    try:
        S, E = from_interchange(obj)
    except (SemicatError, ValueError) as err:
        raise InputError(str(err)) from err
    if E is None:
        try:
            options = maximal_subsemilattices(S)
        except ValueError as err:
            raise InputError(f"no E given and enumeration impossible: {err}") from err
        listing = "; ".join(str(list(o)) for o in options)
        raise InputError(
            f"input has no E field; choose one of the maximal subsemilattices: {listing}"
        )
    if not is_subsemilattice(S, E):
        raise InputError("declared E is not a subsemilattice")
    try:
        return derive_structure(S, E), None
    except SemicatError as err:
        # not Ehresmann: a verified failure, not an input error
        return None, err


def _emit(args, payload, passed):
    body = {
        "schema_version": SCHEMA_VERSION,
        "config": {
            "command": args.command,
            "input": args.input,
            "zoo": args.zoo,
            "order": args.order,
            "workers": args.workers,
        },
        "passed": passed,
        "result": jsonable(payload),
    }
    text = json.dumps(body, sort_keys=True, indent=2) + "\n"
    if args.report:
        with open(args.report, "w", encoding="utf-8") as fh:
            fh.write(text)
    return body


def _maybe_emit_category(args, ES):
    if args.emit_category and ES is not None:
        C = build_category(ES)
        with open(args.emit_category, "w", encoding="utf-8") as fh:
            json.dump(category_to_json(C), fh, sort_keys=True, indent=2)
            fh.write("\n")


def _status(ok, label, detail=""):
    print(f"{'PASS' if ok else 'FAIL'}  {label}{': ' + detail if detail else ''}")


def _classification(left, right):
    if left and right:
        return "restriction"
    if left:
        return "left restriction"
    if right:
        return "right restriction"
    return "neither left nor right restriction"


def cmd_check(args):
    ES, failure = _load(args)
    if ES is None:
        _status(False, "ehresmann-structure", str(failure))
        _emit(args, {"derive_error": str(failure)}, False)
        return 1
    _maybe_emit_category(args, ES)

    variety = check_variety(ES.S, ES.plus, ES.star)
    left, lw = is_left_restriction(ES)
    right, rw = is_right_restriction(ES)
    containment = order_containment(ES)
    axioms = verify_axioms(build_category(ES))

    _status(True, "ehresmann-structure", f"|S|={ES.n}, |E|={len(ES.E)}")
    _status(variety.passed, "variety-identities")
    print(f"INFO  classification: {_classification(left, right)}")
    if not left:
        print(f"INFO  left-restriction witness (a, e) = {lw}")
    if not right:
        print(f"INFO  right-restriction witness (a, e) = {rw}")
    _status(containment.consistent, "order-containment",
            f"leq_l in leq_r: {containment.l_in_r}, leq_r in leq_l: {containment.r_in_l}")
    _status(axioms.passed, "category-axioms")
    for c in axioms.failures():
        print(f"      {c.name} failed at {c.witness}")

    payload = {
        "size": ES.n,
        "e_size": len(ES.E),
        "variety": variety.to_json(),
        "left_restriction": left,
        "left_restriction_witness": lw,
        "right_restriction": right,
        "right_restriction_witness": rw,
        "classification": _classification(left, right),
        "order_containment": {
            "l_in_r": containment.l_in_r,
            "l_in_r_witness": containment.l_in_r_witness,
            "r_in_l": containment.r_in_l,
            "r_in_l_witness": containment.r_in_l_witness,
        },
        "axioms": axioms.to_json(),
    }
    passed = variety.passed and containment.consistent and axioms.passed
    _emit(args, payload, passed)
    return 0 if passed else 1


def cmd_iso(args):
    ES, failure = _load(args)
    if ES is None:
        _status(False, "ehresmann-structure", str(failure))
        _emit(args, {"derive_error": str(failure)}, False)
        return 1
    _maybe_emit_category(args, ES)

    report = verify_isomorphism(ES, order=args.order, workers=args.workers)
    _status(report.bijection, "bijection", "psi o phi = id and phi o psi = id")
    _status(
        report.homomorphism,
        "homomorphism",
        f"{report.pairs_checked} pairs ({report.case1_count} composable)",
    )
    if report.witness_expansion:
        names = ES.S.names
        w = report.witness_expansion

        def fmt(coeffs):
            return format_element(element("category", coeffs), names)

        print(f"      first failing pair: a={ES.S.name(w['a'])}, b={ES.S.name(w['b'])}")
        print(f"      phi(a)        = {fmt(w['phi_a'])}")
        print(f"      phi(b)        = {fmt(w['phi_b'])}")
        print(f"      phi(a*b)      = {fmt(w['phi_ab'])}")
        print(f"      phi(a)*phi(b) = {fmt(w['phi_a_phi_b'])}")
    _emit(args, report.to_json(), report.passed)
    return 0 if report.passed else 1


def cmd_rep(args):
    ES, failure = _load(args)
    if ES is None:
        _status(False, "ehresmann-structure", str(failure))
        _emit(args, {"derive_error": str(failure)}, False)
        return 1
    _maybe_emit_category(args, ES)

    C = build_category(ES)
    reg = reg_e(ES)
    ei = ei_report(ES, C)
    rad_dim, _ = radical_oracle(ES.n, semigroup_mul(ES.S))
    payload = {
        "reg_e_size": len(reg.elements),
        "is_EI": ei.is_ei,
        "radical_dim": rad_dim,
        "ei": ei.to_json(),
    }
    passed = True
    _status(True, "reg_e", f"size {len(reg.elements)}, inverse subsemigroup verified")
    _status(True, "is_EI", str(ei.is_ei))
    print(f"INFO  radical_dim(QS) = {rad_dim}")

    if ei.is_ei:
        rad = radical_span(ES, C)
        payload["radical_span"] = rad.to_json()
        payload["radical_dim_category"] = rad.oracle_dim
        passed = passed and rad.passed
        _status(rad.passed, "radical-span",
                f"{rad.claimed_dim} non-invertible vs oracle {rad.oracle_dim}, "
                f"nilpotency index {rad.nilpotency_index}")

    semi = semisimple_image_check(ES, C, order=args.order, allow_outside_theorem=True)
    payload["semisimple"] = semi.to_json()
    payload["semisimple_check"] = semi.semisimple_check
    if semi.outside_theorem:
        print("INFO  semisimple-image: preconditions not met "
              f"(restriction: {_classification(semi.left_restriction, semi.right_restriction)}, "
              f"EI: {semi.is_ei}); raw data only")
        print(f"INFO  dim Rad(QS) = {semi.radical_dim_s}, |S| - |Reg_E| = {ES.n - semi.reg_size}")
    else:
        passed = passed and bool(semi.semisimple_check)
        _status(bool(semi.semisimple_check), "semisimple-image",
                f"dim Rad(QS) = {semi.radical_dim_s} = |S| - |Reg_E|"
                if semi.dims_match else "dimension mismatch")

    _emit(args, payload, passed)
    return 0 if passed else 1


def build_parser():
    parser = argparse.ArgumentParser(
        prog="semicat",
        description="Verify Ehresmann structure, algebra isomorphisms and "
                    "representation-theoretic consequences of finite semigroups.",
    )
    parser.add_argument("--version", action="version", version=f"semicat {__version__}")
    sub = parser.add_subparsers(dest="command", required=True)
    common = argparse.ArgumentParser(add_help=False)
    src = common.add_mutually_exclusive_group(required=True)
    src.add_argument("--input", help="path to a semigroup interchange JSON file")
    src.add_argument("--zoo", help="zoo spec: pt:N, b:N, t:N, op:N, z:N, six, ssl:chainK:z2,z3")
    common.add_argument("--order", choices=("r", "l"), default="r",
                        help="natural order used for phi/psi (default r)")
    common.add_argument("--report", help="write a JSON report to this path")
    common.add_argument("--workers", type=int, default=1,
                        help="worker processes for the pair sweeps")
    common.add_argument("--emit-category", help="dump the category to this path as JSON")

    p = sub.add_parser("check", parents=[common],
                       help="validate, derive the structure, verify the axioms")
    p.set_defaults(func=cmd_check)
    p = sub.add_parser("iso", parents=[common],
                       help="verify the algebra isomorphism phi/psi")
    p.set_defaults(func=cmd_iso)
    p = sub.add_parser("rep", parents=[common],
                       help="Reg_E, EI test, radical and semisimple image")
    p.set_defaults(func=cmd_rep)
    return parser


def main(argv=None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    if args.workers < 1:
        parser.error("--workers must be >= 1")
    try:
        return args.func(args)
    except InputError as err:
        print(f"ERROR  {err}", file=sys.stderr)
        return 2


def console():
    raise SystemExit(main())
