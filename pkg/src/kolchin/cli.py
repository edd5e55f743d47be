"""Command-line front end.

Exit codes: 0 success, 1 malformed input, 2 internal cross-check failure,
3 resource guard tripped.
"""
from __future__ import annotations

import argparse
import json
import os
import re
import sys
from typing import Any, Sequence

from . import diffdim, lattice, macaulay
from .errors import CrossCheckError, InputError, MethodDisagreement, ResourceGuard
from .numpoly import NumPoly

BUDGET_ENV = "KOLCHIN_BUDGET"

METHODS = {
    "interp": lambda E, budget: lattice.dimension_polynomial(E, budget),
    "rec": lambda E, budget: lattice.dimension_polynomial_rec(E),
    "ie": lambda E, budget: lattice.dimension_polynomial_ie(E),
}


class _Parser(argparse.ArgumentParser):
    def error(self, message: str):
        # usage errors are malformed input, not cross-check failures
        self.print_usage(sys.stderr)
        self.exit(1, f"{self.prog}: error: {message}\n")


# -- input parsing -----------------------------------------------------------

_ROW = re.compile(r"\(([^()]*)\)")


def _int(text: str) -> int:
    try:
        return int(text.strip())
    except ValueError:
        raise InputError(f"not an integer: {text.strip()!r}") from None


def parse_poly(text: str) -> NumPoly:
    """Literal ``a_d,...,a_0`` of standard coefficients."""
    parts = [t for t in text.split(",")]
    if not text.strip() or any(not t.strip() for t in parts):
        raise InputError(f"bad polynomial literal {text!r}")
    return NumPoly.from_standard(_int(t) for t in parts)


def parse_int_list(text: str) -> list[int]:
    parts = text.split(",")
    if not text.strip() or any(not t.strip() for t in parts):
        raise InputError(f"bad integer list {text!r}")
    return [_int(t) for t in parts]


def parse_inline(text: str) -> diffdim.DifferentialSystem:
    """``m=2; rows=(1,2),(2,1)``; repeat ``rows=`` for more indeterminates."""
    m = None
    sets: list[list[list[int]]] = []
    for clause in text.split(";"):
        clause = clause.strip()
        if not clause:
            continue
        key, sep, value = clause.partition("=")
        if not sep:
            raise InputError(f"expected key=value, got {clause!r}")
        key = key.strip()
        if key == "m":
            m = _int(value)
        elif key == "rows":
            rest = _ROW.sub("", value).replace(",", "").strip()
            if rest:
                raise InputError(f"bad rows literal {value!r}")
            sets.append([[_int(x) for x in r.split(",")] if r.strip() else []
                         for r in _ROW.findall(value)])
        else:
            raise InputError(f"unknown key {key!r}")
    if m is None:
        raise InputError("inline literal must give m")
    return _build_system(m, sets or [[]])


def parse_file(path: str) -> diffdim.DifferentialSystem:
    """JSON ``{"m": int, "sets": [[[int, ...], ...], ...]}``; ``"rows"`` for one set."""
    try:
        with open(path) as fh:
            data = json.load(fh)
    except OSError as exc:
        raise InputError(f"cannot read {path}: {exc}") from None
    except json.JSONDecodeError as exc:
        raise InputError(f"bad JSON in {path}: {exc}") from None
    if not isinstance(data, dict) or not isinstance(data.get("m"), int):
        raise InputError('expected a JSON object with integer "m"')
    if "sets" in data:
        sets = data["sets"]
    elif "rows" in data:
        sets = [data["rows"]]
    else:
        raise InputError('expected "sets" or "rows"')
    if not isinstance(sets, list) or not all(isinstance(s, list) for s in sets):
        raise InputError('"sets" must be a list of lists of rows')
    for s in sets:
        for r in s:
            if not isinstance(r, list) or not all(isinstance(x, int) and not isinstance(x, bool)
                                                  for x in r):
                raise InputError(f"bad row {r!r}")
    return _build_system(data["m"], sets)


def _build_system(m: int, sets: list) -> diffdim.DifferentialSystem:
    if m < 1:
        raise InputError(f"m must be at least 1, got {m}")
    return diffdim.DifferentialSystem(m, tuple(lattice.ExponentSet(m, tuple(map(tuple, s)))
                                               for s in sets))


def _system(args) -> diffdim.DifferentialSystem:
    if args.inline is not None:
        return parse_inline(args.inline)
    return parse_file(args.file)


# -- reporting ---------------------------------------------------------------

def describe(p: NumPoly) -> dict[str, Any]:
    b = macaulay.minimizing_coefficients(p)
    c = macaulay.macaulay_constants(b)
    return {
        "degree": p.degree,
        "standard": list(p.standard),
        "power_form": p.power_form(),
        "minimizing": list(b),
        "macaulay": {
            "c_(d+1)..c_1": list(c),
            "renumbered c_d..c_0": list(c),
        },
        "kolchin": macaulay.is_kolchin(p),
    }


def _text(p: NumPoly, info: dict[str, Any]) -> list[str]:
    return [
        f"polynomial:  {p}   ({info['power_form']})",
        f"degree:      {info['degree']}",
        f"standard:    a_d..a_0 = {tuple(info['standard'])}",
        f"minimizing:  b_d..b_0 = {tuple(info['minimizing'])}",
        f"macaulay:    c_(d+1)..c_1 = {tuple(info['macaulay']['c_(d+1)..c_1'])}"
        f"  [renumbered c_d..c_0]",
        f"kolchin:     {str(info['kolchin']).lower()}",
    ]


def _emit(args, payload: dict[str, Any], lines: list[str]) -> None:
    if args.format == "json":
        print(json.dumps(payload, indent=2))
    else:
        print("\n".join(lines))


# -- commands ----------------------------------------------------------------

def _dimpoly_of(sys_: diffdim.DifferentialSystem, method: str, budget: int):
    names = list(METHODS) if method == "all" else [method]
    results = {}
    for name in names:
        total = NumPoly()
        for E in sys_.sets:
            total = total + METHODS[name](E, budget)
        results[name] = total
    distinct = set(results.values())
    if len(distinct) > 1:
        shown = ", ".join(f"{k}: {v.power_form()}" for k, v in results.items())
        raise MethodDisagreement(f"dimension polynomial methods disagree ({shown})")
    return next(iter(distinct)), (True if method == "all" else None)


def cmd_dimpoly(args) -> None:
    sys_ = _system(args)
    p, agree = _dimpoly_of(sys_, args.method, args.budget)
    info = describe(p)
    info["method"] = args.method
    info["method_agreement"] = agree
    lines = _text(p, info)
    lines.append(f"method:      {args.method}"
                 + ("  (all methods agree)" if agree else ""))
    _emit(args, info, lines)


def cmd_minimize(args) -> None:
    p = parse_poly(args.poly)
    b = macaulay.minimizing_coefficients(p)
    _emit(args, {"standard": list(p.standard), "minimizing": list(b)},
          [f"polynomial:  {p}   ({p.power_form()})", f"minimizing:  b_d..b_0 = {b}"])


def cmd_macaulay(args) -> None:
    p = parse_poly(args.poly)
    info = describe(p)
    info["nondecreasing"] = macaulay.macaulay_nondecreasing(p)
    _emit(args, info, _text(p, info) + [f"nondecreasing: {str(info['nondecreasing']).lower()}"])


def cmd_reconstruct(args) -> None:
    c = parse_int_list(args.constants)
    p = macaulay.reconstruct(c)
    info = describe(p)
    _emit(args, info, _text(p, info))


def cmd_is_kolchin(args) -> None:
    p = parse_poly(args.poly)
    payload = {
        "standard": list(p.standard),
        "minimizing": list(macaulay.minimizing_coefficients(p)),
        "kolchin": macaulay.is_kolchin(p),
        "nondecreasing": macaulay.macaulay_nondecreasing(p),
    }
    _emit(args, payload, [f"kolchin: {str(payload['kolchin']).lower()}",
                          f"minimizing: {tuple(payload['minimizing'])}"])


def cmd_compare(args) -> None:
    p, q = parse_poly(args.left), parse_poly(args.right)
    result = macaulay.sit_compare(p, q)
    payload = {
        "left": list(p.standard),
        "right": list(q.standard),
        "left_minimizing": list(macaulay.minimizing_coefficients(p)),
        "right_minimizing": list(macaulay.minimizing_coefficients(q)),
        "order": str(result),
    }
    _emit(args, payload, [str(result)])


def cmd_oracle(args) -> None:
    sys_ = _system(args)
    if args.s_max < 0:
        raise InputError("--s-max must be non-negative")
    p = diffdim.system_dimension_polynomial(sys_, args.budget)
    counts = [0] * (args.s_max + 1)
    for E in sys_.sets:
        for s, c in enumerate(lattice.count_table(E, args.s_max, args.budget)):
            counts[s] += c
    bound = max(lattice.stabilization_bound(E) for E in sys_.sets)
    table = [{"s": s, "count": counts[s], "eval": p(s), "agree": counts[s] == p(s)}
             for s in range(args.s_max + 1)]
    payload = {"standard": list(p.standard), "power_form": p.power_form(),
               "stabilization_bound": bound, "table": table}
    lines = [f"polynomial: {p}   ({p.power_form()})", f"stabilization bound: {bound}",
             f"{'s':>4} {'count':>10} {'eval':>10}  agree"]
    lines += [f"{r['s']:>4} {r['count']:>10} {r['eval']:>10}  {'yes' if r['agree'] else 'no'}"
              for r in table]
    _emit(args, payload, lines)
    mismatch = [r["s"] for r in table if r["s"] >= bound and not r["agree"]]
    if mismatch:
        raise CrossCheckError(f"oracle and polynomial differ past the bound at s={mismatch}")


def cmd_example(args) -> None:
    name = args.name
    if name == "ex2":
        E = diffdim.ex2_exponents(args.k)
    elif name == "triangular":
        E = diffdim.triangular_family(args.m)
    elif name == "equations":
        E = diffdim.equations_family(args.m)
    else:
        E = lattice.ExponentSet(args.m, ((args.d,) + (0,) * (args.m - 1),))
    p, agree = _dimpoly_of(diffdim.DifferentialSystem.single(E), "all", args.budget)
    info = describe(p)
    info["rows"] = [list(r) for r in E.rows]
    info["method_agreement"] = agree
    if name == "single":
        info["single_equation_match"] = p == diffdim.single_equation_poly(args.m, args.d)
        cand = diffdim.classify_minimal_candidate(p, args.m)
        info["minimal_candidate"] = {"constant_macaulay": cand.constant_macaulay,
                                     "degree_matches": cand.degree_matches,
                                     "order": cand.order}
    _emit(args, info, [f"rows:        {E.rows}"] + _text(p, info))


def cmd_report(args) -> None:
    rep = diffdim.standard_coefficient_report(args.m_max, args.budget)
    payload = {
        "rows": [{"m": r.m, "standard": list(r.poly.standard), "minimizing": list(r.minimizing),
                  "macaulay": list(r.constants), "a0_identity": r.identity_ok}
                 for r in rep.rows],
        "equations_variant": [{"m": m, "standard": list(p.standard), "minimizing": list(b)}
                              for m, p, b in rep.equations_rows],
        "identity_holds": rep.identity_holds,
        "discrepancies": rep.discrepancies,
    }
    _emit(args, payload, [rep.render()])
    if not rep.identity_holds:
        raise CrossCheckError("the s = -1 coefficient identity failed")


def _default_budget() -> int:
    raw = os.environ.get(BUDGET_ENV)
    if raw is None:
        return lattice.DEFAULT_BUDGET
    try:
        return int(raw)
    except ValueError:
        raise InputError(f"{BUDGET_ENV} must be an integer, got {raw!r}") from None


def build_parser() -> argparse.ArgumentParser:
    parser = _Parser(prog="kolchin",
                     description="Kolchin dimension polynomials, minimizing coefficients "
                                 "and Macaulay constants, in exact arithmetic.")
    sub = parser.add_subparsers(dest="command", required=True, parser_class=_Parser)

    common = _Parser(add_help=False)
    common.add_argument("--format", choices=["text", "json"], default="text")
    common.add_argument("--budget", type=int, default=None,
                        help=f"oracle enumeration budget (default {lattice.DEFAULT_BUDGET}, "
                             f"or ${BUDGET_ENV})")

    def with_input(p):
        g = p.add_mutually_exclusive_group(required=True)
        g.add_argument("--inline", help='e.g. "m=2; rows=(1,2),(2,1)"')
        g.add_argument("--file", help='JSON {"m": int, "sets": [[[...], ...], ...]}')

    p = sub.add_parser("dimpoly", parents=[common], help="dimension polynomial of a system")
    with_input(p)
    p.add_argument("--method", choices=["interp", "rec", "ie", "all"], default="interp")
    p.set_defaults(func=cmd_dimpoly)

    for name, func, hlp in [("minimize", cmd_minimize, "minimizing coefficients"),
                            ("macaulay", cmd_macaulay, "Macaulay constants"),
                            ("is-kolchin", cmd_is_kolchin, "Kolchin-membership test")]:
        p = sub.add_parser(name, parents=[common], help=hlp)
        p.add_argument("--poly", required=True, help="standard coefficients a_d,...,a_0")
        p.set_defaults(func=func)

    p = sub.add_parser("reconstruct", parents=[common], help="polynomial from Macaulay constants")
    p.add_argument("--constants", required=True, help="c_(d+1),...,c_1")
    p.set_defaults(func=cmd_reconstruct)

    p = sub.add_parser("compare", parents=[common], help="Sit order of two polynomials")
    p.add_argument("--left", required=True)
    p.add_argument("--right", required=True)
    p.set_defaults(func=cmd_compare)

    p = sub.add_parser("oracle", parents=[common], help="brute-force counts next to the polynomial")
    with_input(p)
    p.add_argument("--s-max", type=int, default=10)
    p.set_defaults(func=cmd_oracle)

    p = sub.add_parser("example", parents=[common], help="built-in example families")
    p.add_argument("name", choices=["ex2", "triangular", "equations", "single"])
    p.add_argument("--k", type=int, default=2)
    p.add_argument("--m", type=int, default=2)
    p.add_argument("--d", type=int, default=1)
    p.set_defaults(func=cmd_example)

    p = sub.add_parser("report", parents=[common], help="triangular-family coefficient report")
    p.add_argument("--m-max", type=int, default=6)
    p.set_defaults(func=cmd_report)
    return parser


def main(argv: Sequence[str] | None = None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        if args.budget is None:
            args.budget = _default_budget()
        if getattr(args, "command", None) == "example":
            if args.m < 1 or args.d < 0:
                raise InputError("need --m >= 1 and --d >= 0")
        args.func(args)
    except InputError as exc:
        print(f"kolchin: error: {exc}", file=sys.stderr)
        return 1
    except CrossCheckError as exc:
        print(f"kolchin: cross-check failure: {exc}", file=sys.stderr)
        return 2
    except ResourceGuard as exc:
        print(f"kolchin: {exc}", file=sys.stderr)
        return 3
    return 0


if __name__ == "__main__":
    sys.exit(main())
