"""Command line front end.

    codeg <verb> <subcommand> [args] [--json] [--max-n K] [--max-q K]

Exit status: 0 verified or success, 1 refuted, 2 inapplicable, 3 bad input.
"""
from __future__ import annotations

import argparse
import contextlib
import json
import sys
from datetime import datetime, timezone
from fractions import Fraction
from pathlib import Path

from . import chartab, conjecture, groups, lie
from .cyclo import OrderPolynomial, cyclo_factor_exponents, cyclo_factor_exponents_plus, cyclotomic_poly
from .errors import CodegError
from .numtheory import factorint, prime_power, zsigmondy_exception, zsigmondy_ppd
from .report import VerificationReport

EXIT_USAGE = 3
RESULT_SCHEMA = "codeg-result/1"


class UsageError(Exception):
    pass


class _Parser(argparse.ArgumentParser):
    def error(self, message):
        self.print_usage(sys.stderr)
        print(f"{self.prog}: error: {message}", file=sys.stderr)
        raise SystemExit(EXIT_USAGE)


def _common() -> argparse.ArgumentParser:
    p = argparse.ArgumentParser(add_help=False)
    p.add_argument("--json", action="store_true", help="machine-readable output")
    p.add_argument("--timestamps", action="store_true", help="include the generation time in the output")
    return p


def _sweep() -> argparse.ArgumentParser:
    p = argparse.ArgumentParser(add_help=False)
    p.add_argument("--max-n", type=int, help="largest alternating degree n in a sweep (default 300)")
    p.add_argument("--max-q", type=int, help="largest field size q in a sweep (default 9)")
    p.add_argument("--max-rank", type=int, help="largest Lie rank in a sweep (default 8)")
    p.add_argument("--allow-large", action="store_true", help="permit sweeps beyond the default ranges")
    return p


def _table_arg(path: str) -> chartab.CharacterTable:
    p = Path(path)
    if not p.exists():
        bundled = chartab.fixture_path(p.stem) if p.suffix == ".chartab" else None
        if bundled is None or not bundled.exists():
            raise UsageError(f"no such table: {path}")
        p = bundled
    return chartab.load_table(p)


def _group_arg(text: str) -> groups.GroupSpec:
    return groups.GroupSpec.parse(text)


def build_parser() -> argparse.ArgumentParser:
    common, sweep = _common(), _sweep()
    top = _Parser(prog="codeg", description="Exact checks on character codegrees and degree bounds "
                                              "for finite simple and quasisimple groups.")
    verbs = top.add_subparsers(dest="verb", required=True, parser_class=_Parser)

    def sub(group, name, help_text, *parents):
        return group.add_parser(name, help=help_text, description=help_text, parents=[common, *parents])

    # table
    t = verbs.add_parser("table", help="character-table queries").add_subparsers(dest="sub", required=True, parser_class=_Parser)
    s = sub(t, "cod", "Codegree set {|G:ker chi|/chi(1)} of a character table.")
    s.add_argument("table")
    s = sub(t, "pseudo", "Codegrees with multiplicities (the pseudo-algebra) of a character table.")
    s.add_argument("table")
    s = sub(t, "degrees", "Set of character degrees of a table.")
    s.add_argument("table")
    s = sub(t, "kernels", "Kernel order, faithfulness and codegree of every character of a table.")
    s.add_argument("table")
    s = sub(t, "center", "Central classes (size-1 classes) and the center order of a table.")
    s.add_argument("table")
    s = sub(t, "validate", "Parse a table, check its structural invariants and exact row/column orthogonality.")
    s.add_argument("table")

    # lie
    t = verbs.add_parser("lie", help="degree formulas for groups of Lie type").add_subparsers(dest="sub", required=True, parser_class=_Parser)
    sub(t, "e7", "Divide |E7(q)|_p' by 2*Phi1^4*Phi2^7*Phi3*Phi4^2*Phi6^2*Phi8*Phi10*Phi14 and compare with "
                 "1/2*Phi1^3*Phi3^2*Phi5*Phi6*Phi7*Phi9*Phi12*Phi18, the degree of a faithful semisimple "
                 "character of the simply connected E7(q).")
    s = sub(t, "semisimple", "Degree |G*:C(s)|_p' of a semisimple character for a recorded exceptional centralizer "
                             f"({', '.join(lie.EXCEPTIONAL_DATA)}).")
    s.add_argument("name", choices=list(lie.EXCEPTIONAL_DATA))
    s.add_argument("--q", type=int, help="also evaluate at this q")
    s = sub(t, "spin", "D = prod(q^2i - 1)/prod(q^i - eps^i), twice the degree of a faithful semisimple character "
                       "of Spin_{2n+1}(q), with D/2 and D/4.")
    s.add_argument("--n", type=int, required=True)
    s.add_argument("--q", type=int, required=True)
    s.add_argument("--eps", type=int, choices=(1, -1), required=True)
    s = sub(t, "centralizers", "Every centralizer shape Sp_2k x Sp_2(m-k) x prod GL^+-(q^k) and "
                               "Sp_m(q^2) x prod GL^+-(q^k) of a semisimple element of Sp_2n(q), with p'-orders.")
    s.add_argument("--n", type=int, required=True)
    s.add_argument("--q", type=int, required=True)
    s = sub(t, "weil", "Weil character degrees: (q^n +- 1)/2 for Sp_2n(q), (q^n - eps^n)/(q - eps) for SL/SU_n(q).")
    s.add_argument("--family", choices=("Sp", "SL", "SU"), required=True)
    s.add_argument("--n", type=int, required=True)
    s.add_argument("--q", type=int, required=True)

    # verify
    t = verbs.add_parser("verify", help="checks that end in verified/refuted/inapplicable").add_subparsers(dest="sub", required=True, parser_class=_Parser)
    s = sub(t, "eq1", "Exhaustive check that no semisimple centralizer of Sp_2n(q) has p'-order "
                      "2, 4 or 8 times |GL_n(q)|_p' or |GU_n(q)|_p'.")
    s.add_argument("--n", type=int, required=True)
    s.add_argument("--q", type=int, required=True)
    s = sub(t, "thm-e", "For a table with center of prime order r: find a faithful chi with chi(1)/r "
                        "not a character degree of G/Z.")
    s.add_argument("table")
    s.add_argument("--quotient-of-center", action="store_true",
                   help="read cd(G/Z) from characters whose kernel contains Z (the only mode)")
    s = sub(t, "cod-subset", "Is cod(G) contained in cod(H)? Lists every codegree of G missing from cod(H).")
    s.add_argument("table_g")
    s.add_argument("table_h")
    s = sub(t, "proj-bound", "For central N and a linear theta of N: min over chi above theta of chi(1)_p, "
                             "squared, is at most |G/N|_p for every p.")
    s.add_argument("table")
    s.add_argument("--classes", required=True, help="comma-separated central class labels forming N")
    s.add_argument("--theta", required=True, help="comma-separated values of theta on those classes")
    s = sub(t, "split-ext", "Some character flagged faithful has degree prime to p (tables with faithful= flags).")
    s.add_argument("table")
    s.add_argument("--p", type=int, required=True)
    s = sub(t, "prop-bra", "p^(2d) > |H|_p for a simple group H, prime p and Brauer degree bound d.")
    s.add_argument("--group", required=True, help="e.g. C2(3), 2A3(3), Alt12 or a sporadic name such as M11")
    s.add_argument("--p", type=int, required=True)
    s.add_argument("--d", type=int, required=True)
    s = sub(t, "prop-tech", "Sweeps of p^(2d(H)) > |H|_p: sporadic rows, alternating groups with the Muller "
                            "bound, cross-characteristic bounds, and minimal permutation degree squared "
                            "against |H|_p in defining characteristic.", sweep)
    s.add_argument("case", choices=sorted(conjecture.CASES))
    s.add_argument("--min-n", type=int, default=11)
    s = sub(t, "basic-spin", "No n in [10, max-n] solves 2^(floor((n-2)/2) - 1) = n - 1.")
    s.add_argument("--max-n", type=int, default=10 ** 6)
    s = sub(t, "weil", "Weil degree over each prime of the center is below the minimal nontrivial degree "
                       "of the simple quotient, or not an integer.")
    s.add_argument("--family", choices=("Sp", "SL", "SU"), required=True)
    s.add_argument("--n", type=int, required=True)
    s.add_argument("--q", type=int, required=True)

    # orders
    t = verbs.add_parser("orders", help="group orders and degree data").add_subparsers(dest="sub", required=True, parser_class=_Parser)
    for name, text in (("universal", "Order of the simply connected group as q^N * prod Phi_i^e_i, and its value."),
                       ("simple", "Order of the simple group."),
                       ("lsz", "Lower bound for nontrivial cross-characteristic degrees (data table)."),
                       ("permdeg", "Minimal faithful permutation degree (data table)."),
                       ("natural", "Size of the natural module of a classical group."),
                       ("center", "Order of the center of the simply connected group.")):
        s = sub(t, name, text)
        s.add_argument("group")
    s = sub(t, "ppart", "p-part of the order of a simple group.")
    s.add_argument("group")
    s.add_argument("--p", type=int, required=True)
    s = sub(t, "alt-bound", "Upper bound p^floor((n-1)/(p-1)) (2^(n-2) for p=2) and exact value of |A_n|_p.")
    s.add_argument("--n", type=int, required=True)
    s.add_argument("--p", type=int, required=True)
    s = sub(t, "muller", "min{(n^4-14n^3+47n^2-34n)/24, g(n)} lower bound for S_n modules, n >= 11.")
    s.add_argument("--n", type=int, required=True)
    s = sub(t, "zsigmondy", "Smallest primitive prime divisor of q^n - 1, or the exception that rules it out.")
    s.add_argument("--q", type=int, required=True)
    s.add_argument("--n", type=int, required=True)

    # cyclo
    t = verbs.add_parser("cyclo", help="cyclotomic arithmetic").add_subparsers(dest="sub", required=True, parser_class=_Parser)
    s = sub(t, "phi", "The cyclotomic polynomial Phi_n(x).")
    s.add_argument("n", type=int)
    s = sub(t, "factor", "Cyclotomic factorization of q^m - 1 (or q^m + 1 with --plus).")
    s.add_argument("m", type=int)
    s.add_argument("--plus", action="store_true")
    s = sub(t, "div", "Exact quotient of two order polynomials such as '2 * q^3 * Phi1^2'.")
    s.add_argument("numerator")
    s.add_argument("denominator")
    s = sub(t, "eval", "Value of an order polynomial at q.")
    s.add_argument("poly")
    s.add_argument("--q", type=int, required=True)
    return top


def _poly_result(P: OrderPolynomial, q: int | None = None) -> dict:
    out = {"factored": str(P), "p_prime": str(P.p_prime())}
    if q is not None:
        out["value"] = str(P.evaluate(q))
    return out


def _dispatch(a) -> VerificationReport | dict | str:
    v, s = a.verb, a.sub
    if v == "table":
        t = _table_arg(a.table)
        if s == "cod":
            return chartab.format_set(chartab.codegrees(t))
        if s == "pseudo":
            pa = chartab.pseudo_algebra(t)
            return "{" + ",".join(f"{c}^{m}" if m > 1 else str(c) for c, m in sorted(pa.items())) + "}"
        if s == "degrees":
            return chartab.format_set(chartab.degrees(t))
        if s == "kernels":
            return {ch.label: {"degree": ch.degree, "kernel_order": chartab.kernel_order(t, i),
                               "faithful": chartab.is_faithful(t, i), "codegree": chartab.codegree(t, i)}
                    for i, ch in enumerate(t.characters)}
        if s == "center":
            zc = chartab.center_classes(t)
            return {"classes": [t.classes[c].label for c in zc], "order": len(zc)}
        if s == "validate":
            bad = chartab.orthogonality_defects(t)
            if bad:
                raise UsageError("orthogonality fails: " + "; ".join(bad[:5]))
            return {"group": t.name, "order": t.order, "classes": len(t.classes), "orthogonality": "ok"}
    if v == "lie":
        if s == "e7":
            got, want = lie.e7_identity()
            return {"quotient": str(got), "expected": str(want), "equal": got == want}
        if s == "semisimple":
            return _poly_result(lie.semisimple_degree(lie.exceptional_datum(a.name)), a.q)
        if s == "spin":
            r = lie.spin_D(a.n, a.q, a.eps)
            return {"D": r.D, "D/2": r.half, "D/4": r.quarter, "symbolic": str(r.symbolic)}
        if s == "centralizers":
            return [{"kind": d.kind, "shape": str(d), "k": d.k, "m": d.m,
                     "factors": [list(f) for f in d.factors], "order_pprime": o}
                    for d, o in lie.enumerate_symplectic_centralizers(a.n, a.q)]
        if s == "weil":
            return lie.weil_degrees(a.family, a.n, a.q)
    if v == "verify":
        if s == "eq1":
            return lie.verify_eq1_no_solution(a.n, a.q)
        if s == "thm-e":
            return chartab.verify_thm_e_instance(_table_arg(a.table))
        if s == "cod-subset":
            return chartab.codegree_subset(_table_arg(a.table_g), _table_arg(a.table_h))
        if s == "proj-bound":
            t = _table_arg(a.table)
            labels = [c.label for c in t.classes]
            try:
                idx = [labels.index(x) for x in a.classes.split(",")]
            except ValueError:
                raise UsageError(f"unknown class in {a.classes!r}") from None
            theta = [chartab.parse_value(x) for x in a.theta.split(",")]
            return chartab.check_projective_bound(t, idx, theta)
        if s == "split-ext":
            return chartab.check_split_extension_claim(_table_arg(a.table), a.p)
        if s == "prop-bra":
            h = a.group if a.group in groups.SPORADIC_ORDERS else _group_arg(a.group)
            return conjecture.check_prop_bra(h, a.p, a.d)
        if s == "prop-tech":
            params = {"allow_large": a.allow_large, "n_min": a.min_n}
            for key, val in (("n_max", a.max_n), ("max_q", a.max_q), ("max_rank", a.max_rank)):
                if val is not None:
                    params[key] = val
            return conjecture.verify_prop_tech(a.case, params)
        if s == "basic-spin":
            return conjecture.check_alternating_basic_spin(a.max_n)
        if s == "weil":
            return lie.check_weil_below_min_degree(a.family, a.n, a.q)
    if v == "orders":
        if s == "alt-bound":
            return {"bound": groups.alternating_ppart_bound(a.n, a.p), "exact": groups.exact_alternating_ppart(a.n, a.p)}
        if s == "muller":
            return groups.muller_james_bound(a.n)
        if s == "zsigmondy":
            reason = zsigmondy_exception(a.q, a.n)
            return {"ppd": zsigmondy_ppd(a.q, a.n), "exception": reason}
        g = _group_arg(a.group)
        if s == "universal":
            u = groups.universal_order(g)
            if isinstance(u, int):
                return {"value": u}
            return {"factored": str(u), "value": u.evaluate_int(g.q)}
        if s == "simple":
            n = groups.simple_order(g)
            return {"value": n, "factorization": " * ".join(f"{p}^{e}" if e > 1 else str(p) for p, e in factorint(n).items())}
        if s == "lsz":
            return {"value": groups.lsz_min_degree(g), "source": groups.data_source("lsz", g)}
        if s == "permdeg":
            return {"value": groups.min_perm_degree(g), "source": groups.data_source("permdeg", g)}
        if s == "natural":
            return groups.natural_module_size(g)
        if s == "center":
            return groups.center_size(g)
        if s == "ppart":
            return groups.order_ppart(g, a.p)
    if v == "cyclo":
        if s == "phi":
            return str(cyclotomic_poly(a.n))
        if s == "factor":
            exps = cyclo_factor_exponents_plus(a.m) if a.plus else cyclo_factor_exponents(a.m)
            return str(OrderPolynomial(cyclo=exps))
        if s == "div":
            return str(OrderPolynomial.parse(a.numerator) / OrderPolynomial.parse(a.denominator))
        if s == "eval":
            val = OrderPolynomial.parse(a.poly).evaluate(a.q)
            return str(val)
    raise UsageError(f"unknown command {v} {s}")


def _render(result, as_json: bool, stamp: str | None) -> str:
    if isinstance(result, VerificationReport):
        if as_json:
            doc = result.to_dict()
            if stamp:
                doc["generated"] = stamp
            return json.dumps(doc, sort_keys=True, indent=2) + "\n"
        text = result.render()
        return text + (f"generated: {stamp}\n" if stamp else "")
    if as_json:
        doc = {"schema": RESULT_SCHEMA, "result": _jsonable(result)}
        if stamp:
            doc["generated"] = stamp
        return json.dumps(doc, sort_keys=True, indent=2) + "\n"
    if isinstance(result, (dict, list)):
        text = json.dumps(_jsonable(result), sort_keys=True, indent=2)
    else:
        text = str(result)
    return text + "\n" + (f"generated: {stamp}\n" if stamp else "")


def _jsonable(x):
    if isinstance(x, dict):
        return {str(k): _jsonable(v) for k, v in x.items()}
    if isinstance(x, (list, tuple)):
        return [_jsonable(v) for v in x]
    if isinstance(x, Fraction):
        return str(x)
    return x


def run(argv=None, out=None, err=None) -> int:
    out = out or sys.stdout
    err = err or sys.stderr
    parser = build_parser()
    try:
        with contextlib.redirect_stdout(out), contextlib.redirect_stderr(err):
            a = parser.parse_args(argv)
    except SystemExit as exc:
        return int(exc.code) if isinstance(exc.code, int) else EXIT_USAGE
    stamp = datetime.now(timezone.utc).isoformat(timespec="seconds") if a.timestamps else None
    try:
        result = _dispatch(a)
    except (UsageError, CodegError, ValueError, ArithmeticError, OSError) as exc:
        print(f"codeg: error: {exc}", file=err)
        return EXIT_USAGE
    out.write(_render(result, a.json, stamp))
    return result.exit_code if isinstance(result, VerificationReport) else 0


def main() -> None:
    raise SystemExit(run())


if __name__ == "__main__":
    main()
