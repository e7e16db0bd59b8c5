"""Acceptance criteria, each checked exactly and against its time budget.

Run with ``pytest tests/test_acceptance.py`` (one PASS/FAIL line per
criterion appears in the summary) or ``python3 tests/test_acceptance.py``.
"""
import time
from pathlib import Path

import pytest

from codeg import chartab, conjecture, lie
from codeg.cyclo import CycloValue, IntPolynomial, cyclotomic_poly, divisors
from codeg.numtheory import is_prime, prime_power, zsigmondy_exception, zsigmondy_ppd
from codeg.report import VERIFIED

pytestmark = pytest.mark.acceptance

RESULTS: list[str] = []


def _fixture(name):
    return chartab.load_table(chartab.fixture_path(name))


def c1_e7_identity():
    got, want = lie.e7_identity()
    assert got == want, f"{got} != {want}"
    assert str(got) == "1/2 * Phi1^3 * Phi3^2 * Phi5 * Phi6 * Phi7 * Phi9 * Phi12 * Phi18"
    return str(got)


def c2_codegree_sets():
    a5, sl25 = _fixture("a5"), _fixture("sl25")
    assert chartab.format_set(chartab.codegrees(a5)) == "{1,12,15,20}"
    r = chartab.codegree_subset(sl25, a5)
    assert r.verdict == "refuted" and r.witness_text == "{30,60}", r.render()
    return "cod(A5) = {1,12,15,20}; cod(SL2(5)) \\ cod(A5) = {30,60}"


def c3_thm_e_witnesses():
    out = []
    for name, quotient in (("sl25", "{1,3,4,5}"), ("sl27", "{1,3,6,7,8}")):
        t0 = time.perf_counter()
        r = chartab.verify_thm_e_instance(_fixture(name))
        assert time.perf_counter() - t0 < 1.0
        assert r.verdict == VERIFIED, r.render()
        assert r.witness["degree"] == 4 and r.witness_text.startswith("degree 4")
        assert f"4/2 = 2 not in cd(G/Z) = {quotient}" in r.witness_text
        out.append(r.witness_text)
    return "; ".join(out)


def c4_eq1():
    counts = []
    for n in (3, 4, 5):
        for q in (3, 5):
            r = lie.verify_eq1_no_solution(n, q)
            assert r.verdict == VERIFIED and r.witness is None, r.render()
            counts.append(f"({n},{q}):{r.parameters['descriptors_split']}+{r.parameters['descriptors_twisted']}")
    return " ".join(counts)


def c5_spin():
    assert lie.spin_D(3, 5, 1).D == 19656
    assert lie.spin_D(3, 3, -1).D == 520
    from math import prod
    for n in range(3, 9):
        for q in (3, 5, 7):
            for eps in (1, -1):
                r = lie.spin_D(n, q, eps)
                assert r.symbolic.evaluate(q) == r.D
                assert r.D * prod(q ** i - eps ** i for i in range(1, n + 1)) == \
                    prod(q ** (2 * i) - 1 for i in range(1, n + 1))
    return "D(3,5,+1) = 19656, D(3,3,-1) = 520, coherent for 3 <= n <= 8, q in {3,5,7}"


def c6_prop_tech_sweeps():
    alt = conjecture.verify_prop_tech("alternating", {"n_min": 11, "n_max": 300})
    assert alt.verdict == VERIFIED, alt.render()
    dc = conjecture.verify_prop_tech("defining-char", {"max_rank": 4, "max_q": 9})
    assert dc.verdict == VERIFIED, f"defining characteristic: {dc.witness_text}"
    return f"alternating: {alt.narrative.split(':')[0]}; defining characteristic: {dc.narrative}"


def c7_basic_spin():
    r = conjecture.check_alternating_basic_spin(10 ** 6)
    assert r.verdict == VERIFIED, r.render()
    return r.narrative


def c8_property_suites():
    for n in range(1, 201):
        p = IntPolynomial([1])
        for d in divisors(n):
            p = p * cyclotomic_poly(d)
        assert p == IntPolynomial.x_pow_minus_one(n), n
    tables = sorted((Path(chartab.__file__).parent / "fixtures").glob("*.chartab"))
    for path in tables:
        t = chartab.load_table(path)
        for i, ch in enumerate(t.characters):
            assert (t.order // chartab.kernel_order(t, i)) % ch.degree == 0, (path.name, ch.label)
            s = CycloValue.rational(0)
            for c, v in zip(t.classes, ch.values):
                s = s + v * v.conjugate() * c.size
            assert s.equals_rational(t.order), (path.name, ch.label)
    grid = 0
    for q in range(2, 21):
        if prime_power(q) is None:
            continue
        for n in range(1, 31):
            if zsigmondy_exception(q, n) is not None:
                continue
            r = zsigmondy_ppd(q, n)
            assert r is not None and is_prime(r) and (q ** n - 1) % r == 0
            assert all((q ** k - 1) % r for k in range(1, n)), (q, n, r)
            grid += 1
    return f"Phi identity n <= 200; {len(tables)} tables; {grid} Zsigmondy points"


CRITERIA = [
    (1, "E7 identity", c1_e7_identity, 1.0),
    (2, "codegree sets", c2_codegree_sets, 1.0),
    (3, "central-quotient degree witnesses", c3_thm_e_witnesses, 2.0),
    (4, "eq1 enumeration", c4_eq1, 60.0),
    (5, "spin degrees", c5_spin, 5.0),
    (6, "alternating and defining-characteristic sweeps", c6_prop_tech_sweeps, 60.0),
    (7, "basic spin scan", c7_basic_spin, 5.0),
    (8, "property suites", c8_property_suites, None),
]


def _run(num, title, fn, budget):
    t0 = time.perf_counter()
    try:
        info = fn()
    except AssertionError as exc:
        line = f"FAIL criterion {num} ({title}) {time.perf_counter() - t0:.2f}s: {exc}"
        RESULTS.append(line)
        raise AssertionError(line) from None
    elapsed = time.perf_counter() - t0
    if budget is not None and elapsed >= budget:
        line = f"FAIL criterion {num} ({title}) {elapsed:.2f}s exceeds {budget:g}s"
        RESULTS.append(line)
        raise AssertionError(line)
    line = f"PASS criterion {num} ({title}) {elapsed:.2f}s: {info}"
    RESULTS.append(line)
    return line


@pytest.mark.parametrize("num,title,fn,budget", CRITERIA, ids=[f"c{c[0]}" for c in CRITERIA])
def test_criterion(num, title, fn, budget):
    print(_run(num, title, fn, budget))


def main():
    failed = 0
    for crit in CRITERIA:
        try:
            print(_run(*crit))
        except AssertionError as exc:
            print(exc)
            failed += 1
    return 1 if failed else 0


if __name__ == "__main__":
    raise SystemExit(main())
