import itertools
from fractions import Fraction
from math import prod

import pytest

from codeg import lie
from codeg.cyclo import OrderPolynomial
from codeg.numtheory import p_prime_part
from codeg.report import INAPPLICABLE, REFUTED, VERIFIED

QS = (3, 5, 7, 9)


# plain-integer orders, written independently of OrderPolynomial
def gl(a, Q):
    return Q ** (a * (a - 1) // 2) * prod(Q ** i - 1 for i in range(1, a + 1))


def gu(a, Q):
    return Q ** (a * (a - 1) // 2) * prod(Q ** i - (-1) ** i for i in range(1, a + 1))


def sp(r, Q):
    return Q ** (r * r) * prod(Q ** (2 * i) - 1 for i in range(1, r + 1))


def test_e7_identity():
    got, want = lie.e7_identity()
    assert got == want
    assert str(got) == "1/2 * Phi1^3 * Phi3^2 * Phi5 * Phi6 * Phi7 * Phi9 * Phi12 * Phi18"
    doubled = got * OrderPolynomial(scalar=2)
    assert doubled.scalar == 1
    _c, poly = doubled.expand()
    assert all(isinstance(c, int) for c in poly.coeffs)


@pytest.mark.parametrize("q", QS)
def test_e7_identity_numeric(q):
    got, _ = lie.e7_identity()
    e7 = q ** 63 * prod(q ** d - 1 for d in (2, 6, 8, 10, 12, 14, 18))
    cent = 2 * (q - 1) ** 4 * (q + 1) ** 7 * (q * q + q + 1) * (q * q + 1) ** 2 * (q * q - q + 1) ** 2 \
        * (q ** 4 + 1) * (q ** 4 - q ** 3 + q ** 2 - q + 1) * (q ** 6 - q ** 5 + q ** 4 - q ** 3 + q ** 2 - q + 1)
    assert got.evaluate(q) == Fraction(p_prime_part(e7, q if q != 9 else 3), cent)


@pytest.mark.parametrize("name", list(lie.EXCEPTIONAL_DATA))
@pytest.mark.parametrize("q", QS)
def test_semisimple_degree_coherent(name, q):
    d = lie.exceptional_datum(name)
    sym = lie.semisimple_degree(d).evaluate(q)
    assert sym == d.ambient.p_prime().evaluate(q) / d.centralizer.p_prime().evaluate(q)


@pytest.mark.parametrize("a,k", [(1, 1), (2, 1), (3, 2), (4, 1), (2, 3)])
@pytest.mark.parametrize("q", QS)
def test_classical_orders_coherent(a, k, q):
    Q = q ** k
    assert lie.order_gl(a, k).evaluate_int(q) == gl(a, Q)
    assert lie.order_gu(a, k).evaluate_int(q) == gu(a, Q)
    assert lie.order_sp(a, k).evaluate_int(q) == sp(a, Q)
    assert lie.order_sl(a, k).evaluate_int(q) * (Q - 1) == gl(a, Q)
    assert lie.order_su(a, k).evaluate_int(q) * (Q + 1) == gu(a, Q)


def test_spin_examples():
    assert lie.spin_D(3, 5, 1).D == 19656
    assert lie.spin_D(3, 3, -1).D == 520


@pytest.mark.parametrize("n", range(3, 9))
@pytest.mark.parametrize("q", (3, 5, 7))
@pytest.mark.parametrize("eps", (1, -1))
def test_spin_identity(n, q, eps):
    r = lie.spin_D(n, q, eps)
    assert r.D * prod(q ** i - eps ** i for i in range(1, n + 1)) == prod(q ** (2 * i) - 1 for i in range(1, n + 1))
    assert r.symbolic.evaluate(q) == r.D
    assert (r.half is None) == (r.D % 2 == 1)


def _naive_shapes(n):
    """Independent enumeration: multisets of (a, k, sign) as sorted tuples."""
    def multisets(total):
        parts = [(a, k, s) for k in range(1, total + 1) for a in range(1, total // k + 1) for s in (1, -1)]
        found = set()
        for r in range(total + 1):
            for combo in itertools.combinations_with_replacement(parts, r):
                if sum(a * k for a, k, _ in combo) == total:
                    found.add(tuple(sorted(combo, reverse=True)))
        return found
    shapes = set()
    for m in range(n + 1):
        ms = multisets(n - m)
        for k in range(m + 1):
            for f in ms:
                shapes.add(("S", max(k, m - k), m, f))
        if m and m % 2 == 0:
            for f in ms:
                shapes.add(("T", 0, m, f))
    return shapes


def _naive_order(shape, q):
    kind, k, m, f = shape
    base = sp(k, q) * sp(m - k, q) if kind == "S" else sp(m // 2, q * q)
    for a, kk, s in f:
        base *= gl(a, q ** kk) if s == 1 else gu(a, q ** kk)
    return base


@pytest.mark.parametrize("n", [2, 3, 4, 5])
@pytest.mark.parametrize("q", [3, 5])
def test_enumeration_against_naive(n, q):
    got = lie.enumerate_symplectic_centralizers(n, q)
    naive = _naive_shapes(n)
    assert len(got) == len(naive)
    assert sorted(o for _, o in got) == sorted(p_prime_part(_naive_order(s, q), 3 if q == 3 else 5) for s in naive)
    full = sp(n, q)
    for d, _ in got:
        assert full % d.order().evaluate_int(q) == 0
    top = [o for d, o in got if d.kind == lie.SPLIT and d.k == d.m == n and not d.factors]
    assert top == [p_prime_part(full, 3 if q == 3 else 5)]


def test_enumeration_is_deterministic():
    a = lie.enumerate_symplectic_centralizers(4, 5)
    b = lie.enumerate_symplectic_centralizers(4, 5)
    assert [(str(d), o) for d, o in a] == [(str(d), o) for d, o in b]


@pytest.mark.parametrize("n,q", [(3, 3), (3, 5), (4, 3), (4, 5), (5, 3), (5, 5)])
def test_eq1_verified_with_naive_oracle(n, q):
    r = lie.verify_eq1_no_solution(n, q)
    assert r.verdict == VERIFIED
    p = 3 if q == 3 else 5
    targets = {c * p_prime_part(gl(n, q), p) for c in (2, 4, 8)} | {c * p_prime_part(gu(n, q), p) for c in (2, 4, 8)}
    assert not any(p_prime_part(_naive_order(s, q), p) in targets for s in _naive_shapes(n))


def test_eq1_counts_recorded():
    r = lie.verify_eq1_no_solution(3, 3)
    assert (r.parameters["descriptors_split"], r.parameters["descriptors_twisted"]) == (29, 2)
    assert lie.verify_eq1_no_solution(2, 3).verdict == INAPPLICABLE


@pytest.mark.parametrize("args,verdict", [
    (("Sp", 3, 3), VERIFIED), (("Sp", 2, 5), VERIFIED), (("SU", 4, 3), VERIFIED), (("SL", 2, 5), REFUTED),
])
def test_weil_examples(args, verdict):
    assert lie.check_weil_below_min_degree(*args).verdict == verdict


def test_weil_degrees():
    assert lie.weil_degrees("Sp", 3, 3) == [13, 14]
    assert sorted(lie.weil_degrees("Sp", 2, 5)) == [12, 13]
