import pytest
from hypothesis import given, strategies as st

from codeg.numtheory import (factorint, is_prime, p_part, p_prime_part, prime_power, valuation,
                             zsigmondy_exception, zsigmondy_ppd)


@pytest.mark.parametrize("q", range(2, 21))
def test_zsigmondy_grid(q):
    if prime_power(q) is None:
        pytest.skip("not a prime power")
    for n in range(1, 31):
        r = zsigmondy_ppd(q, n)
        if zsigmondy_exception(q, n) is not None:
            assert r is None
            continue
        assert r is not None and is_prime(r)
        assert (q ** n - 1) % r == 0
        assert all((q ** k - 1) % r for k in range(1, n))


def test_zsigmondy_exceptions():
    assert zsigmondy_ppd(2, 6) is None
    assert zsigmondy_ppd(3, 2) is None  # 3+1 is a power of 2
    assert zsigmondy_ppd(2, 4) == 5


@given(st.integers(1, 10 ** 30), st.sampled_from([2, 3, 5, 7, 11, 13]))
def test_p_part_invariants(N, p):
    a, b = p_part(N, p), p_prime_part(N, p)
    assert a * b == N
    assert b % p != 0
    assert a == p ** valuation(N, p)


@given(st.integers(2, 10 ** 18))
def test_factorint_reconstructs(N):
    f = factorint(N)
    out = 1
    for p, e in f.items():
        assert is_prime(p)
        out *= p ** e
    assert out == N


def test_primality_known_values():
    assert is_prime(2 ** 89 - 1)
    assert not is_prime(3215031751)  # strong pseudoprime to bases 2,3,5,7
    assert is_prime(2 ** 127 - 1)
    assert not is_prime((2 ** 61 - 1) * (2 ** 67 - 1))


def test_prime_power():
    assert prime_power(9) == (3, 2)
    assert prime_power(12) is None
    assert prime_power(2 ** 31) == (2, 31)
