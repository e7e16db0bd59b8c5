import pytest

from codeg import _kernels_py as py
from codeg import kernels

try:
    from codeg import _kernels as cy
except ImportError:  # extension not built
    cy = None

needs_cy = pytest.mark.skipif(cy is None, reason="compiled kernels unavailable")


def test_backend_reported():
    assert kernels.BACKEND in ("cython", "python")


@needs_cy
@pytest.mark.parametrize("limit", [0, 1, 2, 3, 100, 10007, 200000])
def test_sieve_agrees(limit):
    assert list(cy.prime_sieve(limit)) == list(py.prime_sieve(limit))


@needs_cy
def test_first_prime_divisor_agrees():
    primes = py.prime_sieve(10 ** 4)
    for n in list(range(0, 3000)) + [2 ** 61 - 1, 10007 * 10009, 3 ** 40, 2 ** 64 + 1, 10 ** 30 + 7]:
        for start in (0, 3):
            assert cy.first_prime_divisor(n, primes, start) == py.first_prime_divisor(n, primes, start), n


@needs_cy
@pytest.mark.parametrize("lo,hi", [(0, 100), (2, 10 ** 5), (10, 10 ** 6)])
def test_basic_spin_agrees(lo, hi):
    assert list(cy.basic_spin_solutions(lo, hi)) == py.basic_spin_solutions(lo, hi)


def test_basic_spin_small_solutions():
    brute = [n for n in range(2, 200) if (n - 2) // 2 - 1 >= 0 and 2 ** ((n - 2) // 2 - 1) == n - 1]
    assert py.basic_spin_solutions(2, 199) == brute
