"""Integer arithmetic: primality, factoring, p-parts, primitive prime divisors.

Factoring is desk-scale by design: trial division by the primes below
``TRIAL_LIMIT`` (the hot loop lives in ``codeg.kernels``), a primality test
on the cofactor, and a full split only for the rare cofactor that is
composite with every factor above the trial limit; those are handed to
sympy's ECM-backed ``factorint``.
"""
from __future__ import annotations

import threading
from functools import lru_cache
from math import isqrt

from . import kernels
from .cyclo import cyclotomic_poly

TRIAL_LIMIT = 10**7

# Miller-Rabin with these bases is exact for n < 3317044064679887385961981
# (Sorenson-Webster). Above that we run Baillie-PSW, see is_prime().
_MR_BASES = (2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37, 41)
MR_DETERMINISTIC_BOUND = 3317044064679887385961981

_SMALL_PRIMES = (2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37, 41, 43, 47, 53, 59, 61, 67, 71, 73, 79, 83, 89, 97)

_sieve_lock = threading.Lock()
_sieve_cache: dict[int, object] = {}


def primes_upto(limit: int = TRIAL_LIMIT):
    """Cached ascending ``array('I')`` of primes <= limit."""
    with _sieve_lock:
        arr = _sieve_cache.get(limit)
        if arr is None:
            arr = kernels.prime_sieve(limit)
            _sieve_cache[limit] = arr
        return arr


def _strong_probable_prime(n: int, a: int) -> bool:
    d, s = n - 1, 0
    while d % 2 == 0:
        d //= 2
        s += 1
    x = pow(a, d, n)
    if x == 1 or x == n - 1:
        return True
    for _ in range(s - 1):
        x = x * x % n
        if x == n - 1:
            return True
    return False


def _jacobi(a: int, n: int) -> int:
    a %= n
    result = 1
    while a:
        while a % 2 == 0:
            a //= 2
            if n % 8 in (3, 5):
                result = -result
        a, n = n, a
        if a % 4 == 3 and n % 4 == 3:
            result = -result
        a %= n
    return result if n == 1 else 0


def _strong_lucas_probable_prime(n: int) -> bool:
    # Selfridge parameters: first D in 5, -7, 9, -11, ... with (D/n) = -1
    if isqrt(n) ** 2 == n:
        return False
    D = 5
    while True:
        j = _jacobi(D, n)
        if j == -1:
            break
        if j == 0 and abs(D) != n:
            return False
        D = -D - 2 if D > 0 else -D + 2
    P, Q = 1, (1 - D) // 4
    d, s = n + 1, 0
    while d % 2 == 0:
        d //= 2
        s += 1
    inv2 = pow(2, -1, n)
    U, V, Qk = 0, 2, 1
    for bit in bin(d)[2:]:
        U, V = U * V % n, (V * V - 2 * Qk) % n
        Qk = Qk * Qk % n
        if bit == "1":
            U, V = (P * U + V) * inv2 % n, (D * U + P * V) * inv2 % n
            Qk = Qk * Q % n
    if U == 0 or V == 0:
        return True
    for _ in range(s - 1):
        V = (V * V - 2 * Qk) % n
        Qk = Qk * Qk % n
        if V == 0:
            return True
    return False


def is_prime(n: int) -> bool:
    """Primality of ``n``.

    Exact below ``MR_DETERMINISTIC_BOUND``; above it the Baillie-PSW test
    is used (no counterexample is known, but it is not a proof). Use
    ``primality_is_proven`` to tell the two regimes apart.
    """
    if n < 2:
        return False
    for p in _SMALL_PRIMES:
        if n % p == 0:
            return n == p
    if n < 97 * 97:
        return True
    if n < MR_DETERMINISTIC_BOUND:
        return all(_strong_probable_prime(n, a) for a in _MR_BASES)
    return _strong_probable_prime(n, 2) and _strong_lucas_probable_prime(n)


def primality_is_proven(n: int) -> bool:
    return n < MR_DETERMINISTIC_BOUND


def _split_large(n: int, out: dict[int, int]) -> None:
    """Factor a cofactor with no prime below the trial limit."""
    if is_prime(n):
        out[n] = out.get(n, 0) + 1
        return
    from sympy import factorint as _sympy_factorint

    for p, e in _sympy_factorint(n).items():
        p = int(p)
        if not is_prime(p):
            raise ArithmeticError(f"factor {p} of {n} failed the primality check")
        out[p] = out.get(p, 0) + e


def factorint(n: int) -> dict[int, int]:
    """Prime factorization ``{p: e}`` of a positive integer (keys ascending)."""
    if n < 1:
        raise ValueError(f"factorint needs a positive integer, got {n}")
    primes = primes_upto()
    out: dict[int, int] = {}
    i = 0
    while n > 1:
        i = kernels.first_prime_divisor(n, primes, i)
        if i < 0:
            break
        p = primes[i]
        e = 0
        while n % p == 0:
            n //= p
            e += 1
        out[p] = e
        i += 1
    if n > 1:
        last = primes[-1]
        if n < last * last:
            out[n] = out.get(n, 0) + 1
        else:
            big: dict[int, int] = {}
            _split_large(n, big)
            for p in sorted(big):
                out[p] = out.get(p, 0) + big[p]
    return dict(sorted(out.items()))


def prime_factors(n: int) -> list[int]:
    return list(factorint(n))


def smallest_prime_factor(n: int) -> int:
    if n < 2:
        raise ValueError(f"{n} has no prime factor")
    primes = primes_upto()
    i = kernels.first_prime_divisor(n, primes, 0)
    if i >= 0:
        return primes[i]
    return min(factorint(n))


def _require_prime(p: int) -> None:
    if not is_prime(p):
        raise ValueError(f"{p} is not prime")


def p_part(N: int, p: int) -> int:
    """Largest power of the prime ``p`` dividing ``N``."""
    _require_prime(p)
    if N < 1:
        raise ValueError(f"p_part needs N >= 1, got {N}")
    part = 1
    while N % p == 0:
        N //= p
        part *= p
    return part


def p_prime_part(N: int, p: int) -> int:
    return N // p_part(N, p)


def valuation(N: int, p: int) -> int:
    """Exponent of ``p`` in ``N`` (``N`` nonzero)."""
    if N == 0:
        raise ValueError("valuation of 0")
    N = abs(N)
    e = 0
    while N % p == 0:
        N //= p
        e += 1
    return e


def prime_power(q: int) -> tuple[int, int] | None:
    """``(p, a)`` with ``q == p**a`` and p prime, or None."""
    if q < 2:
        return None
    p = smallest_prime_factor(q)
    a = 0
    while q % p == 0:
        q //= p
        a += 1
    return (p, a) if q == 1 else None


def zsigmondy_exception(q: int, n: int) -> str | None:
    """Reason string when (q, n) is a classical Zsigmondy exception."""
    if n == 1:
        return "n=1: every prime divisor of q-1 is trivially primitive; treated as exceptional"
    if n == 2 and (q + 1) & q == 0:
        return f"n=2 and q+1={q + 1} is a power of 2"
    if (q, n) == (2, 6):
        return "(q, n) = (2, 6): 2^6-1 = 63 = 3^2*7 has no primitive prime divisor"
    return None


@lru_cache(maxsize=4096)
def zsigmondy_ppd(q: int, n: int) -> int | None:
    """Smallest primitive prime divisor of ``q**n - 1``, or None.

    A prime r divides q^n - 1 but no q^k - 1 (k < n) exactly when r divides
    Phi_n(q) and r does not divide n, so only Phi_n(q) is factored.
    """
    if q < 2 or n < 1:
        raise ValueError(f"zsigmondy_ppd needs q >= 2 and n >= 1, got ({q}, {n})")
    if zsigmondy_exception(q, n) is not None:
        return None
    value = cyclotomic_poly(n)(q)
    for r in prime_factors(n):
        while value % r == 0:
            value //= r
    if value == 1:
        return None
    return smallest_prime_factor(value)
