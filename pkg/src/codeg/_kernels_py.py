"""Pure-Python reference versions of the hot loops in ``_kernels.pyx``.

Both modules expose the same three functions with identical semantics;
``codeg.kernels`` picks one at import time.
"""
from __future__ import annotations

from array import array
from math import isqrt


def prime_sieve(limit: int) -> array:
    """All primes <= limit, ascending, as an ``array('I')``."""
    if limit < 2:
        return array("I")
    if limit >= 1 << 32:
        raise ValueError("sieve limit must fit in 32 bits")
    sieve = bytearray(b"\x01") * (limit + 1)
    sieve[0:2] = b"\x00\x00"
    for p in range(2, isqrt(limit) + 1):
        if sieve[p]:
            sieve[p * p :: p] = bytes(len(range(p * p, limit + 1, p)))
    return array("I", (i for i, flag in enumerate(sieve) if flag))


def first_prime_divisor(n: int, primes, start: int = 0) -> int:
    """Index of the first ``primes[i]`` (i >= start) dividing ``n``, else -1.

    The scan also stops (returning -1) once ``p*p > n``, so a -1 with
    ``n > 1`` means either ``n`` is prime or every prime factor exceeds the
    last sieved prime.
    """
    if n < 2:
        return -1
    for i in range(start, len(primes)):
        p = primes[i]
        if p * p > n:
            return -1
        if n % p == 0:
            return i
    return -1


def basic_spin_solutions(n_min: int, n_max: int) -> list:
    """All n in [n_min, n_max] with 2**(floor((n-2)/2) - 1) == n - 1.

    Exponents below zero give non-integers and never match.
    """
    out = []
    for n in range(max(n_min, 2), n_max + 1):
        e = (n - 2) // 2 - 1
        m = n - 1
        if e >= 0 and m > 0 and m & (m - 1) == 0 and m.bit_length() - 1 == e:
            out.append(n)
    return out
