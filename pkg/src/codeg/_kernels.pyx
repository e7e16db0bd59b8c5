# cython: language_level=3, boundscheck=False, wraparound=False, cdivision=True
"""Compiled hot loops. Semantics match ``codeg._kernels_py`` exactly."""

from array import array
from libc.stdint cimport uint32_t, uint64_t
from libc.stdlib cimport malloc, free
from libc.string cimport memset


def prime_sieve(long long limit):
    cdef unsigned char *flags
    cdef long long i, j
    if limit < 2:
        return array("I")
    if limit >= (<long long>1) << 32:
        raise ValueError("sieve limit must fit in 32 bits")
    flags = <unsigned char *>malloc(limit + 1)
    if flags == NULL:
        raise MemoryError()
    try:
        memset(flags, 1, limit + 1)
        flags[0] = 0
        flags[1] = 0
        i = 2
        while i * i <= limit:
            if flags[i]:
                j = i * i
                while j <= limit:
                    flags[j] = 0
                    j += i
            i += 1
        out = array("I")
        for i in range(2, limit + 1):
            if flags[i]:
                out.append(<uint32_t>i)
        return out
    finally:
        free(flags)


def first_prime_divisor(n, const uint32_t[:] primes, Py_ssize_t start=0):
    cdef Py_ssize_t nlimbs, i, k, count = primes.shape[0]
    cdef uint32_t *limbs
    cdef uint64_t r, p, sqrt_cap
    cdef bint capped
    cdef const unsigned char[:] raw
    if n < 2:
        return -1
    nbytes = (n.bit_length() + 7) // 8
    nlimbs = (nbytes + 3) // 4
    raw = n.to_bytes(nlimbs * 4, "little")
    limbs = <uint32_t *>malloc(nlimbs * sizeof(uint32_t))
    if limbs == NULL:
        raise MemoryError()
    # isqrt(n) < 2**32 lets the p*p > n cutoff run in C
    from math import isqrt
    root = isqrt(n)
    capped = root < (1 << 32)
    sqrt_cap = <uint64_t>root if capped else 0
    try:
        for k in range(nlimbs):
            limbs[k] = (<uint32_t>raw[4 * k]
                        | (<uint32_t>raw[4 * k + 1] << 8)
                        | (<uint32_t>raw[4 * k + 2] << 16)
                        | (<uint32_t>raw[4 * k + 3] << 24))
        for i in range(start, count):
            p = primes[i]
            if capped and p > sqrt_cap:
                return -1
            r = 0
            k = nlimbs - 1
            while k >= 0:
                r = ((r << 32) | limbs[k]) % p
                k -= 1
            if r == 0:
                return i
        return -1
    finally:
        free(limbs)


def basic_spin_solutions(long long n_min, long long n_max):
    cdef long long n, e, m
    out = []
    if n_min < 2:
        n_min = 2
    for n in range(n_min, n_max + 1):
        e = (n - 2) // 2 - 1
        m = n - 1
        # n - 1 < 2**63, so exponents >= 63 can never match
        if e < 0 or e >= 63:
            continue
        if m == ((<long long>1) << e):
            out.append(n)
    return out
