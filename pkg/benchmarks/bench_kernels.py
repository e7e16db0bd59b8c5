"""Compare the compiled and pure-Python kernels.

    python3 benchmarks/bench_kernels.py [--repeat N]
"""
import argparse
import timeit

from codeg import _kernels_py

try:
    from codeg import _kernels
except ImportError:
    _kernels = None

CASES = [
    ("prime_sieve(10**6)", lambda m: m.prime_sieve(10 ** 6)),
    ("first_prime_divisor x 2000", None),
    ("basic_spin_solutions(10, 10**6)", lambda m: m.basic_spin_solutions(10, 10 ** 6)),
]


def _fpd(m, primes):
    # semiprimes with both factors near 10^4 force a long scan
    for n in range(10 ** 8 + 7, 10 ** 8 + 4007, 2):
        m.first_prime_divisor(n, primes)


def main():
    ap = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    ap.add_argument("--repeat", type=int, default=3)
    args = ap.parse_args()
    primes = _kernels_py.prime_sieve(10 ** 5)
    mods = [("python", _kernels_py)] + ([("cython", _kernels)] if _kernels else [])
    if _kernels is None:
        print("compiled kernels not built; timing the fallback only")
    print(f"{'kernel':34s}" + "".join(f"{name:>12s}" for name, _ in mods) + ("     speedup" if _kernels else ""))
    for label, fn in CASES:
        if fn is None:
            fn = lambda m: _fpd(m, primes)  # noqa: E731
        times = [min(timeit.repeat(lambda: fn(m), number=1, repeat=args.repeat)) for _, m in mods]
        row = f"{label:34s}" + "".join(f"{t * 1e3:10.1f}ms" for t in times)
        if len(times) == 2:
            row += f"{times[0] / times[1]:11.1f}x"
        print(row)


if __name__ == "__main__":
    main()
