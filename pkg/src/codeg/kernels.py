"""Backend selection for the hot loops.

The compiled extension is used when it imports; otherwise the pure-Python
module takes over. Setting ``CODEG_PURE_PYTHON=1`` forces the fallback.
"""
from __future__ import annotations

import os

if os.environ.get("CODEG_PURE_PYTHON", "") not in ("", "0"):
    from ._kernels_py import basic_spin_solutions, first_prime_divisor, prime_sieve

    BACKEND = "python"
else:
    try:
        from ._kernels import basic_spin_solutions, first_prime_divisor, prime_sieve

        BACKEND = "cython"
    except ImportError:
        from ._kernels_py import basic_spin_solutions, first_prime_divisor, prime_sieve

        BACKEND = "python"

__all__ = ["BACKEND", "basic_spin_solutions", "first_prime_divisor", "prime_sieve"]
