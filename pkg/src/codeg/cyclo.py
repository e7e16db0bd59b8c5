"""Exact cyclotomic arithmetic.

Three value types live here:

* ``IntPolynomial``: dense integer polynomials (enough to build Phi_n).
* ``OrderPolynomial``: ``c * q^a * prod Phi_i(q)^e_i``, the form every group
  and centralizer order in this package is written in.
* ``CycloValue``: an element of Q(zeta_n) kept as its residue modulo Phi_n,
  which makes equality (and so kernel detection) exact.
"""
from __future__ import annotations

import re
from dataclasses import dataclass, field
from fractions import Fraction
from functools import lru_cache
from math import gcd
from typing import Iterable, Mapping

from .errors import NonExactQuotient, ParseError


def divisors(n: int) -> list[int]:
    if n < 1:
        raise ValueError(f"divisors of non-positive {n}")
    small, large = [], []
    d = 1
    while d * d <= n:
        if n % d == 0:
            small.append(d)
            if d * d != n:
                large.append(n // d)
        d += 1
    return small + large[::-1]


def lcm(a: int, b: int) -> int:
    return a // gcd(a, b) * b


def euler_phi(n: int) -> int:
    result, m, p = n, n, 2
    while p * p <= m:
        if m % p == 0:
            while m % p == 0:
                m //= p
            result -= result // p
        p += 1
    if m > 1:
        result -= result // m
    return result


class IntPolynomial:
    """Integer polynomial, coefficients indexed by degree, no trailing zeros."""

    __slots__ = ("coeffs",)

    def __init__(self, coeffs: Iterable[int] = ()):
        cs = [int(c) for c in coeffs]
        while cs and cs[-1] == 0:
            cs.pop()
        self.coeffs = tuple(cs)

    @classmethod
    def monomial(cls, degree: int, coeff: int = 1) -> "IntPolynomial":
        return cls([0] * degree + [coeff])

    @classmethod
    def x_pow_minus_one(cls, n: int) -> "IntPolynomial":
        return cls([-1] + [0] * (n - 1) + [1])

    @property
    def degree(self) -> int:
        return len(self.coeffs) - 1

    def is_zero(self) -> bool:
        return not self.coeffs

    def leading(self) -> int:
        return self.coeffs[-1] if self.coeffs else 0

    def __call__(self, x):
        acc = 0
        for c in reversed(self.coeffs):
            acc = acc * x + c
        return acc

    def __add__(self, other: "IntPolynomial") -> "IntPolynomial":
        a, b = self.coeffs, other.coeffs
        n = max(len(a), len(b))
        return IntPolynomial((a[i] if i < len(a) else 0) + (b[i] if i < len(b) else 0) for i in range(n))

    def __neg__(self) -> "IntPolynomial":
        return IntPolynomial(-c for c in self.coeffs)

    def __sub__(self, other: "IntPolynomial") -> "IntPolynomial":
        return self + (-other)

    def __mul__(self, other: "IntPolynomial") -> "IntPolynomial":
        if not self.coeffs or not other.coeffs:
            return IntPolynomial()
        out = [0] * (len(self.coeffs) + len(other.coeffs) - 1)
        for i, a in enumerate(self.coeffs):
            if a:
                for j, b in enumerate(other.coeffs):
                    out[i + j] += a * b
        return IntPolynomial(out)

    def divmod_monic(self, divisor: "IntPolynomial") -> tuple["IntPolynomial", "IntPolynomial"]:
        if divisor.leading() != 1:
            raise ValueError("divisor must be monic")
        rem = list(self.coeffs)
        dd = divisor.degree
        quot = [0] * max(len(rem) - dd, 0)
        for i in range(len(rem) - 1, dd - 1, -1):
            c = rem[i]
            if c:
                quot[i - dd] = c
                for j, b in enumerate(divisor.coeffs):
                    rem[i - dd + j] -= c * b
        return IntPolynomial(quot), IntPolynomial(rem)

    def exact_div(self, divisor: "IntPolynomial") -> "IntPolynomial":
        quot, rem = self.divmod_monic(divisor)
        if not rem.is_zero():
            raise NonExactQuotient(f"{divisor} does not divide {self}")
        return quot

    def __eq__(self, other) -> bool:
        return isinstance(other, IntPolynomial) and self.coeffs == other.coeffs

    def __hash__(self) -> int:
        return hash(self.coeffs)

    def __repr__(self) -> str:
        return f"IntPolynomial({list(self.coeffs)!r})"

    def __str__(self) -> str:
        if not self.coeffs:
            return "0"
        parts = []
        for k in range(len(self.coeffs) - 1, -1, -1):
            c = self.coeffs[k]
            if c == 0:
                continue
            mag = abs(c)
            mono = "" if k == 0 else ("x" if k == 1 else f"x^{k}")
            body = str(mag) if not mono else (mono if mag == 1 else f"{mag}*{mono}")
            sign = "-" if c < 0 else "+"
            parts.append((sign, body))
        first_sign, first = parts[0]
        text = ("-" if first_sign == "-" else "") + first
        for sign, body in parts[1:]:
            text += f" {sign} {body}"
        return text


@lru_cache(maxsize=None)
def cyclotomic_poly(n: int) -> IntPolynomial:
    """Phi_n(x), by exact division of x^n - 1 by Phi_d for the proper divisors d."""
    if n < 1:
        raise ValueError(f"cyclotomic_poly needs n >= 1, got {n}")
    poly = IntPolynomial.x_pow_minus_one(n)
    for d in divisors(n)[:-1]:
        poly = poly.exact_div(cyclotomic_poly(d))
    return poly


def cyclo_factor_exponents(m: int) -> dict[int, int]:
    """Cyclotomic indices of x^m - 1 (each divisor of m, exponent 1)."""
    if m < 1:
        raise ValueError(f"cyclo_factor_exponents needs m >= 1, got {m}")
    return {d: 1 for d in divisors(m)}


def cyclo_factor_exponents_plus(m: int) -> dict[int, int]:
    """Cyclotomic indices of x^m + 1 = (x^2m - 1)/(x^m - 1)."""
    if m < 1:
        raise ValueError(f"cyclo_factor_exponents_plus needs m >= 1, got {m}")
    return {d: 1 for d in divisors(2 * m) if m % d}


def _merge(a: Mapping[int, int], b: Mapping[int, int], sign: int = 1) -> dict[int, int]:
    out = dict(a)
    for i, e in b.items():
        out[i] = out.get(i, 0) + sign * e
    return {i: e for i, e in out.items() if e}


_FACTOR_RE = re.compile(r"^(?:q(?:\^(\d+))?|Phi(\d+)(?:\^(\d+))?|([+-]?\d+)(?:/(\d+))?)$")


@dataclass(frozen=True)
class OrderPolynomial:
    """``scalar * q^q_exponent * prod_i Phi_i(q)^e_i`` with every e_i >= 0.

    Keeping the q-power symbolic means the p'-part (defining characteristic
    p, q a power of p) is just ``p_prime()``.
    """

    scalar: Fraction = Fraction(1)
    q_exponent: int = 0
    cyclo: tuple[tuple[int, int], ...] = field(default=())

    def __post_init__(self):
        scalar = Fraction(self.scalar)
        cyc = self.cyclo.items() if isinstance(self.cyclo, Mapping) else self.cyclo
        merged: dict[int, int] = {}
        for i, e in cyc:
            if i < 1:
                raise ValueError(f"cyclotomic index must be >= 1, got {i}")
            merged[i] = merged.get(i, 0) + e
        if any(e < 0 for e in merged.values()) or self.q_exponent < 0:
            raise NonExactQuotient(f"negative exponent in {merged!r} / q^{self.q_exponent}")
        if scalar <= 0:
            raise ValueError(f"order polynomial scalar must be positive, got {scalar}")
        object.__setattr__(self, "scalar", scalar)
        object.__setattr__(self, "cyclo", tuple(sorted((i, e) for i, e in merged.items() if e)))

    # construction helpers

    @classmethod
    def monomial(cls, k: int) -> "OrderPolynomial":
        """q^k."""
        return cls(q_exponent=k)

    @classmethod
    def q_power_minus_one(cls, m: int) -> "OrderPolynomial":
        return cls(cyclo=cyclo_factor_exponents(m))

    @classmethod
    def q_power_plus_one(cls, m: int) -> "OrderPolynomial":
        return cls(cyclo=cyclo_factor_exponents_plus(m))

    @classmethod
    def q_power_minus_sign(cls, m: int, sign: int) -> "OrderPolynomial":
        """q^m - sign, sign in {+1, -1}."""
        if sign == 1:
            return cls.q_power_minus_one(m)
        if sign == -1:
            return cls.q_power_plus_one(m)
        raise ValueError(f"sign must be +1 or -1, got {sign}")

    @classmethod
    def product(cls, factors: Iterable["OrderPolynomial"]) -> "OrderPolynomial":
        out = cls()
        for f in factors:
            out = out * f
        return out

    @classmethod
    def parse(cls, text: str) -> "OrderPolynomial":
        """Inverse of ``str()``: factors like ``2``, ``1/2``, ``q^28``, ``Phi4^2`` joined by ``*``."""
        scalar, qexp, cyc = Fraction(1), 0, {}
        body = text.strip()
        if not body:
            raise ParseError("empty order polynomial")
        for raw in body.split("*"):
            tok = raw.strip()
            m = _FACTOR_RE.match(tok)
            if not m:
                raise ParseError(f"bad order-polynomial factor {tok!r}")
            qpow, idx, iexp, num, den = m.groups()
            if tok.startswith("q"):
                qexp += int(qpow) if qpow else 1
            elif idx is not None:
                cyc[int(idx)] = cyc.get(int(idx), 0) + (int(iexp) if iexp else 1)
            else:
                if den is not None and int(den) == 0:
                    raise ParseError(f"zero denominator in {tok!r}")
                scalar *= Fraction(int(num), int(den) if den else 1)
        return cls(scalar, qexp, cyc)

    # algebra

    @property
    def exponents(self) -> dict[int, int]:
        return dict(self.cyclo)

    def __mul__(self, other) -> "OrderPolynomial":
        if isinstance(other, (int, Fraction)):
            return OrderPolynomial(self.scalar * other, self.q_exponent, self.cyclo)
        return OrderPolynomial(
            self.scalar * other.scalar,
            self.q_exponent + other.q_exponent,
            _merge(self.exponents, other.exponents),
        )

    __rmul__ = __mul__

    def __truediv__(self, other) -> "OrderPolynomial":
        if isinstance(other, (int, Fraction)):
            return OrderPolynomial(self.scalar / other, self.q_exponent, self.cyclo)
        qexp = self.q_exponent - other.q_exponent
        exps = _merge(self.exponents, other.exponents, -1)
        bad = {i: e for i, e in exps.items() if e < 0}
        if bad or qexp < 0:
            detail = ", ".join(f"Phi{i}^{e}" for i, e in sorted(bad.items()))
            if qexp < 0:
                detail = ", ".join(filter(None, [f"q^{qexp}", detail]))
            raise NonExactQuotient(f"({self}) / ({other}) leaves {detail}")
        return OrderPolynomial(self.scalar / other.scalar, qexp, exps)

    def __pow__(self, k: int) -> "OrderPolynomial":
        if k < 0:
            raise ValueError("negative power")
        return OrderPolynomial(self.scalar**k, self.q_exponent * k, {i: e * k for i, e in self.cyclo})

    def divides(self, other: "OrderPolynomial") -> bool:
        """True when ``other / self`` has no negative exponent."""
        try:
            other / self
        except NonExactQuotient:
            return False
        return True

    def p_prime(self) -> "OrderPolynomial":
        return OrderPolynomial(self.scalar, 0, self.cyclo)

    def evaluate(self, q: int) -> Fraction:
        if q < 2:
            raise ValueError(f"evaluate needs q >= 2, got {q}")
        value = self.scalar * Fraction(q) ** self.q_exponent
        for i, e in self.cyclo:
            value *= cyclotomic_poly(i)(q) ** e
        return value

    def evaluate_int(self, q: int) -> int:
        v = self.evaluate(q)
        if v.denominator != 1:
            raise NonExactQuotient(f"{self} at q={q} is {v}, not an integer")
        return v.numerator

    def expand(self) -> tuple[Fraction, IntPolynomial]:
        """(scalar, integer polynomial) with value scalar * poly(q)."""
        poly = IntPolynomial.monomial(self.q_exponent)
        for i, e in self.cyclo:
            for _ in range(e):
                poly = poly * cyclotomic_poly(i)
        return self.scalar, poly

    def degree(self) -> int:
        return self.q_exponent + sum(euler_phi(i) * e for i, e in self.cyclo)

    def __str__(self) -> str:
        parts = [] if self.scalar == 1 else [str(self.scalar)]
        if self.q_exponent:
            parts.append("q" if self.q_exponent == 1 else f"q^{self.q_exponent}")
        parts += [f"Phi{i}" if e == 1 else f"Phi{i}^{e}" for i, e in self.cyclo]
        return " * ".join(parts) or "1"


def orderpoly_mul(a: OrderPolynomial, b: OrderPolynomial) -> OrderPolynomial:
    return a * b


def orderpoly_div(a: OrderPolynomial, b: OrderPolynomial) -> OrderPolynomial:
    return a / b


def orderpoly_eval(P: OrderPolynomial, q: int) -> Fraction:
    return P.evaluate(q)


class CycloValue:
    """sum_k c_k zeta_n^k, stored as the residue mod Phi_n (degree < phi(n)).

    Two values are equal iff their residues agree after lifting to a common
    root order, so ``is_zero`` is a complete decision procedure.
    """

    __slots__ = ("n", "coeffs")

    def __init__(self, n: int, terms: Mapping[int, Fraction | int] | None = None):
        if n < 1:
            raise ValueError(f"root order must be >= 1, got {n}")
        dense = [Fraction(0)] * n
        for k, c in (terms or {}).items():
            dense[k % n] += Fraction(c)
        phi = cyclotomic_poly(n).coeffs
        d = len(phi) - 1
        for i in range(n - 1, d - 1, -1):
            c = dense[i]
            if c:
                for j in range(d + 1):
                    dense[i - d + j] -= c * phi[j]
        dense = dense[:d]
        while dense and dense[-1] == 0:
            dense.pop()
        self.n = n
        self.coeffs = tuple(dense)

    @classmethod
    def rational(cls, r: Fraction | int) -> "CycloValue":
        return cls(1, {0: r})

    @classmethod
    def zeta(cls, n: int, k: int = 1) -> "CycloValue":
        return cls(n, {k: 1})

    @property
    def terms(self) -> dict[int, Fraction]:
        return {k: c for k, c in enumerate(self.coeffs) if c}

    def canonicalize(self) -> "CycloValue":
        return CycloValue(self.n, self.terms)

    def lift(self, m: int) -> "CycloValue":
        if m % self.n:
            raise ValueError(f"cannot lift root order {self.n} to {m}")
        step = m // self.n
        return CycloValue(m, {k * step: c for k, c in self.terms.items()})

    def _common(self, other) -> tuple["CycloValue", "CycloValue"]:
        if not isinstance(other, CycloValue):
            other = CycloValue.rational(other)
        L = lcm(self.n, other.n)
        a = self if self.n == L else self.lift(L)
        b = other if other.n == L else other.lift(L)
        return a, b

    def __add__(self, other) -> "CycloValue":
        a, b = self._common(other)
        terms = dict(a.terms)
        for k, c in b.terms.items():
            terms[k] = terms.get(k, 0) + c
        return CycloValue(a.n, terms)

    __radd__ = __add__

    def __neg__(self) -> "CycloValue":
        return CycloValue(self.n, {k: -c for k, c in self.terms.items()})

    def __sub__(self, other) -> "CycloValue":
        a, b = self._common(other)
        return a + (-b)

    def __rsub__(self, other) -> "CycloValue":
        return (-self) + other

    def __mul__(self, other) -> "CycloValue":
        a, b = self._common(other)
        n = a.n
        terms: dict[int, Fraction] = {}
        for i, x in a.terms.items():
            for j, y in b.terms.items():
                k = (i + j) % n
                terms[k] = terms.get(k, 0) + x * y
        return CycloValue(n, terms)

    __rmul__ = __mul__

    def conjugate(self) -> "CycloValue":
        return CycloValue(self.n, {(-k) % self.n: c for k, c in self.terms.items()})

    def is_zero(self) -> bool:
        return not self.coeffs

    def as_rational(self) -> Fraction | None:
        if not self.coeffs:
            return Fraction(0)
        if len(self.coeffs) == 1:
            return self.coeffs[0]
        return None

    def equals_rational(self, r: Fraction | int) -> bool:
        return (self - r).is_zero()

    def __eq__(self, other) -> bool:
        if not isinstance(other, (CycloValue, int, Fraction)):
            return NotImplemented
        return (self - other).is_zero()

    __hash__ = None  # equality spans root orders, so no cheap hash

    def to_complex(self) -> complex:
        import cmath

        return sum(complex(c) * cmath.exp(2j * cmath.pi * k / self.n) for k, c in self.terms.items())

    def __repr__(self) -> str:
        return f"CycloValue({self.n}, {self.terms!r})"

    def __str__(self) -> str:
        """Rendering in the chartab value grammar."""
        r = self.as_rational()
        if r is not None:
            return str(r)
        out = []
        for k, c in self.terms.items():
            mag = abs(c)
            if k == 0:
                body = str(mag)
            else:
                z = f"z({self.n})" if k == 1 else f"z({self.n})^{k}"
                body = z if mag == 1 else f"{mag}*{z}"
            out.append(("-" if c < 0 else "+") + body)
        text = "".join(out)
        return text[1:] if text.startswith("+") else text


def cyclo_value_canonicalize(v: CycloValue) -> CycloValue:
    return v.canonicalize()
