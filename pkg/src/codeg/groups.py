"""Finite simple groups of Lie type and alternating groups.

A :class:`GroupSpec` names a simple group either as ``(family, rank, q)``
or as an alternating group ``Alt(n)``. Family tags follow the Dynkin
label with the twist as a prefix: ``A 2A B C D 2D G2 F4 E6 2E6 E7 E8 2B2
2G2 3D4 2F4``. For ``2A`` the parameter q is the size of the fixed field,
so ``2A3(q)`` is PSU_4(q) acting on a space over F_{q^2}.
"""
from __future__ import annotations

import re
from dataclasses import dataclass
from fractions import Fraction
from math import factorial, gcd, prod
from pathlib import Path

from .cyclo import OrderPolynomial
from .datafile import load_table
from .errors import ParseError, UnsupportedFamily
from .numtheory import is_prime, p_part, prime_power

CLASSICAL = ("A", "2A", "B", "C", "D", "2D")
EXCEPTIONAL_RANK = {"G2": 2, "F4": 4, "E6": 6, "2E6": 6, "E7": 7, "E8": 8,
                    "2B2": 2, "2G2": 2, "3D4": 4, "2F4": 4}
LIE_FAMILIES = CLASSICAL + tuple(EXCEPTIONAL_RANK)
_MIN_RANK = {"A": 1, "2A": 2, "B": 3, "C": 2, "D": 4, "2D": 4}
ALTERNATING = "Alt"
MAX_EXACT_ALTERNATING = 10**4

# (family, rank, q) triples whose group is not simple (or is a duplicate
# that the rank ranges do not already remove).
_NOT_SIMPLE = {("A", 1, 2), ("A", 1, 3), ("2A", 2, 2), ("C", 2, 2), ("G2", 2, 2),
               ("2B2", 2, 2), ("2G2", 2, 3), ("2F4", 4, 2)}

# exponents d with |W|-degrees: order = q^N * prod (q^d - 1)
_EXCEPTIONAL_DEGREES = {
    "G2": (6, (2, 6)),
    "F4": (24, (2, 6, 8, 12)),
    "E6": (36, (2, 5, 6, 8, 9, 12)),
    "E7": (63, (2, 6, 8, 10, 12, 14, 18)),
    "E8": (120, (2, 8, 12, 14, 18, 20, 24, 30)),
}


@dataclass(frozen=True)
class GroupSpec:
    family: str
    rank: int
    q: int | None = None

    def __post_init__(self):
        fam, r, q = self.family, self.rank, self.q
        if fam == ALTERNATING:
            if q is not None or r < 5:
                raise ValueError(f"alternating group needs n >= 5 and no q, got n={r}")
            return
        if fam not in LIE_FAMILIES:
            raise UnsupportedFamily(f"unknown family {fam!r}")
        if fam in EXCEPTIONAL_RANK:
            if r != EXCEPTIONAL_RANK[fam]:
                raise ValueError(f"{fam} has rank {EXCEPTIONAL_RANK[fam]}, got {r}")
        elif r < _MIN_RANK[fam]:
            raise ValueError(f"{fam} needs rank >= {_MIN_RANK[fam]}, got {r}")
        pa = prime_power(q) if isinstance(q, int) else None
        if pa is None:
            raise ValueError(f"q must be a prime power, got {q}")
        p, a = pa
        if fam in ("2B2", "2F4") and (p != 2 or a % 2 == 0):
            raise ValueError(f"{fam}(q) needs q an odd power of 2, got {q}")
        if fam == "2G2" and (p != 3 or a % 2 == 0):
            raise ValueError(f"2G2(q) needs q an odd power of 3, got {q}")
        if (fam, r, q) in _NOT_SIMPLE:
            raise ValueError(f"{fam}{r}({q}) is not simple")

    @classmethod
    def lie(cls, family: str, rank: int, q: int) -> "GroupSpec":
        return cls(family, rank, q)

    @classmethod
    def alternating(cls, n: int) -> "GroupSpec":
        return cls(ALTERNATING, n)

    @classmethod
    def parse(cls, text: str) -> "GroupSpec":
        """Parse ``C2(3)``, ``2A3(3)``, ``G2(4)``, ``2B2(8)`` or ``Alt12``."""
        s = text.strip()
        m = re.fullmatch(r"(?:Alt|A)\((\d+)\)|Alt(\d+)", s)
        if m:
            return cls.alternating(int(m.group(1) or m.group(2)))
        m = re.fullmatch(r"([23]?)([A-G])(\d+)\((\d+)\)", s)
        if not m:
            raise ParseError(f"cannot parse group {text!r}")
        twist, letter, rank, q = m.group(1), m.group(2), int(m.group(3)), int(m.group(4))
        fam = twist + letter
        if fam not in CLASSICAL:
            fam = f"{twist}{letter}{rank}"
        try:
            return cls(fam, rank, q)
        except (ValueError, UnsupportedFamily) as exc:
            raise ParseError(str(exc)) from None

    @property
    def is_alternating(self) -> bool:
        return self.family == ALTERNATING

    @property
    def is_classical(self) -> bool:
        return self.family in CLASSICAL

    @property
    def p(self) -> int:
        if self.is_alternating:
            raise UnsupportedFamily("alternating groups have no defining characteristic")
        return prime_power(self.q)[0]

    @property
    def a(self) -> int:
        if self.is_alternating:
            raise UnsupportedFamily("alternating groups have no defining characteristic")
        return prime_power(self.q)[1]

    def __str__(self) -> str:
        if self.is_alternating:
            return f"Alt{self.rank}"
        if self.family in CLASSICAL:
            return f"{self.family}{self.rank}({self.q})"
        return f"{self.family}({self.q})"

    @property
    def common_name(self) -> str:
        fam, r, q = self.family, self.rank, self.q
        names = {"A": f"PSL{r + 1}({q})", "2A": f"PSU{r + 1}({q})", "C": f"PSp{2 * r}({q})",
                 "B": f"Omega{2 * r + 1}({q})", "D": f"POmega+{2 * r}({q})",
                 "2D": f"POmega-{2 * r}({q})", "2B2": f"Sz({q})", "2G2": f"Ree({q})"}
        if self.is_alternating:
            return f"A{r}"
        return names.get(fam, str(self))

    def env(self) -> dict[str, int]:
        return {"q": self.q, "p": self.p, "a": self.a, "n": self.rank}


def _gl_factors(n: int, sign: int) -> OrderPolynomial:
    # prod_{i=2}^{n} (q^i - sign^i)
    return OrderPolynomial.product(OrderPolynomial.q_power_minus_sign(i, sign ** i) for i in range(2, n + 1))


def universal_order(g: GroupSpec) -> OrderPolynomial | int:
    """Order of the simply connected group (OrderPolynomial in q), or n!/2."""
    if g.is_alternating:
        if g.rank > MAX_EXACT_ALTERNATING:
            raise UnsupportedFamily(f"exact alternating orders stop at n = {MAX_EXACT_ALTERNATING}")
        return factorial(g.rank) // 2
    fam, n = g.family, g.rank
    one = OrderPolynomial.q_power_minus_one
    plus = OrderPolynomial.q_power_plus_one
    if fam == "A":
        return OrderPolynomial.monomial(n * (n + 1) // 2) * _gl_factors(n + 1, 1)
    if fam == "2A":
        return OrderPolynomial.monomial(n * (n + 1) // 2) * _gl_factors(n + 1, -1)
    if fam in ("B", "C"):
        return OrderPolynomial.monomial(n * n) * OrderPolynomial.product(one(2 * i) for i in range(1, n + 1))
    if fam in ("D", "2D"):
        top = one(n) if fam == "D" else plus(n)
        return OrderPolynomial.monomial(n * (n - 1)) * top * OrderPolynomial.product(one(2 * i) for i in range(1, n))
    if fam in _EXCEPTIONAL_DEGREES:
        N, degs = _EXCEPTIONAL_DEGREES[fam]
        return OrderPolynomial.monomial(N) * OrderPolynomial.product(one(d) for d in degs)
    if fam == "2E6":
        return OrderPolynomial.monomial(36) * OrderPolynomial.product(
            [one(2), plus(5), one(6), one(8), plus(9), one(12)])
    if fam == "2B2":
        return OrderPolynomial.monomial(2) * plus(2) * one(1)
    if fam == "2G2":
        return OrderPolynomial.monomial(3) * plus(3) * one(1)
    if fam == "3D4":
        # q^8 + q^4 + 1 = Phi_3(q^4)... = Phi_3 Phi_6 Phi_12
        return OrderPolynomial.monomial(12) * OrderPolynomial(1, 0, ((3, 1), (6, 1), (12, 1))) * one(6) * one(2)
    if fam == "2F4":
        return OrderPolynomial.monomial(12) * plus(6) * one(4) * plus(3) * one(1)
    raise UnsupportedFamily(f"no order formula for {fam}")


def center_size(g: GroupSpec) -> int:
    """Order of the center of the simply connected group (its Schur part
    coming from the root datum, not exceptional multipliers)."""
    if g.is_alternating:
        return 1
    fam, n, q = g.family, g.rank, g.q
    if fam == "A":
        return gcd(n + 1, q - 1)
    if fam == "2A":
        return gcd(n + 1, q + 1)
    if fam in ("B", "C", "E7"):
        return gcd(2, q - 1)
    if fam == "D":
        return gcd(4, q ** n - 1)
    if fam == "2D":
        return gcd(4, q ** n + 1)
    if fam == "E6":
        return gcd(3, q - 1)
    if fam == "2E6":
        return gcd(3, q + 1)
    return 1


def simple_order(g: GroupSpec) -> int:
    u = universal_order(g)
    if isinstance(u, int):
        return u
    total = u.evaluate_int(g.q)
    d = center_size(g)
    if total % d:
        raise ArithmeticError(f"center size {d} does not divide |{g}|")
    return total // d


def order_ppart(g: GroupSpec, p: int) -> int:
    """``|H|_p`` for the simple group H named by ``g``."""
    if g.is_alternating:
        return exact_alternating_ppart(g.rank, p)
    return p_part(simple_order(g), p)


def natural_module_size(g: GroupSpec) -> int:
    """Size of the natural module. For ``2A`` the module is F_{q^2}^{n+1}."""
    fam, n = g.family, g.rank
    if fam == "A":
        return g.q ** (n + 1)
    if fam == "2A":
        return (g.q ** 2) ** (n + 1)
    if fam == "C":
        return g.q ** (2 * n)
    if fam == "B":
        return g.q ** (2 * n + 1)
    if fam in ("D", "2D"):
        return g.q ** (2 * n)
    raise UnsupportedFamily(f"{g} has no natural classical module")


def alternating_ppart_bound(n: int, p: int) -> int:
    """Upper bound for |A_n|_p: p^((n-1)//(p-1)) for odd p, 2^(n-2) for p = 2."""
    if n < 5:
        raise ValueError(f"n must be >= 5, got {n}")
    if not is_prime(p):
        raise ValueError(f"{p} is not prime")
    if p == 2:
        return 2 ** (n - 2)
    return p ** ((n - 1) // (p - 1))


def exact_alternating_ppart(n: int, p: int) -> int:
    """|A_n|_p by Legendre's formula."""
    if n < 5:
        raise ValueError(f"n must be >= 5, got {n}")
    if not is_prime(p):
        raise ValueError(f"{p} is not prime")
    e, pk = 0, p
    while pk <= n:
        e += n // pk
        pk *= p
    if p == 2:
        e -= 1
    return p ** e


def muller_james_bound(n: int) -> int:
    """Lower bound for dim D^lambda when the first part of lambda is at most n-4.

    The quartic is always an integer multiple of 1/24 and is rounded up;
    a dimension is an integer, so the ceiling is still a valid bound.
    """
    if n < 11:
        raise ValueError(f"bound holds for n >= 11, got {n}")
    quartic = Fraction(n ** 4 - 14 * n ** 3 + 47 * n ** 2 - 34 * n, 24)
    g = 55 * 2 ** ((n - 11) // 2) if n % 2 else 89 * 2 ** ((n - 12) // 2)
    m = min(quartic, Fraction(g))
    return -((-m.numerator) // m.denominator)


def _lie_lookup(table: str, g: GroupSpec) -> int:
    if g.is_alternating:
        raise UnsupportedFamily(f"{table} has no rows for alternating groups")
    value, _row = load_table(table).lookup(g.family, g.env())
    return value


def lsz_min_degree(g: GroupSpec) -> int:
    """Lower bound for nontrivial cross-characteristic degrees of ``g``."""
    return _lie_lookup("lsz", g)


def min_perm_degree(g: GroupSpec) -> int:
    return _lie_lookup("permdeg", g)


def data_source(table: str, g: GroupSpec) -> str:
    """Source tag of the row that ``table`` uses for ``g``."""
    tab = load_table(table)
    _value, row = tab.lookup(g.family, g.env())
    return f"{row.source} ({Path(tab.path).name}:{row.line})"


# Orders of the sporadic groups as prime factorizations.
SPORADIC_ORDERS: dict[str, dict[int, int]] = {
    "M11": {2: 4, 3: 2, 5: 1, 11: 1},
    "M12": {2: 6, 3: 3, 5: 1, 11: 1},
    "J1": {2: 3, 3: 1, 5: 1, 7: 1, 11: 1, 19: 1},
    "M22": {2: 7, 3: 2, 5: 1, 7: 1, 11: 1},
    "J2": {2: 7, 3: 3, 5: 2, 7: 1},
    "M23": {2: 7, 3: 2, 5: 1, 7: 1, 11: 1, 23: 1},
    "HS": {2: 9, 3: 2, 5: 3, 7: 1, 11: 1},
    "J3": {2: 7, 3: 5, 5: 1, 17: 1, 19: 1},
    "M24": {2: 10, 3: 3, 5: 1, 7: 1, 11: 1, 23: 1},
    "McL": {2: 7, 3: 6, 5: 3, 7: 1, 11: 1},
    "He": {2: 10, 3: 3, 5: 2, 7: 3, 17: 1},
    "Ru": {2: 14, 3: 3, 5: 3, 7: 1, 13: 1, 29: 1},
    "Suz": {2: 13, 3: 7, 5: 2, 7: 1, 11: 1, 13: 1},
    "ON": {2: 9, 3: 4, 5: 1, 7: 3, 11: 1, 19: 1, 31: 1},
    "Co3": {2: 10, 3: 7, 5: 3, 7: 1, 11: 1, 23: 1},
    "Co2": {2: 18, 3: 6, 5: 3, 7: 1, 11: 1, 23: 1},
    "Fi22": {2: 17, 3: 9, 5: 2, 7: 1, 11: 1, 13: 1},
    "HN": {2: 14, 3: 6, 5: 6, 7: 1, 11: 1, 19: 1},
    "Ly": {2: 8, 3: 7, 5: 6, 7: 1, 11: 1, 31: 1, 37: 1, 67: 1},
    "Th": {2: 15, 3: 10, 5: 3, 7: 2, 13: 1, 19: 1, 31: 1},
    "Fi23": {2: 18, 3: 13, 5: 2, 7: 1, 11: 1, 13: 1, 17: 1, 23: 1},
    "Co1": {2: 21, 3: 9, 5: 4, 7: 2, 11: 1, 13: 1, 23: 1},
    "J4": {2: 21, 3: 3, 5: 1, 7: 1, 11: 3, 23: 1, 29: 1, 31: 1, 37: 1, 43: 1},
    "Fi24'": {2: 21, 3: 16, 5: 2, 7: 3, 11: 1, 13: 1, 17: 1, 23: 1, 29: 1},
    "B": {2: 41, 3: 13, 5: 6, 7: 2, 11: 1, 13: 1, 17: 1, 19: 1, 23: 1, 31: 1, 47: 1},
    "M": {2: 46, 3: 20, 5: 9, 7: 6, 11: 2, 13: 3, 17: 1, 19: 1, 23: 1, 29: 1,
          31: 1, 41: 1, 47: 1, 59: 1, 71: 1},
}


def sporadic_order(name: str) -> int:
    try:
        return prod(p ** e for p, e in SPORADIC_ORDERS[name].items())
    except KeyError:
        raise UnsupportedFamily(f"unknown sporadic group {name!r}") from None
