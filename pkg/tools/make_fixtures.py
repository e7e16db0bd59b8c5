"""Regenerate the computed fixtures sl27.chartab and asl24.chartab.

SL(2,7) is written down from the generic SL(2,q) table (q = 7). The affine
group 2^4:A5 = F_4^2 : SL(2,4) is built element by element: classes by
brute-force conjugation, characters by inflation from A5 plus induction of
the extensions of a nontrivial linear character of N to N:Stab.

Usage: python3 tools/make_fixtures.py [outdir]
"""
from __future__ import annotations

import itertools
import sys
from fractions import Fraction
from pathlib import Path

from codeg.chartab import CharacterTable, Character, ClassInfo, orthogonality_defects, render_table
from codeg.cyclo import CycloValue

R = CycloValue.rational
Z = CycloValue.zeta
HALF = Fraction(1, 2)


def sl27() -> CharacterTable:
    q = 7
    mu = lambda k: Z(6, k)       # split torus eigenvalues, F_7^* has order 6
    zeta = lambda k: Z(8, k)     # non-split torus, order q+1 = 8
    s = R(1) + Z(7, 1) * 2 + Z(7, 2) * 2 + Z(7, 4) * 2   # sqrt(-7)
    classes = [("1a", 1), ("2a", 1), ("6a", q * (q + 1)), ("3a", q * (q + 1)),
               ("8a", q * (q - 1)), ("4a", q * (q - 1)), ("8b", q * (q - 1)),
               ("7a", 24), ("7b", 24), ("14a", 24), ("14b", 24)]
    # split classes a^l (l = 1, 2), non-split b^m (m = 1, 2, 3)
    rows = [("1a", [R(1)] * 11),
            ("7a", [R(7), R(7), R(1), R(1), R(-1), R(-1), R(-1), R(0), R(0), R(0), R(0)])]
    for i in (1, 2):
        sgn = (-1) ** i
        a_vals = [mu(i * l) + mu(-i * l) for l in (1, 2)]
        rows.append((f"8{'ab'[i - 1]}", [R(8), R(8 * sgn)] + a_vals + [R(0)] * 3 + [R(1), R(1), R(sgn), R(sgn)]))
    for j in (1, 2, 3):
        sgn = (-1) ** j
        b_vals = [-(zeta(j * m) + zeta(-j * m)) for m in (1, 2, 3)]
        rows.append((f"6{'abc'[j - 1]}", [R(6), R(6 * sgn), R(0), R(0)] + b_vals + [R(-1), R(-1), R(-sgn), R(-sgn)]))
    for k, e in enumerate((1, -1)):
        u, v = (R(1) + s * e) * HALF, (R(1) - s * e) * HALF
        rows.append((f"4{'ab'[k]}", [R(4), R(-4), R(-1), R(1), R(0), R(0), R(0), u, v, -u, -v]))
    for k, e in enumerate((1, -1)):
        u, v = (R(-1) + s * e) * HALF, (R(-1) - s * e) * HALF
        rows.append((f"3{'ab'[k]}", [R(3), R(3), R(0), R(0), R(1), R(-1), R(1), u, v, u, v]))
    chars = [Character(lbl, int(vals[0].as_rational()), tuple(vals)) for lbl, vals in rows]
    chars.sort(key=lambda c: c.degree)
    return CharacterTable("SL2(7)", 336, tuple(ClassInfo(*c) for c in classes), tuple(chars))


# F_4 = {0, 1, w, w^2} encoded as 0..3 with bit arithmetic: x = b0 + b1*w, w^2 = w + 1
def f4_mul(x: int, y: int) -> int:
    a0, a1, b0, b1 = x & 1, x >> 1, y & 1, y >> 1
    c0 = (a0 & b0) ^ (a1 & b1)
    c1 = (a0 & b1) ^ (a1 & b0) ^ (a1 & b1)
    return c0 | (c1 << 1)


def f4_trace(x: int) -> int:
    return (x ^ f4_mul(x, x)) & 1  # x + x^2 lies in F_2


def mat_mul(A, B):
    return tuple(tuple(f4_mul(A[i][0], B[0][j]) ^ f4_mul(A[i][1], B[1][j]) for j in range(2)) for i in range(2))


def mat_vec(A, v):
    return tuple(f4_mul(A[i][0], v[0]) ^ f4_mul(A[i][1], v[1]) for i in range(2))


def mat_inv(A):
    (a, b), (c, d) = A  # det 1 and characteristic 2: inverse is [[d, b], [c, a]]
    return ((d, b), (c, a))


def asl24() -> CharacterTable:
    sl = [M for M in (((a, b), (c, d)) for a, b, c, d in itertools.product(range(4), repeat=4))
          if f4_mul(M[0][0], M[1][1]) ^ f4_mul(M[0][1], M[1][0]) == 1]
    assert len(sl) == 60
    vecs = list(itertools.product(range(4), repeat=2))
    G = [(v, M) for v in vecs for M in sl]
    ident = ((1, 0), (0, 1))

    def mul(g, h):
        (v, M), (w, N) = g, h
        mw = mat_vec(M, w)
        return ((v[0] ^ mw[0], v[1] ^ mw[1]), mat_mul(M, N))

    def inv(g):
        v, M = g
        Mi = mat_inv(M)
        return (mat_vec(Mi, v), Mi)

    def order(g):
        e, x, k = ((0, 0), ident), g, 1
        while x != e:
            x, k = mul(x, g), k + 1
        return k

    seen, classes = set(), []
    for g in G:
        if g in seen:
            continue
        cl = {mul(mul(x, g), inv(x)) for x in G}
        seen |= cl
        classes.append((g, frozenset(cl)))
    classes.sort(key=lambda c: (order(c[0]), len(c[1]), sorted(c[1])[0]))
    reps = [c[0] for c in classes]

    # A5 = SL(2,4) values keyed by (order, trace) of the linear part
    def a5_class(M):
        o = order(((0, 0), M))
        return {1: "1", 2: "2", 3: "3"}.get(o) or ("5a" if (M[0][0] ^ M[1][1]) == 2 else "5b")

    A = Z(5, 1) + Z(5, 4)
    B = Z(5, 2) + Z(5, 3)
    a5 = {"1a": {"1": 1, "2": 1, "3": 1, "5a": 1, "5b": 1},
          "3a": {"1": 3, "2": -1, "3": 0, "5a": R(1) + B, "5b": R(1) + A},
          "3b": {"1": 3, "2": -1, "3": 0, "5a": R(1) + A, "5b": R(1) + B},
          "4a": {"1": 4, "2": 0, "3": 1, "5a": -1, "5b": -1},
          "5a": {"1": 5, "2": 1, "3": -1, "5a": 0, "5b": 0}}
    rows = []
    for lbl, tab in a5.items():
        vals = [tab[a5_class(M)] for _v, M in reps]
        rows.append((lbl, [v if isinstance(v, CycloValue) else R(v) for v in vals], False))

    # lambda_a(v) = (-1)^Tr(a.v) with a = (1, 0); its stabilizer U in SL(2,4)
    lam = lambda v: -1 if f4_trace(v[0]) else 1
    U = [M for M in sl if all(lam(mat_vec(M, v)) == lam(v) for v in vecs)]
    assert len(U) == 4
    u1 = next(M for M in U if M != ident)
    u2 = next(M for M in U if M not in (ident, u1))
    coords = {ident: (0, 0), u1: (1, 0), u2: (0, 1), mat_mul(u1, u2): (1, 1)}
    H = {(v, M) for v in vecs for M in U}
    for k, (e1, e2) in enumerate(itertools.product((1, -1), repeat=2)):
        def psi(h):
            v, M = h
            c = coords[M]
            return lam(v) * (e1 ** c[0]) * (e2 ** c[1])
        vals = []
        for g in reps:
            total = sum(psi(y) for x in G if (y := mul(mul(x, g), inv(x))) in H)
            assert total % len(H) == 0
            vals.append(R(total // len(H)))
        rows.append((f"15{'abcd'[k]}", vals, True))

    labels, counter = [], {}
    for g, cl in classes:
        o = order(g)
        counter[o] = counter.get(o, 0) + 1
        labels.append(f"{o}{'abcdefgh'[counter[o] - 1]}")
    chars = tuple(Character(lbl, int(vals[0].as_rational()), tuple(vals), flag) for lbl, vals, flag in rows)
    return CharacterTable("2^4:A5", 960, tuple(ClassInfo(l, len(cl)) for l, (_g, cl) in zip(labels, classes)), chars)


HEADERS = {
    "sl27": "# SL(2,7) = 2.PSL(2,7) from the generic SL(2,q) table; 2a is the central involution.\n"
            "# Split torus classes 6a, 3a; non-split 8a, 4a, 8b; unipotent 7a, 7b and their negatives 14a, 14b.\n",
    "asl24": "# 2^4:A5 = F_4^2 : SL(2,4). N = F_4^2 is the unique minimal normal subgroup; the four\n"
             "# degree-15 characters lie over nontrivial characters of N and are faithful.\n",
}


def main(outdir: str | None = None) -> None:
    out = Path(outdir) if outdir else Path(__file__).resolve().parents[1] / "src" / "codeg" / "fixtures"
    for name, build in (("sl27", sl27), ("asl24", asl24)):
        t = build()
        bad = orthogonality_defects(t)
        if bad:
            raise SystemExit(f"{name}: orthogonality fails: {bad[:3]}")
        text = render_table(t)
        head, rest = text.split("\n", 1)
        (out / f"{name}.chartab").write_text(head + "\n" + HEADERS[name] + rest, encoding="utf-8")
        print(f"wrote {out / (name + '.chartab')}")


if __name__ == "__main__":
    main(*sys.argv[1:2])
