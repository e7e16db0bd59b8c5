"""Character tables, kernels and codegrees.

Text format (UTF-8, whitespace separated, ``#`` comments)::

    CHARTAB 1
    group A5 order 60
    class 1a 1
    class 2a 15
    ...
    char 3a 3 : 3 -1 0 1+z(5)^2+z(5)^3 1+z(5)+z(5)^4

Values are integers, fractions ``a/b``, or sums of terms ``c*z(n)^k``
(c an integer or fraction, both ``c*`` and ``^k`` optional) and rationals,
with no spaces inside a value. A ``char`` line may carry one extra token
``faithful=yes`` or ``faithful=no`` before the colon; tables that use it
everywhere can be fed to the split-extension check.
"""
from __future__ import annotations

import re
from collections import Counter
from dataclasses import dataclass
from fractions import Fraction
from math import gcd
from pathlib import Path

from .cyclo import CycloValue
from .errors import InvariantViolation, NonIntegralCodegree, ParseError
from .numtheory import p_part, prime_factors
from .report import INAPPLICABLE, REFUTED, VERIFIED, VerificationReport

FORMAT_VERSION = 1


@dataclass(frozen=True)
class ClassInfo:
    label: str
    size: int


@dataclass(frozen=True, eq=False)
class Character:
    label: str
    degree: int
    values: tuple[CycloValue, ...]
    faithful_flag: bool | None = None


@dataclass(frozen=True, eq=False)
class CharacterTable:
    name: str
    order: int
    classes: tuple[ClassInfo, ...]
    characters: tuple[Character, ...]

    def __post_init__(self):
        _validate(self)

    @property
    def has_faithful_flags(self) -> bool:
        return bool(self.characters) and all(c.faithful_flag is not None for c in self.characters)

    def index(self, label: str) -> int:
        for i, c in enumerate(self.characters):
            if c.label == label:
                return i
        raise KeyError(label)


# parsing

_TERM_RE = re.compile(
    r"([+-])?(?:(\d+(?:/\d+)?)\*)?z\((\d+)\)(?:\^(\d+))?"
    r"|([+-])?(\d+(?:/\d+)?)"
)


def parse_value(text: str) -> CycloValue:
    """Parse one table entry in the value grammar."""
    if not text:
        raise ParseError("empty value")
    pos, total, first = 0, CycloValue.rational(0), True
    while pos < len(text):
        m = _TERM_RE.match(text, pos)
        if not m or m.end() == pos:
            raise ParseError(f"bad value {text!r} at offset {pos}")
        if m.group(3) is not None:
            sign, coeff, n, k = m.group(1), m.group(2), int(m.group(3)), int(m.group(4) or 1)
            if n < 1:
                raise ParseError(f"root order must be positive in {text!r}")
            term = CycloValue(n, {k: Fraction(coeff) if coeff else 1})
        else:
            sign, coeff = m.group(5), m.group(6)
            term = CycloValue.rational(Fraction(coeff))
        if sign is None and not first:
            raise ParseError(f"missing '+' or '-' between terms in {text!r}")
        total = total - term if sign == "-" else total + term
        pos, first = m.end(), False
    return total


def _int_field(tok: str, lineno: int, field: str) -> int:
    if not re.fullmatch(r"\d+", tok):
        raise ParseError(f"expected a non-negative integer, got {tok!r}", lineno, field)
    return int(tok)


def parse_table(document: str) -> CharacterTable:
    header_seen = False
    name = order = None
    classes: list[ClassInfo] = []
    chars: list[Character] = []
    for lineno, raw in enumerate(document.splitlines(), start=1):
        line = raw.split("#", 1)[0].strip()
        if not line:
            continue
        tok = line.split()
        if not header_seen:
            if tok != ["CHARTAB", str(FORMAT_VERSION)]:
                raise ParseError(f"expected header 'CHARTAB {FORMAT_VERSION}'", lineno, "header")
            header_seen = True
            continue
        kind = tok[0]
        if kind == "group":
            if name is not None:
                raise ParseError("duplicate group line", lineno, "group")
            if len(tok) != 4 or tok[2] != "order":
                raise ParseError("expected 'group <name> order <N>'", lineno, "group")
            name, order = tok[1], _int_field(tok[3], lineno, "order")
        elif kind == "class":
            if name is None:
                raise ParseError("class line before group line", lineno, "class")
            if chars:
                raise ParseError("class line after char lines", lineno, "class")
            if len(tok) != 3:
                raise ParseError("expected 'class <label> <size>'", lineno, "class")
            classes.append(ClassInfo(tok[1], _int_field(tok[2], lineno, "size")))
        elif kind == "char":
            if ":" not in tok:
                raise ParseError("missing ':' before values", lineno, "char")
            colon = tok.index(":")
            head, vals = tok[1:colon], tok[colon + 1:]
            flag = None
            if len(head) == 3 and head[2] in ("faithful=yes", "faithful=no"):
                flag = head[2] == "faithful=yes"
                head = head[:2]
            if len(head) != 2:
                raise ParseError("expected 'char <label> <degree> [faithful=yes|no] : values'", lineno, "char")
            if len(vals) != len(classes):
                raise ParseError(f"{len(vals)} values for {len(classes)} classes", lineno, "values")
            degree = _int_field(head[1], lineno, "degree")
            parsed = []
            for j, v in enumerate(vals):
                try:
                    parsed.append(parse_value(v))
                except ParseError as exc:
                    raise ParseError(str(exc), lineno, f"value {j + 1}") from None
            chars.append(Character(head[0], degree, tuple(parsed), flag))
        else:
            raise ParseError(f"unknown record {kind!r}", lineno, "record")
    if not header_seen:
        raise ParseError("empty document", None, "header")
    if name is None:
        raise ParseError("missing group line", None, "group")
    return CharacterTable(name, order, tuple(classes), tuple(chars))


def load_table(path: str | Path) -> CharacterTable:
    return parse_table(Path(path).read_text(encoding="utf-8"))


def fixture_path(name: str) -> Path:
    """Path of a bundled table, e.g. ``fixture_path("a5")``."""
    return Path(__file__).with_name("fixtures") / f"{name}.chartab"


def render_table(t: CharacterTable) -> str:
    lines = [f"CHARTAB {FORMAT_VERSION}", f"group {t.name} order {t.order}"]
    lines += [f"class {c.label} {c.size}" for c in t.classes]
    for ch in t.characters:
        flag = "" if ch.faithful_flag is None else (" faithful=yes" if ch.faithful_flag else " faithful=no")
        lines.append(f"char {ch.label} {ch.degree}{flag} : " + " ".join(str(v) for v in ch.values))
    return "\n".join(lines) + "\n"


def _validate(t: CharacterTable) -> None:
    if not t.classes:
        raise InvariantViolation("nonempty", "table has no classes")
    if t.classes[0].size != 1:
        raise InvariantViolation("identity-first", f"first class {t.classes[0].label} has size {t.classes[0].size}")
    if any(c.size < 1 for c in t.classes):
        raise InvariantViolation("class-size", "class sizes must be positive")
    total = sum(c.size for c in t.classes)
    if total != t.order:
        raise InvariantViolation("class-size-sum", f"class sizes sum to {total}, order is {t.order}")
    if len(t.characters) != len(t.classes):
        raise InvariantViolation("square", f"{len(t.characters)} characters for {len(t.classes)} classes")
    for ch in t.characters:
        if len(ch.values) != len(t.classes):
            raise InvariantViolation("row-length", f"character {ch.label} has {len(ch.values)} values")
        if ch.degree < 1 or not ch.values[0].equals_rational(ch.degree):
            raise InvariantViolation("identity-value", f"character {ch.label}: value at identity is {ch.values[0]}, degree {ch.degree}")
    sq = sum(ch.degree ** 2 for ch in t.characters)
    if sq != t.order:
        raise InvariantViolation("degree-square-sum", f"sum of squared degrees is {sq}, order is {t.order}")


def orthogonality_defects(t: CharacterTable) -> list[str]:
    """Exact row and column orthogonality; returns a description of every failure."""
    out = []
    k = len(t.classes)
    conj = [[v.conjugate() for v in ch.values] for ch in t.characters]
    for i, a in enumerate(t.characters):
        for j in range(i, k):
            s = CycloValue.rational(0)
            for c in range(k):
                s = s + a.values[c] * conj[j][c] * t.classes[c].size
            want = t.order if i == j else 0
            if not s.equals_rational(want):
                out.append(f"rows {a.label},{t.characters[j].label}: {s} != {want}")
    for c in range(k):
        for d in range(c, k):
            s = CycloValue.rational(0)
            for i in range(k):
                s = s + t.characters[i].values[c] * conj[i][d]
            want = Fraction(t.order, t.classes[c].size) if c == d else 0
            if not s.equals_rational(want):
                out.append(f"columns {t.classes[c].label},{t.classes[d].label}: {s} != {want}")
    return out


# kernels and codegrees

def kernel_classes(t: CharacterTable, i: int) -> list[int]:
    ch = t.characters[i]
    return [c for c, v in enumerate(ch.values) if v.equals_rational(ch.degree)]


def kernel_order(t: CharacterTable, i: int) -> int:
    return sum(t.classes[c].size for c in kernel_classes(t, i))


def is_faithful(t: CharacterTable, i: int) -> bool:
    return kernel_order(t, i) == 1


def degrees(t: CharacterTable) -> set[int]:
    return {ch.degree for ch in t.characters}


def codegree(t: CharacterTable, i: int) -> int:
    ch = t.characters[i]
    k = kernel_order(t, i)
    if t.order % k:
        raise NonIntegralCodegree(f"{t.name}: kernel order {k} of {ch.label} does not divide {t.order}")
    index = t.order // k
    if index % ch.degree:
        raise NonIntegralCodegree(f"{t.name}: degree {ch.degree} of {ch.label} does not divide |G:ker| = {index}")
    return index // ch.degree


def pseudo_algebra(t: CharacterTable) -> Counter:
    return Counter(codegree(t, i) for i in range(len(t.characters)))


def codegrees(t: CharacterTable) -> set[int]:
    return set(pseudo_algebra(t))


def center_classes(t: CharacterTable) -> list[int]:
    return [c for c, info in enumerate(t.classes) if info.size == 1]


def center_order(t: CharacterTable) -> int:
    return len(center_classes(t))


def format_set(values) -> str:
    return "{" + ",".join(str(v) for v in sorted(values)) + "}"


def quotient_degrees(t: CharacterTable, classes: list[int]) -> set[int]:
    """Degrees of the characters whose kernel contains every given class."""
    out = set()
    for i, ch in enumerate(t.characters):
        if all(ch.values[c].equals_rational(ch.degree) for c in classes):
            out.add(ch.degree)
    return out


# table-level checks

def verify_thm_e_instance(t: CharacterTable) -> VerificationReport:
    """Look for a faithful character whose degree divided by |Z| is not a degree of G/Z."""
    zc = center_classes(t)
    r = len(zc)
    params = {"table": t.name, "center_order": r}
    if r == 1 or len(prime_factors(r)) != 1 or prime_factors(r)[0] != r:
        return VerificationReport("thm-e", params, INAPPLICABLE,
                                  narrative=f"center of {t.name} has order {r}, not a prime")
    qdeg = quotient_degrees(t, zc)
    faithful = sorted((ch.degree, i) for i, ch in enumerate(t.characters) if is_faithful(t, i))
    params["quotient_degrees"] = format_set(qdeg)
    for deg, i in faithful:
        ratio = Fraction(deg, r)
        if ratio.denominator != 1 or ratio.numerator not in qdeg:
            ch = t.characters[i]
            return VerificationReport(
                "thm-e", params, VERIFIED,
                witness={"character": ch.label, "degree": deg, "quotient": str(ratio)},
                witness_text=f"degree {deg} (character {ch.label}): {deg}/{r} = {ratio} not in cd(G/Z) = {format_set(qdeg)}",
                narrative=f"faithful character of {t.name} whose degree over |Z| = {r} is not a degree of the central quotient")
    return VerificationReport(
        "thm-e", params, REFUTED,
        witness={"faithful_degrees": [d for d, _ in faithful]},
        witness_text="refuted on this table: every faithful degree divided by |Z| is a quotient degree",
        narrative=f"faithful degrees {[d for d, _ in faithful]} all land in {format_set(qdeg)} after dividing by {r}")


def codegree_subset(g: CharacterTable, h: CharacterTable) -> VerificationReport:
    cg, ch = codegrees(g), codegrees(h)
    missing = sorted(cg - ch)
    params = {"G": g.name, "H": h.name, "cod(G)": format_set(cg), "cod(H)": format_set(ch)}
    if not missing:
        return VerificationReport("cod-subset", params, VERIFIED,
                                  narrative=f"cod({g.name}) = {format_set(cg)} is contained in cod({h.name}) = {format_set(ch)}")
    return VerificationReport("cod-subset", params, REFUTED, witness=missing,
                              witness_text=format_set(missing),
                              narrative=f"codegrees of {g.name} missing from cod({h.name}): {format_set(missing)}")


def check_projective_bound(t: CharacterTable, classes: list[int], theta: list) -> VerificationReport:
    """For N a central subgroup given by ``classes`` and a linear character theta
    of N given by its values there, check that for every prime p dividing |G/N|
    some chi over theta has chi(1)_p squared at most |G/N|_p.
    """
    params = {"table": t.name, "classes": [t.classes[c].label for c in classes],
              "theta": [str(v) for v in theta]}
    if len(theta) != len(classes) or not classes:
        return VerificationReport("proj-bound", params, INAPPLICABLE,
                                  narrative="theta must give one value per designated class")
    if any(t.classes[c].size != 1 for c in classes):
        return VerificationReport("proj-bound", params, INAPPLICABLE,
                                  narrative="designated classes are not all central (size 1)")
    n_order = len(set(classes))
    if n_order != len(classes) or t.order % n_order:
        return VerificationReport("proj-bound", params, INAPPLICABLE,
                                  narrative=f"designated classes give {n_order} elements, which is not a subgroup order of {t.order}")
    theta = [v if isinstance(v, CycloValue) else parse_value(str(v)) for v in theta]
    if 0 in classes and not theta[classes.index(0)].equals_rational(1):
        return VerificationReport("proj-bound", params, INAPPLICABLE,
                                  narrative="theta is not 1 at the identity")
    over = [i for i, ch in enumerate(t.characters)
            if all((ch.values[c] - theta[j] * ch.degree).is_zero() for j, c in enumerate(classes))]
    quotient = t.order // n_order
    if not over or sum(t.characters[i].degree ** 2 for i in over) != quotient:
        return VerificationReport("proj-bound", params, INAPPLICABLE,
                                  narrative="the given values are not a linear character of N "
                                            "(degrees over theta do not square-sum to |G/N|)")
    details = []
    for p in prime_factors(quotient) if quotient > 1 else []:
        best = min(p_part(t.characters[i].degree, p) for i in over)
        bound = p_part(quotient, p)
        line = f"p={p}: min chi(1)_p = {best}, {best}^2 = {best * best} <= |G/N|_p = {bound}"
        if best * best > bound:
            return VerificationReport("proj-bound", params, REFUTED,
                                      witness={"p": p, "min_ppart": best, "quotient_ppart": bound},
                                      witness_text=line.replace("<=", "exceeds"),
                                      narrative="bound fails", details=tuple(details))
        details.append(line)
    return VerificationReport("proj-bound", params, VERIFIED,
                              narrative=f"{len(over)} characters over theta, |G/N| = {quotient}",
                              details=tuple(details))


def check_split_extension_claim(t: CharacterTable, p: int, n_central: bool | None = None) -> VerificationReport:
    """Is there a character flagged faithful whose degree is prime to p?

    Flags are cross-checked against the kernel computed from the table. If
    the table has a nontrivial center, the narrative says that a central N
    does not match the split setting.
    """
    params = {"table": t.name, "p": p}
    if not t.has_faithful_flags:
        return VerificationReport("split-ext", params, INAPPLICABLE,
                                  narrative="table carries no faithful=yes|no flags")
    for i, ch in enumerate(t.characters):
        if ch.faithful_flag != is_faithful(t, i):
            return VerificationReport("split-ext", params, INAPPLICABLE,
                                      narrative=f"flag on {ch.label} disagrees with its computed kernel")
    central = center_order(t) > 1 if n_central is None else n_central
    note = " N is central here, so the group is not a split extension in the intended sense." if central else ""
    for i, ch in enumerate(t.characters):
        if ch.faithful_flag and gcd(ch.degree, p) == 1:
            return VerificationReport("split-ext", params, VERIFIED,
                                      witness={"character": ch.label, "degree": ch.degree},
                                      witness_text=f"degree {ch.degree} (character {ch.label}), gcd({ch.degree}, {p}) = 1",
                                      narrative="faithful character of p'-degree found." + note)
    flagged = [ch.degree for ch in t.characters if ch.faithful_flag]
    return VerificationReport("split-ext", params, REFUTED, witness={"faithful_degrees": flagged},
                              witness_text=f"every faithful degree in {flagged} is divisible by {p}",
                              narrative="no faithful character of p'-degree." + note)
