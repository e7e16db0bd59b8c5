"""Loader for the line-oriented transcription tables in ``codeg/data``.

Row grammar (whitespace separated, ``#`` starts a comment)::

    family rank-range constraint expression|value source-tag

The first non-comment line must be ``DATA <table-name> <version>``.
``rank-range`` is ``3``, ``2-4`` or ``4-*``. ``constraint`` is ``any`` or
``&``-joined atoms: ``q=5,7``, ``q>=13``, ``q<=9``, ``q!=3``, ``p=2``,
``p!=2``, ``odd``, ``even``, ``rank-odd``, ``rank-even``. The value is an
integer or an arithmetic expression in ``q``, ``p``, ``a`` (q = p^a) and
``n`` (the rank) using ``+ - * / ^``, ``gcd(x,y)`` and exact ``sqrt(x)``.
Rows are tried in file order and the first match wins, so exception rows
go above the generic ones.
"""
from __future__ import annotations

import ast
import os
import re
from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache
from math import gcd, isqrt
from pathlib import Path
from typing import Callable

from .errors import DataFileError, UnsupportedFamily

DATA_FORMAT_VERSION = 1
_NAMES = {"q", "p", "a", "n"}
_FUNCS = {"gcd", "sqrt"}


def data_dir() -> Path:
    override = os.environ.get("CODEG_DATA_DIR")
    return Path(override) if override else Path(__file__).with_name("data")


def _sqrt_exact(x: Fraction) -> Fraction:
    x = Fraction(x)
    num, den = isqrt(x.numerator), isqrt(x.denominator)
    if x < 0 or num * num != x.numerator or den * den != x.denominator:
        raise DataFileError(f"sqrt({x}) is not rational")
    return Fraction(num, den)


class _Expr:
    """A validated arithmetic expression, evaluated exactly over Fractions."""

    def __init__(self, text: str):
        self.text = text
        try:
            tree = ast.parse(text.replace("^", "**"), mode="eval")
        except SyntaxError as exc:
            raise DataFileError(f"bad expression {text!r}: {exc.msg}") from None
        self._check(tree.body)
        self.tree = tree.body

    def _check(self, node: ast.AST) -> None:
        if isinstance(node, ast.BinOp):
            if not isinstance(node.op, (ast.Add, ast.Sub, ast.Mult, ast.Div, ast.FloorDiv, ast.Pow)):
                raise DataFileError(f"operator {type(node.op).__name__} not allowed in {self.text!r}")
            self._check(node.left)
            self._check(node.right)
        elif isinstance(node, ast.UnaryOp) and isinstance(node.op, (ast.USub, ast.UAdd)):
            self._check(node.operand)
        elif isinstance(node, ast.Constant) and type(node.value) is int:
            pass
        elif isinstance(node, ast.Name) and node.id in _NAMES:
            pass
        elif isinstance(node, ast.Call) and isinstance(node.func, ast.Name) and node.func.id in _FUNCS:
            if node.keywords or len(node.args) != (2 if node.func.id == "gcd" else 1):
                raise DataFileError(f"bad call {node.func.id} in {self.text!r}")
            for arg in node.args:
                self._check(arg)
        else:
            raise DataFileError(f"unsupported syntax in {self.text!r}")

    def __call__(self, env: dict[str, int]) -> Fraction:
        return self._eval(self.tree, env)

    def _eval(self, node, env) -> Fraction:
        if isinstance(node, ast.Constant):
            return Fraction(node.value)
        if isinstance(node, ast.Name):
            return Fraction(env[node.id])
        if isinstance(node, ast.UnaryOp):
            v = self._eval(node.operand, env)
            return -v if isinstance(node.op, ast.USub) else v
        if isinstance(node, ast.Call):
            args = [self._eval(a, env) for a in node.args]
            if node.func.id == "gcd":
                if any(x.denominator != 1 for x in args):
                    raise DataFileError(f"gcd of non-integers in {self.text!r}")
                return Fraction(gcd(args[0].numerator, args[1].numerator))
            return _sqrt_exact(args[0])
        left, right = self._eval(node.left, env), self._eval(node.right, env)
        op = node.op
        if isinstance(op, ast.Add):
            return left + right
        if isinstance(op, ast.Sub):
            return left - right
        if isinstance(op, ast.Mult):
            return left * right
        if isinstance(op, ast.Div):
            return left / right
        if isinstance(op, ast.FloorDiv):
            return Fraction(left // right)
        if right.denominator != 1:
            raise DataFileError(f"non-integer exponent in {self.text!r}")
        return left ** right.numerator


_ATOM_RE = re.compile(r"^(q|p)(=|!=|>=|<=)(\d+(?:,\d+)*)$")


def _compile_constraint(text: str) -> Callable[[dict[str, int]], bool]:
    if text == "any":
        return lambda env: True
    tests = []
    for atom in text.split("&"):
        if atom in ("odd", "even"):
            want = 1 if atom == "odd" else 0
            tests.append(lambda env, w=want: env["q"] % 2 == w)
        elif atom in ("rank-odd", "rank-even"):
            want = 1 if atom == "rank-odd" else 0
            tests.append(lambda env, w=want: env["n"] % 2 == w)
        else:
            m = _ATOM_RE.match(atom)
            if not m:
                raise DataFileError(f"bad constraint atom {atom!r}")
            var, op, vals = m.group(1), m.group(2), [int(v) for v in m.group(3).split(",")]
            if op in (">=", "<=") and len(vals) != 1:
                raise DataFileError(f"ordering constraint takes one value: {atom!r}")
            if op == "=":
                tests.append(lambda env, v=var, s=frozenset(vals): env[v] in s)
            elif op == "!=":
                tests.append(lambda env, v=var, s=frozenset(vals): env[v] not in s)
            elif op == ">=":
                tests.append(lambda env, v=var, b=vals[0]: env[v] >= b)
            else:
                tests.append(lambda env, v=var, b=vals[0]: env[v] <= b)
    return lambda env: all(t(env) for t in tests)


@dataclass(frozen=True)
class DataRow:
    line: int
    family: str
    rank_lo: int
    rank_hi: int | None
    constraint_text: str
    value_text: str
    source: str
    constraint: Callable[[dict[str, int]], bool]
    expr: _Expr

    def matches(self, family: str, env: dict[str, int]) -> bool:
        n = env["n"]
        if family != self.family or n < self.rank_lo:
            return False
        if self.rank_hi is not None and n > self.rank_hi:
            return False
        return self.constraint(env)

    def value(self, env: dict[str, int]) -> int:
        v = self.expr(env)
        if v.denominator != 1 or v <= 0:
            raise DataFileError(f"row {self.line} ({self.value_text}) gives {v} for {env}, not a positive integer")
        return v.numerator


@dataclass(frozen=True)
class DataTable:
    name: str
    version: int
    path: str
    rows: tuple[DataRow, ...]

    def families(self) -> set[str]:
        return {r.family for r in self.rows}

    def lookup(self, family: str, env: dict[str, int]) -> tuple[int, DataRow]:
        for row in self.rows:
            if row.matches(family, env):
                return row.value(env), row
        raise UnsupportedFamily(f"{self.name}: no row for family {family} with {env}")


def parse_table(text: str, path: str = "<string>") -> DataTable:
    header = None
    rows = []
    for lineno, raw in enumerate(text.splitlines(), start=1):
        line = raw.split("#", 1)[0].strip()
        if not line:
            continue
        fields = line.split()
        if header is None:
            if len(fields) != 3 or fields[0] != "DATA" or not fields[2].isdigit():
                raise DataFileError(f"{path}: row {lineno}: expected 'DATA <name> <version>' header")
            if int(fields[2]) != DATA_FORMAT_VERSION:
                raise DataFileError(f"{path}: row {lineno}: unsupported data version {fields[2]}")
            header = (fields[1], int(fields[2]))
            continue
        if len(fields) != 5:
            raise DataFileError(f"{path}: row {lineno}: expected 5 fields, got {len(fields)}")
        family, ranks, constraint, value, source = fields
        m = re.match(r"^(\d+)(?:-(\d+|\*))?$", ranks)
        if not m:
            raise DataFileError(f"{path}: row {lineno}: bad rank range {ranks!r}")
        lo = int(m.group(1))
        hi = lo if m.group(2) is None else (None if m.group(2) == "*" else int(m.group(2)))
        try:
            rows.append(DataRow(lineno, family, lo, hi, constraint, value, source,
                                _compile_constraint(constraint), _Expr(value)))
        except DataFileError as exc:
            raise DataFileError(f"{path}: row {lineno}: {exc}") from None
    if header is None:
        raise DataFileError(f"{path}: empty data file")
    return DataTable(header[0], header[1], path, tuple(rows))


@lru_cache(maxsize=None)
def _load_cached(path: str) -> DataTable:
    return parse_table(Path(path).read_text(encoding="utf-8"), path)


def load_table(name: str) -> DataTable:
    """Load ``<data_dir>/<name>.dat`` (cached per resolved path)."""
    path = data_dir() / f"{name}.dat"
    if not path.exists():
        raise DataFileError(f"missing data file {path}")
    return _load_cached(str(path.resolve()))
