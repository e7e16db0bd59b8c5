from fractions import Fraction
from pathlib import Path

import pytest

from codeg import chartab
from codeg.cyclo import CycloValue
from codeg.errors import InvariantViolation, ParseError
from codeg.report import INAPPLICABLE, REFUTED, VERIFIED

FIXTURES = sorted(p.stem for p in (Path(chartab.__file__).parent / "fixtures").glob("*.chartab"))


def table(name):
    return chartab.load_table(chartab.fixture_path(name))


def test_all_fixtures_present():
    assert set(FIXTURES) >= {"a5", "sl25", "psl27", "sl27", "a6", "c2", "asl24"}


@pytest.mark.parametrize("name", FIXTURES)
def test_orthogonality(name):
    assert chartab.orthogonality_defects(table(name)) == []


@pytest.mark.parametrize("name", FIXTURES)
def test_first_orthogonality_norm(name):
    t = table(name)
    for ch in t.characters:
        s = CycloValue.rational(0)
        for c, v in zip(t.classes, ch.values):
            s = s + v * v.conjugate() * c.size
        assert s.equals_rational(t.order)


@pytest.mark.parametrize("name", FIXTURES)
def test_codegree_integrality(name):
    t = table(name)
    for i, ch in enumerate(t.characters):
        assert (t.order // chartab.kernel_order(t, i)) % ch.degree == 0
        assert chartab.codegree(t, i) * ch.degree * chartab.kernel_order(t, i) == t.order


@pytest.mark.parametrize("name", FIXTURES)
def test_codegree_set_shape(name):
    t = table(name)
    cods = chartab.codegrees(t)
    assert 1 in cods and all(t.order % c == 0 for c in cods)
    assert set(chartab.pseudo_algebra(t)) == cods
    assert sum(chartab.pseudo_algebra(t).values()) == len(t.characters)


@pytest.mark.parametrize("name", ["a5", "psl27", "a6"])
def test_simple_tables_codegree_is_index(name):
    t = table(name)
    for i, ch in enumerate(t.characters[1:], start=1):
        assert chartab.codegree(t, i) == t.order // ch.degree


@pytest.mark.parametrize("name", FIXTURES)
def test_render_round_trip(name):
    t = table(name)
    u = chartab.parse_table(chartab.render_table(t))
    assert chartab.render_table(u) == chartab.render_table(t)
    assert [c.values for c in u.characters] == [c.values for c in t.characters]


@pytest.mark.parametrize("name,expected", [
    ("a5", "{1,12,15,20}"), ("sl25", "{1,12,15,20,30,60}"), ("psl27", "{1,21,24,28,56}"),
    ("a6", "{1,36,40,45,72}"), ("c2", "{1,2}"),
])
def test_codegree_sets(name, expected):
    assert chartab.format_set(chartab.codegrees(table(name))) == expected


def test_center():
    assert chartab.center_order(table("sl25")) == 2
    assert chartab.center_order(table("a5")) == 1
    assert chartab.quotient_degrees(table("sl25"), chartab.center_classes(table("sl25"))) == {1, 3, 4, 5}


def test_thm_e_instances():
    r = chartab.verify_thm_e_instance(table("sl25"))
    assert r.verdict == VERIFIED and r.witness_text.startswith("degree 4")
    r = chartab.verify_thm_e_instance(table("sl27"))
    assert r.verdict == VERIFIED and "2 not in cd(G/Z) = {1,3,6,7,8}" in r.witness_text
    assert chartab.verify_thm_e_instance(table("a5")).verdict == INAPPLICABLE


def test_codegree_subset():
    r = chartab.codegree_subset(table("sl25"), table("a5"))
    assert r.verdict == REFUTED and r.witness_text == "{30,60}"
    assert chartab.codegree_subset(table("a5"), table("sl25")).verdict == VERIFIED


def test_projective_bound():
    t = table("sl25")
    r = chartab.check_projective_bound(t, [0, 1], [1, -1])
    assert r.verdict == VERIFIED
    assert any("p=2: min chi(1)_p = 2, 2^2 = 4 <= |G/N|_p = 4" in d for d in r.details)
    assert chartab.check_projective_bound(t, [0, 1], [1, 1]).verdict == VERIFIED
    non_central = next(i for i, c in enumerate(t.classes) if c.size > 1)
    assert chartab.check_projective_bound(t, [0, non_central], [1, 1]).verdict == INAPPLICABLE


def test_split_extension():
    r = chartab.check_split_extension_claim(table("asl24"), 2)
    assert r.verdict == VERIFIED and "15" in r.witness_text
    assert chartab.check_split_extension_claim(table("a5"), 2).verdict == INAPPLICABLE


GOOD = "CHARTAB 1\ngroup C2 order 2\nclass 1a 1\nclass 2a 1\nchar 1a 1 : 1 1\nchar 1b 1 : 1 -1\n"


@pytest.mark.parametrize("doc,line,field", [
    ("", None, "header"),
    ("CHARTAB 2\n", 1, "header"),
    (GOOD.replace("order 2", "order two"), 2, "order"),
    (GOOD.replace("char 1b 1 : 1 -1", "char 1b 1 : 1"), 6, "values"),
    (GOOD.replace("char 1b 1 : 1 -1", "char 1b 1 1 -1"), 6, "char"),
    (GOOD.replace("1 -1\n", "1 w3\n"), 6, "value 2"),
    (GOOD.replace("1 -1\n", "1 z(3)z(3)^2\n"), 6, "value 2"),
    (GOOD + "bogus 1\n", 7, "record"),
])
def test_parse_errors_have_locus(doc, line, field):
    with pytest.raises(ParseError) as exc:
        chartab.parse_table(doc)
    assert exc.value.line == line and exc.value.field == field


@pytest.mark.parametrize("doc,invariant", [
    (GOOD.replace("order 2", "order 3"), "class-size-sum"),
    (GOOD.replace("class 1a 1\nclass 2a 1", "class 1a 1\nclass 2a 1\nclass 2b 1").replace("order 2", "order 3")
     .replace(": 1 1\n", ": 1 1 1\n").replace("1 -1\n", "1 -1 1\n"), "square"),
    (GOOD.replace("char 1b 1 : 1 -1", "char 1b 2 : 2 -1"), "degree-square-sum"),
    (GOOD.replace("char 1b 1 : 1 -1", "char 1b 1 : 2 -1"), "identity-value"),
    (GOOD.replace("class 1a 1\nclass 2a 1", "class 2a 1\nclass 1a 1"), None),
])
def test_invariant_violations(doc, invariant):
    if invariant is None:
        # relabelled classes are still a valid table
        chartab.parse_table(doc)
        return
    with pytest.raises(InvariantViolation) as exc:
        chartab.parse_table(doc)
    assert exc.value.invariant == invariant


def test_parse_value_forms():
    assert chartab.parse_value("-1").equals_rational(-1)
    assert chartab.parse_value("1/2+z(5)^2-2*z(5)^3") == (CycloValue.rational(Fraction(1, 2)) + CycloValue.zeta(5, 2)
                                                     - CycloValue.zeta(5, 3) * 2)

