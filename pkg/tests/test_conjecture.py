import pytest
from hypothesis import given, settings, strategies as st

from codeg import conjecture
from codeg.errors import DataFileError, UnsupportedFamily
from codeg.groups import SPORADIC_ORDERS, GroupSpec, exact_alternating_ppart, muller_james_bound
from codeg.numtheory import factorint
from codeg.report import INAPPLICABLE, REFUTED, VERIFIED

GROUPS = ["A1(7)", "A1(8)", "C2(3)", "2A3(3)", "G2(4)", "Alt12", "Alt20", "2B2(8)", "A3(2)"]


@given(st.integers(0, 400), st.integers(2, 50), st.integers(1, 10 ** 60))
def test_pow_exceeds_matches_direct(e, p, N):
    assert conjecture.pow_exceeds(p, e, N) == (p ** e > N)


def test_prop_bra_examples():
    assert conjecture.check_prop_bra(GroupSpec.parse("A1(7)"), 2, 2).verdict == VERIFIED
    r = conjecture.check_prop_bra(GroupSpec.parse("C2(3)"), 3, 2)
    assert r.verdict == REFUTED and r.witness == {"lhs": 81, "rhs": 81}
    assert conjecture.check_prop_bra("M11", 11, 1).verdict == VERIFIED


def test_prop_bra_rejects_bad_input():
    with pytest.raises(ValueError):
        conjecture.check_prop_bra(GroupSpec.parse("A1(7)"), 4, 2)
    with pytest.raises(ValueError):
        conjecture.check_prop_bra(GroupSpec.parse("A1(7)"), 5, 2)


@settings(max_examples=150, deadline=None)
@given(st.sampled_from(GROUPS + sorted(SPORADIC_ORDERS)), st.data())
def test_prop_bra_monotone_in_d(name, data):
    h = name if name in SPORADIC_ORDERS else GroupSpec.parse(name)
    order, _ = conjecture._h_order_and_name(h)
    p = data.draw(st.sampled_from(sorted(factorint(order))))
    d = data.draw(st.integers(1, 60))
    extra = data.draw(st.integers(1, 60))
    if conjecture.check_prop_bra(h, p, d).verdict == VERIFIED:
        assert conjecture.check_prop_bra(h, p, d + extra).verdict == VERIFIED


def test_reports_are_reproducible():
    for case in ("sporadic", "alternating", "defining-char"):
        a = conjecture.verify_prop_tech(case, {"max_rank": 4, "n_max": 60})
        b = conjecture.verify_prop_tech(case, {"max_rank": 4, "n_max": 60})
        assert a.render() == b.render() and a.to_json() == b.to_json()


def test_alternating_bound_and_exact_routes():
    r = conjecture.verify_prop_tech("alternating", {"n_max": 300})
    assert r.verdict == VERIFIED
    # every exact p-part sits below p^(2d)
    for n in (11, 50, 300):
        d = muller_james_bound(n)
        for p in (2, 3, 5, 7, 11):
            assert conjecture.pow_exceeds(p, 2 * d, exact_alternating_ppart(n, p))


def test_sweep_limits_need_opt_in():
    with pytest.raises(ValueError):
        conjecture.verify_prop_tech("alternating", {"n_max": 400})
    r = conjecture.verify_prop_tech("alternating", {"n_max": 400, "allow_large": True})
    assert r.verdict == VERIFIED


def test_cross_char_sweep():
    r = conjecture.verify_prop_tech("cross-char")
    assert r.verdict == VERIFIED
    assert "PSU4(2) (= PSp4(3))" in r.narrative


def test_defining_char_first_failure_is_psl42():
    r = conjecture.verify_prop_tech("defining-char", {"max_rank": 4})
    assert r.verdict == REFUTED
    assert r.witness_text == "PSL4(2): 8^2 = 64 is not > |H|_2 = 64"


def test_defining_char_passes_without_a3():
    fams = {f for f, _ in conjecture.DEFINING_CHAR_FAMILIES} - {"A"}
    r = conjecture.verify_prop_tech("defining-char", {"max_rank": 4, "families": fams})
    assert r.verdict == VERIFIED


def test_sporadic_rows(tmp_path):
    r = conjecture.verify_prop_tech("sporadic")
    assert r.verdict == VERIFIED and "skipped" in r.narrative
    empty = tmp_path / "rows.dat"
    empty.write_text("# nothing\n")
    assert conjecture.verify_prop_tech("sporadic", {"rows_path": empty}).verdict == INAPPLICABLE
    bad = tmp_path / "bad.dat"
    bad.write_text("M11 7 10 X\n")
    with pytest.raises(DataFileError, match="row 1"):
        conjecture.verify_prop_tech("sporadic", {"rows_path": bad})
    low = tmp_path / "low.dat"
    low.write_text("M11 2 1 TEST\n")
    assert conjecture.verify_prop_tech("sporadic", {"rows_path": low}).verdict == REFUTED


def test_unknown_case():
    with pytest.raises(UnsupportedFamily):
        conjecture.verify_prop_tech("nope")


def test_basic_spin():
    assert conjecture.check_alternating_basic_spin(10 ** 6).verdict == VERIFIED
    assert conjecture.check_alternating_basic_spin(9).verdict == INAPPLICABLE
