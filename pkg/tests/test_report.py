import json

import pytest

from codeg.report import EXIT_CODES, INAPPLICABLE, REFUTED, SCHEMA, VERIFIED, VerificationReport


def test_refuted_needs_witness():
    with pytest.raises(ValueError):
        VerificationReport("x", {}, REFUTED)


def test_exit_codes():
    assert VerificationReport("x", {}, VERIFIED).exit_code == 0
    assert VerificationReport("x", {}, REFUTED, witness=1).exit_code == 1
    assert VerificationReport("x", {}, INAPPLICABLE).exit_code == 2
    assert EXIT_CODES == {VERIFIED: 0, REFUTED: 1, INAPPLICABLE: 2}


def test_json_is_stable_and_versioned():
    r = VerificationReport("x", {"b": 2, "a": 1}, REFUTED, witness={"n": 3}, narrative="n")
    doc = json.loads(r.to_json())
    assert doc["schema"] == SCHEMA
    assert r.to_json() == VerificationReport("x", {"a": 1, "b": 2}, REFUTED, witness={"n": 3}, narrative="n").to_json()


def test_render_layout():
    text = VerificationReport("x", {"b": 2, "a": 1}, VERIFIED, narrative="ok", details=("d1",)).render()
    assert text.splitlines() == ["claim: x", "parameters:", "  a: 1", "  b: 2", "verdict: verified",
                                 "narrative: ok", "  d1"]
