import json

import pytest

import monocalc as mc


def test_presets_validate():
    for name in mc.preset_names():
        t = mc.preset_table(name)
        assert mc.validate_table(t) == []
        assert t.n >= t.m >= 1


def test_table_json_roundtrip():
    t = mc.preset_table("A53")
    back = mc.table_from_json(mc.table_to_json(t))
    assert back.n == 5 and back.m == 3
    assert mc.validate_table(back) == []


def test_mul_and_invert():
    t = mc.preset_table("B")
    unit = [1.0 + 0j, 0j]
    i3 = [0j, 1.0 + 0j]
    assert mc.mul(t, i3, i3) == [0j, 0j]
    assert mc.mul(t, unit, i3) == i3
    inv = mc.invert(t, [2.0 + 0j, 1.0 + 0j])
    assert mc.mul(t, inv, [2.0 + 0j, 1.0 + 0j]) == pytest.approx(unit)
    with pytest.raises(ValueError):
        mc.invert(t, i3)


def test_char_system_text():
    eqs = mc.char_system(mc.preset_table("A32"))
    assert eqs == ["1 + a1^2 + b1^2", "1 + a2^2 + b2^2", "a2*a3 + b2*b3"]
    proj = mc.char_system(mc.preset_table("A32"), project=2)
    assert proj == ["1 + a2^2 + b2^2", "a2*a3 + b2*b3"]


def test_triple_checks():
    t = mc.preset_table("A32")
    tr = mc.preset_triple("A32")
    chk = mc.check_triple(t, tr)
    assert chk["independent"] and all(chk["surjective"])
    rep = mc.verify_reduced_triples(t, "laplace", tr)
    assert rep["pass"] and rep["hypothesis_ok"]
    assert mc.reduced_independence(t, tr, 1)["independent"] is False
    assert mc.reduced_independence(t, tr, 2)["independent"] is True


def test_eval_matches_closed_form():
    fn = mc.preset_bundle("A53")
    got = mc.eval(fn, 0.7, -0.4, 1.2)
    want = mc.eval_closed_form("A53", fn, 0.7, -0.4, 1.2)
    assert got == pytest.approx(want, abs=1e-12)


def test_bundle_json():
    t = mc.preset_table("B")
    tr = mc.preset_triple("B")
    bundle = json.dumps({"F": {"1": {"kind": "poly", "coeffs": [[0, 0], [0, 0], [1, 0]]}},
                         "G": {}})
    fn = mc.bundle_from_json(bundle, t, tr)
    v = mc.eval(fn, 1.0, 1.0, 1.0)
    assert v[0] == pytest.approx(2j, abs=1e-14)
    assert v[1] == pytest.approx(2 + 2j, abs=1e-14)


def test_verification_reports():
    fn = mc.preset_bundle("A32")
    rep = mc.verify_monogenic(fn, grid=20, seed=7)
    assert rep["pass"] and rep["points"] == 20 and rep["seed"] == 7
    pde = mc.pde_residual(fn, "laplace", grid=10, seed=7)
    assert pde["pass"]
    dec = mc.verify_decomposition(fn, grid=20, seed=7)
    assert dec["pass"]
    assert len(dec["per_u"]) == 2
