import json

import pytest
from hypothesis import given, strategies as st
from sympy import Poly, discriminant as sym_disc, symbols

from jackson_space.algebra import check_confluence
from jackson_space.algebra.presentation import NCPolynomial
from jackson_space.arith import CyclotomicField, FiniteField
from jackson_space.elliptic import (
    CurveReductionData,
    ThetaVector,
    additive_torsion_test,
    allowed_d_additive,
    analyze_curve,
    brauer_class,
    build_n_family,
    build_special_fibre,
    conductor_of_type,
    curve_torsion_test,
    discriminant,
    exclusion_check,
    fixture_checks,
    fixture_labels,
    load_curve,
    normalize_model,
    ogg_check,
    render_report,
    residue_root,
    theta_hyperplane,
    valuation,
)
from jackson_space.elliptic.curves import FIXTURE_ENV, c4_invariant, change_coordinates
from jackson_space.errors import BadPrime, InconsistentPair, IndexOutOfRange, LengthMismatch

X = symbols("x")
LABELS = ["27a1", "490k2", "49a3", "50a4", "50b2", "54b3"]


def sympy_discriminant(a1, a2, a3, a4, a6):
    b2, b4, b6 = a1 * a1 + 4 * a2, 2 * a4 + a1 * a3, a3 * a3 + 4 * a6
    cubic = Poly(4 * X**3 + b2 * X**2 + 2 * b4 * X + b6, X)
    return int(sym_disc(cubic)) // 16


def curve(label, **kw):
    base = dict(label=label, p=5, kodaira="I0", f=0, d=1, v_j=0, v_delta_min=0, component_group_order=1)
    base.update(kw)
    return CurveReductionData(**base)


def test_fixture_labels():
    assert fixture_labels() == LABELS


@pytest.mark.parametrize("label", LABELS)
def test_fixture_invariants_from_weierstrass(label):
    data = load_curve(label)
    a = data.weierstrass
    disc = discriminant(*a)
    assert disc == sympy_discriminant(*a)
    assert valuation(disc, data.p) == data.v_delta_min
    assert ogg_check(data)
    assert all(check["ok"] for check in fixture_checks(data))
    assert exclusion_check(data) == []


@pytest.mark.parametrize("label", LABELS)
def test_fixture_roundtrip(label):
    data = load_curve(label)
    again = CurveReductionData.from_json(json.loads(json.dumps(data.to_json())))
    assert again == data


def test_fixture_directory_override(tmp_path, monkeypatch):
    data = load_curve("50b2").to_json()
    data["label"] = "custom"
    (tmp_path / "custom.json").write_text(json.dumps(data))
    monkeypatch.setenv(FIXTURE_ENV, str(tmp_path))
    assert fixture_labels() == ["custom"]
    assert load_curve("custom").label == "custom"


def test_ogg_examples():
    assert ogg_check(curve("good"))
    assert ogg_check(curve("mult", kodaira="I5", f=1, d=5, v_j=-5, v_delta_min=5))
    assert not ogg_check(curve("bad", kodaira="I5", f=1, d=5, v_j=-5, v_delta_min=6))
    data = load_curve("27a1")
    assert valuation(discriminant(0, 0, 1, 0, -7), 3) + 1 == data.f + data.d


def test_exclusion_examples():
    assert exclusion_check(curve("a", p=11, kodaira="II", f=2, d=1, v_delta_min=2))
    assert exclusion_check(load_curve("490k2")) == []
    assert exclusion_check(curve("g", p=13)) == []
    assert exclusion_check(curve("ss", reduction="good_supersingular"))
    assert exclusion_check(curve("ns", kodaira="I3", f=1, d=3, v_j=-3, v_delta_min=3,
                                 reduction="nonsplit_multiplicative"))


def test_conductor_table():
    assert conductor_of_type(7, "multiplicative") == 1
    assert conductor_of_type(5, "additive") == 2
    assert conductor_of_type(3, "additive") == (2, 5)
    assert conductor_of_type(11, "good") == 0
    with pytest.raises(BadPrime):
        conductor_of_type(2, "additive")


def test_allowed_d_examples():
    assert allowed_d_additive(3, 2, "I*2") == {7}
    assert allowed_d_additive(3, 4, "IV") == {3}
    assert allowed_d_additive(7, 2, "II") == {1}
    assert allowed_d_additive(3, 4) == {1, 3, 7, 9}
    assert allowed_d_additive(5, 2, v_j=-3) == {1, 2, 3, 5, 7, 8, 9}
    assert allowed_d_additive(5, 2, v_j=-6) == {1, 2, 3, 5, 7, 8, 9, 11}
    with pytest.raises(InconsistentPair):
        allowed_d_additive(3, 2, "IV")
    with pytest.raises(InconsistentPair):
        allowed_d_additive(3, 3, "III")
    with pytest.raises(InconsistentPair):
        allowed_d_additive(5, 3, "II")
    with pytest.raises(InconsistentPair):
        allowed_d_additive(7, 2, "II", d=2)


def test_special_fibre_type_II_p7():
    pres = build_special_fibre(7, 2, 1)
    z = residue_root(7, 3)
    assert z.multiplicative_order() == 3
    assert 1 / pres.rule(1, 0).q == z
    assert pres.rule(2, 0).q == pres.field.one
    assert pres.rule(2, 1).q == z**-2


def test_special_fibre_type_III_p5():
    pres = build_special_fibre(5, 2, 2)
    z = residue_root(5, 4)
    assert 1 / pres.rule(1, 0).q == z
    assert pres.rule(2, 0).q == pres.field.one
    # zeta^{2-p} = zeta^{-3} = zeta for w = 4
    assert pres.rule(2, 1).q == z


def test_special_fibre_I2_p3_is_affine():
    pres = build_special_fibre(3, 1, 2)
    assert all(r.q == pres.field.one for r in pres.rules.values())


def test_special_fibre_extends_residue_field():
    pres = build_special_fibre(5, 2, 1)
    assert pres.field.order == 25
    assert pres.params["zeta_order"] == 3


@pytest.mark.parametrize("p", [3, 5, 7, 11, 13])
@pytest.mark.parametrize("f,d", [(0, 1), (1, 2), (2, 1), (2, 2), (2, 7), (3, 3), (5, 9)])
def test_special_fibre_confluent(p, f, d):
    assert check_confluence(build_special_fibre(p, f, d)) == []


def test_theta_vector():
    F = FiniteField(7)
    with pytest.raises(LengthMismatch):
        ThetaVector(5, (1, 2, 3))
    theta = ThetaVector(5, tuple(F(k) for k in range(5)))
    assert theta.slot(2) == F(4)
    with pytest.raises(IndexOutOfRange):
        theta.slot(3)


def test_theta_hyperplane():
    F = FiniteField(7)
    one = ThetaVector(5, tuple(F(v) for v in (1, 0, 0, 0, 0)))
    assert theta_hyperplane(one) == NCPolynomial.gen(F, 3, 0)
    last = ThetaVector(5, tuple(F(v) for v in (0, 0, 0, 0, 3)))
    assert theta_hyperplane(last) == NCPolynomial.gen(F, 3, 2, F(3))
    generic = ThetaVector(5, tuple(F(v) for v in (1, 2, 6, 6, 4)))
    expected = NCPolynomial.gen(F, 3, 0) + NCPolynomial.gen(F, 3, 1, F(2)) + NCPolynomial.gen(F, 3, 2, F(4))
    assert theta_hyperplane(generic) == expected


def test_n_family():
    K = CyclotomicField(4)
    z = K.zeta()
    p = 5
    theta = ThetaVector(p, tuple(K(k + 1) for k in range(p)))
    fam = build_n_family(p, z, 0, [0] * p, theta)
    assert all(fam.valid) and not fam.empty
    fam = build_n_family(p, z, 1, [0, 1, 0, 0, 0], ThetaVector(p, (0,) * p))
    assert fam.valid == [True, False, True, True, True]
    fam = build_n_family(p, z, 2, [1] * p, ThetaVector(p, (0,) * p))
    assert fam.empty
    with pytest.raises(LengthMismatch):
        build_n_family(p, z, 0, [0, 0], theta)
    # zeta^{2-p} = 1 removes the z_j theta_j condition
    K3 = CyclotomicField(3)
    fam = build_n_family(5, K3.zeta(), 0, [1] * 5, ThetaVector(5, (1,) * 5))
    assert all(fam.valid)


@given(st.sampled_from([(5, 4), (7, 3), (3, 8), (5, 6)]), st.lists(st.integers(-3, 3), min_size=7, max_size=7))
def test_mirror_involution_on_families(case, values):
    p, w = case
    K = CyclotomicField(w)
    z = K.zeta()
    theta = ThetaVector(p, tuple(K(v) for v in values[:p]))
    fam = build_n_family(p, z, 0, [0] * p, theta)
    assert fam.mirrored().mirrored(p - 2).same_members(fam)


def test_brauer_examples():
    F = FiniteField(3, 2)
    z = residue_root(3, 2, F)
    theta = ThetaVector(3, (F(1), F(2), F(1)))
    q = brauer_class(theta, 0, 1, 2, 3, z)
    assert q.rank == 4 and q.azumaya and q.kind == "quaternion"
    zero = ThetaVector(3, (F(0), F(2), F(1)))
    assert not brauer_class(zero, 0, 1, 2, 3, z).azumaya
    K = CyclotomicField(1)
    comm = brauer_class(ThetaVector(3, (1, 1, 1)), 0, 2, 3, 3, K.one)
    assert comm.rank == 9 and comm.kind == "commutative"
    with pytest.raises(IndexOutOfRange):
        brauer_class(theta, 1, 0, 2, 3, z)


def test_torsion_test_examples():
    assert not additive_torsion_test(5, 0, 0)
    assert additive_torsion_test(5, 5 * 2, 0)  # a = 3 * 10 / 5 = 6 = 1 mod 5
    with pytest.raises(BadPrime):
        additive_torsion_test(11, 1, 1)


@given(st.sampled_from([5, 7]), st.integers(-50, 50), st.integers(-50, 50))
def test_torsion_test_matches_root_search(p, a4, a6):
    a4, a6 = p * a4, p * a6
    a = (3 * a4 // 5) % 5 if p == 5 else (4 * a6 // 7) % 7
    has_root = any((t - a * pow(t, p, p)) % p == 0 for t in range(1, p))
    assert additive_torsion_test(p, a4, a6) == has_root


def test_normalized_models():
    expected = {
        "50b2": (5, -5, 5, 10, -15),
        "50a4": (5, 0, 5, 550, -1100),
        "49a3": (7, -7, 14, -147, 294),
        "490k2": (7, -7, 7, 903, 7119),
    }
    for label, model in expected.items():
        data = load_curve(label)
        assert normalize_model(data.weierstrass, data.p) == model
        assert discriminant(*model) == discriminant(*data.weierstrass)
        assert c4_invariant(*model) == c4_invariant(*data.weierstrass)


def test_curve_torsion_verdicts():
    assert curve_torsion_test(load_curve("50b2"))
    assert curve_torsion_test(load_curve("490k2"))
    assert not curve_torsion_test(load_curve("50a4"))
    assert not curve_torsion_test(load_curve("49a3"))


@given(st.integers(-3, 3), st.integers(-3, 3), st.integers(-3, 3))
def test_coordinate_change_preserves_discriminant(r, s, t):
    coeffs = load_curve("50b2").weierstrass
    assert discriminant(*change_coordinates(coeffs, r, s, t)) == discriminant(*coeffs)


def test_analyze_curve_report():
    report = analyze_curve(load_curve("50b2"))
    assert report["w"] == 3
    assert [b["rank"] for b in report["brauer"]] == [9, 9, 9]
    assert report["additive_torsion_test"] is True
    # w = 3, p = 5: zeta^{2-p} = 1 so N_perp = N, and delta_1, delta_2 are both free
    assert report["ext_tables"]["dimensions"] == [[2, 2], [2, 2]]
    text = render_report(report)
    assert "curve 50b2" in text and "Brauer quotients:" in text
