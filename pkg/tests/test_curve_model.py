import pytest

from conftest import pt
from ruledscroll.curve_model import (CurveModel, DivisorClass, Domain, is_base_point, is_birational_curve,
                                     is_bpf, is_very_ample_curve, map_degree, validate)
from ruledscroll.errors import InconsistentTable, ScenarioError
from ruledscroll.values import Tri


def test_rational_curve_dimensions():
    c = CurveModel(0, ["A"])
    for d in range(-3, 6):
        assert c.h0(pt("A", d)).to_json() == max(0, d + 1)
        assert c.h1(pt("A", d)).to_json() == max(0, -d - 1)


def test_elliptic_dimensions(g1):
    assert g1.h0(pt("P", 3)).to_json() == 3
    assert g1.h0(DivisorClass.zero()).to_json() == 1
    # distinct points are not linearly equivalent in positive genus
    assert g1.h0(pt("P") - pt("Q")).to_json() == 0
    assert g1.h1(DivisorClass.zero()).to_json() == 1


def test_canonical_and_aliases(g2):
    assert g2.h0(pt("W", 2)).to_json() == 2
    assert g2.same_class(pt("P") + pt("Q"), pt("W", 2))
    # K - P ~ Q
    assert g2.h0(pt("W", 2).minus("P")).to_json() == 1
    assert g2.h1(pt("W", 3)).to_json() == 0


def test_undetermined_value_is_an_interval():
    c = CurveModel(3, ["A", "B"])
    h = c.h0(pt("A", 2) + pt("B", 2))
    assert not h.is_exact
    assert h.lo >= 2 and h.hi <= 3


def test_drop_and_base_points(g2):
    K = pt("W", 2)
    assert g2.drop(K, "W").to_json() == 1
    assert is_base_point(g2, K.plus("P"), "P") is Tri.TRUE
    assert is_base_point(g2, K, "P") is Tri.FALSE
    assert is_bpf(g2, K) is Tri.TRUE
    assert is_bpf(g2, K.plus("P")) is Tri.FALSE


def test_generic_point_never_a_base_point(g1):
    assert g1.drop(pt("P"), "*1").to_json() == 1
    assert g1.drop(pt("P") - pt("Q"), "*1").to_json() == 0


def test_very_ample_thresholds(g1, g2):
    assert is_very_ample_curve(g1, pt("P", 3)) is Tri.TRUE
    assert is_very_ample_curve(g1, pt("P", 2)) is Tri.FALSE
    assert is_very_ample_curve(g2, pt("W", 2)) is Tri.FALSE
    assert is_very_ample_curve(g2, pt("W", 5)) is Tri.TRUE


def test_hyperelliptic_map_is_double_cover(g2):
    K = pt("W", 2)
    assert is_birational_curve(g2, K) is Tri.FALSE
    assert map_degree(g2, K) == 2
    assert map_degree(g2, pt("W", 5)) == 1


def test_domain_pairs_include_generic():
    c = CurveModel(1, ["A"])
    assert ("*", "*2") in Domain(True).pairs(c)
    assert Domain(False).pairs(c) == [("A", "A")]


def test_validate_flags_violations():
    bad = CurveModel(2, ["A"], {pt("A", 3): 3})  # degree 3 > 2g - 2 forces h0 = 2
    assert any("Riemann-Roch" in p for p in validate(bad))
    cliff = CurveModel(4, ["A"], {pt("A", 2): 3})
    assert any("Clifford" in p for p in validate(cliff))
    assert validate(CurveModel(2, ["A"], {pt("A", 2): 2}, canonical=pt("A", 2))) == []


def test_conflicting_table_rejected():
    with pytest.raises(InconsistentTable):
        # the alias makes the two keys the same class
        CurveModel(1, ["A", "B"], {pt("A"): 1, pt("B"): 2}, aliases=[(pt("A"), pt("B"))])


def test_bad_names_rejected():
    with pytest.raises(ScenarioError):
        CurveModel(1, ["*A"])
    with pytest.raises(ScenarioError):
        CurveModel(1, ["A", "A"])
    with pytest.raises(ScenarioError):
        CurveModel(2, ["A"], canonical=pt("A", 3))


def test_residual_classes():
    c = CurveModel(1, [])
    B = DivisorClass.generic(3)
    assert c.h0(B).to_json() == 3
    c2 = CurveModel(2, [])
    h = c2.h0(DivisorClass.generic(1, None))
    assert (h.lo, h.hi) == (0, 1)
    assert c2.h0(DivisorClass.generic(1, True)).to_json() == 1
