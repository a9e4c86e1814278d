import pytest

from conftest import pt
from ruledscroll.curve_model import CurveModel
from ruledscroll.errors import ScenarioError, SegreBoundViolation
from ruledscroll.surface import (NumClass, PicClass, RuledSurface, check_segre, decomposable_surface,
                                 min_section_info, normalize_split, product_surface, scroll_degree,
                                 section_from_quotient, segre_decomposability, intersect)
from ruledscroll.values import Tri


def test_basic_intersections(g1):
    S = decomposable_surface(g1, pt("P", -2))
    X0, f = NumClass(1, 0), NumClass(0, 1)
    assert intersect(S, X0, X0) == -2
    assert intersect(S, X0, f) == 1
    assert intersect(S, f, f) == 0
    # X1 = X0 - 𝔢f has self-intersection e
    assert intersect(S, PicClass(1, pt("P", 2)), PicClass(1, pt("P", 2))) == 2


def test_scroll_degree_is_2deg_b_minus_e():
    c = CurveModel(0, ["R"])
    S = decomposable_surface(c, pt("R", -1))
    assert scroll_degree(S, PicClass(1, pt("R", 2))) == 3
    with pytest.raises(ValueError):
        scroll_degree(S, NumClass(2, 3))


def test_segre_bounds_enforced(g1):
    with pytest.raises(SegreBoundViolation):
        check_segre(1, -1, Tri.TRUE)
    with pytest.raises(SegreBoundViolation):
        check_segre(1, 1, Tri.FALSE)
    with pytest.raises(SegreBoundViolation):
        RuledSurface(g1, pt("P", 2), Tri.UNKNOWN)
    check_segre(2, -2, Tri.FALSE)
    assert segre_decomposability(2, 3) is Tri.TRUE
    assert segre_decomposability(2, -1) is Tri.FALSE
    assert segre_decomposability(2, 1) is Tri.UNKNOWN


def test_split_surface_needs_normalized_class(g1):
    with pytest.raises(ScenarioError):
        decomposable_surface(g1, pt("P"))


def test_min_section_product_not_unique(g1):
    info = min_section_info(product_surface(g1))
    assert info.unique is Tri.FALSE
    assert info.self_int == 0


def test_min_section_gap(g1):
    info = min_section_info(decomposable_surface(g1, pt("P", -2)))
    assert (info.self_int, info.x1_self_int, info.other_sections_min_self_int) == (-2, 2, 4)
    assert info.unique is Tri.TRUE


def test_min_section_nontrivial_degree_zero(g1):
    # X0 is alone in its class; X1 = X0 + (Q - P)f is a different class
    info = min_section_info(decomposable_surface(g1, pt("P") - pt("Q")))
    assert info.unique is Tri.TRUE
    assert info.x1_self_int == 0


def test_section_from_quotient():
    c = CurveModel(1, ["P"])
    S = decomposable_surface(c, pt("P", -1))
    q = section_from_quotient(S, pt("P", 2))
    assert q.cls == PicClass(1, pt("P", 3))
    assert q.x0_degree == 2


def test_normalize_split(g1):
    twist, e = normalize_split(pt("P"), pt("Q", 3))
    assert twist == pt("Q", 3)
    assert e.degree == -2
