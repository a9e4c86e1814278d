import pytest

from conftest import pt
from ruledscroll import linear_system as ls
from ruledscroll.curve_model import CurveModel, DivisorClass, Domain
from ruledscroll.elm_engine import ElmStep, Position, transform_surface
from ruledscroll.errors import NotBasePointFree
from ruledscroll.surface import PicClass, decomposable_surface, product_surface
from ruledscroll.values import Tri
from ruledscroll.verify import load_fixture


def test_cubic_scroll_numbers():
    c = CurveModel(0, ["R"])
    S = decomposable_surface(c, pt("R", -1))
    rep = ls.classify(S, 1, pt("R", 2))
    assert (rep.h0.to_json(), rep.h1.to_json(), rep.degree) == (5, 0, 3)
    assert rep.bpf is Tri.TRUE
    assert rep.very_ample.value is Tri.TRUE
    assert rep.generic_member_irreducible is Tri.TRUE


def test_decomposable_sum_and_euler(g1):
    S = decomposable_surface(g1, pt("P", -1))
    # h0(b) + h0(b - P) + h0(b - 2P) for b = 3P
    assert ls.h_i_decomposable(S, 2, pt("P", 3), 0).to_json() == 3 + 2 + 1
    assert ls.euler_characteristic(S, 2, pt("P", 3)) == 6
    assert ls.h0(S, -1, pt("P", 5)).to_json() == 0


def test_indecomposable_elliptic_surface(g1):
    # nonsplit extension 0 -> O -> E -> O -> 0: h0(E) = 1, h0(E(P)) = 2
    A = transform_surface(decomposable_surface(g1, pt("P", -1)), ElmStep("P", Position.OFF_BOTH_BASE_POINT))
    assert ls.h0(A, 1, DivisorClass.zero()).to_json() == 1
    assert ls.h0(A, 1, pt("Q")).to_json() == 2
    assert ls.h1(A, 1, pt("Q")).to_json() == 0


def test_fixed_generator_on_product(g2):
    T = product_surface(g2)
    entries = ls.base_locus(T, 1, pt("W", 3))
    kinds = {e.generator: e.kind for e in entries}
    assert kinds["W"] == ls.FIXED
    assert kinds["P"] == ls.FREE
    assert ls.is_bpf_surface(T, 1, pt("W", 3)) is Tri.FALSE
    assert ls.generic_member_irreducible(T, pt("W", 3)) is Tri.FALSE


def test_point_on_section_base_locus(g1):
    # b = 3P is free, b + 𝔢 = P has P as base point: the base point sits on X0 over P
    S = decomposable_surface(g1, pt("P", -2))
    kinds = {e.generator: e.kind for e in ls.base_locus(S, 1, pt("P", 3))}
    assert kinds["P"] == ls.POINT_ON_X0
    assert kinds["Q"] == ls.FREE


def test_very_ample_verdicts():
    q = load_fixture("elliptic_quintic")
    surf, H = q.system("H")
    assert ls.is_very_ample_surface(q.surface(surf), 1, H.b) is Tri.FALSE
    cones = load_fixture("cones")
    surf, H = cones.system("H2")
    assert ls.very_ample_verdict(cones.surface(surf), 1, H.b).value is Tri.TRUE


def test_hyperelliptic_singularities():
    sc = load_fixture("hyperelliptic_g2")
    surf, H = sc.system("H")
    S = sc.surface(surf)
    rep = ls.singularity_report(S, H)
    assert set(rep.labels()) == {"MultipleDirectrixImage(X0, 2)", "TorsalGenerator(W)", "GeneratorsMeet(P, Q)"}
    assert rep.birational is Tri.TRUE
    loc = ls.isomorphism_locus(S, H)
    assert loc.bound == "X0"
    assert {k.generator for k in loc.components if k.kind == "point"} >= {"W", "P", "Q"}


def test_named_domain_still_decides_fixture():
    sc = load_fixture("hyperelliptic_g2")
    surf, H = sc.system("H")
    rep = ls.singularity_report(sc.surface(surf), H, Domain(False))
    assert "TorsalGenerator(W)" in rep.labels()


def test_isomorphism_locus_needs_bpf(g2):
    with pytest.raises(NotBasePointFree):
        ls.isomorphism_locus(product_surface(g2), PicClass(1, pt("W", 3)))


def test_report_json_lists_only_non_free():
    sc = load_fixture("hyperelliptic_g2")
    surf, F = sc.system("F")
    doc = ls.classify(sc.surface(surf), 1, F.b).to_json()
    assert [e["generator"] for e in doc["base_locus"]] == ["W"]
    assert doc["quantifier_domain"] == "named+generic"
