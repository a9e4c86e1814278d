import pytest

from ruledscroll.blowup_lattice import (BlowupLattice, GramLattice, elm_via_lattice, lattice_intersect,
                                        projection_formula_check, total_transform)
from ruledscroll.elm_engine import transformed_intersection
from ruledscroll.surface import NumClass


def test_exceptional_curve_is_minus_one():
    L = BlowupLattice(1, ["P"])
    E = L.exceptional(0)
    assert lattice_intersect(L, E, E) == -1
    assert L.intersect(L.pullback(NumClass(1, 2)), E) == 0


def test_pullback_keeps_intersections():
    L = BlowupLattice(3, ["P", "Q"])
    a, b = NumClass(1, 2), NumClass(2, -1)
    # (X0 + 2f)(2X0 - f) = -3*2 + (-1) + 2*2 = -3
    assert L.intersect(L.pullback(a), L.pullback(b)) == -3


def test_strict_transform_of_fiber():
    L = BlowupLattice(0, ["P"])
    F = total_transform(L, NumClass(0, 1), 1, 0)
    assert L.intersect(F, F) == -1


def test_projection_formula():
    L = BlowupLattice(2, ["P"])
    D = L.total_transform(NumClass(1, 3), 1)
    assert projection_formula_check(L, NumClass(2, -1), D)


def test_gram_must_be_symmetric():
    with pytest.raises(AssertionError):
        GramLattice(("a", "b"), ((0, 1), (2, 0)))
    with pytest.raises(KeyError):
        GramLattice(("a",), ((1,),)).vec(z=1)


@pytest.mark.parametrize("cd,n,m,mc,md,want", [
    (2, 1, 1, 1, 1, 1),  # x on both unisecants
    (2, 1, 1, 0, 0, 3),  # x on neither
    (2, 1, 1, 1, 0, 2),  # x on one
    (4, 0, 0, 0, 0, 4),  # fiber classes
])
def test_lattice_matches_examples(cd, n, m, mc, md, want):
    assert elm_via_lattice(cd, n, m, mc, md) == want
    assert transformed_intersection(cd, n, m, mc, md) == want
