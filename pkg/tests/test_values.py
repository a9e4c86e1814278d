import pytest

from ruledscroll.values import ExactOrInterval, Tri, tri_all, tri_any


def test_tri_has_no_implicit_truth():
    with pytest.raises(TypeError):
        bool(Tri.UNKNOWN)


def test_tri_connectives():
    assert tri_all([Tri.TRUE, Tri.UNKNOWN]) is Tri.UNKNOWN
    assert tri_all([Tri.UNKNOWN, Tri.FALSE]) is Tri.FALSE
    assert tri_any([Tri.FALSE, Tri.UNKNOWN]) is Tri.UNKNOWN
    assert tri_any([Tri.UNKNOWN, Tri.TRUE]) is Tri.TRUE
    assert Tri.TRUE.negate() is Tri.FALSE
    assert Tri.UNKNOWN.negate() is Tri.UNKNOWN


def test_interval_arithmetic():
    a = ExactOrInterval(1, 3)
    b = ExactOrInterval.exact(2)
    assert a + b == ExactOrInterval(3, 5)
    assert a - b == ExactOrInterval(-1, 1)
    assert 5 - a == ExactOrInterval(2, 4)
    assert a.shift(-1).clamp_min(1) == ExactOrInterval(1, 2)
    assert a.intersect(ExactOrInterval(4, 6)) is None
    assert a.hull(ExactOrInterval(5, 5)) == ExactOrInterval(1, 5)


def test_interval_comparisons():
    a = ExactOrInterval(1, 3)
    assert a.ge(1) is Tri.TRUE
    assert a.ge(2) is Tri.UNKNOWN
    assert a.gt(3) is Tri.FALSE
    assert a.eq(2) is Tri.UNKNOWN
    assert ExactOrInterval.exact(2).eq(2) is Tri.TRUE


def test_interval_json_carries_reason():
    assert ExactOrInterval.exact(4).to_json() == 4
    assert ExactOrInterval(0, 1, "why").to_json() == {"lo": 0, "hi": 1, "reason": "why"}
    assert ExactOrInterval(0, 1).to_json()["reason"]


def test_empty_interval_rejected():
    with pytest.raises(ValueError):
        ExactOrInterval(2, 1)
    with pytest.raises(ValueError):
        ExactOrInterval(0, 1).value
