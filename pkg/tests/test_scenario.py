import json

import pytest

from conftest import pt
from ruledscroll.curve_model import DivisorClass
from ruledscroll.errors import InvalidPosition, ScenarioError
from ruledscroll.scenario import load_scenario, parse_class, scenario_from_dict
from ruledscroll.values import Tri
from ruledscroll.verify import FIXTURES, fixture_path


def test_parse_class_strings():
    K = pt("W", 2)
    assert parse_class("K + W - 2R1", {"K": K}, ["W", "R1"]) == pt("W", 3) - pt("R1", 2)
    assert parse_class("0", {}, []) == DivisorClass.zero()
    assert parse_class("-*1", {}, []) == pt("*1", -1)
    with pytest.raises(ScenarioError):
        parse_class("K + Z", {"K": K}, ["W"])
    with pytest.raises(ScenarioError):
        parse_class("W W", {}, ["W"])


def test_parse_class_mapping():
    D = parse_class({"coeffs": {"A": 2}, "residual": 1}, {}, ["A"])
    assert D.degree == 3


@pytest.mark.parametrize("name", FIXTURES)
def test_fixtures_load(name):
    sc = load_scenario(str(fixture_path(name)))
    assert sc.name == name
    assert sc.surfaces


def test_chain_surfaces_resolve_in_any_order():
    sc = scenario_from_dict({
        "curve": {"genus": 1, "points": ["P"]},
        "surfaces": {
            "B": {"form": "chain", "anchor": "A", "steps": ["P:OnX0"]},
            "A": {"form": "chain", "anchor": "S", "steps": [{"point": "P", "position": "OnX0"}]},
            "S": {"form": "product"},
        },
    })
    assert [sc.surfaces[n].e for n in ("B", "A", "S")] == [2, 1, 0]
    assert list(sc.surfaces) == ["B", "A", "S"]


def test_scenario_errors(tmp_path):
    with pytest.raises(ScenarioError):
        scenario_from_dict({})
    with pytest.raises(ScenarioError):
        scenario_from_dict({"curve": {"genus": 1}, "surfaces": {"A": {"form": "chain", "anchor": "B"},
                                                                 "B": {"form": "chain", "anchor": "A"}}})
    with pytest.raises(ScenarioError):
        scenario_from_dict({"curve": {"genus": 1}, "systems": {"H": {"surface": "nope"}}})
    with pytest.raises(ScenarioError):
        scenario_from_dict({"curve": {"genus": 2, "points": ["A"], "h0": {"A": 2}}})
    with pytest.raises(InvalidPosition):
        scenario_from_dict({"curve": {"genus": 1, "points": ["P"]},
                            "surfaces": {"S": {"form": "product"},
                                         "T": {"form": "chain", "anchor": "S", "steps": ["P:OnX1"]},
                                         "U": {"form": "chain", "anchor": "T", "steps": [{"point": "P"}]}}})
    bad = tmp_path / "bad.json"
    bad.write_text("{not json")
    with pytest.raises(ScenarioError):
        load_scenario(bad)
    with pytest.raises(ScenarioError):
        load_scenario(tmp_path / "missing.json")


def test_class_entries_and_aliases():
    sc = scenario_from_dict({"curve": {
        "genus": 2, "points": ["W", "P", "Q"],
        "classes": [{"name": "K", "coeffs": {"W": 2}, "h0": 2}],
        "canonical": "K", "aliases": [["P + Q", "K"]],
    }, "surfaces": {"S": {"form": "decomposable", "e_class": "-K"}},
        "systems": {"H": {"surface": "S", "b": "P + Q + W"}}})
    assert sc.curve.same_class(sc.parse("P + Q"), pt("W", 2))
    surf, H = sc.system("H")
    assert H.b == pt("W", 3)
    assert sc.surface("S").decomposable is Tri.TRUE


def test_fixture_files_carry_derivations():
    for name in FIXTURES:
        data = json.loads(fixture_path(name).read_text())
        assert data["derivation"], name
