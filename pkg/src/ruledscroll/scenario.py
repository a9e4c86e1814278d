"""Loading scenario files: a curve model, named surfaces, systems and sections.

Class expressions are either a mapping ``{"coeffs": {...}, "residual": r,
"effective": true|false|null}`` or a string such as ``"K + W - 2R1"``
where every name is a declared class or a point.
"""

from __future__ import annotations

import json
import re
from dataclasses import dataclass, field
from pathlib import Path

from .curve_model import CurveModel, DivisorClass, is_generic_point, validate
from .elm_engine import ElmStep, Position, replay
from .errors import InvalidPosition, ScenarioError
from .surface import PicClass, RuledSurface, decomposable_surface, product_surface

_TERM = re.compile(r"\s*([+-])?\s*(\d*)\s*([A-Za-z_*][\w*']*)\s*")


def parse_class(expr, classes: dict, points) -> DivisorClass:
    if isinstance(expr, dict):
        eff = expr.get("effective", None)
        coeffs = expr.get("coeffs", {})
        residual = int(expr.get("residual", 0))
        base = DivisorClass(tuple(coeffs.items()))
        if residual:
            base = base + DivisorClass.generic(residual, eff)
        return base
    if isinstance(expr, int) and expr == 0:
        return DivisorClass.zero()
    if not isinstance(expr, str):
        raise ScenarioError(f"cannot read class expression {expr!r}")
    text = expr.strip()
    if text in ("", "0"):
        return DivisorClass.zero()
    out = DivisorClass.zero()
    pos = 0
    while pos < len(text):
        m = _TERM.match(text, pos)
        if not m or m.end() == pos:
            raise ScenarioError(f"cannot parse class expression {expr!r}")
        sign = -1 if m.group(1) == "-" else 1
        k = int(m.group(2)) if m.group(2) else 1
        name = m.group(3)
        if pos > 0 and m.group(1) is None:
            raise ScenarioError(f"missing operator before {name!r} in {expr!r}")
        if name in classes:
            term = classes[name]
        elif name in points or is_generic_point(name):
            term = DivisorClass.point(name)
        else:
            raise ScenarioError(f"unknown class or point {name!r} in {expr!r}")
        out = out + (sign * k) * term
        pos = m.end()
    return out


@dataclass
class Scenario:
    name: str
    curve: CurveModel
    surfaces: dict
    systems: dict
    sections: dict
    scripts: list
    expected: dict = field(default_factory=dict)
    path: str = ""

    def surface(self, name: str | None) -> RuledSurface:
        if name is None:
            if len(self.surfaces) != 1:
                raise ScenarioError("several surfaces declared; pass --surface")
            name = next(iter(self.surfaces))
        try:
            return self.surfaces[name]
        except KeyError:
            raise ScenarioError(f"unknown surface {name!r}") from None

    def system(self, name: str | None):
        """(surface name, PicClass) for a declared system."""
        if name is None:
            if len(self.systems) != 1:
                raise ScenarioError("several systems declared; pass --system")
            name = next(iter(self.systems))
        try:
            return self.systems[name]
        except KeyError:
            raise ScenarioError(f"unknown system {name!r}") from None

    def parse(self, expr) -> DivisorClass:
        return parse_class(expr, self.curve.class_names, self.curve.points)


def _build_curve(data: dict) -> CurveModel:
    try:
        genus = int(data["genus"])
    except (KeyError, TypeError, ValueError):
        raise ScenarioError("curve.genus is required") from None
    points = list(data.get("points", []))
    classes: dict = {}
    h0_table = {}
    flags = {}
    for entry in data.get("classes", []):
        name = entry.get("name")
        if not name:
            raise ScenarioError("every class entry needs a name")
        if name in classes or name in points:
            raise ScenarioError(f"duplicate name {name!r}")
        expr = entry.get("expr", {"coeffs": entry.get("coeffs", {}), "residual": entry.get("residual", 0),
                                  "effective": entry.get("generic_effective")})
        D = parse_class(expr, classes, points)
        for p, _ in D.named_coeffs:
            if p not in points and not is_generic_point(p):
                raise ScenarioError(f"class {name!r} uses undeclared point {p!r}")
        classes[name] = D
        if "h0" in entry:
            h0_table[D] = int(entry["h0"])
        if "effective" in entry and entry["effective"] is not None:
            flags[D] = bool(entry["effective"])
    for expr, val in data.get("h0", {}).items():
        h0_table[parse_class(expr, classes, points)] = int(val)
    aliases = []
    for pair in data.get("aliases", []):
        if len(pair) != 2:
            raise ScenarioError("aliases are [lhs, rhs] pairs")
        aliases.append((parse_class(pair[0], classes, points), parse_class(pair[1], classes, points)))
    canonical = data.get("canonical")
    canonical = parse_class(canonical, classes, points) if canonical is not None else None
    curve = CurveModel(genus, points, h0_table, flags, aliases, canonical, classes)
    problems = validate(curve)
    if problems:
        raise ScenarioError("curve model is inconsistent: " + "; ".join(problems))
    return curve


def _parse_step(entry) -> ElmStep:
    if isinstance(entry, str):
        return ElmStep.parse(entry)
    try:
        return ElmStep(entry["point"], Position(entry["position"]))
    except (KeyError, ValueError):
        raise InvalidPosition(f"malformed step {entry!r}") from None


def _build_surfaces(data: dict, curve: CurveModel) -> dict:
    out: dict = {}
    pending = dict(data)
    while pending:
        progressed = False
        for name, s in list(pending.items()):
            form = s.get("form", "decomposable")
            if form == "chain" and s.get("anchor") not in out:
                if s.get("anchor") not in data:
                    raise ScenarioError(f"surface {name!r} has unknown anchor {s.get('anchor')!r}")
                continue
            if form == "product":
                S = product_surface(curve, name)
            elif form == "decomposable":
                e_class = parse_class(s.get("e_class", 0), curve.class_names, curve.points)
                S = decomposable_surface(curve, e_class, name)
            elif form == "cone":
                b = parse_class(s["b"], curve.class_names, curve.points)
                S = decomposable_surface(curve, -b, name)
            elif form == "chain":
                S = replay(out[s["anchor"]], [_parse_step(st) for st in s.get("steps", [])])
            else:
                raise ScenarioError(f"unknown surface form {form!r}")
            out[name] = S
            del pending[name]
            progressed = True
        if not progressed:
            raise ScenarioError("surface anchors form a cycle")
    return {name: out[name] for name in data}


def load_scenario(path) -> Scenario:
    path = Path(path)
    try:
        data = json.loads(path.read_text())
    except FileNotFoundError:
        raise ScenarioError(f"scenario file {path} not found") from None
    except json.JSONDecodeError as exc:
        raise ScenarioError(f"scenario file {path} is not valid JSON: {exc}") from None
    return scenario_from_dict(data, str(path))


def scenario_from_dict(data: dict, path: str = "") -> Scenario:
    if "curve" not in data:
        raise ScenarioError("scenario needs a curve")
    curve = _build_curve(data["curve"])
    surfaces = _build_surfaces(data.get("surfaces", {}), curve)
    systems = {}
    for name, s in data.get("systems", {}).items():
        surf = s.get("surface")
        if surf not in surfaces:
            raise ScenarioError(f"system {name!r} refers to unknown surface {surf!r}")
        systems[name] = (surf, PicClass(int(s.get("m", 1)), curve.canon(
            parse_class(s.get("b", 0), curve.class_names, curve.points))))
    sections = {}
    for name, s in data.get("sections", {}).items():
        surf = s.get("surface")
        if surf not in surfaces:
            raise ScenarioError(f"section {name!r} refers to unknown surface {surf!r}")
        sections[name] = (surf, PicClass(1, curve.canon(
            parse_class(s.get("b", 0), curve.class_names, curve.points))))
    return Scenario(data.get("name", Path(path).stem if path else "scenario"), curve, surfaces, systems,
                    sections, list(data.get("scripts", [])), dict(data.get("expected", {})), path)
