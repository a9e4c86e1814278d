"""Speciality of scrolls and how it moves under projection.

The speciality of the scroll given by ``|H|`` on ``S`` is ``h1(O_S(H))``.
Projecting from a cycle of points raises it by the number of points the
cycle fails to impose; the ledger keeps that history as an immutable
value.
"""

from __future__ import annotations

from dataclasses import dataclass

from . import linear_system as ls
from .curve_model import DEFAULT_DOMAIN, CurveModel, DivisorClass, Domain, is_bpf
from .errors import MalformedCycle, NotBasePointFree, PreconditionViolation
from .surface import PicClass, RuledSurface, decomposable_surface, intersect, scroll_degree
from .values import ExactOrInterval, Tri, tri_all


def speciality(S: RuledSurface, H: PicClass) -> ExactOrInterval:
    if H.m != 1:
        raise PreconditionViolation("speciality is defined for unisecant systems")
    return ls.h1(S, 1, H.b)


def cone_model(c: CurveModel, b: DivisorClass):
    """The split surface P(O ⊕ O(-𝔟)) and the system |X0 + 𝔟f| whose image is the cone over φ_𝔟(X)."""
    b = c.canon(b)
    if b.degree < 0:
        raise PreconditionViolation("the cone needs deg 𝔟 >= 0")
    return decomposable_surface(c, -b, label="cone"), PicClass(1, b)


def cone_speciality(c: CurveModel, b: DivisorClass) -> ExactOrInterval:
    """``g + h1(𝔟)`` for the cone over the curve embedded by ``𝔟``."""
    if c.genus < 1:
        raise PreconditionViolation("cone speciality is stated for g >= 1")
    if is_bpf(c, b) is Tri.FALSE:
        raise NotBasePointFree(f"{b} is not base-point-free")
    closed = c.h1(b).shift(c.genus)
    S, H = cone_model(c, b)
    via_surface = speciality(S, H)
    assert via_surface == closed or via_surface.to_json() == closed.to_json(), (via_surface, closed)
    return closed


def projection_delta(cycle_degree: int, span_dim: int) -> int:
    """Increase of speciality when projecting from a cycle of degree ∂ spanning a ``span_dim`` space."""
    if span_dim < 0 or cycle_degree < span_dim + 1:
        raise MalformedCycle(f"a cycle of degree {cycle_degree} cannot span a {span_dim}-dimensional space")
    return cycle_degree - (span_dim + 1)


@dataclass(frozen=True)
class ProjectionEvent:
    cycle_degree: int
    span_dim: int
    delta: int

    def to_json(self):
        return {"cycle_degree": self.cycle_degree, "span_dim": self.span_dim, "delta": self.delta}


@dataclass(frozen=True)
class SpecialityLedger:
    anchor_i: ExactOrInterval
    events: tuple = ()

    @property
    def current_i(self) -> ExactOrInterval:
        return self.anchor_i.shift(sum(ev.delta for ev in self.events))

    def project(self, cycle_degree: int, span_dim: int) -> "SpecialityLedger":
        ev = ProjectionEvent(cycle_degree, span_dim, projection_delta(cycle_degree, span_dim))
        return SpecialityLedger(self.anchor_i, self.events + (ev,))

    def to_json(self):
        return {
            "anchor_i": self.anchor_i.to_json(),
            "current_i": self.current_i.to_json(),
            "events": [ev.to_json() for ev in self.events],
        }


def is_cone_test(S: RuledSurface, H: PicClass, domain: Domain = DEFAULT_DOMAIN) -> Tri:
    """Whether every two generators of the scroll meet: ``h0(H-Pf-Qf) >= h0(H) - 3`` for all P, Q."""
    c = S.curve
    if c.genus < 1:
        raise PreconditionViolation("the cone criterion is stated for g >= 1")
    if H.m != 1:
        raise PreconditionViolation("the cone criterion needs a unisecant system")
    h = ls.h0(S, 1, H.b)
    if h.hi < 4:
        raise PreconditionViolation(f"the cone criterion needs N >= 3 (h0 = {h})")
    if ls.is_bpf_surface(S, 1, H.b, domain) is not Tri.TRUE:
        raise NotBasePointFree("|H| must be base-point-free")
    checks = []
    for P, Q in domain.pairs(c):
        rest = ls.h0(S, 1, H.b.minus(P).minus(Q))
        checks.append((h - rest).le(3))
    verdict = tri_all(checks)
    if h.lo < 4 and verdict is not Tri.FALSE:
        return Tri.UNKNOWN
    return verdict


@dataclass(frozen=True)
class DirectrixCheck:
    section: PicClass
    degree: int
    restricted: DivisorClass
    h1_curve: ExactOrInterval
    h1_scroll: ExactOrInterval
    holds: Tri

    def to_json(self):
        return {
            "section": str(self.section),
            "degree": self.degree,
            "O_C(H)": str(self.restricted),
            "h1_curve": self.h1_curve.to_json(),
            "h1_scroll": self.h1_scroll.to_json(),
            "holds": self.holds.value,
            "model_inconsistent": self.holds is Tri.FALSE,
        }


def directrix_speciality_bound_check(S: RuledSurface, H: PicClass, C: PicClass) -> DirectrixCheck:
    """Compare ``h1(O_C(H))`` with the speciality of the scroll for a section ``C ~ X0 + 𝔠f``.

    A ``False`` verdict means the tabulated data contradict the bound and the
    model is inconsistent.
    """
    if C.m != 1 or H.m != 1:
        raise PreconditionViolation("both the section and the system must be unisecant")
    c = S.curve
    restricted = c.canon(H.b + C.b + S.e_class)
    deg = intersect(S, H, C)
    assert restricted.degree == deg
    h1c = c.h1(restricted)
    h1s = speciality(S, H)
    if h1c.hi <= h1s.lo:
        holds = Tri.TRUE
    elif h1c.lo > h1s.hi:
        holds = Tri.FALSE
    else:
        holds = Tri.UNKNOWN
    return DirectrixCheck(C, deg, restricted, h1c, h1s, holds)


@dataclass(frozen=True)
class SpecialDirectrixReport:
    applicable: bool
    reason: str
    genus: int
    degree: int
    speciality: int
    a: int | None = None
    feasibility: tuple | None = None
    directrix_degree_max: int | None = None
    other_sections_min_degree: int | None = None

    def to_json(self):
        out = {"applicable": self.applicable, "reason": self.reason,
               "g": self.genus, "d": self.degree, "i": self.speciality}
        if self.applicable:
            lhs, rhs = self.feasibility
            out.update({
                "a": self.a,
                "feasibility": {"lhs": lhs, "rhs": rhs, "holds": lhs <= rhs},
                "directrix": {
                    "degree_max": self.directrix_degree_max,
                    "h1": self.speciality,
                    "linearly_normal": True,
                    "minimal": True,
                    "unique": True,
                },
                "other_sections_min_degree": self.other_sections_min_degree,
            })
        return out


def special_directrix_search(g: int, d: int, i: int) -> SpecialDirectrixReport:
    """Certified properties of the special directrix of a special scroll of degree ``d >= 4g-2``."""
    if i < 1:
        return SpecialDirectrixReport(False, f"scroll is not special (i={i} < 1)", g, d, i)
    if d < 4 * g - 2:
        return SpecialDirectrixReport(False, f"d={d} < 4g-2={4 * g - 2}", g, d, i)
    a = g - i + 1
    lhs, rhs = 2 * a, d - 2 * g + 1 + i
    assert lhs <= rhs
    deg_max = 2 * g - 2
    others = d - deg_max
    assert others >= 2 * g > deg_max
    return SpecialDirectrixReport(True, "special directrix exists", g, d, i, a, (lhs, rhs), deg_max, others)


def special_directrix_for(S: RuledSurface, H: PicClass) -> SpecialDirectrixReport:
    i = speciality(S, H)
    d = scroll_degree(S, H)
    if not i.is_exact:
        if i.hi < 1:
            return SpecialDirectrixReport(False, "scroll is not special", S.genus, d, 0)
        return SpecialDirectrixReport(False, f"speciality undetermined {i}", S.genus, d, i.lo)
    return special_directrix_search(S.genus, d, i.value)


def directrix_degree_sum_check(S: RuledSurface, H: PicClass, C: PicClass, D: PicClass) -> bool:
    """Two distinct sections have degrees adding up to at least ``d``."""
    return intersect(S, H, C) + intersect(S, H, D) >= scroll_degree(S, H)
