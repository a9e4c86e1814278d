"""Elementary transformations of ruled surfaces.

Blowing up a point ``x`` on the generator over ``P`` and contracting the
strict transform of that generator gives a new ruled surface ``S'``.  The
position of ``x`` decides how the normalized invariant moves; the case
table below is the only place where that knowledge lives.

Every resolved step records a *shift* class ``s`` with
``Y0 = ν*(X0) - s·f``, where ``Y0`` is the minimal section of ``S'``.
Class transport and the chain dimension recursion both read it.
"""

from __future__ import annotations

from dataclasses import dataclass
from enum import Enum

from .curve_model import DivisorClass, is_generic_point
from .errors import AliasRequired, InvalidPosition, NotBasePointFree, SingularCenter, UnresolvableChain
from .surface import PicClass, RuledSurface, check_segre, scroll_degree, segre_decomposability
from .values import Tri


class Position(Enum):
    ON_X0 = "OnX0"
    ON_X1 = "OnX1"
    OFF_BOTH_GENERIC = "OffBothGenericFiber"
    OFF_BOTH_BASE_POINT = "OffBothBasePointFiber"
    ON_MIN_SECTION = "OnMinSection"
    OFF_MIN_SECTION = "OffMinSection"
    UNKNOWN = "Unknown"


@dataclass(frozen=True)
class ElmStep:
    point: str
    position: Position
    multiplicities: tuple = ()

    @classmethod
    def parse(cls, text: str) -> "ElmStep":
        point, _, pos = text.partition(":")
        try:
            return cls(point.strip(), Position(pos.strip()))
        except ValueError:
            raise InvalidPosition(f"unknown position {pos!r}") from None

    def to_json(self):
        return {"point": self.point, "position": self.position.value}


@dataclass(frozen=True)
class ResolvedStep:
    step: ElmStep
    case: str
    shift: DivisorClass
    e_before: int
    e_after: int
    e_class_before: DivisorClass
    e_class_after: DivisorClass
    relation: str

    @property
    def point(self) -> str:
        return self.step.point

    @property
    def position(self) -> Position:
        return self.step.position

    def to_json(self):
        return {
            "point": self.point,
            "position": self.position.value,
            "case": self.case,
            "e_before": self.e_before,
            "e_after": self.e_after,
            "e_class_after": str(self.e_class_after),
            "relation": self.relation,
        }


# cases whose new minimal section is the strict transform of the old X0 through x
_THROUGH_X = ("x0", "min_section")
# cases where x avoids X0 and X0' stays minimal
_AVOIDING_X = ("x1", "generic", "base_point_fiber", "keep_minimal")
# e = 0 cases where the other section becomes minimal
_FLIPPED = ("x1_flip", "generic_flip")


def _check_point(S: RuledSurface, P: str):
    if P not in S.curve.points and not is_generic_point(P):
        raise InvalidPosition(f"point {P!r} is not declared on the curve")


def _build(S, step, case, e_after, e_class_after, shift, decomposable, min_label, relation):
    rs = ResolvedStep(step, case, S.curve.canon(shift), S.e, e_after, S.e_class,
                      S.curve.canon(e_class_after), relation)
    check_segre(S.genus, e_after, decomposable)
    S2 = RuledSurface(S.curve, e_class_after, decomposable, min_label, S, rs, S.label)
    assert S2.e == e_after
    return S2


def transform_surface(S: RuledSurface, step: ElmStep) -> RuledSurface:
    """Elementary transform of ``S`` at the point described by ``step``."""
    P, pos = step.point, step.position
    _check_point(S, P)
    c, e, E = S.curve, S.e, S.e_class
    g = S.genus
    if pos in (Position.UNKNOWN, Position.OFF_MIN_SECTION):
        raise InvalidPosition(f"position {pos.value} does not determine the transformed surface")
    needs_split = (Position.ON_X0, Position.ON_X1, Position.OFF_BOTH_GENERIC,
                   Position.OFF_BOTH_BASE_POINT)
    if pos in needs_split and S.decomposable is not Tri.TRUE:
        raise InvalidPosition(f"{pos.value} needs a surface known to be decomposable")

    if pos in (Position.ON_X0, Position.ON_MIN_SECTION):
        case = "x0" if pos is Position.ON_X0 else "min_section"
        if S.decomposable is Tri.TRUE:
            dec = Tri.TRUE
        else:
            dec = segre_decomposability(g, e + 1)
        return _build(S, step, case, e + 1, E.minus(P), DivisorClass.point(P), dec, "X0'",
                      "e' ~ e - P")

    if pos is Position.OFF_BOTH_GENERIC:
        # h0(-𝔢) > 0 and P not a base point of -𝔢, i.e. h0 drops at P
        drop = c.drop(-E, P)
        if drop.eq(1) is not Tri.TRUE:
            raise InvalidPosition(f"{pos.value} at {P} needs h0(-e) > 0 with {P} not a base point "
                                  f"of -e (drop {drop})")
        return _split_off_x0(S, step, "generic")

    if pos is Position.ON_X1:
        return _split_off_x0(S, step, "x1")

    if pos is Position.OFF_BOTH_BASE_POINT:
        # base point in the sense h0(-𝔢-P) = h0(-𝔢); vacuous when -𝔢 has no sections
        drop = c.drop(-E, P)
        if drop.eq(0) is not Tri.TRUE:
            raise InvalidPosition(f"{pos.value} needs {P} to be a base point of -e (drop {drop})")
        return _build(S, step, "base_point_fiber", e - 1, E.plus(P), DivisorClass.zero(), Tri.FALSE,
                      "X0'", "e' ~ e + P")
    raise InvalidPosition(f"unhandled position {pos}")


def _split_off_x0(S, step, case):
    P, e, E = step.point, S.e, S.e_class
    if e >= 1:
        return _build(S, step, case, e - 1, E.plus(P), DivisorClass.zero(), Tri.TRUE, "X0'",
                      "e' ~ e + P")
    return _build(S, step, case + "_flip", 1, (-E).minus(P), E.plus(P), Tri.TRUE, "X1'",
                  "e' ~ -e - P")


def _keep_minimal(S: RuledSurface, P: str) -> RuledSurface:
    # x off the minimal section of S while the strict transform of X0 stays minimal
    step = ElmStep(P, Position.OFF_MIN_SECTION)
    dec = segre_decomposability(S.genus, S.e - 1)
    return _build(S, step, "keep_minimal", S.e - 1, S.e_class.plus(P), DivisorClass.zero(), dec,
                  "X0'", "e' ~ e + P")


def flip_split(S: RuledSurface) -> RuledSurface:
    """Swap the roles of X0 and X1 on a split surface with e = 0."""
    assert S.e == 0 and S.decomposable is Tri.TRUE
    return RuledSurface(S.curve, -S.e_class, Tri.TRUE, "X1", S.parent, S.last_step, S.label)


def flip_class(S: RuledSurface, C: PicClass) -> PicClass:
    """Rewrite a class of ``S`` (e = 0, split) in the basis of :func:`flip_split`."""
    return PicClass(C.m, S.curve.canon(C.b + C.m * S.e_class))


@dataclass(frozen=True)
class _Inverse:
    surface: RuledSurface
    computed: RuledSurface
    flipped: bool


def _inverse(S2: RuledSurface) -> _Inverse:
    rs = S2.last_step
    if rs is None:
        raise InvalidPosition("surface has no elementary transform to undo")
    P = rs.point
    parent = S2.parent
    flipped = False
    computed = None
    if rs.case in _THROUGH_X:
        # y lies off X0'; it is on the strict transform of X1 when the parent was split,
        # and on a base-point fiber of -𝔢' when the parent was not
        if S2.decomposable is Tri.TRUE and parent.decomposable is Tri.TRUE:
            back = transform_surface(S2, ElmStep(P, Position.ON_X1))
        elif S2.decomposable is Tri.TRUE and parent.decomposable is Tri.FALSE:
            back = transform_surface(S2, ElmStep(P, Position.OFF_BOTH_BASE_POINT))
        else:
            back = _keep_minimal(S2, P)
    elif rs.case in _AVOIDING_X:
        pos = Position.ON_X0 if S2.decomposable is Tri.TRUE else Position.ON_MIN_SECTION
        back = transform_surface(S2, ElmStep(P, pos))
    elif rs.case in _FLIPPED:
        back = transform_surface(S2, ElmStep(P, Position.ON_X1))
        if back.e_class != parent.e_class:
            computed = back
            back = flip_split(back)
            flipped = True
    else:
        raise UnresolvableChain(f"no inverse rule for case {rs.case}")
    if back.e != parent.e or back.e_class != parent.e_class:
        raise UnresolvableChain(
            f"inverse step gave (e={back.e}, {back.e_class}), expected (e={parent.e}, {parent.e_class})")
    dec = back.decomposable
    if dec is Tri.UNKNOWN:
        # the chain remembers what the surface was before the step
        dec = parent.decomposable
    elif parent.decomposable is not Tri.UNKNOWN and dec is not parent.decomposable:
        raise UnresolvableChain("inverse step disagrees with the recorded decomposability")
    restored = RuledSurface(parent.curve, back.e_class, dec, parent.min_section, parent.parent,
                            parent.last_step, parent.label)
    return _Inverse(restored, computed or back, flipped)


def inverse_step(S2: RuledSurface, y: str | None = None) -> RuledSurface:
    """Undo the last transform by transforming again at the distinguished point ``y``."""
    if y is not None and S2.last_step is not None and y != S2.last_step.point:
        raise InvalidPosition(f"y must lie on the new generator over {S2.last_step.point}")
    return _inverse(S2).surface


def transform_class(S2: RuledSurface, C: PicClass, mu: int) -> PicClass:
    """Class on ``S2`` of the strict transform of ``C`` (a class on ``S2.parent``) with multiplicity ``mu`` at x."""
    rs = S2.last_step
    if rs is None:
        raise InvalidPosition("surface has no elementary transform")
    if C.m >= 1 and not 0 <= mu <= C.m:
        raise ValueError("multiplicity must lie in [0, m]")
    if C.m <= 0 and mu != 0:
        raise ValueError("fiber classes transform with multiplicity 0")
    b = C.b + C.m * rs.shift
    b = b.minus(rs.point, mu) if mu else b
    return PicClass(C.m, S2.curve.canon(b))


def inverse_transform_class(S2: RuledSurface, C2: PicClass, mu_y: int) -> PicClass:
    """Carry a class of ``S2`` back through the inverse step at y with multiplicity ``mu_y``."""
    inv = _inverse(S2)
    C = transform_class(inv.computed, C2, mu_y)
    if inv.flipped:
        C = flip_class(inv.computed, C)
    return C


def generic_center(S: RuledSurface, name: str = "*1") -> ElmStep:
    """Step at a general point of the surface over the general point ``name``."""
    if not is_generic_point(name):
        raise InvalidPosition("generic centers use '*'-prefixed point names")
    if S.decomposable is not Tri.TRUE:
        raise InvalidPosition("a general center off the minimal section has no decidable transform "
                              "on a surface not known to be split")
    drop = S.curve.drop(-S.e_class, name)
    if drop.eq(1) is Tri.TRUE:
        return ElmStep(name, Position.OFF_BOTH_GENERIC)
    if drop.eq(0) is Tri.TRUE:
        return ElmStep(name, Position.OFF_BOTH_BASE_POINT)
    raise InvalidPosition(f"cannot decide whether {name} is a base point of -e")


def replay(anchor: RuledSurface, steps) -> RuledSurface:
    S = anchor
    for st in steps:
        S = transform_surface(S, st)
    return S


def transformed_intersection(CD: int, n: int, m: int, mu_c: int, mu_d: int) -> int:
    """C'·D' after the transform, for an n-secant C and an m-secant D."""
    return CD + n * m - n * mu_d - m * mu_c


def transformed_section_intersection_divisor(b: DivisorClass, case: str, P: str) -> DivisorClass:
    """Projection to the curve of C'∩D' for unisecant C, D with π_*(C∩D) ~ 𝔟.

    ``case`` is ``"both"`` (x on C and D), ``"neither"`` or ``"one"``.
    """
    if case == "both":
        return b.minus(P)
    if case == "neither":
        return b.plus(P)
    if case == "one":
        return b
    raise ValueError(f"unknown incidence case {case!r}")


def section_self_intersection_class(b: DivisorClass, mu: int, P: str) -> DivisorClass:
    """Class of O_{C'}(C') when O_C(C) ~ 𝔟 and x has multiplicity ``mu`` on C."""
    return b.plus(P, 1 - 2 * mu)


def named_sum_decomposition(S: RuledSurface):
    """Points (with repetition) whose sum is -𝔢, or ``None`` when not declared."""
    c = S.curve
    candidates = [-S.e_class]
    for lhs, rhs in c.residual_aliases:
        for a, b in ((lhs, rhs), (rhs, lhs)):
            if c.canon(a) == S.e_class:
                candidates.append(-b)
            if c.canon(a) == -S.e_class:
                candidates.append(b)
    for D in candidates:
        if D.residual_degree == 0 and all(n > 0 for _, n in D.named_coeffs):
            return [p for p, n in D.named_coeffs for _ in range(n)]
    return None


def nagata_chain(S: RuledSurface) -> list:
    """Steps on X0 that carry the product surface to the split surface ``S``."""
    if S.decomposable is not Tri.TRUE:
        raise InvalidPosition("the construction from the product needs a split surface")
    pts = named_sum_decomposition(S)
    if pts is None:
        raise AliasRequired(f"-e = {-S.e_class} is not declared as a sum of named points")
    return [ElmStep(P, Position.ON_X0) for P in pts]


def steps_to_decomposable(S: RuledSurface, points=None) -> list:
    """Steps on the minimal section until the invariant exceeds 2g-2 (or the surface is split)."""
    g = S.genus
    out = []
    cur = S
    i = 0
    while cur.decomposable is not Tri.TRUE:
        P = points[i] if points and i < len(points) else f"*{i + 1}"
        st = ElmStep(P, Position.ON_MIN_SECTION)
        cur = transform_surface(cur, st)
        out.append(st)
        i += 1
        assert cur.e <= 2 * g - 1 or cur.decomposable is Tri.TRUE
    return out


@dataclass(frozen=True)
class ProjectionResult:
    surface: RuledSurface
    H: PicClass
    degree: int
    h0: object
    speciality: object

    def to_json(self):
        return {
            "e": self.surface.e,
            "decomposable": self.surface.decomposable.value,
            "H": str(self.H),
            "d": self.degree,
            "h0": self.h0.to_json(),
            "N": (self.h0 - 1).to_json(),
            "i": self.speciality.to_json(),
        }


def project_scroll(S: RuledSurface, H: PicClass, step: ElmStep, smooth_image: bool = True,
                   domain=None) -> ProjectionResult:
    """Project the scroll of ``|H|`` from the image of the point x given by ``step``."""
    from . import linear_system as ls
    from .curve_model import DEFAULT_DOMAIN

    domain = domain or DEFAULT_DOMAIN
    if H.m != 1:
        raise ValueError("projection is defined for unisecant systems")
    if ls.is_bpf_surface(S, H.m, H.b, domain) is not Tri.TRUE:
        raise NotBasePointFree("the projected system must be base-point-free")
    inside = ls.point_in_k(S, H, step, domain)
    if inside is Tri.TRUE or (inside is Tri.UNKNOWN and not smooth_image):
        raise SingularCenter(f"x over {step.point} ({step.position.value}) lies where the map is not an isomorphism")
    d = scroll_degree(S, H)
    h = ls.h0(S, H.m, H.b)
    S2 = transform_surface(S, step)
    H2 = transform_class(S2, H, 1)
    d2 = scroll_degree(S2, H2)
    h2 = ls.h0(S2, H2.m, H2.b)
    assert d2 == d - 1
    if h.is_exact and h2.is_exact and h2.value != h.value - 1:
        raise UnresolvableChain(f"projection changed h0 from {h.value} to {h2.value}")
    expected = h.shift(-1)
    h2 = h2.intersect(expected) or h2
    return ProjectionResult(S2, H2, d2, h2, ls.h1(S2, H2.m, H2.b))
