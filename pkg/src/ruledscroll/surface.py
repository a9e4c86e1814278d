"""Geometrically ruled surfaces over a curve model and their lattices.

A surface is stored through its normalized invariant class 𝔢 (so that
``e = -deg 𝔢``) together with a decomposability flag.  Surfaces obtained
by elementary transformations keep a link to the surface they came from
and to the resolved step, which is all the chain bookkeeping needs.
"""

from __future__ import annotations

from dataclasses import dataclass, field

from .curve_model import CurveModel, DivisorClass
from .errors import ScenarioError, SegreBoundViolation
from .values import Tri


@dataclass(frozen=True)
class NumClass:
    """Numerical class ``m·X0 + b·f``."""

    m: int
    b_deg: int

    def __add__(self, other):
        return NumClass(self.m + other.m, self.b_deg + other.b_deg)

    def __neg__(self):
        return NumClass(-self.m, -self.b_deg)

    def __sub__(self, other):
        return self + (-other)

    def __mul__(self, k):
        return NumClass(k * self.m, k * self.b_deg)

    __rmul__ = __mul__


@dataclass(frozen=True)
class PicClass:
    """Divisor class ``m·X0 + 𝔟·f`` in the normalized basis of its surface."""

    m: int
    b: DivisorClass = field(default_factory=DivisorClass)

    def num(self) -> NumClass:
        return NumClass(self.m, self.b.degree)

    def __add__(self, other):
        return PicClass(self.m + other.m, self.b + other.b)

    def __sub__(self, other):
        return PicClass(self.m - other.m, self.b - other.b)

    def twist(self, D: DivisorClass) -> "PicClass":
        return PicClass(self.m, self.b + D)

    def __str__(self):
        head = {0: "", 1: "X0"}.get(self.m, f"{self.m}X0")
        if self.b.is_zero:
            return head or "0"
        tail = f"({self.b})f"
        return f"{head} + {tail}" if head else tail

    def to_json(self):
        return {"m": self.m, "b": self.b.to_json()}


def _num(C) -> NumClass:
    return C.num() if isinstance(C, PicClass) else C


@dataclass(frozen=True, eq=False)
class RuledSurface:
    """P(E0) over ``curve`` with invariant class 𝔢 = det E0 of non-positive degree when split."""

    curve: CurveModel
    e_class: DivisorClass
    decomposable: Tri
    min_section: str = "X0"
    parent: "RuledSurface | None" = None
    last_step: object = None
    label: str = ""

    def __post_init__(self):
        object.__setattr__(self, "e_class", self.curve.canon(self.e_class))
        check_segre(self.curve.genus, self.e, self.decomposable)

    @property
    def e(self) -> int:
        return -self.e_class.degree

    @property
    def genus(self) -> int:
        return self.curve.genus

    @property
    def form(self) -> str:
        return "decomposable" if self.parent is None else "chain"

    @property
    def anchor(self) -> "RuledSurface":
        s = self
        while s.parent is not None:
            s = s.parent
        return s

    @property
    def steps(self) -> list:
        out = []
        s = self
        while s.parent is not None:
            out.append(s.last_step)
            s = s.parent
        return out[::-1]

    @property
    def min_section_self_int(self) -> int:
        return -self.e

    def invariants(self) -> tuple:
        return (self.decomposable.value, self.e, self.e_class)

    def describe(self) -> dict:
        return {
            "form": self.form,
            "decomposable": self.decomposable.value,
            "e": self.e,
            "e_class": str(self.e_class),
            "min_section": self.min_section,
            "min_section_self_int": self.min_section_self_int,
            "chain_length": len(self.steps),
        }


def check_segre(g: int, e: int, decomposable: Tri):
    if decomposable is Tri.TRUE and e < 0:
        raise SegreBoundViolation(f"decomposable surface with e={e} < 0")
    if decomposable is Tri.FALSE and not -g <= e <= 2 * g - 2:
        raise SegreBoundViolation(f"indecomposable surface with e={e} outside [{-g}, {2 * g - 2}]")
    if decomposable is Tri.UNKNOWN and e < -g:
        raise SegreBoundViolation(f"surface with e={e} < -g={-g}")


def segre_decomposability(g: int, e: int) -> Tri:
    """What the Segre bounds alone say about decomposability for invariant ``e``."""
    if e > 2 * g - 2:
        return Tri.TRUE
    if e < 0:
        return Tri.FALSE
    return Tri.UNKNOWN


def decomposable_surface(curve: CurveModel, e_class: DivisorClass, label: str = "") -> RuledSurface:
    """The split surface P(O ⊕ O(𝔢)); 𝔢 must already be normalized (degree ≤ 0)."""
    if e_class.degree > 0:
        raise ScenarioError(f"e_class {e_class} has positive degree; normalize the splitting first")
    return RuledSurface(curve, e_class, Tri.TRUE, "X0", None, None, label)


def product_surface(curve: CurveModel, label: str = "") -> RuledSurface:
    return decomposable_surface(curve, DivisorClass.zero(), label)


def normalize_split(a: DivisorClass, b: DivisorClass):
    """Write O(a) ⊕ O(b) as a twist of the normalized O ⊕ O(𝔢); returns (twist, 𝔢)."""
    if a.degree >= b.degree:
        return a, b - a
    return b, a - b


def intersect(S: RuledSurface, C, D) -> int:
    C, D = _num(C), _num(D)
    return -S.e * C.m * D.m + C.m * D.b_deg + D.m * C.b_deg


def scroll_degree(S: RuledSurface, H) -> int:
    H = _num(H)
    if H.m != 1:
        raise ValueError("scroll degree is defined for unisecant classes")
    return intersect(S, H, H)


@dataclass(frozen=True)
class QuotientSection:
    cls: PicClass
    x0_degree: int


def section_from_quotient(S: RuledSurface, a: DivisorClass) -> QuotientSection:
    """Section class attached to a quotient line bundle O(𝔞) of E0."""
    D = PicClass(1, S.curve.canon(a - S.e_class))
    x0 = intersect(S, PicClass(1), D)
    assert x0 == a.degree
    return QuotientSection(D, x0)


@dataclass(frozen=True)
class MinSectionInfo:
    cls: PicClass
    self_int: int
    unique: Tri
    x1_cls: PicClass | None
    x1_self_int: int | None
    other_sections_min_self_int: int | None

    def to_json(self):
        return {
            "class": str(self.cls),
            "self_int": self.self_int,
            "unique": self.unique.value,
            "x1_class": str(self.x1_cls) if self.x1_cls is not None else None,
            "x1_self_int": self.x1_self_int,
            "other_sections_min_self_int": self.other_sections_min_self_int,
        }


def min_section_info(S: RuledSurface) -> MinSectionInfo:
    e = S.e
    if S.decomposable is Tri.FALSE:
        unique = Tri.TRUE
    elif e != 0:
        unique = Tri.TRUE
    else:
        # only the product surface carries a pencil of minimal sections
        product = S.decomposable.and_(S.curve.is_trivial(S.e_class))
        unique = product.negate()
    x1 = x1_self = others = None
    if S.decomposable is Tri.TRUE:
        x1 = PicClass(1, -S.e_class)
        x1_self = e
        others = e + 2
    return MinSectionInfo(PicClass(1), -e, unique, x1, x1_self, others)
