"""Complete linear systems |mX0 + 𝔟f| on ruled surfaces.

Dimensions on split surfaces come from the summand decomposition
``H^i = ⊕ H^i(𝔟 + k𝔢)``.  On chain surfaces the unisecant case is reduced
step by step to the anchor: a section class on ``S'`` is a pullback twisted
by fibers, and its sections are those of a class on ``S`` vanishing at the
blown-up point.  Whenever the model cannot say whether that point is a base
point the answer widens to an interval instead of guessing.

All quantifiers "for every point P" run over a finite :class:`Domain`.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from functools import lru_cache

from .curve_model import (DEFAULT_DOMAIN, DivisorClass, Domain, is_birational_curve, is_bpf,
                          is_generic_point, is_very_ample_curve, map_degree)
from .errors import InconsistentTable, NotBasePointFree, PreconditionViolation
from .surface import RuledSurface, intersect, NumClass
from .values import ExactOrInterval, Tri, interval_sum, tri_all, tri_any

FREE = "FreeOnGenerator"
POINT_ON_X0 = "PointOnX0"
POINT_ON_X1 = "PointOnX1"
SINGLE_POINT = "SinglePointUnlocated"
FIXED = "FixedGenerator"
UNKNOWN_KIND = "Unknown"


# dimensions -----------------------------------------------------------

def _summands(S: RuledSurface, m: int, b: DivisorClass):
    c = S.curve
    return [c.canon(b + k * S.e_class) for k in range(m + 1)]


def h_i_decomposable(S: RuledSurface, m: int, b: DivisorClass, i: int = 0) -> ExactOrInterval:
    """``h^i(mX0 + 𝔟f)`` on a split surface as the sum over the summands ``𝔟 + k𝔢``."""
    if S.decomposable is not Tri.TRUE:
        raise PreconditionViolation("summand formula needs a decomposable surface")
    if m < 0:
        raise PreconditionViolation("m must be non-negative")
    c = S.curve
    if i == 0:
        return interval_sum(c.h0(D) for D in _summands(S, m, b))
    if i == 1:
        return interval_sum(c.h1(D) for D in _summands(S, m, b))
    return ExactOrInterval.exact(0)


def euler_characteristic(S: RuledSurface, m: int, b: DivisorClass) -> int:
    g = S.genus
    return sum(D.degree - g + 1 for D in _summands(S, m, b))


def h_i_upper_bound(S: RuledSurface, m: int, b: DivisorClass, i: int = 1) -> ExactOrInterval:
    """``[0, Σ h^i(𝔟+k𝔢)]``, valid on any surface; exact 0 when every summand vanishes."""
    if i <= 0:
        raise PreconditionViolation("the summand bound is stated for i > 0")
    if i >= 2:
        return ExactOrInterval.exact(0)
    total = interval_sum(S.curve.h1(D) for D in _summands(S, m, b))
    return ExactOrInterval(0, total.hi, "summand bound")


def _general_bounds(S: RuledSurface, m: int, b: DivisorClass) -> ExactOrInterval:
    # h0 >= chi (h2 = 0) and h0 >= h0(𝔟) from sections through m·X0; the filtration bounds from above
    c = S.curve
    summ = _summands(S, m, b)
    hi = sum(c.h0(D).hi for D in summ)
    lo = max(0, euler_characteristic(S, m, b), c.h0(summ[0]).lo)
    if lo > hi:
        raise InconsistentTable(f"no h0 value for {m}X0 + ({b})f fits the summand bounds")
    return ExactOrInterval(lo, hi, "bounded by the summand filtration")


def _meet(a: ExactOrInterval, b: ExactOrInterval, what: str) -> ExactOrInterval:
    out = a.intersect(b)
    if out is None:
        raise InconsistentTable(f"incompatible dimension bounds for {what}: {a} vs {b}")
    return out


@lru_cache(maxsize=1 << 16)
def _h0_unisecant(S: RuledSurface, b: DivisorClass) -> ExactOrInterval:
    if S.decomposable is Tri.TRUE:
        return h_i_decomposable(S, 1, b, 0)
    bounds = _general_bounds(S, 1, b)
    if S.parent is None:
        return bounds
    rs = S.last_step
    T = S.parent
    c_T = T.curve.canon(b - rs.shift + DivisorClass.point(rs.point))
    h_T = _h0_unisecant(T, c_T)
    free = center_is_free(T, c_T, rs)
    minus = h_T.shift(-1).clamp_min(0)
    if free is Tri.TRUE:
        out = minus
    elif free is Tri.FALSE:
        out = h_T
    else:
        out = minus.hull(h_T)
        out = ExactOrInterval(out.lo, out.hi, f"base-point status of the center over {rs.point} undecided")
    return _meet(out, bounds, f"X0 + ({b})f")


def h0_chain(S: RuledSurface, b: DivisorClass) -> ExactOrInterval:
    """``h0(X0 + 𝔟f)`` by walking the transform chain back to its split anchor."""
    return _h0_unisecant(S, S.curve.canon(b))


def _curve_drop_free(c, D, P) -> Tri:
    return c.drop(D, P).eq(1)


def surface_drop(S: RuledSurface, b: DivisorClass, P: str) -> ExactOrInterval:
    """``h0(H) - h0(H - Pf)`` for ``H = X0 + 𝔟f``, kept inside [0, 2]."""
    d = h0(S, 1, b) - h0(S, 1, b.minus(P))
    out = d.intersect(ExactOrInterval(0, 2))
    if out is None:
        raise InconsistentTable(f"h0 drops by {d} along the generator over {P}")
    return out


def center_is_free(T: RuledSurface, c_T: DivisorClass, rs) -> Tri:
    """Whether the center of step ``rs`` (a point of ``T``) is not a base point of |X0 + c_T f|."""
    c = T.curve
    P = rs.point
    on_x0 = rs.case in ("x0", "min_section")
    if T.decomposable is Tri.TRUE:
        to_x0 = _curve_drop_free(c, c_T + T.e_class, P)
        to_x1 = _curve_drop_free(c, c_T, P)
        if on_x0:
            return to_x0
        if rs.case in ("x1", "x1_flip"):
            return to_x1
        return tri_any((to_x0, to_x1))
    if on_x0:
        restrict = c.drop(c_T + T.e_class, P)
        if c.h1(c_T).eq(0) is Tri.TRUE:
            # restriction to X0 is onto |c_T + 𝔢|
            return restrict.eq(1)
        if restrict.eq(0) is Tri.TRUE:
            return Tri.FALSE
    elif _curve_drop_free(c, c_T, P) is Tri.TRUE:
        # members X0 + (divisor of |c_T| missing P) avoid every point off X0
        return Tri.TRUE
    sd = surface_drop(T, c_T, P)
    if sd.eq(2) is Tri.TRUE:
        return Tri.TRUE
    if sd.eq(0) is Tri.TRUE:
        return Tri.FALSE
    return Tri.UNKNOWN


def h0(S: RuledSurface, m: int, b: DivisorClass) -> ExactOrInterval:
    """``h0(mX0 + 𝔟f)`` with the strongest available rule."""
    b = S.curve.canon(b)
    if m < 0:
        return ExactOrInterval.exact(0)
    if m == 0:
        return S.curve.h0(b)
    if S.decomposable is Tri.TRUE:
        return h_i_decomposable(S, m, b, 0)
    if m == 1:
        return h0_chain(S, b)
    return _general_bounds(S, m, b)


def h1(S: RuledSurface, m: int, b: DivisorClass) -> ExactOrInterval:
    """``h1 = h0 - χ`` since ``h2`` vanishes for m ≥ 0."""
    if m < 0:
        raise PreconditionViolation("h1 is only tracked for m >= 0")
    b = S.curve.canon(b)
    if m == 0:
        return S.curve.h1(b)
    if S.decomposable is Tri.TRUE:
        return h_i_decomposable(S, m, b, 1)
    out = h0(S, m, b).shift(-euler_characteristic(S, m, b)).clamp_min(0)
    return _meet(out, h_i_upper_bound(S, m, b, 1), f"h1({m}X0 + ({b})f)")


# base locus -----------------------------------------------------------

@dataclass(frozen=True)
class BaseLocusEntry:
    generator: str
    kind: str
    witness: dict = field(default_factory=dict, compare=False)

    def to_json(self):
        return {"generator": self.generator, "kind": self.kind, "witness": self.witness}


def _drop_json(iv: ExactOrInterval):
    return iv.to_json()


def _classify_split(drops) -> list:
    """Kinds on one generator of a split surface from the summand drops (k = 0..m)."""
    d0, dm = drops[0], drops[-1]
    if all(d.eq(0) is Tri.TRUE for d in drops):
        return [FIXED]
    if all(d.eq(1) is Tri.TRUE for d in (d0, dm)):
        return [FREE]
    kinds = []
    undecided = False
    for d, kind in ((dm, POINT_ON_X0), (d0, POINT_ON_X1)):
        if d.eq(0) is Tri.TRUE:
            kinds.append(kind)
        elif d.eq(1) is not Tri.TRUE:
            undecided = True
    if undecided:
        return [UNKNOWN_KIND]
    if len(kinds) == 2 and all(d.eq(0) is Tri.UNKNOWN for d in drops[1:-1]):
        return [UNKNOWN_KIND]
    return kinds


def base_locus(S: RuledSurface, m: int, b: DivisorClass, domain: Domain = DEFAULT_DOMAIN) -> list:
    c = S.curve
    b = c.canon(b)
    out = []
    if m < 1:
        raise PreconditionViolation("base locus classification needs m >= 1")
    if S.decomposable is Tri.TRUE:
        summ = _summands(S, m, b)
        for P in domain.points(c):
            drops = [c.drop(D, P) for D in summ]
            wit = {"summand_drops": [_drop_json(d) for d in drops]}
            for kind in _classify_split(drops):
                out.append(BaseLocusEntry(P, kind, wit))
        return out
    if m != 1:
        for P in domain.points(c):
            out.append(BaseLocusEntry(P, UNKNOWN_KIND, {"reason": "no criterion for m-secant systems on non-split surfaces"}))
        return out
    nonspecial = c.h1(b).eq(0)
    for P in domain.points(c):
        sd = surface_drop(S, b, P)
        wit = {"surface_drop": sd.to_json()}
        kind = None
        if nonspecial is Tri.TRUE:
            d_b, d_be = c.drop(b, P), c.drop(b + S.e_class, P)
            wit.update({"drop_b": d_b.to_json(), "drop_b_plus_e": d_be.to_json()})
            if d_b.eq(1) is Tri.TRUE:
                if d_be.eq(1) is Tri.TRUE:
                    kind = FREE
                elif d_be.eq(0) is Tri.TRUE:
                    kind = POINT_ON_X0
        if kind is None:
            kind = {2: FREE, 1: SINGLE_POINT, 0: FIXED}[sd.lo] if sd.is_exact else UNKNOWN_KIND
        out.append(BaseLocusEntry(P, kind, wit))
    return out


def bpf_from_base_locus(entries) -> Tri:
    return tri_all(Tri.TRUE if e.kind == FREE else Tri.UNKNOWN if e.kind == UNKNOWN_KIND
                   else Tri.FALSE for e in entries)


def is_bpf_surface(S: RuledSurface, m: int, b: DivisorClass, domain: Domain = DEFAULT_DOMAIN) -> Tri:
    return bpf_from_base_locus(base_locus(S, m, b, domain))


# irreducibility ---------------------------------------------------------

def generic_member_irreducible(S: RuledSurface, b: DivisorClass, domain: Domain = DEFAULT_DOMAIN) -> Tri:
    """Whether |X0 + 𝔟f| contains an irreducible member (a section)."""
    c = S.curve
    b = c.canon(b)
    be = c.canon(b + S.e_class)
    if S.decomposable is Tri.TRUE:
        special = tri_any((c.is_trivial(b), c.is_trivial(be)))
        both_eff = tri_all((c.h0(b).ge(1), c.h0(be).ge(1)))
        common = tri_any(tri_all((c.drop(b, P).eq(0), c.drop(be, P).eq(0)))
                         for P in domain.points(c))
        return tri_any((special, tri_all((both_eff, common.negate()))))

    # sufficient: both effective, no common base point, 𝔟 nonspecial
    suff = tri_all((c.h0(b).ge(1), c.h0(be).ge(1), c.h1(b).eq(0),
                    tri_all(tri_any((c.drop(b, P).eq(1), c.drop(be, P).eq(1)))
                            for P in domain.points(c))))
    if suff is Tri.TRUE:
        return Tri.TRUE
    h = h0(S, 1, b)
    if h.eq(0) is Tri.TRUE:
        return Tri.FALSE
    minus = {P: h0(S, 1, b.minus(P)) for P in domain.points(c)}
    one = tri_all([h.eq(1)] + [v.eq(0) for v in minus.values()])
    generic = [P for P in domain.points(c) if is_generic_point(P)]
    two = tri_all([h.gt(1)]
                  + [(h - v).ge(1) for v in minus.values()]
                  + [(h - minus[P]).eq(2) for P in generic])
    return tri_any((one, two))


# very ampleness ---------------------------------------------------------

@dataclass(frozen=True)
class Verdict:
    value: Tri
    criterion: str

    def to_json(self):
        return {"value": self.value.value, "criterion": self.criterion}


def very_ample_verdict(S: RuledSurface, m: int, b: DivisorClass, domain: Domain = DEFAULT_DOMAIN) -> Verdict:
    c = S.curve
    b = c.canon(b)
    if m < 1:
        return Verdict(Tri.FALSE, "fiber classes contract the generators")
    e = S.e_class
    if S.decomposable is Tri.TRUE:
        if m == 1:
            v = tri_all((is_very_ample_curve(c, b, domain), is_very_ample_curve(c, b + e, domain)))
            return Verdict(v, "split unisecant: 𝔟 and 𝔟+𝔢 very ample")
        bpf_parts = [b, b + e, b + (m - 1) * e, b + m * e]
        v = tri_all([is_bpf(c, D, domain) for D in bpf_parts]
                    + [is_very_ample_curve(c, b, domain), is_very_ample_curve(c, b + m * e, domain)])
        return Verdict(v, "split m-secant: bpf summands and very ample 𝔟, 𝔟+m𝔢")
    if m != 1:
        return Verdict(Tri.UNKNOWN, "no criterion for m-secant systems on non-split surfaces")
    suff = tri_all((c.h1(b).eq(0), is_very_ample_curve(c, b, domain),
                    is_very_ample_curve(c, b + e, domain)))
    if suff is Tri.TRUE:
        return Verdict(Tri.TRUE, "nonspecial 𝔟 with 𝔟 and 𝔟+𝔢 very ample")
    h = h0(S, 1, b)
    v = tri_all((h - h0(S, 1, b - DivisorClass.point(P) - DivisorClass.point(Q))).eq(4)
                for P, Q in domain.pairs(c))
    return Verdict(v, "h0(H-(P+Q)f) = h0(H) - 4 over the domain")


def is_very_ample_surface(S: RuledSurface, m: int, b: DivisorClass, domain: Domain = DEFAULT_DOMAIN) -> Tri:
    return very_ample_verdict(S, m, b, domain).value


# isomorphism locus ------------------------------------------------------

@dataclass(frozen=True)
class KComponent:
    """Piece of the locus where the map fails to be an isomorphism."""

    kind: str  # "section", "point", "generator", "unlocated", "unknown"
    generator: str | None = None
    section: str | None = None
    witness: dict = field(default_factory=dict, compare=False)

    def to_json(self):
        out = {"kind": self.kind}
        if self.generator is not None:
            out["generator"] = self.generator
        if self.section is not None:
            out["section"] = self.section
        if self.witness:
            out["witness"] = self.witness
        return out


@dataclass(frozen=True)
class IsomorphismLocus:
    components: tuple
    empty: Tri
    bound: str | None
    domain: str

    def contains_section(self, name: str) -> bool:
        return any(k.kind == "section" and k.section == name for k in self.components)

    def to_json(self):
        return {
            "empty": self.empty.value,
            "contained_in": self.bound,
            "domain": self.domain,
            "components": [k.to_json() for k in self.components],
        }


def _k_bound(S, b, domain):
    if S.decomposable is not Tri.TRUE:
        return None
    c = S.curve
    va_b = is_very_ample_curve(c, b, domain)
    va_be = is_very_ample_curve(c, b + S.e_class, domain)
    if va_b is Tri.TRUE and va_be is Tri.TRUE:
        return "empty"
    if va_b is Tri.TRUE and is_bpf(c, b + S.e_class, domain) is Tri.TRUE:
        return "X0"
    if va_be is Tri.TRUE and is_bpf(c, b, domain) is Tri.TRUE:
        return "X1"
    return None


def isomorphism_locus(S: RuledSurface, H, domain: Domain = DEFAULT_DOMAIN) -> IsomorphismLocus:
    """Points x that are base points of |H - Pf| for some P in the domain."""
    if H.m != 1:
        raise PreconditionViolation("isomorphism locus is computed for unisecant systems")
    c = S.curve
    b = c.canon(H.b)
    if is_bpf_surface(S, 1, b, domain) is not Tri.TRUE:
        raise NotBasePointFree("|H| must be base-point-free")
    comps: list = []
    seen = set()

    def add(k: KComponent):
        key = (k.kind, k.generator, k.section)
        if key not in seen:
            seen.add(key)
            comps.append(k)

    for P in domain.points(c):
        bp = b.minus(P)
        for entry in base_locus(S, 1, bp, domain):
            Q = entry.generator
            wit = {"P": P, "Q": Q, **entry.witness}
            generic_q = is_generic_point(Q)
            if entry.kind == FREE:
                continue
            if entry.kind in (POINT_ON_X0, POINT_ON_X1):
                sec = "X0" if entry.kind == POINT_ON_X0 else "X1"
                if generic_q:
                    add(KComponent("section", section=sec, witness=wit))
                else:
                    add(KComponent("point", Q, sec, wit))
            elif entry.kind == FIXED:
                if generic_q:
                    add(KComponent("surface", witness=wit))
                else:
                    add(KComponent("generator", Q, witness=wit))
            elif entry.kind == SINGLE_POINT:
                add(KComponent("unlocated", Q, witness=wit))
            else:
                add(KComponent("unknown", Q, witness=wit))
    # points already covered by a whole section are dropped
    whole = {k.section for k in comps if k.kind == "section"}
    comps = [k for k in comps if not (k.kind == "point" and k.section in whole)]
    if not comps:
        empty = Tri.TRUE
    elif all(k.kind == "unknown" for k in comps):
        empty = Tri.UNKNOWN
    else:
        empty = Tri.FALSE
    return IsomorphismLocus(tuple(comps), empty, _k_bound(S, b, domain), domain.label)


def point_in_k(S: RuledSurface, H, step, domain: Domain = DEFAULT_DOMAIN) -> Tri:
    """Whether the point described by an elementary-transform step lies in K."""
    from .elm_engine import Position

    K = isomorphism_locus(S, H, domain)
    P = step.point
    pos = step.position
    if pos in (Position.ON_X0, Position.ON_MIN_SECTION):
        where = "X0"
    elif pos is Position.ON_X1:
        where = "X1"
    else:
        where = None
    gen_names = {P, "*"} if is_generic_point(P) else {P}
    verdict = Tri.FALSE
    for k in K.components:
        if k.kind == "surface":
            return Tri.TRUE
        if k.kind == "section" and where == k.section:
            return Tri.TRUE
        if k.generator in gen_names:
            if k.kind == "generator":
                return Tri.TRUE
            if k.kind == "point":
                if where == k.section:
                    return Tri.TRUE
                if where is None and pos is Position.UNKNOWN:
                    verdict = Tri.UNKNOWN
            elif k.kind in ("unlocated", "unknown"):
                verdict = Tri.UNKNOWN
    return verdict


# singularities ----------------------------------------------------------

@dataclass(frozen=True)
class SingularityEntry:
    kind: str
    points: tuple = ()
    section: str | None = None
    multiplicity: int | None = None
    witness: dict = field(default_factory=dict, compare=False)

    def label(self) -> str:
        args = [*(self.section and [self.section] or []), *self.points]
        if self.multiplicity is not None:
            args.append(str(self.multiplicity))
        return f"{self.kind}({', '.join(args)})"

    def to_json(self):
        out = {"kind": self.kind, "label": self.label()}
        if self.points:
            out["points"] = list(self.points)
        if self.section is not None:
            out["section"] = self.section
        if self.multiplicity is not None:
            out["multiplicity"] = self.multiplicity
        out["witness"] = self.witness
        return out


@dataclass(frozen=True)
class SingularityReport:
    entries: tuple
    birational: Tri
    undecided: tuple
    domain: str

    def kinds(self) -> set:
        return {e.kind for e in self.entries}

    def labels(self) -> list:
        return [e.label() for e in self.entries]

    def to_json(self):
        return {
            "birational": self.birational.value,
            "domain": self.domain,
            "entries": [e.to_json() for e in self.entries],
            "undecided": list(self.undecided),
        }


def singularity_report(S: RuledSurface, H, domain: Domain = DEFAULT_DOMAIN) -> SingularityReport:
    """Singularities of the scroll image read off the h0 drop patterns at P+Q and 2P."""
    if S.decomposable is not Tri.TRUE:
        raise PreconditionViolation("singularity taxonomy is implemented for split surfaces")
    if H.m != 1:
        raise PreconditionViolation("singularity taxonomy needs a unisecant system")
    c = S.curve
    b = c.canon(H.b)
    be = c.canon(b + S.e_class)
    if is_bpf_surface(S, 1, b, domain) is not Tri.TRUE:
        raise NotBasePointFree("|H| must be base-point-free")
    h = h0(S, 1, b)
    entries: list = []
    undecided: list = []

    directrix = {"X0": be, "X1": b}
    birat = {}
    for sec, D in directrix.items():
        bir = is_birational_curve(c, D)
        birat[sec] = bir
        if bir is Tri.FALSE:
            entries.append(SingularityEntry(
                "MultipleDirectrixImage", (), sec, map_degree(c, D),
                {"class": str(D), "h0": c.h0(D).to_json(),
                 "map": "constant" if c.h0(D).eq(1) is Tri.TRUE else "not birational"}))

    for P, Q in domain.pairs(c):
        if is_generic_point(P) or is_generic_point(Q):
            continue
        d1, d0 = c.drop2(b, P, Q), c.drop2(be, P, Q)
        drop = d1 + d0
        same = P == Q
        wit = {"h0_H": h.to_json(), "drop": (0 - drop).to_json(),
               "drop_on_X1": d1.to_json(), "drop_on_X0": d0.to_json()}
        if drop.eq(4) is Tri.TRUE:
            continue
        if not drop.is_exact:
            undecided.append(f"{P}+{Q}")
            continue
        pts = (P,) if same else (P, Q)
        if drop.value == 3:
            entries.append(SingularityEntry("TorsalGenerator" if same else "GeneratorsMeet", pts,
                                            witness=wit))
            for sec, dd in (("X0", d0), ("X1", d1)):
                if dd.eq(1) is Tri.TRUE and birat[sec] is not Tri.FALSE:
                    entries.append(SingularityEntry("IsolatedOnDirectrix", pts, sec, witness=wit))
        elif drop.value <= 2:
            entries.append(SingularityEntry("InfinitelyNearDouble" if same else "DoubleGenerator", pts,
                                            witness=wit))

    # φ_H fails to be birational only when every pair of generators is glued
    gen = c.drop2(b, "*", "*2") + c.drop2(be, "*", "*2")
    if gen.le(2) is Tri.TRUE:
        bir = Tri.FALSE
    elif gen.ge(3) is Tri.TRUE:
        bir = Tri.TRUE
    else:
        bir = Tri.UNKNOWN
    return SingularityReport(tuple(entries), bir, tuple(undecided), domain.label)


# full report ------------------------------------------------------------

@dataclass(frozen=True)
class LinearSystemReport:
    m: int
    b: DivisorClass
    h0: ExactOrInterval
    h1: ExactOrInterval
    degree: int | None
    base_locus: tuple
    generic_member_irreducible: Tri
    bpf: Tri
    very_ample: Verdict
    domain: str

    def to_json(self):
        return {
            "system": {"m": self.m, "b": str(self.b)},
            "h0": self.h0.to_json(),
            "h1": self.h1.to_json(),
            "N": (self.h0 - 1).to_json(),
            "degree": self.degree,
            "base_locus": [e.to_json() for e in self.base_locus if e.kind != FREE],
            "generic_member_irreducible": self.generic_member_irreducible.value,
            "bpf": self.bpf.value,
            "very_ample": self.very_ample.to_json(),
            "quantifier_domain": self.domain,
        }


def classify(S: RuledSurface, m: int, b: DivisorClass, domain: Domain = DEFAULT_DOMAIN) -> LinearSystemReport:
    b = S.curve.canon(b)
    bl = tuple(base_locus(S, m, b, domain))
    bpf = bpf_from_base_locus(bl)
    va = very_ample_verdict(S, m, b, domain)
    if va.value is Tri.TRUE and bpf is not Tri.TRUE:
        raise InconsistentTable("very ample verdict without a base-point-free system")
    irr = generic_member_irreducible(S, b, domain) if m == 1 else Tri.UNKNOWN
    deg = intersect(S, NumClass(m, b.degree), NumClass(m, b.degree))
    return LinearSystemReport(m, b, h0(S, m, b), h1(S, m, b), deg, bl, irr, bpf, va, domain.label)
