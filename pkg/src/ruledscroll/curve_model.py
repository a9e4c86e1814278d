"""Base curve model: formal divisor classes and an h⁰/h¹ oracle.

A divisor class is a formal integer combination of named points plus an
optional *residual* summand of given degree standing for an unnamed
generic divisor.  Point names starting with ``*`` denote independent
general points of the curve; they are what the quantifier domain uses in
place of "all points".

Linear equivalence is never inferred.  The only identifications made are
the ones declared as aliases, which are applied as rewrite rules.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from enum import Enum
from typing import Iterable, Mapping

from .errors import InconsistentTable, ScenarioError
from .values import ExactOrInterval, Tri, tri_all

GENERIC_PREFIX = "*"
NON_EFFECTIVE_NOTE = "generic non-effective extension"


def is_generic_point(name: str) -> bool:
    return name.startswith(GENERIC_PREFIX)


class Effectivity(Enum):
    EFFECTIVE = "Effective"
    NOT_EFFECTIVE = "NotEffective"
    UNKNOWN = "Unknown"


def _combine_residual(r1, e1, r2, e2):
    if r1 == 0:
        return r2, e2
    if r2 == 0:
        return r1, e1
    if Effectivity.UNKNOWN in (e1, e2):
        return r1 + r2, Effectivity.UNKNOWN
    if e1 is e2 is Effectivity.EFFECTIVE:
        return r1 + r2, Effectivity.EFFECTIVE
    return r1 + r2, Effectivity.NOT_EFFECTIVE


@dataclass(frozen=True)
class DivisorClass:
    """Formal class ``Σ n_P·P + R`` with ``R`` a generic summand of degree ``residual_degree``.

    For a nonzero residual the effectivity describes that summand:
    ``EFFECTIVE`` means a generic effective divisor (equivalently that many
    general points, subtracted when the degree is negative),
    ``NOT_EFFECTIVE`` means a general line bundle of that degree and
    ``UNKNOWN`` carries no genericity information.  Classes without a
    residual are marked effective exactly when every coefficient is
    non-negative.
    """

    named_coeffs: tuple = ()
    residual_degree: int = 0
    effectivity: Effectivity = Effectivity.UNKNOWN

    def __post_init__(self):
        coeffs = self.named_coeffs
        if isinstance(coeffs, Mapping):
            coeffs = coeffs.items()
        merged: dict[str, int] = {}
        for name, n in coeffs:
            merged[name] = merged.get(name, 0) + int(n)
        norm = tuple(sorted((p, n) for p, n in merged.items() if n != 0))
        object.__setattr__(self, "named_coeffs", norm)
        if self.residual_degree == 0:
            eff = (Effectivity.EFFECTIVE if all(n > 0 for _, n in norm)
                   else Effectivity.UNKNOWN)
            object.__setattr__(self, "effectivity", eff)

    @classmethod
    def zero(cls) -> "DivisorClass":
        return cls()

    @classmethod
    def point(cls, name: str, k: int = 1) -> "DivisorClass":
        return cls(((name, k),))

    @classmethod
    def generic(cls, degree: int, effective: bool | None = True) -> "DivisorClass":
        eff = {True: Effectivity.EFFECTIVE, False: Effectivity.NOT_EFFECTIVE,
               None: Effectivity.UNKNOWN}[effective]
        return cls((), degree, eff)

    @property
    def degree(self) -> int:
        return self.residual_degree + sum(n for _, n in self.named_coeffs)

    @property
    def is_zero(self) -> bool:
        return not self.named_coeffs and self.residual_degree == 0

    def coeff(self, name: str) -> int:
        for p, n in self.named_coeffs:
            if p == name:
                return n
        return 0

    def coeff_map(self) -> dict:
        return dict(self.named_coeffs)

    @property
    def definitely_effective(self) -> bool:
        if any(n < 0 for _, n in self.named_coeffs):
            return False
        if self.residual_degree == 0:
            return True
        return self.residual_degree > 0 and self.effectivity is Effectivity.EFFECTIVE

    def __add__(self, other: "DivisorClass") -> "DivisorClass":
        r, eff = _combine_residual(self.residual_degree, self.effectivity,
                                   other.residual_degree, other.effectivity)
        return DivisorClass(self.named_coeffs + other.named_coeffs, r, eff)

    def __neg__(self) -> "DivisorClass":
        return DivisorClass(tuple((p, -n) for p, n in self.named_coeffs),
                            -self.residual_degree, self.effectivity)

    def __sub__(self, other: "DivisorClass") -> "DivisorClass":
        return self + (-other)

    def __mul__(self, k: int) -> "DivisorClass":
        if k == 0:
            return DivisorClass()
        return DivisorClass(tuple((p, k * n) for p, n in self.named_coeffs),
                            k * self.residual_degree, self.effectivity)

    __rmul__ = __mul__

    def plus(self, name: str, k: int = 1) -> "DivisorClass":
        return self + DivisorClass.point(name, k)

    def minus(self, name: str, k: int = 1) -> "DivisorClass":
        return self + DivisorClass.point(name, -k)

    def without_generic(self):
        """Split into (named part without general points or residual, general-point part)."""
        named = tuple((p, n) for p, n in self.named_coeffs if not is_generic_point(p))
        gen = tuple((p, n) for p, n in self.named_coeffs if is_generic_point(p))
        return DivisorClass(named), gen

    def __str__(self):
        parts = []
        for p, n in self.named_coeffs:
            if n == 1:
                parts.append(f"+ {p}")
            elif n == -1:
                parts.append(f"- {p}")
            else:
                parts.append(f"{'+' if n > 0 else '-'} {abs(n)}{p}")
        if self.residual_degree:
            tag = {Effectivity.EFFECTIVE: "eff", Effectivity.NOT_EFFECTIVE: "gen",
                   Effectivity.UNKNOWN: "?"}[self.effectivity]
            r = self.residual_degree
            parts.append(f"{'+' if r > 0 else '-'} R{abs(r)}{tag}")
        if not parts:
            return "0"
        text = " ".join(parts)
        return text[2:] if text.startswith("+ ") else "-" + text[2:]

    def to_json(self):
        out = {"coeffs": dict(self.named_coeffs), "residual": self.residual_degree}
        if self.residual_degree:
            out["effectivity"] = self.effectivity.value
        return out


@dataclass(frozen=True)
class Domain:
    """Finite quantifier domain: named points, optionally plus symbolic general points."""

    generic: bool = True

    @property
    def label(self) -> str:
        return "named+generic" if self.generic else "named"

    def points(self, curve: "CurveModel") -> tuple:
        pts = tuple(curve.points)
        return pts + ("*",) if self.generic else pts

    def pairs(self, curve: "CurveModel") -> list:
        pts = tuple(curve.points)
        out = [(p, q) for i, p in enumerate(pts) for q in pts[i:]]
        if self.generic:
            out += [(p, "*") for p in pts]
            out += [("*", "*"), ("*", "*2")]
        return out


DEFAULT_DOMAIN = Domain(True)


class CurveModel:
    """Curve of genus ``g`` with named points, tabulated h⁰ values and aliases.

    Treat instances as immutable; the only internal state that changes
    after construction is a memo table of h⁰ answers.
    """

    def __init__(self, genus: int, points: Iterable[str] = (), h0_table=None,
                 effectivity_flags=None, aliases: Iterable = (), canonical=None,
                 class_names=None):
        if genus < 0:
            raise ScenarioError("genus must be non-negative")
        self.genus = int(genus)
        self.points = tuple(points)
        for p in self.points:
            if is_generic_point(p):
                raise ScenarioError(f"named point {p!r} uses the reserved prefix '*'")
        if len(set(self.points)) != len(self.points):
            raise ScenarioError("duplicate point names")
        self.canonical_degree = 2 * self.genus - 2
        self.class_names = dict(class_names or {})
        self._subs: list = []
        self.aliases = tuple(aliases)
        self.residual_aliases = []
        for lhs, rhs in self.aliases:
            self._add_alias(lhs, rhs)
        if canonical is None and self.genus == 1:
            canonical = DivisorClass.zero()
        self.canonical = self.canon(canonical) if canonical is not None else None
        if self.canonical is not None and self.canonical.degree != self.canonical_degree:
            raise ScenarioError("canonical class has the wrong degree")
        self.h0_table = {}
        for cls, val in (h0_table or {}).items():
            key = self.canon(cls)
            if key in self.h0_table and self.h0_table[key] != val:
                raise InconsistentTable(f"conflicting tabulated h0 for {key}")
            self.h0_table[key] = int(val)
        self.effectivity_flags = {self.canon(c): bool(v)
                                  for c, v in (effectivity_flags or {}).items()}
        self._memo: dict = {}

    # alias rewriting -------------------------------------------------

    def _reduce(self, coeffs: dict) -> dict:
        for pivot, rep in self._subs:
            k = coeffs.pop(pivot, 0)
            if k:
                for q, c in rep.items():
                    coeffs[q] = coeffs.get(q, 0) + k * c
        return {p: n for p, n in coeffs.items() if n}

    def _add_alias(self, lhs: DivisorClass, rhs: DivisorClass):
        if lhs.residual_degree != rhs.residual_degree:
            self.residual_aliases.append((lhs, rhs))
            return
        if lhs.degree != rhs.degree:
            raise ScenarioError(f"alias {lhs} ~ {rhs} relates classes of different degree")
        rel = lhs.coeff_map()
        for p, n in rhs.named_coeffs:
            rel[p] = rel.get(p, 0) - n
        rel = self._reduce({p: n for p, n in rel.items() if n})
        if not rel:
            return
        order = [p for p in self.points if p in rel]
        in_lhs = [p for p in order if lhs.coeff(p) != 0]
        pivot = next((p for p in in_lhs + order if abs(rel[p]) == 1), None)
        if pivot is None:
            raise ScenarioError(f"alias {lhs} ~ {rhs} has no unit coefficient to rewrite on")
        c = rel[pivot]
        rep = {q: -n * c for q, n in rel.items() if q != pivot}
        new_subs = []
        for piv, old in self._subs:
            k = old.pop(pivot, 0)
            if k:
                for q, n in rep.items():
                    old[q] = old.get(q, 0) + k * n
            new_subs.append((piv, {q: n for q, n in old.items() if n}))
        new_subs.append((pivot, rep))
        self._subs = new_subs

    def canon(self, D: DivisorClass) -> DivisorClass:
        """Rewrite ``D`` with the declared aliases into its canonical representative."""
        if not self._subs:
            return D
        coeffs = self._reduce(D.coeff_map())
        return DivisorClass(tuple(coeffs.items()), D.residual_degree, D.effectivity)

    def same_class(self, A: DivisorClass, B: DivisorClass) -> bool:
        return self.canon(A) == self.canon(B)

    def named(self, name: str) -> DivisorClass:
        try:
            return self.class_names[name]
        except KeyError:
            raise ScenarioError(f"unknown divisor class {name!r}") from None

    # h0 oracle --------------------------------------------------------

    def h0(self, D: DivisorClass) -> ExactOrInterval:
        return self._h0(self.canon(D), True)

    def _h0(self, D: DivisorClass, use_dual: bool) -> ExactOrInterval:
        key = (D, use_dual)
        hit = self._memo.get(key)
        if hit is None:
            hit = self._compute_h0(D, use_dual)
            self._memo[key] = hit
        return hit

    def _forced(self, D: DivisorClass):
        g, d = self.genus, D.degree
        if d < 0:
            return 0
        if d > 2 * g - 2:
            return d - g + 1
        if D.is_zero:
            return 1
        if self.canonical is not None and D == self.canonical:
            return g
        return None

    def _widest(self, D: DivisorClass) -> ExactOrInterval:
        g, d = self.genus, D.degree
        lo, hi = max(0, d - g + 1), d // 2 + 1
        flag = self.effectivity_flags.get(D)
        if D.definitely_effective or flag is True:
            lo = max(lo, 1)
        if flag is False:
            hi = 0
        if lo > hi:
            raise InconsistentTable(f"no h0 value is consistent for {D}")
        return ExactOrInterval(lo, hi, f"h0({D}) not determined by the model")

    def _compute_h0(self, D: DivisorClass, use_dual: bool) -> ExactOrInterval:
        g, d = self.genus, D.degree
        forced = self._forced(D)
        tab = self.h0_table.get(D)
        if tab is not None:
            if forced is not None and forced != tab:
                raise InconsistentTable(f"tabulated h0({D})={tab} contradicts forced value {forced}")
            return ExactOrInterval.exact(tab)
        if forced is not None:
            return ExactOrInterval.exact(forced)

        if g >= 1 and d == 0 and not D.residual_degree and self._is_point_difference(D):
            # distinct points are never linearly equivalent in positive genus
            return ExactOrInterval.exact(0)
        if D.residual_degree and D.effectivity is Effectivity.NOT_EFFECTIVE:
            return ExactOrInterval.exact(max(0, d - g + 1), NON_EFFECTIVE_NOTE)
        widest = self._widest(D)
        if D.residual_degree and D.effectivity is Effectivity.UNKNOWN:
            return widest

        base, gen = D.without_generic()
        added = sum(n for _, n in gen if n > 0)
        removed = -sum(n for _, n in gen if n < 0)
        if D.residual_degree > 0:
            added += D.residual_degree
        elif D.residual_degree < 0:
            removed -= D.residual_degree
        if added or removed:
            h = self._h0(base, use_dual)
            deg = base.degree
            for _ in range(added):
                c = deg - g + 1

                def bump(v, c=c):
                    return v + 1 if v - c == 0 else v
                h = h.map_monotone(bump)
                deg += 1
            if removed:
                h = h.shift(-removed).clamp_min(0)
            out = h.intersect(widest)
            if out is None:
                raise InconsistentTable(f"general-point rule contradicts bounds for {D}")
            return out

        result = widest
        if use_dual and self.canonical is not None and g >= 1:
            dual = self._h0(self.canon(self.canonical - D), False).shift(d - g + 1)
            result = self._meet(result, dual, D)
        for P in self.points:
            t = self.h0_table.get(self.canon(D.minus(P)))
            if t is not None:
                result = self._meet(result, ExactOrInterval(t, t + 1), D)
            t = self.h0_table.get(self.canon(D.plus(P)))
            if t is not None:
                result = self._meet(result, ExactOrInterval(max(0, t - 1), t), D)
        return result

    def _is_point_difference(self, D: DivisorClass) -> bool:
        if sorted(n for _, n in D.named_coeffs) == [-1, 1]:
            return True
        if not self._subs:
            return False
        return any(self.canon(DivisorClass(((x, 1), (y, -1)))) == D
                   for x in self.points for y in self.points if x != y)

    @staticmethod
    def _meet(a, b, D):
        out = a.intersect(b)
        if out is None:
            raise InconsistentTable(f"table entries force incompatible values of h0({D})")
        return out

    def h1(self, D: DivisorClass) -> ExactOrInterval:
        D = self.canon(D)
        h = self.h0(D)
        return h.shift(-(D.degree - self.genus + 1)).clamp_min(0)

    # point conditions -------------------------------------------------

    def drop(self, D: DivisorClass, P: str) -> ExactOrInterval:
        """Interval for ``h0(D) - h0(D-P)``, always inside [0, 1]."""
        D = self.canon(D)
        h = self.h0(D)
        if is_generic_point(P) and D.coeff(P) <= 0:
            # a general point is never a base point of a nonempty system
            return ExactOrInterval(1 if h.lo >= 1 else 0, 1 if h.hi >= 1 else 0)
        diff = h - self.h0(D.minus(P))
        out = diff.intersect(ExactOrInterval(0, 1))
        if out is None:
            raise InconsistentTable(f"h0 drops by more than one from {D} to {D.minus(P)}")
        return out

    def drop2(self, D: DivisorClass, P: str, Q: str) -> ExactOrInterval:
        return self.drop(D, P) + self.drop(D.minus(P), Q)

    def is_trivial(self, D: DivisorClass) -> Tri:
        """Whether ``D`` is linearly equivalent to 0 (degree 0 with a section)."""
        D = self.canon(D)
        if D.degree != 0:
            return Tri.FALSE
        if D.is_zero:
            return Tri.TRUE
        return self.h0(D).eq(1)


def h0(c: CurveModel, D: DivisorClass) -> ExactOrInterval:
    return c.h0(D)


def h1(c: CurveModel, D: DivisorClass) -> ExactOrInterval:
    return c.h1(D)


def is_base_point(c: CurveModel, D: DivisorClass, P: str) -> Tri:
    h = c.h0(D)
    if h.eq(0) is Tri.TRUE:
        return Tri.FALSE
    d = c.drop(D, P)
    if d.eq(1) is Tri.TRUE:
        return Tri.FALSE
    if d.eq(0) is Tri.TRUE and h.lo > 0:
        return Tri.TRUE
    return Tri.UNKNOWN


def is_bpf(c: CurveModel, D: DivisorClass, domain: Domain = DEFAULT_DOMAIN) -> Tri:
    g, deg = c.genus, D.degree
    h = c.h0(D)
    if deg >= 2 * g:
        return Tri.TRUE
    if h.hi == 0:
        return Tri.FALSE
    if g >= 1 and deg >= 1 and h.eq(1) is Tri.TRUE:
        return Tri.FALSE
    return tri_all(c.drop(D, P).eq(1) for P in domain.points(c))


def is_very_ample_curve(c: CurveModel, D: DivisorClass, domain: Domain = DEFAULT_DOMAIN) -> Tri:
    g, deg = c.genus, D.degree
    h = c.h0(D)
    if deg >= 2 * g + 1:
        return Tri.TRUE
    if h.hi <= 1 or (g >= 1 and h.hi <= 2):
        return Tri.FALSE
    if 1 <= g <= 2 and deg == 2 * g:
        # D - K has degree 2 >= g, so D = K + P + Q for some points P, Q
        return Tri.FALSE
    return tri_all(c.drop2(D, P, Q).eq(2) for P, Q in domain.pairs(c))


def is_birational_curve(c: CurveModel, D: DivisorClass) -> Tri:
    """Whether the map given by a base-point-free ``D`` is birational onto its image."""
    if is_very_ample_curve(c, D) is Tri.TRUE:
        return Tri.TRUE
    h = c.h0(D)
    if h.hi <= 1:
        return Tri.FALSE
    if c.genus >= 1 and h.hi <= 2:
        return Tri.FALSE
    # a k:1 map lands on a nondegenerate curve of degree deg/k >= h0 - 1
    if h.lo >= 2 and D.degree < 2 * (h.lo - 1):
        return Tri.TRUE
    return Tri.UNKNOWN


def map_degree(c: CurveModel, D: DivisorClass):
    """Degree of the map given by a base-point-free ``D`` when it can be read off."""
    if is_birational_curve(c, D) is Tri.TRUE:
        return 1
    if c.h0(D).eq(2) is Tri.TRUE:
        return D.degree
    return None


def validate(c: CurveModel) -> list:
    """Violations of the curve invariants on the tabulated entries (empty when consistent)."""
    g = c.genus
    out = []
    for D, h in sorted(c.h0_table.items(), key=lambda kv: str(kv[0])):
        d = D.degree
        h1v = h - (d - g + 1)
        if d < 0 and h != 0:
            out.append(f"negative degree: h0({D})={h} but deg={d}")
        if h1v < 0:
            out.append(f"Riemann-Roch: h0({D})={h} gives h1={h1v} < 0")
        if d > 2 * g - 2 and h1v > 0:
            out.append(f"Riemann-Roch: h1({D})={h1v} > 0 in degree {d} > 2g-2")
        if d >= 0 and h1v > 0 and h > 0 and 2 * h > d + 2:
            out.append(f"Clifford: special h0({D})={h} exceeds deg/2+1")
        if D.is_zero and h != 1:
            out.append(f"trivial class must have h0=1, table says {h}")
        if c.canonical is not None and D == c.canonical and h != g:
            out.append(f"canonical class must have h0=g={g}, table says {h}")
        for P in c.points:
            t = c.h0_table.get(c.canon(D.minus(P)))
            if t is not None and not 0 <= h - t <= 1:
                out.append(f"point drop: h0({D})={h}, h0({D.minus(P)})={t}")
    for D, flag in sorted(c.effectivity_flags.items(), key=lambda kv: str(kv[0])):
        t = c.h0_table.get(D)
        if t is not None and flag != (t > 0):
            out.append(f"effectivity flag for {D} contradicts h0={t}")
        if flag and D.degree < 0:
            out.append(f"negative degree: {D} flagged effective")
    if not out:
        try:
            for D in list(c.h0_table):
                c.h0(D)
                for P in c.points:
                    c.h0(D.minus(P))
        except InconsistentTable as exc:
            out.append(f"inconsistent closure: {exc}")
    return out
