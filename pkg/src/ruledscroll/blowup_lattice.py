"""Integer intersection lattices of blow-ups, used as an independent oracle.

Classes are integer vectors over a named basis with an explicit Gram
matrix.  Nothing here knows the closed-form elementary transformation
rules: the transformed intersection is recomputed by blowing up, taking
strict transforms and contracting the strict transform of the fiber.
"""

from __future__ import annotations

from dataclasses import dataclass

from .surface import NumClass


@dataclass(frozen=True)
class GramLattice:
    names: tuple
    gram: tuple  # rows of a symmetric integer matrix

    def __post_init__(self):
        n = len(self.names)
        assert len(self.gram) == n and all(len(r) == n for r in self.gram)
        assert all(self.gram[i][j] == self.gram[j][i] for i in range(n) for j in range(n))

    def vec(self, **coeffs) -> tuple:
        unknown = set(coeffs) - set(self.names)
        if unknown:
            raise KeyError(f"unknown basis vectors {sorted(unknown)}")
        return tuple(coeffs.get(nm, 0) for nm in self.names)

    def dot(self, u, v) -> int:
        return sum(u[i] * self.gram[i][j] * v[j]
                   for i in range(len(u)) if u[i] for j in range(len(v)) if v[j])


def _add(u, v, k=1):
    return tuple(a + k * b for a, b in zip(u, v))


@dataclass(frozen=True)
class LatticeClass:
    """``a·X0 + b·f + Σ c_i·E_i`` on a blow-up of a ruled surface."""

    a: int
    b: int
    c: tuple = ()

    def __add__(self, other):
        return LatticeClass(self.a + other.a, self.b + other.b,
                            tuple(x + y for x, y in zip(self.c, other.c)))

    def __sub__(self, other):
        return self + other.scale(-1)

    def scale(self, k: int):
        return LatticeClass(k * self.a, k * self.b, tuple(k * x for x in self.c))


class BlowupLattice:
    """Blow-up of a ruled surface with invariant ``e`` at ``k`` distinct points (basis X0, f, E_1..E_k)."""

    def __init__(self, e: int, centers=()):
        self.e = e
        self.centers = tuple(centers)
        k = len(self.centers)
        names = ("X0", "f") + tuple(f"E{i + 1}" for i in range(k))
        gram = [[0] * (k + 2) for _ in range(k + 2)]
        gram[0][0], gram[0][1], gram[1][0] = -e, 1, 1
        for i in range(k):
            gram[i + 2][i + 2] = -1
        self.lattice = GramLattice(names, tuple(tuple(r) for r in gram))

    @property
    def k(self) -> int:
        return len(self.centers)

    def _vec(self, C: LatticeClass):
        if len(C.c) != self.k:
            raise ValueError("class has the wrong number of exceptional coefficients")
        return (C.a, C.b) + tuple(C.c)

    def pullback(self, C: NumClass) -> LatticeClass:
        return LatticeClass(C.m, C.b_deg, (0,) * self.k)

    def exceptional(self, i: int) -> LatticeClass:
        c = [0] * self.k
        c[i] = 1
        return LatticeClass(0, 0, tuple(c))

    def total_transform(self, C: NumClass, mu: int, i: int = 0) -> LatticeClass:
        """Strict transform ``ε*C - μE_i`` of a curve with multiplicity μ at center ``i``."""
        if not 0 <= i < self.k:
            raise IndexError("no such blow-up center")
        return self.pullback(C) - self.exceptional(i).scale(mu)

    def pushforward(self, D: LatticeClass) -> NumClass:
        return NumClass(D.a, D.b)

    def intersect(self, A: LatticeClass, B: LatticeClass) -> int:
        return self.lattice.dot(self._vec(A), self._vec(B))

    def projection_formula_check(self, C: NumClass, D: LatticeClass) -> bool:
        """``ε*(C)·D == C·ε_*(D)``."""
        lhs = self.intersect(self.pullback(C), D)
        pd = self.pushforward(D)
        rhs = -self.e * C.m * pd.m + C.m * pd.b_deg + pd.m * C.b_deg
        return lhs == rhs


def lattice_intersect(L: BlowupLattice, A: LatticeClass, B: LatticeClass) -> int:
    return L.intersect(A, B)


def total_transform(L: BlowupLattice, C: NumClass, mu: int, i: int = 0) -> LatticeClass:
    return L.total_transform(C, mu, i)


def projection_formula_check(L: BlowupLattice, C: NumClass, D: LatticeClass) -> bool:
    return L.projection_formula_check(C, D)


def elm_via_lattice(cd: int, n: int, m: int, mu_c: int, mu_d: int) -> int:
    """``C'·D'`` after one elementary transform, computed on the blow-up.

    The abstract basis is (ε*C, ε*D, ε*f, E).  Self-intersections of C and
    D never enter the answer, so they are set to zero.
    """
    lat = GramLattice(("C", "D", "f", "E"), (
        (0, cd, n, 0),
        (cd, 0, m, 0),
        (n, m, 0, 0),
        (0, 0, 0, -1),
    ))
    c_tilde = lat.vec(C=1, E=-mu_c)
    d_tilde = lat.vec(D=1, E=-mu_d)
    fiber = lat.vec(f=1, E=-1)
    assert lat.dot(fiber, fiber) == -1, "strict transform of the fiber must be a (-1)-curve"
    # σ*σ_*(Z) = Z + (Z·F)F when F is the contracted (-1)-curve
    c_back = _add(c_tilde, fiber, lat.dot(c_tilde, fiber))
    d_back = _add(d_tilde, fiber, lat.dot(d_tilde, fiber))
    assert lat.dot(c_back, fiber) == 0 and lat.dot(d_back, fiber) == 0
    return lat.dot(c_back, d_back)
