"""Sublattices of Z^n, saturation, pointedness, volumes and fiber enumeration."""

from __future__ import annotations

import itertools
from dataclasses import dataclass, field
from fractions import Fraction
from math import comb

from .errors import FiberInfinite
from .intlinalg import (
    Mat,
    Vec,
    hnf_coordinates,
    integer_rank,
    kernel_basis,
    mat_vec,
    qspan_contains,
    row_hermite,
    smith_normal_form,
    transpose,
    is_zero_vec,
)
from . import linprog


@dataclass(frozen=True)
class Lattice:
    """A sublattice of Z^n with canonical HNF basis rows.

    Two Lattice objects are equal iff they are the same sublattice: the basis
    stored is the row Hermite normal form of any generating set.  ``support``
    optionally records a coordinate face J; every basis vector must then
    vanish outside J.
    """

    ambient_dim: int
    vectors: Mat
    support: frozenset[int] | None = field(default=None)

    def __post_init__(self):
        for v in self.vectors:
            if len(v) != self.ambient_dim:
                raise ValueError("basis vector of wrong length")
            if self.support is not None:
                if any(x != 0 for i, x in enumerate(v) if i not in self.support):
                    raise ValueError("basis vector not supported on the face")

    @staticmethod
    def from_generators(n: int, gens, support=None) -> "Lattice":
        sup = frozenset(support) if support is not None else None
        return Lattice(n, row_hermite(tuple(tuple(g) for g in gens)), sup)

    @staticmethod
    def zero(n: int, support=None) -> "Lattice":
        return Lattice.from_generators(n, (), support)

    @property
    def rank(self) -> int:
        return len(self.vectors)

    def contains(self, v) -> bool:
        return hnf_coordinates(self.vectors, tuple(v)) is not None

    def coordinates(self, v):
        return hnf_coordinates(self.vectors, tuple(v))

    def qspan_contains(self, v) -> bool:
        return qspan_contains(self.vectors, tuple(v))

    def qspan_subset_of(self, other: "Lattice") -> bool:
        return all(other.qspan_contains(v) for v in self.vectors)

    def is_sublattice_of(self, other: "Lattice") -> bool:
        return all(other.contains(v) for v in self.vectors)

    def with_support(self, support) -> "Lattice":
        return Lattice(self.ambient_dim, self.vectors, frozenset(support))

    def saturation(self) -> tuple["Lattice", tuple[int, ...]]:
        """(L_sat, invariant factors of L_sat/L); factors all 1 iff saturated."""
        if self.rank == 0:
            return self, ()
        perp = kernel_basis(self.vectors)  # rows orthogonal to L
        if perp:
            sat_rows = kernel_basis(perp)
        else:
            sat_rows = row_hermite(
                tuple(tuple(1 if i == j else 0 for j in range(self.ambient_dim))
                      for i in range(self.ambient_dim)))
        sat = Lattice(self.ambient_dim, sat_rows, self.support)
        coords = [sat.coordinates(v) for v in self.vectors]
        assert all(c is not None for c in coords)
        factors = smith_normal_form(tuple(coords)).factors
        return sat, factors

    def coordinate_section(self, J) -> "Lattice":
        """The sublattice of vectors supported on the coordinate set J."""
        J = frozenset(J)
        if self.rank == 0:
            return Lattice.zero(self.ambient_dim, J)
        jbar = [i for i in range(self.ambient_dim) if i not in J]
        if not jbar:
            return Lattice(self.ambient_dim, self.vectors, J)
        restricted = tuple(tuple(v[i] for i in jbar) for v in self.vectors)
        coeffs = kernel_basis(transpose(restricted))  # c with c @ restricted == 0
        gens = tuple(tuple(sum(c[k] * self.vectors[k][i] for k in range(self.rank))
                           for i in range(self.ambient_dim)) for c in coeffs)
        return Lattice.from_generators(self.ambient_dim, gens, J)


def quotient_invariants(sub: Lattice, sup: Lattice) -> tuple[tuple[int, ...], int]:
    """(finite invariant factors, free rank) of sup/sub; requires sub <= sup."""
    coords = [sup.coordinates(v) for v in sub.vectors]
    if any(c is None for c in coords):
        raise ValueError("not a sublattice")
    free_rank = sup.rank - sub.rank
    if sub.rank == 0:
        return (), free_rank
    factors = smith_normal_form(tuple(coords)).factors
    return factors, free_rank


def kernel_saturated(a: Mat) -> Lattice:
    """ker(A) as a saturated sublattice of Z^n for a d x n integer matrix."""
    if not a:
        raise ValueError("matrix must be nonempty")
    n = len(a[0])
    return Lattice(n, kernel_basis(a))


def is_pointed(vectors) -> bool:
    """True iff no nonzero N-combination of the vectors is 0.

    Decided exactly: the rational cone contains a line iff the LP
    {sum c_i v_i = 0, sum c_i = 1, c >= 0} is feasible.
    """
    vecs = [tuple(v) for v in vectors]
    if not vecs:
        return True
    d = len(vecs[0])
    rows = [[v[i] for v in vecs] for i in range(d)]
    rows.append([1] * len(vecs))
    rhs = [0] * d + [1]
    return not linprog.feasible_eq(rows, rhs)


# ---------------------------------------------------------------------------
# Normalized volume
# ---------------------------------------------------------------------------

def _in_scaled_hull(points, x, k) -> bool:
    """Is x in k * conv(points)?  points includes the origin."""
    d = len(x)
    rows = [[p[i] for p in points] for i in range(d)]
    rows.append([1] * len(points))
    rhs = list(x) + [k]
    return linprog.feasible_eq(rows, rhs)


def normalized_volume(a: Mat, J=None) -> int:
    """Volume of conv(columns of A_J, origin) normalized to the lattice Z A_J.

    Computed exactly from lattice point counts: the r-th finite difference of
    the Ehrhart counting function of the hull equals r! times the Euclidean
    volume in a basis of Z A_J, which is the normalized volume.
    """
    if J is None:
        J = range(len(a[0]))
    cols = [tuple(row[j] for row in a) for j in sorted(J)]
    lat = Lattice.from_generators(len(a), cols)
    r = lat.rank
    if r == 0:
        return 1
    pts = []
    for c in cols:
        coord = lat.coordinates(c)
        assert coord is not None
        pts.append(coord)
    pts = [tuple([0] * r)] + pts
    counts = []
    for k in range(r + 1):
        lo = [min(k * p[i] for p in pts) for i in range(r)]
        hi = [max(k * p[i] for p in pts) for i in range(r)]
        n = 0
        for x in itertools.product(*(range(l, h + 1) for l, h in zip(lo, hi))):
            if _in_scaled_hull(pts, x, k):
                n += 1
        counts.append(n)
    vol = sum((-1) ** (r - i) * comb(r, i) * counts[i] for i in range(r + 1))
    return vol


# ---------------------------------------------------------------------------
# Fiber enumeration
# ---------------------------------------------------------------------------

def fiber_is_finite(a: Mat) -> bool:
    """True iff ker(A) meets N^n only in 0, so all fibers are finite."""
    n = len(a[0])
    rows = [list(row) for row in a]
    rows.append([1] * n)
    rhs = [0] * len(a) + [1]
    return not linprog.feasible_eq(rows, rhs)


def enumerate_fiber(a: Mat, alpha, cap: int | None = None) -> set[Vec]:
    """All u in N^n with A u = alpha; exhaustive when fibers are finite.

    With an unpointed kernel a cap on the number of points is required and
    enumeration proceeds by increasing total degree until the cap is hit.
    """
    n = len(a[0])
    alpha = tuple(alpha)
    finite = fiber_is_finite(a)
    if not finite and cap is None:
        raise FiberInfinite("fibers are infinite; supply a cap")
    if not linprog.feasible_eq([list(r) for r in a], list(alpha)):
        return set()

    def solutions_of_degree(deg):
        found = []
        bounds = []
        for i in range(n):
            obj = [0] * n
            obj[i] = 1
            rows = [list(r) for r in a] + [[1] * n]
            rhs = list(alpha) + [deg]
            status, _, val = linprog.maximize(obj, rows, rhs)
            if status != linprog.OPTIMAL:
                return []
            bounds.append(int(val))

        def rec(prefix, remaining):
            i = len(prefix)
            if i == n:
                if is_zero_vec(remaining[:len(alpha)]) and remaining[len(alpha)] == 0:
                    found.append(tuple(prefix))
                return
            for ui in range(0, min(bounds[i], remaining[len(alpha)]) + 1):
                new_rem = [remaining[k] - ui * a[k][i] for k in range(len(alpha))]
                new_rem.append(remaining[len(alpha)] - ui)
                rows = [[a[k][j] for j in range(i + 1, n)] for k in range(len(alpha))]
                rows.append([1] * (n - i - 1))
                if i + 1 < n:
                    if not linprog.feasible_eq(rows, new_rem):
                        continue
                rec(prefix + [ui], new_rem)

        rec([], list(alpha) + [deg])
        return found

    result: set[Vec] = set()
    if finite:
        obj = [1] * n
        status, _, maxdeg = linprog.maximize(obj, [list(r) for r in a], list(alpha))
        assert status == linprog.OPTIMAL
        for deg in range(int(maxdeg) + 1):
            result.update(solutions_of_degree(deg))
        return result
    # infinite fiber: walk degrees until the cap is reached; gaps between
    # occupied degrees are bounded by the largest kernel generator degree
    gap = max((sum(abs(x) for x in v) for v in kernel_basis(a)), default=1) + 1
    deg = 0
    misses = 0
    while len(result) < cap and misses <= gap:
        sols = solutions_of_degree(deg)
        if sols:
            misses = 0
            for s in sols:
                result.add(s)
                if len(result) >= cap:
                    break
        else:
            misses += 1
        deg += 1
    return result
