"""Degree-truncated comparison of a binomial ideal with an intersection.

The degree-D truncation of an ideal with a degree-compatible Groebner basis
is spanned by the monomial multiples of basis elements staying within degree
D.  Each such span is generated by vectors with at most two nonzero entries,
so it is encoded exactly by a scalar-weighted union-find on the monomials:
a live component of size k contributes a single linear constraint (dimension
k - 1), an inconsistent ("dead") component contributes none (every monomial
of the component lies in the span).  Intersections of several spans reduce to
an exact sparse rank computation over the scalar field.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass

from .binomials import BinomialIdeal, expo_deg
from .groebner import member
from .scalars import Cyclo


def monomials_up_to(nvars: int, bound: int):
    """All exponents of total degree <= bound, in a fixed deterministic order."""
    out = []
    for e in itertools.product(range(bound + 1), repeat=nvars):
        if sum(e) <= bound:
            out.append(e)
    out.sort()
    return out


class MonomialSpan:
    """Span of two-term vectors on a fixed monomial index set."""

    def __init__(self, size: int):
        self.parent = list(range(size))
        self.weight = [None] * size  # weight[i]: e_i - w * e_parent[i] in span
        self.dead = [False] * size   # valid on roots only

    def find(self, i: int):
        """(root, w) with e_i - w * e_root in the span; compresses the path."""
        path = []
        while self.parent[i] != i:
            path.append(i)
            i = self.parent[i]
        root = i
        acc = Cyclo.one()
        for j in reversed(path):  # nearest the root first
            acc = self.weight[j] * acc
            self.weight[j] = acc
            self.parent[j] = root
        if not path:
            return root, Cyclo.one()
        return root, self.weight[path[0]]

    def add_two_term(self, a: int, b: int, lam: Cyclo):
        """Add the vector e_a - lam * e_b."""
        ra, wa = self.find(a)
        rb, wb = self.find(b)
        if ra == rb:
            if wa != lam * wb:
                self.dead[ra] = True
            return
        # e_a ~ wa e_ra, e_b ~ wb e_rb, and e_a - lam e_b in span
        # => e_rb - (wa / (lam wb)) e_ra in span
        self.parent[rb] = ra
        self.weight[rb] = wa / (lam * wb)
        if self.dead[rb]:
            self.dead[ra] = True

    def add_one_term(self, a: int):
        ra, _ = self.find(a)
        self.dead[ra] = True

    # -- queries ------------------------------------------------------------

    def component_root(self, i):
        return self.find(i)[0]

    def is_dead(self, i):
        return self.dead[self.find(i)[0]]

    def contains_two_term(self, a, b, lam: Cyclo) -> bool:
        ra, wa = self.find(a)
        rb, wb = self.find(b)
        if ra != rb:
            return False
        return self.dead[ra] or wa == lam * wb

    def contains_one_term(self, a) -> bool:
        return self.is_dead(a)

    def contains_vector(self, vec: dict) -> bool:
        """Membership of an arbitrary sparse vector {index: coeff}."""
        by_root: dict[int, Cyclo] = {}
        for i, c in vec.items():
            if c.is_zero():
                continue
            r, w = self.find(i)
            if self.dead[r]:
                continue
            by_root[r] = by_root.get(r, Cyclo.zero()) + c * w
        return all(v.is_zero() for v in by_root.values())

    def dimension(self, size: int) -> int:
        comps: dict[int, int] = {}
        dead_roots = set()
        for i in range(size):
            r, _ = self.find(i)
            comps[r] = comps.get(r, 0) + 1
            if self.dead[r]:
                dead_roots.add(r)
        return sum(k if r in dead_roots else k - 1 for r, k in comps.items())

    def constraint_rows(self, size: int):
        """One sparse row per live component: sum_i w_i x_i = 0."""
        rows: dict[int, dict[int, Cyclo]] = {}
        for i in range(size):
            r, w = self.find(i)
            if self.dead[r]:
                continue
            rows.setdefault(r, {})[i] = w
        return list(rows.values())


def span_of_ideal(gb: BinomialIdeal, index: dict, bound: int) -> MonomialSpan:
    """Span of all multiples x^w * g, g in the reduced basis, within degree bound."""
    size = len(index)
    span = MonomialSpan(size)
    nvars = gb.nvars
    for g in gb.generators:
        room = bound - expo_deg(g.u)
        if room < 0:
            continue
        for w in monomials_up_to(nvars, room):
            a = tuple(x + y for x, y in zip(g.u, w))
            if g.is_monomial:
                span.add_one_term(index[a])
            else:
                b = tuple(x + y for x, y in zip(g.v, w))
                span.add_two_term(index[a], index[b], g.lam)
    return span


def _sparse_rank_and_kernel(rows, size, want_kernel=False):
    """Exact rank of sparse rows over Q(zeta); optional kernel basis."""
    pivots: dict[int, dict[int, Cyclo]] = {}
    for row in rows:
        row = dict(row)
        while row:
            lead = min(row)
            if lead not in pivots:
                lv = row[lead].inverse()
                pivots[lead] = {i: c * lv for i, c in row.items()}
                break
            piv = pivots[lead]
            f = row[lead]
            for i, c in piv.items():
                nc = row.get(i, Cyclo.zero()) - f * c
                if nc.is_zero():
                    row.pop(i, None)
                else:
                    row[i] = nc
    rank = len(pivots)
    if not want_kernel:
        return rank, None
    # back-substitute to reduced form, then read the kernel off free columns
    for lead in sorted(pivots, reverse=True):
        row = pivots[lead]
        for other_lead in list(row):
            if other_lead != lead and other_lead in pivots:
                f = row[other_lead]
                if f.is_zero():
                    continue
                for i, c in pivots[other_lead].items():
                    nc = row.get(i, Cyclo.zero()) - f * c
                    if nc.is_zero():
                        row.pop(i, None)
                    else:
                        row[i] = nc
    free = [i for i in range(size) if i not in pivots]
    kernel = []
    for f in free:
        vec = {f: Cyclo.one()}
        for lead, row in pivots.items():
            c = row.get(f)
            if c is not None and not c.is_zero():
                vec[lead] = -c
        kernel.append(vec)
    return rank, kernel


@dataclass(frozen=True)
class CompareResult:
    verdict: str  # "equal" | "lhs_strictly_smaller" | "incomparable"
    witness: dict | None = None  # sparse polynomial {exponent: Cyclo}
    bound: int = 0
    lhs_dim: int = 0
    rhs_dim: int = 0


def compare_truncations(lhs_gb: BinomialIdeal, rhs_gbs, bound: int) -> CompareResult:
    """Compare lhs with the intersection of the rhs ideals up to degree ``bound``.

    All inputs must be reduced Groebner bases for the (degree compatible)
    default order.  "equal" certifies equality of every graded truncation up
    to the bound.
    """
    nvars = lhs_gb.nvars
    monos = monomials_up_to(nvars, bound)
    index = {e: i for i, e in enumerate(monos)}
    size = len(monos)
    # containment lhs <= each rhs at the ideal level (exact, not truncated)
    for rgb in rhs_gbs:
        for g in lhs_gb.generators:
            if not member(rgb, g):
                witness = {g.u: Cyclo.one()}
                if not g.is_monomial:
                    witness[g.v] = -g.lam
                return CompareResult("incomparable", witness, bound, 0, 0)
    lhs_span = span_of_ideal(lhs_gb, index, bound)
    lhs_dim = lhs_span.dimension(size)
    rhs_spans = [span_of_ideal(rgb, index, bound) for rgb in rhs_gbs]
    rows = []
    for sp in rhs_spans:
        rows.extend(sp.constraint_rows(size))
    if not rhs_spans:
        rhs_dim = size  # empty intersection of ideals is the unit ideal
    else:
        rank, _ = _sparse_rank_and_kernel(rows, size)
        rhs_dim = size - rank
    if lhs_dim == rhs_dim:
        return CompareResult("equal", None, bound, lhs_dim, rhs_dim)
    # lhs is strictly smaller; extract a witness vector in the gap
    _, kernel = _sparse_rank_and_kernel(rows, size, want_kernel=True)
    for vec in kernel or []:
        if not lhs_span.contains_vector(vec):
            witness = {monos[i]: c for i, c in vec.items()}
            return CompareResult("lhs_strictly_smaller", witness, bound,
                                 lhs_dim, rhs_dim)
    return CompareResult("lhs_strictly_smaller", None, bound, lhs_dim, rhs_dim)
