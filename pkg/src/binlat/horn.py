"""Horn-type analysis of lattice basis ideals.

The grading matrix A is the canonical HNF basis of the saturated cokernel of
B.  Associated primes of the lattice basis ideal split into toral and Andean
parts by the rank criterion (the graded Hilbert function of the prime's
quotient is bounded iff rank L equals |J| minus rank A_J), cross-checked by
brute-force fiber counting.  The Andean arrangement is the union of the
quasidegree translates of the Andean components, and the generic solution
dimension is the sum over full-dimensional toral pairs (L, J) of
multiplicity times normalized volume.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass
from fractions import Fraction

from .binomials import Binomial, BinomialIdeal
from .congruence import box_points, class_boundedness
from .decompose import DecompositionResult, PrimaryComponent, primary_decompose
from .errors import InvariantViolation, NotGraded, NotMixed, VerificationFailed
from .groebner import normal_form, reduced_groebner, saturate_at_face
from .intlinalg import (
    kernel_basis,
    mat,
    mat_vec,
    rref,
    row_hermite,
    solve_rational,
    transpose,
)
from .lattices import (
    Lattice,
    enumerate_fiber,
    is_pointed,
    kernel_saturated,
    normalized_volume,
    quotient_invariants,
)
from . import linprog
from .scalars import Cyclo


def check_mixed(b) -> bool:
    """True iff every nonzero vector in the column span of B is sign-mixed."""
    b = mat(b)
    witness = linprog.feasible_free_sign(b)
    return witness is None


def _minimal_nonnegative_lift(row, later, cap: int = 60):
    """row + the smallest N-combination of the later rows that is >= 0.

    Searched by increasing coefficient sum, lexicographic tie-break; the
    original row is returned when no combination within the cap works.
    """
    if all(x >= 0 for x in row) or not later:
        return tuple(row)
    k = len(later)
    for total in range(1, cap + 1):
        for combo in itertools.combinations_with_replacement(range(k), total):
            coeffs = [0] * k
            for idx in combo:
                coeffs[idx] += 1
            cand = list(row)
            for c, lr in zip(coeffs, later):
                if c:
                    cand = [x + c * y for x, y in zip(cand, lr)]
            if all(x >= 0 for x in cand):
                return tuple(cand)
    return tuple(row)


def grading_matrix(b):
    """Canonical basis of the saturated cokernel {a : a B = 0}.

    Row HNF followed by a minimal nonnegative lift of each row by the rows
    below it, so the grading lands in the conventional nonnegative
    coordinates whenever the lift exists (it does for mixed B).
    """
    b = mat(b)
    rows = list(row_hermite(kernel_basis(transpose(b))))
    for i in range(len(rows) - 2, -1, -1):
        rows[i] = _minimal_nonnegative_lift(rows[i], rows[i + 1:])
    return tuple(rows)


def lattice_basis_ideal(b, names=None) -> BinomialIdeal:
    """One pure-difference binomial per column of B."""
    b = mat(b)
    n = len(b)
    gens = []
    for col in transpose(b):
        if all(x == 0 for x in col):
            raise InvariantViolation("zero column yields the zero binomial")
        pos = tuple(x if x > 0 else 0 for x in col)
        neg = tuple(-x if x < 0 else 0 for x in col)
        gens.append(Binomial(pos, neg, Cyclo.one()))
    return BinomialIdeal.make(n, gens, 1, names)


def is_a_graded(ideal: BinomialIdeal, a) -> bool:
    a = mat(a)
    for g in ideal.generators:
        if g.is_monomial:
            continue
        if mat_vec(a, g.u) != mat_vec(a, g.v):
            return False
    return True


@dataclass(frozen=True)
class ArrangementSubspace:
    offset: tuple[Fraction, ...]
    J: frozenset[int]

    def contains(self, a, beta) -> bool:
        diff = tuple(Fraction(x) - o for x, o in zip(beta, self.offset))
        cols = [tuple(row[j] for j in sorted(self.J)) for row in a]
        if not self.J:
            return all(x == 0 for x in diff)
        return solve_rational(cols, diff) is not None


@dataclass(frozen=True)
class ToralAndeanReport:
    decomposition: DecompositionResult
    toral: tuple[PrimaryComponent, ...]
    andean: tuple[PrimaryComponent, ...]
    arrangement: tuple[ArrangementSubspace, ...]


@dataclass(frozen=True)
class RankSummand:
    lattice: Lattice
    J: frozenset[int]
    iota: int
    mu: int
    vol: int

    @property
    def product(self) -> int:
        return self.iota * self.mu * self.vol


@dataclass(frozen=True)
class RankReport:
    summands: tuple[RankSummand, ...]
    total: int
    finite_support_count: int
    full_support_count: int
    mu_certified: bool


@dataclass(frozen=True)
class HornSystem:
    b: tuple
    a: tuple
    beta: tuple[Fraction, ...]
    euler_ops: tuple[str, ...]

    @staticmethod
    def build(b, beta) -> "HornSystem":
        b = mat(b)
        a = grading_matrix(b)
        beta = tuple(Fraction(x) for x in beta)
        if len(beta) != len(a):
            raise InvariantViolation("beta length must equal the corank of B")
        ops = []
        for i, row in enumerate(a):
            terms = ["%d*x%d*d%d" % (c, j + 1, j + 1)
                     for j, c in enumerate(row) if c != 0]
            ops.append("E%d = %s" % (i + 1, " + ".join(terms) if terms else "0"))
        return HornSystem(b=b, a=a, beta=beta, euler_ops=tuple(ops))


def _rank_of_columns(a, J):
    cols = [tuple(row[j] for j in sorted(J)) for row in a]
    if not J:
        return 0
    _, pivots = rref(cols)  # rows = coordinates of columns; rank is the same
    return len(pivots)


def _is_toral(prime, a) -> bool:
    return prime.character.lattice.rank == len(prime.J) - _rank_of_columns(a, prime.J)


def _hilbert_samples(prime, a, scale: int):
    """Graded dimensions of the prime's quotient on a degree probe.

    dim at alpha equals the number of L-residues of the A_J fiber over alpha.
    """
    J = sorted(prime.J)
    if not J:
        return [1]
    a_j = tuple(tuple(row[j] for j in J) for row in a)
    lat = prime.character.lattice
    lat_restricted = [tuple(v[j] for j in J) for v in lat.vectors]
    ray = tuple(sum(row) for row in a_j)
    out = []
    for k in range(scale + 1):
        alpha = tuple(k * x for x in ray)
        fiber = sorted(enumerate_fiber(a_j, alpha))
        reps = []
        for u in fiber:
            if not any(_in_span_z(lat_restricted, tuple(x - y for x, y in zip(u, r)))
                       for r in reps):
                reps.append(u)
        out.append(len(reps))
    return out


def _in_span_z(rows, v):
    from .intlinalg import hnf_coordinates
    return hnf_coordinates(row_hermite(rows), v) is not None


def _component_quasidegrees(comp: PrimaryComponent, a, rounds: int = 2):
    """Quasidegree cover of the component's quotient: residues of the true
    degrees modulo the span of A_J, certified by box doubling."""
    J = comp.prime.J
    a = mat(a)
    cols = [tuple(row[j] for j in sorted(J)) for row in a]
    if cols and J:
        reduced, pivots = rref(list(zip(*cols)))  # rows spanning the column space
        span_rows = reduced[: len(pivots)]
    else:
        span_rows = []

    def canonical_residue(vec):
        w = [Fraction(x) for x in vec]
        for row in span_rows:
            p = next(i for i, x in enumerate(row) if x != 0)
            f = w[p] / row[p]
            if f:
                w = [x - f * y for x, y in zip(w, row)]
        return tuple(w)

    gb = comp.ideal
    base = tuple(x + 1 for x in gb.max_exponent_box())
    one = Cyclo.one(gb.zeta_order)
    prev = None
    for r in range(rounds):
        box = tuple((2 ** r) * x for x in base)
        residues = set()
        for pt in box_points(box):
            if normal_form(one, pt, gb) is None:
                continue
            residues.add(canonical_residue(mat_vec(a, pt)))
        if residues == prev:
            break
        prev = residues
    subspaces = [ArrangementSubspace(offset=res, J=J) for res in (prev or ())]
    subspaces.sort(key=lambda s: (tuple(sorted(s.J)), s.offset))
    return tuple(subspaces), True


def quasidegrees(ideal: BinomialIdeal, a, box=None) -> list[ArrangementSubspace]:
    """Cover of the quasidegrees of the quotient by translates of the spans
    of the component gradings."""
    a = mat(a)
    if not is_a_graded(ideal, a):
        raise NotGraded("ideal is not graded by the given matrix")
    res = primary_decompose(ideal)
    out = []
    for comp in res.components:
        subspaces, _ = _component_quasidegrees(comp, a)
        for s in subspaces:
            if s not in out:
                out.append(s)
    out.sort(key=lambda s: (tuple(sorted(s.J)), s.offset))
    return out


def toral_andean_analysis(ideal: BinomialIdeal, a) -> ToralAndeanReport:
    """Classify the associated primes as toral or Andean and assemble the
    Andean arrangement from the Andean components' quasidegrees."""
    a = mat(a)
    if not is_a_graded(ideal, a):
        raise NotGraded("ideal is not graded by the given matrix")
    if not is_pointed(list(transpose(a))):
        raise NotGraded("the grading semigroup must be pointed")
    dec = primary_decompose(ideal)
    toral, andean = [], []
    for comp in dec.components:
        t = _is_toral(comp.prime, a)
        h = _hilbert_samples(comp.prime, a, 3)
        growing = len(h) >= 2 and h[-1] > h[1] and h[-1] > 1
        if t and growing:
            raise VerificationFailed("rank criterion says toral, probe grows")
        if not t and not growing and len(h) > 2:
            raise VerificationFailed("rank criterion says Andean, probe flat")
        (toral if t else andean).append(comp)
    arrangement = []
    for comp in andean:
        subspaces, _ = _component_quasidegrees(comp, a)
        for s in subspaces:
            if s not in arrangement:
                arrangement.append(s)
    arrangement.sort(key=lambda s: (tuple(sorted(s.J)), s.offset))
    return ToralAndeanReport(decomposition=dec, toral=tuple(toral),
                             andean=tuple(andean),
                             arrangement=tuple(arrangement))


def _mu_census(ideal_gb: BinomialIdeal, J, lattice: Lattice, box, budget):
    """Number of Z^J-orbits of J-bounded classes with stabilizer containing
    the lattice, on the given box."""
    sat = saturate_at_face(ideal_gb, J)
    one = Cyclo.one(sat.zeta_order)
    keys = {}
    for pt in box_points(box):
        nf = normal_form(one, pt, sat)
        if nf is None:
            continue
        keys.setdefault(nf[1], pt)
    good = {}
    for key in sorted(keys):
        bd = class_boundedness(ideal_gb, keys[key], J, budget)
        good[key] = (bd.kind == "bounded"
                     and lattice.is_sublattice_of(bd.stabilizer))
    live = sorted(k for k in keys if good[k])
    parent = {k: k for k in live}

    def find(k):
        while parent[k] != k:
            parent[k] = parent[parent[k]]
            k = parent[k]
        return k

    n = ideal_gb.nvars
    for j in sorted(J):
        ej = tuple(int(i == j) for i in range(n))
        for key in live:
            shifted = tuple(x + y for x, y in zip(keys[key], ej))
            nf = normal_form(one, shifted, sat)
            if nf is None:
                continue
            img = nf[1]
            if img in parent:
                ra, rb = find(key), find(img)
                if ra != rb:
                    parent[ra] = rb
    return len({find(k) for k in live})


def generic_rank(b, budget: int = 10 ** 6) -> RankReport:
    """Generic solution-space dimension: sum of iota * mu * vol over the
    full-dimensional toral pairs (L, J)."""
    b = mat(b)
    if not check_mixed(b):
        raise NotMixed("the lattice basis matrix must be mixed")
    a = grading_matrix(b)
    d = len(a)
    n = len(b)
    ideal = lattice_basis_ideal(b)
    gb = reduced_groebner(ideal)
    dec = primary_decompose(ideal)
    zb = Lattice.from_generators(n, list(transpose(b)))
    ker_a = kernel_saturated(a)
    pairs = {}
    for comp in dec.components:
        p = comp.prime
        if not _is_toral(p, a):
            continue
        if _rank_of_columns(a, p.J) != d:
            continue
        key = (tuple(sorted(p.J)), p.character.lattice.vectors)
        pairs.setdefault(key, []).append(p)
    summands = []
    certified = True
    for key in sorted(pairs):
        J = frozenset(key[0])
        lat = Lattice(n, key[1], J)
        section = zb.coordinate_section(J)
        factors, free = quotient_invariants(section, Lattice(n, lat.vectors))
        assert free == 0, "lattice and section must have equal rank"
        iota = 1
        for f in factors:
            iota *= f
        if iota != len(pairs[key]):
            raise VerificationFailed(
                "character count %d differs from lattice index %d"
                % (len(pairs[key]), iota))
        base = tuple(x + 1 for x in gb.max_exponent_box())
        mu1 = _mu_census(gb, J, lat, base, budget)
        mu2 = _mu_census(gb, J, lat, tuple(2 * x for x in base), budget)
        if mu1 != mu2:
            certified = False
        vol = normalized_volume(a, sorted(J))
        summands.append(RankSummand(lattice=lat, J=J, iota=iota, mu=mu2, vol=vol))
    total = sum(s.product for s in summands)
    full_J = frozenset(range(n))
    finite = sum(s.product for s in summands if s.J != full_J)
    idx_factors, _ = quotient_invariants(zb, ker_a)
    idx = 1
    for f in idx_factors:
        idx *= f
    full_support = idx * normalized_volume(a)
    return RankReport(summands=tuple(summands), total=total,
                      finite_support_count=finite,
                      full_support_count=full_support,
                      mu_certified=certified)


def finite_rank_test(system: HornSystem, report: ToralAndeanReport | None = None) -> bool:
    """True iff the parameter lies outside every Andean subspace, i.e. the
    solution space has finite dimension."""
    if report is None:
        report = toral_andean_analysis(lattice_basis_ideal(system.b), system.a)
    return not any(s.contains(system.a, system.beta) for s in report.arrangement)
