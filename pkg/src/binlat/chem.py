"""Mass-action reaction networks: exact algebra, numeric trajectories.

Rates are exact rationals.  Detailed-balance solving happens in log
coordinates over the formal Q-vector space spanned by the logarithms of the
primes appearing in the rate ratios, so equilibria come out as exact
rational-exponent monomials in those primes and infeasibility verdicts carry
an explicit violated reaction cycle.  Simulation is plain fixed-step RK4
with step rejection on negativity; the exactness lives in the algebra, not
the dynamics.
"""

from __future__ import annotations

import itertools
import math
from dataclasses import dataclass, field
from fractions import Fraction

from .binomials import Binomial, BinomialIdeal
from .decompose import primary_decompose
from .errors import InvariantViolation, StepUnderflow
from .intlinalg import kernel_basis, rref_with_transform, row_hermite, solve_rational
from .scalars import Cyclo


@dataclass(frozen=True)
class Reaction:
    reactant: tuple[int, ...]
    product: tuple[int, ...]
    k_fwd: Fraction
    k_rev: Fraction

    def __post_init__(self):
        if self.reactant == self.product:
            raise InvariantViolation("reaction between equal complexes")
        if self.k_fwd <= 0 or self.k_rev <= 0:
            raise InvariantViolation("rate constants must be strictly positive")

    @property
    def vector(self):
        return tuple(b - a for a, b in zip(self.reactant, self.product))


@dataclass(frozen=True)
class ReactionNetwork:
    species: tuple[str, ...]
    reactions: tuple[Reaction, ...]

    def __post_init__(self):
        for r in self.reactions:
            if len(r.reactant) != len(self.species) or len(r.product) != len(self.species):
                raise InvariantViolation("complex arity != species count")

    @property
    def nspecies(self) -> int:
        return len(self.species)


def _monomial(xs, e, one):
    out = one
    for v, k in zip(xs, e):
        if k:
            out = out * v ** k
    return out


def mass_action_rhs(net: ReactionNetwork, x):
    """The mass-action vector field at x; exact when x is rational."""
    exact = all(isinstance(v, (int, Fraction)) for v in x)
    if exact:
        xs, one = [Fraction(v) for v in x], Fraction(1)
        out = [Fraction(0)] * net.nspecies
    else:
        xs, one = [float(v) for v in x], 1.0
        out = [0.0] * net.nspecies
    for r in net.reactions:
        kf = r.k_fwd if exact else float(r.k_fwd)
        kr = r.k_rev if exact else float(r.k_rev)
        flux = kf * _monomial(xs, r.reactant, one) - kr * _monomial(xs, r.product, one)
        for i, d in enumerate(r.vector):
            if d:
                out[i] = out[i] + d * flux
    return tuple(out)


def detailed_balance_ideal(net: ReactionNetwork) -> BinomialIdeal:
    """One binomial k_fwd x^a - k_rev x^b per reaction (rational scalars)."""
    gens = []
    for r in net.reactions:
        lam = Cyclo.rational(r.k_rev / r.k_fwd)
        gens.append(Binomial(r.reactant, r.product, lam))
    return BinomialIdeal.make(net.nspecies, gens, 1, net.species)


@dataclass(frozen=True)
class StoichiometryData:
    s_basis: tuple            # integer basis rows of the stoichiometric subspace
    conserved_basis: tuple    # integer basis rows of its orthogonal complement


def conserved_quantities(net: ReactionNetwork) -> StoichiometryData:
    vectors = tuple(r.vector for r in net.reactions)
    s_basis = row_hermite(vectors)
    conserved = kernel_basis(s_basis) if s_basis else row_hermite(
        tuple(tuple(int(i == j) for j in range(net.nspecies))
              for i in range(net.nspecies)))
    for c in conserved:
        for v in vectors:
            assert sum(a * b for a, b in zip(c, v)) == 0
    return StoichiometryData(s_basis=s_basis, conserved_basis=conserved)


# ---------------------------------------------------------------------------
# Detailed balanced equilibria
# ---------------------------------------------------------------------------

def _prime_factor_exponents(q: Fraction) -> dict:
    """{prime: exponent} for a positive rational."""
    assert q > 0
    out: dict[int, int] = {}
    for val, sign in ((q.numerator, 1), (q.denominator, -1)):
        n = val
        p = 2
        while p * p <= n:
            while n % p == 0:
                out[p] = out.get(p, 0) + sign
                n //= p
            p += 1
        if n > 1:
            out[n] = out.get(n, 0) + sign
    return {p: e for p, e in out.items() if e}


@dataclass(frozen=True)
class EquilibriumPoint:
    """Strictly positive point with exact coordinates prod_p p^(e_p)."""

    exponents: tuple          # per species: tuple of (prime, Fraction) pairs
    approx: tuple[float, ...]

    def coordinate_float(self, i: int) -> float:
        return self.approx[i]


@dataclass(frozen=True)
class Infeasible:
    """Wegscheider-style obstruction: a reaction cycle with inconsistent rates."""

    cycle: tuple              # rational weights per reaction, c . (b-a) = 0
    prime: int                # the prime whose exponents fail on the cycle


def detailed_balanced_equilibrium(net: ReactionNetwork):
    """A detailed balanced equilibrium as an exact exponential expression, or
    Infeasible with the violated cycle.

    Solves (b - a) . log x = log(k_fwd / k_rev) in the formal Q-span of the
    logs of the primes dividing the rate ratios.
    """
    rows = [r.vector for r in net.reactions]
    if not rows:
        return EquilibriumPoint(exponents=((),) * net.nspecies,
                                approx=(1.0,) * net.nspecies)
    ratios = [r.k_fwd / r.k_rev for r in net.reactions]
    primes = sorted({p for q in ratios for p in _prime_factor_exponents(q)})
    per_prime = {}
    reduced, pivots, transform = rref_with_transform(rows)
    nkernel_rows = [transform[i] for i in range(len(rows))
                    if all(x == 0 for x in reduced[i])]
    for p in primes:
        rhs = [Fraction(_prime_factor_exponents(q).get(p, 0)) for q in ratios]
        for c in nkernel_rows:
            if sum(ci * ri for ci, ri in zip(c, rhs)) != 0:
                return Infeasible(cycle=tuple(c), prime=p)
        sol = solve_rational(rows, rhs)
        assert sol is not None
        per_prime[p] = sol
    exps = []
    approx = []
    for i in range(net.nspecies):
        entry = tuple((p, per_prime[p][i]) for p in primes if per_prime[p][i] != 0)
        exps.append(entry)
        approx.append(float(math.prod(float(p) ** float(e) for p, e in entry)))
    point = EquilibriumPoint(exponents=tuple(exps), approx=tuple(approx))
    assert equilibrium_zeroes_binomials(net, point)
    return point


def equilibrium_zeroes_binomials(net: ReactionNetwork, point: EquilibriumPoint) -> bool:
    """Exact check that every reaction flux vanishes at the point."""
    for r in net.reactions:
        lhs = _prime_factor_exponents(r.k_fwd)
        rhs = _prime_factor_exponents(r.k_rev)
        for i, (ai, bi) in enumerate(zip(r.reactant, r.product)):
            for p, e in point.exponents[i]:
                lhs[p] = lhs.get(p, 0) + ai * e
                rhs[p] = rhs.get(p, 0) + bi * e
        keys = set(lhs) | set(rhs)
        if any(lhs.get(p, 0) != rhs.get(p, 0) for p in keys):
            return False
    return True


# ---------------------------------------------------------------------------
# Simulation
# ---------------------------------------------------------------------------

@dataclass(frozen=True)
class Trajectory:
    times: tuple[float, ...]
    states: tuple[tuple[float, ...], ...]
    dt: float
    conservation_drift: tuple[float, ...]  # per conserved basis vector
    max_drift: float


def simulate(net: ReactionNetwork, x0, t_end: float, dt: float,
             min_dt_factor: float = 2.0 ** -40) -> Trajectory:
    """Classical fixed-step RK4 with per-step halving on negativity."""
    if any(v <= 0 for v in x0):
        raise InvariantViolation("initial concentrations must be positive")
    x = tuple(float(v) for v in x0)
    f = lambda y: mass_action_rhs(net, y)
    conserved = conserved_quantities(net).conserved_basis
    totals0 = [sum(c * v for c, v in zip(row, x)) for row in conserved]
    times = [0.0]
    states = [x]
    drift = [0.0] * len(conserved)
    t = 0.0
    min_dt = dt * min_dt_factor
    while t < t_end - 1e-12:
        step = min(dt, t_end - t)
        while True:
            k1 = f(x)
            k2 = f(tuple(v + step / 2 * k for v, k in zip(x, k1)))
            k3 = f(tuple(v + step / 2 * k for v, k in zip(x, k2)))
            k4 = f(tuple(v + step * k for v, k in zip(x, k3)))
            nxt = tuple(v + step / 6 * (a + 2 * b + 2 * c + d)
                        for v, a, b, c, d in zip(x, k1, k2, k3, k4))
            if all(v >= 0 for v in nxt):
                break
            step /= 2
            if step < min_dt:
                raise StepUnderflow("step fell below the configured minimum")
        x = nxt
        t += step
        times.append(t)
        states.append(x)
        for i, row in enumerate(conserved):
            cur = sum(c * v for c, v in zip(row, x))
            drift[i] = max(drift[i], abs(cur - totals0[i]))
    return Trajectory(times=tuple(times), states=tuple(states), dt=dt,
                      conservation_drift=tuple(drift),
                      max_drift=max(drift, default=0.0))


# ---------------------------------------------------------------------------
# Boundary equilibria via binomial decomposition
# ---------------------------------------------------------------------------

@dataclass(frozen=True)
class BoundaryFace:
    zero_species: tuple[str, ...]
    prime_J: frozenset[int]
    lattice_rank: int
    admits_positive_real_zero: bool
    min_trajectory_distance: float | None = None


@dataclass(frozen=True)
class BoundaryReport:
    faces: tuple[BoundaryFace, ...]
    verification: dict


def boundary_equilibria(net: ReactionNetwork,
                        trajectory: Trajectory | None = None) -> BoundaryReport:
    """Faces carrying potential boundary equilibria: one entry per associated
    prime of the detailed-balance ideal, with a real-positivity flag for its
    character and, when a trajectory is supplied, the minimum distance of the
    trajectory to the face."""
    ideal = detailed_balance_ideal(net)
    dec = primary_decompose(ideal)
    faces = []
    for comp in dec.components:
        p = comp.prime
        outside = sorted(i for i in range(net.nspecies) if i not in p.J)
        positive = all(v.is_positive_rational() for v in p.character.values)
        dist = None
        if trajectory is not None and outside:
            dist = min(
                math.sqrt(sum(s[i] ** 2 for i in outside))
                for s in trajectory.states)
        faces.append(BoundaryFace(
            zero_species=tuple(net.species[i] for i in outside),
            prime_J=p.J,
            lattice_rank=p.character.lattice.rank,
            admits_positive_real_zero=positive,
            min_trajectory_distance=dist))
    faces.sort(key=lambda f: (f.zero_species, sorted(f.prime_J)))
    return BoundaryReport(faces=tuple(faces), verification=dec.verification)
