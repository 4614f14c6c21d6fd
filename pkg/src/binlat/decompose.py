"""Binomial primary decomposition over cyclotomic-rational scalars.

Pipeline: split into cellular components (every variable nilpotent or a
nonzerodivisor), enumerate witnesses of bounded localized classes per cell,
read off their stabilizer lattices and witness characters, saturate the
lattices and enumerate the finitely many character extensions to candidate
primes, build primary components by adjoining the monomials of classes that
are not lattice-bounded, prune candidates whose component is redundant, and
certify the result by degree-truncated intersection comparison plus a
primary check per component.  Verification failures escalate the embedded
cutoff exponents and search boxes, so the pipeline is self-certifying at
desk scale.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass, field
from fractions import Fraction

from .binomials import Binomial, BinomialIdeal, expo_deg
from .congruence import Boundedness, box_points, class_boundedness, is_l_bounded
from .errors import (
    NeedCutoff,
    NotBounded,
    NotMinimal,
    VerificationFailed,
)
from .groebner import (
    add_generators,
    colon_monomial,
    contains_one,
    face_monomial,
    member,
    normal_form,
    reduced_groebner,
    same_ideal,
    saturate_at_face,
    saturate_monomial,
    saturation_exponent,
)
from .intlinalg import mat
from .lattices import Lattice, kernel_saturated
from .scalars import Cyclo
from .truncation import CompareResult, compare_truncations


# ---------------------------------------------------------------------------
# Characters, mesoprimes and primes
# ---------------------------------------------------------------------------

@dataclass(frozen=True)
class LatticeCharacter:
    """A homomorphism L -> k* given by its values on the HNF basis of L."""

    lattice: Lattice
    values: tuple[Cyclo, ...]

    def __post_init__(self):
        if len(self.values) != self.lattice.rank:
            raise ValueError("one value per basis vector required")

    def value(self, vec) -> Cyclo:
        coords = self.lattice.coordinates(tuple(vec))
        if coords is None:
            raise ValueError("vector outside the lattice")
        out = Cyclo.one()
        for c, v in zip(coords, self.values):
            out = out * v ** c
        return out

    def is_trivial(self) -> bool:
        return all(v.is_one() for v in self.values)

    def sort_key(self):
        return tuple(v.sort_key() for v in self.values)


@dataclass(frozen=True)
class Mesoprime:
    """Combinatorial prime datum (J, L, sigma); L need not be saturated."""

    nvars: int
    J: frozenset[int]
    character: LatticeCharacter

    def sort_key(self):
        return (tuple(sorted(self.J)), self.character.lattice.vectors,
                self.character.sort_key())


@dataclass(frozen=True)
class BinomialPrime(Mesoprime):
    """A binomial prime: the lattice is saturated inside Z^J."""

    def __post_init__(self):
        sat, factors = self.character.lattice.saturation()
        if any(f != 1 for f in factors):
            raise ValueError("prime requires a saturated lattice")


@dataclass(frozen=True)
class Witness:
    point: tuple[int, ...]
    mesoprime: Mesoprime


@dataclass(frozen=True)
class CellularComponent:
    J: frozenset[int]
    ideal: BinomialIdeal  # reduced basis


@dataclass(frozen=True)
class PrimaryComponent:
    prime: BinomialPrime
    ideal: BinomialIdeal  # reduced basis
    cutoff_exponent: int | None = None


@dataclass(frozen=True)
class PrimaryVerdict:
    status: str  # "primary" | "not_primary" | "unknown"
    orbit_count: int | None = None
    witness: tuple | None = None


@dataclass(frozen=True)
class DecompositionResult:
    ideal: BinomialIdeal
    components: tuple[PrimaryComponent, ...]
    verification: dict


def mesoprime_ideal(p: Mesoprime, zeta_order: int = 1,
                    names=None) -> BinomialIdeal:
    """The ideal I_sigma + <x_i : i not in J> presented by a reduced basis."""
    n = p.nvars
    gens = []
    lat = p.character.lattice
    for vec, val in zip(lat.vectors, p.character.values):
        pos = tuple(x if x > 0 else 0 for x in vec)
        neg = tuple(-x if x < 0 else 0 for x in vec)
        gens.append(Binomial(pos, neg, val))
    ideal = BinomialIdeal.make(n, gens, zeta_order, names)
    sat = saturate_at_face(ideal, p.J)
    extra = [Binomial.monomial(tuple(int(k == i) for k in range(n)), sat.zeta_order)
             for i in range(n) if i not in p.J]
    return add_generators(sat, extra)


# ---------------------------------------------------------------------------
# Toric ideals
# ---------------------------------------------------------------------------

def toric_ideal(a, names=None) -> BinomialIdeal:
    """Kernel of the monomial map of the integer matrix ``a`` (reduced basis).

    Built from a saturated kernel basis and saturation at the product of all
    the variables.
    """
    a = mat(a)
    lat = kernel_saturated(a)
    n = lat.ambient_dim
    gens = []
    for vec in lat.vectors:
        pos = tuple(x if x > 0 else 0 for x in vec)
        neg = tuple(-x if x < 0 else 0 for x in vec)
        gens.append(Binomial(pos, neg, Cyclo.one()))
    ideal = BinomialIdeal.make(n, gens, 1, names)
    return saturate_monomial(ideal, (1,) * n)


# ---------------------------------------------------------------------------
# Cellular decomposition
# ---------------------------------------------------------------------------

def _gb_key(gb: BinomialIdeal):
    out = []
    for g in gb.generators:
        if g.is_monomial:
            out.append((g.u, (), ()))
        else:
            out.append((g.u, g.v, g.lam.sort_key()))
    return tuple(out)


def cellular_decompose(ideal: BinomialIdeal) -> list[CellularComponent]:
    """Cellular components whose intersection is the ideal.

    A component is cellular when every variable is nilpotent or a
    nonzerodivisor; the splitting variable x is handled by the classical
    identity I = (I : x^inf) cap (I + <x^e>) at the stabilization exponent.
    """
    n = ideal.nvars
    gb = reduced_groebner(ideal)
    if contains_one(gb):
        return []
    done: list[BinomialIdeal] = []
    stack = [gb]
    seen = set()
    while stack:
        cur = stack.pop()
        key = _gb_key(cur)
        if key in seen:
            continue
        seen.add(key)
        if contains_one(cur):
            continue
        split = None
        for i in range(n):
            ei = tuple(int(k == i) for k in range(n))
            sat = saturate_monomial(cur, ei)
            if contains_one(sat):  # nilpotent variable
                continue
            quo = colon_monomial(cur, ei)
            if same_ideal(quo, cur):  # nonzerodivisor
                continue
            split = (i, ei, sat)
            break
        if split is None:
            done.append(cur)
            continue
        i, ei, sat = split
        e = saturation_exponent(cur, ei)
        power = tuple(e if k == i else 0 for k in range(n))
        stack.append(sat)
        stack.append(add_generators(cur, [Binomial.monomial(power, cur.zeta_order)]))
    # drop components containing another one (redundant in the intersection)
    done.sort(key=_gb_key)
    kept: list[BinomialIdeal] = []
    for cand in done:
        if any(all(member(cand, g) for g in other.generators) and
               not same_ideal(cand, other) for other in done):
            continue
        if any(same_ideal(cand, k) for k in kept):
            continue
        kept.append(cand)
    out = []
    for comp in kept:
        J = frozenset(i for i in range(n)
                      if same_ideal(colon_monomial(
                          comp, tuple(int(k == i) for k in range(n))), comp))
        out.append(CellularComponent(J=J, ideal=comp))
    out.sort(key=lambda c: (tuple(sorted(c.J)), _gb_key(c.ideal)))
    return out


# ---------------------------------------------------------------------------
# Witnesses and witness characters
# ---------------------------------------------------------------------------

def witness_character(ideal: BinomialIdeal, u, J, budget: int = 10 ** 6) -> Mesoprime:
    """Witness character of a J-bounded class, via K = (I : x^u).

    K is saturated along the face, the complement variables are killed, and
    the character values are the normal-form scalars between the two halves
    of each stabilizer basis vector.
    """
    u = tuple(u)
    J = frozenset(J)
    n = ideal.nvars
    bd = class_boundedness(ideal, u, J, budget)
    if bd.kind != "bounded":
        raise NotBounded("class of %r is not %r-bounded" % (u, sorted(J)))
    lat = bd.stabilizer
    K = colon_monomial(ideal, u)
    Ksat = saturate_at_face(K, J)
    extra = [Binomial.monomial(tuple(int(k == i) for k in range(n)), Ksat.zeta_order)
             for i in range(n) if i not in J]
    Kmeso = saturate_at_face(add_generators(Ksat, extra), J)
    # lattice cross-check from the basis binomials supported on the face
    diffs = [g.exponent_difference() for g in Kmeso.generators
             if not g.is_monomial
             and all(x == 0 for i, x in enumerate(g.u) if i not in J)
             and all(x == 0 for i, x in enumerate(g.v) if i not in J)]
    extracted = Lattice.from_generators(n, diffs, support=J)
    assert extracted == Lattice(n, lat.vectors, frozenset(J)), \
        "witness lattice mismatch"
    one = Cyclo.one(Kmeso.zeta_order)
    values = []
    for vec in lat.vectors:
        pos = tuple(x if x > 0 else 0 for x in vec)
        neg = tuple(-x if x < 0 else 0 for x in vec)
        nf_pos = normal_form(one, pos, Kmeso)
        nf_neg = normal_form(one, neg, Kmeso)
        assert nf_pos is not None and nf_neg is not None and nf_pos[1] == nf_neg[1]
        sigma = nf_pos[0] / nf_neg[0]
        values.append(sigma)
        assert member(Kmeso, Binomial(pos, neg, sigma))
    char = LatticeCharacter(Lattice(n, lat.vectors, frozenset(J)), tuple(values))
    return Mesoprime(nvars=n, J=J, character=char)


def _class_representatives(gb_sat: BinomialIdeal, box):
    """Lexicographically least representative per localized class on the box."""
    one = Cyclo.one(gb_sat.zeta_order)
    reps = {}
    boundary = set()
    for pt in box_points(box):
        nf = normal_form(one, pt, gb_sat)
        if nf is None:
            continue
        key = nf[1]
        if key not in reps:
            reps[key] = pt
            if any(p == b for p, b in zip(pt, box)):
                boundary.add(key)
    return reps, boundary


def potentially_associated(ideal: BinomialIdeal, budget: int = 10 ** 6,
                           box=None) -> list[Witness]:
    """Witnesses of the finitely many potentially associated lattices.

    One witness per (J, L, sigma) triple, scanning each cellular component's
    standard exponents up to its generator box (doubled once when a witness
    sits on the boundary).
    """
    found: dict = {}
    for comp in cellular_decompose(ideal):
        J = comp.J
        base_box = box or tuple(b + 1 for b in comp.ideal.max_exponent_box())
        gb_sat = saturate_at_face(comp.ideal, J)
        boxes = [base_box]
        reps, boundary = _class_representatives(gb_sat, base_box)
        if boundary:
            big = tuple(2 * b for b in base_box)
            boxes.append(big)
            more, _ = _class_representatives(gb_sat, big)
            for key, pt in more.items():
                reps.setdefault(key, pt)
        for key in sorted(reps):
            pt = reps[key]
            bd = class_boundedness(comp.ideal, pt, J, budget)
            if bd.kind != "bounded":
                continue
            meso = witness_character(comp.ideal, pt, J, budget)
            wkey = meso.sort_key()
            if wkey not in found:
                found[wkey] = Witness(point=pt, mesoprime=meso)
    return [found[k] for k in sorted(found)]


# ---------------------------------------------------------------------------
# Character extension to saturated lattices
# ---------------------------------------------------------------------------

def extend_characters(meso: Mesoprime) -> list[BinomialPrime]:
    """All characters of L_sat restricting to sigma on L, as binomial primes.

    There are exactly |L_sat / L| of them; the cyclotomic order grows by the
    necessary root orders.
    """
    from .intlinalg import smith_normal_form, unimodular_inverse, mat_mul

    lat = meso.character.lattice
    sat, _ = lat.saturation()
    sat = Lattice(lat.ambient_dim, sat.vectors, frozenset(meso.J))
    if lat.rank == 0:
        char = LatticeCharacter(sat, ())
        return [BinomialPrime(meso.nvars, meso.J, char)]
    coords = tuple(sat.coordinates(v) for v in lat.vectors)
    snf = smith_normal_form(coords)
    dvals = [snf.d[i][i] for i in range(lat.rank)]
    vinv = unimodular_inverse(snf.v)
    # new bases: rows of U*coords*sat equal d_i times rows of Vinv*sat
    new_sat_rows = mat_mul(vinv, sat.vectors)
    root_choices = []
    for i in range(lat.rank):
        # sigma on the adapted L-basis row i = sum_j U[i][j] * (old basis row j)
        val = Cyclo.one()
        for j, c in enumerate(snf.u[i]):
            val = val * meso.character.values[j] ** c
        root_choices.append(val.nth_roots(dvals[i]))
    primes = []
    for combo in itertools.product(*root_choices):
        # express the character on the canonical HNF basis of sat
        adapted = Lattice.from_generators(lat.ambient_dim, new_sat_rows, meso.J)
        assert adapted == sat
        values = []
        for h in sat.vectors:
            sol = _integer_combination(new_sat_rows, h)
            val = Cyclo.one()
            for c, xi in zip(sol, combo):
                val = val * xi ** c
            values.append(val)
        char = LatticeCharacter(sat, tuple(values))
        primes.append(BinomialPrime(meso.nvars, meso.J, char))
    expected = 1
    for d in dvals:
        expected *= d
    assert len(primes) == expected
    # deduplicate (roots of unity may coincide after embedding)
    unique = []
    for p in primes:
        if not any(q.character.values == p.character.values for q in unique):
            unique.append(p)
    assert len(unique) == expected, "character extensions must be distinct"
    unique.sort(key=lambda p: p.sort_key())
    return unique


def _integer_combination(rows, target):
    """c with c @ rows == target, rows integer; raises when impossible."""
    from .intlinalg import smith_normal_form, transpose, mat_vec

    a = transpose(rows)  # solve A c^T = target^T
    snf = smith_normal_form(a)
    y = mat_vec(snf.u, target)
    k = len(rows)
    sol = [0] * k
    for i in range(len(y)):
        d = snf.d[i][i] if (i < k and i < len(snf.d)) else 0
        if d != 0:
            if y[i] % d != 0:
                raise ValueError("no integer combination")
            sol[i] = y[i] // d
        elif y[i] != 0:
            raise ValueError("no integer combination")
    return mat_vec(snf.v, sol)


# ---------------------------------------------------------------------------
# Primary components
# ---------------------------------------------------------------------------

def _complement_power_gens(n, J, e, zeta_order):
    """Generators of (x_i : i not in J)^e."""
    outside = [i for i in range(n) if i not in J]
    gens = []
    for combo in itertools.combinations_with_replacement(outside, e):
        expo = [0] * n
        for i in combo:
            expo[i] += 1
        gens.append(Binomial.monomial(tuple(expo), zeta_order))
    return gens


def primary_component(ideal: BinomialIdeal, prime: BinomialPrime,
                      cutoff_exponent: int | None = None,
                      budget: int = 10 ** 6,
                      box_scale: int = 1,
                      check: bool = True) -> PrimaryComponent:
    """Primary component at ``prime``: saturate I + I_rho (+ cutoff) along the
    face and adjoin the monomials of classes that are not lattice-bounded.

    When no cutoff is given and the result fails the primary certificate the
    prime is embedded and NeedCutoff is raised (suppressed via check=False for
    callers running their own verification).
    """
    n = ideal.nvars
    J = prime.J
    L = prime.character.lattice
    gens = list(ideal.generators)
    for vec, val in zip(L.vectors, prime.character.values):
        pos = tuple(x if x > 0 else 0 for x in vec)
        neg = tuple(-x if x < 0 else 0 for x in vec)
        gens.append(Binomial(pos, neg, val))
    zorder = ideal.zeta_order
    if cutoff_exponent is not None:
        gens.extend(_complement_power_gens(n, J, cutoff_exponent, zorder))
    base = BinomialIdeal.make(n, gens, zorder, ideal.names)
    iprime = saturate_at_face(base, J)
    if contains_one(iprime):
        return PrimaryComponent(prime=prime, ideal=iprime,
                                cutoff_exponent=cutoff_exponent)
    box = tuple(box_scale * (b + 1) for b in iprime.max_exponent_box())
    reps, _ = _class_representatives(iprime, box)
    marked = []
    cache: dict = {}
    one = Cyclo.one(iprime.zeta_order)
    for key in sorted(reps):
        pt = reps[key]
        bd = class_boundedness(iprime, pt, J, budget)
        cache[key] = bd.kind == "bounded" and is_l_bounded(bd, L)
    for pt in box_points(box):
        nf = normal_form(one, pt, iprime)
        if nf is None:
            continue
        if not cache[nf[1]]:
            marked.append(pt)
    mingens = [p for p in marked
               if not any(q != p and all(a <= b for a, b in zip(q, p))
                          for q in marked)]
    comp = add_generators(iprime, [Binomial.monomial(m, iprime.zeta_order)
                                   for m in sorted(mingens)])
    result = PrimaryComponent(prime=prime, ideal=comp,
                              cutoff_exponent=cutoff_exponent)
    if check and cutoff_exponent is None:
        if is_primary(result.ideal, prime, budget=budget).status != "primary":
            raise NeedCutoff(
                "prime appears embedded; supply a monomial cutoff exponent")
    return result


def monomial_primary_component(ideal: BinomialIdeal, J,
                               budget: int = 10 ** 6) -> PrimaryComponent:
    """Primary component at the monomial prime generated by the variables
    outside J, which must be minimal over the ideal."""
    n = ideal.nvars
    J = frozenset(J)
    pJ_gens = [Binomial.monomial(tuple(int(k == i) for k in range(n)))
               for i in range(n) if i not in J]
    pJ = reduced_groebner(BinomialIdeal.make(n, pJ_gens))
    for g in ideal.generators:
        if not member(pJ, g):
            raise NotMinimal("ideal is not contained in the face prime")
    trivial = BinomialPrime(n, J, LatticeCharacter(Lattice.zero(n, J), ()))
    comp = primary_component(ideal, trivial, None, budget, check=False)
    verdict = is_primary(comp.ideal, trivial, budget=budget)
    if verdict.status == "not_primary":
        raise NotMinimal("face prime is not minimal over the ideal")
    return comp


# ---------------------------------------------------------------------------
# Primary test
# ---------------------------------------------------------------------------

def is_primary(ideal: BinomialIdeal, prime: BinomialPrime, box=None,
               budget: int = 10 ** 6) -> PrimaryVerdict:
    """Box-certified primary test against the given prime.

    Checks containment both ways, that every non-monomial localized class is
    bounded with stabilizer exactly the prime's lattice, that translation by
    each face direction is injective on classes, and that the face-orbit
    count stabilizes under box doubling.  "unknown" never refutes primality.
    """
    n = ideal.nvars
    J = prime.J
    L = Lattice(n, prime.character.lattice.vectors, frozenset(J))
    gb = reduced_groebner(ideal)
    p_gb = mesoprime_ideal(prime, gb.zeta_order, ideal.names)
    for g in gb.generators:
        if not member(p_gb, g):
            return PrimaryVerdict("not_primary", witness=g.u)
    for vec, val in zip(L.vectors, prime.character.values):
        pos = tuple(x if x > 0 else 0 for x in vec)
        neg = tuple(-x if x < 0 else 0 for x in vec)
        if not member(gb, Binomial(pos, neg, val)):
            return PrimaryVerdict("not_primary", witness=vec)
    sat = saturate_at_face(gb, J)
    if contains_one(sat):
        return PrimaryVerdict("not_primary", witness=())
    if box is None:
        box = tuple(b + 1 for b in sat.max_exponent_box())

    def orbit_census(bx):
        reps, _ = _class_representatives(sat, bx)
        one = Cyclo.one(sat.zeta_order)
        for key in sorted(reps):
            bd = class_boundedness(gb, reps[key], J, budget)
            if bd.kind != "bounded":
                return None, ("unbounded class", reps[key])
            if Lattice(n, bd.stabilizer.vectors, frozenset(J)) != L:
                return None, ("stabilizer mismatch", reps[key])
        # semifree injectivity and orbit union-find along face directions
        parent = {k: k for k in reps}

        def find(k):
            while parent[k] != k:
                parent[k] = parent[parent[k]]
                k = parent[k]
            return k

        for j in sorted(J):
            images = {}
            ej = tuple(int(i == j) for i in range(n))
            for key in sorted(reps):
                shifted = tuple(a + b for a, b in zip(reps[key], ej))
                nf = normal_form(one, shifted, sat)
                assert nf is not None, "face translate of a standard class died"
                img = nf[1]
                if img in images and images[img] != key:
                    return None, ("translation collision", reps[key])
                images[img] = key
                if img in parent:
                    ra, rb = find(key), find(img)
                    if ra != rb:
                        parent[ra] = rb
        return len({find(k) for k in reps}), None

    count1, fail = orbit_census(box)
    if fail is not None:
        return PrimaryVerdict("not_primary", witness=fail[1])
    count2, fail = orbit_census(tuple(2 * b for b in box))
    if fail is not None:
        return PrimaryVerdict("not_primary", witness=fail[1])
    if count1 == count2:
        return PrimaryVerdict("primary", orbit_count=count1)
    return PrimaryVerdict("unknown", orbit_count=count2)


# ---------------------------------------------------------------------------
# Full decomposition
# ---------------------------------------------------------------------------

def _candidate_primes(ideal: BinomialIdeal, budget: int, box=None):
    cands = []
    for w in potentially_associated(ideal, budget, box=box):
        for p in extend_characters(w.mesoprime):
            if not any(q.sort_key() == p.sort_key() for q in cands):
                cands.append(p)
    cands.sort(key=lambda p: p.sort_key())
    return cands


def decompose_full(ideal: BinomialIdeal, degree_bound: int | None = None,
                   budget: int = 10 ** 6, max_rounds: int = 4) -> DecompositionResult:
    gb = reduced_groebner(ideal)
    bound = degree_bound or 2 * max(1, gb.max_degree(), ideal.max_degree())
    if contains_one(gb):
        return DecompositionResult(gb, (), {
            "bound": bound, "intersection": "equal", "note": "unit ideal"})
    cands = _candidate_primes(gb, budget)
    prime_gbs = [mesoprime_ideal(p, gb.zeta_order, ideal.names) for p in cands]
    minimal = []
    for i, pg in enumerate(prime_gbs):
        others_below = any(
            j != i and all(member(pg, g) for g in prime_gbs[j].generators)
            for j in range(len(cands)))
        minimal.append(not others_below)

    cutoff0 = max(2, gb.max_degree())
    last = None
    for round_no in range(max_rounds):
        scale = 2 ** round_no
        comps = []
        for p, is_min in zip(cands, minimal):
            cut = None if is_min else cutoff0 * scale
            comps.append(primary_component(gb, p, cut, budget,
                                           box_scale=scale, check=False))
        res = compare_truncations(gb, [c.ideal for c in comps], bound)
        last = (comps, res)
        if res.verdict == "equal":
            break
    comps, res = last
    if res.verdict != "equal":
        raise VerificationFailed(
            "intersection check failed at bound %d: %s" % (bound, res.verdict))

    # redundancy pruning: embedded candidates whose removal keeps equality
    order_idx = sorted(
        (i for i in range(len(comps)) if not minimal[i]),
        key=lambda i: (-sum(1 for j in range(len(comps))
                            if j != i and all(member(prime_gbs[i], g)
                                              for g in prime_gbs[j].generators)),
                       cands[i].sort_key()))
    keep = set(range(len(comps)))
    for i in order_idx:
        trial = [comps[j].ideal for j in sorted(keep - {i})]
        if compare_truncations(gb, trial, bound).verdict == "equal":
            keep.discard(i)
    comps = [comps[i] for i in sorted(keep)]

    spot = compare_truncations(gb, [c.ideal for c in comps],
                               bound + bound // 2)
    verdicts = [is_primary(c.ideal, c.prime, budget=budget) for c in comps]
    verification = {
        "bound": bound,
        "intersection": "equal",
        "spot_bound": bound + bound // 2,
        "spot_intersection": spot.verdict,
        "primary": tuple(v.status for v in verdicts),
        "orbits": tuple(v.orbit_count for v in verdicts),
    }
    if spot.verdict != "equal":
        raise VerificationFailed("spot check at higher bound failed")
    return DecompositionResult(gb, tuple(comps), verification)


def associated_primes(ideal: BinomialIdeal, budget: int = 10 ** 6) -> list[BinomialPrime]:
    """Associated primes: candidates surviving redundancy pruning."""
    return [c.prime for c in decompose_full(ideal, budget=budget).components]


def primary_decompose(ideal: BinomialIdeal, degree_bound: int | None = None,
                      budget: int = 10 ** 6) -> DecompositionResult:
    return decompose_full(ideal, degree_bound=degree_bound, budget=budget)
