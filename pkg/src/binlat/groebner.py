"""Groebner bases for binomial ideals.

Every S-polynomial and reduction of binomials is again a binomial or a
monomial, so the whole computation stays inside the two-term representation;
cancellation to a single term is how monomials enter.  The reduced basis is
canonical for a fixed order, which makes ideal equality a tuple comparison.

Colon and saturation by a monomial use the standard extra-variable tricks
(t*I + (1-t)<x^m> for the intersection, 1 - t*x^m for the saturation); both
auxiliary ideals are binomial, so no generality is lost.
"""

from __future__ import annotations

from dataclasses import dataclass

from .binomials import (
    Binomial,
    BinomialIdeal,
    DEGREVLEX,
    MonomialOrder,
    expo_add,
    expo_divides,
    expo_lcm,
    expo_sub,
)
from .scalars import Cyclo


@dataclass(frozen=True)
class _TBlockOrder:
    """Elimination order: the last variable dominates, base order breaks ties."""

    base: MonomialOrder

    def key(self, e):
        return (e[-1], self.base.key(e[:-1]))

    def greater(self, a, b):
        return self.key(a) > self.key(b)


def _normalized(u, v, lam: Cyclo, order) -> Binomial | None:
    """Oriented element x^lead - lam' x^tail from raw data; None when zero."""
    if lam.is_zero():
        return Binomial.monomial(u, lam.order)
    if u == v:
        if lam.is_one():
            return None
        return Binomial.monomial(u, lam.order)
    if order.greater(u, v):
        return Binomial(u, v, lam)
    return Binomial(v, u, lam.inverse())


def orient(b: Binomial, order) -> Binomial | None:
    """Lead-first normal shape: x^lead - lam * x^tail, or a monomial, or None (zero)."""
    return _normalized(b.u, b.v, b.lam, order)


def _reduce(elem: Binomial, basis, order, skip=None) -> Binomial | None:
    """Full normal form of an oriented element against oriented ``basis``."""
    cur = elem
    while True:
        red = next((g for i, g in enumerate(basis)
                    if i != skip and expo_divides(g.u, cur.u)), None)
        if red is None:
            break
        if cur.is_monomial:
            if red.is_monomial:
                return None
            cur = Binomial.monomial(expo_add(expo_sub(cur.u, red.u), red.v),
                                    cur.lam.order)
            continue
        if red.is_monomial:
            # lead dies; the tail survives as a monomial
            cur = Binomial.monomial(cur.v, cur.lam.order)
            continue
        new_u = expo_add(expo_sub(cur.u, red.u), red.v)
        nxt = _normalized(new_u, cur.v, cur.lam / red.lam, order)
        if nxt is None:
            return None
        cur = nxt
    if cur.is_monomial:
        return cur
    # tail reduction; the tail strictly decreases, so this terminates
    while True:
        red = next((g for i, g in enumerate(basis)
                    if i != skip and expo_divides(g.u, cur.v)), None)
        if red is None:
            return cur
        if red.is_monomial:
            return Binomial.monomial(cur.u, cur.lam.order)
        new_v = expo_add(expo_sub(cur.v, red.u), red.v)
        cur = Binomial(cur.u, new_v, cur.lam * red.lam)


def _spair(f: Binomial, g: Binomial, order) -> Binomial | None:
    m = expo_lcm(f.u, g.u)
    if f.is_monomial and g.is_monomial:
        return None
    if f.is_monomial:
        return Binomial.monomial(expo_add(expo_sub(m, g.u), g.v), f.lam.order)
    if g.is_monomial:
        return Binomial.monomial(expo_add(expo_sub(m, f.u), f.v), f.lam.order)
    a = expo_add(expo_sub(m, g.u), g.v)
    b = expo_add(expo_sub(m, f.u), f.v)
    return _normalized(a, b, f.lam / g.lam, order)


def _unit(nvars, zorder) -> Binomial:
    return Binomial.monomial((0,) * nvars, zorder)


def buchberger(gens, order, nvars, zorder) -> list[Binomial]:
    """Reduced Groebner basis as a sorted list of oriented elements."""
    basis: list[Binomial] = []
    for g in gens:
        og = orient(g, order)
        if og is not None:
            basis.append(og)
    basis.sort(key=lambda g: order.key(g.u))
    pending = [(order.key(expo_lcm(basis[i].u, basis[j].u)), i, j)
               for i in range(len(basis)) for j in range(i + 1, len(basis))]

    def is_unit(b):
        return b.is_monomial and all(x == 0 for x in b.u)

    if any(is_unit(b) for b in basis):
        return [_unit(nvars, zorder)]

    import heapq
    heapq.heapify(pending)
    while pending:
        _, i, j = heapq.heappop(pending)
        f, g = basis[i], basis[j]
        if all(min(a, b) == 0 for a, b in zip(f.u, g.u)):
            continue  # coprime leads: S-pair reduces to zero
        s = _spair(f, g, order)
        if s is None:
            continue
        s = _reduce(s, basis, order)
        if s is None:
            continue
        if is_unit(s):
            return [_unit(nvars, zorder)]
        basis.append(s)
        k = len(basis) - 1
        for i2 in range(k):
            heapq.heappush(
                pending, (order.key(expo_lcm(basis[i2].u, s.u)), i2, k))

    # minimalize: keep the first element for each minimal lead
    basis.sort(key=lambda g: order.key(g.u))
    minimal: list[Binomial] = []
    for g in basis:
        if not any(expo_divides(h.u, g.u) for h in minimal):
            minimal.append(g)
    # tail-reduce each element against the others; leads are untouched
    reduced = []
    for g in minimal:
        others = [h for h in minimal if h.u != g.u]
        r = _reduce(g, others, order)
        assert r is not None and r.u == g.u
        reduced.append(r)
    reduced.sort(key=lambda g: order.key(g.u))
    return reduced


def reduced_groebner(ideal: BinomialIdeal, order: MonomialOrder = DEGREVLEX) -> BinomialIdeal:
    """Canonical reduced Groebner basis of ``ideal`` for ``order``.

    The unit ideal is signaled by the basis [1] (a single constant monomial),
    exposed via :func:`contains_one`.
    """
    gb = buchberger(list(ideal.generators), order, ideal.nvars, ideal.zeta_order)
    return BinomialIdeal(ideal.nvars, tuple(gb), ideal.zeta_order, ideal.names)


def contains_one(gb: BinomialIdeal) -> bool:
    return any(g.is_monomial and all(x == 0 for x in g.u) for g in gb.generators)


def is_zero_ideal(gb: BinomialIdeal) -> bool:
    return not gb.generators


def normal_form(coeff: Cyclo, expo, gb: BinomialIdeal,
                order: MonomialOrder = DEGREVLEX):
    """Normal form of coeff * x^expo modulo a reduced basis.

    Returns (coeff', expo') or None when the monomial lies in the ideal.  Two
    monomials are congruent modulo the ideal iff their normal forms are
    proportional, and the scalar is the coefficient ratio.
    """
    cur = tuple(expo)
    c = coeff
    while True:
        red = next((g for g in gb.generators if expo_divides(g.u, cur)), None)
        if red is None:
            return c, cur
        if red.is_monomial:
            return None
        cur = expo_add(expo_sub(cur, red.u), red.v)
        c = c * red.lam


def member(gb: BinomialIdeal, b: Binomial, order: MonomialOrder = DEGREVLEX) -> bool:
    """Exact ideal membership of a binomial via normal forms."""
    one = Cyclo.one(gb.zeta_order)
    nf_u = normal_form(one, b.u, gb, order)
    if b.is_monomial:
        return nf_u is None
    nf_v = normal_form(b.lam, b.v, gb, order)
    if nf_u is None and nf_v is None:
        return True
    if nf_u is None or nf_v is None:
        return False
    return nf_u[1] == nf_v[1] and nf_u[0] == nf_v[0]


def ideal_contains(gb_outer: BinomialIdeal, inner: BinomialIdeal) -> bool:
    return all(member(gb_outer, g) for g in inner.generators)


def same_ideal(gb_a: BinomialIdeal, gb_b: BinomialIdeal) -> bool:
    """Equality of two reduced bases computed with the same order."""
    if len(gb_a.generators) != len(gb_b.generators):
        return False
    for f, g in zip(gb_a.generators, gb_b.generators):
        if f.u != g.u or f.is_monomial != g.is_monomial:
            return False
        if not f.is_monomial and (f.v != g.v or f.lam != g.lam):
            return False
    return True


# ---------------------------------------------------------------------------
# Colon and saturation
# ---------------------------------------------------------------------------

def _eliminate_t(gens, nvars, zorder, order):
    """GB of the ideal in n+1 vars, then contraction to the first n vars."""
    telim = _TBlockOrder(order)
    gb = buchberger(gens, telim, nvars + 1, zorder)
    kept = []
    for g in gb:
        if g.u[-1] != 0 or (not g.is_monomial and g.v[-1] != 0):
            continue
        if g.is_monomial:
            kept.append(Binomial.monomial(g.u[:-1], zorder))
        else:
            kept.append(Binomial(g.u[:-1], g.v[:-1], g.lam))
    return kept


def colon_monomial(ideal: BinomialIdeal, m, order: MonomialOrder = DEGREVLEX) -> BinomialIdeal:
    """(I : x^m), computed as (I intersect <x^m>) shifted down by x^m."""
    m = tuple(m)
    n = ideal.nvars
    if all(x == 0 for x in m):
        return reduced_groebner(ideal, order)
    lifted = []
    for g in ideal.generators:  # t * g
        if g.is_monomial:
            lifted.append(Binomial.monomial(g.u + (1,), ideal.zeta_order))
        else:
            lifted.append(Binomial(g.u + (1,), g.v + (1,), g.lam))
    lifted.append(Binomial(m + (0,), m + (1,), Cyclo.one(ideal.zeta_order)))
    inter = _eliminate_t(lifted, n, ideal.zeta_order, order)
    shifted = []
    for g in inter:
        assert expo_divides(m, g.u) and (g.is_monomial or expo_divides(m, g.v))
        if g.is_monomial:
            shifted.append(Binomial.monomial(expo_sub(g.u, m), ideal.zeta_order))
        else:
            shifted.append(Binomial(expo_sub(g.u, m), expo_sub(g.v, m), g.lam))
    return reduced_groebner(
        BinomialIdeal(n, tuple(shifted), ideal.zeta_order, ideal.names), order)


def saturate_monomial(ideal: BinomialIdeal, m, order: MonomialOrder = DEGREVLEX) -> BinomialIdeal:
    """(I : x^m ^infinity), the union of the iterated colons by x^m."""
    m = tuple(m)
    n = ideal.nvars
    if all(x == 0 for x in m):
        return reduced_groebner(ideal, order)
    lifted = []
    for g in ideal.generators:
        if g.is_monomial:
            lifted.append(Binomial.monomial(g.u + (0,), ideal.zeta_order))
        else:
            lifted.append(Binomial(g.u + (0,), g.v + (0,), g.lam))
    lifted.append(Binomial((0,) * (n + 1), m + (1,), Cyclo.one(ideal.zeta_order)))
    kept = _eliminate_t(lifted, n, ideal.zeta_order, order)
    return reduced_groebner(
        BinomialIdeal(n, tuple(kept), ideal.zeta_order, ideal.names), order)


def quotient_or_saturate(ideal: BinomialIdeal, m, saturate: bool,
                         order: MonomialOrder = DEGREVLEX) -> BinomialIdeal:
    if saturate:
        return saturate_monomial(ideal, m, order)
    return colon_monomial(ideal, m, order)


def saturation_exponent(ideal: BinomialIdeal, m, order: MonomialOrder = DEGREVLEX) -> int:
    """Smallest e with (I : x^(e*m)) equal to the full saturation."""
    target = saturate_monomial(ideal, m, order)
    cur = reduced_groebner(ideal, order)
    e = 0
    while not same_ideal(cur, target):
        cur = colon_monomial(cur, m, order)
        e += 1
    return max(e, 1)


def add_generators(ideal: BinomialIdeal, extra, order: MonomialOrder = DEGREVLEX) -> BinomialIdeal:
    return reduced_groebner(
        BinomialIdeal(ideal.nvars, tuple(ideal.generators) + tuple(extra),
                      ideal.zeta_order, ideal.names), order)


def face_monomial(nvars: int, J) -> tuple[int, ...]:
    """Exponent of the product of the variables in J."""
    return tuple(1 if i in J else 0 for i in range(nvars))


def saturate_at_face(ideal: BinomialIdeal, J,
                     order: MonomialOrder = DEGREVLEX) -> BinomialIdeal:
    """(I : (prod_{j in J} x_j)^infinity); the contraction of I[Z^J]."""
    return saturate_monomial(ideal, face_monomial(ideal.nvars, J), order)
