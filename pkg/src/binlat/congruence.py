"""Congruence classes of binomial ideals and face-localized boundedness.

Membership in a congruence class is decided through normal forms, never by
closing edges inside a finite box, so classes whose connecting paths leave
the box are still joined.  Boundedness of a localized class is a genuine
decision procedure: the moves of the saturated ideal, gated only on the
coordinates outside the inverted face, form a reversible vector addition
system, and a breadth-first coverability search either exhausts the
projected class (bounded, with the stabilizer lattice read off spanning-tree
cycle labels) or finds a strictly dominating repeat (unbounded, with an
explicit pumping vector).
"""

from __future__ import annotations

import itertools
from collections import deque
from dataclasses import dataclass, field

from .binomials import Binomial, BinomialIdeal, DEGREVLEX, expo_sub
from .errors import ResourceExceeded
from .groebner import (
    contains_one,
    normal_form,
    reduced_groebner,
    saturate_at_face,
)
from .lattices import Lattice
from .scalars import Cyclo

MONOMIAL_CLASS = "monomial"


@dataclass(frozen=True)
class CongruenceClasses:
    """Partition of a box of N^n into congruence classes.

    ``key_of`` maps each point to the exponent of its canonical normal form
    (None for points whose monomial lies in the ideal); ``scalar_of`` holds
    the coefficient c with x^point congruent to c * x^key.
    """

    box: tuple[int, ...]
    classes: dict
    class_of_monomials: tuple
    key_of: dict
    scalar_of: dict
    inverted: frozenset | None = None

    def same_class(self, u, v) -> bool:
        return self.key_of[tuple(u)] == self.key_of[tuple(v)]

    def scalar(self, u, v) -> Cyclo:
        """lam with x^u - lam x^v in the ideal; u, v must share a class."""
        u, v = tuple(u), tuple(v)
        ku, kv = self.key_of[u], self.key_of[v]
        if ku != kv:
            raise ValueError("points in different classes")
        if ku is None:
            return Cyclo.one()
        return self.scalar_of[u] / self.scalar_of[v]

    def partition(self):
        return sorted(
            (sorted(pts) for pts in self.classes.values()),
            key=lambda c: c[0])


def box_points(box):
    return itertools.product(*(range(b + 1) for b in box))


def congruence_classes(ideal: BinomialIdeal, box, invert=None) -> CongruenceClasses:
    """Classes of the congruence induced by the ideal on box n N^n.

    With ``invert`` = J, classes are those of the localization inverting the
    J variables, i.e. of the saturation at prod_{j in J} x_j.
    """
    box = tuple(box)
    if invert is not None:
        gb = saturate_at_face(ideal, invert)
    else:
        gb = reduced_groebner(ideal)
    one = Cyclo.one(gb.zeta_order)
    key_of, scalar_of, classes = {}, {}, {}
    monomials = []
    for pt in box_points(box):
        nf = normal_form(one, pt, gb)
        if nf is None:
            key_of[pt] = None
            monomials.append(pt)
        else:
            c, key = nf
            key_of[pt] = key
            scalar_of[pt] = c
            classes.setdefault(key, []).append(pt)
    return CongruenceClasses(
        box=box,
        classes={k: tuple(v) for k, v in classes.items()},
        class_of_monomials=tuple(monomials),
        key_of=key_of,
        scalar_of=scalar_of,
        inverted=frozenset(invert) if invert is not None else None)


# ---------------------------------------------------------------------------
# Boundedness of localized classes
# ---------------------------------------------------------------------------

@dataclass(frozen=True)
class Boundedness:
    """Result of the face-localized boundedness decision for one class.

    kind is "bounded" (with the stabilizer lattice {b in Z^J : u ~ u + b}),
    "unbounded" (with a pumping vector w, u' ~ u' + w, w nonnegative and
    nonzero outside J), or "monomial" when x^u lies in the localized ideal.
    """

    kind: str
    stabilizer: Lattice | None = None
    pump_base: tuple | None = None
    pump: tuple | None = None
    states_explored: int = 0
    projection: tuple = ()


@dataclass(frozen=True)
class Move:
    delta: tuple          # full move vector v - u of one oriented generator
    gate: tuple           # required minimum on the Jbar coordinates
    proj: tuple           # delta restricted to Jbar
    jpart: tuple          # delta restricted to J (zero outside J)


def _moves(gb: BinomialIdeal, J, jbar):
    moves = []
    for g in gb.generators:
        if g.is_monomial:
            continue
        delta = expo_sub(g.v, g.u)
        for u_side, d in ((g.u, delta), (g.v, tuple(-x for x in delta))):
            gate = tuple(u_side[i] for i in jbar)
            proj = tuple(d[i] for i in jbar)
            jpart = tuple(d[i] if i in J else 0 for i in range(len(d)))
            moves.append(Move(tuple(d), gate, proj, jpart))
    return moves


def class_boundedness(ideal: BinomialIdeal, u, J, budget: int = 10 ** 6) -> Boundedness:
    """Decide whether the class of u in the J-localized congruence graph is
    J-bounded, i.e. meets only finitely many cosets of Z^J."""
    n = ideal.nvars
    u = tuple(u)
    J = frozenset(J)
    jbar = [i for i in range(n) if i not in J]
    gb = saturate_at_face(ideal, J)
    if contains_one(gb):
        return Boundedness(kind=MONOMIAL_CLASS)
    if normal_form(Cyclo.one(gb.zeta_order), u, gb) is None:
        return Boundedness(kind=MONOMIAL_CLASS)
    moves = _moves(gb, J, jbar)

    start = tuple(u[i] for i in jbar)
    zero = (0,) * n
    offsets = {start: zero}   # projected state -> full displacement from u
    stab_gens: list[tuple] = []
    queue = deque([start])
    while queue:
        state = queue.popleft()
        base_off = offsets[state]
        for mv in moves:
            if any(s < g for s, g in zip(state, mv.gate)):
                continue
            nxt = tuple(s + d for s, d in zip(state, mv.proj))
            new_off = tuple(a + b for a, b in zip(base_off, mv.delta))
            if nxt in offsets:
                diff = tuple(a - b for a, b in zip(new_off, offsets[nxt]))
                if any(diff):
                    stab_gens.append(diff)
                continue
            # domination check against every visited state certifies pumping
            for seen, seen_off in offsets.items():
                if all(a >= b for a, b in zip(nxt, seen)) and nxt != seen:
                    pump = tuple(a - b for a, b in zip(new_off, seen_off))
                    return Boundedness(
                        kind="unbounded",
                        pump_base=tuple(a + b for a, b in zip(u, seen_off)),
                        pump=pump,
                        states_explored=len(offsets))
                if all(a <= b for a, b in zip(nxt, seen)) and nxt != seen:
                    pump = tuple(a - b for a, b in zip(seen_off, new_off))
                    return Boundedness(
                        kind="unbounded",
                        pump_base=tuple(a + b for a, b in zip(u, new_off)),
                        pump=pump,
                        states_explored=len(offsets))
            offsets[nxt] = new_off
            queue.append(nxt)
            if len(offsets) > budget:
                raise ResourceExceeded(
                    "boundedness search exceeded %d states" % budget)
    stab = Lattice.from_generators(n, stab_gens, support=J)
    return Boundedness(
        kind="bounded",
        stabilizer=stab,
        states_explored=len(offsets),
        projection=tuple(sorted(offsets)))


def is_l_bounded(b: Boundedness, lattice: Lattice) -> bool:
    """A J-bounded class is L-bounded iff its stabilizer spans within Q L."""
    if b.kind != "bounded":
        return False
    return b.stabilizer.qspan_subset_of(lattice)
