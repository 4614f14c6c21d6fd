"""Lattice games on N^d: rule sets, winning sets, strategies, quotients.

Win/loss tables are exact on their box: the dependency closure of the box
under backward moves is finite (the rule-set cone is pointed), and positions
are processed in increasing order of a strictly positive rational functional
on the rule set, so every table entry is the true game value, not a
box-truncated approximation.
"""

from __future__ import annotations

import itertools
from collections import deque
from dataclasses import dataclass, field
from fractions import Fraction

from .errors import (
    BadOctal,
    InvariantViolation,
    MisereUnsupported,
    NotDisjoint,
    NotFree,
    NotSquarefree,
    OutOfBox,
)
from .intlinalg import rref, solve_rational
from .lattices import is_pointed
from . import linprog


# ---------------------------------------------------------------------------
# Rule sets and games
# ---------------------------------------------------------------------------

@dataclass(frozen=True)
class RuleSet:
    dim: int
    gamma: tuple[tuple[int, ...], ...]

    def __post_init__(self):
        if not self.gamma:
            raise InvariantViolation("empty rule set")
        for g in self.gamma:
            if len(g) != self.dim:
                raise InvariantViolation("rule vector of wrong dimension")
            if all(x == 0 for x in g):
                raise InvariantViolation("zero vector is not a legal rule")
        if len(set(self.gamma)) != len(self.gamma):
            raise InvariantViolation("duplicate rule vector")
        if not is_pointed(self.gamma):
            raise InvariantViolation("rule-set cone is not pointed")

    def theta(self) -> tuple[Fraction, ...]:
        """A rational functional strictly positive on every rule vector."""
        k = len(self.gamma)
        d = self.dim
        # theta free, slack s >= 0: theta . g - s = 1 for each rule
        rows, rhs = [], []
        for i, g in enumerate(self.gamma):
            row = list(g) + [-x for x in g] + [0] * k
            row[2 * d + i] = -1
            rows.append(row)
            rhs.append(1)
        status, x, _ = linprog.solve_lp([0] * (2 * d + k), rows, rhs)
        assert status == linprog.OPTIMAL, "pointed rule set admits a functional"
        return tuple(x[i] - x[d + i] for i in range(d))


def position_from_heaps(heaps, d: int) -> tuple[int, ...]:
    """Encode a multiset of heap sizes as a lattice point in N^d."""
    v = [0] * d
    for h in heaps:
        if not 1 <= h <= d:
            raise InvariantViolation("heap size %d outside 1..%d" % (h, d))
        v[h - 1] += 1
    return tuple(v)


def build_ruleset(spec: dict) -> RuleSet:
    """Rule set from an octal code, a nim dimension, or explicit vectors.

    Octal digit bits for heap parameter k: 1 destroys a k-heap (e_k),
    2 turns j into j-k (e_j - e_{j-k}, j >= k+1), 4 splits j into two heaps
    summing to j-k (e_j - e_i - e_{j-k-i}, j >= k+2).
    """
    if "octal" in spec:
        code = spec["octal"]
        d = int(spec["d"])
        if not code.startswith("."):
            raise BadOctal("octal code must start with the place-holder dot")
        digits = code[1:]
        if not digits or any(c not in "01234567" for c in digits):
            raise BadOctal("octal digits must be 0-7")
        gamma = set()
        e = lambda j: tuple(int(i == j - 1) for i in range(d))
        for k, ch in enumerate(digits, start=1):
            bits = int(ch)
            if bits & 1 and k <= d:
                gamma.add(e(k))
            if bits & 2:
                for j in range(k + 1, d + 1):
                    gamma.add(tuple(a - b for a, b in zip(e(j), e(j - k))))
            if bits & 4:
                for j in range(k + 2, d + 1):
                    for i in range(1, j - k):
                        i2 = j - k - i
                        if i2 < 1 or i > i2:
                            continue
                        vec = list(e(j))
                        vec[i - 1] -= 1
                        vec[i2 - 1] -= 1
                        gamma.add(tuple(vec))
        if not gamma:
            raise BadOctal("octal code generates no moves within dimension %d" % d)
        return RuleSet(d, tuple(sorted(gamma)))
    if "nim" in spec:
        d = int(spec["nim"])
        gamma = [tuple(int(i == j) for i in range(d)) for j in range(d)]
        for j in range(d):
            for i in range(j):
                gamma.append(tuple((1 if k == j else 0) - (1 if k == i else 0)
                                   for k in range(d)))
        return RuleSet(d, tuple(sorted(gamma)))
    if "explicit" in spec:
        vecs = tuple(tuple(int(x) for x in v) for v in spec["explicit"])
        d = int(spec.get("d", len(vecs[0]) if vecs else 0))
        return RuleSet(d, tuple(sorted(set(vecs))))
    raise InvariantViolation("rule-set spec needs octal, nim or explicit")


@dataclass(frozen=True)
class LatticeGame:
    rules: RuleSet
    defeated: frozenset[tuple[int, ...]] = frozenset()

    def __post_init__(self):
        d = self.rules.dim
        for p in self.defeated:
            if len(p) != d or any(x < 0 for x in p):
                raise InvariantViolation("defeated position outside N^d")
        _check_order_ideal(self.rules, self.defeated)

    @property
    def dim(self) -> int:
        return self.rules.dim

    def on_board(self, p) -> bool:
        return all(x >= 0 for x in p) and tuple(p) not in self.defeated


def _in_ngamma(rules: RuleSet, v, _memo=None) -> bool:
    """Membership of v in the monoid generated by the rule set."""
    memo = {} if _memo is None else _memo
    theta = rules.theta()

    def rec(w):
        if all(x == 0 for x in w):
            return True
        if w in memo:
            return memo[w]
        memo[w] = False
        t = sum(a * b for a, b in zip(theta, w))
        for g in rules.gamma:
            tg = sum(a * b for a, b in zip(theta, g))
            if tg <= t and rec(tuple(a - b for a, b in zip(w, g))):
                memo[w] = True
                break
        return memo[w]

    return rec(tuple(v))


def _check_order_ideal(rules: RuleSet, defeated):
    """Defeated positions must form a finite Gamma-order ideal."""
    if not defeated:
        return
    memo: dict = {}
    region = _dependency_closure(rules, sorted(defeated))
    for q in defeated:
        for p in region:
            if p == q or p in defeated:
                continue
            diff = tuple(a - b for a, b in zip(q, p))
            if _in_ngamma(rules, diff, memo):
                raise InvariantViolation(
                    "defeated set is not an order ideal: %r below %r" % (p, q))


# ---------------------------------------------------------------------------
# Win/loss computation
# ---------------------------------------------------------------------------

def _dependency_closure(rules: RuleSet, seeds):
    """Smallest superset of the seeds closed under p -> p - gamma in N^d."""
    seen = set(tuple(p) for p in seeds)
    queue = deque(seen)
    while queue:
        p = queue.popleft()
        for g in rules.gamma:
            q = tuple(a - b for a, b in zip(p, g))
            if all(x >= 0 for x in q) and q not in seen:
                seen.add(q)
                queue.append(q)
    return seen


@dataclass
class WinLossTable:
    game: LatticeGame
    box: tuple[int, ...]
    winning: frozenset
    losing: frozenset
    statuses: dict  # exact status ("W"/"L") for every board point of the closure

    def status(self, p):
        p = tuple(p)
        if p in self.game.defeated:
            return "D"
        if p not in self.statuses:
            raise OutOfBox("position %r outside the certified region" % (p,))
        return self.statuses[p]

    def is_winning(self, p) -> bool:
        return self.status(p) == "W"


def compute_win_loss(game: LatticeGame, box, _shuffle: bool = False) -> WinLossTable:
    """Exact winning and losing sets on the box.

    Positions are decided in increasing order of a strictly positive
    functional on the rule set; a position is losing iff some legal move
    lands on a winning position.
    """
    box = tuple(box)
    rules = game.rules
    seeds = [p for p in itertools.product(*(range(b + 1) for b in box))]
    closure = _dependency_closure(rules, seeds)
    theta = rules.theta()
    order = sorted(closure, key=lambda p: (sum(a * b for a, b in zip(theta, p)),
                                           tuple(reversed(p)) if _shuffle else p))
    statuses: dict = {}
    for p in order:
        if p in game.defeated:
            continue
        losing = False
        for g in rules.gamma:
            q = tuple(a - b for a, b in zip(p, g))
            if all(x >= 0 for x in q) and q not in game.defeated:
                if statuses[q] == "W":
                    losing = True
                    break
        statuses[p] = "L" if losing else "W"
    winning = frozenset(p for p in seeds if statuses.get(p) == "W")
    losing = frozenset(p for p in seeds
                       if p not in game.defeated and statuses.get(p) == "L")
    return WinLossTable(game=game, box=box, winning=winning, losing=losing,
                        statuses=statuses)


def verify_win_loss(table: WinLossTable) -> bool:
    """The defining conditions B = W disjoint-union L and (W + Gamma) cap B = L,
    checked on every instance the table can resolve."""
    game = table.game
    for p in itertools.product(*(range(b + 1) for b in table.box)):
        if p in game.defeated:
            if p in table.winning or p in table.losing:
                return False
            continue
        if (p in table.winning) == (p in table.losing):
            return False
        has_move_to_w = False
        for g in game.rules.gamma:
            q = tuple(a - b for a, b in zip(p, g))
            if game.on_board(q) and table.statuses.get(q) == "W":
                has_move_to_w = True
                break
        if (p in table.losing) != has_move_to_w:
            return False
    return True


@dataclass(frozen=True)
class RulesetVerdict:
    status: str  # "valid" | "not_pointed" | "path_fail"
    failure: tuple | None = None


def validate_ruleset(rules: RuleSet, box) -> RulesetVerdict:
    """Pointedness exactly; the path-to-zero condition exhaustively on the box
    (sound there, unknown beyond)."""
    if not is_pointed(rules.gamma):
        return RulesetVerdict("not_pointed")
    box = tuple(box)
    for factor in (2, 4):
        region = tuple(factor * b + max(max(abs(x) for x in g)
                                        for g in rules.gamma) for b in box)
        marked = {(0,) * rules.dim}
        queue = deque(marked)
        while queue:
            p = queue.popleft()
            for g in rules.gamma:
                q = tuple(a + b for a, b in zip(p, g))
                if all(0 <= x <= r for x, r in zip(q, region)) and q not in marked:
                    marked.add(q)
                    queue.append(q)
        missing = [p for p in itertools.product(*(range(b + 1) for b in box))
                   if p not in marked]
        if not missing:
            return RulesetVerdict("valid")
    return RulesetVerdict("path_fail", failure=min(missing))


# ---------------------------------------------------------------------------
# Grundy values
# ---------------------------------------------------------------------------

def grundy_values(game: LatticeGame, box) -> dict:
    """Sprague-Grundy values under normal play; the zero set equals W."""
    if game.defeated:
        raise MisereUnsupported("Grundy theory requires normal play")
    rules = game.rules
    box = tuple(box)
    seeds = list(itertools.product(*(range(b + 1) for b in box)))
    closure = _dependency_closure(rules, seeds)
    theta = rules.theta()
    order = sorted(closure, key=lambda p: (sum(a * b for a, b in zip(theta, p)), p))
    values: dict = {}
    for p in order:
        opts = set()
        for g in rules.gamma:
            q = tuple(a - b for a, b in zip(p, g))
            if all(x >= 0 for x in q):
                opts.add(values[q])
        v = 0
        while v in opts:
            v += 1
        values[p] = v
    return {p: values[p] for p in seeds}


def grundy_value(game: LatticeGame, p) -> int:
    return grundy_values(game, tuple(p))[tuple(p)]


# ---------------------------------------------------------------------------
# Stratifications and rational strategies
# ---------------------------------------------------------------------------

@dataclass(frozen=True)
class Piece:
    translate: tuple[int, ...]
    generators: tuple[tuple[int, ...], ...]

    def contains(self, p) -> bool:
        """p in translate + N{generators}; generators must be independent."""
        diff = tuple(a - b for a, b in zip(p, self.translate))
        if not self.generators:
            return all(x == 0 for x in diff)
        cols = list(zip(*self.generators))  # d x k matrix
        sol = solve_rational(cols, diff)
        if sol is None:
            return False
        return all(c.denominator == 1 and c >= 0 for c in sol)


@dataclass(frozen=True)
class AffineStratification:
    pieces: tuple[Piece, ...]

    def contains(self, p) -> bool:
        return any(piece.contains(p) for piece in self.pieces)


@dataclass(frozen=True)
class StratVerdict:
    status: str  # "equal" | "mismatch"
    mismatch: tuple | None = None


def verify_stratification(strat: AffineStratification, game: LatticeGame,
                          box) -> StratVerdict:
    table = compute_win_loss(game, box)
    for p in itertools.product(*(range(b + 1) for b in tuple(box))):
        if p in game.defeated:
            continue
        if strat.contains(p) != (p in table.winning):
            return StratVerdict("mismatch", mismatch=p)
    return StratVerdict("equal")


@dataclass(frozen=True)
class RationalStrategy:
    """Sum of terms t^a / prod(1 - t^g), one per stratification piece."""

    terms: tuple  # ((numerator exponent, (denominator exponents ...)), ...)

    def coefficient(self, p) -> int:
        """Coefficient of t^p: the number of pieces containing p."""
        count = 0
        for numer, denoms in self.terms:
            if Piece(translate=numer, generators=denoms).contains(p):
                count += 1
        return count

    def is_winning(self, p) -> bool:
        return self.coefficient(p) == 1


def rational_strategy(strat: AffineStratification, check_box=None) -> RationalStrategy:
    """Generating function of the union of disjoint free pieces."""
    for piece in strat.pieces:
        k = len(piece.generators)
        if k:
            if any(any(x < 0 for x in g) for g in piece.generators):
                raise NotFree("piece generators must be nonnegative")
            _, pivots = rref(piece.generators)
            if len(pivots) != k:
                raise NotFree("piece generators are linearly dependent")
    if strat.pieces:
        dim = len(strat.pieces[0].translate)
        if check_box is None:
            hi = 1 + 2 * max(max((max(p.translate), ) +
                                 tuple(max(g) for g in p.generators) if p.generators
                                 else (max(p.translate),))
                             for p in strat.pieces)
            check_box = (hi,) * dim
        for p in itertools.product(*(range(b + 1) for b in check_box)):
            if sum(1 for piece in strat.pieces if piece.contains(p)) > 1:
                raise NotDisjoint("pieces overlap at %r" % (p,))
    terms = tuple((piece.translate, tuple(sorted(piece.generators)))
                  for piece in strat.pieces)
    return RationalStrategy(terms=terms)


def winning_move(game: LatticeGame, source, p):
    """A rule vector moving p to a winning position, or None when p wins.

    ``source`` is a WinLossTable, AffineStratification or RationalStrategy.
    """
    p = tuple(p)
    if not game.on_board(p):
        raise InvariantViolation("position %r is not on the board" % (p,))

    def is_win(q):
        if isinstance(source, WinLossTable):
            return source.is_winning(q)
        if isinstance(source, (AffineStratification, RationalStrategy)):
            return source.is_winning(q) if isinstance(source, RationalStrategy) \
                else source.contains(q)
        raise TypeError("unsupported winning-set source")

    if is_win(p):
        return None
    for g in sorted(game.rules.gamma):
        q = tuple(a - b for a, b in zip(p, g))
        if game.on_board(q) and is_win(q):
            return g
    raise OutOfBox("no certified winning move found from %r" % (p,))


# ---------------------------------------------------------------------------
# Squarefree closed form
# ---------------------------------------------------------------------------

def squarefree_solve(game: LatticeGame):
    """Closed form for squarefree normal-play games: W = W0 + 2 N^d."""
    if game.defeated:
        raise MisereUnsupported("closed form requires normal play")
    rules = game.rules
    if any(max(g) > 1 for g in rules.gamma):
        raise NotSquarefree("a rule has an entry exceeding 1")
    d = rules.dim
    table = compute_win_loss(game, (1,) * d)
    w0 = tuple(sorted(table.winning))
    two_id = tuple(tuple(2 * int(i == j) for i in range(d)) for j in range(d))
    strat = AffineStratification(
        pieces=tuple(Piece(translate=w, generators=two_id) for w in w0))
    strategy = rational_strategy(strat, check_box=(3,) * d)
    return w0, strat, strategy


# ---------------------------------------------------------------------------
# Misere quotients
# ---------------------------------------------------------------------------

@dataclass(frozen=True)
class MisereQuotient:
    elements: tuple            # class representatives
    table: dict                # (i, j) -> k on representative indices
    position_class: dict       # box position -> element index
    identity: int
    certified: bool
    checks: dict


def _quotient_once(game: LatticeGame, box):
    box = tuple(box)
    window = box
    big = tuple(2 * b for b in box)
    table = compute_win_loss(game, big)

    def pattern(p):
        out = []
        for r in itertools.product(*(range(w + 1) for w in window)):
            q = tuple(a + b for a, b in zip(p, r))
            out.append(table.statuses.get(q) == "W")
        return tuple(out)

    classes: dict = {}
    pos_class: dict = {}
    for p in sorted(itertools.product(*(range(b + 1) for b in box))):
        pat = pattern(p)
        if pat not in classes:
            classes[pat] = p
        pos_class[p] = classes[pat]
    reps = sorted(set(pos_class.values()))
    rep_index = {r: i for i, r in enumerate(reps)}
    mult: dict = {}
    complete = True
    for i, a in enumerate(reps):
        for j, b in enumerate(reps):
            s = tuple(x + y for x, y in zip(a, b))
            if s in pos_class:
                mult[(i, j)] = rep_index[pos_class[s]]
            else:
                complete = False
    return reps, rep_index, mult, pos_class, complete


def misere_quotient(game: LatticeGame, box) -> MisereQuotient:
    """Quotient of N^d by indistinguishability of winning patterns.

    Classes compare W-membership over a margin window; the result is declared
    certified only when the class count and multiplication table survive one
    box doubling.
    """
    reps, rep_index, mult, pos_class, complete = _quotient_once(game, box)
    reps2, rep_index2, mult2, pos_class2, complete2 = _quotient_once(
        game, tuple(2 * b for b in tuple(box)))
    stable = complete and complete2 and len(reps) == len(
        {pos_class2[r] for r in reps}) == len(set(pos_class2.values()))
    if stable:
        # tables must agree under the re-classification map
        for (i, j), k in mult.items():
            a, b = reps[i], reps[j]
            s = tuple(x + y for x, y in zip(a, b))
            if pos_class2[s] != pos_class2[reps[k]]:
                stable = False
                break
    zero = (0,) * game.dim
    identity = rep_index[pos_class[zero]]
    checks = {
        "associative": _table_associative(mult, len(reps)),
        "commutative": all(mult.get((i, j)) == mult.get((j, i))
                           for i in range(len(reps)) for j in range(len(reps))),
        "identity": all(mult.get((identity, i)) == i for i in range(len(reps))),
    }
    return MisereQuotient(elements=tuple(reps), table=mult,
                          position_class=pos_class, identity=identity,
                          certified=stable, checks=checks)


def _table_associative(mult, n) -> bool:
    for i in range(n):
        for j in range(n):
            for k in range(n):
                ij = mult.get((i, j))
                jk = mult.get((j, k))
                if ij is None or jk is None:
                    continue
                left = mult.get((ij, k))
                right = mult.get((i, jk))
                if left is not None and right is not None and left != right:
                    return False
    return True
