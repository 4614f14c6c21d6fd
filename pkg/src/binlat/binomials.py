"""Binomials, binomial ideals and monomial orders."""

from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction

from .errors import InvariantViolation
from .scalars import Cyclo, common_order

Expo = tuple[int, ...]


@dataclass(frozen=True)
class MonomialOrder:
    """A monomial order on N^n: degrevlex (default), lex or deglex.

    ``perm`` lists variable indices from most to least significant; identity
    when omitted.  ``key`` returns a sort key that is ascending in the order,
    with the constant monomial minimal.
    """

    kind: str = "degrevlex"
    perm: tuple[int, ...] | None = None

    def __post_init__(self):
        if self.kind not in ("degrevlex", "lex", "deglex"):
            raise InvariantViolation("unknown order kind %r" % self.kind)

    def _arranged(self, e: Expo):
        if self.perm is None:
            return e
        return tuple(e[p] for p in self.perm)

    def key(self, e: Expo):
        a = self._arranged(e)
        if self.kind == "lex":
            return a
        if self.kind == "deglex":
            return (sum(a), a)
        return (sum(a), tuple(-x for x in reversed(a)))

    def greater(self, a: Expo, b: Expo) -> bool:
        return self.key(a) > self.key(b)


DEGREVLEX = MonomialOrder()


def expo_add(a: Expo, b: Expo) -> Expo:
    return tuple(x + y for x, y in zip(a, b))


def expo_sub(a: Expo, b: Expo) -> Expo:
    return tuple(x - y for x, y in zip(a, b))


def expo_divides(a: Expo, b: Expo) -> bool:
    """x^a divides x^b."""
    return all(x <= y for x, y in zip(a, b))


def expo_lcm(a: Expo, b: Expo) -> Expo:
    return tuple(max(x, y) for x, y in zip(a, b))


def expo_deg(a: Expo) -> int:
    return sum(a)


@dataclass(frozen=True)
class Binomial:
    """x^u - lam * x^v; a monomial x^u when lam == 0.

    Generators are stored as given (no gcd normalization); the Groebner layer
    orients and normalizes internally.
    """

    u: Expo
    v: Expo
    lam: Cyclo

    def __post_init__(self):
        if len(self.u) != len(self.v):
            raise InvariantViolation("exponent length mismatch")
        if any(x < 0 for x in self.u) or any(x < 0 for x in self.v):
            raise InvariantViolation("negative exponent")
        if self.u == self.v and self.lam.is_one():
            raise InvariantViolation("x^u - x^u is zero, not a generator")

    @staticmethod
    def monomial(u, order: int = 1) -> "Binomial":
        u = tuple(u)
        return Binomial(u, tuple(0 for _ in u), Cyclo.zero(order))

    @staticmethod
    def difference(u, v, lam=1, order: int = 1) -> "Binomial":
        if isinstance(lam, Cyclo):
            c = lam
        else:
            c = Cyclo.rational(Fraction(lam), order)
        return Binomial(tuple(u), tuple(v), c)

    @property
    def is_monomial(self) -> bool:
        return self.lam.is_zero()

    @property
    def nvars(self) -> int:
        return len(self.u)

    def exponent_difference(self) -> Expo:
        return expo_sub(self.u, self.v)

    def max_degree(self) -> int:
        return max(expo_deg(self.u), expo_deg(self.v) if not self.is_monomial else 0)


@dataclass(frozen=True)
class BinomialIdeal:
    """A binomial ideal given by generators over Q(zeta_m).

    All generator scalars are embedded into the shared context order
    ``zeta_order`` on construction.
    """

    nvars: int
    generators: tuple[Binomial, ...]
    zeta_order: int = 1
    names: tuple[str, ...] | None = None

    def __post_init__(self):
        for g in self.generators:
            if g.nvars != self.nvars:
                raise InvariantViolation("generator arity != nvars")
        m = self.zeta_order
        for g in self.generators:
            if m % g.lam.order != 0:
                m = m * g.lam.order // _gcd(m, g.lam.order)
        if m != self.zeta_order:
            object.__setattr__(self, "zeta_order", m)
        gens = tuple(
            Binomial(g.u, g.v, g.lam.embed(self.zeta_order)) for g in self.generators)
        object.__setattr__(self, "generators", gens)
        if self.names is not None and len(self.names) != self.nvars:
            raise InvariantViolation("wrong number of variable names")

    @staticmethod
    def make(nvars, gens, zeta_order=1, names=None) -> "BinomialIdeal":
        return BinomialIdeal(nvars, tuple(gens), zeta_order,
                             tuple(names) if names else None)

    def max_degree(self) -> int:
        return max((g.max_degree() for g in self.generators), default=1)

    def max_exponent_box(self) -> tuple[int, ...]:
        """Componentwise max generator exponent, at least 1 everywhere."""
        box = [1] * self.nvars
        for g in self.generators:
            for e in (g.u, g.v) if not g.is_monomial else (g.u,):
                for i, x in enumerate(e):
                    box[i] = max(box[i], x)
        return tuple(box)

    def var_names(self) -> tuple[str, ...]:
        if self.names:
            return self.names
        if self.nvars <= 4:
            return ("x", "y", "z", "w")[: self.nvars]
        return tuple("x%d" % (i + 1) for i in range(self.nvars))


def _gcd(a, b):
    while b:
        a, b = b, a % b
    return a


def monomial_str(e: Expo, names) -> str:
    parts = []
    for x, name in zip(e, names):
        if x == 1:
            parts.append(name)
        elif x > 1:
            parts.append("%s^%d" % (name, x))
    return "*".join(parts) if parts else "1"


def binomial_str(b: Binomial, names) -> str:
    if b.is_monomial:
        return monomial_str(b.u, names)
    lam = b.lam
    if lam.is_one():
        return "%s - %s" % (monomial_str(b.u, names), monomial_str(b.v, names))
    if lam.is_rational():
        return "%s - (%s)*%s" % (monomial_str(b.u, names), lam.as_rational(),
                                 monomial_str(b.v, names))
    return "%s - (%r)*%s" % (monomial_str(b.u, names), lam, monomial_str(b.v, names))
