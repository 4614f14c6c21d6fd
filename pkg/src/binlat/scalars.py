"""Arithmetic in cyclotomic-rational fields Q(zeta_m).

Elements are stored as coefficient vectors on 1, z, ..., z^(phi(m)-1) reduced
modulo the m-th cyclotomic polynomial, with exact Fraction coefficients.
Operations on elements of different orders promote both to the lcm order, so
mixed-order expressions stay exact and deterministic.
"""

from __future__ import annotations

from fractions import Fraction
from functools import lru_cache
from math import gcd

from .errors import ScalarExtensionError


def _poly_trim(p):
    while p and p[-1] == 0:
        p = p[:-1]
    return p


def _poly_mul(p, q):
    out = [0] * (len(p) + len(q) - 1) if p and q else []
    for i, a in enumerate(p):
        if a:
            for j, b in enumerate(q):
                out[i + j] += a * b
    return _poly_trim(out)


def _poly_divmod_exact(p, q):
    """Quotient of integer polynomials known to divide exactly."""
    p = list(p)
    out = [0] * (len(p) - len(q) + 1)
    while len(p) >= len(q) and p:
        c, shift = p[-1] // q[-1], len(p) - len(q)
        out[shift] = c
        for i, b in enumerate(q):
            p[shift + i] -= c * b
        p = _poly_trim(p)
    assert not p, "division was not exact"
    return out


@lru_cache(maxsize=None)
def cyclotomic_polynomial(m: int) -> tuple[int, ...]:
    """Coefficients (ascending) of the m-th cyclotomic polynomial."""
    if m == 1:
        return (-1, 1)
    f = [-1] + [0] * (m - 1) + [1]  # x^m - 1
    for d in range(1, m):
        if m % d == 0:
            f = _poly_divmod_exact(f, list(cyclotomic_polynomial(d)))
    return tuple(f)


@lru_cache(maxsize=None)
def _phi_deg(m: int) -> int:
    return len(cyclotomic_polynomial(m)) - 1


def _reduce_mod_phi(coeffs, m):
    phi = cyclotomic_polynomial(m)
    deg = len(phi) - 1
    work = [Fraction(c) for c in coeffs]
    for i in range(len(work) - 1, deg - 1, -1):
        c = work[i]
        if c:
            for j in range(len(phi)):
                work[i - deg + j] -= c * phi[j]
        work.pop()
    work += [Fraction(0)] * (deg - len(work))
    return tuple(work[:deg])


class Cyclo:
    """An element of Q(zeta_m)."""

    __slots__ = ("order", "coeffs")

    def __init__(self, order: int, coeffs):
        self.order = int(order)
        self.coeffs = _reduce_mod_phi(coeffs, self.order)

    # -- constructors -------------------------------------------------------

    @staticmethod
    def rational(q, order: int = 1) -> "Cyclo":
        return Cyclo(order, [Fraction(q)])

    @staticmethod
    def zero(order: int = 1) -> "Cyclo":
        return Cyclo(order, [])

    @staticmethod
    def one(order: int = 1) -> "Cyclo":
        return Cyclo(order, [Fraction(1)])

    @staticmethod
    def zeta(order: int, power: int = 1) -> "Cyclo":
        power %= order
        coeffs = [Fraction(0)] * power + [Fraction(1)]
        return Cyclo(order, coeffs)

    # -- structure ----------------------------------------------------------

    def is_zero(self) -> bool:
        return all(c == 0 for c in self.coeffs)

    def is_one(self) -> bool:
        return self == Cyclo.one(self.order)

    def is_rational(self) -> bool:
        return all(c == 0 for c in self.coeffs[1:])

    def as_rational(self) -> Fraction:
        if not self.is_rational():
            raise ValueError("not rational: %r" % (self,))
        return self.coeffs[0] if self.coeffs else Fraction(0)

    def embed(self, order: int) -> "Cyclo":
        if order == self.order:
            return self
        assert order % self.order == 0, "can only embed into a multiple order"
        step = order // self.order
        out = [Fraction(0)] * (len(self.coeffs) * step or 1)
        for i, c in enumerate(self.coeffs):
            out[i * step] += c
        return Cyclo(order, out)

    @staticmethod
    def promote(a: "Cyclo", b: "Cyclo"):
        m = a.order * b.order // gcd(a.order, b.order)
        return a.embed(m), b.embed(m)

    # -- arithmetic ---------------------------------------------------------

    def __add__(self, other):
        a, b = Cyclo.promote(self, _as_cyclo(other))
        return Cyclo(a.order, [x + y for x, y in zip(a.coeffs, b.coeffs)])

    def __sub__(self, other):
        a, b = Cyclo.promote(self, _as_cyclo(other))
        return Cyclo(a.order, [x - y for x, y in zip(a.coeffs, b.coeffs)])

    def __neg__(self):
        return Cyclo(self.order, [-x for x in self.coeffs])

    def __mul__(self, other):
        a, b = Cyclo.promote(self, _as_cyclo(other))
        return Cyclo(a.order, _poly_mul(list(a.coeffs), list(b.coeffs)))

    def inverse(self) -> "Cyclo":
        if self.is_zero():
            raise ZeroDivisionError("inverse of zero scalar")
        phi = [Fraction(c) for c in cyclotomic_polynomial(self.order)]
        # extended Euclid in Q[x]: s*self + t*phi = 1
        r0, r1 = phi, _poly_trim(list(self.coeffs))
        s0, s1 = [], [Fraction(1)]
        while r1:
            q, rem = _poly_divmod_q(r0, r1)
            r0, r1 = r1, rem
            s0, s1 = s1, _poly_sub(s0, _poly_mul(q, s1))
        assert len(r0) == 1, "cyclotomic polynomial is irreducible"
        inv_lead = 1 / r0[0]
        return Cyclo(self.order, [c * inv_lead for c in s0])

    def __truediv__(self, other):
        return self * _as_cyclo(other).inverse()

    def __pow__(self, e: int):
        if e < 0:
            return self.inverse() ** (-e)
        out = Cyclo.one(self.order)
        base = self
        while e:
            if e & 1:
                out = out * base
            base = base * base
            e >>= 1
        return out

    def __eq__(self, other):
        if not isinstance(other, (Cyclo, int, Fraction)):
            return NotImplemented
        a, b = Cyclo.promote(self, _as_cyclo(other))
        return a.coeffs == b.coeffs

    def __hash__(self):
        # equality promotes across orders, so the hash may only depend on
        # embedding-invariant data; rationals hash by value, the rest coarsely
        if self.is_rational():
            return hash(("cyclo", self.as_rational()))
        return hash(("cyclo", "irrational"))

    def __repr__(self):
        return "Cyclo(%d, %s)" % (self.order, list(map(str, self.coeffs)))

    def sort_key(self):
        return (self.order, tuple(self.coeffs))

    # -- root-of-unity structure ---------------------------------------------

    def as_rational_zeta(self):
        """(q, k) with self == q * zeta_order^k, or None."""
        if self.is_zero():
            return None
        for k in range(self.order):
            z = Cyclo.zeta(self.order, k)
            ratio = self * z.inverse()
            if ratio.is_rational():
                return ratio.as_rational(), k
        return None

    def is_positive_rational(self) -> bool:
        return self.is_rational() and self.as_rational() > 0

    def nth_roots(self, e: int) -> list["Cyclo"]:
        """All e-th roots of self within the cyclotomic-rational model.

        Supported when self = q * zeta^k with |q| a perfect e-th power in Q.
        Raises ScalarExtensionError otherwise (a non-cyclotomic radical would
        be needed).
        """
        if e == 1:
            return [self]
        form = self.as_rational_zeta()
        if form is None:
            raise ScalarExtensionError("cannot take roots of zero")
        q, k = form
        neg = q < 0
        root = _rational_nth_root(abs(q), e)
        if root is None:
            raise ScalarExtensionError(
                "no exact %d-th root of %s in a cyclotomic-rational field" % (e, q))
        m = self.order
        if neg:
            # fold the sign into the root of unity: -zeta_m^k = zeta_{2m}^{m+2k}
            m, k = 2 * m, self.order + 2 * k  # wrt order 2m: zeta_2m^(m+2k)
        big = m * e
        base = Cyclo.rational(root, big) * Cyclo.zeta(big, k)
        return [base * Cyclo.zeta(big, m * t) for t in range(e)]


def _as_cyclo(x) -> Cyclo:
    if isinstance(x, Cyclo):
        return x
    return Cyclo.rational(x)


def _poly_sub(p, q):
    n = max(len(p), len(q))
    p = list(p) + [Fraction(0)] * (n - len(p))
    q = list(q) + [Fraction(0)] * (n - len(q))
    return _poly_trim([a - b for a, b in zip(p, q)])


def _poly_divmod_q(p, q):
    """Quotient and remainder over Q."""
    p = list(p)
    out = [Fraction(0)] * max(0, len(p) - len(q) + 1)
    while len(p) >= len(q) and p:
        c = p[-1] / q[-1]
        shift = len(p) - len(q)
        out[shift] = c
        for i, b in enumerate(q):
            p[shift + i] -= c * b
        p = _poly_trim(p)
    return _poly_trim(out), p


def _integer_nth_root(a: int, e: int):
    if a < 0:
        return None
    if a in (0, 1):
        return a
    lo, hi = 0, 1
    while hi ** e < a:
        hi *= 2
    while lo < hi:
        mid = (lo + hi) // 2
        if mid ** e < a:
            lo = mid + 1
        else:
            hi = mid
    return lo if lo ** e == a else None


def _rational_nth_root(q: Fraction, e: int):
    num = _integer_nth_root(q.numerator, e)
    den = _integer_nth_root(q.denominator, e)
    if num is None or den is None:
        return None
    return Fraction(num, den)


def common_order(values) -> int:
    m = 1
    for v in values:
        m = m * v.order // gcd(m, v.order)
    return m
