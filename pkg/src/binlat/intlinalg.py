"""Exact integer and rational linear algebra.

Matrices are tuples of row tuples.  Integer routines rely on Python's
arbitrary precision ints; rational routines use fractions.Fraction.  The
Hermite normal form used everywhere is the row-style echelon form with
positive pivots and entries above each pivot reduced into [0, pivot), with
zero rows dropped; it is the canonical representative of a row space and
therefore of a lattice given by generators.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction

Vec = tuple[int, ...]
Mat = tuple[Vec, ...]


def mat(rows) -> Mat:
    return tuple(tuple(int(x) for x in row) for row in rows)


def identity(n: int) -> Mat:
    return tuple(tuple(1 if i == j else 0 for j in range(n)) for i in range(n))


def transpose(m: Mat) -> Mat:
    if not m:
        return ()
    return tuple(tuple(row[j] for row in m) for j in range(len(m[0])))


def mat_mul(a: Mat, b: Mat) -> Mat:
    bt = transpose(b)
    return tuple(tuple(sum(x * y for x, y in zip(row, col)) for col in bt) for row in a)


def mat_vec(a: Mat, v) -> tuple:
    return tuple(sum(x * y for x, y in zip(row, v)) for row in a)


def vec_add(u, v):
    return tuple(a + b for a, b in zip(u, v))


def vec_sub(u, v):
    return tuple(a - b for a, b in zip(u, v))


def vec_scale(u, c):
    return tuple(c * a for a in u)


def is_zero_vec(v) -> bool:
    return all(a == 0 for a in v)


def columns(m: Mat) -> list[Vec]:
    return list(transpose(m))


# ---------------------------------------------------------------------------
# Hermite normal form (row style)
# ---------------------------------------------------------------------------

def row_hermite(rows) -> Mat:
    """Canonical row HNF of the lattice spanned by ``rows``; zero rows dropped."""
    work = [list(r) for r in rows if not is_zero_vec(r)]
    if not work:
        return ()
    ncols = len(work[0])
    pivots = []
    r = 0
    for c in range(ncols):
        # gcd-reduce all rows >= r on column c down to a single nonzero entry
        while True:
            live = [i for i in range(r, len(work)) if work[i][c] != 0]
            if len(live) <= 1:
                break
            live.sort(key=lambda i: abs(work[i][c]))
            i0 = live[0]
            for i in live[1:]:
                q = work[i][c] // work[i0][c]
                work[i] = [a - q * b for a, b in zip(work[i], work[i0])]
        live = [i for i in range(r, len(work)) if work[i][c] != 0]
        if not live:
            continue
        i0 = live[0]
        work[r], work[i0] = work[i0], work[r]
        if work[r][c] < 0:
            work[r] = [-a for a in work[r]]
        p = work[r][c]
        for i in range(r):
            q = work[i][c] // p  # floor division puts entry in [0, p)
            if q:
                work[i] = [a - q * b for a, b in zip(work[i], work[r])]
        pivots.append(c)
        r += 1
    return tuple(tuple(row) for row in work[:r] if not is_zero_vec(row))


def column_hermite(m: Mat) -> Mat:
    """Column-style HNF: transpose of the row HNF of the transpose."""
    return transpose(row_hermite(transpose(m)))


# ---------------------------------------------------------------------------
# Smith normal form
# ---------------------------------------------------------------------------

@dataclass(frozen=True)
class SmithForm:
    d: Mat
    u: Mat  # row transform
    v: Mat  # column transform, u @ a @ v == d
    factors: tuple[int, ...]  # nonzero diagonal entries, each dividing the next


def smith_normal_form(a: Mat) -> SmithForm:
    """U*A*V = D with U, V unimodular and D diagonal with divisibility chain."""
    m = [list(r) for r in a]
    nr = len(m)
    nc = len(m[0]) if nr else 0
    u = [list(r) for r in identity(nr)]
    v = [list(r) for r in identity(nc)]

    def swap_rows(i, j):
        m[i], m[j] = m[j], m[i]
        u[i], u[j] = u[j], u[i]

    def swap_cols(i, j):
        for row in m:
            row[i], row[j] = row[j], row[i]
        for row in v:
            row[i], row[j] = row[j], row[i]

    def add_row(dst, src, q):
        m[dst] = [x - q * y for x, y in zip(m[dst], m[src])]
        u[dst] = [x - q * y for x, y in zip(u[dst], u[src])]

    def add_col(dst, src, q):
        for row in m:
            row[dst] -= q * row[src]
        for row in v:
            row[dst] -= q * row[src]

    t = 0
    while t < min(nr, nc):
        # find pivot of minimal absolute value in the remaining block
        best = None
        for i in range(t, nr):
            for j in range(t, nc):
                if m[i][j] != 0 and (best is None or abs(m[i][j]) < abs(m[best[0]][best[1]])):
                    best = (i, j)
        if best is None:
            break
        swap_rows(t, best[0])
        swap_cols(t, best[1])
        dirty = False
        for i in range(t + 1, nr):
            if m[i][t]:
                q = m[i][t] // m[t][t]
                add_row(i, t, q)
                if m[i][t]:
                    dirty = True
        for j in range(t + 1, nc):
            if m[t][j]:
                q = m[t][j] // m[t][t]
                add_col(j, t, q)
                if m[t][j]:
                    dirty = True
        if dirty:
            continue
        # enforce divisibility: m[t][t] must divide every later entry
        fix = None
        for i in range(t + 1, nr):
            for j in range(t + 1, nc):
                if m[i][j] % m[t][t] != 0:
                    fix = i
                    break
            if fix is not None:
                break
        if fix is not None:
            add_row(t, fix, -1)
            continue
        if m[t][t] < 0:
            m[t] = [-x for x in m[t]]
            u[t] = [-x for x in u[t]]
        t += 1
    d = tuple(tuple(row) for row in m)
    factors = tuple(d[i][i] for i in range(min(nr, nc)) if d[i][i] != 0)
    return SmithForm(d=d, u=tuple(tuple(r) for r in u), v=tuple(tuple(r) for r in v),
                     factors=factors)


@dataclass(frozen=True)
class NormalForms:
    hermite: Mat          # column-style HNF of the input
    hermite_rowstyle: Mat
    smith: Mat
    u: Mat
    v: Mat
    factors: tuple[int, ...]


def integer_normal_forms(m: Mat) -> NormalForms:
    """Hermite and Smith forms together with the Smith transforms."""
    if not m or not m[0]:
        raise ValueError("matrix must be nonempty")
    s = smith_normal_form(m)
    return NormalForms(hermite=column_hermite(m), hermite_rowstyle=row_hermite(m),
                       smith=s.d, u=s.u, v=s.v, factors=s.factors)


def integer_rank(m: Mat) -> int:
    return len(row_hermite(m))


def kernel_basis(a: Mat) -> Mat:
    """Basis rows of the saturated integer kernel {x : A x = 0} of ``a``."""
    if not a:
        return ()
    n = len(a[0])
    s = smith_normal_form(a)
    rank = len(s.factors)
    # columns rank..n-1 of V span the kernel; V unimodular keeps it saturated
    cols = columns(s.v)
    return row_hermite(tuple(cols[j] for j in range(rank, n)))


# ---------------------------------------------------------------------------
# Rational elimination
# ---------------------------------------------------------------------------

def rref(rows) -> tuple[list[list[Fraction]], list[int]]:
    """Reduced row echelon form over Q.  Returns (matrix, pivot columns)."""
    m = [[Fraction(x) for x in row] for row in rows]
    if not m:
        return [], []
    nc = len(m[0])
    pivots = []
    r = 0
    for c in range(nc):
        pr = next((i for i in range(r, len(m)) if m[i][c] != 0), None)
        if pr is None:
            continue
        m[r], m[pr] = m[pr], m[r]
        inv = 1 / m[r][c]
        m[r] = [x * inv for x in m[r]]
        for i in range(len(m)):
            if i != r and m[i][c] != 0:
                f = m[i][c]
                m[i] = [x - f * y for x, y in zip(m[i], m[r])]
        pivots.append(c)
        r += 1
    return m, pivots


def rref_with_transform(rows):
    """RREF of ``rows`` plus T with T @ rows == rref (T square, invertible)."""
    n = len(rows)
    if n == 0:
        return [], [], []
    width = len(rows[0])
    aug = [list(Fraction(x) for x in row) + [Fraction(int(i == j)) for j in range(n)]
           for i, row in enumerate(rows)]
    red, pivots = rref(aug)
    pivots = [p for p in pivots if p < width]
    left = [row[:width] for row in red]
    right = [row[width:] for row in red]
    return left, pivots, right


def solve_rational(a, b):
    """One rational solution x of A x = b, or None if inconsistent."""
    if not a:
        return None if any(Fraction(x) != 0 for x in b) else ()
    nc = len(a[0])
    aug = [list(row) + [bi] for row, bi in zip(a, b)]
    red, pivots = rref(aug)
    if nc in pivots:
        return None
    x = [Fraction(0)] * nc
    for r, c in enumerate(pivots):
        x[c] = red[r][nc]
    return tuple(x)


def qspan_contains(rows, v) -> bool:
    """Is v in the Q-span of the given rows?"""
    if all(Fraction(x) == 0 for x in v):
        return True
    if not rows:
        return False
    sol = solve_rational(list(zip(*rows)), v)  # rows^T c = v
    return sol is not None


def hnf_coordinates(hnf_rows, v):
    """Integer coordinates of v in an HNF row basis, or None."""
    if not hnf_rows:
        return () if is_zero_vec(v) else None
    work = list(v)
    coords = []
    piv = [next(j for j, x in enumerate(row) if x != 0) for row in hnf_rows]
    for row, p in zip(hnf_rows, piv):
        if work[p] % row[p] != 0:
            return None
        c = work[p] // row[p]
        coords.append(c)
        if c:
            work = [a - c * b for a, b in zip(work, row)]
    return tuple(coords) if is_zero_vec(work) else None


def unimodular_inverse(m: Mat) -> Mat:
    """Exact inverse of a unimodular integer matrix."""
    n = len(m)
    aug = [list(row) + [Fraction(int(i == j)) for j in range(n)] for i, row in enumerate(m)]
    red, pivots = rref(aug)
    assert pivots == list(range(n)), "matrix is singular"
    inv = []
    for row in red:
        entries = row[n:]
        assert all(x.denominator == 1 for x in entries), "matrix is not unimodular"
        inv.append(tuple(int(x) for x in entries))
    return tuple(inv)
