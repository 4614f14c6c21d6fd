"""Exact rational linear programming via the two-phase simplex method.

Standard form only: minimize c.x subject to A x = b, x >= 0.  Bland's rule
prevents cycling, so every answer is a certificate, not a heuristic.  Problems
with free variables or inequalities are rewritten by the helpers below.
"""

from __future__ import annotations

from fractions import Fraction

OPTIMAL = "optimal"
INFEASIBLE = "infeasible"
UNBOUNDED = "unbounded"


def _pivot(tab, basis, r, c):
    piv = tab[r][c]
    tab[r] = [x / piv for x in tab[r]]
    for i in range(len(tab)):
        if i != r and tab[i][c] != 0:
            f = tab[i][c]
            tab[i] = [x - f * y for x, y in zip(tab[i], tab[r])]
    basis[r] = c


def _run_simplex(tab, basis, ncols):
    """Optimize the tableau in place; last row holds reduced costs."""
    while True:
        cost = tab[-1]
        enter = next((j for j in range(ncols) if cost[j] < 0), None)  # Bland
        if enter is None:
            return OPTIMAL
        ratios = [(tab[i][-1] / tab[i][enter], basis[i], i)
                  for i in range(len(basis)) if tab[i][enter] > 0]
        if not ratios:
            return UNBOUNDED
        _, _, leave = min(ratios)
        _pivot(tab, basis, leave, enter)


def solve_lp(c, a, b):
    """Minimize c.x st A x = b, x >= 0.  Returns (status, x, value)."""
    m = len(a)
    n = len(c)
    a = [[Fraction(x) for x in row] for row in a]
    b = [Fraction(x) for x in b]
    c = [Fraction(x) for x in c]
    for i in range(m):
        if b[i] < 0:
            a[i] = [-x for x in a[i]]
            b[i] = -b[i]
    # phase I: artificial variables n..n+m-1
    tab = [a[i] + [Fraction(int(i == j)) for j in range(m)] + [b[i]] for i in range(m)]
    basis = [n + i for i in range(m)]
    cost = [Fraction(0)] * n + [Fraction(1)] * m + [Fraction(0)]
    for i in range(m):
        cost = [x - y for x, y in zip(cost, tab[i])]
    tab.append(cost)
    _run_simplex(tab, basis, n + m)
    if tab[-1][-1] != 0:  # phase-I optimum is -sum(artificials)
        return INFEASIBLE, None, None
    # drive remaining artificials out of the basis
    for i in range(m):
        if basis[i] >= n:
            col = next((j for j in range(n) if tab[i][j] != 0), None)
            if col is not None:
                _pivot(tab, basis, i, col)
    keep = [i for i in range(m) if basis[i] < n]
    tab = [tab[i][:n] + [tab[i][-1]] for i in keep]
    basis = [basis[i] for i in keep]
    # phase II
    cost = list(c) + [Fraction(0)]
    for i, bi in enumerate(basis):
        if cost[bi] != 0:
            f = cost[bi]
            cost = [x - f * y for x, y in zip(cost, tab[i])]
    tab.append(cost)
    status = _run_simplex(tab, basis, n)
    if status == UNBOUNDED:
        return UNBOUNDED, None, None
    x = [Fraction(0)] * n
    for i, bi in enumerate(basis):
        x[bi] = tab[i][-1]
    value = sum(ci * xi for ci, xi in zip(c, x))
    return OPTIMAL, tuple(x), value


def feasible_eq(a, b) -> bool:
    """Is {x >= 0 : A x = b} nonempty?"""
    if not a:
        return all(Fraction(x) == 0 for x in b)
    status, _, _ = solve_lp([0] * len(a[0]), a, b)
    return status == OPTIMAL


def maximize(obj, a, b):
    """(status, x, value) for max obj.x st A x = b, x >= 0."""
    status, x, value = solve_lp([-Fraction(v) for v in obj], a, b)
    if status != OPTIMAL:
        return status, None, None
    return status, x, -value


def feasible_free_sign(a_rows, extra_rows=()):
    """Feasibility of {c free : A c = 0 componentwise >= handled by caller}.

    Helper for sign problems: decides whether there is c (free sign) with
    M c >= 0, sum(M c) = 1, where a_rows are the rows of M.  Returns the
    witness c or None.  Used for mixedness and pointedness style tests.
    """
    nrows = len(a_rows)
    if nrows == 0:
        return None
    ncols = len(a_rows[0])
    # variables: c+ (ncols), c- (ncols), slack s (nrows); M(c+ - c-) - s = 0
    eqs = []
    rhs = []
    for i, row in enumerate(a_rows):
        eq = [Fraction(x) for x in row] + [-Fraction(x) for x in row]
        eq += [Fraction(-int(i == j)) for j in range(nrows)]
        eqs.append(eq)
        rhs.append(Fraction(0))
    total = [Fraction(x) for x in map(sum, zip(*a_rows))]
    eqs.append(list(total) + [-x for x in total] + [Fraction(0)] * nrows)
    rhs.append(Fraction(1))
    status, x, _ = solve_lp([0] * (2 * ncols + nrows), eqs, rhs)
    if status != OPTIMAL:
        return None
    return tuple(x[j] - x[ncols + j] for j in range(ncols))
