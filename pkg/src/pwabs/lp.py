"""Dense two-phase simplex for the tiny LPs behind the polytope algebra.

Every linear program in this package has at most a few dozen rows, so a
self-contained dense tableau method is both fast enough and dependency-free.
Bland's rule makes the iteration cycle-proof; a generous pivot cap guards
against numerical stalls.
"""
from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from .errors import NumericalFailure

TOL = 1e-9

OPTIMAL = "optimal"
INFEASIBLE = "infeasible"
UNBOUNDED = "unbounded"


@dataclass(frozen=True)
class LpResult:
    status: str
    objective: float | None
    x: np.ndarray | None


def _pivot(M: np.ndarray, basis: list[int], row: int, col: int) -> None:
    M[row] /= M[row, col]
    factors = M[:, col].copy()
    factors[row] = 0.0
    M -= np.outer(factors, M[row])
    basis[row] = col


def _iterate(M: np.ndarray, basis: list[int], allowed: np.ndarray,
             max_pivots: int) -> str:
    """Run Bland-rule pivots until the reduced-cost row has no entry > TOL.

    M is (m+1, nc+1): m constraint rows, last row = reduced costs with
    M[-1, -1] = -objective. `allowed` masks columns eligible to enter.
    """
    m = M.shape[0] - 1
    for _ in range(max_pivots):
        red = M[-1, :-1]
        improving = np.flatnonzero(allowed & (red > TOL))
        if improving.size == 0:
            return OPTIMAL
        col = int(improving[0])  # Bland: lowest index enters
        column = M[:m, col]
        rows = np.flatnonzero(column > TOL)
        if rows.size == 0:
            return UNBOUNDED
        ratios = M[rows, -1] / column[rows]
        best = ratios.min()
        ties = rows[np.abs(ratios - best) <= TOL * (1.0 + abs(best))]
        # Bland tie-break: lowest basic-variable index leaves
        row = int(ties[np.argmin([basis[i] for i in ties])])
        _pivot(M, basis, row, col)
    raise NumericalFailure("simplex pivot cap exceeded")


def solve_lp_max(c: np.ndarray, A: np.ndarray, b: np.ndarray,
                 max_pivots: int = 2000) -> LpResult:
    """Maximize c.x subject to A x <= b with x free.

    Free variables are split as x = u - v; rows with negative rhs get an
    artificial variable and a phase-1 pass minimizes their sum.
    """
    c = np.asarray(c, dtype=float)
    A = np.asarray(A, dtype=float)
    b = np.asarray(b, dtype=float)
    m, n = A.shape
    if m == 0:
        # no constraints: optimum is 0 at origin unless c != 0
        if np.any(np.abs(c) > TOL):
            return LpResult(UNBOUNDED, None, None)
        return LpResult(OPTIMAL, 0.0, np.zeros(n))

    flip = b < 0
    A2 = np.where(flip[:, None], -A, A)
    b2 = np.where(flip, -b, b)
    slack_sign = np.where(flip, -1.0, 1.0)

    art_rows = np.flatnonzero(flip)
    n_art = art_rows.size
    nc = 2 * n + m + n_art  # u, v, slacks, artificials

    M = np.zeros((m + 1, nc + 1))
    M[:m, :n] = A2
    M[:m, n:2 * n] = -A2
    M[:m, 2 * n:2 * n + m] = np.diag(slack_sign)
    for j, i in enumerate(art_rows):
        M[i, 2 * n + m + j] = 1.0
    M[:m, -1] = b2

    basis = [0] * m
    for i in range(m):
        basis[i] = 2 * n + i
    for j, i in enumerate(art_rows):
        basis[i] = 2 * n + m + j

    allowed = np.ones(nc, dtype=bool)

    if n_art:
        # phase 1: maximize -(sum of artificials)
        M[-1, :] = 0.0
        M[-1, 2 * n + m:2 * n + m + n_art] = -1.0
        for i in art_rows:
            M[-1] += M[i]
        status = _iterate(M, basis, allowed, max_pivots)
        if status != OPTIMAL:
            raise NumericalFailure("phase-1 simplex did not terminate cleanly")
        if -M[-1, -1] < -1e-7:
            return LpResult(INFEASIBLE, None, None)
        # drive artificials out of the basis where possible
        for i in range(m):
            if basis[i] >= 2 * n + m:
                cols = np.flatnonzero(np.abs(M[i, :2 * n + m]) > TOL)
                if cols.size:
                    _pivot(M, basis, i, int(cols[0]))
        allowed[2 * n + m:] = False

    # phase 2 reduced costs for the real objective
    c_ext = np.zeros(nc)
    c_ext[:n] = c
    c_ext[n:2 * n] = -c
    M[-1, :-1] = c_ext
    M[-1, -1] = 0.0
    for i in range(m):
        if abs(c_ext[basis[i]]) > 0.0:
            M[-1] -= c_ext[basis[i]] * M[i]

    status = _iterate(M, basis, allowed, max_pivots)
    if status == UNBOUNDED:
        return LpResult(UNBOUNDED, None, None)

    values = np.zeros(nc)
    values[basis] = M[:m, -1]
    x = values[:n] - values[n:2 * n]
    return LpResult(OPTIMAL, float(-M[-1, -1]), x)


def chebyshev_center(H: np.ndarray, K: np.ndarray) -> tuple[float, np.ndarray | None]:
    """Largest inscribed-ball radius and its center for {x : H x <= K}.

    Rows are normalized internally, so the radius is in Euclidean units.
    Returns (radius, center); radius is +inf for polytopes containing
    arbitrarily large balls and may be negative when the set is empty.
    """
    H = np.asarray(H, dtype=float)
    K = np.asarray(K, dtype=float)
    norms = np.linalg.norm(H, axis=1)
    keep = norms > TOL
    if not np.all(keep):
        # rows 0.x <= k: vacuous when k >= 0, globally infeasible otherwise
        if np.any(K[~keep] < -TOL):
            return -np.inf, None
        H, K, norms = H[keep], K[keep], norms[keep]
    if H.shape[0] == 0:
        return np.inf, np.zeros(K.shape[0] if K.ndim else 0)
    n = H.shape[1]
    Hn = H / norms[:, None]
    Kn = K / norms
    A = np.hstack([Hn, np.ones((Hn.shape[0], 1))])
    c = np.zeros(n + 1)
    c[-1] = 1.0
    res = solve_lp_max(c, A, Kn)
    if res.status == UNBOUNDED:
        return np.inf, None
    if res.status != OPTIMAL:
        return -np.inf, None
    return float(res.x[-1]), res.x[:n].copy()


def support_value(H: np.ndarray, K: np.ndarray, direction: np.ndarray) -> float:
    """max direction.x over {x : H x <= K}; +inf when unbounded that way."""
    res = solve_lp_max(np.asarray(direction, dtype=float), H, K)
    if res.status == UNBOUNDED:
        return np.inf
    if res.status == INFEASIBLE:
        return -np.inf
    return res.objective
