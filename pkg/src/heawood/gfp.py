"""Dense linear algebra over the prime field GF(p).

Matrices are numpy int64 arrays with entries in 0..p-1. Everything here is
exact; p is assumed small enough that products fit in int64.
"""
from __future__ import annotations

import numpy as np

from .errors import ParameterError


def is_prime(p: int) -> bool:
    if p < 2:
        return False
    if p % 2 == 0:
        return p == 2
    d = 3
    while d * d <= p:
        if p % d == 0:
            return False
        d += 2
    return True


def check_prime(p: int) -> int:
    if not isinstance(p, (int, np.integer)) or not is_prime(int(p)):
        raise ParameterError(f"p must be prime, got {p!r}")
    return int(p)


def prime_power_base(q: int) -> int | None:
    """Return the prime p with q = p^m (m >= 1), or None if q is not a prime power."""
    if q < 2:
        return None
    p = 2
    while p * p <= q and q % p:
        p += 1
    if q % p:
        return q  # q itself is prime
    while q % p == 0:
        q //= p
    return p if q == 1 else None


def as_matrix(a, p: int) -> np.ndarray:
    m = np.array(a, dtype=np.int64)
    if m.ndim == 1:
        m = m.reshape(1, -1) if m.size else m.reshape(0, 0)
    return m % p


def rref(a, p: int) -> tuple[np.ndarray, list[int]]:
    """Reduced row echelon form and pivot columns."""
    m = as_matrix(a, p).copy()
    rows, cols = m.shape
    pivots: list[int] = []
    r = 0
    for c in range(cols):
        if r == rows:
            break
        nz = np.nonzero(m[r:, c])[0]
        if nz.size == 0:
            continue
        i = r + nz[0]
        if i != r:
            m[[r, i]] = m[[i, r]]
        m[r] = (m[r] * pow(int(m[r, c]), -1, p)) % p
        col = m[:, c].copy()
        col[r] = 0
        nzr = np.nonzero(col)[0]
        if nzr.size:
            m[nzr] = (m[nzr] - np.outer(col[nzr], m[r])) % p
        pivots.append(c)
        r += 1
    return m, pivots


def rank(a, p: int) -> int:
    m = as_matrix(a, p)
    if m.size == 0:
        return 0
    return len(rref(m, p)[1])


def nullspace(a, p: int, ncols: int | None = None) -> np.ndarray:
    """Basis of {x : A x = 0} as the rows of the returned array."""
    m = as_matrix(a, p)
    n = ncols if ncols is not None else m.shape[1]
    if m.size == 0:
        return np.eye(n, dtype=np.int64)
    r, pivots = rref(m, p)
    free = [c for c in range(n) if c not in set(pivots)]
    basis = np.zeros((len(free), n), dtype=np.int64)
    for i, f in enumerate(free):
        basis[i, f] = 1
        for row, pc in enumerate(pivots):
            basis[i, pc] = (-r[row, f]) % p
    return basis


def solve(a, b, p: int) -> tuple[np.ndarray, np.ndarray] | None:
    """Solve A x = b. Returns (particular solution, nullspace basis) or None."""
    m = as_matrix(a, p)
    rhs = np.array(b, dtype=np.int64).reshape(-1, 1) % p
    n = m.shape[1]
    r, pivots = rref(np.hstack([m, rhs]), p)
    if n in pivots:
        return None
    x = np.zeros(n, dtype=np.int64)
    for row, pc in enumerate(pivots):
        x[pc] = r[row, n]
    return x, nullspace(m, p)


def lex_least(x0, directions, p: int) -> np.ndarray:
    """Lexicographically least point (entries read as 0..p-1) of x0 + span(directions)."""
    x = np.array(x0, dtype=np.int64) % p
    if len(directions) == 0:
        return x
    r, pivots = rref(directions, p)
    for row, pc in enumerate(pivots):
        x = (x - x[pc] * r[row]) % p
    return x


def affine_rank(points, p: int) -> int:
    """Dimension of the affine hull of the given points (rows)."""
    pts = as_matrix(points, p)
    if pts.shape[0] <= 1:
        return 0
    return rank(pts[1:] - pts[0], p)


def affine_coefficients(points, target, p: int) -> np.ndarray | None:
    """Coefficients lam with sum(lam) = 1 and sum(lam_i * points_i) = target.

    Unique when the points are affinely independent. Returns None if target
    lies outside the affine hull.
    """
    pts = as_matrix(points, p)
    system = np.vstack([pts.T, np.ones((1, pts.shape[0]), dtype=np.int64)])
    rhs = np.concatenate([np.array(target, dtype=np.int64) % p, [1]])
    sol = solve(system, rhs, p)
    if sol is None:
        return None
    x, null = sol
    return lex_least(x, null, p)
