"""Dense linear algebra over the prime field F_p.

Matrices are plain ``numpy`` int64 arrays with entries reduced into
``{0, ..., p-1}``.  Rank, null spaces and solving are delegated to FLINT
(``python-flint``); :func:`row_reduce` is an independent pure-numpy
Gaussian elimination used as a cross-check.
"""

from __future__ import annotations

import numpy as np
import flint

DEFAULT_PRIME = 7


def is_prime(p: int) -> bool:
    if p < 2:
        return False
    return all(p % q for q in range(2, int(p**0.5) + 1))


def reduce(a, p: int) -> np.ndarray:
    """Return ``a`` as an int64 array reduced mod ``p``."""
    return np.mod(np.asarray(a, dtype=np.int64), p)


def zeros(rows: int, cols: int) -> np.ndarray:
    return np.zeros((rows, cols), dtype=np.int64)


def eye(n: int) -> np.ndarray:
    return np.eye(n, dtype=np.int64)


def matmul(a: np.ndarray, b: np.ndarray, p: int) -> np.ndarray:
    if a.shape[1] != b.shape[0]:
        raise ValueError(f"shape mismatch {a.shape} @ {b.shape}")
    if a.size == 0 or b.size == 0:
        return zeros(a.shape[0], b.shape[1])
    # entries < p and p is small, so int64 accumulation cannot overflow at desk scale
    return np.mod(a @ b, p)


def _to_flint(a: np.ndarray, p: int) -> flint.nmod_mat:
    r, c = a.shape
    m = flint.nmod_mat(r, c, p)
    # fill only the nonzero entries: the matrices met here are sparse
    rows, cols = np.nonzero(a)
    for i, j, v in zip(rows.tolist(), cols.tolist(), a[rows, cols].tolist()):
        m[i, j] = v
    return m


def _from_flint(m: flint.nmod_mat) -> np.ndarray:
    r, c = m.nrows(), m.ncols()
    if r == 0 or c == 0:
        return zeros(r, c)
    return np.array([int(e) for e in m.entries()], dtype=np.int64).reshape(r, c)


def rank(a: np.ndarray, p: int) -> int:
    if a.size == 0:
        return 0
    # bar differentials are sparse; dropping zero rows and columns is free
    a = a[a.any(axis=1)][:, a.any(axis=0)]
    if a.size == 0:
        return 0
    return _to_flint(a, p).rank()


def nullspace(a: np.ndarray, p: int) -> np.ndarray:
    """Columns form a basis of ``{v : a v = 0}``; shape ``(cols, nullity)``."""
    rows, cols = a.shape
    if cols == 0:
        return zeros(0, 0)
    if rows == 0 or not a.any():
        return eye(cols)
    x, k = _to_flint(a, p).nullspace()
    return _from_flint(x)[:, :k]


def left_nullspace(a: np.ndarray, p: int) -> np.ndarray:
    """Rows form a basis of ``{w : w a = 0}``; shape ``(nullity, rows)``."""
    return nullspace(a.T.copy(), p).T.copy()


def column_basis(a: np.ndarray, p: int) -> np.ndarray:
    """A maximal linearly independent subset of the columns of ``a``."""
    _, pivots = row_reduce(a, p)
    return a[:, pivots]


def solve(a: np.ndarray, b: np.ndarray, p: int) -> np.ndarray | None:
    """Some ``x`` with ``a x = b``, or ``None`` if the system is inconsistent."""
    rows, cols = a.shape
    if b.shape[0] != rows:
        raise ValueError("right-hand side has wrong number of rows")
    aug = np.concatenate([a, b], axis=1) if rows else zeros(0, cols + b.shape[1])
    r, pivots = row_reduce(aug, p)
    if any(c >= cols for c in pivots):
        return None
    x = zeros(cols, b.shape[1])
    for i, c in enumerate(pivots):
        x[c] = r[i, cols:]
    return x


def right_inverse(a: np.ndarray, p: int) -> np.ndarray:
    """``r`` with ``a r = 1``; ``a`` must have full row rank."""
    x = solve(a, eye(a.shape[0]), p)
    if x is None:
        raise ValueError("matrix does not have full row rank")
    return x


def left_inverse(a: np.ndarray, p: int) -> np.ndarray:
    """``l`` with ``l a = 1``; ``a`` must have full column rank."""
    return right_inverse(a.T.copy(), p).T.copy()


def row_reduce(a: np.ndarray, p: int) -> tuple[np.ndarray, list[int]]:
    """Reduced row echelon form by plain Gaussian elimination mod ``p``.

    Returns the reduced matrix and the list of pivot columns.  Written
    directly against numpy so it can serve as an oracle for :func:`rank`.
    """
    r = reduce(a, p).copy()
    m, n = r.shape
    pivots: list[int] = []
    row = 0
    for col in range(n):
        if row >= m:
            break
        nz = np.nonzero(r[row:, col])[0]
        if nz.size == 0:
            continue
        piv = row + int(nz[0])
        if piv != row:
            r[[row, piv]] = r[[piv, row]]
        inv = pow(int(r[row, col]), p - 2, p)
        r[row] = (r[row] * inv) % p
        others = np.nonzero(r[:, col])[0]
        for i in others:
            if i != row:
                r[i] = (r[i] - r[i, col] * r[row]) % p
        pivots.append(col)
        row += 1
    return r, pivots


def rank_bruteforce(a: np.ndarray, p: int) -> int:
    return len(row_reduce(a, p)[1])


def random_matrix(rng: np.random.Generator, rows: int, cols: int, p: int) -> np.ndarray:
    return rng.integers(0, p, size=(rows, cols), dtype=np.int64)


def block(rows: list[int], cols: list[int]) -> tuple[np.ndarray, list[int], list[int]]:
    """Zero matrix with row/column block offsets for the given block sizes."""
    ro = [0]
    for r in rows:
        ro.append(ro[-1] + r)
    co = [0]
    for c in cols:
        co.append(co[-1] + c)
    return zeros(ro[-1], co[-1]), ro, co
