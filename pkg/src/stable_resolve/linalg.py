"""Exact rank computations over Z/p.

Matrices here are small (a few hundred rows at most), so a dense int64
row reduction is fast enough; entries stay below p < 2**31 so products
fit in int64 without overflow.
"""
from __future__ import annotations

import numpy as np


def to_dense(entries, shape, p):
    """Build a dense matrix mod p from ``{(row, col): value}``."""
    a = np.zeros(shape, dtype=np.int64)
    for (r, c), v in entries.items():
        a[r, c] = (a[r, c] + v) % p
    return a


def rank_mod(a, p):
    a = np.array(a, dtype=np.int64)
    if a.ndim != 2 or 0 in a.shape:
        return 0
    if p >= 2**31:
        raise ValueError("prime too large for int64 elimination")
    a %= p
    rows, cols = a.shape
    r = 0
    for c in range(cols):
        if r == rows:
            break
        nz = np.flatnonzero(a[r:, c])
        if nz.size == 0:
            continue
        k = r + int(nz[0])
        if k != r:
            a[[r, k]] = a[[k, r]]
        inv = pow(int(a[r, c]), -1, p)
        a[r] = (a[r] * inv) % p
        below = np.flatnonzero(a[r + 1:, c]) + r + 1
        if below.size:
            a[below] = (a[below] - np.outer(a[below, c], a[r])) % p
        r += 1
    return r


def matmul_mod(a, b, p):
    return (np.asarray(a, dtype=np.int64) @ np.asarray(b, dtype=np.int64)) % p


def homology_dims(dims, matrices, p):
    """Homology dimensions of a chain complex of Z/p vector spaces.

    ``dims[k]`` is the dimension of the k-th space and ``matrices[k]`` the
    map from space k to space k-1 (shape ``dims[k-1] x dims[k]``);
    ``matrices[0]`` is ignored.  Returns ``dim ker - rank img`` per slot.
    """
    n = len(dims)
    ranks = [0] * (n + 1)
    for k in range(1, n):
        ranks[k] = rank_mod(matrices[k], p) if dims[k] and dims[k - 1] else 0
    return [dims[k] - ranks[k] - ranks[k + 1] for k in range(n)]
