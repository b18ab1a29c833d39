"""Multigraded Betti numbers of R/N from the Koszul complex.

beta_{i,a}(R/N) = dim H_i(K(x_1..x_d; R/N))_a.  In degree a the Koszul
complex has basis e_S (S a subset of {1..d}, |S| = i) whenever the
monomial x^(a - e_S) survives in R/N, and

    d(e_S) = sum_{j in S} (-1)^(position of j in S) x_j e_{S - j}.

Nothing here looks at admissible symbols or the resolution builders.
"""
from __future__ import annotations

import itertools
from dataclasses import dataclass

import numpy as np

from .ideal import MonomialIdeal, contains
from .linalg import homology_dims
from .report import Report
from .resolution import FreeComplex, betti_table, degrees_for_depth


def quotient_dim(N: MonomialIdeal, a) -> int:
    return 0 if contains(N, tuple(a)) else 1


@dataclass
class KoszulSlice:
    a: tuple
    bases: list      # bases[i]: list of subsets S (as sorted tuples)
    matrices: list   # matrices[i]: K_i -> K_{i-1}, dense mod p; index 0 unused


def _subsets_by_size(d):
    return [list(itertools.combinations(range(d), i)) for i in range(d + 1)]


def _slice_from_survivors(a, survives, d, p):
    """``survives(S)`` says whether x^(a - e_S) is a nonzero element of R/N."""
    bases = [[S for S in level if survives(S)] for level in _subsets_by_size(d)]
    mats = [None]
    for i in range(1, d + 1):
        where = {S: r for r, S in enumerate(bases[i - 1])}
        m = np.zeros((len(bases[i - 1]), len(bases[i])), dtype=np.int64)
        for c, S in enumerate(bases[i]):
            for pos, j in enumerate(S):
                T = S[:pos] + S[pos + 1:]
                if T in where:  # otherwise x_j pushes the monomial into N
                    m[where[T], c] = (-1) ** pos % p
        mats.append(m)
    return KoszulSlice(tuple(a), bases, mats)


def koszul_slice(N: MonomialIdeal, a, p: int) -> KoszulSlice:
    a = tuple(int(x) for x in a)

    def survives(S):
        b = list(a)
        for j in S:
            b[j] -= 1
        return min(b, default=0) >= 0 and not contains(N, tuple(b))

    return _slice_from_survivors(a, survives, N.d, p)


def _betti_of_slice(sl: KoszulSlice, p: int):
    dims = [len(b) for b in sl.bases]
    betti = homology_dims(dims, sl.matrices, p)
    # Euler characteristic self-check
    euler_chain = sum((-1) ** i * n for i, n in enumerate(dims))
    euler_homology = sum((-1) ** i * b for i, b in enumerate(betti))
    if euler_chain != euler_homology:
        raise AssertionError(f"Euler characteristic mismatch at {sl.a}")
    return betti


def koszul_betti(N: MonomialIdeal, a, p: int):
    """[beta_{0,a}, ..., beta_{d,a}] of R/N."""
    return _betti_of_slice(koszul_slice(N, a, p), p)


def survivor_masks(N: MonomialIdeal, grid):
    """For every a in ``grid`` a bitmask over all subsets S (in the order
    of ``_subsets_by_size``) marking which x^(a - e_S) survive in R/N."""
    d = N.d
    gens = np.array(N.gens, dtype=np.int64)
    flat = [S for level in _subsets_by_size(d) for S in level]
    masks = np.zeros((len(grid), len(flat)), dtype=bool)
    for k, S in enumerate(flat):
        shift = np.zeros(d, dtype=np.int64)
        shift[list(S)] = 1
        b = grid - shift
        nonneg = np.all(b >= 0, axis=1)
        member = np.any(np.all(gens[None, :, :] <= b[:, None, :], axis=2), axis=1)
        masks[:, k] = nonneg & ~member
    return flat, masks


def compare_betti(N: MonomialIdeal, F: FreeComplex, depth: str = "full", seed: int = 0) -> Report:
    """Koszul Betti numbers against basis counts of F at every tested degree."""
    report = Report("oracle")
    p = F.p
    grid = degrees_for_depth(F, depth, seed=seed)
    flat, masks = survivor_masks(N, grid)
    graded = betti_table(F).graded
    cache = {}
    for k, a in enumerate(grid):
        key = masks[k].tobytes()
        if key not in cache:
            alive = {S for S, ok in zip(flat, masks[k]) if ok}
            cache[key] = _betti_of_slice(
                _slice_from_survivors(a, alive.__contains__, N.d, p), p)
        betti = cache[key]
        a = tuple(int(x) for x in a)
        counts = [graded.get((i, a), 0) for i in range(N.d + 1)]
        report.checked += 1
        if betti != counts:
            report.fail(f"a={a}: Koszul {betti} vs resolution {counts}")
    report.details["patterns"] = len(cache)
    return report
