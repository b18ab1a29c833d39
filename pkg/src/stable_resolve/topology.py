"""Order complexes of intervals of P_N, basic cycles and their boundaries.

Faces of an order complex are chains written top down (highest rank
first).  The simplicial boundary deletes the j-th vertex with sign
(-1)**j; the empty chain () is the unique face of dimension -1, so every
complex here is the augmented (reduced) one.
"""
from __future__ import annotations

import itertools
from collections import defaultdict
from dataclasses import dataclass, field

from .errors import DomainError, StructuralError
from .linalg import homology_dims, matmul_mod, to_dense
from .poset import BOTTOM, AdmissiblePoset, Symbol
from .report import Report


def permutation_sign(seq) -> int:
    """Sign of the permutation sorting ``seq`` (distinct entries) increasingly."""
    inversions = sum(1 for a, b in itertools.combinations(seq, 2) if a > b)
    return -1 if inversions % 2 else 1


def chain_sign(labels) -> int:
    """Sign of a maximal dual chain from its nonzero labels (l_1, ..., l_q).

    The sign is sgn(rho) * sgn(l_1 * ... * l_q), rho sorting |l_1|, ..., |l_q|.
    """
    labels = tuple(labels)
    absolute = [abs(l) for l in labels]
    if 0 in absolute:
        raise DomainError("labels must be nonzero")
    if len(set(absolute)) != len(absolute):
        raise DomainError(f"repeated absolute values in {labels}")
    negatives = sum(1 for l in labels if l < 0)
    return permutation_sign(absolute) * (-1 if negatives % 2 else 1)


def closed_form_sign(upper: Symbol, lower: Symbol) -> int:
    """(-1)**(p + delta) for a cover, with I \\ J = {i_p} and delta = [m != n]."""
    (l,) = set(upper.I) - set(lower.I)
    p = upper.I.index(l) + 1
    delta = 1 if upper.m != lower.m else 0
    return -1 if (p + delta) % 2 else 1


def boundary(chain):
    """Reduced simplicial boundary of ``{face: coefficient}`` (integers)."""
    out = defaultdict(int)
    for face, coeff in chain.items():
        if not coeff:
            continue
        for j in range(len(face)):
            out[face[:j] + face[j + 1:]] += coeff if j % 2 == 0 else -coeff
    return {f: c for f, c in out.items() if c}


@dataclass
class BasicCycle:
    owner: Symbol
    terms: dict = field(default_factory=dict)  # facet (top-down chain) -> +-1

    def __len__(self):
        return len(self.terms)


def interval_facets(P: AdmissiblePoset, upper: Symbol, lower: Symbol = BOTTOM):
    """Maximal chains of the open interval (lower, upper) with their
    nonzero labels (the final 0 of a chain ending at the bottom dropped)."""
    out = []
    for chain, labels in P.maximal_chains(upper, lower):
        if lower.is_bottom:
            labels = labels[:-1]
        out.append((chain[1:-1], labels))
    return out


def basic_cycle(P: AdmissiblePoset, sym: Symbol) -> BasicCycle:
    if sym.is_bottom:
        raise DomainError("the bottom element has no basic cycle")
    if not sym.I:
        return BasicCycle(sym, {(): 1})
    return BasicCycle(sym, {facet: chain_sign(labels)
                            for facet, labels in interval_facets(P, sym)})


def verify_cycle(P: AdmissiblePoset, sym: Symbol) -> bool:
    q = len(sym.I)
    facets = interval_facets(P, sym)
    if any(len(f) != q for f, _ in facets):
        return False
    return not boundary(basic_cycle(P, sym).terms)


def verify_pairing(P: AdmissiblePoset, sym: Symbol) -> bool:
    """Each facet and each of its vertices has exactly one partner facet
    differing only at that vertex, carrying the opposite sign."""
    terms = basic_cycle(P, sym).terms
    by_hole = defaultdict(list)
    for facet, sign in terms.items():
        for j in range(len(facet)):
            by_hole[(j, facet[:j], facet[j + 1:])].append(sign)
    return all(len(signs) == 2 and sum(signs) == 0 for signs in by_hole.values())


@dataclass
class SignedBoundaryMatrix:
    """Boundary from k-faces (columns) to (k-1)-faces (rows)."""

    k: int
    rows: list
    cols: list
    entries: dict  # (row, col) -> +-1

    @property
    def shape(self):
        return len(self.rows), len(self.cols)

    def dense(self, p):
        return to_dense(self.entries, self.shape, p)


class OrderComplex:
    """Order complex of the open interval (lower, upper), augmented."""

    def __init__(self, P: AdmissiblePoset, upper: Symbol, lower: Symbol = BOTTOM):
        self.upper, self.lower = upper, lower
        self.facets = [f for f, _ in interval_facets(P, upper, lower)]
        faces = set()
        for f in self.facets:
            for r in range(len(f) + 1):
                faces.update(itertools.combinations(f, r))
        top = max((len(f) for f in faces), default=0)
        self.faces = {k: sorted((f for f in faces if len(f) == k + 1),
                                key=lambda f: [P.position[v] for v in f])
                      for k in range(-1, top)}

    @property
    def dimension(self):
        return max(self.faces)

    def boundary_matrices(self):
        mats = []
        for k in range(0, self.dimension + 1):
            rows, cols = self.faces[k - 1], self.faces[k]
            where = {f: r for r, f in enumerate(rows)}
            entries = {}
            for c, face in enumerate(cols):
                for j in range(len(face)):
                    entries[(where[face[:j] + face[j + 1:]], c)] = -1 if j % 2 else 1
            mats.append(SignedBoundaryMatrix(k, rows, cols, entries))
        return mats


def reduced_homology_ranks(matrices, p, bottom_dim: int = -1) -> dict:
    """Betti numbers {dim: rank} of an augmented complex given its boundary
    matrices in increasing order (the first maps dimension bottom_dim + 1
    down to bottom_dim)."""
    if not matrices:
        raise DomainError("need at least one boundary matrix")
    for a, b in zip(matrices, matrices[1:]):
        if a.shape[1] != b.shape[0]:
            raise DomainError("boundary matrices do not chain")
        if a.shape[0] and b.shape[1] and matmul_mod(a.dense(p), b.dense(p), p).any():
            raise DomainError(f"boundary matrices at k={a.k},{b.k} do not compose to zero")
    dims = [matrices[0].shape[0]] + [m.shape[1] for m in matrices]
    maps = [None] + [m.dense(p) for m in matrices]
    homology = homology_dims(dims, maps, p)
    return {bottom_dim + k: h for k, h in enumerate(homology)}


def interval_homology(P: AdmissiblePoset, sym: Symbol, p: int) -> dict:
    cx = OrderComplex(P, sym)
    if cx.dimension < 0:  # empty open interval: only the empty face
        return {-1: len(cx.faces[-1])}
    return reduced_homology_ranks(cx.boundary_matrices(), p)


def cone_boundary_coefficient(P: AdmissiblePoset, upper: Symbol, lower: Symbol) -> int:
    """Boundary of the signed facets of the cone [lower, bottom) inside the
    order complex of (bottom, upper), as a multiple of the basic cycle of
    ``lower``."""
    if lower.is_bottom or lower not in P.down[upper]:
        raise DomainError(f"{lower} is not a non-bottom cover of {upper}")
    cone = {f: s for f, s in basic_cycle(P, upper).terms.items() if f[0] == lower}
    image = boundary(cone)
    target = basic_cycle(P, lower).terms
    if not target or not image:
        raise StructuralError(f"empty cone boundary for {lower} < {upper}")
    some = next(iter(target))
    coeff = image.get(some, 0) * target[some]
    if coeff not in (1, -1) or image != {f: coeff * s for f, s in target.items()}:
        raise StructuralError(
            f"boundary of the cone at {P.label(lower)} in {P.label(upper)} "
            "is not a multiple of its basic cycle")
    return coeff


# -- suite level checks -----------------------------------------------------

def verify_cycles(P: AdmissiblePoset) -> Report:
    report = Report("cycles")
    for s in P.symbols:
        if s.is_bottom or not s.I:
            continue
        report.checked += 1
        if not verify_cycle(P, s):
            report.fail(f"f{P.label(s)} is not a cycle")
        elif not verify_pairing(P, s):
            report.fail(f"f{P.label(s)}: facets do not pair up with opposite signs")
    return report


def verify_spheres(P: AdmissiblePoset, p: int) -> Report:
    report = Report("spheres")
    for s in P.symbols:
        if s.is_bottom:
            continue
        report.checked += 1
        ranks = interval_homology(P, s, p)
        q = len(s.I)
        expected = {k: (1 if k == q - 1 else 0) for k in ranks}
        if ranks != expected or ranks.get(q - 1) != 1:
            report.fail(f"Delta{P.label(s)} has reduced homology {ranks}")
        if len(P.falling_chains(s)) != ranks.get(q - 1):
            report.fail(f"Delta{P.label(s)}: falling chain count differs from homology rank")
    return report


def verify_cone_coefficients(P: AdmissiblePoset) -> Report:
    report = Report("cone_coefficients")
    for upper in P.symbols:
        if upper.is_bottom or not upper.I:
            continue
        for lower in P.down[upper]:
            report.checked += 1
            try:
                got = cone_boundary_coefficient(P, upper, lower)
            except StructuralError as exc:
                report.fail(str(exc))
                continue
            if got != closed_form_sign(upper, lower):
                report.fail(f"{P.label(lower)} < {P.label(upper)}: cone gives {got}")
    return report
