"""The regular CW complex X_N whose face poset is P_N.

The complex is kept combinatorial: one cell per admissible symbol (the
bottom is the empty cell, dimension -1), graded by eta, with incidence
numbers taken from the cone-boundary computation on order complexes.
"""
from __future__ import annotations

import json
from dataclasses import dataclass, field

import numpy as np

from .linalg import homology_dims
from .poset import AdmissiblePoset, Symbol, symbol_label
from .report import Report
from .resolution import FreeComplex, degree_grid, eta
from .topology import cone_boundary_coefficient
from . import monomial as mono


@dataclass(frozen=True)
class Cell:
    id: int
    dim: int
    symbol: Symbol
    degree: tuple


@dataclass
class GradedCWComplex:
    names: tuple
    cells: list
    incidence: dict = field(default_factory=dict)  # k -> {(cell id, face id): +-1}

    @property
    def d(self):
        return len(self.names)

    @property
    def dimension(self):
        return max(c.dim for c in self.cells)

    def cells_of_dim(self, k):
        return [c for c in self.cells if c.dim == k]

    def f_vector(self):
        return [len(self.cells_of_dim(k)) for k in range(0, self.dimension + 1)]

    def by_symbol(self):
        return {c.symbol: c for c in self.cells}


def build_cw(P: AdmissiblePoset) -> GradedCWComplex:
    d = P.ideal.d
    cells = [Cell(k, s.rank - 1, s, eta(s, d)) for k, s in enumerate(P.symbols)]
    ids = {c.symbol: c.id for c in cells}
    incidence = {}
    for c in cells:
        if c.dim < 0:
            continue
        row = incidence.setdefault(c.dim, {})
        for face in P.down[c.symbol]:
            coeff = 1 if face.is_bottom else cone_boundary_coefficient(P, c.symbol, face)
            row[(c.id, ids[face])] = coeff
    return GradedCWComplex(P.ideal.names, cells, incidence)


def verify_cellular(F: FreeComplex, X: GradedCWComplex) -> Report:
    """Rank, grading and differential-entry conditions for F being the
    cellular resolution supported on X."""
    report = Report("cellular")
    cells = X.by_symbol()
    for i in range(1, len(F.basis)):
        report.checked += 1
        n_cells = len(X.cells_of_dim(i - 1))
        if F.ranks[i] != n_cells:
            report.fail(f"(1) rank F_{i} = {F.ranks[i]} but {n_cells} cells of dimension {i - 1}")
    for i, level in enumerate(F.basis):
        for s, deg in zip(level, F.degrees[i]):
            report.checked += 1
            cell = cells.get(s)
            if cell is None or cell.dim != i - 1:
                report.fail(f"(2) basis element {s} has no cell of dimension {i - 1}")
            elif tuple(cell.degree) != tuple(deg):
                report.fail(f"(2) {s}: degree {deg} vs cell degree {cell.degree}")
    for i in range(1, len(F.basis)):
        expected = {}
        for (cid, fid), c in X.incidence.get(i - 1, {}).items():
            e, f = X.cells[cid], X.cells[fid]
            expected[(e.symbol, f.symbol)] = (c % F.p, mono.quotient(e.degree, f.degree))
        got = F.entries(i)
        report.checked += len(expected)
        for key in sorted(set(expected) | set(got), key=repr):
            if expected.get(key) != got.get(key):
                report.fail(f"(3) d{i} at {key}: resolution {got.get(key)} vs cellular {expected.get(key)}")
    return report


def incidence_dense(X: GradedCWComplex, k, p, rows=None, cols=None):
    rows = rows if rows is not None else [c.id for c in X.cells_of_dim(k - 1)]
    cols = cols if cols is not None else [c.id for c in X.cells_of_dim(k)]
    ri = {r: n for n, r in enumerate(rows)}
    ci = {c: n for n, c in enumerate(cols)}
    a = np.zeros((len(rows), len(cols)), dtype=np.int64)
    for (cid, fid), v in X.incidence.get(k, {}).items():
        if cid in ci and fid in ri:
            a[ri[fid], ci[cid]] = v % p
    return a


def verify_incidence_complex(X: GradedCWComplex, p: int) -> Report:
    report = Report("incidence_complex")
    for k in range(1, X.dimension + 1):
        report.checked += 1
        prod = incidence_dense(X, k - 1, p) @ incidence_dense(X, k, p) % p
        if prod.any():
            report.fail(f"boundary {k - 1} after boundary {k} is nonzero")
    return report


def verify_face_poset(P: AdmissiblePoset, X: GradedCWComplex) -> Report:
    """The order generated by nonzero incidences equals leq on symbols."""
    report = Report("face_poset")
    below = {}
    faces = {}
    for k in sorted(X.incidence):
        for (cid, fid), v in X.incidence[k].items():
            if v:
                faces.setdefault(cid, []).append(fid)
    for c in sorted(X.cells, key=lambda c: c.dim):
        s = {c.id}
        for f in faces.get(c.id, ()):
            s |= below[f]
        below[c.id] = s
    for upper in X.cells:
        for lower in X.cells:
            report.checked += 1
            if (lower.id in below[upper.id]) != P.leq(lower.symbol, upper.symbol):
                report.fail(f"{P.label(lower.symbol)} vs {P.label(upper.symbol)}")
    return report


def grid_for_depth(X: GradedCWComplex, depth: str = "full", seed: int = 0):
    return degree_grid([c.degree for c in X.cells], depth, seed=seed)


def subcomplex_homology(X: GradedCWComplex, selected, p):
    """Reduced homology of the subcomplex on the cell ids in ``selected``
    (which must be closed under taking faces and contain the empty cell)."""
    levels = [[c.id for c in X.cells_of_dim(k) if c.id in selected]
              for k in range(-1, X.dimension + 1)]
    dims = [len(level) for level in levels]
    maps = [None] + [incidence_dense(X, k, p, levels[k], levels[k + 1])
                     for k in range(0, X.dimension + 1)]
    return homology_dims(dims, maps, p)


def verify_subcomplex_acyclicity(X: GradedCWComplex, p: int, grid=None) -> Report:
    """X_{<=a} has vanishing reduced homology for every a in the grid that
    lies above at least one vertex."""
    report = Report("subcomplex_acyclicity")
    if grid is None:
        grid = grid_for_depth(X)
    degrees = np.array([c.degree for c in X.cells], dtype=np.int64)
    inside = np.all(degrees[None, :, :] <= grid[:, None, :], axis=2)
    nonempty = [c.id for c in X.cells if c.dim >= 0]
    cache = {}
    for k, a in enumerate(grid):
        if not inside[k, nonempty].any():
            continue
        key = np.packbits(inside[k]).tobytes()
        if key not in cache:
            cache[key] = subcomplex_homology(X, set(np.flatnonzero(inside[k]).tolist()), p)
        report.checked += 1
        if any(cache[key]):
            report.fail(f"a={tuple(int(x) for x in a)}: reduced homology {cache[key]}")
    report.details["patterns"] = len(cache)
    return report


def to_json(X: GradedCWComplex) -> dict:
    return {
        "format": 1,
        "vars": list(X.names),
        "cells": [
            {"id": c.id, "dim": c.dim, "symbol": symbol_label(c.symbol, X.names),
             "I": list(c.symbol.I), "m": None if c.symbol.is_bottom else list(c.symbol.m)}
            for c in X.cells
        ],
        "grading": [list(c.degree) for c in X.cells],
        "incidence": [[k, cid, fid, v] for k in sorted(X.incidence)
                      for (cid, fid), v in sorted(X.incidence[k].items())],
    }


def to_dot(X: GradedCWComplex) -> str:
    lines = ["digraph X_N {", "  rankdir=BT;"]
    for c in X.cells:
        deg = ",".join(map(str, c.degree))
        text = "empty" if c.dim < 0 else symbol_label(c.symbol, X.names)
        lines.append(f'  c{c.id} [label="{text}\\ndim {c.dim}\\n({deg})"];')
    for k in sorted(X.incidence):
        for (cid, fid), v in sorted(X.incidence[k].items()):
            lines.append(f'  c{fid} -> c{cid} [label="{"+" if v > 0 else "-"}"];')
    lines.append("}")
    return "\n".join(lines) + "\n"


def export(X: GradedCWComplex, fmt: str = "json") -> str:
    if fmt == "json":
        return json.dumps(to_json(X), indent=2, sort_keys=True) + "\n"
    if fmt == "dot":
        return to_dot(X)
    raise ValueError(f"unknown export format {fmt!r}")
