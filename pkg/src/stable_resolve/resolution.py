"""The multigraded free resolution of R/N supported on P_N.

F_0 is R with basis 1 (the bottom symbol); F_{q+1} has one basis element
f(I, m) per admissible symbol with |I| = q, in multidegree mdeg(x_I m).
Differentials are stored sparsely: ``{(row, col): (coeff, monomial)}``
with rows indexing the basis of F_{i-1} and columns that of F_i.

Two builders are provided and kept apart on purpose:
``build_resolution`` walks cover edges of the poset and uses the closed
sign (-1)**(p + delta); ``build_ek_resolution`` evaluates the
Eliahou-Kervaire formula symbol by symbol without touching the poset.
"""
from __future__ import annotations

import itertools
import json
from collections import defaultdict
from dataclasses import dataclass

import numpy as np

from . import monomial as mono
from .ideal import MonomialIdeal, decompose, require_stable
from .linalg import homology_dims
from .poset import BOTTOM, AdmissiblePoset, Symbol, is_admissible, symbol_label
from .report import Report
from .topology import closed_form_sign


def eta(sym: Symbol, d: int):
    """Multidegree mdeg(x_I m) of a symbol (zero for the bottom)."""
    if sym.is_bottom:
        return mono.one(d)
    return mono.multiply(mono.squarefree(sym.I, d), sym.m)


@dataclass
class FreeComplex:
    d: int
    p: int
    basis: list           # basis[i]: list of basis labels of F_i
    degrees: list         # degrees[i][k]: multidegree of basis[i][k]
    differentials: list   # differentials[i]: F_i -> F_{i-1}; index 0 unused
    names: tuple = None

    @property
    def ranks(self):
        return [len(b) for b in self.basis]

    @property
    def length(self):
        return max((i for i, b in enumerate(self.basis) if b), default=0)

    def entries(self, i):
        """Differential i as {(source label, target label): (coeff, monomial)}."""
        src, tgt = self.basis[i], self.basis[i - 1]
        return {(src[c], tgt[r]): v for (r, c), v in self.differentials[i].items()}

    def quadruples(self, i):
        return sorted((r, c, coeff, list(m))
                      for (r, c), (coeff, m) in self.differentials[i].items())

    def coefficient_matrix(self, i):
        """Differential i with all monomials set to 1."""
        return {rc: coeff for rc, (coeff, _) in self.differentials[i].items()}

    def to_json(self) -> dict:
        names = self.names or mono.default_names(self.d)

        def label(s):
            return symbol_label(s, names) if isinstance(s, Symbol) else str(s)

        return {
            "format": 1,
            "vars": list(names),
            "prime": self.p,
            "ranks": self.ranks,
            "basis": [
                [{"symbol": label(s), "I": list(getattr(s, "I", ())),
                  "m": None if getattr(s, "m", None) is None else list(s.m),
                  "multidegree": list(deg)}
                 for s, deg in zip(self.basis[i], self.degrees[i])]
                for i in range(len(self.basis))
            ],
            "differentials": [
                {"from": i, "to": i - 1, "entries": self.quadruples(i)}
                for i in range(1, len(self.basis))
            ],
        }

    def dumps(self) -> str:
        return json.dumps(self.to_json(), indent=2, sort_keys=True)


def _signed(c, p):
    return c % p


def _basis_by_level(symbols, d):
    basis = [[BOTTOM]] + [[] for _ in range(d)]
    for s in symbols:
        if not s.is_bottom:
            basis[len(s.I) + 1].append(s)
    return basis


def build_resolution(N_or_P, p: int = mono.DEFAULT_PRIME) -> FreeComplex:
    """Poset-driven construction: one entry per cover (J, n) < (I, m) with
    coefficient (-1)**(p + delta) and monomial x^(eta(I,m) - eta(J,n))."""
    P = N_or_P if isinstance(N_or_P, AdmissiblePoset) else AdmissiblePoset(N_or_P)
    d = P.ideal.d
    basis = _basis_by_level(P.symbols, d)
    degrees = [[eta(s, d) for s in level] for level in basis]
    diffs = [None]
    for i in range(1, d + 1):
        where = {s: r for r, s in enumerate(basis[i - 1])}
        entries = {}
        for c, s in enumerate(basis[i]):
            for t in P.down[s]:
                sign = 1 if t.is_bottom else closed_form_sign(s, t)
                entries[(where[t], c)] = (_signed(sign, p), mono.quotient(eta(s, d), eta(t, d)))
        diffs.append(entries)
    return FreeComplex(d, p, basis, degrees, diffs, P.ideal.names)


def ek_symbols(N: MonomialIdeal):
    """Admissible symbols in canonical order, enumerated without the poset."""
    out = [BOTTOM]
    for q in range(N.d):
        for m in N.gens:
            for I in itertools.combinations(range(1, mono.max_index(m)), q):
                out.append(Symbol(I, m))
    return out


def build_ek_resolution(N: MonomialIdeal, p: int = mono.DEFAULT_PRIME) -> FreeComplex:
    """Symbol-driven construction straight from the Eliahou-Kervaire formula

        d e(I,m) = sum_p (-1)^p x_{i_p} e(I - i_p, m)
                   - sum_p (-1)^p (x_{i_p} m / g(x_{i_p} m)) e(I - i_p, g(x_{i_p} m)),

    inadmissible targets dropped and coinciding terms merged.
    """
    require_stable(N)
    d = N.d
    basis = _basis_by_level(ek_symbols(N), d)
    degrees = [[eta(s, d) for s in level] for level in basis]
    diffs = [None]
    for i in range(1, d + 1):
        where = {s: r for r, s in enumerate(basis[i - 1])}
        entries = {}
        for c, s in enumerate(basis[i]):
            if not s.I:
                entries[(where[BOTTOM], c)] = (1, s.m)
                continue
            terms = defaultdict(int)
            for pos, l in enumerate(s.I, start=1):
                sign = -1 if pos % 2 else 1
                J = s.I[:pos - 1] + s.I[pos:]
                x = mono.variable(l, d)
                terms[(Symbol(J, s.m), x)] += sign
                xm = mono.multiply(x, s.m)
                n = decompose(N, xm).g
                if is_admissible(J, n):
                    terms[(Symbol(J, n), mono.quotient(xm, n))] -= sign
            for (t, m), coeff in terms.items():
                if coeff % p:
                    entries[(where[t], c)] = (coeff % p, m)
        diffs.append(entries)
    return FreeComplex(d, p, basis, degrees, diffs, N.names)


# -- verification -----------------------------------------------------------

def verify_complex(F: FreeComplex) -> Report:
    """All consecutive products of differentials vanish (as polynomials)."""
    report = Report("complex")
    for i in range(2, len(F.basis)):
        outer = defaultdict(list)
        for (r, c), v in F.differentials[i - 1].items():
            outer[c].append((r, v))
        product = defaultdict(int)
        for (k, c), (coeff, m) in F.differentials[i].items():
            for r, (coeff2, m2) in outer.get(k, ()):
                product[(r, c, mono.multiply(m, m2))] += coeff * coeff2
        report.checked += len(F.basis[i])
        for (r, c, m), value in sorted(product.items()):
            if value % F.p:
                report.fail(f"d{i - 1}*d{i} has entry {value % F.p}*{m} at ({r}, {c})")
    return report


def verify_minimal(F: FreeComplex) -> Report:
    report = Report("minimal")
    for i in range(1, len(F.basis)):
        for (r, c), (coeff, m) in sorted(F.differentials[i].items()):
            report.checked += 1
            if coeff % F.p and not any(m):
                report.fail(f"unit entry in d{i} at ({r}, {c})")
    return report


def verify_multigrading(F: FreeComplex) -> Report:
    report = Report("multigrading")
    for i in range(1, len(F.basis)):
        for (r, c), (coeff, m) in F.differentials[i].items():
            report.checked += 1
            if coeff % F.p == 0:
                report.fail(f"stored zero in d{i} at ({r}, {c})")
            if mono.multiply(m, F.degrees[i - 1][r]) != F.degrees[i][c]:
                report.fail(f"d{i} entry at ({r}, {c}) breaks the multigrading")
            if coeff % F.p not in (1, F.p - 1):
                report.fail(f"d{i} entry at ({r}, {c}) is not +-1")
    return report


def compare_builders(A: FreeComplex, B: FreeComplex) -> Report:
    report = Report("builders_agree")
    if A.ranks != B.ranks:
        report.fail(f"ranks differ: {A.ranks} vs {B.ranks}")
        return report
    for i in range(1, len(A.basis)):
        ea, eb = A.entries(i), B.entries(i)
        report.checked += len(ea) + len(eb)
        for key in sorted(set(ea) | set(eb), key=repr):
            if ea.get(key) != eb.get(key):
                report.fail(f"d{i} differs at {key}: {ea.get(key)} vs {eb.get(key)}")
    return report


def bounding_box(degrees):
    """Upper corner b with b_l = 1 + max of coordinate l over ``degrees``."""
    degrees = list(degrees)
    top = [0] * len(degrees[0])
    for deg in degrees:
        top = [max(x, y) for x, y in zip(top, deg)]
    return tuple(x + 1 for x in top)


def box_degrees(corner):
    return np.array(list(itertools.product(*(range(b + 1) for b in corner))),
                    dtype=np.int64).reshape(-1, len(corner))


def degree_grid(degrees, depth: str = "full", extra: int = 20, seed: int = 0):
    """Multidegrees to test: the given degrees themselves (quick), the
    bounding box (full), or the box plus ``extra`` random degrees up to
    twice as far out (exhaustive)."""
    degrees = [tuple(x) for x in degrees]
    d = len(degrees[0])
    if depth == "quick":
        return np.array(sorted(set(degrees)), dtype=np.int64).reshape(-1, d)
    corner = bounding_box(degrees)
    grid = box_degrees(corner)
    if depth == "full":
        return grid
    if depth != "exhaustive":
        raise ValueError(f"unknown depth {depth!r}")
    rng = np.random.default_rng(seed)
    far = rng.integers(0, 2 * np.array(corner) + 2, size=(extra, d))
    return np.vstack([grid, far])


def degrees_for_depth(F: FreeComplex, depth: str = "full", extra: int = 20, seed: int = 0):
    return degree_grid([deg for level in F.degrees for deg in level], depth, extra, seed)


def _included(degrees_i, grid):
    """Boolean (len(grid), n): basis element k has eta <= a."""
    if not degrees_i:
        return np.zeros((len(grid), 0), dtype=bool)
    eta_arr = np.array(degrees_i, dtype=np.int64)
    return np.all(eta_arr[None, :, :] <= grid[:, None, :], axis=2)


def _restricted(entries, rows, cols, p):
    ri = {r: k for k, r in enumerate(rows)}
    ci = {c: k for k, c in enumerate(cols)}
    a = np.zeros((len(rows), len(cols)), dtype=np.int64)
    for (r, c), coeff in entries.items():
        if r in ri and c in ci:
            a[ri[r], ci[c]] = coeff % p
    return a


def strand_homology(F: FreeComplex, masks, in_ideal: bool, coeffs=None):
    """Homology of ... -> F_1(a) -> F_0(a) -> (R/N)(a) -> 0 for the basis
    elements selected by ``masks``.  Index 0 is (R/N)(a), index i+1 is F_i(a)."""
    p = F.p
    coeffs = coeffs or [None] + [F.coefficient_matrix(i) for i in range(1, len(F.basis))]
    chosen = [np.flatnonzero(m).tolist() for m in masks]
    dims = [0 if in_ideal else 1] + [len(c) for c in chosen]
    maps = [None, np.ones((dims[0], dims[1]), dtype=np.int64)]
    for i in range(1, len(F.basis)):
        maps.append(_restricted(coeffs[i], chosen[i - 1], chosen[i], p))
    return homology_dims(dims, maps, p)


def verify_exact(N: MonomialIdeal, F: FreeComplex, depth: str = "full", seed: int = 0) -> Report:
    """Exactness of the strand of F over x^a for every tested multidegree a.

    The strand only depends on which basis elements have eta <= a, so
    distinct selection patterns are solved once each.
    """
    report = Report("exact")
    grid = degrees_for_depth(F, depth, seed=seed)
    masks = [_included(F.degrees[i], grid) for i in range(len(F.basis))]
    gens = np.array(N.gens, dtype=np.int64)
    member = np.any(np.all(gens[None, :, :] <= grid[:, None, :], axis=2), axis=1)
    coeffs = [None] + [F.coefficient_matrix(i) for i in range(1, len(F.basis))]
    cache = {}
    for k, a in enumerate(grid):
        key = (bool(member[k]),) + tuple(np.packbits(m[k]).tobytes() for m in masks)
        if key not in cache:
            cache[key] = strand_homology(F, [m[k] for m in masks], bool(member[k]), coeffs)
        report.checked += 1
        homology = cache[key]
        if any(homology):
            report.fail(f"a={tuple(int(x) for x in a)}: homology {homology}")
    report.details["patterns"] = len(cache)
    return report


@dataclass
class BettiTable:
    graded: dict   # (i, multidegree) -> count
    total: dict    # (i, total degree) -> count

    def ranks(self):
        top = max(i for i, _ in self.total)
        return [sum(v for (i, _), v in self.total.items() if i == k) for k in range(top + 1)]

    def diagram(self) -> str:
        """Macaulay2-style table: column i, row j - i."""
        top = max(i for i, _ in self.total)
        rows = sorted({j - i for i, j in self.total})
        cols = list(range(top + 1))
        ranks = self.ranks()
        width = max(len(str(v)) for v in ranks + [top])
        lead = max(len("total:"), max(len(f"{r}:") for r in rows))
        lines = [" " * lead + " " + " ".join(str(c).rjust(width) for c in cols),
                 "total:".rjust(lead) + " " + " ".join(str(v).rjust(width) for v in ranks)]
        for r in rows:
            cells = [str(self.total.get((c, c + r), ".")) for c in cols]
            lines.append(f"{r}:".rjust(lead) + " " + " ".join(x.rjust(width) for x in cells))
        return "\n".join(lines) + "\n"

    def to_json(self) -> dict:
        return {
            "format": 1,
            "ranks": self.ranks(),
            "total": [[i, j, v] for (i, j), v in sorted(self.total.items())],
            "graded": [[i, list(a), v] for (i, a), v in sorted(self.graded.items())],
        }


def betti_table(F: FreeComplex) -> BettiTable:
    graded = defaultdict(int)
    total = defaultdict(int)
    for i, level in enumerate(F.degrees):
        for deg in level:
            graded[(i, tuple(deg))] += 1
            total[(i, sum(deg))] += 1
    return BettiTable(dict(graded), dict(total))


def graded_count(F: FreeComplex, i: int, a) -> int:
    a = tuple(a)
    return sum(1 for deg in F.degrees[i] if tuple(deg) == a) if i < len(F.degrees) else 0
