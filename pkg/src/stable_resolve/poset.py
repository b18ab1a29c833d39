"""The poset of admissible symbols and its edge labelling.

An admissible symbol is a pair (I, m) with m a minimal generator and
I a subset of {1, ..., d-1} with max(I) < max(m).  Together with a bottom
element it is ordered by

    (J, n) <= (I, m)  iff  J is a subset of I and n = g(x_C m)
                           for some C inside I \\ J.

Covers (J, n) < (I, m) with I = J + {l} are labelled 0 when the lower end
is the bottom, -l when n = m and +l otherwise.  Chains are always read top
down, which is the order used by the shellability and sign conventions.
"""
from __future__ import annotations

import itertools
import json
from functools import cached_property
from typing import NamedTuple

from . import monomial as mono
from .errors import DomainError
from .ideal import MonomialIdeal, decompose, require_stable
from .report import Report


class Symbol(NamedTuple):
    I: tuple
    m: tuple | None

    @property
    def is_bottom(self) -> bool:
        return self.m is None

    @property
    def rank(self) -> int:
        return 0 if self.m is None else len(self.I) + 1


BOTTOM = Symbol((), None)


def is_admissible(I, m) -> bool:
    return (max(I) if I else 0) < mono.max_index(m)


def symbol_label(sym: Symbol, names) -> str:
    if sym.is_bottom:
        return "0"
    return "{" + ",".join(map(str, sym.I)) + "}," + mono.format_monomial(sym.m, names)


def _subsets(items):
    for k in range(len(items) + 1):
        yield from itertools.combinations(items, k)


class AdmissiblePoset:
    """P_N for a stable ideal N, with cover edges and labels precomputed."""

    def __init__(self, N: MonomialIdeal):
        require_stable(N)
        self.ideal = N
        d = N.d
        symbols = [BOTTOM]
        for gi, m in enumerate(N.gens):
            for I in _subsets(range(1, mono.max_index(m))):
                symbols.append(Symbol(I, m))
        gen_index = {m: k for k, m in enumerate(N.gens)}
        symbols.sort(key=lambda s: (s.rank, -1 if s.is_bottom else gen_index[s.m], s.I))
        self.symbols = symbols
        self.position = {s: k for k, s in enumerate(symbols)}

        # cover edges straight from the order: |I \ J| = 1, C empty or {l}
        self.down = {s: [] for s in symbols}
        self.up = {s: [] for s in symbols}
        self.labels = {}
        for s in symbols:
            if s.is_bottom:
                continue
            if not s.I:
                self._add_cover(BOTTOM, s, 0)
                continue
            for l in s.I:
                J = tuple(i for i in s.I if i != l)
                self._add_cover(Symbol(J, s.m), s, -l)
                n = decompose(N, mono.multiply(mono.variable(l, d), s.m)).g
                if n != s.m and is_admissible(J, n):
                    self._add_cover(Symbol(J, n), s, l)
        for s in symbols:
            self.down[s].sort(key=self.position.__getitem__)
            self.up[s].sort(key=self.position.__getitem__)

    def _add_cover(self, lower, upper, label):
        if lower in self.labels.get(upper, {}):
            return
        self.down[upper].append(lower)
        self.up[lower].append(upper)
        self.labels.setdefault(upper, {})[lower] = label

    # -- order ------------------------------------------------------------

    def __len__(self):
        return len(self.symbols)

    def __iter__(self):
        return iter(self.symbols)

    def __contains__(self, s):
        return s in self.position

    def rank(self, s) -> int:
        return s.rank

    def atoms(self):
        return list(self.up[BOTTOM])

    def of_rank(self, r):
        return [s for s in self.symbols if s.rank == r]

    def witnesses(self, lower: Symbol, upper: Symbol, reduced: bool = True):
        """All C inside I \\ J with g(x_C m) = n (only c <= max(n) if reduced)."""
        J, n = lower
        I, m = upper
        if not set(J) <= set(I):
            return []
        diff = [i for i in I if i not in J]
        if reduced:
            bound = mono.max_index(n)
            diff = [c for c in diff if c <= bound]
        d = self.ideal.d
        out = []
        for C in _subsets(diff):
            w = mono.squarefree(C, d)
            if decompose(self.ideal, mono.multiply(w, m)).g == n:
                out.append(C)
        return out

    def leq(self, lower: Symbol, upper: Symbol, reduced: bool = True) -> bool:
        if lower.is_bottom:
            return True
        if upper.is_bottom:
            return False
        return bool(self.witnesses(lower, upper, reduced))

    def covers(self, lower: Symbol, upper: Symbol) -> bool:
        if upper.is_bottom:
            return False
        if lower.is_bottom:
            return not upper.I
        return len(upper.I) == len(lower.I) + 1 and self.leq(lower, upper)

    def edge_label(self, lower: Symbol, upper: Symbol) -> int:
        if not self.covers(lower, upper):
            raise DomainError(f"{lower} is not covered by {upper}")
        if lower.is_bottom:
            return 0
        (l,) = set(upper.I) - set(lower.I)
        return -l if lower.m == upper.m else l

    @cached_property
    def down_sets(self):
        """Closed down-set of every symbol, computed from the cover graph."""
        out = {}
        for s in self.symbols:  # sorted by rank, so covers are already done
            below = {s}
            for t in self.down[s]:
                below |= out[t]
            out[s] = frozenset(below)
        return out

    def interval(self, lower, upper):
        """Elements of the closed interval [lower, upper], canonical order."""
        if lower not in self.down_sets[upper]:
            return []
        return [s for s in self.down_sets[upper] if lower in self.down_sets[s]]

    def comparable_pairs(self):
        for upper in self.symbols:
            for lower in sorted(self.down_sets[upper], key=self.position.__getitem__):
                yield lower, upper

    def maximal_chains(self, upper, lower=BOTTOM):
        """Saturated chains from ``upper`` down to ``lower``.

        Returns a list of (chain, labels) pairs; ``chain`` starts at
        ``upper`` and ``labels[k]`` labels the edge chain[k+1] < chain[k].
        """
        if lower not in self.down_sets.get(upper, ()):
            raise DomainError(f"{lower} is not below {upper}")
        out = []

        def walk(node, chain, labels):
            if node == lower:
                out.append((tuple(chain), tuple(labels)))
                return
            for t in self.down[node]:
                if lower in self.down_sets[t]:
                    chain.append(t)
                    labels.append(self.labels[node][t])
                    walk(t, chain, labels)
                    chain.pop()
                    labels.pop()

        walk(upper, [upper], [])
        return out

    def falling_chains(self, upper, lower=BOTTOM):
        return [(c, lab) for c, lab in self.maximal_chains(upper, lower)
                if all(a > b for a, b in zip(lab, lab[1:]))]

    # -- export -----------------------------------------------------------

    def label(self, s):
        return symbol_label(s, self.ideal.names)

    def to_dot(self) -> str:
        lines = ["digraph P_N {", "  rankdir=BT;"]
        for k, s in enumerate(self.symbols):
            lines.append(f'  n{k} [label="{self.label(s)}"];')
        for upper in self.symbols:
            for lower in self.down[upper]:
                lab = self.labels[upper][lower]
                lines.append(f'  n{self.position[lower]} -> n{self.position[upper]} [label="{lab}"];')
        lines.append("}")
        return "\n".join(lines) + "\n"

    def to_json(self) -> dict:
        return {
            "format": 1,
            "vars": list(self.ideal.names),
            "nodes": [
                {"id": k, "label": self.label(s), "I": list(s.I),
                 "m": None if s.is_bottom else list(s.m), "rank": s.rank}
                for k, s in enumerate(self.symbols)
            ],
            "edges": [
                {"lower": self.position[lower], "upper": self.position[upper],
                 "label": self.labels[upper][lower]}
                for upper in self.symbols for lower in self.down[upper]
            ],
        }

    def dumps(self) -> str:
        return json.dumps(self.to_json(), indent=2, sort_keys=True)


# -- verification -----------------------------------------------------------

def _increasing(seq):
    return all(a < b for a, b in zip(seq, seq[1:]))


def verify_el_shelling(P: AdmissiblePoset) -> Report:
    """Check every closed interval of the dual poset for a unique increasing
    maximal chain that is lexicographically first."""
    report = Report("el_shelling")
    for lower, upper in P.comparable_pairs():
        chains = P.maximal_chains(upper, lower)
        report.checked += 1
        where = f"[{P.label(upper)}, {P.label(lower)}]"
        labels = [lab for _, lab in chains]
        if len(set(labels)) != len(labels):
            report.fail(f"{where}: two chains share a label sequence")
        rising = [lab for lab in labels if _increasing(lab)]
        if len(rising) != 1:
            report.fail(f"{where}: {len(rising)} increasing chains")
            continue
        first = rising[0]
        if any(lab != first and not first < lab for lab in labels):
            report.fail(f"{where}: increasing label {first} is not lexicographically first")
    return report


def verify_diamond(P: AdmissiblePoset) -> Report:
    report = Report("diamond")
    for upper in P.symbols:
        for lower in P.down_sets[upper]:
            if upper.rank - lower.rank != 2:
                continue
            report.checked += 1
            size = len(P.interval(lower, upper))
            if size != 4:
                report.fail(f"[{P.label(lower)}, {P.label(upper)}] has {size} elements")
    return report


def verify_falling_chains(P: AdmissiblePoset) -> Report:
    """Each [(I,m), bottom] has one falling chain, labelled (i_q, ..., i_1, 0)."""
    report = Report("falling_chains")
    for s in P.symbols:
        if s.is_bottom:
            continue
        report.checked += 1
        falling = P.falling_chains(s)
        expected = tuple(reversed(s.I)) + (0,)
        if [lab for _, lab in falling] != [expected]:
            report.fail(f"{P.label(s)}: falling labels {[lab for _, lab in falling]}")
    return report


def verify_order(P: AdmissiblePoset, unreduced: bool = False) -> Report:
    """Compare ``leq`` against the transitive closure of the cover edges.

    Also checks that the minimum-size witness C is unique for every
    comparable pair; with ``unreduced`` the search over all C inside
    I \\ J is run too and must agree with the reduced one.
    """
    report = Report("order")
    for upper in P.symbols:
        for lower in P.symbols:
            if lower.rank > upper.rank:
                continue
            report.checked += 1
            closure = lower in P.down_sets[upper]
            if P.leq(lower, upper) != closure:
                report.fail(f"leq({P.label(lower)}, {P.label(upper)}) disagrees with covers")
            if unreduced and P.leq(lower, upper, reduced=False) != closure:
                report.fail(f"unreduced leq({P.label(lower)}, {P.label(upper)}) disagrees")
            if closure and not lower.is_bottom:
                ws = P.witnesses(lower, upper, reduced=False)
                smallest = min(len(c) for c in ws)
                if sum(len(c) == smallest for c in ws) != 1:
                    report.fail(f"minimum witness not unique for {P.label(lower)} <= {P.label(upper)}")
    return report
