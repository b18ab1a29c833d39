"""Monomial ideals, the stability test and the Eliahou-Kervaire decomposition.

For a stable ideal N every monomial m in N factors uniquely as m = g(m) * y
with g(m) a minimal generator and max(g(m)) <= min(y).  ``decompose``
finds that factorisation by scanning all generators and refuses to answer
when the factor is not unique, so a non-stable input is caught instead of
silently producing a wrong resolution.
"""
from __future__ import annotations

import itertools
import json
import random
from dataclasses import dataclass
from functools import lru_cache
from typing import NamedTuple, Sequence

from . import monomial as mono
from .errors import DomainError, MembershipError, ParseError, StabilityError


@dataclass(frozen=True)
class MonomialIdeal:
    """Minimal generating set G(N), sorted ascending on exponent vectors."""

    gens: tuple
    names: tuple

    @property
    def d(self) -> int:
        return len(self.names)

    def index(self, m) -> int:
        return self.gens.index(m)

    def __contains__(self, m) -> bool:
        return contains(self, m)

    def __len__(self):
        return len(self.gens)

    def fmt(self, m) -> str:
        return mono.format_monomial(m, self.names)

    def __str__(self):
        return "<" + ", ".join(self.fmt(g) for g in self.gens) + ">"


class Decomposition(NamedTuple):
    g: tuple
    y: tuple


def minimalize(gens: Sequence, names: Sequence[str] | None = None) -> MonomialIdeal:
    gens = [mono.monomial(g) for g in gens]
    if not gens:
        raise DomainError("an ideal needs at least one generator")
    d = len(gens[0])
    if any(len(g) != d for g in gens):
        raise DomainError("generators have mixed numbers of variables")
    names = tuple(names) if names is not None else mono.default_names(d)
    if len(names) != d:
        raise DomainError(f"{len(names)} variable names for {d} variables")
    unique = sorted(set(gens))
    kept = [
        g for g in unique
        if not any(h != g and mono.divides(h, g) for h in unique)
    ]
    return MonomialIdeal(tuple(kept), names)


def contains(N: MonomialIdeal, m) -> bool:
    return any(mono.divides(g, m) for g in N.gens)


def exchange_violations(N: MonomialIdeal):
    """Yield (generator, i, m*x_i/x_max) for every failed exchange."""
    for g in N.gens:
        r = mono.max_index(g)
        for i in range(1, r):
            moved = list(g)
            moved[r - 1] -= 1
            moved[i - 1] += 1
            moved = tuple(moved)
            if not contains(N, moved):
                yield g, i, moved


def is_stable(N: MonomialIdeal) -> bool:
    return next(exchange_violations(N), None) is None


def require_stable(N: MonomialIdeal) -> None:
    bad = next(exchange_violations(N), None)
    if bad is not None:
        g, i, moved = bad
        r = mono.max_index(g)
        raise StabilityError(
            f"ideal {N} is not stable: {N.fmt(g)}*{N.names[i - 1]}/{N.names[r - 1]}"
            f" = {N.fmt(moved)} is not in the ideal",
            witness=bad,
        )


@lru_cache(maxsize=None)
def _decompose(gens: tuple, m: tuple) -> Decomposition:
    found = []
    for g in gens:
        if not mono.divides(g, m):
            continue
        y = mono.quotient(m, g)
        if y == mono.one(len(m)) or mono.max_index(g) <= mono.min_index(y):
            found.append(Decomposition(g, y))
    if len(found) == 1:
        return found[0]
    if not found:
        if not any(mono.divides(g, m) for g in gens):
            raise MembershipError(f"{m} is not in the ideal")
        raise StabilityError(f"{m} has no decomposition g*y with max(g) <= min(y)", witness=m)
    raise StabilityError(f"{m} has {len(found)} decompositions", witness=m)


def decompose(N: MonomialIdeal, m) -> Decomposition:
    if len(m) != N.d:
        raise DomainError("monomial and ideal have different numbers of variables")
    return _decompose(N.gens, tuple(m))


def decompose_product(N: MonomialIdeal, w, m, check: bool = False):
    """g(w*m); with ``check`` also assert g(w*g(m)) = g(w*m) and the max bound."""
    wm = mono.multiply(w, m)
    g = decompose(N, wm).g
    if check:
        via = decompose(N, mono.multiply(w, decompose(N, m).g)).g
        if via != g:
            raise StabilityError(f"associativity fails for w={w}, m={m}", witness=(w, m))
        if mono.max_index(g) > mono.max_index(decompose(N, m).g):
            raise StabilityError(f"max(g(wm)) > max(g(m)) for w={w}, m={m}", witness=(w, m))
    return g


# -- input / output ---------------------------------------------------------

def parse_ideal(text: str) -> MonomialIdeal:
    """Read either the line format (``vars: a b c`` then one generator per
    line) or the JSON form ``{"vars": [...], "gens": [[...], ...]}``."""
    stripped = text.strip()
    if stripped.startswith("{"):
        return _parse_json(stripped)
    names = None
    gens = []
    for lineno, raw in enumerate(text.splitlines(), start=1):
        line = raw.split("#", 1)[0].strip()
        if not line:
            continue
        if names is None:
            if not line.startswith("vars:"):
                raise ParseError("expected 'vars: <names>' header", lineno)
            names = line[len("vars:"):].split()
            if not names:
                raise ParseError("no variables declared", lineno)
            if len(set(names)) != len(names):
                raise ParseError("duplicate variable name", lineno)
            continue
        gens.append(mono.parse_monomial(line, names, lineno))
    if names is None:
        raise ParseError("missing 'vars:' header", 1)
    if not gens:
        raise ParseError("no generators given")
    if all(g == mono.one(len(names)) for g in gens):
        raise ParseError("the unit ideal has no quotient to resolve")
    return minimalize(gens, names)


def _parse_json(text):
    try:
        data = json.loads(text)
        names = data["vars"]
        gens = [tuple(g) for g in data["gens"]]
    except (ValueError, KeyError, TypeError) as exc:
        raise ParseError(f"bad JSON ideal: {exc}") from None
    if any(len(g) != len(names) for g in gens):
        raise ParseError("generator length does not match 'vars'")
    try:
        return minimalize(gens, names)
    except DomainError as exc:
        raise ParseError(str(exc)) from None


def load_ideal(path) -> MonomialIdeal:
    with open(path, encoding="utf-8") as fh:
        return parse_ideal(fh.read())


def ideal_to_text(N: MonomialIdeal) -> str:
    lines = ["vars: " + " ".join(N.names)]
    lines += [N.fmt(g) for g in N.gens]
    return "\n".join(lines) + "\n"


def ideal_to_json(N: MonomialIdeal) -> dict:
    return {"vars": list(N.names), "gens": [list(g) for g in N.gens]}


# -- random stable ideals ---------------------------------------------------

def stable_closure(monomials):
    """Close a set of monomials under m -> m*x_i/x_max(m), i < max(m)."""
    seen = set(monomials)
    todo = list(seen)
    while todo:
        m = todo.pop()
        r = mono.max_index(m)
        for i in range(1, r):
            moved = list(m)
            moved[r - 1] -= 1
            moved[i - 1] += 1
            moved = tuple(moved)
            if moved not in seen:
                seen.add(moved)
                todo.append(moved)
    return seen


def random_stable_ideal(rng: random.Random, d: int, max_degree: int = 5,
                        max_gens: int = 20, tries: int = 1000) -> MonomialIdeal:
    for _ in range(tries):
        seeds = []
        for _ in range(rng.randint(1, 5)):
            deg = rng.randint(1, max_degree)
            exps = [0] * d
            for _ in range(deg):
                exps[rng.randrange(d)] += 1
            seeds.append(tuple(exps))
        N = minimalize(stable_closure(seeds))
        if len(N.gens) <= max_gens:
            return N
    raise DomainError("could not draw a stable ideal within the generator bound")


def stable_corpus(seed: int = 0, count: int = 50, max_d: int = 4,
                  max_degree: int = 5, max_gens: int = 20) -> list:
    """Reproducible list of random stable ideals with 2 <= d <= max_d."""
    rng = random.Random(seed)
    out = []
    for _ in range(count):
        d = rng.randint(min(2, max_d), max_d)
        out.append(random_stable_ideal(rng, d, max_degree, max_gens))
    return out


def monomials_up_to(d: int, max_degree: int):
    for total in range(max_degree + 1):
        for combo in itertools.combinations_with_replacement(range(d), total):
            exps = [0] * d
            for k in combo:
                exps[k] += 1
            yield tuple(exps)
