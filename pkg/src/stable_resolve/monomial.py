"""Exponent-vector monomials and the prime field Z/p.

A monomial in k[x_1, ..., x_d] is a plain tuple of d non-negative ints.
Variable indices are 1-based everywhere in the public API, matching the
usual x_1, ..., x_d naming; ``max_index`` and ``min_index`` return 0 for
the constant monomial.
"""
from __future__ import annotations

import os
import re
from typing import Iterable, Sequence

from .errors import DomainError, ParseError

Monomial = tuple  # tuple[int, ...]

DEFAULT_PRIME = 32003
PRIME_ENV_VAR = "STABLE_RESOLVE_PRIME"


def monomial(exponents: Iterable[int]) -> Monomial:
    exps = tuple(exponents)
    for e in exps:
        if not isinstance(e, int) or isinstance(e, bool) or e < 0:
            raise DomainError(f"exponent {e!r} is not a natural number")
    return exps


def one(d: int) -> Monomial:
    return (0,) * d


def variable(i: int, d: int) -> Monomial:
    """x_i as an exponent vector (i is 1-based)."""
    if not 1 <= i <= d:
        raise DomainError(f"variable index {i} out of range 1..{d}")
    return tuple(1 if k == i - 1 else 0 for k in range(d))


def squarefree(indices: Iterable[int], d: int) -> Monomial:
    """x_C = prod_{c in C} x_c."""
    exps = [0] * d
    for c in indices:
        exps[c - 1] += 1
    return tuple(exps)


def degree(m: Monomial) -> int:
    return sum(m)


def max_index(m: Monomial) -> int:
    for k in range(len(m) - 1, -1, -1):
        if m[k]:
            return k + 1
    return 0


def min_index(m: Monomial) -> int:
    for k, e in enumerate(m):
        if e:
            return k + 1
    return 0


def _same_length(a, b):
    if len(a) != len(b):
        raise DomainError(f"monomials live in different rings ({len(a)} vs {len(b)} variables)")


def divides(a: Monomial, b: Monomial) -> bool:
    _same_length(a, b)
    return all(x <= y for x, y in zip(a, b))


def multiply(a: Monomial, b: Monomial) -> Monomial:
    _same_length(a, b)
    return tuple(x + y for x, y in zip(a, b))


def quotient(a: Monomial, b: Monomial) -> Monomial:
    """a / b; b must divide a."""
    _same_length(a, b)
    out = tuple(x - y for x, y in zip(a, b))
    if any(e < 0 for e in out):
        raise DomainError(f"{b} does not divide {a}")
    return out


def lcm(a: Monomial, b: Monomial) -> Monomial:
    _same_length(a, b)
    return tuple(max(x, y) for x, y in zip(a, b))


def default_names(d: int) -> tuple:
    if d <= 26:
        return tuple("abcdefghijklmnopqrstuvwxyz"[:d])
    return tuple(f"x{i}" for i in range(1, d + 1))


def format_monomial(m: Monomial, names: Sequence[str] | None = None) -> str:
    names = names or default_names(len(m))
    parts = []
    for name, e in zip(names, m):
        if e == 1:
            parts.append(name)
        elif e > 1:
            parts.append(f"{name}^{e}")
    return "*".join(parts) if parts else "1"


_FACTOR = re.compile(r"^\s*([A-Za-z_][A-Za-z_0-9]*)\s*(?:\^\s*(\d+))?\s*$")


def parse_monomial(text: str, names: Sequence[str], line: int | None = None) -> Monomial:
    """Parse ``a^2*b`` (or ``x1^2*x2``) against the declared variable names."""
    index = {name: k for k, name in enumerate(names)}
    exps = [0] * len(names)
    text = text.strip()
    if text == "1":
        return tuple(exps)
    if not text:
        raise ParseError("empty monomial", line)
    for factor in text.split("*"):
        match = _FACTOR.match(factor)
        if not match:
            raise ParseError(f"cannot parse factor {factor.strip()!r}", line)
        name, power = match.group(1), match.group(2)
        if name not in index:
            raise ParseError(f"unknown variable {name!r}", line)
        exps[index[name]] += int(power) if power is not None else 1
    return tuple(exps)


def is_prime(n: int) -> bool:
    if n < 2:
        return False
    if n % 2 == 0:
        return n == 2
    k = 3
    while k * k <= n:
        if n % k == 0:
            return False
        k += 2
    return True


def default_prime() -> int:
    raw = os.environ.get(PRIME_ENV_VAR)
    if raw is None:
        return DEFAULT_PRIME
    try:
        p = int(raw)
    except ValueError:
        raise DomainError(f"{PRIME_ENV_VAR}={raw!r} is not an integer") from None
    return check_prime(p)


def check_prime(p: int) -> int:
    if not is_prime(p) or p == 2:
        raise DomainError(f"p = {p} must be an odd prime")
    return p
