import json
import random

import pytest
from hypothesis import given, settings, strategies as st

from stable_resolve import monomial as mono
from stable_resolve.errors import DomainError, MembershipError, ParseError, StabilityError
from stable_resolve.ideal import (contains, decompose, decompose_product, ideal_to_json,
                                  ideal_to_text, is_stable, minimalize, monomials_up_to,
                                  parse_ideal, random_stable_ideal, stable_closure,
                                  stable_corpus)

from conftest import M2_GENS, a2, ab, ac, b2, bc, c2
from oracles import brute_decompositions


def test_minimalize_drops_multiples():
    N = minimalize([(2, 0), (1, 1), (2, 1)])
    assert set(N.gens) == {(2, 0), (1, 1)}


def test_minimalize_keeps_minimal_set(m2):
    assert set(m2.gens) == set(M2_GENS)
    assert list(m2.gens) == sorted(M2_GENS)


def test_minimalize_singleton():
    assert minimalize([(1,)]).gens == ((1,),)


@pytest.mark.parametrize("bad", [[], [(1, 0), (1, 0, 0)]])
def test_minimalize_errors(bad):
    with pytest.raises(DomainError):
        minimalize(bad)


@given(st.lists(st.tuples(st.integers(0, 3), st.integers(0, 3), st.integers(0, 3)), min_size=1, max_size=8))
def test_minimalize_idempotent(gens):
    N = minimalize(gens)
    assert minimalize(N.gens) == N
    assert not any(g != h and mono.divides(g, h) for g in N.gens for h in N.gens)


def test_contains(m2, principal):
    assert contains(m2, (1, 1, 1))
    assert not contains(m2, (0, 0, 1))
    assert not contains(principal, (0,))


def test_is_stable_examples(m2, principal):
    assert is_stable(m2)
    assert is_stable(principal)
    # ab * a / b = a^2 is not in <ab>
    assert not is_stable(minimalize([(1, 1)]))


def test_decompose_examples(m2):
    # frozen from the brute-force scan in tests/oracles.py
    assert brute_decompositions(m2.gens, (1, 1, 1)) == [(ab, (0, 0, 1))]
    assert decompose(m2, (1, 1, 1)) == (ab, (0, 0, 1))
    assert decompose(m2, a2) == (a2, (0, 0, 0))
    assert decompose(m2, (0, 1, 2)) == (bc, (0, 0, 1))


def test_decompose_errors(m2):
    with pytest.raises(MembershipError):
        decompose(m2, (0, 0, 1))
    not_stable = minimalize([(1, 1)])
    with pytest.raises(StabilityError):
        # a^2*b has no split n*y with max(n) <= min(y) in <ab>
        decompose(not_stable, (2, 1))


def test_decompose_product_examples(m2):
    assert decompose_product(m2, (1, 0, 0), bc) == ab
    assert decompose_product(m2, (0, 0, 0), ac) == ac
    assert decompose_product(m2, (0, 1, 0), c2, check=True) == bc


def monomials_in(N, max_degree):
    return [m for m in monomials_up_to(N.d, max_degree) if contains(N, m)]


def test_decomposition_matches_brute_force_on_corpus(corpus):
    for N in corpus[:20]:
        top = max(sum(g) for g in N.gens) + 1
        for m in monomials_in(N, top):
            found = brute_decompositions(N.gens, m)
            assert len(found) == 1
            g, y = decompose(N, m)
            assert (g, y) == found[0]
            assert mono.multiply(g, y) == m
            if any(y):
                assert mono.max_index(g) <= mono.min_index(y)


def test_associativity_and_max_bound(corpus):
    rng = random.Random(3)
    for N in corpus:
        members = monomials_in(N, max(sum(g) for g in N.gens) + 1)
        for _ in range(40):
            m = rng.choice(members)
            w = tuple(rng.randint(0, 2) for _ in range(N.d))
            decompose_product(N, w, m, check=True)


def test_generator_stability_is_sufficient(corpus):
    """Every monomial of N up to (max generator degree + 1) satisfies the exchange."""
    for N in corpus:
        assert is_stable(N)
        for m in monomials_in(N, max(sum(g) for g in N.gens) + 1):
            r = mono.max_index(m)
            for i in range(1, r):
                moved = list(m)
                moved[r - 1] -= 1
                moved[i - 1] += 1
                assert contains(N, tuple(moved))


def test_closure_produces_stable_ideals():
    rng = random.Random(11)
    for _ in range(30):
        d = rng.randint(1, 4)
        N = random_stable_ideal(rng, d)
        assert is_stable(N)
        assert len(N.gens) <= 20
        assert max(sum(g) for g in N.gens) <= 5


def test_stable_closure_of_single_monomial():
    assert stable_closure([(0, 1)]) == {(0, 1), (1, 0)}


def test_corpus_is_reproducible():
    assert stable_corpus(5, 10) == stable_corpus(5, 10)
    assert stable_corpus(5, 10) != stable_corpus(6, 10)


def test_parse_text_and_json(m2):
    text = "vars: a b c\na^2\na*b\na*c\nb^2\nb*c\nc^2\n"
    assert parse_ideal(text) == m2
    assert parse_ideal(ideal_to_text(m2)) == m2
    assert parse_ideal(json.dumps(ideal_to_json(m2))) == m2
    assert parse_ideal('{"vars": ["a","b","c"], "gens": [[2,0,0],[1,1,0],[1,0,1],[0,2,0],[0,1,1],[0,0,2]]}') == m2


@pytest.mark.parametrize("text, line", [
    ("a^2\n", 1),
    ("vars: a b\na^2\nq*b\n", 3),
    ("vars: a b\n\n\na^\n", 4),
])
def test_parse_errors_name_the_line(text, line):
    with pytest.raises(ParseError) as info:
        parse_ideal(text)
    assert info.value.line == line
    assert f"line {line}" in str(info.value)


@pytest.mark.parametrize("text", ["vars: a\n", '{"vars": ["a"], "gens": [[1, 2]]}', "vars: a\n1\n", "{oops"])
def test_parse_rejects_bad_input(text):
    with pytest.raises(ParseError):
        parse_ideal(text)


@settings(max_examples=25, deadline=None)
@given(st.integers(0, 10_000))
def test_random_ideals_stable(seed):
    rng = random.Random(seed)
    N = random_stable_ideal(rng, rng.randint(1, 4), max_degree=4, max_gens=12)
    assert is_stable(N)
