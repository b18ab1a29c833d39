import itertools

import pytest

from stable_resolve.ideal import minimalize
from stable_resolve.oracle import (compare_betti, koszul_betti, koszul_slice,
                                   quotient_dim)
from stable_resolve.resolution import betti_table, bounding_box, build_resolution

from conftest import P_DEFAULT
from oracles import upper_koszul_betti


@pytest.mark.parametrize("a, expected", [((1, 0, 0), 1), ((1, 1, 0), 0), ((0, 0, 0), 1)])
def test_quotient_dim(m2, a, expected):
    assert quotient_dim(m2, a) == expected


@pytest.mark.parametrize("a, expected", [
    ((1, 1, 0), [0, 1, 0, 0]),
    ((1, 1, 1), [0, 0, 2, 0]),
    ((0, 0, 0), [1, 0, 0, 0]),
    ((1, 1, 2), [0, 0, 0, 1]),
    ((2, 2, 2), [0, 0, 0, 0]),
])
def test_koszul_examples(m2, a, expected):
    # expected values frozen from upper_koszul_betti in tests/oracles.py
    assert upper_koszul_betti(m2.gens, a) == expected
    assert koszul_betti(m2, a, P_DEFAULT) == expected


def test_slice_composes(m2):
    sl = koszul_slice(m2, (1, 1, 1), P_DEFAULT)
    for lo, hi in zip(sl.matrices[1:], sl.matrices[2:]):
        if lo is not None and lo.size and hi.size:
            assert not (lo @ hi % P_DEFAULT).any()


def box(N):
    corner = bounding_box(N.gens)
    return itertools.product(*(range(b + 1) for b in corner))


def test_matches_independent_oracle_on_m2(m2):
    for a in box(m2):
        assert koszul_betti(m2, a, P_DEFAULT) == upper_koszul_betti(m2.gens, a), a


def test_matches_independent_oracle_on_corpus(small_corpus):
    for N in small_corpus:
        for a in box(N):
            assert koszul_betti(N, a, P_DEFAULT) == upper_koszul_betti(N.gens, a), (N, a)


def test_principal(principal):
    assert koszul_betti(principal, (1,), P_DEFAULT) == [0, 1]
    assert compare_betti(principal, build_resolution(principal)).passed


@pytest.mark.parametrize("depth", ["quick", "full", "exhaustive"])
def test_compare_betti_m2(m2, depth):
    report = compare_betti(m2, build_resolution(m2), depth)
    assert report.passed
    assert report.checked > 0


def test_compare_betti_corpus(corpus):
    for N in corpus:
        report = compare_betti(N, build_resolution(N))
        assert report.passed, report.violations[:3]


def test_compare_betti_detects_wrong_table(m2):
    F = build_resolution(m2)
    F.degrees[2][0] = (5, 5, 5)
    assert not compare_betti(m2, F).passed


def test_external_degrees_vanish(m2):
    table = betti_table(build_resolution(m2))
    top = bounding_box([a for (_, a) in table.graded])
    for a in [(top[0] + 1, 0, 0), (3, 3, 3), (0, 4, 1)]:
        assert koszul_betti(m2, a, P_DEFAULT) == [0, 0, 0, 0]


def test_non_stable_ideal_still_has_betti_numbers():
    # the oracle does not depend on stability: <ab> is a hypersurface
    N = minimalize([(1, 1)])
    assert koszul_betti(N, (1, 1), P_DEFAULT) == [0, 1, 0]
