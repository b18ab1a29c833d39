import pytest
from hypothesis import given, strategies as st

from stable_resolve import monomial as mono
from stable_resolve.errors import DomainError, ParseError


def exps(d=3, top=4):
    return st.tuples(*[st.integers(0, top)] * d)


@pytest.mark.parametrize("m, expected", [((1, 1, 0), 2), ((0, 0, 0), 0), ((0, 0, 2), 3)])
def test_max_index(m, expected):
    assert mono.max_index(m) == expected


@pytest.mark.parametrize("m, expected", [((1, 1, 0), 1), ((0, 0, 0), 0), ((0, 1, 1), 2)])
def test_min_index(m, expected):
    assert mono.min_index(m) == expected


def test_divides_multiply_quotient():
    assert mono.divides((1, 1, 0), (1, 1, 1))
    assert not mono.divides((0, 0, 1), (1, 1, 0))
    assert mono.multiply((1, 0, 0), (0, 1, 1)) == (1, 1, 1)
    assert mono.quotient((1, 1, 1), (1, 1, 0)) == (0, 0, 1)


def test_quotient_by_non_divisor():
    with pytest.raises(DomainError):
        mono.quotient((1, 0, 0), (0, 1, 0))


def test_mixed_lengths_rejected():
    with pytest.raises(DomainError):
        mono.divides((1, 0), (1, 0, 0))


def test_negative_exponent_rejected():
    with pytest.raises(DomainError):
        mono.monomial([1, -1])


@given(exps(), exps())
def test_quotient_undoes_multiply(a, b):
    assert mono.quotient(mono.multiply(a, b), b) == a


@given(exps())
def test_min_le_max(m):
    if any(m):
        assert mono.min_index(m) <= mono.max_index(m)


@given(exps(), exps())
def test_componentwise_order_is_divisibility(a, b):
    assert mono.divides(a, b) == all(x <= y for x, y in zip(a, b))


@given(exps(top=3))
def test_format_parse_roundtrip(m):
    names = ("a", "b", "c")
    assert mono.parse_monomial(mono.format_monomial(m, names), names) == m


def test_parse_forms():
    assert mono.parse_monomial("a^2*b", ["a", "b", "c"]) == (2, 1, 0)
    assert mono.parse_monomial("x1^2*x2", ["x1", "x2"]) == (2, 1)
    assert mono.parse_monomial("a*a", ["a"]) == (2,)
    assert mono.parse_monomial("1", ["a", "b"]) == (0, 0)


@pytest.mark.parametrize("text", ["q", "a^", "a**2", ""])
def test_parse_errors(text):
    with pytest.raises(ParseError):
        mono.parse_monomial(text, ["a", "b"])


def test_prime_from_environment(monkeypatch):
    monkeypatch.setenv(mono.PRIME_ENV_VAR, "101")
    assert mono.default_prime() == 101
    monkeypatch.setenv(mono.PRIME_ENV_VAR, "100")
    with pytest.raises(DomainError):
        mono.default_prime()
    monkeypatch.delenv(mono.PRIME_ENV_VAR)
    assert mono.default_prime() == 32003
