"""
Tests for the sawtooth function and both Dedekind-sum evaluators.
"""

import math
import random
from fractions import Fraction

import pytest
from hypothesis import given
from hypothesis import strategies as st
from pydantic import ValidationError

from dedekind.core.exceptions import NotCoprime, OracleCapExceeded
from dedekind.models import CoprimePair
from dedekind.services.dedekind_core import (
    big_s,
    dedekind_sum,
    dedekind_sum_fast,
    dedekind_sum_naive,
    descent_steps,
    normalize_arg,
    sawtooth,
)
from dedekind.services.exact_arith import mod_inverse


def pair(m: int, n: int) -> CoprimePair:
    return CoprimePair(m=m, n=n)


def random_pairs(seed: int, count: int, max_n: int):
    rng = random.Random(seed)
    for _ in range(count):
        n = rng.randint(1, max_n)
        while True:
            m = rng.randint(-n, 2 * n)
            if math.gcd(m, n) == 1:
                break
        yield pair(m, n)


# === CoprimePair ===

def test_coprime_pair_rejects_common_factor():
    with pytest.raises(ValidationError):
        CoprimePair(m=6, n=9)
    with pytest.raises(NotCoprime):
        CoprimePair.from_values(6, 9)


def test_coprime_pair_rejects_nonpositive_modulus():
    with pytest.raises(ValidationError):
        CoprimePair(m=1, n=0)
    with pytest.raises(ValueError):
        CoprimePair.from_values(1, -3)


def test_coprime_pair_holds_big_integers():
    p = CoprimePair(m=10**40 + 1, n=10**41)
    assert p.n == 10**41


# === Sawtooth ===

@pytest.mark.parametrize(
    "t,expected",
    [(Fraction(3), Fraction(0)), (Fraction(1, 4), Fraction(-1, 4)), (Fraction(-1, 4), Fraction(1, 4)),
     (Fraction(1, 2), Fraction(0)), (Fraction(7, 3), Fraction(-1, 6))],
)
def test_sawtooth(t, expected):
    assert sawtooth(t) == expected


@given(st.fractions())
def test_sawtooth_is_odd_and_bounded(t):
    assert sawtooth(-t) == -sawtooth(t)
    assert abs(sawtooth(t)) < Fraction(1, 2)
    assert sawtooth(t + 1) == sawtooth(t)


# === Evaluators ===

@pytest.mark.parametrize(
    "m,n,expected",
    [(1, 1, Fraction(0)), (1, 3, Fraction(1, 18)), (3, 5, Fraction(0)), (-1, 3, Fraction(-1, 18)),
     (2, 3, Fraction(-1, 18))],
)
def test_known_sums(m, n, expected):
    assert dedekind_sum_naive(pair(m, n)) == expected
    assert dedekind_sum_fast(pair(m, n)) == expected


@pytest.mark.parametrize("m,n", [(1, 2), (3, 7), (5, 12), (-4, 9), (13, 1)])
def test_naive_matches_sawtooth_definition(m, n):
    definitional = sum(
        (sawtooth(Fraction(k, n)) * sawtooth(Fraction(m * k, n)) for k in range(1, n + 1)),
        Fraction(0),
    )
    assert dedekind_sum_naive(pair(m, n)) == definitional


def test_naive_respects_cap():
    with pytest.raises(OracleCapExceeded):
        dedekind_sum_naive(pair(1, 101), cap=100)
    assert dedekind_sum_naive(pair(1, 101), cap=0) == dedekind_sum_fast(pair(1, 101))


def test_naive_cap_from_settings(monkeypatch):
    from dedekind.core import config as core_config

    monkeypatch.setenv("DEDEKIND_ORACLE_CAP", "50")
    core_config.get_settings.cache_clear()
    with pytest.raises(OracleCapExceeded):
        dedekind_sum_naive(pair(1, 51))


@pytest.mark.slow
def test_naive_pure_python_path_beyond_int64_bound():
    p = pair(3, 2_000_003)
    assert dedekind_sum_naive(p, cap=0) == dedekind_sum_fast(p)


def test_oracle_equivalence_exhaustive():
    for n in range(1, 201):
        for m in range(1, n + 1):
            if math.gcd(m, n) != 1:
                continue
            p = pair(m, n)
            fast = dedekind_sum_fast(p)
            assert fast == dedekind_sum_naive(p), p
            # 12 s(m, n) has denominator dividing n
            assert n % (12 * fast).denominator == 0, p


@pytest.mark.slow
def test_oracle_equivalence_random_large():
    for p in random_pairs(seed=2024, count=500, max_n=10**6):
        assert dedekind_sum_fast(p) == dedekind_sum_naive(p), p


def test_dispatcher():
    assert dedekind_sum(pair(1, 3), method="naive") == Fraction(1, 18)
    with pytest.raises(ValueError):
        dedekind_sum(pair(1, 3), method="slow")  # type: ignore[arg-type]


@pytest.mark.parametrize(
    "m,n,expected",
    [(1, 3, Fraction(2, 3)), (2, 3, Fraction(-2, 3)), (627251, 172769740, Fraction(55599441, 86384870))],
)
def test_big_s(m, n, expected):
    assert big_s(pair(m, n)) == expected


def test_descent_is_logarithmic():
    # consecutive Fibonacci numbers are the worst case of the Euclidean algorithm
    a, b = 1, 2
    while b < 10**100:
        a, b = b, a + b
    steps = descent_steps(pair(a, b))
    assert steps <= 2 * b.bit_length()
    assert dedekind_sum_fast(pair(a, b)) == -dedekind_sum_fast(pair(-a, b))


@pytest.mark.parametrize("m,n,expected", [(7, 3, (1, 3)), (-1, 3, (2, 3)), (5, 1, (0, 1))])
def test_normalize_arg(m, n, expected):
    normalized = normalize_arg(pair(m, n))
    assert (normalized.m, normalized.n) == expected
    assert big_s(normalized) == big_s(pair(m, n))


# === Symmetries ===

def test_symmetries_random():
    for p in random_pairs(seed=7, count=1000, max_n=10**6):
        m, n = p.m, p.n
        value = big_s(p)
        assert big_s(pair(m + n, n)) == value
        assert big_s(pair(-m, n)) == -value
        assert big_s(pair(mod_inverse(m, n), n)) == value


@given(st.integers(1, 10**9), st.integers(-10**12, 10**12))
def test_symmetries_property(n, m):
    if math.gcd(m, n) != 1:
        return
    value = big_s(pair(m, n))
    assert big_s(pair(m + n, n)) == value
    assert big_s(pair(-m, n)) == -value
    assert big_s(pair(mod_inverse(m, n), n)) == value
