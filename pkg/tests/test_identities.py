"""
Tests for the closed form of S(mt+1, nt) and the three-term relation.
"""

import math
import random
from fractions import Fraction

import pytest

from dedekind.core.exceptions import NotCoprime, NotInverse, NotLess, NotPositiveQ
from dedekind.models import CoprimePair, Decomposition
from dedekind.services.dedekind_core import big_s, dedekind_sum_naive
from dedekind.services.exact_arith import mod_inverse
from dedekind.services.identities import (
    bezout_for_three_term,
    theorem2_from_plan,
    theorem2_value,
    three_term_check,
)
from dedekind.services.verification import random_three_term_args


# === Closed form ===

def test_closed_form_small():
    result = theorem2_value(2, 3, -1)
    assert result.t == 3
    assert (result.pair.m, result.pair.n) == (7, 9)
    assert result.value == Fraction(-16, 9)
    assert 12 * dedekind_sum_naive(CoprimePair(m=7, n=9)) == Fraction(-16, 9)


def test_closed_form_reference_pair():
    result = theorem2_value(25, 6886, 25 - 25090)
    assert result.t == 25090
    assert (result.pair.m, result.pair.n) == (627251, 172769740)
    assert result.value == Fraction(55599441, 86384870)


def test_closed_form_trivial_modulus():
    result = theorem2_value(1, 1, 0)
    assert result.t == 1
    assert (result.pair.m, result.pair.n) == (2, 1)
    assert result.value == 0


def test_closed_form_errors():
    with pytest.raises(NotInverse):
        theorem2_value(2, 3, 1)
    with pytest.raises(NotLess):
        theorem2_value(2, 3, 5)
    with pytest.raises(NotCoprime):
        theorem2_value(3, 6, 1)


def test_closed_form_random():
    rng = random.Random(11)
    for _ in range(200):
        n = rng.randint(1, 10**4)
        m = rng.randint(1, n)
        if math.gcd(m, n) != 1:
            continue
        m_star = mod_inverse(m, n) - rng.randint(1, 5) * n
        result = theorem2_value(m, n, m_star, verify=False)
        assert math.gcd(result.pair.m, result.pair.n) == 1
        assert big_s(result.pair) == -3 + Fraction(2, n * result.t) + Fraction(result.t, n)


def test_closed_form_verification_setting(monkeypatch):
    from dedekind.core import config as core_config

    monkeypatch.setenv("DEDEKIND_ASSERT_CLOSED_FORM", "false")
    core_config.get_settings.cache_clear()
    assert core_config.get_settings().assert_closed_form is False
    assert theorem2_value(2, 3, -1).value == Fraction(-16, 9)


def test_closed_form_from_plan_parameters(reference_plan, reference_value):
    dec = reference_plan.decomposition
    result = theorem2_from_plan(dec, reference_plan.m)
    assert result.t == reference_plan.t == reference_plan.m - reference_plan.m_star
    assert (result.pair.m, result.pair.n) == (reference_plan.M, reference_plan.N)
    assert result.value == reference_value
    surplus = Fraction(2 * reference_plan.m, reference_plan.n) + Fraction(2, reference_plan.N)
    assert result.value == dec.value + surplus


def test_closed_form_from_plan_parameters_random():
    rng = random.Random(19)
    for _ in range(200):
        k = rng.randint(1, 50)
        j = rng.randint(1, k)
        if math.gcd(j, k) != 1:
            continue
        dec = Decomposition(l=rng.randint(1, 6), j=j, k=k)
        m = mod_inverse(j, k) + k * rng.randint(1, 20)
        n = k * (m * m + 1)
        result = theorem2_from_plan(dec, m)
        assert result.value == dec.value + Fraction(2 * m, n) + Fraction(2, n * result.t)


def test_closed_form_from_plan_parameters_rejects_bad_multiplier():
    with pytest.raises(NotInverse):
        theorem2_from_plan(Decomposition(l=4, j=4, k=11), 26)


# === Bezout data ===

def test_bezout_small():
    data = bezout_for_three_term(3, 5, 1, 2)
    assert (data.q, data.j, data.k, data.r) == (1, 1, 1, -2)


def test_bezout_trivial():
    data = bezout_for_three_term(1, 1, 0, 1)
    assert (data.q, data.j, data.k, data.r) == (1, 0, 1, -1)


def test_bezout_closed_form_choice():
    m, n, t = 25, 6886, 25090
    data = bezout_for_three_term(m, n, m - t, n)
    assert 0 <= data.j < n
    assert data.q == n * t
    alternative = data.shifted(-1)
    assert alternative.j == -m
    assert alternative.r == -m * t - 1


def test_bezout_errors():
    with pytest.raises(NotPositiveQ):
        bezout_for_three_term(1, 2, 1, 2)
    with pytest.raises(NotCoprime):
        bezout_for_three_term(2, 4, 0, 1)
    with pytest.raises(NotCoprime):
        bezout_for_three_term(3, 5, 2, 4)


# === Three-term relation ===

@pytest.mark.parametrize("m,n,c,d", [(3, 5, 1, 2), (1, 1, 0, 1), (2, 3, 1, 2)])
def test_three_term_examples(m, n, c, d):
    result = three_term_check(m, n, c, d)
    assert result.holds
    assert result.lhs == result.rhs


def test_three_term_example_values():
    result = three_term_check(3, 5, 1, 2)
    assert result.lhs == 0
    assert result.rhs == 0


def test_three_term_random_and_shift_invariance():
    rng = random.Random(42)
    for _ in range(1000):
        m, n, c, d = random_three_term_args(rng)
        result = three_term_check(m, n, c, d)
        assert result.holds, (m, n, c, d)
        s = rng.randint(-3, 3)
        shifted = result.bezout.shifted(s)
        assert shifted.r == result.bezout.r + shifted.q * s
        assert big_s(CoprimePair(m=shifted.r, n=shifted.q)) == big_s(
            CoprimePair(m=result.bezout.r, n=result.bezout.q)
        )
