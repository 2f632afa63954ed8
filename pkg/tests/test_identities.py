"""Tests for the bounded-part partition sums and the constant-term route."""

from __future__ import annotations

from math import comb

import pytest

from geodenums.identities import (
    LaurentPoly,
    MultVector,
    binom_general,
    claim1_sum,
    claim2_ct,
    claim2_sum,
    enumerate_mult_vectors,
    multinomial,
    one_plus_z_power,
    partition_sum_main,
)


# ---------------------------------------------------------------------------
# enumeration


def test_enumerate_length_one():
    got = [v.mult for v in enumerate_mult_vectors(1, 2)]
    assert got == [(0, 1), (1, 0)]


def test_enumerate_length_two():
    got = [v.mult for v in enumerate_mult_vectors(2, 2)]
    assert got == [(0, 2), (1, 1), (2, 0)]
    assert len(got) == comb(2 + 1, 1)


def test_enumerate_counts_and_uniqueness():
    got = [v.mult for v in enumerate_mult_vectors(3, 4)]
    assert len(got) == 20 == comb(3 + 3, 3)
    assert len(set(got)) == 20
    assert got == sorted(got)


def test_mult_vector_gradings():
    lam = MultVector((1, 0, 2))  # partition 1 * 3^2
    assert lam.size == 1 + 6
    assert lam.length == 3
    for v in enumerate_mult_vectors(4, 3):
        assert v.size >= v.length
        assert (v.size == 0) == (v.length == 0)


# ---------------------------------------------------------------------------
# binomial helpers


def test_multinomial_values():
    assert multinomial(3, (1, 1, 1)) == 6
    assert multinomial(4, (2, 2)) == 6
    with pytest.raises(ValueError):
        multinomial(3, (1, 1))


def test_binom_general_matches_comb_for_nonnegative():
    for y in range(10):
        for k in range(6):
            assert binom_general(y, k) == comb(y, k)


def test_binom_general_negative_upper():
    assert binom_general(-1, 2) == 1
    assert binom_general(-2, 3) == -4
    assert binom_general(-1, 0) == 1
    # C(-y, k) = (-1)^k C(y+k-1, k)
    for y in range(1, 6):
        for k in range(5):
            assert binom_general(-y, k) == (-1) ** k * comb(y + k - 1, k)


# ---------------------------------------------------------------------------
# the partition sums


def test_main_sum_small_values():
    assert partition_sum_main(1, 1) == 1
    assert partition_sum_main(3, 2) == 4
    assert partition_sum_main(4, 3) == 27


def test_main_sum_grid():
    for n in range(1, 6):
        for a in (1, 2):
            assert partition_sum_main(n, a) == a ** (n - 1)


def test_claim1_vanishes():
    assert claim1_sum(2, 1, 5) == 0
    assert claim1_sum(3, 2, -1) == 0
    for n in range(1, 6):
        for a in (1, 2):
            for x in range(-2, n + 1):
                assert claim1_sum(n, a, x) == 0


def test_claim2_constant_value():
    assert claim2_sum(1, 3, 9) == 1
    assert claim2_sum(3, 2, 0) == 4
    for n in range(1, 6):
        for a in (1, 2):
            for x in range(-2, n + 1):
                assert claim2_sum(n, a, x) == a ** (n - 1)


def test_claim_chain_alternating_sum_vanishes():
    # splitting the length-n sum by which part is removed telescopes into an
    # alternating sum of 2a equal values
    for n in range(2, 5):
        for a in (1, 2):
            for x in (-1, 0, 2):
                total = sum(
                    (-1) ** i * claim2_sum(n, a, x + i) for i in range(1, 2 * a + 1)
                )
                assert total == 0


# ---------------------------------------------------------------------------
# constant-term route


def test_ct_examples():
    assert claim2_ct(2, 1, 0) == 1
    assert claim2_ct(3, 2, 1) == 4
    for a in (1, 2, 3):
        for x in (0, 1, 5):
            assert claim2_ct(1, a, x) == 1


def test_ct_matches_enumeration():
    for n in range(1, 6):
        for a in (1, 2):
            for x in range(0, n + 1):
                assert claim2_ct(n, a, x) == claim2_sum(n, a, x)


def test_ct_rejects_negative_x():
    with pytest.raises(ValueError):
        claim2_ct(2, 1, -1)


# ---------------------------------------------------------------------------
# Laurent polynomials


def test_laurent_mul_and_shift():
    p = LaurentPoly({0: 1, 1: 1})  # 1 + z
    q = LaurentPoly({-1: 2, 0: -1})  # 2/z - 1
    assert (p * q).coeffs == {-1: 2, 0: 1, 1: -1}
    assert p.shifted(-2).coeffs == {-2: 1, -1: 1}
    assert (p * q).constant_term() == 1


def test_laurent_pow_and_canonical_form():
    p = LaurentPoly({0: 1, 1: 1})
    assert (p**3).coeffs == {0: 1, 1: 3, 2: 3, 3: 1}
    assert (p**0).coeffs == {0: 1}
    assert LaurentPoly({0: 0, 2: 0, 1: 5}).coeffs == {1: 5}
    cancel = LaurentPoly({0: 1}) + LaurentPoly({0: -1})
    assert cancel.coeffs == {}


def test_one_plus_z_power():
    assert one_plus_z_power(4).coeffs == {0: 1, 1: 4, 2: 6, 3: 4, 4: 1}
    assert one_plus_z_power(0).coeffs == {0: 1}
    with pytest.raises(ValueError):
        one_plus_z_power(-1)
