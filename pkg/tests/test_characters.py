import itertools
from math import gcd

import pytest
from hypothesis import given
from hypothesis import strategies as st

from ffdet.characters import (
    chi3,
    chi3_bracket,
    inversion_perm,
    jacobi,
    legendre,
    lerch_sign,
    multiplication_perm,
    perm_sign_bruteforce,
    sigma_inverse_sign,
)
from ffdet.field_core import FieldError, field_of_order, is_prime
from oracles import sign_by_inversions

PRIMES_97 = [p for p in range(3, 98) if is_prime(p)]


def test_legendre_examples():
    assert legendre(1, 7) == 1
    assert legendre(2, 5) == -1
    assert legendre(10, 5) == 0


def test_legendre_matches_squares():
    for p in PRIMES_97:
        squares = {x * x % p for x in range(1, p)}
        for a in range(p):
            assert legendre(a, p) == (0 if a == 0 else 1 if a in squares else -1)


def test_minus_three_is_nonresidue_for_p_2_mod_3():
    for p in range(5, 1000):
        if is_prime(p) and p % 3 == 2:
            assert legendre(-3, p) == -1


def test_legendre_rejects_bad_modulus():
    for m in (4, 2, 9, 1):
        with pytest.raises(FieldError):
            legendre(1, m)


@given(st.integers(-10**6, 10**6), st.integers(-10**6, 10**6), st.sampled_from(PRIMES_97))
def test_legendre_is_multiplicative(a, b, p):
    assert legendre(a * b, p) == legendre(a, p) * legendre(b, p)


def test_jacobi_examples():
    assert jacobi(2, 15) == 1
    assert jacobi(2, 5) == -1
    for a in (-7, 0, 3, 10**9):
        assert jacobi(a, 1) == 1
    with pytest.raises(FieldError):
        jacobi(3, 10)


def test_jacobi_equals_legendre_on_primes():
    for p in PRIMES_97:
        for a in range(-100, 101):
            assert jacobi(a, p) == legendre(a, p)


@given(st.integers(-1000, 1000), st.sampled_from(PRIMES_97), st.sampled_from(PRIMES_97))
def test_jacobi_multiplicative_in_modulus(a, p1, p2):
    assert jacobi(a, p1 * p2) == jacobi(a, p1) * jacobi(a, p2)


def test_chi3():
    assert [chi3(k) for k in (1, 2, 3, -1, 0)] == [1, -1, 0, -1, 0]


def test_chi3_bracket_examples():
    assert chi3_bracket(2) == -2
    assert chi3_bracket(3) == 1
    assert chi3_bracket(4) == 1


def test_chi3_bracket_is_sum_of_characters():
    for k in range(-1000, 1001):
        assert chi3_bracket(k) == chi3(k) + chi3(1 - k)


def test_lerch_examples():
    assert lerch_sign(2, 5) == -1
    # x -> 5x mod 6 swaps 1<->5 and 2<->4
    assert lerch_sign(5, 6) == 1
    assert lerch_sign(3, 8) == -1
    # x -> 3x mod 8 swaps 1<->3, 2<->6, 5<->7
    assert multiplication_perm(3, 8) == {0: 0, 1: 3, 2: 6, 3: 1, 4: 4, 5: 7, 6: 2, 7: 5}


def test_lerch_rejects_non_units():
    with pytest.raises(ValueError):
        lerch_sign(2, 4)
    with pytest.raises(ValueError):
        lerch_sign(3, 6)


def test_lerch_exhaustive_to_60():
    for m in range(1, 61):
        for a in range(1, m + 1):
            if gcd(a, m) == 1:
                assert lerch_sign(a, m) == perm_sign_bruteforce(multiplication_perm(a, m)), (a, m)


def test_perm_sign_examples():
    assert perm_sign_bruteforce(list(range(5))) == 1
    assert perm_sign_bruteforce([1, 0, 2]) == -1
    assert perm_sign_bruteforce(multiplication_perm(2, 5)) == -1
    with pytest.raises(ValueError):
        perm_sign_bruteforce([0, 0, 1])
    with pytest.raises(ValueError):
        perm_sign_bruteforce({0: 1, 1: 2})


def test_perm_sign_matches_inversion_count():
    for n in range(6):
        for perm in itertools.permutations(range(n)):
            assert perm_sign_bruteforce(perm) == sign_by_inversions(perm)


def test_sigma_inverse_examples():
    assert sigma_inverse_sign(field_of_order(5), check=True) == -1
    assert sigma_inverse_sign(field_of_order(7), check=True) == 1
    assert sigma_inverse_sign(field_of_order(125)) == -1
    f5 = field_of_order(5)
    assert {int(k): int(v) for k, v in inversion_perm(f5).items()} == {1: 1, 2: 3, 3: 2, 4: 4}


@pytest.mark.parametrize("q", [3, 5, 7, 9, 11, 13, 25, 27, 49, 81, 121, 125, 169, 243, 343])
def test_sigma_inverse_formula_vs_brute(q):
    ctx = field_of_order(q)
    assert sigma_inverse_sign(ctx, check=True) == perm_sign_bruteforce(inversion_perm(ctx))
    assert sigma_inverse_sign(ctx) == lerch_sign(-1, q - 1)
