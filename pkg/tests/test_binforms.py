"""Binary form arithmetic against brute-force oracles."""

from fractions import Fraction as Q

import pytest
from hypothesis import given, settings, strategies as st

from cuspcover.binforms import (BinaryForm, NonDivisibleError, divexact, gcd,
                                perfect_power_root, rational_roots, resultant,
                                squarefree_part)
from oracles import det_laplace, small_rational_roots

s, t = BinaryForm.s(), BinaryForm.t()


def test_difference_of_squares():
    assert (s * s - t * t) * (s * s + t * t) == s**4 - t**4


def test_divexact_inverse_of_product():
    assert divexact(s**4 - t**4, s * s - t * t) == s * s + t * t


def test_divexact_reports_remainder_degree():
    with pytest.raises(NonDivisibleError) as err:
        divexact(s**4 + t**4, s * s - t * t)
    assert err.value.remainder_degree >= 0


def test_gcd_monic_from_root_factorizations():
    f1 = s**3 - s * t * t
    f2 = s * s * t - t**3
    # oracle: factor both by brute-force root search and compare
    r1 = small_rational_roots([Q(0), Q(-1), Q(0), Q(1)])  # f1(1,t): 1 - t^2 times s-part
    g = gcd(f1, f2)
    assert g == s * s - t * t
    assert g.leading_coeff() == 1
    common = set(small_rational_roots([1, 0, -1])) & set(small_rational_roots([1, 0, -1]))
    assert {Q(-1), Q(1)} <= common


def test_gcd_divides_and_divexact_roundtrip():
    a = (s - t) * (s + 2 * t) * s
    b = (s - t) * (3 * s * s + t * t)
    g = gcd(a, b)
    assert divexact(a, g) * g == a
    assert divexact(b, g) * g == b.monic().scale(b.leading_coeff())


@settings(max_examples=60, deadline=None, derandomize=True)
@given(st.lists(st.integers(-4, 4), min_size=2, max_size=4),
       st.lists(st.integers(-4, 4), min_size=2, max_size=4))
def test_gcd_divides_both_and_product_division(ac, bc):
    a = BinaryForm(len(ac) - 1, ac)
    b = BinaryForm(len(bc) - 1, bc)
    if a.is_zero() or b.is_zero():
        return
    g = gcd(a, b)
    assert divexact(a, g) * g == a
    assert divexact(b, g).scale(1) * g == b
    assert divexact(a * b, b) == a


def test_resultant_vs_sylvester_oracle():
    a = s * s - t * t
    b = s * s + t * t
    # Sylvester matrix by hand, Laplace-expanded
    rows = [[1, 0, -1, 0], [0, 1, 0, -1], [1, 0, 1, 0], [0, 1, 0, 1]]
    assert resultant(a, b) == det_laplace(rows) == 4


def test_resultant_vanishes_iff_common_root():
    assert resultant((s - t) * s, (s - t) * t) == 0
    assert resultant(s - t, s + t) != 0


def test_squarefree_part():
    f = s * s * t * (s - t) ** 3
    assert squarefree_part(f) == (s * t * (s - t)).monic()


def test_rational_roots_with_multiplicity():
    f = s * t * t * (s - 2 * t)
    roots = dict()
    for s0, t0, mult in rational_roots(f):
        roots[(s0, t0)] = mult
    assert roots[(Q(0), Q(1))] == 1  # root of s
    assert roots[(Q(1), Q(0))] == 2  # double root of t
    assert roots[(Q(1), Q(1, 2))] == 1


def test_perfect_power_root_scaling():
    g = 4 * s**3 + 3 * t**3
    root, c = perfect_power_root(g.pow(4), 4)
    assert root.pow(4).scale(c) == g.pow(4)
    assert perfect_power_root(s**4 + t**4, 2) is None


def test_compose_gl2_multiplicative():
    a = s * s - t * t
    b = s + 2 * t
    left = (a * b).compose_gl2(1, 2, 3, 5)
    right = a.compose_gl2(1, 2, 3, 5) * b.compose_gl2(1, 2, 3, 5)
    assert left == right
