"""Sparse weighted polynomials and substitution."""

from fractions import Fraction as Q

import pytest
from hypothesis import given, settings, strategies as st

from cuspcover.binforms import BinaryForm
from cuspcover.mpoly import (DegreeMismatchError, MultiPoly, UnboundVariableError,
                             Variable, mpoly_subst)

s, t = BinaryForm.s(), BinaryForm.t()
V3 = (Variable("x"), Variable("y"), Variable("z"))
X, Y, Z = (MultiPoly.var(V3, n) for n in "xyz")


def test_subst_kills_e6_bitangent_equation():
    p = (X * X - Y * Y) ** 2 - Y**3 * Z
    res = mpoly_subst(p, {"x": s * t**3, "y": t**4, "z": (s * s - t * t) ** 2})
    assert isinstance(res, BinaryForm) and res.is_zero()


def test_subst_kills_hyperflex_equation():
    p = X**4 - Y**3 * Z
    res = mpoly_subst(p, {"x": t * s**3, "y": s**4, "z": t**4})
    assert res.is_zero()


def test_identity_substitution():
    p = X * X * Y - 3 * Z
    vars_same = {"x": X, "y": Y, "z": Z}
    assert mpoly_subst(p, vars_same) == p


def test_unbound_variable_rejected():
    with pytest.raises(UnboundVariableError):
        mpoly_subst(X + Y, {"x": s})


def test_degree_inconsistent_bindings_rejected():
    with pytest.raises(DegreeMismatchError):
        mpoly_subst(X + Y, {"x": s, "y": s * s})


small_polys = st.builds(
    lambda terms: MultiPoly(V3, {tuple(e): c for e, c in terms}),
    st.lists(st.tuples(st.tuples(st.integers(0, 2), st.integers(0, 2), st.integers(0, 2)),
                       st.integers(-3, 3)), max_size=4),
)


@settings(max_examples=50, deadline=None, derandomize=True)
@given(small_polys, small_polys)
def test_subst_is_ring_homomorphism(p, q):
    bind = {"x": X + Y, "y": Y * Z - 1, "z": Z * Z}
    lhs = mpoly_subst(p * q, bind)
    rhs = mpoly_subst(p, bind) * mpoly_subst(q, bind)
    assert lhs == rhs
    assert mpoly_subst(p + q, bind) == mpoly_subst(p, bind) + mpoly_subst(q, bind)


def test_weighted_degree_and_homogeneity():
    vs = (Variable("a", 2), Variable("b", 3))
    A, B = MultiPoly.var(vs, "a"), MultiPoly.var(vs, "b")
    p = A**3 + B * B
    assert p.weighted_degree() == 6
    assert p.is_homogeneous()
    assert not (p + A).is_homogeneous()
