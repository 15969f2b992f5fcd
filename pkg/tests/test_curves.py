"""Curve model: spans, cusp analysis, genus, reciprocal construction."""

from fractions import Fraction as Q

import pytest

from cuspcover.binforms import BinaryForm
from cuspcover.curves import (CurveError, IrrationalCuspError, MultibranchError,
                              ParamCurve, reciprocal_cusp_curve)
from oracles import monomial_semigroup_orders, semigroup_gaps

s, t = BinaryForm.s(), BinaryForm.t()
m10 = lambda a: BinaryForm.monomial(10, a)


def e6_bitangent():
    return ParamCurve("e6b", [s * t**3, t**4, (s * s - t * t) ** 2])


def test_coordinate_span_dims():
    c = e6_bitangent()
    assert c.coordinate_span(1).dim == 3
    assert c.coordinate_span(2).dim == 6  # = 2*4 + 1 - 3


def test_a12_span_dim():
    x = t * t * s**3 + t**5
    c = ParamCurve("a12", [x, s * t**4, s**5 + 2 * s * s * t**3])
    assert c.coordinate_span(2).dim == 6  # special at m = 2: h0(K) = g
    assert c.coordinate_span(3).dim == 3 * 5 + 1 - 6


def test_e6_cusp_analysis():
    cusps = e6_bitangent().cusp_analysis()
    assert len(cusps) == 1
    c = cusps[0]
    assert c.point == t
    assert c.semigroup == (3, 4)
    assert c.delta == 3
    assert c.gaps() == (1, 2, 5)
    assert c.conductor == 2 * c.delta  # Gorenstein (planar) branch


def test_3cusp_quartic():
    c = ParamCurve("3c", [(s * (s - t)) ** 2, (t * (s - t)) ** 2, (s * t) ** 2])
    cusps = c.cusp_analysis()
    assert len(cusps) == 3
    assert all(cd.semigroup == (2, 3) and cd.delta == 1 for cd in cusps)
    assert c.arithmetic_genus() == 3


def test_monomial_e12_semigroup_vs_oracle():
    c = ParamCurve("e12",
                   [m10(0), m10(3), m10(6), m10(9), m10(7), m10(10)])
    (cd,) = c.cusp_analysis()
    assert cd.point == t
    assert cd.semigroup == (3, 7)
    # oracle: vanishing orders of monomials in local coordinates t^3, t^7 up to 13
    orders = monomial_semigroup_orders((3, 7), 14)
    gaps = [n for n in range(13) if n not in orders]
    assert cd.delta == len(gaps) == 6


def test_genus_cross_check_and_conic():
    conic = ParamCurve("conic", [s * s, s * t, t * t])
    assert conic.cusp_analysis() == ()
    assert conic.arithmetic_genus() == 0
    quartics = [ParamCurve("h", [s * t**3, t**4, s**4]), e6_bitangent()]
    assert all(c.arithmetic_genus() == 3 for c in quartics)


def test_reciprocal_cusp_curves():
    r3 = reciprocal_cusp_curve([s, t, s + t])
    assert r3.degree == 4
    assert r3.arithmetic_genus() == 3
    r4 = reciprocal_cusp_curve([s, t, s + t, s + 2 * t])
    assert len(r4.cusp_analysis()) == 4
    assert all(c.delta == 1 for c in r4.cusp_analysis())
    assert sum(c.delta for c in r4.cusp_analysis()) == 4


def test_reciprocal_rejects_repeats():
    with pytest.raises(CurveError):
        reciprocal_cusp_curve([s, t, 2 * s])


def test_parameter_change_invariance():
    c = e6_bitangent()
    base = {(cd.semigroup, cd.delta) for cd in c.cusp_analysis()}
    # (s,t) -> (s + t, 2s - t): invertible over Q
    moved = ParamCurve("moved", [f.compose_gl2(1, 1, 2, -1) for f in c.coords])
    got = {(cd.semigroup, cd.delta) for cd in moved.cusp_analysis()}
    assert got == base
    assert moved.arithmetic_genus() == 3


def test_irrational_cusp_rejected():
    # reciprocal-type curve with cusps at 0, infinity and +-sqrt(2), realized
    # over Q by symmetrizing the conjugate pair of linear forms
    psi = s * s - 2 * t * t
    c = ParamCurve("irr", [t * t * psi * psi, s * s * psi * psi,
                           s * s * t * t * (s * s + 2 * t * t), 2 * s**3 * t**3])
    with pytest.raises(IrrationalCuspError):
        c.cusp_analysis()


def test_multibranch_rejected():
    # nodal cubic: (s^2 t - s^3?) use (s^2 t, t^3 - s^2 t, s^3): node where two
    # parameters map to one point; simplest: the nodal cubic y^2 z = x^2(x+z)
    # with parametrization (x, y, z) = ((t^2 - s^2) s, (t^2 - s^2) t, s^3)
    c = ParamCurve("nodal", [(t * t - s * s) * s, (t * t - s * s) * t, s**3])
    with pytest.raises((MultibranchError, CurveError)):
        c.cusp_analysis()
        c.arithmetic_genus()


def test_base_point_rejected():
    with pytest.raises(CurveError):
        ParamCurve("bp", [s * t, s * s, s * t * 2])


def test_normality_window():
    assert e6_bitangent().normality_window() == 2
    x = t * t * s**3 + t**5
    a12 = ParamCurve("a12", [x, s * t**4, s**5 + 2 * s * s * t**3])
    assert a12.normality_window() == 3  # V_2 is special for plane quintics


def test_birationality():
    assert e6_bitangent().is_birational()
    double = ParamCurve("dbl", [s * s * t * t, t**4, s**4])  # factors through (s^2, t^2)
    assert not double.is_birational()
