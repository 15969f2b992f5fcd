"""Section spaces: ladder, duality, Q-divisors, perfect-power search."""

from fractions import Fraction as Q

import pytest

from cuspcover.binforms import BinaryForm
from cuspcover.curves import ParamCurve
from cuspcover.jets import Jet
from cuspcover.sections import (QDivisor, RootBundleData, SectionError, hilbert_table,
                                minimal_representation, power_search, qdiv_section_space,
                                section_space, verify_root_data)
from oracles import semigroup_gaps

s, t = BinaryForm.s(), BinaryForm.t()
m10 = lambda a: BinaryForm.monomial(10, a)


@pytest.fixture(scope="module")
def e6b():
    curve = ParamCurve("e6b", [s * t**3, t**4, (s * s - t * t) ** 2])
    root = verify_root_data(curve, RootBundleData(4, 3, 4, s * (2 * s * s - 3 * t * t)))
    return curve, root


@pytest.fixture(scope="module")
def e12():
    curve = ParamCurve("e12", [m10(0), m10(3), m10(6), m10(9), m10(7), m10(10)])
    root = verify_root_data(curve, RootBundleData(10, 1, 10, s))
    return curve, root


def test_verify_root_data_e6(e6b):
    curve, root = e6b
    assert root.verified
    # membership identity: g_A^4 is the pullback of the contact cubic T
    T = root.key_form.pow(4)
    from cuspcover.linalg import span_membership

    assert span_membership(T, curve.coordinate_span(3).basis)


def test_wrong_divisor_rejected(e6b):
    curve, _ = e6b
    with pytest.raises(SectionError):
        verify_root_data(curve, RootBundleData(4, 3, 4, s**3 + s * t * t))


def test_cusp_passing_key_form_rejected(e12):
    curve, _ = e12
    with pytest.raises(SectionError):
        verify_root_data(curve, RootBundleData(10, 1, 10, t))


def test_cusp_passing_key_form_gives_wrong_space(e12):
    """Worked counterexample: forcing g = t through the cusp yields dimension 4,
    not the true h0(5L) = 2."""
    curve, root = e12
    from cuspcover.binforms import divexact
    from cuspcover.linalg import span_echelon, span_intersection

    power = t.pow(5)
    V1 = curve.coordinate_span(1).basis
    mult = [power * BinaryForm.monomial(5, i) for i in range(6)]
    wrong = [divexact(f, power) for f in span_intersection(list(V1), mult)]
    assert len(span_echelon(wrong)) == 4
    assert section_space(curve, root, 5).dim == 2


def test_e6_dims_and_basis(e6b):
    curve, root = e6b
    tab = hilbert_table(curve, root, 5)
    assert tab.dims() == [1, 0, 1, 1, 3, 3]
    assert section_space(curve, root, 1).dim == 0
    assert list(section_space(curve, root, 2).basis) == [s * s - t * t]


def test_e12_sections(e12):
    curve, root = e12
    sp = section_space(curve, root, 5)
    assert list(sp.basis) == [s**5, s * s * t**3]


def test_representation_independence(e6b, e12):
    for curve, root in (e6b, e12):
        g = root.a_units
        for n in (2, 3, 5):
            m, q = minimal_representation(root, n)
            base = section_space(curve, root, n)
            shifted = section_space(curve, root, n,
                                    representation=(m + root.a_units, q + root.rho))
            assert base.basis == shifted.basis


def test_root_uniqueness_equal_tables(e6b):
    curve, root = e6b
    h7 = section_space(curve, root, 7).basis
    alt_form = next(f for f in h7 if f.evaluate(1, 0) != 0)
    alt = verify_root_data(curve, RootBundleData(4, 7, 4, alt_form))
    t1 = hilbert_table(curve, root, 8)
    t2 = hilbert_table(curve, alt, 8)
    assert t1.dims() == t2.dims()
    for n in range(0, 9):
        assert section_space(curve, root, n).basis == section_space(curve, alt, n).basis


def test_multiplicativity(e6b):
    curve, root = e6b
    from cuspcover.linalg import span_membership

    for n1 in range(2, 5):
        for n2 in range(2, 5):
            target = section_space(curve, root, n1 + n2).basis
            for f in section_space(curve, root, n1).basis:
                for g in section_space(curve, root, n2).basis:
                    assert span_membership(f * g, list(target))


def test_nonspecial_range_exact(e6b):
    curve, root = e6b
    g = curve.arithmetic_genus()
    for n in range(5, 12):
        assert section_space(curve, root, n).dim == n + 1 - g


def test_duality_residuals_zero(e6b):
    curve, root = e6b
    tab = hilbert_table(curve, root, 8)
    assert all(r.residual == 0 for r in tab.rows if r.residual is not None)


def test_hyperflex_pg():
    curve = ParamCurve("h", [s * t**3, t**4, s**4])
    root = verify_root_data(curve, RootBundleData(4, 1, 4, s))
    tab = hilbert_table(curve, root, 4, pg_step=1)
    assert tab.pg == 8
    alt = verify_root_data(curve, RootBundleData(4, 3, 4, s**3 + t**3))
    assert hilbert_table(curve, alt, 4, pg_step=1).pg == 8


# -- Q-divisor sections ------------------------------------------------------


@pytest.fixture(scope="module")
def cubic():
    return ParamCurve("cc", [s * t * t, t**3, s**3])


def test_qdiv_ring_dims(cubic):
    D = QDivisor(parts=((s, Q(1)), (s - t, Q(-1, 3)), (s + t, Q(-1, 3))))
    dims = [qdiv_section_space(cubic, D, n).dim for n in range(10)]
    assert dims == [1, 0, 1, 1, 1, 1, 2, 1, 2, 3]
    assert qdiv_section_space(cubic, D, 0).basis == (BinaryForm(0, [1]),)


def test_qdiv_integer_divisor_riemann_roch(cubic):
    """D = P: dims follow Riemann-Roch on the cuspidal cubic; oracle = brute-force
    jet conditions at the (2,3)-cusp."""
    D = QDivisor(parts=((s, Q(1)),))
    dims = [qdiv_section_space(cubic, D, n).dim for n in range(1, 7)]
    assert dims == [1, 2, 3, 4, 5, 6]
    # oracle for n = 2: numerators F = a s^2 + b st + c t^2 with F/s^2 in the
    # local ring at the cusp (1:0); local coordinate u = t: F(1,u) must have no
    # linear term: b = 0, leaving dimension 2
    assert dims[1] == 2


def test_qdiv_fractional_cusp_support_rejected(cubic):
    D = QDivisor(parts=((t, Q(-1, 2)),))
    with pytest.raises(SectionError):
        qdiv_section_space(cubic, D, 1)


def test_qdiv_supports_must_be_coprime():
    with pytest.raises(SectionError):
        QDivisor(parts=((s * t, Q(1)), (t, Q(1))))


# -- perfect-power search ----------------------------------------------------


def test_power_search_a6_space():
    g = 4 * s**3 + 3 * t**3
    space = [g * g, t**6, s * s * t**4, 2 * s**4 * t * t + s * t**5]
    res = power_search(space, 2)
    roots = {str(m.root) for m in res.members}
    assert "s^3 + 3/4*t^3" in roots  # the monic form of 4s^3 + 3t^3
    assert not res.is_family
    for m in res.members:
        assert m.root.pow(2).scale(m.scalar) == m.member


def test_power_search_family():
    res = power_search([s**4, s * s * t * t, t**4], 2)
    assert res.is_family
    roots = {str(m.root) for m in res.members}
    assert {"s^2", "t^2", "s^2 + t^2"} <= roots


def test_power_search_empty():
    assert power_search([s**4 + t**4], 2).members == ()
