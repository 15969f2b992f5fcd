"""Independent section-space oracle via fractional-power jet conditions.

Used by derive_fixtures.py to bootstrap key divisors: for a curve embedded
by H with rho*L ~ H, a form F of degree n*ell is a section of nL iff at
every cusp the expansion of F times (unit coordinate)^(-n/rho) lies in the
cusp local ring (the local generator of L is the formal rho-th root of the
unit, unique because Pic of a rational cuspidal curve is unipotent).  This
never touches the key-divisor ladder, so it is a legitimate cross-check.
"""

from __future__ import annotations

from fractions import Fraction

from cuspcover.binforms import BinaryForm
from cuspcover.curves import ParamCurve
from cuspcover.jets import Jet
from cuspcover.linalg import span_echelon
from cuspcover.sections import _form_jet, _local_ring_jets, _solve_jet_membership

Q = Fraction


def oracle_sections(curve: ParamCurve, n: int, rho: int) -> list[BinaryForm]:
    """Basis of H^0(C, nL) with rho*L ~ H, from local jet conditions only."""
    if curve.degree % rho:
        raise ValueError("rho must divide the embedding degree")
    ell = curve.degree // rho
    if (n * ell) % 1:
        raise ValueError("bad degree")
    deg = n * ell
    cands = [BinaryForm.monomial(deg, i) for i in range(deg + 1)]
    for cusp in curve.cusp_analysis():
        if not cands:
            break
        prec = cusp.conductor + 2 * curve.degree + deg + 6
        ring = _local_ring_jets(curve, cusp.point, prec)
        # unit coordinate at this cusp: first coordinate of order 0
        unit_jet = None
        for f in curve.coords:
            j = _form_jet(f, cusp.point, prec)
            if not j.is_zero() and j.order() == 0:
                unit_jet = j
                break
        assert unit_jet is not None
        w = unit_jet.scale(1 / unit_jet.coeff(0))
        factor = w.frac_power(-n, rho)
        jets = [_form_jet(f, cusp.point, prec) * factor for f in cands]
        cands = _solve_jet_membership(cands, jets, ring, cusp.conductor)
    return span_echelon(cands) if cands else []


def pick_key_form(curve: ParamCurve, rho: int, a: int):
    """Deterministic cusp-avoiding key form in H^0(aL), or None."""
    basis = oracle_sections(curve, a, rho)
    cusp_pts = []
    for cusp in curve.cusp_analysis():
        ca, cb = cusp.point.coeffs
        cusp_pts.append((-cb, ca))
    def avoids(f):
        return all(f.evaluate(s0, t0) != 0 for s0, t0 in cusp_pts)
    for f in basis:
        if avoids(f):
            return f, len(basis)
    # small combinations of the echelon basis
    for i in range(len(basis)):
        for j in range(i + 1, len(basis)):
            for c in (1, -1, 2, -2, 3):
                f = basis[i] + basis[j].scale(c)
                if avoids(f):
                    return f, len(basis)
    combo = None
    for f in basis:
        combo = f if combo is None else combo + f
    if combo is not None and avoids(combo):
        return combo, len(basis)
    return None, len(basis)
