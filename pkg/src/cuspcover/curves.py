"""Parametrized rational cuspidal curves.

A ParamCurve is a birational map P^1 -> P^(N-1) given by N binary forms of
a common degree D.  Cusp analysis finds the non-immersive parameter values
(required rational), expands the local ring at each one, and computes its
value semigroup, delta invariant and conductor.  The homogeneous coordinate
ring is realized degreewise by coordinate spans V_m.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass
from fractions import Fraction

from cuspcover import binforms
from cuspcover.binforms import BinaryForm
from cuspcover.jets import Jet
from cuspcover.linalg import rref_rows, span_echelon, span_rank

Q = Fraction


class CurveError(ValueError):
    pass


class IrrationalCuspError(CurveError):
    """Non-immersive parameter values exist outside P^1(Q)."""


class MultibranchError(CurveError):
    """Two parameter values map to one singular image point."""


@dataclass(frozen=True)
class CuspData:
    point: BinaryForm  # monic linear form vanishing at the cusp parameter
    semigroup: tuple[int, ...]  # sorted minimal generators of the value semigroup
    delta: int
    conductor: int

    def gaps(self) -> tuple[int, ...]:
        members = semigroup_members(self.semigroup, self.conductor + 1)
        return tuple(n for n in range(self.conductor) if n not in members)


def semigroup_members(gens, bound):
    """Elements of the numerical semigroup generated by gens, below bound."""
    members = {0}
    frontier = [0]
    while frontier:
        new = []
        for m in frontier:
            for g in gens:
                x = m + g
                if x < bound and x not in members:
                    members.add(x)
                    new.append(x)
        frontier = new
    return members


def minimal_generators(members: set[int]) -> tuple[int, ...]:
    """Minimal generating set of a numerical semigroup given enough members."""
    gens = []
    for x in sorted(m for m in members if m > 0):
        span = semigroup_members(gens, x + 1) if gens else {0}
        if x not in span:
            gens.append(x)
    return tuple(gens)


class ParamCurve:
    """Immutable parametrized curve; analyses are cached on first use."""

    def __init__(self, name: str, coords, notes: str = ""):
        coords = tuple(coords)
        if len(coords) < 3:
            raise CurveError("need at least 3 coordinates")
        degs = {f.degree for f in coords}
        if len(degs) != 1:
            raise CurveError("coordinates must share a common degree")
        if any(f.is_zero() for f in coords):
            raise CurveError("zero coordinate")
        g = coords[0]
        for f in coords[1:]:
            g = binforms.gcd(g, f)
        if g.degree > 0:
            raise CurveError(f"coordinates share the common factor {g} (not base-point free)")
        self.name = name
        self.coords = coords
        self.degree = coords[0].degree
        self.notes = notes
        self._spans: dict[int, list[BinaryForm]] = {}
        self._monomials: dict[int, dict[tuple, BinaryForm]] = {}
        self._cusps = None

    def __repr__(self):
        return f"ParamCurve({self.name!r}, degree {self.degree}, P^{len(self.coords) - 1})"

    # -- coordinate spans ---------------------------------------------------

    def monomial_pullbacks(self, m: int) -> dict[tuple, BinaryForm]:
        """Pullbacks of all degree-m monomials in the coordinates, keyed by exponent."""
        if m in self._monomials:
            return self._monomials[m]
        if m == 0:
            out = {(0,) * len(self.coords): BinaryForm(0, [1])}
        else:
            prev = self.monomial_pullbacks(m - 1)
            out = {}
            for exp, form in prev.items():
                # extend by coordinates with index >= last used, to enumerate each
                # monomial exactly once
                start = 0
                for i in range(len(self.coords) - 1, -1, -1):
                    if exp[i] > 0:
                        start = i
                        break
                for i in range(start, len(self.coords)):
                    e2 = list(exp)
                    e2[i] += 1
                    out[tuple(e2)] = form * self.coords[i]
        self._monomials[m] = out
        return out

    def coordinate_span(self, m: int) -> "CoordSpan":
        """Reduced-echelon basis of V_m, the span of degree-m monomial pullbacks."""
        if m < 0:
            raise ValueError("m must be non-negative")
        if m not in self._spans:
            forms = list(self.monomial_pullbacks(m).values())
            self._spans[m] = span_echelon(forms)
        basis = self._spans[m]
        return CoordSpan(m=m, basis=tuple(basis))

    # -- singular parameter values -------------------------------------------

    def singular_parameters(self) -> BinaryForm:
        """gcd of the Jacobian 2x2 minors; its roots are the non-immersive points."""
        n = len(self.coords)
        ds = [f.derivative_s() for f in self.coords]
        dt = [f.derivative_t() for f in self.coords]
        g = None
        for i in range(n):
            for j in range(i + 1, n):
                w = ds[i] * dt[j] - ds[j] * dt[i]
                if w.is_zero():
                    continue
                g = w.monic() if g is None else binforms.gcd(g, w)
                if g.degree == 0:
                    return g
        if g is None:
            raise CurveError("degenerate parametrization (all Jacobian minors vanish)")
        return g

    def local_chart(self, point: BinaryForm):
        """(s0, t0, b, d): the cusp parameter and a direction so that
        u -> (s0 + b*u, t0 + d*u) is a local parameter at the point."""
        if point.degree != 1:
            raise ValueError("point must be a linear form")
        a, b = point.coeffs  # a*s + b*t
        # the zero of a*s+b*t is (s0:t0) = (-b : a), normalized
        s0, t0 = -b, a
        if s0 != 0:
            t0, s0 = t0 / s0, Q(1)
        else:
            s0, t0 = Q(0), Q(1)
        if s0 != 0:
            dirn = (Q(0), Q(1))
        else:
            dirn = (Q(1), Q(0))
        return s0, t0, dirn[0], dirn[1]

    def local_expansions(self, point: BinaryForm, prec: int):
        """(unit_index, jets): expansions of coord_i / coord_u at the point,
        where coord_u is the first coordinate not vanishing there."""
        s0, t0, b, d = self.local_chart(point)
        polys = []
        for f in self.coords:
            polys.append(_expand_along(f, s0, t0, b, d))
        unit = None
        for i, p in enumerate(polys):
            if p and p[0] != 0:
                unit = i
                break
        if unit is None:
            raise CurveError("base point encountered (all coordinates vanish)")
        inv = Jet.from_poly(polys[unit], prec).inverse()
        jets = [Jet.from_poly(p, prec) * inv for p in polys]
        return unit, jets

    def value_semigroup_at(self, point: BinaryForm, prec: int):
        """Orders of the local ring at the point, as a set below prec-margin,
        computed from the subalgebra of Q[[u]] generated by coordinate ratios."""
        unit, jets = self.local_expansions(point, prec)
        gens = []
        for j in jets:
            jj = j - Jet(0, [j.coeff(0)], prec)
            if not jj.is_zero():
                gens.append(jj)
        # close the linear span of products under multiplication
        margin = prec - 1
        basis = _jet_echelon(gens, margin)
        while True:
            new = []
            for a in basis:
                for g in gens:
                    p = a * g
                    new.append(p)
            bigger = _jet_echelon(basis + new, margin)
            if len(bigger) == len(basis):
                break
            basis = bigger
        orders = {0} | {j.order() for j in basis}
        return orders, margin

    def cusp_analysis(self) -> tuple[CuspData, ...]:
        """CuspData at every non-immersive parameter value.

        Rejects irrational cusp parameters and multibranch singular points.
        """
        if self._cusps is not None:
            return self._cusps
        g = self.singular_parameters()
        cusps = []
        if g.degree > 0:
            roots = binforms.rational_roots(g)
            found = sum(m for _, _, m in roots)
            if found < g.degree:
                raise IrrationalCuspError(
                    f"{self.name}: singular parameters of {g} are not all rational "
                    f"(found {found} of {g.degree})"
                )
            points = []
            for s0, t0, _ in roots:
                points.append(BinaryForm.linear(t0, -s0).monic())
            self._check_fibers(points)
            for pt in points:
                cusps.append(self._analyze_cusp(pt))
        self._cusps = tuple(cusps)
        return self._cusps

    def _analyze_cusp(self, point: BinaryForm) -> CuspData:
        prec = 4 * self.degree + 8
        while True:
            orders, margin = self.value_semigroup_at(point, prec)
            known = sorted(o for o in orders if o < margin)
            gens = minimal_generators(set(known))
            if gens:
                gmax = max(gens)
                members = semigroup_members(gens, margin)
                # saturated once a full run of length gmax is present and the
                # closure of the found generators fills everything we saw
                run_start = None
                for c in range(margin - gmax):
                    if all(k in members for k in range(c, c + gmax)):
                        run_start = c
                        break
                if run_start is not None and set(known) == {m for m in members if m < margin}:
                    gaps = [n for n in range(run_start) if n not in members]
                    conductor = (max(gaps) + 1) if gaps else 0
                    return CuspData(
                        point=point,
                        semigroup=gens,
                        delta=len(gaps),
                        conductor=conductor,
                    )
            prec *= 2
            if prec > 512 * self.degree:
                raise CurveError(f"{self.name}: value semigroup did not saturate at {point}")

    def _check_fibers(self, points):
        # fiber of the image of each singular parameter must be that point alone
        for pt in points:
            s0, t0, _, _ = self.local_chart(pt)
            vals = [f.evaluate(s0, t0) for f in self.coords]
            fib = None
            for i in range(len(self.coords)):
                for j in range(i + 1, len(self.coords)):
                    w = self.coords[i] * vals[j] - self.coords[j] * vals[i]
                    if w.is_zero():
                        continue
                    fib = w.monic() if fib is None else binforms.gcd(fib, w)
            if fib is None:
                raise CurveError("degenerate image")
            for s1, t1, _ in binforms.rational_roots(fib):
                if not (Q(s1) * t0 - Q(t1) * s0 == 0):
                    raise MultibranchError(
                        f"{self.name}: parameters {(s0, t0)} and {(s1, t1)} share an image point"
                    )

    def is_birational(self, seeds=(Q(2), Q(5, 3), Q(-7, 2))) -> bool:
        """gcd-based fiber test at a few fixed rational parameter values."""
        for t0 in seeds:
            vals = [f.evaluate(1, t0) for f in self.coords]
            fib = None
            for i in range(len(self.coords)):
                for j in range(i + 1, len(self.coords)):
                    w = self.coords[i] * vals[j] - self.coords[j] * vals[i]
                    if not w.is_zero():
                        fib = w.monic() if fib is None else binforms.gcd(fib, w)
            if fib is None:
                return False
            if fib.degree != 1:
                return False
        return True

    def arithmetic_genus(self) -> int:
        """Sum of cusp deltas; plane curves are cross-checked against (d-1)(d-2)/2."""
        g = sum(c.delta for c in self.cusp_analysis())
        if len(self.coords) == 3:
            d = self.degree
            expected = (d - 1) * (d - 2) // 2
            if g != expected:
                raise CurveError(
                    f"{self.name}: plane-curve genus check failed: "
                    f"sum of deltas {g} != (d-1)(d-2)/2 = {expected}"
                )
        return g

    def normality_window(self, upto: int = 6) -> int:
        """Least m0 <= upto with dim V_m = m*D + 1 - g for m0 <= m <= upto."""
        g = self.arithmetic_genus()
        m0 = None
        for m in range(1, upto + 1):
            ok = len(self.coordinate_span(m).basis) == m * self.degree + 1 - g
            if ok and m0 is None:
                m0 = m
            if not ok:
                m0 = None
        if m0 is None:
            raise CurveError(f"{self.name}: no arithmetic-normality window up to {upto}")
        return m0


@dataclass(frozen=True)
class CoordSpan:
    m: int
    basis: tuple[BinaryForm, ...]

    @property
    def dim(self) -> int:
        return len(self.basis)


def _expand_along(f: BinaryForm, s0, t0, b, d):
    """Coefficients of u -> f(s0 + b*u, t0 + d*u), ascending in u."""
    e = f.degree
    out = [Q(0)] * (e + 1)
    # (s0 + b u)^(e-i) (t0 + d u)^i accumulated per monomial
    for i, c in enumerate(f.coeffs):
        if c == 0:
            continue
        pa = _binom_expand(s0, b, e - i)
        pb = _binom_expand(t0, d, i)
        prod = [Q(0)] * (e + 1)
        for x, ca in enumerate(pa):
            if ca == 0:
                continue
            for y, cb in enumerate(pb):
                prod[x + y] += ca * cb
        for k in range(e + 1):
            out[k] += c * prod[k]
    return out


def _binom_expand(a0, a1, n):
    """(a0 + a1*u)^n as a coefficient list."""
    out = [Q(0)] * (n + 1)
    binom = 1
    for k in range(n + 1):
        out[k] = Q(binom) * a0 ** (n - k) * a1**k
        binom = binom * (n - k) // (k + 1)
    return out


def _jet_echelon(jets, margin):
    """Echelon basis of the span of jets by leading order, orders < margin."""
    basis: dict[int, Jet] = {}
    queue = [j for j in jets if not j.is_zero()]
    for j in queue:
        cur = j
        while not cur.is_zero():
            v = cur.order()
            if v >= margin:
                break
            if v in basis:
                cur = cur - basis[v].scale(cur.coeff(v) / basis[v].coeff(v))
            else:
                basis[v] = cur
                break
    return [basis[v] for v in sorted(basis)]


def reciprocal_cusp_curve(linear_forms) -> ParamCurve:
    """Curve with coordinates prod_{j != i} phi_j^2: degree 2g-2 with g ordinary cusps.

    The map is the reciprocal transformation applied to the conic
    (phi_1^2 : ... : phi_g^2)."""
    forms = list(linear_forms)
    g = len(forms)
    if g < 3:
        raise CurveError("need at least 3 linear forms")
    for f in forms:
        if f.degree != 1 or f.is_zero():
            raise CurveError("inputs must be nonzero linear forms")
    for i in range(g):
        for j in range(i + 1, g):
            if (forms[i].coeffs[0] * forms[j].coeffs[1]
                    - forms[i].coeffs[1] * forms[j].coeffs[0]) == 0:
                raise CurveError(f"repeated form at positions {i}, {j}")
    coords = []
    for i in range(g):
        acc = BinaryForm(0, [1])
        for j in range(g):
            if j != i:
                acc = acc * forms[j] * forms[j]
        coords.append(acc)
    return ParamCurve(f"reciprocal-{g}cusp", coords)
