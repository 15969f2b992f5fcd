"""Section spaces H^0(C, nL) of root bundles via a key-divisor ladder.

Root data (rho, a, g_A) realizes rho*L ~ H and A ~ a*L by an effective
divisor with equation g_A avoiding the cusps.  Then nL = mH - qA for any
n = rho*m - a*q with m, q >= 0, and

    H^0(nL) = { S in V_m : g_A^q | S } / g_A^q,

computed by exact linear algebra on coordinate spans.  Q-divisor section
spaces on cuspidal curves are computed separately from jet conditions in
the cusp local rings.
"""

from __future__ import annotations

from dataclasses import dataclass, field, replace
from fractions import Fraction
from math import gcd as _gcd
from typing import Optional, Sequence

from cuspcover.binforms import BinaryForm, divexact, gcd as bgcd, perfect_power_root
from cuspcover.curves import ParamCurve, _jet_echelon
from cuspcover.jets import Jet
from cuspcover.linalg import span_echelon, span_intersection, span_membership

Q = Fraction


class SectionError(ValueError):
    pass


@dataclass(frozen=True)
class RootBundleData:
    """Realization of L with rho*L ~ H by a key divisor A ~ a*L, equation keyForm."""

    rho: int
    a_units: int
    kappa: int  # kappa * L = K_C, validated through duality residuals
    key_form: BinaryForm
    verified: bool = False

    @property
    def point_degree(self):
        return self.key_form.degree  # = a * ell


def bundle_point_degree(curve: ParamCurve, root: RootBundleData) -> int:
    """ell = deg L in points = D / rho."""
    if curve.degree % root.rho:
        raise SectionError(f"rho {root.rho} does not divide the hyperplane degree {curve.degree}")
    return curve.degree // root.rho


def verify_root_data(curve: ParamCurve, root: RootBundleData) -> RootBundleData:
    """Check the realization identities and return the verified record.

    g_A^rho must lie in V_a up to scalar (this encodes rho*A ~ a*H), the
    degrees must be consistent, and g_A must avoid every cusp parameter:
    division semantics break at cusps, so cusp-vanishing key forms are
    rejected outright.
    """
    ell = bundle_point_degree(curve, root)
    if root.key_form.degree * root.rho != root.a_units * curve.degree:
        raise SectionError(
            f"degree mismatch: deg(g_A)*rho = {root.key_form.degree * root.rho}, "
            f"a*D = {root.a_units * curve.degree}"
        )
    if root.key_form.degree != root.a_units * ell:
        raise SectionError("key form degree must be a*ell")
    for cusp in curve.cusp_analysis():
        a, b = cusp.point.coeffs
        s0, t0 = -b, a
        if root.key_form.evaluate(s0, t0) == 0:
            raise SectionError(
                f"key form vanishes at the cusp parameter {cusp.point}; "
                "division against coordinate spans is not valid there"
            )
    power = root.key_form.pow(root.rho)
    if not span_membership(power, curve.coordinate_span(root.a_units).basis):
        raise SectionError("g_A^rho is not in the coordinate span V_a: wrong divisor")
    return replace(root, verified=True)


@dataclass(frozen=True)
class SectionSpace:
    n: int
    basis: tuple[BinaryForm, ...]
    representation: Optional[tuple[int, int]] = None  # (m, q) with n = rho*m - a*q

    @property
    def dim(self):
        return len(self.basis)


def minimal_representation(root: RootBundleData, n: int) -> tuple[int, int]:
    """Smallest m >= 0 with q = (rho*m - n)/a a non-negative integer."""
    g = _gcd(root.rho, root.a_units)
    if n % g:
        raise SectionError(f"n = {n} not representable: gcd(rho, a) = {g} does not divide it")
    m = max(0, -(-n // root.rho))  # ceil(n / rho)
    while (root.rho * m - n) % root.a_units:
        m += 1
    return m, (root.rho * m - n) // root.a_units


def section_space(curve: ParamCurve, root: RootBundleData, n: int,
                  representation: Optional[tuple[int, int]] = None) -> SectionSpace:
    """Basis of H^0(C, nL) as binary forms of degree n*ell."""
    if not root.verified:
        root = verify_root_data(curve, root)
    if n < 0:
        return SectionSpace(n=n, basis=())
    if n == 0:
        return SectionSpace(n=0, basis=(BinaryForm(0, [1]),), representation=(0, 0))
    if representation is None:
        m, q = minimal_representation(root, n)
    else:
        m, q = representation
        if root.rho * m - root.a_units * q != n or m < 0 or q < 0:
            raise SectionError("invalid (m, q) representation")
    Vm = curve.coordinate_span(m).basis
    if q == 0:
        basis = list(Vm)
    else:
        power = root.key_form.pow(q)
        e = m * curve.degree
        cofactor_deg = e - power.degree
        multiples = [power * BinaryForm.monomial(cofactor_deg, i) for i in range(cofactor_deg + 1)]
        inter = span_intersection(list(Vm), multiples)
        basis = [divexact(f, power) for f in inter]
    basis = span_echelon(basis) if basis else []
    ell = bundle_point_degree(curve, root)
    g = curve.arithmetic_genus()
    if n * ell > 2 * g - 2 and len(basis) != n * ell + 1 - g:
        raise SectionError(
            f"nonspecial dimension violated at n = {n}: got {len(basis)}, "
            f"expected {n * ell + 1 - g}"
        )
    if len(basis) > n * ell + 1:
        raise SectionError(f"dimension bound violated at n = {n}")
    return SectionSpace(n=n, basis=tuple(basis), representation=(m, q))


@dataclass(frozen=True)
class HilbertRow:
    n: int
    dim: int
    dual_n: int
    dual_dim: Optional[int]
    residual: Optional[int]  # h0(n) - h0(kappa - n) - (n*ell - g + 1); must be 0


@dataclass(frozen=True)
class HilbertTable:
    rows: tuple[HilbertRow, ...]
    pg: Optional[int] = None

    def dims(self):
        return [r.dim for r in self.rows]


def hilbert_table(curve: ParamCurve, root: RootBundleData, n_max: int,
                  pg_step: Optional[int] = None) -> HilbertTable:
    """Dimensions h^0(nL) for n = 0..n_max with exact duality residuals.

    Every representable dual index kappa - n is also computed and the
    Riemann-Roch residual h0(n) - h0(kappa-n) - (n*ell - g + 1) checked; a
    nonzero residual is a hard failure.  With pg_step = n0 the aggregate
    sum_{j=0..kappa/n0} h0(j*n0*L) is reported (the geometric genus of the
    singularity whose exceptional curve has conormal n0*L).
    """
    if not root.verified:
        root = verify_root_data(curve, root)
    ell = bundle_point_degree(curve, root)
    g = curve.arithmetic_genus()
    gdiv = _gcd(root.rho, root.a_units)
    cache: dict[int, int] = {}

    def h0(n: int) -> Optional[int]:
        if n < 0:
            return 0
        if n % gdiv:
            return None
        if n not in cache:
            cache[n] = section_space(curve, root, n).dim
        return cache[n]

    rows = []
    for n in range(0, n_max + 1):
        dim = h0(n)
        if dim is None:
            continue
        dn = root.kappa - n
        ddim = h0(dn) if dn % gdiv == 0 else None
        residual = None
        if ddim is not None:
            residual = dim - ddim - (n * ell - g + 1)
            if residual != 0:
                raise SectionError(
                    f"duality residual nonzero at n = {n}: "
                    f"h0({n}) = {dim}, h0({dn}) = {ddim}, ell = {ell}, g = {g}"
                )
        rows.append(HilbertRow(n=n, dim=dim, dual_n=dn, dual_dim=ddim, residual=residual))
    pg = None
    if pg_step:
        if root.kappa % pg_step:
            raise SectionError("pg step must divide kappa")
        pg = sum(h0(j * pg_step) for j in range(root.kappa // pg_step + 1))
    return HilbertTable(rows=tuple(rows), pg=pg)


def geometric_genus(curve: ParamCurve, root: RootBundleData, conormal_step: int = 1) -> int:
    """p_g = sum_{n=0}^{d} h^0(C, n*L0) for the conormal L0 = conormal_step * L,
    where d * L0 = K_C."""
    return hilbert_table(curve, root, 0, pg_step=conormal_step).pg


# ---------------------------------------------------------------------------
# Q-divisor section spaces on cuspidal curves


@dataclass(frozen=True)
class QDivisor:
    """Sum of coefficient * div(support); supports pairwise coprime forms."""

    parts: tuple[tuple[BinaryForm, Fraction], ...]

    def __post_init__(self):
        forms = [p[0] for p in self.parts]
        for i in range(len(forms)):
            for j in range(i + 1, len(forms)):
                if bgcd(forms[i], forms[j]).degree > 0:
                    raise SectionError("divisor supports are not pairwise coprime")

    def floor(self, n: int):
        """[(support, floor(n*coeff))] with zero parts dropped."""
        out = []
        for supp, c in self.parts:
            k = (n * c).numerator // (n * c).denominator
            if k != 0:
                out.append((supp, k))
        return out


def qdiv_section_space(curve: ParamCurve, qdiv: QDivisor, n: int) -> SectionSpace:
    """H^0(C, floor(n*D)) for a Q-divisor D on a cuspidal curve.

    Sections are rational functions F / den with den the positive part of
    floor(n*D); the returned basis holds the numerators F.  Conditions: the
    negative part divides F, and at every cusp the expansion of F/den lies
    in the cusp local ring (jet conditions).  Supports through a cusp are
    only allowed with non-negative integer coefficient.
    """
    cusps = curve.cusp_analysis()
    for supp, c in qdiv.parts:
        for cusp in cusps:
            a, b = cusp.point.coeffs
            if supp.evaluate(-b, a) == 0 and (c < 0 or c.denominator != 1):
                raise SectionError(
                    f"support {supp} passes through the cusp {cusp.point} "
                    "with fractional or negative coefficient"
                )
    floor_parts = qdiv.floor(n)
    den = BinaryForm(0, [1])
    req = BinaryForm(0, [1])
    for supp, k in floor_parts:
        if k > 0:
            den = den * supp.pow(k)
        else:
            req = req * supp.pow(-k)
    deg_f = den.degree
    if deg_f - req.degree < 0:
        return SectionSpace(n=n, basis=())
    # candidate numerators: req * (anything of complementary degree)
    cands = [req * BinaryForm.monomial(deg_f - req.degree, i)
             for i in range(deg_f - req.degree + 1)]
    # impose cusp local-ring conditions on F / den
    for cusp in cusps:
        if not cands:
            break
        prec = cusp.conductor + 2 * curve.degree + deg_f + 4
        ring = _local_ring_jets(curve, cusp.point, prec)
        margin = cusp.conductor
        den_jet = _form_jet(den, cusp.point, prec)
        inv = den_jet.inverse()
        kept_rows = []
        for f in cands:
            j = _form_jet(f, cusp.point, prec) * inv
            kept_rows.append(j)
        cands = _solve_jet_membership(cands, kept_rows, ring, margin)
    return SectionSpace(n=n, basis=tuple(span_echelon(cands)) if cands else ())


def _form_jet(f: BinaryForm, point: BinaryForm, prec: int) -> Jet:
    from cuspcover.curves import _expand_along

    a, b = point.coeffs
    s0, t0 = -b, a
    if s0 != 0:
        t0, s0 = t0 / s0, Q(1)
        dirn = (Q(0), Q(1))
    else:
        s0, t0 = Q(0), Q(1)
        dirn = (Q(1), Q(0))
    return Jet.from_poly(_expand_along(f, s0, t0, dirn[0], dirn[1]), prec)


def _local_ring_jets(curve: ParamCurve, point: BinaryForm, prec: int):
    """Echelon jet basis of the local ring O_p modulo u^margin."""
    unit, jets = curve.local_expansions(point, prec)
    gens = [Jet(0, [1], prec)]
    nonconst = []
    for j in jets:
        jj = j - Jet(0, [j.coeff(0)], prec)
        if not jj.is_zero():
            nonconst.append(jj)
    margin = prec - 1
    basis = _jet_echelon(nonconst, margin)
    while True:
        new = [a * g for a in basis for g in nonconst]
        bigger = _jet_echelon(basis + new, margin)
        if len(bigger) == len(basis):
            break
        basis = bigger
    return gens + basis


def _solve_jet_membership(cands, jets, ring_basis, margin):
    """Subspace of span(cands) whose jets lie in the local-ring span mod u^margin."""
    from cuspcover.linalg import kernel_basis

    by_order = {}
    for r in ring_basis:
        if not r.is_zero() and r.order() < margin:
            by_order[r.order()] = r
    reduced = []
    for j in jets:
        cur = j
        # fully reduce against the ring echelon below the margin; the residual
        # is then supported on negative orders and semigroup gaps only
        v = min(cur.low, 0)
        while v < margin:
            if cur.is_zero():
                break
            if v >= cur.low and v in by_order:
                c = cur.coeff(v)
                if c != 0:
                    r = by_order[v]
                    cur = cur - r.scale(c / r.coeff(v))
            v += 1
        reduced.append(cur)
    # residual coefficients below margin (and any negative orders) must vanish
    lows = [min((r.low for r in reduced if not r.is_zero()), default=0), 0]
    lo = min(lows)
    rows = []
    for c in range(lo, margin):
        rows.append([r.coeff(c) if (not r.is_zero() and r.low <= c < r.prec) else Q(0)
                     for r in reduced])
    lam = kernel_basis(rows, len(cands))
    out = []
    for v in lam:
        acc = None
        for x, f in zip(v, cands):
            if x:
                term = f.scale(x)
                acc = term if acc is None else acc + term
        if acc is not None and not acc.is_zero():
            out.append(acc)
    return out


# ---------------------------------------------------------------------------
# perfect-power search inside a small span


@dataclass(frozen=True)
class PowerMember:
    member: BinaryForm
    root: BinaryForm
    scalar: Fraction


@dataclass(frozen=True)
class PowerSearchResult:
    members: tuple[PowerMember, ...]
    family_condition: tuple = ()  # nonzero when the k-th powers form a positive-dimensional family

    @property
    def is_family(self):
        return bool(self.family_condition)


def power_search(space: Sequence[BinaryForm], k: int) -> PowerSearchResult:
    """All members of the span that are k-th powers of forms over Q, up to scalar.

    The candidates g with g^k in the span satisfy (e+1-r) forms of degree k
    in the coefficients of g; the system is solved exactly (Groebner plus
    rational root extraction).  A positive-dimensional solution set is
    reported through its condition ideal instead of an enumeration.
    """
    from cuspcover.groebner import IdealBasis, MonomialOrder, groebner_basis, normal_form
    from cuspcover.mpoly import MultiPoly, Variable

    basis = span_echelon(list(space))
    if not basis:
        return PowerSearchResult(members=())
    e = basis[0].degree
    if e % k:
        return PowerSearchResult(members=())
    if len(basis) == 1:
        pp = perfect_power_root(basis[0], k)
        if pp is None:
            return PowerSearchResult(members=())
        root, c = pp
        return PowerSearchResult(members=(PowerMember(basis[0], root, c),))
    h = e // k
    gvars = tuple(Variable(f"g{i}") for i in range(h + 1))
    coeff_polys = _symbolic_power_coeffs(gvars, h, k)
    # membership conditions: reduce the coefficient vector of g^k against the span
    piv = [next(i for i, c in enumerate(b.coeffs) if c != 0) for b in basis]
    conds = []
    vec = list(coeff_polys)
    for b, p in zip(basis, piv):
        lead = vec[p]
        for i in range(e + 1):
            if b.coeffs[i] != 0:
                vec[i] = vec[i] - lead * b.coeffs[i]
    for i in range(e + 1):
        if i not in piv and not vec[i].is_zero():
            conds.append(vec[i])
    if not conds:
        # every candidate works: full family
        one = MultiPoly.const(gvars, 0)
        return PowerSearchResult(members=(), family_condition=(one,))
    sols, family = _solve_projective(gvars, conds)
    members = []
    seen = set()
    for sol in sols:
        coeffs = [sol[i] for i in range(h + 1)]
        g = BinaryForm(h, coeffs)
        if g.is_zero():
            continue
        g = g.monic()
        if g in seen:
            continue
        seen.add(g)
        powed = g.pow(k)
        member = _project_to_span(powed, basis)
        if member is None:
            continue
        scalar = member[1]
        members.append(PowerMember(member=powed.scale(scalar), root=g, scalar=scalar))
    members.sort(key=lambda m: m.root.coeffs)
    return PowerSearchResult(members=tuple(members),
                             family_condition=tuple(conds) if family else ())


def _project_to_span(f: BinaryForm, basis) -> Optional[tuple]:
    if span_membership(f, list(basis)):
        return f, Q(1)
    return None


def _symbolic_power_coeffs(gvars, h, k):
    """Coefficient list of (sum g_i s^(h-i) t^i)^k as MultiPolys in the g_i."""
    from cuspcover.mpoly import MultiPoly

    # represent a symbolic binary form as list of MultiPoly coefficients
    cur = [MultiPoly.var(gvars, f"g{i}") for i in range(h + 1)]
    out = [MultiPoly.const(gvars, 1)]
    for _ in range(k):
        nxt = [MultiPoly.zero(gvars) for _ in range(len(out) + h)]
        for i, a in enumerate(out):
            if a.is_zero():
                continue
            for j, b in enumerate(cur):
                nxt[i + j] = nxt[i + j] + a * b
        out = nxt
    return out


def _solve_projective(gvars, conds):
    """Rational projective solutions of a small homogeneous system.

    Dehomogenizes against each leading variable in turn; within each chart a
    triangular Groebner extraction finds the rational points.  Returns
    (solutions, positive_dimensional_flag)."""
    from cuspcover.groebner import Budget, IdealBasis, MonomialOrder, groebner_basis

    n = len(gvars)
    sols = []
    family = False
    for lead in range(n):
        # chart: g_lead = 1, g_i = 0 for i < lead
        chart_vars = gvars[lead + 1:]
        subs = {}
        for i in range(lead):
            subs[gvars[i].name] = Q(0)
        subs[gvars[lead].name] = Q(1)
        reduced = [_specialize(c, subs, chart_vars) for c in conds]
        reduced = [r for r in reduced if not r.is_zero()]
        if any(r.terms == {(0,) * len(chart_vars): next(iter(r.terms.values()))} and
               r.weighted_degree() == 0 for r in reduced):
            continue  # chart inconsistent
        pts, fam = _solve_affine(chart_vars, reduced)
        family = family or fam
        for p in pts:
            sol = {}
            for i in range(lead):
                sol[i] = Q(0)
            sol[lead] = Q(1)
            for j, v in enumerate(chart_vars):
                sol[lead + 1 + j] = p[j]
            sols.append(sol)
    return sols, family


def _specialize(p, subs, keep_vars):
    from cuspcover.mpoly import MultiPoly

    out = {}
    keep_names = [v.name for v in keep_vars]
    for exp, c in p.terms.items():
        coeff = c
        newexp = [0] * len(keep_vars)
        ok = True
        for i, v in enumerate(p.vars):
            e = exp[i]
            if e == 0:
                continue
            if v.name in subs:
                coeff = coeff * subs[v.name] ** e
                if coeff == 0:
                    ok = False
                    break
            else:
                newexp[keep_names.index(v.name)] = e
        if ok and coeff != 0:
            key = tuple(newexp)
            out[key] = out.get(key, Q(0)) + coeff
    return MultiPoly(keep_vars, out)


def _solve_affine(variables, conds):
    """Rational solutions of a zero-dimensional-ish affine system by recursive
    elimination; flags positive-dimensional components instead of enumerating."""
    from cuspcover.binforms import rational_roots
    from cuspcover.groebner import IdealBasis, MonomialOrder, groebner_basis, eliminate

    if not variables:
        if any(not c.is_zero() for c in conds):
            return [], False
        return [()], False
    if not conds or all(c.is_zero() for c in conds):
        return [], True  # every point of the chart works: a family
    if len(variables) == 1:
        pts = []
        uni = None
        for c in conds:
            if c.is_zero():
                continue
            coeffs = [Q(0)] * (c.weighted_degree() + 1)
            for exp, cc in c.terms.items():
                coeffs[exp[0]] = cc
            # homogenize p(x) = sum coeffs[i] x^i with x = t/s
            bf = BinaryForm(len(coeffs) - 1, coeffs)
            uni = bf if uni is None else bgcd(uni, bf)
        if uni is None:
            return [(Q(0),), (Q(1),), (Q(-1),)], True  # free line: sample it
        if uni.degree == 0:
            return [], False
        for s0, t0, _ in rational_roots(uni):
            if s0 != 0:  # root value = t0/s0 of the dehomogenized variable
                pts.append((t0 / s0,))
        return pts, False
    # eliminate all but the last variable
    order = MonomialOrder(tuple(variables))
    ideal = IdealBasis(list(conds), order)
    last = variables[-1]
    out = eliminate(ideal, [v.name for v in variables[:-1]])
    pts = []
    family = False
    if not out.generators:
        # the last variable is unconstrained: sample exemplars, flag the family
        family = True
        candidates = [(Q(0),), (Q(1),), (Q(-1),)]
    else:
        candidates, _ = _solve_affine((last,), out.generators)
    for (val,) in candidates:
        subs = {last.name: val}
        reduced = [_specialize(c, subs, variables[:-1]) for c in conds]
        sub_pts, fam = _solve_affine(variables[:-1], [r for r in reduced if not r.is_zero()]
                                     or reduced)
        family = family or fam
        for p in sub_pts:
            pts.append(tuple(p) + (val,))
    return pts, family
