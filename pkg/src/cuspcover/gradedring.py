"""Minimal generators and relations of section rings, degree by degree.

Generators in degree n are a deterministic complement of the span of
products of earlier generators inside H^0(nL); relations in degree d are
the kernel of the evaluation map from weighted monomials in the generators,
minus multiples of lower-degree relations.  No Groebner bases are involved:
everything is exact linear algebra against the graded pieces.  Rolling
factors equation families are expanded by the formal recipe (2x2 minors of
a 2x4 matrix plus a chain of single-entry replacements) and verified by
substitution only.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass, field
from fractions import Fraction
from typing import Optional, Sequence

from cuspcover.binforms import BinaryForm
from cuspcover.curves import ParamCurve
from cuspcover.linalg import (span_echelon, span_membership, span_quotient, rref_rows,
                              kernel_basis)
from cuspcover.mpoly import MultiPoly, Variable, mpoly_subst
from cuspcover.sections import (QDivisor, RootBundleData, SectionError, qdiv_section_space,
                                section_space, verify_root_data, bundle_point_degree)

Q = Fraction


class RingSections:
    """Graded pieces H^0(nL) as binary forms whose products realize the ring.

    Backed either by verified root data (the key-divisor ladder) or by a
    Q-divisor with integer positive part, in which case the forms are the
    section numerators over den^n."""

    def __init__(self, curve: ParamCurve, root: Optional[RootBundleData] = None,
                 qdiv: Optional[QDivisor] = None):
        if (root is None) == (qdiv is None):
            raise ValueError("need exactly one of root data or a Q-divisor")
        self.curve = curve
        self.qdiv = qdiv
        if root is not None:
            self.root = root if root.verified else verify_root_data(curve, root)
            self.ell = bundle_point_degree(curve, self.root)
        else:
            self.root = None
            for supp, c in qdiv.parts:
                if c > 0 and c.denominator != 1:
                    raise SectionError(
                        "graded-ring extraction needs integer positive coefficients "
                        "(numerator multiplication must match the grading)"
                    )
            self.ell = sum(supp.degree * int(c) for supp, c in qdiv.parts if c > 0)
        self._cache: dict[int, tuple[BinaryForm, ...]] = {}

    def basis(self, n: int) -> tuple[BinaryForm, ...]:
        if n not in self._cache:
            if self.root is not None:
                self._cache[n] = section_space(self.curve, self.root, n).basis
            else:
                self._cache[n] = qdiv_section_space(self.curve, self.qdiv, n).basis
        return self._cache[n]

    def dim(self, n: int) -> int:
        return len(self.basis(n))

    def genus(self) -> int:
        return self.curve.arithmetic_genus()

    def kappa(self) -> Optional[int]:
        return self.root.kappa if self.root is not None else None


@dataclass(frozen=True)
class Generator:
    name: str
    degree: int
    form: BinaryForm


@dataclass
class GradedRingModel:
    sections: RingSections
    generators: tuple[Generator, ...]
    max_degree: int

    def degrees(self) -> tuple[int, ...]:
        return tuple(sorted(g.degree for g in self.generators))

    def variables(self) -> tuple[Variable, ...]:
        return tuple(Variable(g.name, g.degree) for g in self.generators)

    def bindings(self) -> dict[str, BinaryForm]:
        return {g.name: g.form for g in self.generators}


def find_generators(sections: RingSections, max_degree: int,
                    names: Optional[Sequence[str]] = None) -> GradedRingModel:
    """Minimal generators through max_degree.

    In each degree the new generators are the deterministic complement of the
    span of products of earlier generators inside H^0(nL)."""
    gens: list[Generator] = []
    counter = 0
    for n in range(1, max_degree + 1):
        target = list(sections.basis(n))
        if not target:
            continue
        products = _product_span(gens, n)
        new = span_quotient(products, target)
        for f in new:
            if names is not None and counter < len(names):
                name = names[counter]
            else:
                name = f"x{n}_{sum(1 for g in gens if g.degree == n)}"
            gens.append(Generator(name=name, degree=n, form=f))
            counter += 1
    return GradedRingModel(sections=sections, generators=tuple(gens), max_degree=max_degree)


def _product_span(gens: Sequence[Generator], n: int) -> list[BinaryForm]:
    forms = []
    degs = [g.degree for g in gens]
    for exp in _weighted_exponents(degs, n):
        if sum(exp) <= 1:
            continue  # products of at least two generator factors (with multiplicity)
        f = BinaryForm(0, [1])
        for g, e in zip(gens, exp):
            if e:
                f = f * g.form.pow(e)
        forms.append(f)
    return forms


def _weighted_exponents(weights: Sequence[int], total: int):
    """All exponent tuples with sum(w_i e_i) = total, deterministic order."""
    out = []

    def rec(i, remaining, acc):
        if i == len(weights):
            if remaining == 0:
                out.append(tuple(acc))
            return
        w = weights[i]
        for e in range(remaining // w + 1):
            acc.append(e)
            rec(i + 1, remaining - w * e, acc)
            acc.pop()

    rec(0, total, [])
    return out


@dataclass
class Presentation:
    model: GradedRingModel
    relations: tuple[MultiPoly, ...]
    relation_degrees: tuple[int, ...]
    hilbert_numerator: tuple  # integer coefficients, low degree first
    complete: bool

    def count(self) -> int:
        return len(self.relations)

    def numerator_palindromic(self) -> bool:
        """Gorenstein symmetry of the numerator, up to the overall sign
        (anti-palindromic happens for even socle shifts)."""
        cs = list(self.hilbert_numerator)
        while cs and cs[-1] == 0:
            cs.pop()
        return cs == cs[::-1] or cs == [-c for c in cs[::-1]]


def find_relations(model: GradedRingModel, max_degree: Optional[int] = None) -> Presentation:
    """Minimal relations of the generator presentation.

    Per degree: the kernel of the evaluation map, minus the span of
    ambient-ring multiples of lower-degree relations.  Stops early once no
    new relation has appeared for (largest generator degree) consecutive
    degrees and the Hilbert numerator derived from the h^0 series has no
    tail beyond the monomial bound; reports incomplete otherwise."""
    gens = model.generators
    if not gens:
        return Presentation(model, (), (), (1,), True)
    degs = [g.degree for g in gens]
    gvars = model.variables()
    dmax = max(degs)
    hard_cap = max_degree if max_degree is not None else 3 * dmax + max(degs)
    sections = model.sections

    form_cache: dict[tuple, BinaryForm] = {}

    def mono_form(exp) -> BinaryForm:
        if exp in form_cache:
            return form_cache[exp]
        # split off one factor to reuse cached products
        for i in range(len(exp) - 1, -1, -1):
            if exp[i]:
                prev = list(exp)
                prev[i] -= 1
                prev = tuple(prev)
                base = mono_form(prev) if any(prev) else BinaryForm(0, [1])
                f = base * gens[i].form
                break
        else:
            f = BinaryForm(0, [1])
        form_cache[exp] = f
        return f

    relations: list[MultiPoly] = []
    relation_monos: dict[int, list[tuple]] = {}
    relation_vectors: dict[int, list[list[Fraction]]] = {}  # degree -> echelon rows over monomials
    quiet = 0
    complete = False
    delta = min(degs) * 2
    first_rel_degree = None
    d = delta - 1
    while d < hard_cap:
        d += 1
        monos = _weighted_exponents(degs, d)
        if not monos:
            continue
        target_dim = sections.dim(d)
        # evaluation matrix: rows indexed by form coefficients, columns by monomials
        forms = [mono_form(e) for e in monos]
        deg_form = forms[0].degree if forms else 0
        rows = [[f.coeffs[i] for f in forms] for i in range(deg_form + 1)]
        kern = kernel_basis(rows, len(monos))
        # span of multiples of lower-degree minimal relations
        old_rows = []
        mono_index = {e: i for i, e in enumerate(monos)}
        for r in relations:
            rdeg = _poly_wdeg(r, degs)
            gap = d - rdeg
            if gap < 0:
                continue
            for mult in _weighted_exponents(degs, gap):
                vec = [Q(0)] * len(monos)
                for exp, c in r.terms.items():
                    tot = tuple(a + b for a, b in zip(exp, mult))
                    vec[mono_index[tot]] += c
                old_rows.append(vec)
        if old_rows:
            piv, red = rref_rows(old_rows)
            old_rank = len(piv)
            old_ech = red[:old_rank]
            old_pivs = set(piv)
        else:
            old_rank = 0
            old_ech = []
            old_pivs = set()
        new_count = len(kern) - old_rank
        if new_count:
            piv2, red2 = rref_rows(old_ech + kern)
            new_rows = []
            # rows of the combined echelon whose pivot is not an old pivot
            for i, p in enumerate(piv2):
                if p not in old_pivs:
                    new_rows.append(red2[i])
            assert len(new_rows) == new_count, "complement extraction mismatch"
            for vec in new_rows:
                terms = {monos[i]: c for i, c in enumerate(vec) if c != 0}
                relations.append(MultiPoly(gvars, terms))
            if first_rel_degree is None:
                first_rel_degree = d
            quiet = 0
        else:
            quiet += 1
        numerator, tail_ok = _hilbert_numerator(sections, degs)
        if quiet >= dmax and tail_ok and first_rel_degree is not None:
            complete = True
            break
    numerator, tail_ok = _hilbert_numerator(sections, degs)
    if not tail_ok:
        complete = False
    rel_degrees = tuple(sorted(_poly_wdeg(r, degs) for r in relations))
    return Presentation(model=model, relations=tuple(relations),
                        relation_degrees=rel_degrees,
                        hilbert_numerator=tuple(numerator), complete=complete)


def _poly_wdeg(p: MultiPoly, degs) -> int:
    return max(sum(w * e for w, e in zip(degs, exp)) for exp in p.terms)


def _hilbert_numerator(sections: RingSections, degs):
    """Numerator of the Hilbert series against prod(1 - t^d_i).

    Built from the exact h^0 series; in the nonspecial range the series
    follows Riemann-Roch, so multiplying by the product must terminate.  The
    boolean reports whether a clean zero tail of length max(degs)+4 was seen
    after the last nonzero coefficient."""
    g = sections.genus()
    ell = sections.ell
    special = (2 * g - 2) // ell + 1 if ell else 0
    bound = sum(degs) + max(degs) + special + 6
    h = []
    for n in range(bound + 1):
        if n * ell > 2 * g - 2:
            h.append(n * ell + 1 - g)
        else:
            h.append(sections.dim(n))
    series = h[:]
    for dgen in degs:
        # multiply by (1 - t^dgen): c_n -> c_n - c_{n-dgen}
        series = [series[n] - (series[n - dgen] if n >= dgen else 0) for n in range(bound + 1)]
    last = max((i for i, c in enumerate(series) if c != 0), default=0)
    tail_ok = bound - last >= max(degs) + 4
    numerator = series[: last + 1]
    return numerator, tail_ok


# ---------------------------------------------------------------------------
# presentation verification


@dataclass(frozen=True)
class PresentationReport:
    failures: tuple  # (index, residual BinaryForm or MultiPoly)

    @property
    def all_zero(self) -> bool:
        return not self.failures


def verify_presentation(bindings, equations: Sequence[MultiPoly]) -> PresentationReport:
    """Substitute the bindings into every equation; pass iff all map to zero."""
    failures = []
    for i, eq in enumerate(equations):
        res = mpoly_subst(eq, bindings)
        if isinstance(res, BinaryForm):
            ok = res.is_zero()
        else:
            ok = res.is_zero()
        if not ok:
            failures.append((i, res))
    return PresentationReport(failures=tuple(failures))


# ---------------------------------------------------------------------------
# rolling factors


class RollingError(ValueError):
    pass


@dataclass(frozen=True)
class RollingFactorsData:
    """2x4 rolling-factors format.

    base_terms encodes the base equation as a sum of coefficient * product of
    'slot' entries, a slot being a column index whose top-row entry appears as
    a factor.  Each transition replaces, in every term, one slot entry by the
    entry below it: the unrolled slot of highest column index if one remains,
    else the single rolled slot advances along the chain bottom -> equal top
    entry -> its bottom (the scroll structure).  phi is added to the matrix
    entry at phi_slot before everything is expanded."""

    variables: tuple[Variable, ...]
    top: tuple[MultiPoly, ...]
    bottom: tuple[MultiPoly, ...]
    base_terms: tuple[tuple[MultiPoly, tuple[int, ...]], ...]
    n_transitions: int
    phi_slot: tuple[int, int] = (1, 3)  # (row, col), row 1 = bottom

    def matrix_with_phi(self, phi: Optional[MultiPoly]):
        top = list(self.top)
        bottom = list(self.bottom)
        if phi is not None and not phi.is_zero():
            r, c = self.phi_slot
            if r == 0:
                top[c] = top[c] + phi
            else:
                bottom[c] = bottom[c] + phi
        return tuple(top), tuple(bottom)


@dataclass(frozen=True)
class RollingFactorsResult:
    minors: tuple[MultiPoly, ...]
    rolled: tuple[MultiPoly, ...]
    steps: tuple[str, ...]

    def equations(self):
        return self.minors + self.rolled


def rolling_factors(data: RollingFactorsData, phi: Optional[MultiPoly] = None) -> RollingFactorsResult:
    """The 6 minor equations of the phi-perturbed matrix plus the rolled chain."""
    top, bottom = data.matrix_with_phi(phi)
    minors = []
    for i in range(4):
        for j in range(i + 1, 4):
            minors.append(top[i] * bottom[j] - top[j] * bottom[i])
    # state per term: list of (col, level); level 0 = top, 1 = bottom
    states = [[(c, 0) for c in slots] for _, slots in data.base_terms]
    rolled = []
    steps = []

    def term_value(coeff, state):
        acc = coeff
        for col, level in state:
            acc = acc * (top[col] if level == 0 else bottom[col])
        return acc

    def assemble():
        total = MultiPoly.zero(data.variables)
        for (coeff, _), st in zip(data.base_terms, states):
            total = total + term_value(coeff, st)
        return total

    rolled.append(assemble())
    for step in range(data.n_transitions):
        descr = []
        for ti, st in enumerate(states):
            unrolled = [k for k, (_, lvl) in enumerate(st) if lvl == 0]
            if unrolled:
                k = max(unrolled, key=lambda k: st[k][0])
                col = st[k][0]
                st[k] = (col, 1)
                descr.append(f"t{ti}: col{col + 1} top->bottom")
            else:
                if len(st) != 1:
                    raise RollingError("ambiguous chain step with several rolled slots")
                col = st[0][0]
                value = bottom[col]
                target = None
                for c2 in range(4):
                    if top[c2] == value:
                        target = c2
                        break
                if target is None:
                    raise RollingError(
                        f"rolling step references entry {value} absent from the top row"
                    )
                st[0] = (target, 1)
                descr.append(f"t{ti}: chain col{col + 1} -> col{target + 1} bottom")
        steps.append("; ".join(descr))
        rolled.append(assemble())
    return RollingFactorsResult(minors=tuple(minors), rolled=tuple(rolled), steps=tuple(steps))
