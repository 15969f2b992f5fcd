"""A compact exact Buchberger engine over Q.

Monomial orders are weighted-degree-then-reverse-lexicographic, with an
optional elimination block ordered strictly above the remaining variables.
Reduction strips integer content to control coefficient growth; reduced
Groebner bases are normalized monic and are canonical for the order.  Hard
budgets (S-pair count, weighted degree) abort explicitly rather than
truncating silently.
"""

from __future__ import annotations

import os
from dataclasses import dataclass, field
from fractions import Fraction
from typing import Optional, Sequence

from cuspcover.mpoly import MultiPoly, Variable

Q = Fraction


class BudgetExceededError(RuntimeError):
    """Raised when a Groebner run exceeds its pair or degree budget."""


@dataclass(frozen=True)
class Budget:
    pairs: int = 20000
    degree: int = 120

    @staticmethod
    def default() -> "Budget":
        env = os.environ.get("CUSPCOVER_BUDGET")
        if env:
            return Budget(pairs=int(env))
        return Budget()


@dataclass(frozen=True)
class MonomialOrder:
    """Weighted degrevlex, optionally with an elimination block on top."""

    variables: tuple[Variable, ...]
    block: tuple[str, ...] = ()

    def __post_init__(self):
        names = [v.name for v in self.variables]
        for b in self.block:
            if b not in names:
                raise ValueError(f"block variable {b!r} not in ring")

    def _indices(self):
        names = [v.name for v in self.variables]
        blk = [names.index(b) for b in self.block]
        rest = [i for i in range(len(names)) if i not in blk]
        return blk, rest

    def key(self, exp: tuple):
        """Sort key; larger key = larger monomial."""
        blk, rest = self._indices()
        wb = sum(self.variables[i].weight * exp[i] for i in blk)
        wr = sum(self.variables[i].weight * exp[i] for i in rest)
        kb = tuple(-exp[i] for i in reversed(blk))
        kr = tuple(-exp[i] for i in reversed(rest))
        return (wb, kb, wr, kr)

    def leading(self, p: MultiPoly):
        if p.is_zero():
            raise ValueError("leading term of zero")
        lm = max(p.terms, key=self.key)
        return lm, p.terms[lm]


@dataclass
class IdealBasis:
    generators: list[MultiPoly]
    order: MonomialOrder
    groebner: bool = False

    @property
    def variables(self):
        return self.order.variables


def _mono_div(a, b):
    """a / b if b divides a, else None."""
    out = []
    for x, y in zip(a, b):
        if x < y:
            return None
        out.append(x - y)
    return tuple(out)


def _mono_lcm(a, b):
    return tuple(max(x, y) for x, y in zip(a, b))


def _mono_mul(a, b):
    return tuple(x + y for x, y in zip(a, b))


def _content_strip(p: MultiPoly) -> MultiPoly:
    """Scale so coefficients are coprime integers (sign fixed by the order later)."""
    if p.is_zero():
        return p
    den = 1
    from math import gcd as _g

    for c in p.terms.values():
        den = den * c.denominator // _g(den, c.denominator)
    num = 0
    for c in p.terms.values():
        num = _g(num, abs(c.numerator * (den // c.denominator)))
    scale = Q(den, num) if num else Q(1)
    return p * scale


def normal_form(p: MultiPoly, basis: Sequence[MultiPoly], order: MonomialOrder,
                budget: Optional[Budget] = None) -> MultiPoly:
    """Remainder of full multivariate division of p by the basis."""
    budget = budget or Budget.default()
    if p.is_zero():
        return p
    leads = [(order.leading(g)[0], order.leading(g)[1], g) for g in basis if not g.is_zero()]
    rem_terms = {}
    work = p
    steps = 0
    while not work.is_zero():
        lm, lc = order.leading(work)
        steps += 1
        if steps > 200 * budget.pairs:
            raise BudgetExceededError("reduction step budget exceeded")
        hit = None
        for glm, glc, g in leads:
            q = _mono_div(lm, glm)
            if q is not None:
                hit = (q, lc / glc, g)
                break
        if hit is None:
            rem_terms[lm] = rem_terms.get(lm, Q(0)) + lc
            work = MultiPoly(work.vars, {e: c for e, c in work.terms.items() if e != lm})
        else:
            q, coef, g = hit
            sub = {}
            for e, c in g.terms.items():
                sub[_mono_mul(e, q)] = c * coef
            work = work - MultiPoly(work.vars, sub)
    return MultiPoly(p.vars, rem_terms)


def s_polynomial(f, g, order: MonomialOrder):
    lf, cf = order.leading(f)
    lg, cg = order.leading(g)
    l = _mono_lcm(lf, lg)
    mf = _mono_div(l, lf)
    mg = _mono_div(l, lg)
    a = MultiPoly(f.vars, {_mono_mul(e, mf): c / cf for e, c in f.terms.items()})
    b = MultiPoly(g.vars, {_mono_mul(e, mg): c / cg for e, c in g.terms.items()})
    return a - b


def groebner_basis(ideal: IdealBasis, budget: Optional[Budget] = None) -> IdealBasis:
    """Reduced Groebner basis, unique for the order."""
    budget = budget or Budget.default()
    order = ideal.order
    G = [_content_strip(g) for g in ideal.generators if not g.is_zero()]
    if not G:
        return IdealBasis([], order, groebner=True)
    wt = [v.weight for v in order.variables]

    def wdeg(p):
        return max(sum(w * e for w, e in zip(wt, exp)) for exp in p.terms)

    for g in G:
        if wdeg(g) > budget.degree:
            raise BudgetExceededError(f"generator degree {wdeg(g)} over budget")

    leads = [order.leading(g)[0] for g in G]
    pairs = set()

    def add_pairs(new_idx):
        lnew = leads[new_idx]
        for i in range(new_idx):
            pairs.add((min(i, new_idx), max(i, new_idx)))
        # Gebauer-Moeller style pruning of older pairs
        doomed = []
        for (i, j) in pairs:
            if i == new_idx or j == new_idx:
                continue
            l = _mono_lcm(leads[i], leads[j])
            if (_mono_div(l, lnew) is not None
                    and _mono_lcm(leads[i], lnew) != l
                    and _mono_lcm(leads[j], lnew) != l):
                doomed.append((i, j))
        for p in doomed:
            pairs.discard(p)

    for i in range(len(G)):
        add_pairs(i)

    processed = 0
    while pairs:
        processed += 1
        if processed > budget.pairs:
            raise BudgetExceededError(f"pair budget {budget.pairs} exceeded")
        # normal selection: smallest lcm in the order
        i, j = min(pairs, key=lambda ij: (order.key(_mono_lcm(leads[ij[0]], leads[ij[1]])), ij))
        pairs.discard((i, j))
        li, lj = leads[i], leads[j]
        l = _mono_lcm(li, lj)
        if _mono_mul(li, lj) == l:
            continue  # coprime leading monomials
        # chain criterion
        skip = False
        for k in range(len(G)):
            if k in (i, j):
                continue
            if _mono_div(l, leads[k]) is not None:
                a, b = (min(i, k), max(i, k)), (min(j, k), max(j, k))
                if a not in pairs and b not in pairs:
                    skip = True
                    break
        if skip:
            continue
        sp = s_polynomial(G[i], G[j], order)
        r = normal_form(sp, G, order, budget)
        if r.is_zero():
            continue
        r = _content_strip(r)
        if wdeg(r) > budget.degree:
            raise BudgetExceededError(f"degree {wdeg(r)} over budget during Buchberger")
        G.append(r)
        leads.append(order.leading(r)[0])
        add_pairs(len(G) - 1)

    # minimalize: drop generators whose lead is divisible by another lead
    keep = []
    for i, g in enumerate(G):
        li = leads[i]
        if any(j != i and _mono_div(li, leads[j]) is not None
               and (leads[j] != li or j < i) for j in range(len(G))):
            continue
        keep.append(g)
    # inter-reduce and normalize monic, sorted by leading monomial
    keep.sort(key=lambda g: order.key(order.leading(g)[0]))
    reduced = []
    for i, g in enumerate(keep):
        others = keep[:i] + keep[i + 1:]
        r = normal_form(g, others, order, budget)
        if not r.is_zero():
            _, lc = order.leading(r)
            reduced.append(r * (1 / lc))
    reduced.sort(key=lambda g: order.key(order.leading(g)[0]))
    return IdealBasis(reduced, order, groebner=True)


def eliminate(ideal: IdealBasis, block: Sequence[str],
              budget: Optional[Budget] = None) -> IdealBasis:
    """Generators of the intersection with the subring without the block variables."""
    block = tuple(block)
    order = MonomialOrder(ideal.order.variables, block=block)
    gb = groebner_basis(IdealBasis(list(ideal.generators), order), budget)
    names = [v.name for v in order.variables]
    bidx = [names.index(b) for b in block]
    keep_vars = tuple(v for i, v in enumerate(order.variables) if i not in bidx)
    keep_pos = [i for i in range(len(names)) if i not in bidx]
    out = []
    for g in gb.generators:
        if all(all(e[i] == 0 for i in bidx) for e in g.terms):
            out.append(MultiPoly(keep_vars, {tuple(e[i] for i in keep_pos): c
                                             for e, c in g.terms.items()}))
    return IdealBasis(out, MonomialOrder(keep_vars), groebner=True)


def saturate(ideal: IdealBasis, f: MultiPoly, budget: Optional[Budget] = None) -> IdealBasis:
    """I : f^infinity via the tag-variable method."""
    if f.is_zero():
        raise ValueError("saturation by zero")
    tag = Variable("tau@sat", 1)
    ext_vars = (tag,) + tuple(ideal.order.variables)
    lift = lambda p: MultiPoly(ext_vars, {(0,) + e: c for e, c in p.terms.items()})
    gens = [lift(g) for g in ideal.generators]
    tf = MultiPoly(ext_vars, {(1,) + e: c for e, c in f.terms.items()})
    gens.append(tf - MultiPoly.const(ext_vars, 1))
    ext = IdealBasis(gens, MonomialOrder(ext_vars, block=(tag.name,)))
    out = eliminate(ext, [tag.name], budget)
    return IdealBasis(out.generators, MonomialOrder(tuple(ideal.order.variables)),
                      groebner=False)


def ideal_membership(p: MultiPoly, ideal: IdealBasis, budget: Optional[Budget] = None) -> bool:
    gb = ideal if ideal.groebner else groebner_basis(ideal, budget)
    return normal_form(p, gb.generators, gb.order, budget).is_zero()


@dataclass
class SubringExpression:
    expression: Optional[MultiPoly]
    residual: Optional[MultiPoly] = None

    @property
    def ok(self):
        return self.expression is not None


def express_in_subring(p: MultiPoly, ideal: IdealBasis, sub_vars: Sequence[str],
                       budget: Optional[Budget] = None) -> SubringExpression:
    """q in Q[sub_vars] with p - q in the ideal, or an explicit failure.

    Found as the normal form against an elimination basis; membership of
    p - q is then automatic, and q lying in the subring is verified before
    returning."""
    sub = set(sub_vars)
    names = [v.name for v in ideal.order.variables]
    for s in sub:
        if s not in names:
            raise ValueError(f"unknown subring variable {s!r}")
    block = tuple(n for n in names if n not in sub)
    order = MonomialOrder(ideal.order.variables, block=block)
    gb = groebner_basis(IdealBasis(list(ideal.generators), order), budget)
    r = normal_form(p, gb.generators, order, budget)
    bidx = [names.index(b) for b in block]
    if all(all(e[i] == 0 for i in bidx) for e in r.terms):
        keep_pos = [i for i in range(len(names)) if i not in bidx]
        keep_vars = tuple(ideal.order.variables[i] for i in keep_pos)
        q = MultiPoly(keep_vars, {tuple(e[i] for i in keep_pos): c for e, c in r.terms.items()})
        return SubringExpression(expression=q)
    return SubringExpression(expression=None, residual=r)
