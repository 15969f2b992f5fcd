"""Sparse multivariate polynomials with weighted variables, over Q.

Terms are stored as a dict from exponent tuples to nonzero Fractions.  The
variable list is ordered and each variable carries a positive integer
weight; the weighted degree of a term is sum(weight_i * exp_i).  Used both
for displayed equations (variables = ring generators, weights = generator
degrees) and for the Groebner engine.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import Mapping, Sequence, Union

from cuspcover.binforms import BinaryForm

Q = Fraction


@dataclass(frozen=True)
class Variable:
    name: str
    weight: int = 1

    def __post_init__(self):
        if self.weight <= 0:
            raise ValueError("variable weight must be positive")


class MultiPoly:
    """Immutable sparse polynomial in an ordered list of weighted variables."""

    __slots__ = ("vars", "terms")

    def __init__(self, variables: Sequence[Variable], terms: Mapping[tuple, object] = ()):
        vs = tuple(variables)
        cleaned = {}
        items = terms.items() if isinstance(terms, Mapping) else terms
        for exp, c in items:
            exp = tuple(int(e) for e in exp)
            if len(exp) != len(vs):
                raise ValueError("exponent length does not match variable count")
            if any(e < 0 for e in exp):
                raise ValueError("negative exponent")
            c = c if isinstance(c, Fraction) else Fraction(c)
            if c != 0:
                cleaned[exp] = cleaned.get(exp, Q(0)) + c
                if cleaned[exp] == 0:
                    del cleaned[exp]
        object.__setattr__(self, "vars", vs)
        object.__setattr__(self, "terms", cleaned)

    def __setattr__(self, *a):
        raise AttributeError("MultiPoly is immutable")

    # -- constructors ------------------------------------------------------

    @staticmethod
    def zero(variables) -> "MultiPoly":
        return MultiPoly(variables, {})

    @staticmethod
    def const(variables, c) -> "MultiPoly":
        return MultiPoly(variables, {tuple([0] * len(tuple(variables))): c})

    @staticmethod
    def var(variables, name: str) -> "MultiPoly":
        vs = tuple(variables)
        idx = _var_index(vs, name)
        exp = [0] * len(vs)
        exp[idx] = 1
        return MultiPoly(vs, {tuple(exp): 1})

    @staticmethod
    def gens(variables) -> dict:
        vs = tuple(variables)
        return {v.name: MultiPoly.var(vs, v.name) for v in vs}

    # -- structure ---------------------------------------------------------

    def is_zero(self) -> bool:
        return not self.terms

    def __bool__(self):
        return bool(self.terms)

    def __eq__(self, other):
        return (
            isinstance(other, MultiPoly)
            and self.vars == other.vars
            and self.terms == other.terms
        )

    def __hash__(self):
        return hash((self.vars, frozenset(self.terms.items())))

    def weighted_degree(self, exp=None):
        """Weighted degree of one exponent vector, or of the whole polynomial."""
        if exp is not None:
            return sum(v.weight * e for v, e in zip(self.vars, exp))
        if not self.terms:
            return 0
        return max(self.weighted_degree(e) for e in self.terms)

    def is_homogeneous(self) -> bool:
        degs = {self.weighted_degree(e) for e in self.terms}
        return len(degs) <= 1

    def sorted_terms(self):
        return sorted(self.terms.items(), key=lambda kv: kv[0], reverse=True)

    def __str__(self):
        if not self.terms:
            return "0"
        names = [v.name for v in self.vars]
        parts = []
        for exp, c in self.sorted_terms():
            mono = "*".join(
                n if e == 1 else f"{n}^{e}" for n, e in zip(names, exp) if e
            )
            if not mono:
                parts.append(str(c))
            elif c == 1:
                parts.append(mono)
            elif c == -1:
                parts.append(f"-{mono}")
            else:
                parts.append(f"{c}*{mono}")
        return " + ".join(parts).replace("+ -", "- ")

    __repr__ = __str__

    # -- arithmetic --------------------------------------------------------

    def _check(self, other: "MultiPoly"):
        if self.vars != other.vars:
            raise ValueError("polynomials over different variable lists")

    def __add__(self, other):
        if isinstance(other, (int, Fraction)):
            other = MultiPoly.const(self.vars, other)
        self._check(other)
        out = dict(self.terms)
        for e, c in other.terms.items():
            out[e] = out.get(e, Q(0)) + c
            if out[e] == 0:
                del out[e]
        return MultiPoly(self.vars, out)

    __radd__ = __add__

    def __neg__(self):
        return MultiPoly(self.vars, {e: -c for e, c in self.terms.items()})

    def __sub__(self, other):
        if isinstance(other, (int, Fraction)):
            other = MultiPoly.const(self.vars, other)
        return self + (-other)

    def __rsub__(self, other):
        return (-self) + other

    def __mul__(self, other):
        if isinstance(other, (int, Fraction)):
            c = Fraction(other)
            return MultiPoly(self.vars, {e: c * x for e, x in self.terms.items()})
        self._check(other)
        out = {}
        for e1, c1 in self.terms.items():
            for e2, c2 in other.terms.items():
                e = tuple(a + b for a, b in zip(e1, e2))
                v = out.get(e, Q(0)) + c1 * c2
                if v == 0:
                    out.pop(e, None)
                else:
                    out[e] = v
        return MultiPoly(self.vars, out)

    __rmul__ = __mul__

    def __pow__(self, k: int):
        if k < 0:
            raise ValueError("negative power")
        result = MultiPoly.const(self.vars, 1)
        base = self
        while k:
            if k & 1:
                result = result * base
            k >>= 1
            if k:
                base = base * base
        return result


def _var_index(vs, name):
    for i, v in enumerate(vs):
        if v.name == name:
            return i
    raise KeyError(f"unbound variable {name!r}")


class UnboundVariableError(KeyError):
    pass


class DegreeMismatchError(ValueError):
    pass


def mpoly_subst(p: MultiPoly, bindings: Mapping[str, Union[MultiPoly, BinaryForm]]):
    """Substitute every variable of p.

    With BinaryForm targets each binding's degree must equal weight * scale
    for one common rational scale, and p must be weighted-homogeneous; the
    result is then the binary form of degree (weighted degree of p) * scale.
    With MultiPoly targets the result is their composition.  Substitution is
    a ring homomorphism either way.
    """
    used = [i for i in range(len(p.vars)) if any(e[i] for e in p.terms)]
    for i in used:
        if p.vars[i].name not in bindings:
            raise UnboundVariableError(p.vars[i].name)
    targets = [bindings.get(v.name) for v in p.vars]
    kinds = {type(t) for t in targets if t is not None}
    if not p.terms:
        if kinds == {BinaryForm}:
            return BinaryForm.zero(0)
        any_mp = next((t for t in targets if isinstance(t, MultiPoly)), None)
        return MultiPoly.zero(any_mp.vars) if any_mp is not None else p

    if kinds <= {BinaryForm}:
        scale = None
        for i in used:
            v, tgt = p.vars[i], targets[i]
            s = Fraction(tgt.degree, v.weight)
            if scale is None:
                scale = s
            elif s != scale:
                raise DegreeMismatchError(
                    f"binding for {v.name} has degree {tgt.degree}, expected weight*scale"
                )
        if scale is None:
            scale = Q(0)
        if not p.is_homogeneous():
            raise DegreeMismatchError(
                "binary-form substitution requires a weighted-homogeneous polynomial"
            )
        out_deg = p.weighted_degree() * scale
        if out_deg.denominator != 1:
            raise DegreeMismatchError("non-integer output degree")
        out = BinaryForm.zero(int(out_deg))
        for exp, c in p.terms.items():
            acc = BinaryForm(0, [c])
            for i, e in enumerate(exp):
                if e:
                    acc = acc * targets[i].pow(e)
            if acc.degree != out.degree:
                raise DegreeMismatchError("inconsistent term degrees after substitution")
            out = out + acc
        return out

    if kinds <= {MultiPoly}:
        tvars = None
        for t in targets:
            if t is not None:
                if tvars is None:
                    tvars = t.vars
                elif t.vars != tvars:
                    raise ValueError("MultiPoly bindings over different variable lists")
        out = MultiPoly.zero(tvars)
        one = MultiPoly.const(tvars, 1)
        for exp, c in p.terms.items():
            acc = one * c
            for i, e in enumerate(exp):
                if e:
                    acc = acc * targets[i] ** e
            out = out + acc
        return out

    raise TypeError("bindings must be all BinaryForm or all MultiPoly")
