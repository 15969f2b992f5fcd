"""Truncated (Laurent) series over Q in one local parameter u.

A Jet knows its coefficients for exponents low <= i < prec, exactly.  All
operations track precision; nothing is rounded.  Used for local expansions
of coordinate ratios at cusps and for jet conditions on sections.
"""

from __future__ import annotations

from fractions import Fraction
from typing import Sequence

Q = Fraction


class Jet:
    __slots__ = ("low", "coeffs", "prec")

    def __init__(self, low: int, coeffs: Sequence, prec: int):
        cs = [c if isinstance(c, Fraction) else Fraction(c) for c in coeffs]
        # normalize: strip leading zeros, clamp to prec
        while cs and cs[0] == 0:
            cs.pop(0)
            low += 1
        if low + len(cs) > prec:
            cs = cs[: max(0, prec - low)]
        if not cs:
            low = prec
        object.__setattr__(self, "low", low)
        object.__setattr__(self, "coeffs", tuple(cs))
        object.__setattr__(self, "prec", prec)

    def __setattr__(self, *a):
        raise AttributeError("Jet is immutable")

    @staticmethod
    def from_poly(coeffs: Sequence, prec: int) -> "Jet":
        """coeffs[i] is the coefficient of u^i."""
        return Jet(0, coeffs, prec)

    @staticmethod
    def zero(prec: int) -> "Jet":
        return Jet(prec, [], prec)

    @staticmethod
    def one(prec: int) -> "Jet":
        return Jet(0, [1], prec)

    def is_zero(self) -> bool:
        """True when indistinguishable from zero at this precision."""
        return not self.coeffs

    def coeff(self, i: int) -> Fraction:
        if i >= self.prec:
            raise ValueError(f"coefficient of u^{i} beyond precision {self.prec}")
        if i < self.low or i - self.low >= len(self.coeffs):
            return Q(0)
        return self.coeffs[i - self.low]

    def order(self) -> int:
        """Valuation; required nonzero at this precision."""
        if self.is_zero():
            raise ValueError("order of (jet-)zero")
        return self.low

    def truncate(self, prec: int) -> "Jet":
        if prec > self.prec:
            raise ValueError("cannot gain precision")
        return Jet(self.low, self.coeffs, prec)

    def __add__(self, other: "Jet") -> "Jet":
        prec = min(self.prec, other.prec)
        lo = min(self.low, other.low, prec)
        out = [Q(0)] * (prec - lo)
        for j, c in enumerate(self.coeffs):
            i = self.low + j
            if i < prec:
                out[i - lo] += c
        for j, c in enumerate(other.coeffs):
            i = other.low + j
            if i < prec:
                out[i - lo] += c
        return Jet(lo, out, prec)

    def __neg__(self):
        return Jet(self.low, [-c for c in self.coeffs], self.prec)

    def __sub__(self, other):
        return self + (-other)

    def scale(self, c) -> "Jet":
        c = Q(c)
        if c == 0:
            return Jet.zero(self.prec)
        return Jet(self.low, [c * x for x in self.coeffs], self.prec)

    def __mul__(self, other: "Jet") -> "Jet":
        # known part of the product: min over the usual precision bookkeeping
        if self.is_zero() or other.is_zero():
            prec = min(self.prec + other.low, other.prec + self.low,
                       self.prec + other.prec)
            return Jet.zero(min(prec, max(self.prec, other.prec)))
        prec = min(self.prec + other.low, other.prec + self.low)
        lo = self.low + other.low
        out = [Q(0)] * (prec - lo)
        for i, a in enumerate(self.coeffs):
            if a == 0:
                continue
            for j, b in enumerate(other.coeffs):
                k = i + j
                if lo + k >= prec:
                    break
                if b != 0:
                    out[k] += a * b
        return Jet(lo, out, prec)

    def inverse(self) -> "Jet":
        """Multiplicative inverse; the leading coefficient must be nonzero."""
        if self.is_zero():
            raise ZeroDivisionError("inverse of zero jet")
        v = self.low
        a = list(self.coeffs)
        n = self.prec - v  # relative precision
        inv = [Q(0)] * n
        inv[0] = 1 / a[0]
        for k in range(1, n):
            s = Q(0)
            for i in range(1, min(k, len(a) - 1) + 1):
                s += a[i] * inv[k - i]
            inv[k] = -s / a[0]
        return Jet(-v, inv, self.prec - 2 * v)

    def power(self, k: int) -> "Jet":
        if k < 0:
            return self.inverse().power(-k)
        out = Jet.one(self.prec)
        for _ in range(k):
            out = out * self
        return out

    def frac_power(self, num: int, den: int) -> "Jet":
        """(self)^(num/den) by binomial series.

        Requires order * num divisible by den and the leading coefficient an
        exact rational den-th power; both hold after the normalizations used
        by the callers."""
        if self.is_zero():
            raise ValueError("fractional power of zero jet")
        v = self.order()
        if (v * num) % den != 0:
            raise ValueError("order not compatible with fractional power")
        lead = self.coeffs[0]
        root = _rational_root(lead, den)
        if root is None:
            raise ValueError(f"leading coefficient {lead} is not a rational {den}-th power")
        R = self.prec - v  # relative precision of the unit part
        x = [Q(0)] * R  # unit part minus 1, x[i] = coeff of u^i relative to u^v
        for i, c in enumerate(self.coeffs[1:], start=1):
            if i < R:
                x[i] = c / lead
        alpha = Q(num, den)
        out = [Q(0)] * R
        out[0] = Q(1)
        powx = [Q(0)] * R
        powx[0] = Q(1)
        binom = Q(1)
        for k in range(1, R):
            powx = _mul_trunc(powx, x, R)
            binom = binom * (alpha - (k - 1)) / k
            if all(c == 0 for c in powx):
                break
            for i in range(R):
                out[i] += binom * powx[i]
        scalar = root**num
        shift = (v * num) // den
        return Jet(shift, [scalar * c for c in out], shift + R)

    def shift(self, k: int) -> "Jet":
        return Jet(self.low + k, self.coeffs, self.prec + k)

    def __repr__(self):
        parts = [f"{c}*u^{self.low + i}" for i, c in enumerate(self.coeffs) if c != 0]
        body = " + ".join(parts) if parts else "0"
        return f"({body} + O(u^{self.prec}))"


def _mul_trunc(a, b, n):
    out = [Q(0)] * n
    for i, x in enumerate(a):
        if x == 0:
            continue
        for j, y in enumerate(b):
            if i + j >= n:
                break
            if y != 0:
                out[i + j] += x * y
    return out


def _rational_root(x: Fraction, k: int):
    """Exact k-th root of a rational, or None."""
    if k == 1:
        return x
    if x == 0:
        return Q(0)
    neg = x < 0
    if neg and k % 2 == 0:
        return None
    num, den = abs(x.numerator), x.denominator
    rn = _int_kth_root(num, k)
    rd = _int_kth_root(den, k)
    if rn is None or rd is None:
        return None
    r = Q(rn, rd)
    return -r if neg else r


def _int_kth_root(n: int, k: int):
    if n in (0, 1):
        return n
    lo, hi = 1, 1 << ((n.bit_length() + k - 1) // k + 1)
    while lo < hi:
        mid = (lo + hi) // 2
        if mid**k < n:
            lo = mid + 1
        else:
            hi = mid
    return lo if lo**k == n else None
