"""Dense binary forms in (s, t) with exact rational coefficients.

A form of degree e is stored as the coefficient list [c_0, ..., c_e] of
sum_i c_i s^(e-i) t^i.  The zero form is representable at every degree and
the degree is part of the value, so equality is degree plus coefficients.
Rational scalars are `fractions.Fraction` throughout; nothing is ever
rounded.
"""

from __future__ import annotations

from fractions import Fraction
from typing import Iterable, Sequence

Q = Fraction


def _q(x) -> Fraction:
    return x if isinstance(x, Fraction) else Fraction(x)


class BinaryForm:
    """Immutable dense binary form sum c_i s^(e-i) t^i."""

    __slots__ = ("degree", "coeffs", "_hash")

    def __init__(self, degree: int, coeffs: Iterable = ()):
        if degree < 0:
            raise ValueError("degree must be non-negative")
        cs = [_q(c) for c in coeffs]
        if len(cs) == 0:
            cs = [Q(0)] * (degree + 1)
        if len(cs) != degree + 1:
            raise ValueError(f"need {degree + 1} coefficients, got {len(cs)}")
        object.__setattr__(self, "degree", degree)
        object.__setattr__(self, "coeffs", tuple(cs))
        object.__setattr__(self, "_hash", None)

    def __setattr__(self, *a):
        raise AttributeError("BinaryForm is immutable")

    # -- constructors ------------------------------------------------------

    @staticmethod
    def zero(degree: int) -> "BinaryForm":
        return BinaryForm(degree, [Q(0)] * (degree + 1))

    @staticmethod
    def monomial(degree: int, t_power: int, c=1) -> "BinaryForm":
        cs = [Q(0)] * (degree + 1)
        cs[t_power] = _q(c)
        return BinaryForm(degree, cs)

    @staticmethod
    def s() -> "BinaryForm":
        return BinaryForm(1, [1, 0])

    @staticmethod
    def t() -> "BinaryForm":
        return BinaryForm(1, [0, 1])

    @staticmethod
    def linear(a, b) -> "BinaryForm":
        """The linear form a*s + b*t."""
        return BinaryForm(1, [a, b])

    # -- basic structure ---------------------------------------------------

    def is_zero(self) -> bool:
        return all(c == 0 for c in self.coeffs)

    def __bool__(self) -> bool:
        return not self.is_zero()

    def __eq__(self, other) -> bool:
        return (
            isinstance(other, BinaryForm)
            and self.degree == other.degree
            and self.coeffs == other.coeffs
        )

    def __hash__(self):
        h = object.__getattribute__(self, "_hash")
        if h is None:
            h = hash((self.degree, self.coeffs))
            object.__setattr__(self, "_hash", h)
        return h

    def __repr__(self):
        return f"BinaryForm({self.degree}, {self})"

    def __str__(self):
        if self.is_zero():
            return "0"
        parts = []
        e = self.degree
        for i, c in enumerate(self.coeffs):
            if c == 0:
                continue
            mono = []
            if e - i > 0:
                mono.append("s" if e - i == 1 else f"s^{e - i}")
            if i > 0:
                mono.append("t" if i == 1 else f"t^{i}")
            m = "*".join(mono) if mono else "1"
            if c == 1 and mono:
                parts.append(m)
            elif c == -1 and mono:
                parts.append(f"-{m}")
            elif mono:
                parts.append(f"{c}*{m}")
            else:
                parts.append(str(c))
        out = " + ".join(parts)
        return out.replace("+ -", "- ")

    # -- arithmetic --------------------------------------------------------

    def __add__(self, other: "BinaryForm") -> "BinaryForm":
        a, b = self, other
        if a.degree != b.degree:
            if a.is_zero():
                return b
            if b.is_zero():
                return a
            raise ValueError("degree mismatch in binary form addition")
        return BinaryForm(a.degree, [x + y for x, y in zip(a.coeffs, b.coeffs)])

    def __sub__(self, other: "BinaryForm") -> "BinaryForm":
        return self + (-other)

    def __neg__(self) -> "BinaryForm":
        return BinaryForm(self.degree, [-c for c in self.coeffs])

    def scale(self, c) -> "BinaryForm":
        c = _q(c)
        return BinaryForm(self.degree, [c * x for x in self.coeffs])

    def __mul__(self, other):
        if isinstance(other, (int, Fraction)):
            return self.scale(other)
        a, b = self.coeffs, other.coeffs
        out = [Q(0)] * (self.degree + other.degree + 1)
        for i, ca in enumerate(a):
            if ca == 0:
                continue
            for j, cb in enumerate(b):
                if cb == 0:
                    continue
                out[i + j] += ca * cb
        return BinaryForm(self.degree + other.degree, out)

    __rmul__ = __mul__

    def pow(self, k: int) -> "BinaryForm":
        if k < 0:
            raise ValueError("pow requires k >= 0")
        result = BinaryForm(0, [1])
        base = self
        while k:
            if k & 1:
                result = result * base
            base = base * base if k > 1 else base
            k >>= 1
        return result

    __pow__ = pow

    def evaluate(self, s0, t0) -> Fraction:
        s0, t0 = _q(s0), _q(t0)
        e = self.degree
        acc = Q(0)
        for i, c in enumerate(self.coeffs):
            if c != 0:
                acc += c * s0 ** (e - i) * t0**i
        return acc

    def derivative_s(self) -> "BinaryForm":
        if self.degree == 0:
            return BinaryForm.zero(0)
        e = self.degree
        return BinaryForm(e - 1, [(e - i) * self.coeffs[i] for i in range(e)])

    def derivative_t(self) -> "BinaryForm":
        if self.degree == 0:
            return BinaryForm.zero(0)
        e = self.degree
        return BinaryForm(e - 1, [i * self.coeffs[i] for i in range(1, e + 1)])

    def compose_gl2(self, a, b, c, d) -> "BinaryForm":
        """Substitute (s, t) -> (a*s + b*t, c*s + d*t)."""
        ls = BinaryForm.linear(a, b)
        lt = BinaryForm.linear(c, d)
        e = self.degree
        out = BinaryForm.zero(e)
        for i, coef in enumerate(self.coeffs):
            if coef == 0:
                continue
            out = out + (ls.pow(e - i) * lt.pow(i)).scale(coef)
        return out

    # -- valuation helpers -------------------------------------------------

    def s_multiplicity(self) -> int:
        """Multiplicity of the root (0:1), i.e. the power of s dividing the form."""
        if self.is_zero():
            raise ValueError("zero form")
        for i in range(self.degree, -1, -1):
            if self.coeffs[i] != 0:
                return self.degree - i
        raise AssertionError

    def t_multiplicity(self) -> int:
        if self.is_zero():
            raise ValueError("zero form")
        for i, c in enumerate(self.coeffs):
            if c != 0:
                return i
        raise AssertionError

    def leading_coeff(self) -> Fraction:
        """First nonzero coefficient in s-descending order."""
        for c in self.coeffs:
            if c != 0:
                return c
        return Q(0)

    def monic(self) -> "BinaryForm":
        lc = self.leading_coeff()
        if lc == 0:
            return self
        return self.scale(1 / lc)

    # dehomogenize with respect to u = t (setting s = 1); returns (s_mult, univariate coeffs low->high in t)
    def _dehom(self):
        m = self.s_multiplicity()
        e = self.degree
        return m, list(self.coeffs[: e - m + 1])


# ---------------------------------------------------------------------------
# univariate helpers over Q (coefficient lists, index = power of t)


def _poly_trim(p):
    while p and p[-1] == 0:
        p.pop()
    return p


def _poly_mul(a, b):
    out = [Q(0)] * (len(a) + len(b) - 1) if a and b else []
    for i, x in enumerate(a):
        if x == 0:
            continue
        for j, y in enumerate(b):
            out[i + j] += x * y
    return _poly_trim(out)


def _poly_divmod(a, b):
    a = list(a)
    if not b:
        raise ZeroDivisionError
    q = [Q(0)] * max(0, len(a) - len(b) + 1)
    while len(a) >= len(b) and _poly_trim(a):
        if len(a) < len(b):
            break
        c = a[-1] / b[-1]
        k = len(a) - len(b)
        q[k] = c
        for i, y in enumerate(b):
            a[i + k] -= c * y
        _poly_trim(a)
    return _poly_trim(q), _poly_trim(a)


def _poly_gcd(a, b):
    a, b = _poly_trim(list(a)), _poly_trim(list(b))
    while b:
        _, r = _poly_divmod(a, b)
        a, b = b, r
    if a:
        lc = a[-1]
        a = [c / lc for c in a]
    return a


# ---------------------------------------------------------------------------
# form-level operations


def divexact(a: BinaryForm, b: BinaryForm) -> BinaryForm:
    """Exact division a / b; raises NonDivisibleError with the remainder degree."""
    if b.is_zero():
        raise ZeroDivisionError("division by the zero form")
    if a.is_zero():
        if a.degree < b.degree:
            raise NonDivisibleError(a, b, a.degree)
        return BinaryForm.zero(a.degree - b.degree)
    sa, pa = a._dehom()
    sb, pb = b._dehom()
    if sb > sa or b.degree > a.degree:
        raise NonDivisibleError(a, b, a.degree)
    q, r = _poly_divmod(pa, pb)
    if r:
        raise NonDivisibleError(a, b, len(r) - 1)
    e = a.degree - b.degree
    cs = [Q(0)] * (e + 1)
    for i, c in enumerate(q):
        cs[i] = c
    return BinaryForm(e, cs)


def divides(b: BinaryForm, a: BinaryForm) -> bool:
    try:
        divexact(a, b)
        return True
    except (NonDivisibleError, ZeroDivisionError):
        return False


class NonDivisibleError(ValueError):
    def __init__(self, a, b, remainder_degree):
        self.remainder_degree = remainder_degree
        super().__init__(
            f"{b} does not divide {a} exactly (remainder degree {remainder_degree})"
        )


def gcd(a: BinaryForm, b: BinaryForm) -> BinaryForm:
    """Monic gcd; the gcd of two zero forms is the zero form of degree 0."""
    if a.is_zero() and b.is_zero():
        return BinaryForm.zero(0)
    if a.is_zero():
        return b.monic()
    if b.is_zero():
        return a.monic()
    sa, pa = a._dehom()
    sb, pb = b._dehom()
    g = _poly_gcd(pa, pb)
    m = min(sa, sb)
    e = m + len(g) - 1
    cs = [Q(0)] * (e + 1)
    for i, c in enumerate(g):
        cs[i] = c
    return BinaryForm(e, cs).monic()


def squarefree_part(a: BinaryForm) -> BinaryForm:
    """The radical of a nonzero form: product of its distinct irreducible factors, monic."""
    if a.is_zero():
        raise ValueError("radical of the zero form")
    sa, pa = a._dehom()
    if len(pa) == 1:
        rad = [Q(1)]
    else:
        dpa = [i * pa[i] for i in range(1, len(pa))]
        g = _poly_gcd(pa, dpa)
        rad, _ = _poly_divmod(pa, g)
        lc = rad[-1]
        rad = [c / lc for c in rad]
    e = (1 if sa > 0 else 0) + len(rad) - 1
    cs = [Q(0)] * (e + 1)
    for i, c in enumerate(rad):
        cs[i] = c
    return BinaryForm(e, cs).monic()


def resultant(a: BinaryForm, b: BinaryForm) -> Fraction:
    """Resultant of two binary forms (Sylvester determinant in the t-variable)."""
    m, n = a.degree, b.degree
    if m == 0 and n == 0:
        return Q(1)
    if m == 0:
        return a.coeffs[0] ** n
    if n == 0:
        return b.coeffs[0] ** m
    # Sylvester matrix with rows of a-coefficients (s-descending) shifted.
    size = m + n
    rows = []
    ac = list(a.coeffs)
    bc = list(b.coeffs)
    for i in range(n):
        rows.append([Q(0)] * i + ac + [Q(0)] * (n - 1 - i))
    for i in range(m):
        rows.append([Q(0)] * i + bc + [Q(0)] * (m - 1 - i))
    # fraction-free Gaussian elimination (Bareiss)
    det_sign = 1
    prev = Q(1)
    mat = [row[:] for row in rows]
    for k in range(size - 1):
        if mat[k][k] == 0:
            for r in range(k + 1, size):
                if mat[r][k] != 0:
                    mat[k], mat[r] = mat[r], mat[k]
                    det_sign = -det_sign
                    break
            else:
                return Q(0)
        for i in range(k + 1, size):
            for j in range(k + 1, size):
                mat[i][j] = (mat[i][j] * mat[k][k] - mat[i][k] * mat[k][j]) / prev
            mat[i][k] = Q(0)
        prev = mat[k][k]
    return det_sign * mat[size - 1][size - 1]


def rational_roots(a: BinaryForm) -> list[tuple[Fraction, Fraction, int]]:
    """Rational projective roots of a form as (s0, t0, multiplicity).

    Points are normalized so the first nonzero coordinate is 1; (0, 1) is the
    root of s, (1, t0) the root of t - t0*s.  Irrational roots are silently
    absent (callers that need completeness compare degrees)."""
    if a.is_zero():
        raise ValueError("every point is a root of the zero form")
    out = []
    sm, p = a._dehom()  # a = s^sm * p(t/s) * s^(deg p)
    if sm > 0:
        out.append((Q(0), Q(1), sm))
    tm = 0
    while tm < len(p) and p[tm] == 0:
        tm += 1
    p = p[tm:]
    if tm > 0:
        out.append((Q(1), Q(0), tm))
    if len(p) > 1:
        den = 1
        for c in p:
            den = den * c.denominator // _int_gcd(den, c.denominator)
        ip = [int(c * den) for c in p]
        content = 0
        for c in ip:
            content = _int_gcd(content, abs(c))
        ip = [c // content for c in ip]
        seen = set()
        for pnum in _divisors(abs(ip[0])):
            for qden in _divisors(abs(ip[-1])):
                for sgn in (1, -1):
                    r = Q(sgn * pnum, qden)  # candidate value of t/s
                    if r in seen or _poly_eval(ip, r) != 0:
                        continue
                    seen.add(r)
                    mult = 0
                    q = [Q(c) for c in ip]
                    while True:
                        qq, rem = _poly_divmod(q, [-r, Q(1)])
                        if rem:
                            break
                        mult += 1
                        q = qq
                    out.append((Q(1), r, mult))
    out.sort(key=lambda x: (x[0], x[1]))
    return out


def _poly_eval(p, x):
    acc = Q(0)
    for c in reversed(p):
        acc = acc * x + c
    return acc


def _int_gcd(a, b):
    while b:
        a, b = b, a % b
    return a


def _divisors(n):
    if n == 0:
        return [1]
    out = []
    d = 1
    while d * d <= n:
        if n % d == 0:
            out.append(d)
            if d != n // d:
                out.append(n // d)
        d += 1
    return sorted(out)


def perfect_power_root(a: BinaryForm, k: int):
    """If a = c * g^k for a form g over Q, return (g, c) with g monic; else None."""
    if k <= 0:
        raise ValueError("k must be positive")
    if a.is_zero():
        return None
    if a.degree % k != 0:
        return None
    if k == 1:
        return a.monic(), a.leading_coeff()
    sa, p = a._dehom()
    if sa % k != 0:
        return None
    # kth root of a univariate polynomial by Newton-like coefficient matching
    deg_g = len(p) - 1
    if deg_g % k != 0:
        return None
    m = deg_g // k
    lc = p[-1]
    # g must be monic; a = c * g^k with c = lc
    c = lc
    scaled = [x / c for x in p]
    g = [Q(0)] * (m + 1)
    g[m] = Q(1)
    # match coefficients from the top down
    for idx in range(m - 1, -1, -1):
        gk = _poly_pow(g, k)
        target_pos = idx + (k - 1) * m
        diff = scaled[target_pos] - (gk[target_pos] if target_pos < len(gk) else Q(0))
        g[idx] = diff / k
    if _poly_pow(g, k) != scaled:
        return None
    e = sa // k + m
    cs = [Q(0)] * (e + 1)
    for i, x in enumerate(g):
        cs[i] = x
    root = BinaryForm(e, cs)
    lam = root.leading_coeff()
    return root.monic(), c * lam**k


def _poly_pow(p, k):
    out = [Q(1)]
    base = list(p)
    while k:
        if k & 1:
            out = _poly_mul(out, base)
        k >>= 1
        if k:
            base = _poly_mul(base, base)
    return out


def bform_ops(a: BinaryForm, b, op: str, k: int | None = None):
    """Dispatch table used by the CLI; the named functions are the real API."""
    if op == "add":
        return a + b
    if op == "mul":
        return a * b
    if op == "divexact":
        return divexact(a, b)
    if op == "gcd":
        return gcd(a, b)
    if op == "pow":
        return a.pow(k)
    if op == "squarefree":
        return squarefree_part(a)
    if op == "resultant":
        return resultant(a, b)
    raise ValueError(f"unknown op {op!r}")
