"""Deterministic exact linear algebra over Q.

Row reduction uses fraction-free integer elimination internally (rows are
cleared of denominators and kept primitive) and exposes rational reduced
echelon forms at the interface.  Pivoting is deterministic: first nonzero
column, leftmost remaining row, pivots normalized to 1.  Repeated calls are
bit-identical.
"""

from __future__ import annotations

from fractions import Fraction
from math import gcd as _gcd
from typing import Iterable, Sequence

from cuspcover.binforms import BinaryForm

Q = Fraction


class MatrixQ:
    """Immutable dense rational matrix."""

    __slots__ = ("rows", "cols", "entries")

    def __init__(self, entries: Sequence[Sequence]):
        rows = tuple(tuple(x if isinstance(x, Fraction) else Fraction(x) for x in r) for r in entries)
        if rows:
            n = len(rows[0])
            if any(len(r) != n for r in rows):
                raise ValueError("ragged matrix")
        else:
            n = 0
        object.__setattr__(self, "rows", len(rows))
        object.__setattr__(self, "cols", n)
        object.__setattr__(self, "entries", rows)

    def __setattr__(self, *a):
        raise AttributeError("MatrixQ is immutable")

    def __eq__(self, other):
        return isinstance(other, MatrixQ) and self.entries == other.entries

    def __repr__(self):
        return f"MatrixQ({[list(map(str, r)) for r in self.entries]})"

    def row_list(self):
        return [list(r) for r in self.entries]

    def rref(self) -> "MatrixQ":
        piv, rows = rref_rows(self.row_list())
        return MatrixQ([r for r in rows if any(x != 0 for x in r)])

    def rank(self) -> int:
        piv, _ = rref_rows(self.row_list())
        return len(piv)

    def kernel(self) -> list[list[Fraction]]:
        return kernel_basis(self.row_list(), self.cols)

    def det(self) -> Fraction:
        if self.rows != self.cols:
            raise ValueError("determinant of a non-square matrix")
        return det_bareiss(self.row_list())

    def solve(self, rhs: Sequence) -> list[Fraction]:
        """Unique solution of self * x = rhs; raises if singular or inconsistent."""
        b = [x if isinstance(x, Fraction) else Fraction(x) for x in rhs]
        if len(b) != self.rows:
            raise ValueError("length mismatch")
        aug = [list(r) + [b[i]] for i, r in enumerate(self.entries)]
        piv, rows = rref_rows(aug)
        n = self.cols
        if any(p == n for p in piv):
            raise ValueError("inconsistent system")
        if len(piv) < n:
            raise ValueError("singular system")
        x = [Q(0)] * n
        for r, p in zip(rows, piv):
            x[p] = r[n]
        return x

    def inverse(self) -> "MatrixQ":
        if self.rows != self.cols:
            raise ValueError("inverse of a non-square matrix")
        n = self.rows
        aug = [list(r) + [Q(1) if i == j else Q(0) for j in range(n)] for i, r in enumerate(self.entries)]
        piv, rows = rref_rows(aug)
        if len(piv) < n or any(p >= n for p in piv):
            raise ValueError("singular matrix")
        inv = [rows[i][n:] for i in range(n)]
        return MatrixQ(inv)


# ---------------------------------------------------------------------------
# core elimination on integer rows


def _to_int_row(row):
    den = 1
    for x in row:
        if x:
            den = den * x.denominator // _gcd(den, x.denominator)
    r = [int(x * den) for x in row]
    g = 0
    for x in r:
        g = _gcd(g, abs(x))
    if g > 1:
        r = [x // g for x in r]
    return r


def _strip(row):
    g = 0
    for x in row:
        g = _gcd(g, abs(x))
    if g > 1:
        return [x // g for x in row]
    return row


def rref_rows(rows: list[list[Fraction]]):
    """Reduced row echelon form.

    Returns (pivot_columns, rows) where the first len(pivot_columns) rows are
    the nonzero reduced rows (pivot entries 1) and the rest are zero.
    """
    work = [_to_int_row(r) for r in rows]
    m = len(work)
    n = len(work[0]) if m else 0
    piv_cols = []
    piv_row = 0
    for c in range(n):
        sel = None
        for r in range(piv_row, m):
            if work[r][c] != 0:
                sel = r
                break
        if sel is None:
            continue
        work[piv_row], work[sel] = work[sel], work[piv_row]
        lead = work[piv_row][c]
        for r in range(m):
            if r != piv_row and work[r][c] != 0:
                a, b = lead, work[r][c]
                work[r] = _strip([a * x - b * y for x, y in zip(work[r], work[piv_row])])
        piv_cols.append(c)
        piv_row += 1
        if piv_row == m:
            break
    out = []
    for i, c in enumerate(piv_cols):
        lead = work[i][c]
        out.append([Q(x, lead) for x in work[i]])
    for i in range(len(piv_cols), m):
        out.append([Q(0)] * n)
    return piv_cols, out


def kernel_basis(rows, n_cols):
    """Reduced basis of the right kernel, each vector with first nonzero entry 1."""
    piv, red = rref_rows(rows) if rows else ([], [])
    free = [c for c in range(n_cols) if c not in piv]
    basis = []
    for f in free:
        v = [Q(0)] * n_cols
        v[f] = Q(1)
        for i, p in enumerate(piv):
            v[p] = -red[i][f]
        lead = next((x for x in v if x != 0), Q(1))
        basis.append([x / lead for x in v])
    return basis


def det_bareiss(rows) -> Fraction:
    n = len(rows)
    if n == 0:
        return Q(1)
    den = Q(1)
    work = []
    for r in rows:
        ir = []
        d = 1
        for x in r:
            x = x if isinstance(x, Fraction) else Fraction(x)
            d = d * x.denominator // _gcd(d, x.denominator)
        for x in r:
            ir.append(int(Fraction(x) * d))
        den *= d
        work.append(ir)
    sign = 1
    prev = 1
    for k in range(n - 1):
        if work[k][k] == 0:
            for r in range(k + 1, n):
                if work[r][k] != 0:
                    work[k], work[r] = work[r], work[k]
                    sign = -sign
                    break
            else:
                return Q(0)
        for i in range(k + 1, n):
            for j in range(k + 1, n):
                work[i][j] = (work[i][j] * work[k][k] - work[i][k] * work[k][j]) // prev
            work[i][k] = 0
        prev = work[k][k]
    return Q(sign * work[n - 1][n - 1], 1) / den


# ---------------------------------------------------------------------------
# span operations on binary forms


def _common_degree(forms: Iterable[BinaryForm]) -> int:
    degs = {f.degree for f in forms}
    if len(degs) > 1:
        raise ValueError(f"forms of mixed degrees {sorted(degs)} in one task")
    return degs.pop() if degs else 0


def _form_rows(forms):
    return [list(f.coeffs) for f in forms]


def _row_to_form(row, degree):
    return BinaryForm(degree, row)


def span_echelon(forms: Sequence[BinaryForm]) -> list[BinaryForm]:
    """Deterministic reduced-echelon basis of the span of the given forms."""
    if not forms:
        return []
    e = _common_degree(forms)
    piv, rows = rref_rows(_form_rows(forms))
    return [_row_to_form(rows[i], e) for i in range(len(piv))]


def span_rank(forms: Sequence[BinaryForm]) -> int:
    if not forms:
        return 0
    _common_degree(forms)
    piv, _ = rref_rows(_form_rows(forms))
    return len(piv)


def span_membership(f: BinaryForm, forms: Sequence[BinaryForm]) -> bool:
    if f.is_zero():
        return True
    if not forms:
        return False
    _common_degree(list(forms) + [f])
    base = span_rank(forms)
    return span_rank(list(forms) + [f]) == base


def span_coordinates(f: BinaryForm, basis: Sequence[BinaryForm]):
    """Coordinates of f in the given (independent) forms, or None."""
    if not basis:
        return None if f else []
    e = _common_degree(list(basis) + [f])
    rows = _form_rows(basis)
    n = len(rows)
    cols = e + 1
    aug = [[rows[i][j] for i in range(n)] + [f.coeffs[j]] for j in range(cols)]
    piv, red = rref_rows(aug)
    if any(p == n for p in piv):
        return None
    coords = [Q(0)] * n
    for r, p in zip(red, piv):
        coords[p] = r[n]
    return coords


def span_intersection(a: Sequence[BinaryForm], b: Sequence[BinaryForm]) -> list[BinaryForm]:
    if not a or not b:
        return []
    e = _common_degree(list(a) + list(b))
    ab = _form_rows(a) + _form_rows(b)
    # left kernel of the stacked rows: transpose and take the kernel
    transposed = [[ab[i][j] for i in range(len(ab))] for j in range(e + 1)]
    combos = kernel_basis(transposed, len(ab))
    out = []
    for lam in combos:
        vec = [Q(0)] * (e + 1)
        for i in range(len(a)):
            if lam[i]:
                for j in range(e + 1):
                    vec[j] += lam[i] * ab[i][j]
        if any(vec):
            out.append(_row_to_form(vec, e))
    return span_echelon(out)


def span_quotient(sub: Sequence[BinaryForm], big: Sequence[BinaryForm]) -> list[BinaryForm]:
    """Representatives of a complement of span(sub) inside span(big).

    The complement is read off the reduced echelon basis of span(big): the
    rows whose pivot column is not a pivot of span(sub).  With columns in
    s-descending monomial order this is the earliest-monomial completion,
    and the choice is independent of the input bases.
    """
    big_ech = span_echelon(big)
    if not big_ech:
        return []
    sub_ech = span_echelon(sub) if sub else []
    for f in sub_ech:
        if not span_membership(f, big_ech):
            raise ValueError("span-quotient requires sub-span contained in big span")
    sub_pivots = {next(i for i, c in enumerate(f.coeffs) if c != 0) for f in sub_ech}
    out = []
    for f in big_ech:
        p = next(i for i, c in enumerate(f.coeffs) if c != 0)
        if p not in sub_pivots:
            out.append(f)
    return out


def solve_linear(task: str, *data):
    """Single entry point mirroring the operation table; see the span_* helpers."""
    if task == "kernel":
        (m,) = data
        return m.kernel() if isinstance(m, MatrixQ) else kernel_basis(m, len(m[0]))
    if task == "rank":
        (x,) = data
        return x.rank() if isinstance(x, MatrixQ) else span_rank(x)
    if task == "span-membership":
        f, forms = data
        return span_membership(f, forms)
    if task == "span-intersection":
        a, b = data
        return span_intersection(a, b)
    if task == "span-quotient":
        sub, big = data
        return span_quotient(sub, big)
    raise ValueError(f"unknown task {task!r}")
