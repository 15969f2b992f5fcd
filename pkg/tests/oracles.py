"""Independent brute-force oracles used by the tests.

These deliberately avoid the engine's code paths: determinants by Laplace
expansion, rank by exhaustive minor search, root-finding by trial over small
rationals, tree determinants by leaf contraction, and value semigroups by
direct order enumeration on explicit local expansions.
"""

from fractions import Fraction
from itertools import combinations

Q = Fraction


def det_laplace(matrix):
    n = len(matrix)
    if n == 0:
        return Q(1)
    if n == 1:
        return Q(matrix[0][0])
    total = Q(0)
    for j in range(n):
        if matrix[0][j] == 0:
            continue
        minor = [row[:j] + row[j + 1:] for row in matrix[1:]]
        total += (-1) ** j * Q(matrix[0][j]) * det_laplace(minor)
    return total


def rank_by_minors(rows):
    """Largest k with a nonzero k x k minor, by exhaustive expansion."""
    m = len(rows)
    n = len(rows[0]) if m else 0
    for k in range(min(m, n), 0, -1):
        for ri in combinations(range(m), k):
            for ci in combinations(range(n), k):
                sub = [[rows[i][j] for j in ci] for i in ri]
                if det_laplace(sub) != 0:
                    return k
    return 0


def small_rational_roots(coeffs, bound=12):
    """Roots t0 of sum coeffs[i] * t^i among fractions p/q with |p|,|q| <= bound."""
    roots = []
    seen = set()
    for p in range(-bound, bound + 1):
        for q in range(1, bound + 1):
            r = Q(p, q)
            if r in seen:
                continue
            seen.add(r)
            acc = Q(0)
            for c in reversed(coeffs):
                acc = acc * r + c
            if acc == 0:
                roots.append(r)
    return sorted(set(roots))


def tree_det_by_contraction(vertices, edges):
    """det(-M) of a weighted tree by repeatedly contracting a leaf.

    vertices: dict id -> weight (self-intersection).  Uses the recursion
    det(T) = (-w_leaf) * det(T - leaf) - det(T - leaf - neighbor) after
    rooting at any leaf; implemented via the standard two-term recurrence
    along a leaf elimination order."""
    verts = dict(vertices)
    adj = {v: set() for v in verts}
    for a, b in edges:
        adj[a].add(b)
        adj[b].add(a)

    def solve(vs, ad):
        ids = sorted(vs)
        if not ids:
            return Q(1)
        if len(ids) == 1:
            return Q(-vs[ids[0]])
        leaf = next(v for v in ids if len(ad[v]) <= 1)
        (nb,) = tuple(ad[leaf]) if ad[leaf] else (None,)
        vs1 = {k: w for k, w in vs.items() if k != leaf}
        ad1 = {k: set(x for x in s if x != leaf) for k, s in ad.items() if k != leaf}
        if nb is None:
            return Q(-vs[leaf]) * solve(vs1, ad1)
        vs2 = {k: w for k, w in vs1.items() if k != nb}
        ad2 = {k: set(x for x in s if x != nb) for k, s in ad1.items() if k != nb}
        return Q(-vs[leaf]) * solve(vs1, ad1) - solve(vs2, ad2)

    return solve(verts, adj)


def cf_det(ks):
    """Determinant of a -k_1, ..., -k_r chain by the continued-fraction recurrence."""
    p0, p1 = 1, 0
    for k in ks:
        p0, p1 = k * p0 - p1, p0
    return p0


def milnor_brieskorn(p, q, r):
    return (p - 1) * (q - 1) * (r - 1)


def monomial_semigroup_orders(exponent_pairs, bound):
    """Orders of monomials in two local coordinates with given valuations.

    exponent_pairs: valuations (a, b) of the two local generators; returns
    all sums i*a + j*b below the bound (value semigroup of a monomial cusp)."""
    a, b = exponent_pairs
    out = set()
    i = 0
    while i * a < bound:
        j = 0
        while i * a + j * b < bound:
            out.add(i * a + j * b)
            j += 1
        i += 1
    return out


def semigroup_gaps(gens, bound=200):
    members = {0}
    changed = True
    while changed:
        changed = False
        for g in gens:
            for x in sorted(members):
                if x + g < bound and x + g not in members:
                    members.add(x + g)
                    changed = True
    top = max(set(range(bound)) - members, default=-1)
    return [n for n in range(top + 1) if n not in members]
