"""Resolution-graph and splice-diagram calculus.

Weighted dual graphs with genera, exact intersection-matrix arithmetic
(determinants, definiteness, canonical cycles, Laufer/Durfee bookkeeping),
splice diagrams with cut-off-determinant edge weights, the semigroup
condition, and star-shaped constructors from Seifert data or Brieskorn
exponents.

The |H_1| convention is det(-M), positive for a negative definite
intersection matrix M; b_1 counts 2*sum(genus) plus independent cycles.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction
from math import gcd as _gcd
from typing import Optional, Sequence

from cuspcover.curves import semigroup_members
from cuspcover.linalg import MatrixQ, det_bareiss

Q = Fraction


class GraphError(ValueError):
    pass


@dataclass(frozen=True)
class GraphVertex:
    id: str
    weight: int  # self-intersection, <= -1
    genus: int = 0


class ResolutionGraph:
    def __init__(self, vertices: Sequence[GraphVertex], edges: Sequence[tuple]):
        self.vertices = tuple(vertices)
        ids = [v.id for v in self.vertices]
        if len(set(ids)) != len(ids):
            raise GraphError("duplicate vertex ids")
        self.index = {v.id: i for i, v in enumerate(self.vertices)}
        es = []
        for a, b in edges:
            if a not in self.index or b not in self.index:
                raise GraphError(f"edge ({a},{b}) references unknown vertex")
            if a == b:
                raise GraphError("loops are not allowed")
            es.append((a, b))
        self.edges = tuple(es)
        if self.vertices and not self._connected():
            raise GraphError("graph is not connected")

    def _adjacency_counts(self):
        n = len(self.vertices)
        m = [[0] * n for _ in range(n)]
        for a, b in self.edges:
            i, j = self.index[a], self.index[b]
            m[i][j] += 1
            m[j][i] += 1
        return m

    def _connected(self):
        n = len(self.vertices)
        adj = self._adjacency_counts()
        seen = {0}
        stack = [0]
        while stack:
            i = stack.pop()
            for j in range(n):
                if adj[i][j] and j not in seen:
                    seen.add(j)
                    stack.append(j)
        return len(seen) == n

    def intersection_matrix(self) -> MatrixQ:
        n = len(self.vertices)
        adj = self._adjacency_counts()
        rows = []
        for i in range(n):
            row = [Q(adj[i][j]) for j in range(n)]
            row[i] = Q(self.vertices[i].weight)
            rows.append(row)
        return MatrixQ(rows)

    def neighbors(self, vid: str):
        out = []
        for a, b in self.edges:
            if a == vid:
                out.append(b)
            if b == vid:
                out.append(a)
        return out

    def valence(self, vid: str) -> int:
        return len(self.neighbors(vid))

    def subgraph_det(self, ids: Sequence[str]) -> Fraction:
        """det(-M) of the induced subgraph."""
        ids = list(ids)
        pos = {v: k for k, v in enumerate(ids)}
        n = len(ids)
        rows = [[Q(0)] * n for _ in range(n)]
        for k, vid in enumerate(ids):
            rows[k][k] = Q(-self.vertices[self.index[vid]].weight)
        for a, b in self.edges:
            if a in pos and b in pos:
                rows[pos[a]][pos[b]] -= 1
                rows[pos[b]][pos[a]] -= 1
        return det_bareiss(rows)

    def component_of(self, seed: str, removed: set) -> list[str]:
        """Vertex ids of the connected component of seed in the graph minus removed."""
        seen = {seed}
        stack = [seed]
        while stack:
            v = stack.pop()
            for w in self.neighbors(v):
                if w not in removed and w not in seen:
                    seen.add(w)
                    stack.append(w)
        return sorted(seen, key=lambda x: self.index[x])


@dataclass(frozen=True)
class GraphAnalysis:
    determinant: Fraction
    definite: bool
    b1: int
    b2: int

    @property
    def h1_order(self):
        return self.determinant if self.b1 == 0 else None


def graph_analyze(g: ResolutionGraph) -> GraphAnalysis:
    """Exact det(-M), negative-definiteness certificate, b_1 and b_2."""
    n = len(g.vertices)
    M = g.intersection_matrix()
    neg = [[-x for x in row] for row in M.entries]
    definite = True
    for k in range(1, n + 1):
        minor = det_bareiss([row[:k] for row in neg[:k]])
        if minor <= 0:
            definite = False
            break
    det = det_bareiss(neg)
    genus_sum = sum(v.genus for v in g.vertices)
    cycle_rank = len(g.edges) - n + 1
    return GraphAnalysis(determinant=det, definite=definite,
                         b1=2 * genus_sum + cycle_rank, b2=n)


@dataclass(frozen=True)
class CycleQ:
    coefficients: tuple  # (vertex id, Fraction) pairs in vertex order

    def as_dict(self):
        return dict(self.coefficients)

    def is_integral(self) -> bool:
        return all(c.denominator == 1 for _, c in self.coefficients)


@dataclass(frozen=True)
class CanonicalData:
    cycle: CycleQ
    k_squared: Fraction
    integral: bool  # numerically Gorenstein


def canonical_cycle(g: ResolutionGraph) -> CanonicalData:
    """Solve (K + E_i) . E_i = 2 g_i - 2 for K; report K^2 and integrality."""
    analysis = graph_analyze(g)
    if not analysis.definite:
        raise GraphError("canonical cycle needs a negative definite graph")
    M = g.intersection_matrix()
    rhs = [Q(2 * v.genus - 2 - M.entries[i][i]) for i, v in enumerate(g.vertices)]
    k = M.solve(rhs)
    k2 = Q(0)
    for i in range(len(k)):
        for j in range(len(k)):
            k2 += k[i] * M.entries[i][j] * k[j]
    cycle = CycleQ(tuple((v.id, k[i]) for i, v in enumerate(g.vertices)))
    return CanonicalData(cycle=cycle, k_squared=k2, integral=cycle.is_integral())


def adjunction_residuals(g: ResolutionGraph, cd: CanonicalData):
    """(K + E_i) . E_i - (2 g_i - 2) per vertex; all zero by construction."""
    M = g.intersection_matrix()
    k = [c for _, c in cd.cycle.coefficients]
    out = []
    for i, v in enumerate(g.vertices):
        val = sum(k[j] * M.entries[i][j] for j in range(len(k))) + M.entries[i][i]
        out.append(val - (2 * v.genus - 2))
    return out


@dataclass(frozen=True)
class LauferData:
    mu: Fraction  # 12 pg - b1 + b2 + K^2
    sigma: Fraction  # 8 pg - b2 - K^2
    predicted_pg: Optional[Fraction]  # sw - (K^2 + r)/8 when sw given


def laufer_durfee_sw(g: ResolutionGraph, pg: int, sw: Optional[Fraction] = None) -> LauferData:
    cd = canonical_cycle(g)
    an = graph_analyze(g)
    mu = 12 * pg - an.b1 + an.b2 + cd.k_squared
    sigma = 8 * pg - an.b2 - cd.k_squared
    predicted = None
    if sw is not None:
        predicted = sw - (cd.k_squared + an.b2) / 8
    return LauferData(mu=mu, sigma=sigma, predicted_pg=predicted)


# ---------------------------------------------------------------------------
# splice diagrams


@dataclass(frozen=True)
class SpliceEdge:
    v: str  # node id
    w: str  # node or leaf id
    d_v: Fraction  # weight at the v end
    d_w: Optional[Fraction]  # weight at the w end (None when w is a leaf)
    chain: tuple = ()  # contracted valence-2 vertices between v and w


@dataclass(frozen=True)
class SpliceDiagram:
    nodes: tuple[str, ...]
    leaves: tuple[str, ...]
    edges: tuple[SpliceEdge, ...]
    graph: ResolutionGraph

    def node_edges(self, v: str):
        return [e for e in self.edges if e.v == v or (e.d_w is not None and e.w == v)]

    def weights_at(self, v: str):
        out = []
        for e in self.edges:
            if e.v == v:
                out.append(e.d_v)
            elif e.w == v and e.d_w is not None:
                out.append(e.d_w)
        return out


def splice_diagram(g: ResolutionGraph) -> SpliceDiagram:
    """Contract valence-2 chains; each node-end weight is det(-M) of the
    cut-off component of the graph minus the node."""
    for v in g.vertices:
        if v.genus != 0:
            raise GraphError(f"splice diagram undefined: vertex {v.id} has genus {v.genus}")
    an = graph_analyze(g)
    if len(g.edges) != len(g.vertices) - 1:
        raise GraphError("splice diagram needs a tree")
    nodes = [v.id for v in g.vertices if g.valence(v.id) >= 3]
    leaves = [v.id for v in g.vertices if g.valence(v.id) == 1]
    if not nodes:
        raise GraphError("no vertex of valence >= 3: splice diagram degenerates")
    edges = []
    seen_pairs = set()
    for node in nodes:
        for nb in g.neighbors(node):
            # walk away from node through valence-2 vertices
            chain = []
            prev, cur = node, nb
            while g.valence(cur) == 2:
                chain.append(cur)
                nxt = [x for x in g.neighbors(cur) if x != prev]
                prev, cur = cur, nxt[0]
            end = cur
            key = (node, end, tuple(chain))
            rkey = (end, node, tuple(reversed(chain)))
            if rkey in seen_pairs or key in seen_pairs:
                continue
            seen_pairs.add(key)
            comp_v = g.component_of(nb, removed={node})
            d_v = g.subgraph_det(comp_v)
            if end in nodes:
                back = g.neighbors(end)
                # component of graph minus end containing the chain (or node)
                seed = chain[-1] if chain else node
                comp_w = g.component_of(seed, removed={end})
                d_w = g.subgraph_det(comp_w)
                edges.append(SpliceEdge(v=node, w=end, d_v=d_v, d_w=d_w, chain=tuple(chain)))
            else:
                edges.append(SpliceEdge(v=node, w=end, d_v=d_v, d_w=None, chain=tuple(chain)))
    return SpliceDiagram(nodes=tuple(nodes), leaves=tuple(leaves),
                         edges=tuple(edges), graph=g)


def edge_determinant_check(sd: SpliceDiagram):
    """For each node-node edge: d_vw * d_wv - l_v * l_w = det(-M) * det(chain).

    Returns the list of (edge, lhs, rhs) triples; the identity holds on
    negative definite trees and is cross-checked numerically in the tests."""
    det = graph_analyze(sd.graph).determinant
    out = []
    for e in sd.edges:
        if e.d_w is None:
            continue
        lv = Q(1)
        for x in sd.weights_at(e.v):
            lv *= x
        lv /= e.d_v
        lw = Q(1)
        for x in sd.weights_at(e.w):
            lw *= x
        lw /= e.d_w
        lhs = e.d_v * e.d_w - lv * lw
        chain_det = sd.graph.subgraph_det(e.chain) if e.chain else Q(1)
        out.append((e, lhs, det * chain_det))
    return out


@dataclass(frozen=True)
class SemigroupViolation:
    node: str
    toward: str
    required: int
    generators: tuple[int, ...]


def semigroup_condition(sd: SpliceDiagram) -> list[SemigroupViolation]:
    """Neumann-Wahl style arithmetic condition, checked on node-to-node edges.

    For the edge e at node v toward node w: the weight d_ve must lie in the
    numerical semigroup generated by the linking numbers l'_vw over the
    leaves w' behind e, where l'_vw' is the product of the edge weights
    adjacent to, but not on, the path from v to w' (weights at v excluded).
    This formulation is inferred from the paper's worked instances; see the
    module notes."""
    g = sd.graph
    violations = []
    # adjacency in the splice tree
    for e in sd.edges:
        if e.d_w is None:
            continue
        for v, w, d in ((e.v, e.w, e.d_v), (e.w, e.v, e.d_w)):
            lprimes = []
            for leaf_edge_path in _leaf_paths_through(sd, v, w):
                lp = Q(1)
                for (node_on_path, off_weights) in leaf_edge_path:
                    for x in off_weights:
                        lp *= x
                lprimes.append(int(lp))
            req = int(d)
            gens = tuple(sorted(lprimes))
            members = semigroup_members([x for x in gens if x > 0], req + 1)
            if req not in members:
                violations.append(SemigroupViolation(node=v, toward=w, required=req,
                                                     generators=gens))
    return violations


def _splice_adj(sd: SpliceDiagram):
    adj = {}
    for e in sd.edges:
        adj.setdefault(e.v, []).append((e.w, e))
        adj.setdefault(e.w, []).append((e.v, e))
    return adj


def _leaf_paths_through(sd: SpliceDiagram, v: str, first: str):
    """For each leaf behind the edge v->first: the list of (node, off-path weights)
    for the intermediate nodes of the path (weights at v excluded)."""
    adj = _splice_adj(sd)
    out = []

    def walk(prev, cur, acc):
        if cur in sd.leaves:
            out.append(list(acc))
            return
        offs = []
        nxts = []
        for (nb, e) in adj.get(cur, []):
            if nb == prev:
                continue
            w_at_cur = e.d_v if e.v == cur else e.d_w
            nxts.append((nb, e, w_at_cur))
        for (nb, e, w_at_cur) in nxts:
            others = [w2 for (nb2, e2, w2) in nxts if nb2 != nb]
            walk(cur, nb, acc + [(cur, others)])

    walk(v, first, [])
    return out


# ---------------------------------------------------------------------------
# star-shaped constructors


@dataclass(frozen=True)
class SeifertData:
    central_weight: int  # b0 >= 1 (central self-intersection -b0)
    arms: tuple[tuple[int, int], ...]  # (alpha_i, beta_i), 0 < beta < alpha


@dataclass(frozen=True)
class SpliceEquation:
    lhs_var: int  # arm index
    lhs_power: int
    rhs: tuple  # ((coeff label, arm index, power), ...)


@dataclass(frozen=True)
class StarOutput:
    graph: ResolutionGraph
    seifert: SeifertData
    equations: tuple[SpliceEquation, ...]
    group_order: Fraction
    action: tuple  # generators as tuples of Fractions over the arm ends


def continued_fraction(alpha: int, beta: int) -> list[int]:
    """Hirzebruch-Jung expansion alpha/beta = k1 - 1/(k2 - ...), k_i >= 2."""
    if not (0 < beta < alpha):
        raise ValueError("need 0 < beta < alpha")
    out = []
    a, b = alpha, beta
    while b:
        k = -(-a // b)  # ceil
        out.append(k)
        a, b = b, k * b - a
    return out


def cf_determinant(ks: Sequence[int]) -> int:
    """Determinant of the chain with weights -k_i (continued-fraction oracle)."""
    p0, p1 = 1, 0
    for k in ks:
        p0, p1 = k * p0 - p1, p0
    return p0


def star_graph(seifert: SeifertData) -> ResolutionGraph:
    vertices = [GraphVertex(id="c", weight=-seifert.central_weight)]
    edges = []
    for i, (alpha, beta) in enumerate(seifert.arms):
        ks = continued_fraction(alpha, beta)
        prev = "c"
        for j, k in enumerate(ks):
            vid = f"a{i}_{j}"
            vertices.append(GraphVertex(id=vid, weight=-k))
            edges.append((prev, vid))
            prev = vid
    return ResolutionGraph(vertices, edges)


def seifert_from_star(g: ResolutionGraph) -> SeifertData:
    """Recover (b0; (alpha_i, beta_i)) from a star-shaped graph."""
    centers = [v.id for v in g.vertices if g.valence(v.id) >= 3]
    if len(centers) != 1:
        raise GraphError("not a star-shaped graph")
    c = centers[0]
    arms = []
    for nb in g.neighbors(c):
        ks = []
        prev, cur = c, nb
        while True:
            ks.append(-g.vertices[g.index[cur]].weight)
            nxt = [x for x in g.neighbors(cur) if x != prev]
            if not nxt:
                break
            prev, cur = cur, nxt[0]
        alpha = cf_determinant(ks)
        beta = cf_determinant(ks[1:]) if len(ks) > 1 else 1
        arms.append((alpha, beta))
    b0 = -g.vertices[g.index[c]].weight
    return SeifertData(central_weight=b0, arms=tuple(sorted(arms)))


def brieskorn_seifert(p: int, q: int, r: int) -> SeifertData:
    """Seifert data of the star graph for x^p + y^q + z^r in the two regimes
    used here: the superisolated-cover family (gcd(p,q)=1, r > p*q) and the
    pairwise-coprime Brieskorn sphere normalization."""
    if _gcd(p, q) == 1 and r > p * q:
        beta_p = _modinv_neg(q, p)
        beta_q = _modinv_neg(p, q)
        return SeifertData(central_weight=1,
                           arms=((r, 1), (p, beta_p) if p > 1 else None,
                                 (q, beta_q) if q > 1 else None))
    if _gcd(p, q) == _gcd(p, r) == _gcd(q, r) == 1:
        a = p * q * r
        arms = []
        total = Q(1, a)
        s = 0
        for alpha in (p, q, r):
            if alpha == 1:
                continue
            beta = _modinv_neg(a // alpha, alpha)
            arms.append((alpha, beta))
            s += beta * (a // alpha)
        b0 = (1 + s) // a
        if (1 + s) % a:
            raise GraphError("Brieskorn normalization failed")
        return SeifertData(central_weight=b0, arms=tuple(arms))
    raise GraphError(f"unsupported Brieskorn exponents ({p},{q},{r})")


def _modinv_neg(x: int, m: int) -> int:
    """beta in [1, m) with x*beta = -1 (mod m)."""
    x %= m
    for beta in range(1, m + 1):
        if (x * beta) % m == (m - 1) % m:
            return beta
    raise GraphError(f"no inverse of {x} mod {m}")


def star_graph_tools(data) -> StarOutput:
    """Graph + splice-type equations + diagonal group action.

    data is either SeifertData or a Brieskorn exponent triple (p, q, r)."""
    if isinstance(data, SeifertData):
        seifert = SeifertData(data.central_weight,
                              tuple(a for a in data.arms if a is not None))
    else:
        p, q, r = data
        seifert = brieskorn_seifert(p, q, r)
        seifert = SeifertData(seifert.central_weight,
                              tuple(a for a in seifert.arms if a is not None))
    g = star_graph(seifert)
    an = graph_analyze(g)
    if not an.definite:
        raise GraphError("star graph is not negative definite")
    k = len(seifert.arms)
    alphas = [a for a, _ in seifert.arms]
    equations = []
    if k == 3:
        equations.append(SpliceEquation(lhs_var=0, lhs_power=alphas[0],
                                        rhs=(("-1", 1, alphas[1]), ("-1", 2, alphas[2]))))
    else:
        for j in range(k - 2):
            equations.append(SpliceEquation(
                lhs_var=j, lhs_power=alphas[j],
                rhs=((f"a{j}", k - 2, alphas[k - 2]), (f"b{j}", k - 1, alphas[k - 1]))))
    # diagonal action of H1 = coker(-M) on the arm-end variables
    M = g.intersection_matrix()
    neg = MatrixQ([[-x for x in row] for row in M.entries])
    inv = neg.inverse()
    arm_ends = []
    for i in range(k):
        ks = continued_fraction(*seifert.arms[i])
        arm_ends.append(f"a{i}_{len(ks) - 1}")
    gens = []
    for v in g.vertices:
        vi = g.index[v.id]
        vec = tuple(_mod1(inv.entries[vi][g.index[end]]) for end in arm_ends)
        if any(vec):
            gens.append((v.id, vec))
    return StarOutput(graph=g, seifert=seifert, equations=tuple(equations),
                      group_order=an.determinant, action=tuple(gens))


def _mod1(x: Fraction) -> Fraction:
    return x - (x.numerator // x.denominator)


def diagonal_group_order(action, k: int) -> int:
    """Order of the subgroup of (Q/Z)^k generated by the action vectors."""
    seen = {(Q(0),) * k}
    frontier = [(Q(0),) * k]
    vecs = [v for _, v in action]
    while frontier:
        new = []
        for x in frontier:
            for v in vecs:
                y = tuple(_mod1(a + b) for a, b in zip(x, v))
                if y not in seen:
                    seen.add(y)
                    new.append(y)
        frontier = new
    return len(seen)
