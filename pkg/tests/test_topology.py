"""Resolution graphs, canonical cycles, splice diagrams, star constructors."""

from fractions import Fraction as Q

import pytest

from cuspcover.topology import (GraphError, GraphVertex, ResolutionGraph, SeifertData,
                                adjunction_residuals, canonical_cycle, cf_determinant,
                                continued_fraction, diagonal_group_order,
                                edge_determinant_check, graph_analyze, laufer_durfee_sw,
                                seifert_from_star, semigroup_condition, splice_diagram,
                                star_graph_tools)
from oracles import cf_det, milnor_brieskorn, tree_det_by_contraction


def section7_graph():
    return ResolutionGraph(
        [GraphVertex("n1", -1), GraphVertex("l1a", -3), GraphVertex("l1b", -2),
         GraphVertex("n2", -7), GraphVertex("l2a", -3), GraphVertex("l2b", -3)],
        [("n1", "l1a"), ("n1", "l1b"), ("n1", "n2"), ("n2", "l2a"), ("n2", "l2b")])


def cuspprop_graph():
    vs = [GraphVertex("c", -19)]
    es = []
    for i in range(3):
        vs += [GraphVertex(f"s{i}", -1), GraphVertex(f"p{i}", -3), GraphVertex(f"q{i}", -2)]
        es += [("c", f"s{i}"), (f"s{i}", f"p{i}"), (f"s{i}", f"q{i}")]
    return ResolutionGraph(vs, es)


def test_section7_analysis():
    an = graph_analyze(section7_graph())
    assert an.determinant == 3
    assert an.definite and an.b1 == 0 and an.b2 == 6


def test_cuspprop_analysis():
    an = graph_analyze(cuspprop_graph())
    assert an.determinant == 1
    assert an.definite and an.b2 == 10


def test_determinant_vs_tree_contraction_oracle():
    g = cuspprop_graph()
    verts = {v.id: v.weight for v in g.vertices}
    assert graph_analyze(g).determinant == tree_det_by_contraction(verts, g.edges)
    g2 = section7_graph()
    verts2 = {v.id: v.weight for v in g2.vertices}
    assert graph_analyze(g2).determinant == tree_det_by_contraction(verts2, g2.edges)


def test_determinant_order_independent():
    g = section7_graph()
    shuffled = ResolutionGraph(list(reversed(g.vertices)), g.edges)
    assert graph_analyze(shuffled).determinant == graph_analyze(g).determinant


def test_indefinite_rejected_for_cycles():
    g = ResolutionGraph([GraphVertex("a", -1), GraphVertex("b", -1)],
                        [("a", "b")])
    an = graph_analyze(g)
    assert not an.definite
    with pytest.raises(GraphError):
        canonical_cycle(g)


def test_disconnected_rejected():
    with pytest.raises(GraphError):
        ResolutionGraph([GraphVertex("a", -2), GraphVertex("b", -2)], [])


def test_canonical_cycles():
    laufer = ResolutionGraph(
        [GraphVertex("E0", -1, genus=1), GraphVertex("E1", -2), GraphVertex("E2", -2)],
        [("E0", "E1"), ("E1", "E2")])
    cd = canonical_cycle(laufer)
    assert cd.cycle.as_dict() == {"E0": Q(-3), "E1": Q(-2), "E2": Q(-1)}
    assert cd.integral
    assert all(r == 0 for r in adjunction_residuals(laufer, cd))

    sec7min = ResolutionGraph(
        [GraphVertex("E0", -1, genus=1), GraphVertex("E1", -3), GraphVertex("E2", -3)],
        [("E0", "E1"), ("E0", "E2")])
    cd2 = canonical_cycle(sec7min)
    assert cd2.cycle.as_dict() == {"E0": Q(-5), "E1": Q(-2), "E2": Q(-2)}

    single = ResolutionGraph([GraphVertex("C", -2, genus=6)], [])
    assert canonical_cycle(single).cycle.as_dict() == {"C": Q(-6)}


def test_laufer_durfee():
    out = star_graph_tools((4, 3, 13))
    g = out.graph
    cd = canonical_cycle(g)
    an = graph_analyze(g)
    mu = milnor_brieskorn(4, 3, 13)
    assert mu == 72
    ld = laufer_durfee_sw(g, pg=8)
    assert ld.mu == mu
    assert cd.k_squared == 72 - 12 * 8 - an.b2 + an.b1 == -29
    assert ld.sigma == 8 * 8 - an.b2 - cd.k_squared == 88
    # rational case specialization: pg = 0 gives mu = K^2 + b2
    ld0 = laufer_durfee_sw(g, pg=0)
    assert ld0.mu == cd.k_squared + an.b2
    # predicted pg from a supplied Seiberg-Witten value: sw = pg + (K^2+r)/8
    sw = Q(8) + (cd.k_squared + an.b2) / 8
    assert laufer_durfee_sw(g, pg=8, sw=sw).predicted_pg == 8


def test_splice_diagram_section7():
    sd = splice_diagram(section7_graph())
    weights = {e.v: [] for e in sd.edges}
    n1 = [e for e in sd.edges if e.v == "n1" and e.w == "n2"]
    assert len(n1) == 1 and n1[0].d_v == 57 and n1[0].d_w == 1
    assert sorted(sd.weights_at("n1")) == [2, 3, 57]
    assert sorted(sd.weights_at("n2")) == [1, 3, 3]
    violations = semigroup_condition(sd)
    assert len(violations) == 1
    v = violations[0]
    assert v.required == 1 and tuple(sorted(set(v.generators))) == (2, 3)


def test_splice_diagram_cuspprop():
    sd = splice_diagram(cuspprop_graph())
    for e in sd.edges:
        if e.d_w is not None:
            assert {e.d_v, e.d_w} == {1, 7}
    violations = semigroup_condition(sd)
    assert len(violations) == 3
    assert all(v.required == 1 and tuple(sorted(set(v.generators))) == (2, 3)
               for v in violations)


def test_splice_rejects_genus():
    g = ResolutionGraph(
        [GraphVertex("E0", -1, genus=1), GraphVertex("E1", -3), GraphVertex("E2", -3),
         GraphVertex("E3", -3)],
        [("E0", "E1"), ("E0", "E2"), ("E0", "E3")])
    with pytest.raises(GraphError):
        splice_diagram(g)


def test_edge_determinant_identity():
    for g in (section7_graph(), cuspprop_graph()):
        sd = splice_diagram(g)
        for _, lhs, rhs in edge_determinant_check(sd):
            assert lhs == rhs
    # with a contracted chain between the nodes
    g = ResolutionGraph(
        [GraphVertex("n1", -3), GraphVertex("l1a", -2), GraphVertex("l1b", -3),
         GraphVertex("m", -5),
         GraphVertex("n2", -4), GraphVertex("l2a", -2), GraphVertex("l2b", -5)],
        [("n1", "l1a"), ("n1", "l1b"), ("n1", "m"), ("m", "n2"),
         ("n2", "l2a"), ("n2", "l2b")])
    sd = splice_diagram(g)
    checks = edge_determinant_check(sd)
    assert checks and all(lhs == rhs for _, lhs, rhs in checks)


def test_one_node_stars_satisfy_semigroup():
    for pqr in ((4, 3, 13), (4, 3, 16), (2, 3, 5)):
        sd = splice_diagram(star_graph_tools(pqr).graph)
        assert semigroup_condition(sd) == []


def test_star_4_3_13():
    out = star_graph_tools((4, 3, 13))
    assert out.group_order == 1
    weights = sorted((v.id, v.weight) for v in out.graph.vertices)
    assert ("a0_0", -13) in weights and ("a1_0", -4) in weights
    assert seifert_from_star(out.graph) == SeifertData(1, ((3, 2), (4, 1), (13, 1)))


def test_star_4_3_16_action():
    out = star_graph_tools((4, 3, 16))
    assert out.group_order == 4
    sd = splice_diagram(out.graph)
    assert sorted(int(e.d_v) for e in sd.edges) == [3, 4, 16]
    # cut-off determinants by the continued-fraction oracle
    assert cf_det([16]) == 16 and cf_det([4]) == 4 and cf_det([2, 2]) == 3
    # the paper action 1/4(3,4,1) on (xi, eta, zeta) ~ arms (4, 3, 16)
    vecs = {v for _, v in out.action}
    assert (Q(1, 4), Q(3, 4), Q(0)) in vecs  # arms ordered (16, 4, 3)
    assert len(out.equations) == 1
    eq = out.equations[0]
    assert eq.lhs_power == 16 and sorted(p for _, _, p in eq.rhs) == [3, 4]


def test_star_yomdin_k2():
    sf = SeifertData(2, ((10, 1), (2, 1), (3, 2), (3, 2)))
    out = star_graph_tools(sf)
    assert out.group_order == 12
    assert diagonal_group_order(out.action, 4) == 12
    powers = {(e.lhs_power, tuple(sorted(p for _, _, p in e.rhs))) for e in out.equations}
    assert powers == {(10, (3, 3)), (2, (3, 3))}
    # paper generators [-i,-1,-1,i] and [-1,eps^2,eps,-1] on (10,3,3,2) arms;
    # our arm order is (10,2,3,3)
    def group(vecs):
        seen = {(Q(0),) * 4}
        frontier = [(Q(0),) * 4]
        while frontier:
            new = []
            for x in frontier:
                for v in vecs:
                    y = tuple((a + b) - int(a + b) for a, b in zip(x, v))
                    if y not in seen:
                        seen.add(y)
                        new.append(y)
            frontier = new
        return seen

    G = group([v for _, v in out.action])
    assert (Q(3, 4), Q(1, 4), Q(1, 2), Q(1, 2)) in G
    assert (Q(1, 2), Q(1, 2), Q(2, 3), Q(1, 3)) in G


def test_star_reanalysis_roundtrip():
    for data in (SeifertData(1, ((13, 1), (4, 1), (3, 2))),
                 SeifertData(2, ((2, 1), (3, 2), (5, 4)))):
        out = star_graph_tools(data)
        assert graph_analyze(out.graph).definite
        assert seifert_from_star(out.graph) == SeifertData(
            data.central_weight, tuple(sorted(data.arms)))


def test_continued_fractions():
    assert continued_fraction(3, 2) == [2, 2]
    assert continued_fraction(7, 3) == [3, 2, 2]
    assert cf_determinant([3, 2, 2]) == 7 == cf_det([3, 2, 2])
