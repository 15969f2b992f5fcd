"""Command-line surface.

Exit codes: 0 success / all expectations pass, 1 expectation failure,
2 usage error, 3 budget abort.  All numeric output is exact (rationals
printed as p/q).  The environment variable CUSPCOVER_BUDGET overrides the
default Groebner budget; --budget overrides both.
"""

from __future__ import annotations

import argparse
import json
import sys
from pathlib import Path

from cuspcover.fixtures import (FixtureRunner, format_report, _rolling_from_json)
from cuspcover.gradedring import RingSections, find_generators, find_relations
from cuspcover.groebner import (Budget, BudgetExceededError, IdealBasis, MonomialOrder,
                                eliminate as gb_eliminate, groebner_basis,
                                saturate as gb_saturate)
from cuspcover.mpoly import MultiPoly, Variable
from cuspcover.sections import hilbert_table, section_space
from cuspcover.serialize import (LoadError, load_json, mpoly_from_json, mpoly_to_json,
                                 graph_from_json, qdiv_from_json)
from cuspcover.topology import (canonical_cycle, graph_analyze, semigroup_condition,
                                splice_diagram)

USAGE_ERROR = 2
BUDGET_ERROR = 3


def build_parser():
    p = argparse.ArgumentParser(prog="cuspcover",
                                description="exact section rings of root bundles on "
                                            "rational cuspidal curves")
    p.add_argument("--fixture-dir", default=None, help="fixture corpus directory")
    p.add_argument("--budget", type=int, default=None,
                   help="Groebner pair budget (also enables slow fixtures at >= 40000)")
    p.add_argument("--format", choices=("text", "json", "tsv"), default="text")
    sub = p.add_subparsers(dest="command")

    sp = sub.add_parser("sections", help="section-space dimension table for a root fixture")
    sp.add_argument("fixture")
    sp.add_argument("--range", default="0..6", help="n range, e.g. 0..5")
    sp.add_argument("--basis", action="store_true", help="print bases too")

    rp = sub.add_parser("ring", help="generators and relations of a presentation fixture")
    rp.add_argument("fixture")
    rp.add_argument("--max-degree", type=int, default=None)

    gp = sub.add_parser("pg", help="geometric genus from a root fixture")
    gp.add_argument("fixture")
    gp.add_argument("--conormal", type=int, default=1,
                    help="conormal bundle as multiple of L")

    for name in ("gb", "eliminate", "saturate"):
        ip = sub.add_parser(name, help=f"{name} on an ideal file")
        ip.add_argument("ideal")
        if name == "eliminate":
            ip.add_argument("--vars", required=True, help="comma-separated block variables")
        if name == "saturate":
            ip.add_argument("--var", default=None, help="saturate by this variable")

    grp = sub.add_parser("graph", help="resolution-graph analysis")
    grp.add_argument("fixture")

    spl = sub.add_parser("splice", help="splice diagram and semigroup condition")
    spl.add_argument("fixture")

    vp = sub.add_parser("verify", help="run one fixture's expectations")
    vp.add_argument("fixture")

    sub.add_parser("verify-all", help="run the whole fixture corpus")
    return p


def _runner(args):
    budget = Budget(pairs=args.budget) if args.budget else Budget.default()
    return FixtureRunner(fixture_dir=args.fixture_dir, budget=budget)


def _parse_range(text):
    lo, _, hi = text.partition("..")
    return int(lo), int(hi)


def cmd_sections(args):
    runner = _runner(args)
    path = runner.resolve(args.fixture)
    data = load_json(path)
    if data.get("kind") == "curve":
        # convenience: a curve fixture resolves to its first root fixture
        path = runner.default_root_for(path)
        data = load_json(path)
    if data.get("kind") != "root":
        print(f"sections needs a root fixture, got {data.get('kind')}", file=sys.stderr)
        return USAGE_ERROR
    curve, root = runner.load_root(str(path))
    lo, hi = _parse_range(args.range)
    tab = hilbert_table(curve, root, hi)
    rows = [r for r in tab.rows if lo <= r.n <= hi]
    if args.format == "json":
        print(json.dumps({"id": data.get("id"),
                          "dims": {r.n: r.dim for r in rows}}, indent=1))
    elif args.format == "tsv":
        print("n\tdim")
        for r in rows:
            print(f"{r.n}\t{r.dim}")
    else:
        print(f"{data.get('id')}: h0(nL) for n = {lo}..{hi}")
        print(",".join(str(r.dim) for r in rows))
        if args.basis:
            for r in rows:
                sp = section_space(curve, root, r.n)
                print(f"  n={r.n}: " + "; ".join(str(b) for b in sp.basis))
    return 0


def cmd_ring(args):
    runner = _runner(args)
    path = runner.resolve(args.fixture)
    data = load_json(path)
    if data.get("kind") != "presentation":
        print("ring needs a presentation fixture", file=sys.stderr)
        return USAGE_ERROR
    curve = runner.load_curve(data["curve"])
    if "root" in data:
        _, root = runner.load_root(data["root"])
        ring = RingSections(curve, root=root)
    else:
        ring = RingSections(curve, qdiv=qdiv_from_json(data["qdiv"]))
    maxdeg = args.max_degree or data["maxGeneratorDegree"]
    model = find_generators(ring, maxdeg)
    pres = find_relations(model)
    if args.format == "json":
        print(json.dumps({
            "id": data.get("id"),
            "generators": [{"name": g.name, "degree": g.degree, "form": str(g.form)}
                           for g in model.generators],
            "relationCount": pres.count(),
            "relationDegrees": list(pres.relation_degrees),
            "hilbertNumerator": [str(c) for c in pres.hilbert_numerator],
            "complete": pres.complete,
            "relations": [mpoly_to_json(r) for r in pres.relations],
        }, indent=1))
    else:
        print(f"{data.get('id')}: {len(model.generators)} generators, degrees "
              f"{list(model.degrees())}")
        for g in model.generators:
            print(f"  {g.name} (degree {g.degree}) = {g.form}")
        print(f"{pres.count()} minimal relations, degrees {list(pres.relation_degrees)}")
        print(f"complete: {pres.complete}; Hilbert numerator "
              f"{list(pres.hilbert_numerator)}")
        for r in pres.relations:
            print(f"  {r}")
    return 0


def cmd_pg(args):
    runner = _runner(args)
    path = runner.resolve(args.fixture)
    data = load_json(path)
    if data.get("kind") == "curve":
        path = runner.default_root_for(path)
        data = load_json(path)
    curve, root = runner.load_root(str(path))
    tab = hilbert_table(curve, root, 0, pg_step=args.conormal)
    if args.format == "json":
        print(json.dumps({"id": data.get("id"), "conormal": args.conormal, "pg": tab.pg}))
    else:
        print(f"p_g = {tab.pg}")
    return 0


def _load_ideal(path, budget):
    data = load_json(path)
    variables = tuple(Variable(v["name"], v.get("weight", 1)) for v in data["vars"])
    gens = [mpoly_from_json(g, source=str(path)) for g in data["gens"]]
    block = tuple(data.get("block", ()))
    return IdealBasis(gens, MonomialOrder(variables, block=block)), data


def cmd_ideal(args):
    budget = Budget(pairs=args.budget) if args.budget else Budget.default()
    ideal, data = _load_ideal(args.ideal, budget)
    if args.command == "gb":
        out = groebner_basis(ideal, budget)
    elif args.command == "eliminate":
        out = gb_eliminate(ideal, [v.strip() for v in args.vars.split(",")], budget)
    else:
        if args.var:
            f = MultiPoly.var(ideal.order.variables, args.var)
        elif "saturateBy" in data:
            f = mpoly_from_json(data["saturateBy"], source=args.ideal)
        else:
            print("saturate needs --var or a saturateBy field", file=sys.stderr)
            return USAGE_ERROR
        out = gb_saturate(ideal, f, budget)
    if args.format == "json":
        print(json.dumps({"generators": [mpoly_to_json(g) for g in out.generators]},
                         indent=1))
    else:
        for g in out.generators:
            print(g)
    return 0


def cmd_graph(args):
    runner = _runner(args)
    data = load_json(runner.resolve(args.fixture))
    g = graph_from_json(data["graph"])
    an = graph_analyze(g)
    out = {"determinant": str(an.determinant), "definite": an.definite,
           "b1": an.b1, "b2": an.b2}
    if an.definite:
        cd = canonical_cycle(g)
        out["K"] = {vid: str(c) for vid, c in cd.cycle.coefficients}
        out["K2"] = str(cd.k_squared)
        out["numericallyGorenstein"] = cd.integral
    if args.format == "json":
        print(json.dumps(out, indent=1))
    else:
        print(f"det(-M) = {out['determinant']}, definite: {out['definite']}, "
              f"b1 = {out['b1']}, b2 = {out['b2']}")
        if "K" in out:
            kstr = " ".join(f"{k}:{v}" for k, v in out["K"].items())
            print(f"K = [{kstr}], K^2 = {out['K2']}, integral: "
                  f"{out['numericallyGorenstein']}")
    return 0


def cmd_splice(args):
    runner = _runner(args)
    data = load_json(runner.resolve(args.fixture))
    g = graph_from_json(data["graph"])
    sd = splice_diagram(g)
    violations = semigroup_condition(sd)
    if args.format == "json":
        print(json.dumps({
            "nodes": list(sd.nodes), "leaves": list(sd.leaves),
            "edges": [{"v": e.v, "w": e.w, "dv": str(e.d_v),
                       "dw": str(e.d_w) if e.d_w is not None else None}
                      for e in sd.edges],
            "violations": [{"node": v.node, "toward": v.toward, "required": v.required,
                            "generators": list(v.generators)} for v in violations],
        }, indent=1))
    else:
        for e in sd.edges:
            tail = f" / {e.d_w}@{e.w}" if e.d_w is not None else f" -> leaf {e.w}"
            print(f"edge {e.v} [{e.d_v}]{tail}")
        if violations:
            for v in violations:
                print(f"semigroup violation at {v.node} toward {v.toward}: "
                      f"{v.required} not in <{', '.join(map(str, v.generators))}>")
        else:
            print("semigroup condition satisfied")
    return 0


def cmd_verify(args, all_fixtures=False):
    runner = _runner(args)
    if all_fixtures:
        report = runner.run_all()
    else:
        from cuspcover.fixtures import Report

        res = runner.run_fixture(runner.resolve(args.fixture))
        report = Report(results=[res])
    print(format_report(report, args.format))
    if any(r.status == "error" and "budget" in r.message for r in report.results):
        return BUDGET_ERROR
    return 0 if report.all_pass else 1


def main(argv=None):
    parser = build_parser()
    args = parser.parse_args(argv)
    if not args.command:
        parser.print_help()
        return USAGE_ERROR
    try:
        if args.command == "sections":
            return cmd_sections(args)
        if args.command == "ring":
            return cmd_ring(args)
        if args.command == "pg":
            return cmd_pg(args)
        if args.command in ("gb", "eliminate", "saturate"):
            return cmd_ideal(args)
        if args.command == "graph":
            return cmd_graph(args)
        if args.command == "splice":
            return cmd_splice(args)
        if args.command == "verify":
            return cmd_verify(args)
        if args.command == "verify-all":
            return cmd_verify(args, all_fixtures=True)
        parser.print_help()
        return USAGE_ERROR
    except BudgetExceededError as e:
        print(f"budget exceeded: {e}", file=sys.stderr)
        return BUDGET_ERROR
    except LoadError as e:
        print(str(e), file=sys.stderr)
        return USAGE_ERROR


if __name__ == "__main__":
    sys.exit(main())
