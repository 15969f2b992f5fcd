"""Fixture corpus: loading, expectation checking, and the verify-all report.

Fixtures are plain JSON data under fixtures/{curves,roots,graphs,
presentations,identities}; every expectation carries a provenance string.
The report is deterministic (fixtures sorted by id) apart from timing.
"""

from __future__ import annotations

import os
import time
from dataclasses import dataclass, field
from fractions import Fraction
from pathlib import Path
from typing import Optional

from cuspcover.binforms import BinaryForm
from cuspcover.curves import ParamCurve
from cuspcover.gradedring import (Generator, GradedRingModel, Presentation, RingSections,
                                  RollingFactorsData, find_generators, find_relations,
                                  rolling_factors, verify_presentation, _product_span)
from cuspcover.groebner import (Budget, BudgetExceededError, IdealBasis, MonomialOrder,
                                groebner_basis, normal_form)
from cuspcover.linalg import span_echelon, span_membership, span_quotient
from cuspcover.mpoly import MultiPoly, Variable, mpoly_subst
from cuspcover.sections import (QDivisor, RootBundleData, hilbert_table, section_space,
                                verify_root_data)
from cuspcover.serialize import (LoadError, bform_from_json, curve_from_json,
                                 graph_from_json, load_json, mpoly_from_json,
                                 qdiv_from_json, rational_from_json, root_from_json)
from cuspcover.topology import (SeifertData, brieskorn_seifert, canonical_cycle,
                                graph_analyze, laufer_durfee_sw, seifert_from_star,
                                semigroup_condition, splice_diagram, star_graph)

SLOW_BUDGET_THRESHOLD = 40000


def default_fixture_dir() -> Path:
    env = os.environ.get("CUSPCOVER_FIXTURES")
    if env:
        return Path(env)
    here = Path(__file__).resolve()
    for parent in (Path.cwd(),) + tuple(here.parents):
        cand = parent / "fixtures"
        if cand.is_dir():
            return cand
    return Path("fixtures")


@dataclass
class CheckResult:
    check: str
    passed: bool
    expected: object
    measured: object
    provenance: str


@dataclass
class FixtureResult:
    fixture_id: str
    kind: str
    status: str  # pass | fail | skip | error
    checks: list[CheckResult] = field(default_factory=list)
    seconds: float = 0.0
    message: str = ""


@dataclass
class Report:
    results: list[FixtureResult]

    @property
    def all_pass(self) -> bool:
        return all(r.status in ("pass", "skip") for r in self.results)

    def count(self, status):
        return sum(1 for r in self.results if r.status == status)


class FixtureRunner:
    """Evaluates fixture expectations against the engine, caching heavy results."""

    def __init__(self, fixture_dir: Optional[Path] = None, budget: Optional[Budget] = None):
        self.dir = Path(fixture_dir) if fixture_dir else default_fixture_dir()
        self.budget = budget or Budget.default()
        self._curves: dict[str, ParamCurve] = {}
        self._roots: dict[str, RootBundleData] = {}
        self._presentations: dict[str, tuple] = {}

    # -- loading -----------------------------------------------------------

    def fixture_files(self):
        return sorted(self.dir.rglob("*.json"), key=lambda p: p.name)

    def corpus(self):
        """Enumerate fixture descriptors by kind."""
        out = {"curve": [], "root": [], "graph": [], "presentation": [], "identity": []}
        for path in self.fixture_files():
            data = load_json(path)
            kind = data.get("kind")
            if kind in out:
                out[kind].append((data.get("id", path.stem), path))
        return out

    def _ref_path(self, ref) -> Path:
        p = self.dir / ref
        if p.is_file():
            return p
        p = Path(ref)
        if p.is_file():
            return p
        raise LoadError(str(ref), "", "file not found")

    def load_curve(self, ref: str) -> ParamCurve:
        key = str(self._ref_path(ref).resolve())
        if key not in self._curves:
            data = load_json(key)
            self._curves[key] = curve_from_json(data["curve"], source=str(ref))
        return self._curves[key]

    def load_root(self, ref: str):
        key = str(self._ref_path(ref).resolve())
        if key not in self._roots:
            data = load_json(key)
            curve = self.load_curve(data["curve"])
            root = verify_root_data(curve, root_from_json(data["root"], source=str(ref)))
            self._roots[key] = (curve, root)
        return self._roots[key]

    def default_root_for(self, curve_path: Path):
        """First root fixture (by id) whose curve reference resolves to this curve."""
        target = curve_path.resolve()
        candidates = []
        for path in self.fixture_files():
            data = load_json(path)
            if data.get("kind") != "root":
                continue
            try:
                ref = self._ref_path(data["curve"]).resolve()
            except LoadError:
                continue
            if ref == target:
                candidates.append((data.get("id", path.stem), path))
        if not candidates:
            raise LoadError(str(curve_path), "", "no root fixture references this curve")
        return sorted(candidates)[0][1]

    def resolve(self, name: str) -> Path:
        """Resolve a fixture path or bare id against the corpus directories."""
        p = Path(name)
        if p.is_file():
            return p
        cand = self.dir / name
        if cand.is_file():
            return cand
        stem = Path(name).stem
        for f in self.fixture_files():
            if f.stem == stem:
                return f
        raise LoadError(name, "", "fixture not found")

    # -- running -----------------------------------------------------------

    def run_fixture(self, path: Path) -> FixtureResult:
        t0 = time.time()
        data = load_json(path)
        fid = data.get("id", path.stem)
        kind = data.get("kind", "?")
        if data.get("slow") and self.budget.pairs < SLOW_BUDGET_THRESHOLD:
            return FixtureResult(fixture_id=fid, kind=kind, status="skip",
                                 message="slow fixture; raise --budget to run",
                                 seconds=time.time() - t0)
        try:
            checks = self._dispatch(data, path)
            status = "pass" if all(c.passed for c in checks) else "fail"
            return FixtureResult(fixture_id=fid, kind=kind, status=status, checks=checks,
                                 seconds=time.time() - t0)
        except BudgetExceededError as e:
            return FixtureResult(fixture_id=fid, kind=kind, status="error",
                                 message=f"budget exceeded: {e}", seconds=time.time() - t0)
        except LoadError as e:
            return FixtureResult(fixture_id=fid, kind=kind, status="error",
                                 message=str(e), seconds=time.time() - t0)

    def run_all(self) -> Report:
        results = [self.run_fixture(p) for p in self.fixture_files()]
        results.sort(key=lambda r: r.fixture_id)
        return Report(results=results)

    # -- dispatch ----------------------------------------------------------

    def _dispatch(self, data, path) -> list[CheckResult]:
        kind = data.get("kind")
        if kind == "curve":
            return self._run_curve(data, path)
        if kind == "root":
            return self._run_root(data, path)
        if kind == "graph":
            return self._run_graph(data, path)
        if kind == "presentation":
            return self._run_presentation(data, path)
        if kind == "identity":
            return self._run_identity(data, path)
        raise LoadError(str(path), "kind", f"unknown fixture kind {kind!r}")

    def _run_curve(self, data, path):
        curve = curve_from_json(data["curve"], source=str(path))
        out = []
        for exp in data.get("expectations", []):
            check = exp["check"]
            if check == "cusps":
                measured = [{"point": {"degree": c.point.degree,
                                       "coeffs": [str(x) for x in c.point.coeffs]},
                             "semigroup": list(c.semigroup), "delta": c.delta,
                             "conductor": c.conductor} for c in curve.cusp_analysis()]
                ok = measured == exp["expected"]
            elif check == "genus":
                measured = curve.arithmetic_genus()
                ok = measured == exp["expected"]
            elif check == "span-dim":
                measured = curve.coordinate_span(exp["m"]).dim
                ok = measured == exp["expected"]
            elif check == "equation-vanishes":
                eq = mpoly_from_json(exp["equation"], source=str(path))
                bind = {v.name: curve.coords[i] for i, v in enumerate(eq.vars)}
                res = mpoly_subst(eq, bind)
                measured = res.is_zero()
                ok = measured == exp["expected"]
            else:
                raise LoadError(str(path), check, "unknown curve check")
            out.append(CheckResult(check, ok, exp["expected"], measured, exp["provenance"]))
        return out

    def _run_root(self, data, path):
        curve = self.load_curve(data["curve"])
        root = root_from_json(data["root"], source=str(path))
        out = []
        verified = None
        for exp in data.get("expectations", []):
            check = exp["check"]
            if check == "verified":
                try:
                    verified = verify_root_data(curve, root)
                    measured = verified.verified
                except Exception as e:
                    measured = f"rejected: {e}"
                ok = measured == exp["expected"]
            else:
                if verified is None:
                    verified = verify_root_data(curve, root)
                if check == "dims":
                    lo, hi = exp["range"]
                    tab = hilbert_table(curve, verified, hi)
                    measured = [r.dim for r in tab.rows if lo <= r.n <= hi]
                    ok = measured == exp["expected"]
                elif check == "basis":
                    sp = section_space(curve, verified, exp["n"])
                    measured = [{"degree": b.degree, "coeffs": [str(c) for c in b.coeffs]}
                                for b in sp.basis]
                    ok = measured == exp["expected"]
                elif check == "pg":
                    tab = hilbert_table(curve, verified, 0, pg_step=exp["step"])
                    measured = tab.pg
                    ok = measured == exp["expected"]
                else:
                    raise LoadError(str(path), check, "unknown root check")
            out.append(CheckResult(check, ok, exp["expected"], measured, exp["provenance"]))
        return out

    def _run_graph(self, data, path):
        graph = graph_from_json(data["graph"], source=str(path))
        analysis = graph_analyze(graph)
        out = []
        for exp in data.get("expectations", []):
            check = exp["check"]
            if check == "determinant":
                measured = str(analysis.determinant)
                ok = measured == exp["expected"]
            elif check == "definite":
                measured = analysis.definite
                ok = measured == exp["expected"]
            elif check == "b1":
                measured = analysis.b1
                ok = measured == exp["expected"]
            elif check == "b2":
                measured = analysis.b2
                ok = measured == exp["expected"]
            elif check == "canonical-cycle":
                cd = canonical_cycle(graph)
                measured = {vid: str(c) for vid, c in cd.cycle.coefficients}
                ok = measured == exp["expected"]
            elif check == "k-squared":
                cd = canonical_cycle(graph)
                measured = str(cd.k_squared)
                ok = measured == exp["expected"]
            elif check == "laufer-mu":
                ld = laufer_durfee_sw(graph, exp["expected"]["pg"])
                measured = {"pg": exp["expected"]["pg"], "mu": str(ld.mu)}
                ok = measured == exp["expected"]
            elif check == "splice-weights":
                sd = splice_diagram(graph)
                measured = {n: [str(w) for w in sorted(sd.weights_at(n))]
                            for n in exp["expected"]}
                ok = measured == exp["expected"]
            elif check == "semigroup-violations":
                sd = splice_diagram(graph)
                measured = [{"node": v.node, "required": v.required,
                             "generators": sorted(set(v.generators))}
                            for v in semigroup_condition(sd)]
                ok = measured == exp["expected"]
            elif check == "brieskorn":
                p, q, r = exp["expected"]
                built = star_graph(brieskorn_seifert(p, q, r))
                measured = seifert_from_star(built) == seifert_from_star(graph)
                ok = measured is True
            elif check == "seifert":
                sf = seifert_from_star(graph)
                measured = {"central": sf.central_weight,
                            "arms": sorted([list(a) for a in sf.arms])}
                ok = measured == exp["expected"]
            else:
                raise LoadError(str(path), check, "unknown graph check")
            out.append(CheckResult(check, ok, exp["expected"], measured, exp["provenance"]))
        return out

    def _presentation_results(self, data, path):
        key = str(path)
        if key in self._presentations:
            return self._presentations[key]
        curve = self.load_curve(data["curve"])
        if "root" in data:
            _, root = self.load_root(data["root"])
            ring = RingSections(curve, root=root)
        else:
            qdiv = qdiv_from_json(data["qdiv"], source=str(path))
            ring = RingSections(curve, qdiv=qdiv)
        model = find_generators(ring, data["maxGeneratorDegree"])
        pres = find_relations(model)
        self._presentations[key] = (curve, ring, model, pres)
        return self._presentations[key]

    def _run_presentation(self, data, path):
        curve, ring, model, pres = self._presentation_results(data, path)
        out = []
        for exp in data.get("expectations", []):
            check = exp["check"]
            if check == "generator-degrees":
                measured = list(model.degrees())
                ok = measured == exp["expected"]
            elif check == "relation-count":
                measured = pres.count()
                ok = measured == exp["expected"]
            elif check == "relation-degrees":
                measured = list(pres.relation_degrees)
                ok = measured == exp["expected"]
            elif check == "palindromic":
                measured = pres.numerator_palindromic()
                ok = measured == exp["expected"]
            elif check == "complete":
                measured = pres.complete
                ok = measured == exp["expected"]
            elif check == "paper-generators-span":
                measured = self._paper_generator_match(data, ring, model, path)
                ok = measured == exp["expected"]
            elif check == "rolling-vanishes":
                measured = self._rolling_vanishes(data, exp["phi"], path)
                ok = measured == exp["expected"]
            elif check == "relation-matches":
                target = mpoly_from_json(data["expectedRelation"], source=str(path))
                measured = _relation_matches(pres, target)
                ok = measured == exp["expected"]
            elif check == "dims":
                lo, hi = exp["range"]
                measured = [ring.dim(n) for n in range(lo, hi + 1)]
                ok = measured == exp["expected"]
            else:
                raise LoadError(str(path), check, "unknown presentation check")
            out.append(CheckResult(check, ok, exp["expected"], measured, exp["provenance"]))
        return out

    def _paper_generator_match(self, data, ring, model, path):
        """The recorded generator forms must be a valid minimal generating choice:
        per degree, sections that complete the products of lower degrees to the
        full graded piece, in matching number."""
        gens = [(g["name"], g["degree"], bform_from_json(g["form"], source=str(path)))
                for g in data.get("paperGenerators", [])]
        by_degree: dict[int, list] = {}
        for name, d, f in gens:
            by_degree.setdefault(d, []).append(f)
        mine: dict[int, int] = {}
        for g in model.generators:
            mine[g.degree] = mine.get(g.degree, 0) + 1
        if {d: len(v) for d, v in by_degree.items()} != mine:
            return False
        paper_gens: list[Generator] = []
        idx = 0
        for d in sorted(by_degree):
            for f in by_degree[d]:
                target = ring.basis(d)
                if not span_membership(f, list(target)):
                    return False
                paper_gens.append(Generator(name=f"p{idx}", degree=d, form=f))
                idx += 1
        # per degree: products of lower-degree paper generators plus the paper
        # generators of this degree must span the full graded piece
        for d in sorted(by_degree):
            lower = [g for g in paper_gens if g.degree < d]
            prods = _product_span(lower, d)
            span = prods + [g.form for g in paper_gens if g.degree == d]
            if len(span_echelon(span)) != ring.dim(d):
                return False
        return True

    def _rolling_vanishes(self, data, phi_key, path):
        rdata = _rolling_from_json(data["rolling"], source=str(path))
        phi_json = data.get("phis", {}).get(phi_key)
        phi = mpoly_from_json(phi_json, source=str(path)) if phi_json else None
        res = rolling_factors(rdata, phi)
        bindings = {g["name"]: bform_from_json(g["form"], source=str(path))
                    for g in data["paperGenerators"]}
        rep = verify_presentation(bindings, list(res.minors) + list(res.rolled))
        return rep.all_zero

    def _run_identity(self, data, path):
        out = []
        for exp in data.get("expectations", []):
            check = exp["check"]
            if check in ("all-zero", "zero-pattern"):
                eqs = [mpoly_from_json(e, source=str(path)) for e in data["equations"]]
                bindings = {k: bform_from_json(v, source=str(path))
                            for k, v in data["bindings"].items()}
                rep = verify_presentation(bindings, eqs)
                if check == "all-zero":
                    measured = rep.all_zero
                else:
                    failed = {i for i, _ in rep.failures}
                    measured = [i not in failed for i in range(len(eqs))]
                ok = measured == exp["expected"]
            elif check == "subst-matches":
                poly = mpoly_from_json(data["subst"]["poly"], source=str(path))
                bindings = {k: mpoly_from_json(v, source=str(path))
                            for k, v in data["subst"]["bindings"].items()}
                res = mpoly_subst(poly, bindings)
                target = mpoly_from_json(data["expected"], source=str(path))
                measured = res == target
                ok = measured == exp["expected"]
            elif check == "rolling-vanishes":
                rdata = _rolling_from_json(data["rolling"], source=str(path))
                res = rolling_factors(rdata, None)
                bindings = {k: bform_from_json(v, source=str(path))
                            for k, v in data["bindings"].items()}
                rep = verify_presentation(bindings, list(res.minors) + list(res.rolled))
                measured = rep.all_zero
                ok = measured == exp["expected"]
            elif check in ("ideal-member", "ideal-non-member"):
                measured = self._ideal_membership(data, check, path)
                ok = measured == exp["expected"]
            else:
                raise LoadError(str(path), check, "unknown identity check")
            out.append(CheckResult(check, ok, exp["expected"], measured, exp["provenance"]))
        return out

    def _ideal_membership(self, data, which, path):
        pres_data = load_json(self.dir / data["presentation"])
        rdata = _rolling_from_json(pres_data["rolling"], source=str(path))
        phi = mpoly_from_json(pres_data["phis"][data["phi"]], source=str(path))
        res = rolling_factors(rdata, phi)
        gens = list(res.minors) + list(res.rolled)
        order = MonomialOrder(rdata.variables)
        gb = groebner_basis(IdealBasis(gens, order), self.budget)
        key = "member" if which == "ideal-member" else "nonMember"
        p = mpoly_from_json(data[key], source=str(path))
        nf = normal_form(p, gb.generators, order, self.budget)
        return nf.is_zero() if which == "ideal-member" else not nf.is_zero()


def _rolling_from_json(d, source="<rolling>") -> RollingFactorsData:
    variables = tuple(Variable(v["name"], v.get("weight", 1)) for v in d["variables"])
    top = tuple(mpoly_from_json(p, source) for p in d["top"])
    bottom = tuple(mpoly_from_json(p, source) for p in d["bottom"])
    base = tuple((mpoly_from_json(bt["coeff"], source), tuple(bt["slots"]))
                 for bt in d["baseTerms"])
    return RollingFactorsData(variables=variables, top=top, bottom=bottom,
                              base_terms=base, n_transitions=d["transitions"],
                              phi_slot=tuple(d["phiSlot"]))


def _relation_matches(pres: Presentation, target: MultiPoly) -> bool:
    """Some relation equals the target up to a nonzero rational scalar (after
    aligning variables by position)."""
    for r in pres.relations:
        if len(r.vars) != len(target.vars):
            continue
        rt = {e: c for e, c in r.terms.items()}
        tt = {e: c for e, c in target.terms.items()}
        if set(rt) != set(tt):
            continue
        e0 = next(iter(rt))
        lam = rt[e0] / tt[e0]
        if all(rt[e] == lam * tt[e] for e in rt):
            return True
    return False


def format_report(report: Report, fmt: str = "text") -> str:
    if fmt == "json":
        import json

        return json.dumps({
            "allPass": report.all_pass,
            "results": [{
                "id": r.fixture_id, "kind": r.kind, "status": r.status,
                "seconds": round(r.seconds, 3), "message": r.message,
                "checks": [{"check": c.check, "passed": c.passed,
                            "expected": c.expected, "measured": c.measured,
                            "provenance": c.provenance} for c in r.checks],
            } for r in report.results],
        }, indent=1, default=str)
    lines = []
    if fmt == "tsv":
        lines.append("id\tkind\tstatus\tseconds\tfailed_checks")
        for r in report.results:
            failed = ";".join(c.check for c in r.checks if not c.passed)
            lines.append(f"{r.fixture_id}\t{r.kind}\t{r.status}\t{r.seconds:.3f}\t{failed}")
        return "\n".join(lines)
    for r in report.results:
        mark = {"pass": "ok", "fail": "FAIL", "skip": "skip", "error": "ERROR"}[r.status]
        lines.append(f"[{mark:5s}] {r.fixture_id} ({r.kind}, {r.seconds:.2f}s)"
                     + (f" {r.message}" if r.message else ""))
        for c in r.checks:
            if not c.passed:
                lines.append(f"         {c.check}: expected {c.expected!r}, "
                             f"measured {c.measured!r}")
    lines.append(f"total: {len(report.results)}  pass: {report.count('pass')}  "
                 f"fail: {report.count('fail')}  skip: {report.count('skip')}  "
                 f"error: {report.count('error')}")
    return "\n".join(lines)
