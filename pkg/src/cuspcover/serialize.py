"""JSON (de)serialization for every data file format.

Rationals travel as "p/q" or "p" strings; BinaryForm as {"degree", "coeffs"};
MultiPoly as {"vars": [{"name", "weight"}], "terms": [{"exp", "c"}]}.  Loaders
raise located diagnostics (file, path, reason) on malformed input.
"""

from __future__ import annotations

import json
from fractions import Fraction
from pathlib import Path

from cuspcover.binforms import BinaryForm
from cuspcover.curves import ParamCurve
from cuspcover.mpoly import MultiPoly, Variable
from cuspcover.sections import QDivisor, RootBundleData
from cuspcover.topology import GraphVertex, ResolutionGraph


class LoadError(ValueError):
    def __init__(self, source, path, reason):
        self.source = source
        self.path = path
        self.reason = reason
        super().__init__(f"{source}: at {path}: {reason}")


def rational_to_json(x: Fraction) -> str:
    return str(x)


def rational_from_json(s, source="<data>", path="") -> Fraction:
    try:
        return Fraction(str(s))
    except (ValueError, ZeroDivisionError) as e:
        raise LoadError(source, path, f"bad rational {s!r}: {e}")


def bform_to_json(f: BinaryForm) -> dict:
    return {"degree": f.degree, "coeffs": [str(c) for c in f.coeffs]}


def bform_from_json(d, source="<data>", path="") -> BinaryForm:
    if not isinstance(d, dict) or "degree" not in d or "coeffs" not in d:
        raise LoadError(source, path, "binary form needs 'degree' and 'coeffs'")
    coeffs = [rational_from_json(c, source, f"{path}.coeffs[{i}]")
              for i, c in enumerate(d["coeffs"])]
    try:
        return BinaryForm(int(d["degree"]), coeffs)
    except ValueError as e:
        raise LoadError(source, path, str(e))


def mpoly_to_json(p: MultiPoly) -> dict:
    return {
        "vars": [{"name": v.name, "weight": v.weight} for v in p.vars],
        "terms": [{"exp": list(e), "c": str(c)} for e, c in p.sorted_terms()],
    }


def mpoly_from_json(d, source="<data>", path="") -> MultiPoly:
    try:
        vs = tuple(Variable(v["name"], int(v.get("weight", 1))) for v in d["vars"])
        terms = {}
        for i, t in enumerate(d["terms"]):
            exp = tuple(int(e) for e in t["exp"])
            terms[exp] = terms.get(exp, Fraction(0)) + rational_from_json(
                t["c"], source, f"{path}.terms[{i}].c")
        return MultiPoly(vs, terms)
    except (KeyError, TypeError, ValueError) as e:
        raise LoadError(source, path, f"bad polynomial: {e}")


def curve_to_json(c: ParamCurve) -> dict:
    return {"name": c.name, "coords": [bform_to_json(f) for f in c.coords],
            "notes": c.notes}


def curve_from_json(d, source="<curve>") -> ParamCurve:
    if "coords" not in d:
        raise LoadError(source, "coords", "missing coordinates")
    coords = [bform_from_json(f, source, f"coords[{i}]") for i, f in enumerate(d["coords"])]
    try:
        return ParamCurve(d.get("name", "unnamed"), coords, d.get("notes", ""))
    except ValueError as e:
        raise LoadError(source, "coords", str(e))


def root_to_json(r: RootBundleData) -> dict:
    return {"rho": r.rho, "aUnits": r.a_units, "kappa": r.kappa,
            "keyForm": bform_to_json(r.key_form)}


def root_from_json(d, source="<root>") -> RootBundleData:
    for k in ("rho", "aUnits", "kappa", "keyForm"):
        if k not in d:
            raise LoadError(source, k, "missing root-data field")
    return RootBundleData(rho=int(d["rho"]), a_units=int(d["aUnits"]),
                          kappa=int(d["kappa"]),
                          key_form=bform_from_json(d["keyForm"], source, "keyForm"))


def qdiv_to_json(q: QDivisor) -> dict:
    return {"parts": [{"support": bform_to_json(s), "coeff": str(c)} for s, c in q.parts]}


def qdiv_from_json(d, source="<qdiv>") -> QDivisor:
    parts = []
    for i, p in enumerate(d.get("parts", [])):
        supp = bform_from_json(p["support"], source, f"parts[{i}].support")
        coeff = rational_from_json(p["coeff"], source, f"parts[{i}].coeff")
        parts.append((supp, coeff))
    return QDivisor(parts=tuple(parts))


def graph_to_json(g: ResolutionGraph) -> dict:
    return {
        "vertices": [{"id": v.id, "weight": v.weight, "genus": v.genus}
                     for v in g.vertices],
        "edges": [[a, b] for a, b in g.edges],
    }


def graph_from_json(d, source="<graph>") -> ResolutionGraph:
    try:
        vertices = [GraphVertex(id=str(v["id"]), weight=int(v["weight"]),
                                genus=int(v.get("genus", 0)))
                    for v in d["vertices"]]
        edges = [(str(a), str(b)) for a, b in d["edges"]]
        return ResolutionGraph(vertices, edges)
    except (KeyError, TypeError) as e:
        raise LoadError(source, "graph", f"malformed graph: {e}")
    except ValueError as e:
        raise LoadError(source, "graph", str(e))


def load_json(path) -> dict:
    p = Path(path)
    try:
        with open(p) as fh:
            return json.load(fh)
    except FileNotFoundError:
        raise LoadError(str(p), "", "file not found")
    except json.JSONDecodeError as e:
        raise LoadError(str(p), f"line {e.lineno}", f"invalid JSON: {e.msg}")


def dump_json(path, data):
    p = Path(path)
    p.parent.mkdir(parents=True, exist_ok=True)
    with open(p, "w") as fh:
        json.dump(data, fh, indent=1)
        fh.write("\n")
