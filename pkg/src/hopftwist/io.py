"""JSON (de)serialization of algebras, cocycles, polynomials and reports."""

from __future__ import annotations

import json
from pathlib import Path

from .arith import RatExpr, as_ratexpr, format_rational, parse, register_variables
from .errors import ParseError
from .hopf import CoalgebraData, HopfData, LinMap, TensorElt
from .identities import FreePoly
from .twist import Cocycle, SigmaTable


def coeff_str(v) -> str:
    v = as_ratexpr(v)
    if v.is_constant():
        return format_rational(v.constant_value())
    return str(v)


def _coeff(v):
    if isinstance(v, str):
        return parse(v)
    return as_ratexpr(v)


def load_json(path):
    try:
        return json.loads(Path(path).read_text())
    except json.JSONDecodeError as exc:
        raise ParseError(f"{path}: invalid JSON ({exc.msg} at line {exc.lineno})") from exc


def dumps(obj) -> str:
    """Canonical JSON: sorted keys, two-space indent, trailing newline."""
    return json.dumps(obj, sort_keys=True, indent=2, ensure_ascii=False) + "\n"


# -- Hopf algebras ------------------------------------------------------------


def hopf_from_json(data: dict):
    """``HopfData``, or ``CoalgebraData`` when no product is given."""
    try:
        labels = data["basis"]
        dim = data.get("dim", len(labels))
        if dim != len(labels):
            raise ParseError("dim does not match the number of basis labels")
        params = data.get("params", [])
        register_variables(f"t_{lab}" for lab in labels)
        register_variables(params)
        delta = []
        for entry in data["delta"]:
            for p, q, c in entry["terms"]:
                delta.append((entry["of"], p, q, _coeff(c)))
        counit = [_coeff(c) for c in data["counit"]]
        coalg = CoalgebraData(labels, delta, counit, name=data.get("name"), params=params)
        if "mult" not in data:
            return coalg
        mult = []
        for entry in data["mult"]:
            for i, c in entry["terms"]:
                mult.append((entry["left"], entry["right"], i, _coeff(c)))
        unit = [_coeff(c) for c in data["unit"]]
        antipode = [[_coeff(c) for c in row] for row in data["antipode"]]
    except (KeyError, TypeError, ValueError) as exc:
        if isinstance(exc, ParseError):
            raise
        raise ParseError(f"malformed Hopf algebra JSON: {exc}") from exc
    return HopfData(coalg, mult, unit, antipode, name=data.get("name"))


def hopf_to_json(h) -> dict:
    coalg = h.coalg if isinstance(h, HopfData) else h
    out = {
        "name": coalg.name,
        "dim": coalg.dim,
        "basis": list(coalg.labels),
        "counit": [coeff_str(v) for v in coalg.counit],
        "delta": [
            {"of": i, "terms": [[p, q, coeff_str(c)] for p, q, c in coalg.delta[i]]} for i in range(coalg.dim)
        ],
        "params": list(coalg.params),
    }
    if isinstance(h, HopfData):
        out["mult"] = [
            {"left": p, "right": q, "terms": [[i, coeff_str(c)] for i, c in h.mult[p][q]]}
            for p in range(h.dim)
            for q in range(h.dim)
            if h.mult[p][q]
        ]
        out["unit"] = [coeff_str(v) for v in h.unit]
        out["antipode"] = [[coeff_str(v) for v in row] for row in h.antipode]
    return out


# -- cocycles, maps, tensors ---------------------------------------------------


def matrix_to_json(m):
    return [[coeff_str(v) for v in row] for row in m]


def cocycle_from_json(data: dict, hopf: HopfData) -> Cocycle:
    try:
        values = data["values"]
    except (KeyError, TypeError) as exc:
        raise ParseError("cocycle JSON needs a 'values' matrix") from exc
    if len(values) != hopf.dim or any(len(r) != hopf.dim for r in values):
        raise ParseError(f"cocycle matrix must be {hopf.dim}x{hopf.dim}")
    return Cocycle(hopf, [[_coeff(v) for v in row] for row in values])


def cocycle_to_json(c: Cocycle, hopf_ref=None) -> dict:
    return {"hopf": hopf_ref if hopf_ref is not None else c.hopf.name, "values": matrix_to_json(c.values)}


def linmap_from_json(data, coalg) -> LinMap:
    """Either a list of values or ``{"values": [...]}`` or ``{label: value}``."""
    if isinstance(data, dict) and "values" in data:
        data = data["values"]
    if isinstance(data, dict):
        vals = [_coeff(data.get(lab, 0)) for lab in coalg.labels]
    else:
        vals = [_coeff(v) for v in data]
    if len(vals) != coalg.dim:
        raise ParseError(f"linear map needs {coalg.dim} values")
    return LinMap(coalg, vals)


def linmap_to_json(f: LinMap) -> dict:
    return {lab: coeff_str(v) for lab, v in zip(f.domain.labels, f.values)}


def tensor_to_json(e: TensorElt) -> dict:
    return {lab: coeff_str(v) for lab, v in zip(e.labels, e.coords) if not v.is_zero()}


def vector_to_json(labels, v) -> dict:
    return {lab: coeff_str(x) for lab, x in zip(labels, v) if not as_ratexpr(x).is_zero()}


# -- polynomials ---------------------------------------------------------------


def freepoly_from_json(data: dict, dim: int) -> FreePoly:
    try:
        terms = {}
        for t in data["terms"]:
            w = tuple(int(i) for i in t["word"])
            if any(not 0 <= i < dim for i in w):
                raise ParseError(f"word {list(w)} uses a basis index outside 0..{dim - 1}")
            c = _coeff(t.get("coeff", "1"))
            terms[w] = terms[w] + c if w in terms else c
    except (KeyError, TypeError) as exc:
        raise ParseError(f"malformed polynomial JSON: {exc}") from exc
    return FreePoly(terms)


def freepoly_to_json(p: FreePoly) -> dict:
    items = sorted(p.terms.items(), key=lambda wc: (len(wc[0]), wc[0]))
    return {"terms": [{"coeff": coeff_str(c), "word": list(w)} for w, c in items]}


# -- σ tables and assignments --------------------------------------------------------


def sigma_to_json(s: SigmaTable) -> dict:
    return {
        "hopf": hopf_to_json(s.hopf),
        "alpha": matrix_to_json(s.alpha.values),
        "sigma": matrix_to_json(s.sigma.values),
        "sigmaInv": matrix_to_json(s.sigma_inv.values),
    }


def sigma_from_json(data: dict) -> SigmaTable:
    h = hopf_from_json(data["hopf"])
    if not isinstance(h, HopfData):
        raise ParseError("σ table needs a Hopf algebra")
    alpha = Cocycle(h, [[_coeff(v) for v in r] for r in data["alpha"]])
    sigma = Cocycle(h, [[_coeff(v) for v in r] for r in data["sigma"]])
    sigma_inv = Cocycle(h, [[_coeff(v) for v in r] for r in data["sigmaInv"]])
    return SigmaTable(h, alpha, None, sigma, sigma_inv, None)


def assignment_from_json(data: dict) -> dict:
    out = {}
    for k, v in data.items():
        r = _coeff(v)
        if not r.is_constant():
            raise ParseError(f"assignment for {k} must be a rational number")
        out[k] = r.constant_value()
    return out


def ratexpr(v) -> RatExpr:
    return _coeff(v)
