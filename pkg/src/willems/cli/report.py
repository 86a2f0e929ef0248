"""JSON and plain-text rendering of results.  Exact numbers are always strings."""
import json

from ..core.poly import ModuleElement, Poly, format_element, format_poly

SCHEMA = "willems-report/1"


def poly_text(p):
    if isinstance(p, ModuleElement):
        return format_element(p) if p.q > 1 else format_poly(p.as_poly())
    return format_poly(p)


def module_json(M):
    """Reduced Gröbner basis of a submodule or ideal, as strings."""
    if M is None:
        return None
    return [poly_text(g) for g in M.reduced().gens] if not M.is_zero() else []


def point_json(p):
    return None if p is None else [str(x) for x in p]


def ledger_json(entries):
    out = []
    for e in entries:
        item = {"prime": module_json(e.prime), "fate": e.fate, "verdict": e.verdict,
                "certificate": e.certificate, "depth": e.depth,
                "points": [point_json(p) for p in e.points[:16]], "points_total": len(e.points)}
        if e.component is not None:
            item["component"] = module_json(e.component)
        if e.result is not None:
            item["result"] = module_json(e.result)
        if e.note:
            item["note"] = e.note
        out.append(item)
    return out


def closure_json(r):
    out = {"space": str(r.space), "method": r.method, "closure": module_json(r.closure),
           "is_closed": r.is_closed, "conditional": r.conditional, "ledger": ledger_json(r.ledger),
           "notes": list(r.notes)}
    if r.cross_check is not None:
        out["cross_check"] = r.cross_check
    spec = r.extra.get("spectrum")
    if spec is not None:
        out["torsion_spectrum"] = {
            "dimension": spec.dimension,
            "charpoly": [str(c) for c in spec.charpoly],
            "roots": {str(a): k for a, k in sorted(spec.roots.items())},
        }
    return out


def verdict_json(v):
    return {"kind": v.kind, "certificate": v.certificate, "certified": v.certified, "ring": v.ring,
            "ideal": module_json(v.ideal), "points": [point_json(p) for p in v.points[:32]],
            "points_total": len(v.points), "detail": _jsonable(v.detail)}


def _jsonable(x):
    if isinstance(x, dict):
        return {str(k): _jsonable(v) for k, v in x.items()}
    if isinstance(x, (list, tuple)):
        return [_jsonable(v) for v in x]
    if isinstance(x, (bool, int, str)) or x is None:
        return x
    if isinstance(x, (Poly, ModuleElement)):
        return poly_text(x)
    return str(x)


def dumps(report):
    return json.dumps(report, indent=2, ensure_ascii=False) + "\n"


def pretty(report):
    lines = [f"{report['command']}: {report['status']}"]
    if "error" in report:
        err = report["error"]
        where = err.get("context") or {}
        loc = f" (line {where['line']}, column {where['column']})" if "line" in where else ""
        lines.append(f"error {err['kind']}: {err['message']}{loc}")
        return "\n".join(lines) + "\n"
    res = report.get("result", {})
    for key in ("closure", "verdict", "groebner_basis"):
        if key in res:
            val = res[key]
            lines.append(f"{key}: " + (", ".join(val) if isinstance(val, list) else str(val)))
    if "points" in res:
        lines.append(f"points ({len(res['points'])}{'' if res.get('complete') else ', partial'}):")
        lines += ["  (" + ", ".join(p) + ")" for p in res["points"]]
    if "components" in res:
        for c in res["components"]:
            lines.append(f"  prime ({', '.join(c['prime']) or '0'}): component <{'; '.join(c['component'])}>")
    if "witness_prime" in res and res["witness_prime"] is not None:
        lines.append(f"witness prime: ({', '.join(res['witness_prime'])}) point {res.get('witness_point')}")
    for e in res.get("ledger", []):
        lines.append(f"  [{e['fate']}] ({', '.join(e['prime']) or '0'}) {e['verdict']} via {e['certificate']}")
    if "values" in res:
        lines += [f"  value at ({', '.join(res['at'])}): [{', '.join(v)}]" for v in res["values"]]
    if "in_behavior" in res:
        lines.append(f"signal {res['signal']} in behavior: {res['in_behavior']}")
    for note in res.get("notes", []):
        lines.append(f"note: {note}")
    if res.get("conditional"):
        lines.append("result is conditional on unresolved point questions")
    return "\n".join(lines) + "\n"
