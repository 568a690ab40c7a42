"""Scenario files: parse, run, report.

A scenario is a JSON object with keys ``system``, ``checks`` and ``output``::

    {"system": {"catalog": "truncated_quantum_torus", "p": 3, "q": 2, "m": 3, "k": 2},
     "checks": [{"kind": "maximal"}, {"kind": "ideal", "generators": ["x*[0]"]}],
     "output": {"format": "json"}}

An inline system replaces ``catalog`` by ``ring``, ``group``, ``sigma`` and
``alpha``; docs/schema.md has the full schema.
"""
from __future__ import annotations

import json
import time
from dataclasses import dataclass, field

from .algebra.groups import IntegerGroup, group_from_params
from .algebra.rings import ring_from_params
from .catalog import alpha_from_rows, build_entry
from .errors import CrossedForgeError, ParseError, PreconditionError, ValidationError
from .ideals import (
    descent_ideal,
    ideal_closure,
    intersect_base,
    intersect_commutant,
    lift_ideal,
    quotient_descend,
    run_theorem_suite,
    zero_divisor_obstruction,
)
from .product import parse_elem
from .structure import (
    center_bruteforce,
    center_compute,
    center_membership,
    commutant_constraints,
    commutant_membership,
    group_json,
    is_commutative,
    is_maximal_commutative,
    witness_json,
)
from .system import CrossedSystem, verify_crossed_system

CHECK_KINDS = ("verify", "center", "commutant", "maximal", "commutative", "ideal", "lift", "descend",
               "obstruction", "theorem-suite")
FORMATS = ("json", "text")
LIST_LIMIT = 64
ORACLE_LIMIT = 729


@dataclass
class Check:
    kind: str
    params: dict = field(default_factory=dict)

    def to_json(self):
        return {"kind": self.kind, **self.params}


@dataclass
class Scenario:
    system_desc: dict
    system: CrossedSystem
    checks: list
    output: dict
    entry: object = None

    def to_json(self):
        return {"system": self.system_desc, "checks": [c.to_json() for c in self.checks], "output": self.output}


# -- parsing ------------------------------------------------------------------------
def parse_scenario(text):
    if isinstance(text, bytes):
        text = text.decode("utf-8")
    try:
        data = json.loads(text)
    except json.JSONDecodeError as exc:
        raise ParseError(f"line {exc.lineno} column {exc.colno}: {exc.msg}") from None
    return scenario_from_dict(data)


def scenario_from_dict(data):
    if not isinstance(data, dict):
        raise ParseError("top level: expected an object with keys system, checks, output")
    unknown = set(data) - {"system", "checks", "output"}
    if unknown:
        raise ParseError(f"top level: unknown keys {sorted(unknown)}")
    if "system" not in data:
        raise ParseError("top level: missing 'system'")
    desc = data["system"]
    system, entry = _parse_system(desc)
    raw_checks = data.get("checks", [])
    if not isinstance(raw_checks, list):
        raise ParseError("checks: expected a list")
    checks = [_parse_check(system, c, i) for i, c in enumerate(raw_checks)]
    output = data.get("output", {}) or {}
    if not isinstance(output, dict):
        raise ParseError("output: expected an object")
    fmt = output.get("format", "json")
    if fmt not in FORMATS:
        raise ParseError(f"output.format: expected one of {FORMATS}, got {fmt!r}")
    unknown = set(output) - {"format", "timings"}
    if unknown:
        raise ParseError(f"output: unknown keys {sorted(unknown)}")
    return Scenario(desc, system, checks, dict(output), entry)


def _parse_system(desc):
    if not isinstance(desc, dict):
        raise ParseError("system: expected an object")
    if "catalog" in desc:
        params = {k: v for k, v in desc.items() if k != "catalog"}
        try:
            entry = build_entry(desc["catalog"], **params)
        except (PreconditionError, ValidationError) as exc:
            raise ParseError(f"system: {exc}") from None
        return entry.system, entry
    for key in ("ring", "group"):
        if key not in desc:
            raise ParseError(f"system: missing '{key}' (or give 'catalog')")
    unknown = set(desc) - {"ring", "group", "sigma", "alpha", "name"}
    if unknown:
        raise ParseError(f"system: unknown keys {sorted(unknown)}")
    ring = ring_from_params(desc["ring"])
    group = group_from_params(desc["group"])
    sigma = _parse_sigma(ring, group, desc.get("sigma", "identity"))
    alpha = desc.get("alpha", "trivial")
    if alpha == "trivial":
        alpha = None
    elif isinstance(alpha, list):
        if isinstance(group, IntegerGroup):
            raise ParseError("system.alpha: only the trivial cocycle is supported over Z")
        try:
            alpha = alpha_from_rows(ring, group, alpha)
        except (ValueError, TypeError) as exc:
            raise ParseError(f"system.alpha: {exc}") from None
    else:
        raise ParseError("system.alpha: expected \"trivial\" or a list of [x, y, value] rows")
    try:
        system = CrossedSystem(ring, group, sigma, alpha, name=desc.get("name"))
    except PreconditionError as exc:
        raise ParseError(f"system: {exc}") from None
    return system, None


def _parse_sigma(ring, group, desc):
    def aut(images, where):
        if not isinstance(images, list):
            raise ParseError(f"{where}: expected a list of generator images")
        try:
            return ring.automorphism([ring(str(i)) for i in images])
        except (PreconditionError, ValueError) as exc:
            raise ParseError(f"{where}: {exc}") from None

    if desc == "identity":
        a = ring.identity_automorphism()
        return a if not group.is_finite else {g: a for g in group.elements()}
    if not isinstance(desc, dict) or len(desc) != 1:
        raise ParseError("system.sigma: expected \"identity\", {\"generator\": [...]} or {\"table\": {...}}")
    if "generator" in desc:
        if group.kind not in ("cyclic", "integers"):
            raise ParseError("system.sigma.generator: only cyclic groups and Z are generated by one element")
        return aut(desc["generator"], "system.sigma.generator")
    if "table" in desc:
        if not group.is_finite:
            raise ParseError("system.sigma.table: over Z give the generator instead")
        table = {}
        for key, images in desc["table"].items():
            try:
                g = group(key)
            except (ValueError, KeyError) as exc:
                raise ParseError(f"system.sigma.table: bad group element {key!r}: {exc}") from None
            table[g] = aut(images, f"system.sigma.table[{key}]")
        return table
    raise ParseError(f"system.sigma: unknown form {sorted(desc)}")


def _elem(system, text, where):
    if not isinstance(text, str):
        raise ParseError(f"{where}: expected an element string")
    try:
        return parse_elem(text, system)
    except (ValueError, KeyError, IndexError, TypeError) as exc:
        raise ParseError(f"{where}: malformed element {text!r}: {exc}") from None


def _ring_elem(system, text, where):
    try:
        return system.ring(text if isinstance(text, (int, str)) else str(text))
    except (ValueError, KeyError, IndexError, TypeError) as exc:
        raise ParseError(f"{where}: malformed ring element {text!r}: {exc}") from None


def _group_elem(system, text, where):
    try:
        return system.group(text)
    except (ValueError, KeyError, IndexError, TypeError) as exc:
        raise ParseError(f"{where}: malformed group element {text!r}: {exc}") from None


_ALLOWED = {
    "verify": set(),
    "center": {"element"},
    "commutant": {"element"},
    "maximal": set(),
    "commutative": set(),
    "ideal": {"generators"},
    "lift": {"ideal"},
    "descend": {"normal"},
    "obstruction": {"c", "d", "g"},
    "theorem-suite": {"cap"},
}


def _parse_check(system, raw, i):
    where = f"checks[{i}]"
    if not isinstance(raw, dict) or "kind" not in raw:
        raise ParseError(f"{where}: expected an object with 'kind'")
    kind = raw["kind"]
    if kind not in CHECK_KINDS:
        raise ParseError(f"{where}: unknown kind {kind!r}; expected one of {CHECK_KINDS}")
    params = {k: v for k, v in raw.items() if k != "kind"}
    unknown = set(params) - _ALLOWED[kind]
    if unknown:
        raise ParseError(f"{where}: unknown keys {sorted(unknown)} for {kind}")
    # validate literals now so malformed input fails at parse time
    if "element" in params:
        params["element"] = str(_elem(system, params["element"], f"{where}.element"))
    if kind == "ideal":
        gens = params.get("generators")
        if not isinstance(gens, list):
            raise ParseError(f"{where}.generators: expected a list")
        params["generators"] = [str(_elem(system, g, f"{where}.generators[{j}]")) for j, g in enumerate(gens)]
    if kind == "lift":
        ideal = params.get("ideal")
        if not isinstance(ideal, list):
            raise ParseError(f"{where}.ideal: expected a list of ring elements")
        params["ideal"] = [str(_ring_elem(system, a, f"{where}.ideal[{j}]")) for j, a in enumerate(ideal)]
    if kind == "descend":
        normal = params.get("normal")
        if not isinstance(normal, list):
            raise ParseError(f"{where}.normal: expected a list of group elements")
        params["normal"] = [group_json(_group_elem(system, n, f"{where}.normal[{j}]")) for j, n in enumerate(normal)]
    if kind == "obstruction":
        for key in ("c", "d", "g"):
            if key not in params:
                raise ParseError(f"{where}: obstruction needs '{key}'")
        params["c"] = str(_ring_elem(system, params["c"], f"{where}.c"))
        params["d"] = str(_ring_elem(system, params["d"], f"{where}.d"))
        params["g"] = group_json(_group_elem(system, params["g"], f"{where}.g"))
    if kind == "theorem-suite" and "cap" in params and not isinstance(params["cap"], int):
        raise ParseError(f"{where}.cap: expected an integer")
    return Check(kind, params)


def scenario_to_json(scenario):
    return json.dumps(scenario.to_json(), indent=2, sort_keys=True) + "\n"


# -- running ------------------------------------------------------------------------
def _elements_json(elems):
    elems = sorted(elems)
    d = {"size": len(elems)}
    if len(elems) <= LIST_LIMIT:
        d["elements"] = [str(u) for u in elems]
    return d


def _validity(system, cache):
    if "report" not in cache:
        cache["report"] = verify_crossed_system(system)
    return cache["report"]


def _run_check(system, check, cache):
    kind, p = check.kind, check.params
    report = _validity(system, cache)
    if kind == "verify":
        return report.to_dict()
    if not report.ok:
        raise PreconditionError("the system is not a valid crossed system; run the verify check for witnesses")
    if kind == "center":
        out = {}
        if system.is_finite:
            center = center_compute(system)
            out.update(_elements_json(center))
            if system.size <= ORACLE_LIMIT:
                out["paths_agree"] = center == center_bruteforce(system)
        else:
            out["description"] = "infinite; decided per element"
        if "element" in p:
            out["member"] = center_membership(parse_elem(p["element"], system))
        return out
    if kind == "commutant":
        out = {"constraints": commutant_constraints(system).to_dict()}
        if "element" in p:
            out["member"] = commutant_membership(parse_elem(p["element"], system))
        return out
    if kind == "maximal":
        v = is_maximal_commutative(system)
        out = {"maximal_commutative": v.value}
        if not v.value:
            g, r = v.witness
            out["witness"] = {"degree": group_json(g), "coefficient": str(r)}
        return out
    if kind == "commutative":
        v = is_commutative(system)
        out = {"commutative": v.value}
        if not v.value:
            out["witness"] = witness_json(v.witness)
        return out
    if kind == "ideal":
        gens = [parse_elem(g, system) for g in p["generators"]]
        ideal = ideal_closure(system, gens)
        out = ideal.to_dict(LIST_LIMIT)
        out["base_intersection"] = sorted(str(a) for a in intersect_base(ideal))
        if system.ring.is_commutative:
            inter = intersect_commutant(ideal)
            out["commutant_intersection_size"] = len(inter.elements)
            if inter.witness is not None:
                out["commutant_witness"] = str(inter.witness)
                out["witness_rounds"] = inter.rounds
        return out
    if kind == "lift":
        return lift_ideal(system, [system.ring(a) for a in p["ideal"]]).to_dict()
    if kind == "descend":
        hom = quotient_descend(system, [system.group(n) for n in p["normal"]])
        ideal, base, killed = descent_ideal(hom)
        return {"homomorphism": hom.to_dict(), "ideal_generators": [str(g) for g in ideal.generators],
                "ideal_size": len(ideal), "base_intersection": sorted(str(a) for a in base),
                "ideal_in_kernel": killed}
    if kind == "obstruction":
        res = zero_divisor_obstruction(system, p["c"], p["d"], system.group(p["g"]))
        out = res.to_dict()
        out["ideal"] = {k: v for k, v in out["ideal"].items() if k != "elements"}
        return out
    if kind == "theorem-suite":
        return run_theorem_suite(system, p.get("cap", 10**4)).to_dict()
    raise ParseError(f"unknown check kind {kind!r}")


def run_scenario(scenario, timings=None):
    """Run every check; errors inside a check become that check's result."""
    if timings is None:
        timings = bool(scenario.output.get("timings", False))
    system = scenario.system
    sysinfo = {"name": system.name, "ring": system.ring.params(), "group": system.group.params()}
    if scenario.entry is not None:
        sysinfo["catalog"] = scenario.entry.name
        sysinfo["params"] = scenario.entry.params
        if scenario.entry.model:
            sysinfo["model"] = scenario.entry.model
    results = []
    cache = {}
    for i, check in enumerate(scenario.checks):
        start = time.perf_counter()
        entry = {"index": i, "kind": check.kind}
        if check.params:
            entry["params"] = check.params
        try:
            entry["result"] = _run_check(system, check, cache)
            entry["status"] = "ok"
        except CrossedForgeError as exc:
            entry["status"] = "error"
            entry["error"] = {"type": type(exc).__name__, "message": str(exc)}
        if timings:
            entry["seconds"] = round(time.perf_counter() - start, 6)
        results.append(entry)
    return {"system": sysinfo, "checks": results}


def emit_report(report, fmt="json"):
    if fmt == "json":
        return (json.dumps(report, indent=2, sort_keys=True, ensure_ascii=False) + "\n").encode("utf-8")
    if fmt == "text":
        return _text_report(report).encode("utf-8")
    raise ValueError(f"unknown format {fmt!r}")


def _text_report(report):
    lines = [f"system: {report['system']['name']}"]
    if "model" in report["system"]:
        lines.append(f"model: {report['system']['model']}")
    for entry in report["checks"]:
        head = f"[{entry['index']}] {entry['kind']}"
        if entry["status"] == "error":
            lines.append(f"{head}: ERROR {entry['error']['type']}: {entry['error']['message']}")
            continue
        lines.append(f"{head}: {_summary(entry['kind'], entry['result'])}")
        if "seconds" in entry:
            lines[-1] += f" ({entry['seconds']:.3f}s)"
    return "\n".join(lines) + "\n"


def _summary(kind, r):
    if kind == "verify":
        if r["valid"]:
            return "valid"
        return "INVALID " + "; ".join(f"{v['condition']} at ({', '.join(v['witness'])})" for v in r["violations"])
    if kind == "maximal":
        if r["maximal_commutative"]:
            return "maximal commutative"
        w = r["witness"]
        return f"not maximal commutative, witness {w['coefficient']}*[{w['degree']}]"
    if kind == "commutative":
        return "commutative" if r["commutative"] else f"not commutative, witness {r['witness']}"
    if kind == "center":
        if "member" in r:
            return "member" if r["member"] else "not a member"
        return f"{r['size']} elements" if "size" in r else r.get("description", "")
    if kind == "commutant":
        return json.dumps(r["constraints"], sort_keys=True)
    if kind == "ideal":
        return f"size {r['size']}, base intersection {r['base_intersection']}"
    if kind == "lift":
        return f"size {r['size']}, two-sided {r['two_sided']}"
    if kind == "descend":
        return f"ideal size {r['ideal_size']}, base intersection {r['base_intersection']}"
    if kind == "obstruction":
        return "empty intersection" if r["intersection_with_non_zero_divisors_empty"] else "NONEMPTY intersection"
    if kind == "theorem-suite":
        return ", ".join(f"{k} {v['status']}" for k, v in r["theorems"].items())
    return json.dumps(r, sort_keys=True)
