"""Check results and the canonical JSON encoding of pipeline reports."""

import json
from dataclasses import dataclass, field
from fractions import Fraction


@dataclass
class CheckResult:
    name: str
    ok: bool
    lhs: object = None
    rhs: object = None
    detail: str = ""
    skipped: bool = False

    def to_json(self):
        out = {"name": self.name, "ok": bool(self.ok), "lhs": jsonable(self.lhs), "rhs": jsonable(self.rhs)}
        if self.detail:
            out["detail"] = self.detail
        if self.skipped:
            out["skipped"] = True
        return out


@dataclass
class Report:
    command: str
    inputs: dict = field(default_factory=dict)
    polytopes: dict = field(default_factory=dict)
    polynomial: object = None
    presentation: object = None
    checks: list = field(default_factory=list)
    extra: dict = field(default_factory=dict)

    @property
    def ok(self):
        return all(c.ok for c in self.checks if not c.skipped)

    def add(self, check):
        self.checks.append(check)
        return check

    def to_json(self):
        out = {
            "command": self.command,
            "inputs": jsonable(self.inputs),
            "ok": self.ok,
            "checks": [c.to_json() for c in self.checks],
        }
        if self.polytopes:
            out["polytopes"] = jsonable(self.polytopes)
        if self.polynomial is not None:
            out["polynomial"] = jsonable(self.polynomial)
        if self.presentation is not None:
            out["presentation"] = jsonable(self.presentation)
        if self.extra:
            out.update(jsonable(self.extra))
        return out

    def dumps(self):
        return dumps(self.to_json())

    def to_text(self):
        lines = [f"== {self.command} =="]
        for k, v in sorted(self.inputs.items()):
            lines.append(f"  {k}: {_plain(v)}")
        for name in sorted(self.polytopes):
            verts = self.polytopes[name].to_json().get("vertices")
            if verts is not None:
                lines.append(f"  polytope {name}: {len(verts)} vertices {json.dumps(verts)}")
        if self.polynomial is not None:
            poly = self.polynomial
            lines.append(f"  polynomial: {poly.to_str() if hasattr(poly, 'to_str') else _plain(poly)}")
        if self.presentation is not None:
            pres = self.presentation
            lines.append(f"  hilbert: {list(pres.hilbert)}")
            for d in sorted(pres.ideal_gens):
                names = [f"t{i + 1}" for i in range(pres.nvars)]
                gens = ", ".join(g.to_str(names) for g in pres.ideal_gens[d])
                lines.append(f"  generators in degree {d}: {gens}")
        for k, v in sorted(self.extra.items()):
            lines.append(f"  {k}: {_plain(v)}")
        width = max((len(c.name) for c in self.checks), default=0)
        for c in self.checks:
            status = "SKIP" if c.skipped else ("PASS" if c.ok else "FAIL")
            if c.lhs is None and c.rhs is None:
                lines.append(f"  [{status}] {c.name}")
            else:
                lines.append(f"  [{status}] {c.name.ljust(width)}  lhs={_plain(c.lhs)}  rhs={_plain(c.rhs)}")
            if c.detail:
                lines.append(f"         {c.detail}")
        return "\n".join(lines)


def jsonable(obj):
    """Convert nested values to JSON-ready data; rationals become strings."""
    if obj is None or isinstance(obj, (bool, str)):
        return obj
    if isinstance(obj, int):
        return obj
    if isinstance(obj, Fraction):
        return str(obj)
    if hasattr(obj, "to_json"):
        return obj.to_json()
    if isinstance(obj, dict):
        return {str(k): jsonable(v) for k, v in obj.items()}
    if isinstance(obj, (list, tuple)):
        return [jsonable(x) for x in obj]
    raise TypeError(f"cannot encode {type(obj).__name__}")


def dumps(data):
    return json.dumps(data, indent=2, sort_keys=True)


def _plain(v):
    v = jsonable(v)
    if isinstance(v, (dict, list)):
        return json.dumps(v, sort_keys=True)
    return str(v)
