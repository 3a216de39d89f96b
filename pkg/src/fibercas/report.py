"""Text and JSON rendering of scenario reports."""

from __future__ import annotations

import json
from pathlib import Path

from .scenarios import Check, ScenarioReport

SCHEMA_VERSION = "1.0"
SCHEMA_PATH = Path(__file__).resolve().parents[2] / "schema" / "report.schema.json"

# checks named like f(a,b) print as one compact line with this label for the actual value
_COMPACT = {"closed_form": "profile", "hockey_stick": "sum", "quadric_defect": "oracle",
            "cancellation": "rhs", "telescoping": "sum"}


def _status(c: Check) -> str:
    if c.informative:
        return "INFO"
    return "PASS" if c.passed else "FAIL"


def _param(v):
    if isinstance(v, (list, tuple, range)):
        return [str(x) for x in v]
    return str(v)


def to_dict(r: ScenarioReport, timing: bool = False) -> dict:
    checks = []
    for c in r.checks:
        d = {"name": c.name, "anchor": c.anchor, "expected": c.expected, "actual": c.actual, "pass": c.passed}
        d["informative"] = c.informative
        if c.note:
            d["note"] = c.note
        checks.append(d)
    return {
        "schema_version": SCHEMA_VERSION,
        "scenario": r.scenario_id,
        "params": {k: _param(v) for k, v in r.params.items()},
        "checks": checks,
        "assumptions": list(r.assumptions),
        "timing_s": f"{r.timing_s:.3f}" if timing and r.timing_s is not None else None,
        "pass": r.passed,
    }


def emit_json(reports, timing: bool = False) -> str:
    if isinstance(reports, ScenarioReport):
        payload = to_dict(reports, timing)
    else:
        payload = [to_dict(r, timing) for r in reports]
    return json.dumps(payload, indent=2, ensure_ascii=False) + "\n"


def _compact_line(c: Check) -> str | None:
    head = c.name.split("(", 1)[0]
    label = _COMPACT.get(head)
    if label is None or not c.name.endswith(")"):
        return None
    return f"{c.name}={c.expected} {label}={c.actual} {_status(c)}"


def emit_text(r: ScenarioReport, timing: bool = False) -> str:
    params = " ".join(f"{k}={','.join(_param(v)) if isinstance(_param(v), list) else _param(v)}" for k, v in r.params.items())
    lines = [f"== {r.scenario_id}  {params}"]
    rows = []
    for c in r.checks:
        compact = _compact_line(c)
        if compact is not None:
            lines.append(compact)
            continue
        rows.append(c)
    if rows:
        wn = max(len(c.name) for c in rows)
        we = max(len(c.expected) for c in rows)
        for c in rows:
            tail = f"  [{c.note}]" if c.note else ""
            lines.append(f"{_status(c)}  {c.name:<{wn}}  expected {c.expected:<{we}}  actual {c.actual}{tail}")
    for a in r.assumptions:
        lines.append(f"  assumption: {a}")
    real = [c for c in r.checks if not c.informative]
    verdict = "PASS" if r.passed else "FAIL"
    summary = f"== {r.scenario_id} {verdict} ({sum(c.passed for c in real)}/{len(real)} checks)"
    if timing and r.timing_s is not None:
        summary += f" in {r.timing_s:.2f}s"
    lines.append(summary)
    return "\n".join(lines) + "\n"


def emit_report(r: ScenarioReport, format: str = "text", timing: bool = False) -> str:
    if format == "json":
        return emit_json(r, timing)
    if format == "text":
        return emit_text(r, timing)
    raise ValueError(f"unknown format {format!r}")


def load_schema() -> dict:
    with open(SCHEMA_PATH, encoding="utf-8") as fh:
        return json.load(fh)
