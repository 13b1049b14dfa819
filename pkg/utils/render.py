"""
Output Rendering
Deterministic text and JSON views shared by the CLI and the reproduction run
"""
import json
from typing import Any, Dict, List

from src.classify import BasisResult, ClassificationResult, FamilyReport, OracleReport, TheoremReport
from src.closure import ConditionSet, Contradiction, Families, Trace, Unresolved
from src.subspace import CanonicalBasis


def dump_json(payload: Any) -> str:
    return json.dumps(payload, indent=2)


def render_bases(bases: List[CanonicalBasis]) -> List[str]:
    return [f"({cb.m}) {cb.render()}" for cb in bases]


def render_conditions(cs: ConditionSet) -> List[str]:
    header = f"basis {cs.basis.m}: {len(cs)} conditions" if cs.basis is not None else f"{len(cs)} conditions"
    return [header] + [f"  {line}" for line in cs.render()]


def _trace_text(trace: Trace) -> str:
    steps = ", ".join(str(step) for step in trace.steps)
    arrow = f"{steps} => " if steps else ""
    return f"{arrow}{trace.source} -> {trace.constant}"


def _family_json(report: FamilyReport) -> Dict[str, Any]:
    family = report.family
    certificate = report.certificate
    return {
        "label": list(family.label),
        "fixed": {name: str(value) for name, value in family.fixed.items()},
        "free": "a" if family.free else None,
        "free_variable": family.free,
        "root_variable": family.root,
        "extension": family.extension_text(),
        "assignment": {name: str(family.values[name]) for name in family.variables},
        "subalgebra": report.rendered(),
        "closed": report.closed,
        "real_certificate": str(certificate) if certificate is not None else None,
    }


def basis_json(entry: BasisResult) -> Dict[str, Any]:
    outcome = entry.outcome
    payload: Dict[str, Any] = {"m": entry.basis.m, "outcome": outcome.kind}
    if isinstance(outcome, Contradiction):
        payload["trace"] = outcome.traces[0].lines() if outcome.traces else []
        if len(outcome.traces) > 1:
            payload["branch_traces"] = [
                {"label": list(t.label), "trace": t.lines()} for t in outcome.traces
            ]
    elif isinstance(outcome, Families):
        payload["families"] = [_family_json(report) for report in entry.families]
    elif isinstance(outcome, Unresolved):
        payload["branches"] = [
            {"label": list(b.label), "reason": b.reason, "remaining": [str(p) for p in b.remaining]}
            for b in outcome.branches
        ]
        payload["families"] = [_family_json(report) for report in entry.families]
    if entry.evidence is not None:
        payload["oracle"] = entry.evidence.to_json()
    return payload


def classification_json(result: ClassificationResult) -> Dict[str, Any]:
    return {
        "n": result.n,
        "bases": [basis_json(entry) for entry in result.bases],
        "summary": result.summary,
    }


def _family_lines(report: FamilyReport) -> List[str]:
    family = report.family
    lines = [f"  [{', '.join(family.label)}] span{{{', '.join(report.rendered())}}}"]
    notes = []
    if family.free:
        notes.append(f"a = {family.free}")
    if family.has_extension:
        notes.append(f"{family.extension_text()}, s = {family.root}")
    if report.certificate is not None:
        notes.append(f"no real solution: {report.certificate.render_equation()}")
    if not report.closed:
        notes.append("NOT CLOSED")
    if notes:
        lines.append(f"    {'; '.join(notes)}")
    return lines


def render_classification(result: ClassificationResult) -> List[str]:
    lines = [f"g({result.n}): {len(result.bases)} canonical bases"]
    for entry in result.bases:
        outcome = entry.outcome
        if isinstance(outcome, Contradiction):
            lines.append(f"basis {entry.basis.m}: none")
            for trace in outcome.traces:
                label = f"[{', '.join(trace.label)}] " if trace.label else ""
                lines.append(f"  {label}{_trace_text(trace)}")
        elif isinstance(outcome, Families):
            lines.append(f"basis {entry.basis.m}: {len(entry.families)} families")
            for report in entry.families:
                lines.extend(_family_lines(report))
        else:
            lines.append(f"basis {entry.basis.m}: unresolved ({outcome.reason})")
            for branch in outcome.branches:
                lines.append(f"  open [{', '.join(branch.label)}] {branch.reason}")
                lines.extend(f"    {poly.render_equation()}" for poly in branch.remaining)
            for report in entry.families:
                lines.extend(_family_lines(report))
            if entry.evidence is not None:
                evidence = entry.evidence
                lines.append(
                    f"  oracle evidence: {evidence.trials} trials, seed {evidence.seed}; "
                    f"closure hits: {len(evidence.hits)}; disagreements: {len(evidence.disagreements)}"
                )
    lines.append(result.summary_line())
    return lines


def render_theorem(report: TheoremReport) -> List[str]:
    lines = []
    for check in report.checks:
        status = "closed" if check.closed else "NOT CLOSED"
        if check.matched is True:
            status += ", found by classification"
        elif check.matched is False:
            status += ", missing from classification"
        lines.append(f"{check.name}: {status}")
        for failure in check.failures:
            lines.append(f"  a{failure.i}a{failure.j}: residual {failure.residual}")
    passed = sum(1 for c in report.checks if c.closed and c.matched is not False)
    lines.append(f"{passed}/{len(report.checks)} verified")
    return lines


def render_oracle(report: OracleReport) -> List[str]:
    return [
        f"basis {report.basis} of g({report.n}): {report.trials} trials, seed {report.seed}",
        f"agreements: {report.agreements}",
        f"closure hits: {len(report.hits)}; disagreements: {len(report.disagreements)}",
    ]
