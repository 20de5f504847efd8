"""Rendering suite reports as JSON or a text table, and the overall exit code."""

from __future__ import annotations

import json
from typing import Iterable

from .harness import SuiteReport

EXIT_PASS = 0
EXIT_VIOLATION = 1
EXIT_USAGE = 2
EXIT_RESOURCE = 3
EXIT_VACUOUS = 4


def suite_record(r: SuiteReport) -> dict:
    rec = {
        "suite": r.id,
        "title": r.title,
        "status": r.status,
        "groups": r.groups,
        "instances_tested": r.instances_tested,
        "instances_vacuous": r.instances_vacuous,
        "instances_nontrivial": r.instances_nontrivial,
        "clauses": {
            name: {"tested": c.tested, "vacuous": c.vacuous, "nontrivial": c.nontrivial,
                   "violations": c.violations, "floor": r.clause_floors.get(name, r.floor)}
            for name, c in sorted(r.clauses.items())
        },
        "below_floor": sorted(r.below_floor()),
        "violations": r.violations,
        "resource_skips": r.resource_skips,
        "notes": r.notes,
    }
    if r.wall_time is not None:
        rec["wall_time"] = round(r.wall_time, 3)
    return rec


def to_json(reports: Iterable[SuiteReport]) -> str:
    reports = list(reports)
    doc = {"suites": [suite_record(r) for r in reports], "exit_code": exit_code(reports)}
    return json.dumps(doc, sort_keys=True, indent=2) + "\n"


def to_text(reports: Iterable[SuiteReport]) -> str:
    reports = list(reports)
    header = f"{'suite':<16} {'status':<6} {'groups':>6} {'tested':>9} {'vacuous':>9} {'nontriv':>9} {'viol':>5} {'skips':>5}"
    lines = [header, "-" * len(header)]
    for r in reports:
        line = (f"{r.id:<16} {r.status:<6} {r.groups:>6} {r.instances_tested:>9} {r.instances_vacuous:>9} "
                f"{r.instances_nontrivial:>9} {len(r.violations):>5} {len(r.resource_skips):>5}")
        if r.wall_time is not None:
            line += f" {r.wall_time:8.2f}s"
        lines.append(line)
        for name in r.below_floor():
            c = r.clauses[name]
            lines.append(f"    clause {name}: {c.nontrivial} nontrivial instances, floor {r.clause_floors[name]}")
        for v in r.violations:
            lines.append(f"    violation [{v['clause']}] on {v['group']['name']}: {v['replay']}")
    lines.append(f"{len(reports)} suites; exit code {exit_code(reports)}")
    return "\n".join(lines) + "\n"


def exit_code(reports: Iterable[SuiteReport]) -> int:
    statuses = {r.status for r in reports}
    if "FAIL" in statuses:
        return EXIT_VIOLATION
    if "SKIP" in statuses:
        return EXIT_RESOURCE
    if "WARN" in statuses:
        return EXIT_VACUOUS
    return EXIT_PASS
