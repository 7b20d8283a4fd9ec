"""Batch runs over graph streams: solve-and-verify, floor search, scanning.

Each run produces a ``BatchReport`` holding one record per input graph (in
input order), aggregate counters, and a findings list.  A finding is
anything that contradicts the guarantees this library is built around: a
failed verification, a cyclic even-degree core on an irreducible graph, or
a graph that misses the floor(n/2) target without being an odd semi-clique.
"""

from __future__ import annotations

import json
import time
from dataclasses import dataclass, field

from .graphs import Graph
from .paths import verify
from .reductions import (
    check_structure,
    detect,
    detect_c1,
    detect_c2,
    detect_c3,
    detect_c4,
    detect_c5,
)
from .solver import SolveError, solve, solve_base

FLOOR_SEARCH_LIMIT = 7


@dataclass(frozen=True)
class Finding:
    kind: str  # verify_failure | structure_violation | floor_gap | error
    graph_id: str
    message: str


@dataclass(frozen=True)
class GraphRecord:
    graph_id: str
    n: int
    m: int
    max_degree: int
    bound: int
    paths: int | None
    histogram: dict[str, int]
    verified: bool
    note: str
    seconds: float

    def line(self) -> str:
        paths = "-" if self.paths is None else str(self.paths)
        flag = "ok" if self.verified else "FAIL"
        hist = ",".join(f"{k}x{v}" for k, v in sorted(self.histogram.items()))
        note = f" {self.note}" if self.note else ""
        return (
            f"{self.graph_id}\tn={self.n} m={self.m} maxdeg={self.max_degree} "
            f"paths={paths}/{self.bound} {flag}{note}"
            + (f" [{hist}]" if hist else "")
        )


@dataclass
class BatchReport:
    command: str
    records: list[GraphRecord] = field(default_factory=list)
    findings: list[Finding] = field(default_factory=list)

    @property
    def ok(self) -> bool:
        return not self.findings

    def counters(self) -> dict[str, int]:
        out = {
            "graphs": len(self.records),
            "verified": sum(1 for r in self.records if r.verified),
            "findings": len(self.findings),
        }
        for record in self.records:
            for key, value in record.histogram.items():
                out[key] = out.get(key, 0) + value
        return out

    def to_text(self) -> str:
        lines = [record.line() for record in self.records]
        for finding in self.findings:
            lines.append(f"FINDING {finding.kind} {finding.graph_id}: {finding.message}")
        counts = self.counters()
        summary = " ".join(f"{k}={counts[k]}" for k in sorted(counts))
        lines.append(f"# {self.command}: {summary}")
        return "\n".join(lines) + "\n"

    def to_document(self) -> dict:
        return {
            "command": self.command,
            "counters": self.counters(),
            "records": [
                {
                    "graph_id": r.graph_id,
                    "n": r.n,
                    "m": r.m,
                    "max_degree": r.max_degree,
                    "bound": r.bound,
                    "paths": r.paths,
                    "histogram": dict(sorted(r.histogram.items())),
                    "verified": r.verified,
                    "note": r.note,
                    "seconds": round(r.seconds, 6),
                }
                for r in self.records
            ],
            "findings": [
                {"kind": f.kind, "graph_id": f.graph_id, "message": f.message}
                for f in self.findings
            ],
        }

    def to_json(self) -> str:
        return json.dumps(self.to_document(), indent=2) + "\n"


def _bound(g: Graph) -> int:
    return (g.n + 1) // 2


def run_check(
    graphs: list[tuple[str, Graph]], budget: int | None = None
) -> BatchReport:
    """Solve and verify every graph; check the even-core structure of the
    irreducible ones."""
    report = BatchReport("check")
    for graph_id, g in graphs:
        start = time.perf_counter()
        if g.m == 0:
            report.records.append(
                GraphRecord(
                    graph_id, g.n, 0, 0, _bound(g), 0, {}, True, "edgeless",
                    time.perf_counter() - start,
                )
            )
            continue
        note = ""
        histogram: dict[str, int] = {}
        verified = False
        paths = None
        try:
            if detect(g) is None and not _exceptional_clique(g):
                if not check_structure(g):
                    report.findings.append(
                        Finding(
                            "structure_violation",
                            graph_id,
                            "irreducible graph has a cyclic even-degree core",
                        )
                    )
                note = "irreducible"
            result = solve(g, budget)
            for step in result.trace.steps:
                key = f"{step.tag}/{step.subcase}"
                histogram[key] = histogram.get(key, 0) + 1
            outcome = verify(g, result.decomposition)
            paths = outcome.path_count
            verified = outcome.valid and outcome.good
            if not verified:
                report.findings.append(
                    Finding("verify_failure", graph_id, str(outcome))
                )
        except SolveError as exc:
            report.findings.append(Finding("error", graph_id, str(exc)))
        report.records.append(
            GraphRecord(
                graph_id, g.n, g.m, g.max_degree(), _bound(g), paths,
                histogram, verified, note, time.perf_counter() - start,
            )
        )
    return report


def run_floor_search(
    graphs: list[tuple[str, Graph]], budget: int | None = None
) -> BatchReport:
    """Try floor(n/2) paths on every graph; failures must be odd
    semi-cliques, anything else is surfaced as a finding."""
    report = BatchReport("floor-search")
    for graph_id, g in graphs:
        start = time.perf_counter()
        if g.m == 0 or g.n < 2:
            report.records.append(
                GraphRecord(
                    graph_id, g.n, g.m, 0, g.n // 2, 0, {}, True, "edgeless",
                    time.perf_counter() - start,
                )
            )
            continue
        target = g.n // 2
        d = solve_base(g, target, budget)
        if d is not None:
            outcome = verify(g, d)
            report.records.append(
                GraphRecord(
                    graph_id, g.n, g.m, g.max_degree(), target,
                    outcome.path_count, {}, outcome.valid, "",
                    time.perf_counter() - start,
                )
            )
            continue
        if g.is_odd_semi_clique():
            note = "odd_semi_clique"
        else:
            note = "unclassified"
            report.findings.append(
                Finding(
                    "floor_gap",
                    graph_id,
                    f"no decomposition into {target} paths and the graph "
                    "is not an odd semi-clique",
                )
            )
        report.records.append(
            GraphRecord(
                graph_id, g.n, g.m, g.max_degree(), target, None, {},
                note == "odd_semi_clique", note, time.perf_counter() - start,
            )
        )
    return report


def run_scan(graphs: list[tuple[str, Graph]]) -> BatchReport:
    """Report which configurations occur in each graph, without solving."""
    report = BatchReport("scan")
    detectors = (detect_c1, detect_c2, detect_c3, detect_c4, detect_c5)
    for graph_id, g in graphs:
        start = time.perf_counter()
        histogram = {}
        for detector in detectors:
            occ = detector(g)
            if occ is not None:
                histogram[occ.tag] = 1
        first = detect(g)
        note = first.tag if first is not None else "irreducible"
        report.records.append(
            GraphRecord(
                graph_id, g.n, g.m, g.max_degree() if g.n else 0, _bound(g),
                None, histogram, True, note, time.perf_counter() - start,
            )
        )
    return report


def _exceptional_clique(g: Graph) -> bool:
    return (g.n, g.m) in ((3, 3), (5, 10))
