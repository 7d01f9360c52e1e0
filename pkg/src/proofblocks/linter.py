"""Static checks for authoring pitfalls in dependency-graded questions.

The expensive ways these questions go wrong in production are all about
the shape of the dependency graph, not the prose: declaring more
dependencies than the argument needs (until only the authored order is
accepted), edges that restate what transitivity already forces, group
members that reach outside their subproof and strand students mid-group,
and distractors that double a real line.  Each check below targets one of
those, with stable codes so reports can be consumed by tooling.

Codes
-----
- ``E03`` / ``E04``: the question cannot expand (cycle, dependency on a
  distractor); resurfaced here so lint output is self-contained.
- ``E08``: no ordering satisfies dependencies plus contiguity; the
  question is ungradeable as authored.
- ``W01``: over-constrained; exactly one accepted ordering despite having
  four or more required blocks.
- ``W02``: a block-to-block dependency already implied by transitivity.
- ``W03``: a group member depends on an outside block that the rest of
  the group does not wait for; students can open the group and dead-end.
- ``W04``: a distractor's text duplicates a required block's text.
- ``I01``: informational; the exact number of accepted orderings.
"""

from __future__ import annotations

import graphlib
import re
from dataclasses import dataclass

from .core import (
    CycleError,
    DistractorDependencyError,
    ExpandedGraph,
    Question,
    Severity,
    expand,
)
from .grader import MAX_EXACT_NODES, count_orderings

#: W01 only fires at this size or above; tiny questions are often
#: legitimately forced into one order.
MIN_BLOCKS_FOR_OVERCONSTRAINT = 4


@dataclass(frozen=True)
class LintFinding:
    severity: Severity
    code: str
    subject: str | None
    message: str


def lint(question: Question) -> list[LintFinding]:
    """Check one question; pure and deterministic.

    A question with no error-severity findings is guaranteed to expand
    and to be gradeable (at least one ordering is accepted).
    """
    try:
        graph = expand(question)
    except CycleError as exc:
        return [
            LintFinding(
                Severity.ERROR,
                "E03",
                None,
                f"dependencies form a cycle: {' -> '.join(exc.cycle)}",
            )
        ]
    except DistractorDependencyError as exc:
        return [LintFinding(Severity.ERROR, "E04", None, str(exc))]

    findings: list[LintFinding] = []
    n = len(graph.nodes)

    count: int | None = None
    if n <= MAX_EXACT_NODES:
        count = count_orderings(graph)
        if count == 0:
            findings.append(
                LintFinding(
                    Severity.ERROR,
                    "E08",
                    None,
                    "no ordering satisfies the dependencies and group contiguity; "
                    "the question cannot be solved",
                )
            )
        elif count == 1 and n >= MIN_BLOCKS_FOR_OVERCONSTRAINT:
            findings.append(
                LintFinding(
                    Severity.WARNING,
                    "W01",
                    None,
                    f"over-constrained: all {n} blocks admit exactly one ordering; "
                    "consider dropping stylistic dependencies",
                )
            )

    findings.extend(_redundant_edges(question, graph))
    findings.extend(_dead_end_groups(question, graph))
    findings.extend(_duplicate_distractor_text(question))

    if count is not None and count > 0:
        findings.append(
            LintFinding(
                Severity.INFO,
                "I01",
                None,
                f"question accepts exactly {count} ordering{'s' if count != 1 else ''}",
            )
        )
    return findings


def _successors(graph: ExpandedGraph) -> dict[str, set[str]]:
    succ: dict[str, set[str]] = {node: set() for node in graph.nodes}
    for u, v in graph.edges:
        succ[u].add(v)
    return succ


def _reachable_from(start: str, succ: dict[str, set[str]], skip: tuple[str, str]) -> set[str]:
    seen: set[str] = set()
    stack = [start]
    while stack:
        node = stack.pop()
        for nxt in succ[node]:
            if (node, nxt) == skip or nxt in seen:
                continue
            seen.add(nxt)
            stack.append(nxt)
    return seen


def _redundant_edges(question: Question, graph: ExpandedGraph) -> list[LintFinding]:
    """W02 for authored block-to-block edges implied by transitivity.

    Only dependencies the author literally wrote are reported; edges that
    expansion derives from group references are parallel by construction
    and would be pure noise.
    """
    block_tags = {b.tag for b in question.blocks if not b.is_distractor}
    succ = _successors(graph)
    findings = []
    for block in question.blocks:
        for ref in block.depends:
            if ref not in block_tags:
                continue
            if block.tag in _reachable_from(ref, succ, skip=(ref, block.tag)):
                findings.append(
                    LintFinding(
                        Severity.WARNING,
                        "W02",
                        block.tag,
                        f"dependency of {block.tag!r} on {ref!r} is already implied "
                        "by other dependencies",
                    )
                )
    return findings


def _ancestors(graph: ExpandedGraph) -> dict[str, set[str]]:
    preds = graph.predecessors()
    sorter: graphlib.TopologicalSorter[str] = graphlib.TopologicalSorter(preds)
    ancestors: dict[str, set[str]] = {}
    for node in sorter.static_order():
        acc: set[str] = set()
        for p in preds[node]:
            acc.add(p)
            acc |= ancestors[p]
        ancestors[node] = acc
    return ancestors


def _dead_end_groups(question: Question, graph: ExpandedGraph) -> list[LintFinding]:
    """W03: an outside dependency of a member that the whole group lacks.

    Flagged when some expanded edge (u, m) enters group g from outside and
    u is not an ancestor of every member: the group can then be opened
    before u is placed, making m unplaceable until the group is abandoned.
    The first-failure simulation is local, so this trap is caught here
    rather than at grading time.
    """
    ancestors = _ancestors(graph)
    findings = []
    for group in question.groups:
        members = set(group.members)
        outside_deps = sorted(
            {
                u
                for u, v in graph.edges
                if v in members and u not in members
            }
        )
        for u in outside_deps:
            uncovered = [m for m in group.members if u not in ancestors[m]]
            if uncovered:
                dependents = sorted(
                    v for uu, v in graph.edges if uu == u and v in members
                )
                findings.append(
                    LintFinding(
                        Severity.WARNING,
                        "W03",
                        group.tag,
                        f"member {dependents[0]!r} of group {group.tag!r} depends on "
                        f"outside block {u!r}, which the whole group does not wait for; "
                        "students can enter the group before it is placeable",
                    )
                )
    return findings


_WS_RE = re.compile(r"\s+")


def _normalize_text(text: str) -> str:
    return _WS_RE.sub(" ", text).strip()


def _duplicate_distractor_text(question: Question) -> list[LintFinding]:
    required_texts = {
        _normalize_text(b.text): b.tag for b in question.blocks if not b.is_distractor
    }
    findings = []
    for block in question.blocks:
        if not block.is_distractor:
            continue
        twin = required_texts.get(_normalize_text(block.text))
        if twin is not None:
            findings.append(
                LintFinding(
                    Severity.WARNING,
                    "W04",
                    block.tag,
                    f"distractor {block.tag!r} has the same text as required block {twin!r}",
                )
            )
    return findings
