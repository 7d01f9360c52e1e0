"""Grading: correctness, first-failure feedback, and edit-distance credit.

Correctness is delegated to :func:`proofblocks.core.is_valid_ordering`.
The quantitative routines here (``edit_distance``, ``count_orderings``)
run exact dynamic programs over subsets of the required blocks, encoded
as bitmasks.  A subset is reachable when it can be produced by placing
blocks one at a time without ever violating a dependency or splitting an
open contiguity set, so the DP states are exactly the valid prefixes of
accepted orderings.  Exponential in the worst case, fast for the sizes
classroom proofs reach; both carry a hard size guard.
"""

from __future__ import annotations

from dataclasses import dataclass
from enum import Enum
from fractions import Fraction
from typing import Iterator, Sequence

from .core import (
    ExpandedGraph,
    FeedbackMode,
    ProofBlocksError,
    Question,
    ScoringMode,
    Submission,
    TooLargeError,
    expand,
    is_valid_ordering,
)

#: Size guard for the exact subset dynamic programs.
MAX_EXACT_NODES = 20


class UnsolvableError(ProofBlocksError):
    """No ordering satisfies the dependencies and contiguity together.

    The dependency relation can be acyclic yet unsatisfiable once group
    contiguity is imposed (a member needs an outside block mid-group).
    The linter flags such questions; grading their distance is undefined.
    """


class GradeStatus(Enum):
    CORRECT = "correct"
    WRONG_AT_LINE = "wrong_at_line"
    INCOMPLETE = "incomplete"


@dataclass(frozen=True)
class GradeOutcome:
    """Result of grading one submission.

    ``score`` is kept as an exact rational so that grade records never
    accumulate float rounding.  ``first_failure`` is 1-based and present
    exactly when ``status`` is ``WRONG_AT_LINE``.
    """

    status: GradeStatus
    first_failure: int | None
    edit_distance: int
    score: Fraction

    def __post_init__(self) -> None:
        if (self.status is GradeStatus.CORRECT) != (self.edit_distance == 0):
            raise ValueError("correct status must coincide with zero edit distance")
        if (self.status is GradeStatus.CORRECT) != (self.score == 1):
            raise ValueError("correct status must coincide with a full score")
        if self.status is GradeStatus.WRONG_AT_LINE and self.first_failure is None:
            raise ValueError("wrong_at_line requires a first_failure line")
        if self.status is not GradeStatus.WRONG_AT_LINE and self.first_failure is not None:
            raise ValueError("first_failure only accompanies wrong_at_line")
        if not 0 <= self.score <= 1:
            raise ValueError("score must lie in [0, 1]")


def first_failure(graph: ExpandedGraph, seq: Sequence[str]) -> int | None:
    """1-based index of the first line that cannot be placed, if any.

    Simulates placement left to right: a line is placeable when its tag is
    a required block not yet placed, all its dependencies are placed, and
    it does not break into or out of an open contiguity set.  Distractors,
    unknown tags, and duplicates are never placeable.  A fully placeable
    sequence (any valid prefix, even an incomplete one) yields None.
    """
    node_set = set(graph.nodes)
    preds = graph.predecessors()
    group_of = graph.group_of()
    placed: set[str] = set()
    open_set: frozenset[str] | None = None
    for i, tag in enumerate(seq, start=1):
        if tag not in node_set or tag in placed:
            return i
        if not preds[tag] <= placed:
            return i
        if open_set is not None and tag not in open_set:
            return i
        placed.add(tag)
        cset = group_of.get(tag)
        if cset is not None:
            open_set = None if cset <= placed else cset
    return None


class _BitGraph:
    """Bitmask encoding of an expanded graph for the subset DPs."""

    def __init__(self, graph: ExpandedGraph):
        self.n = len(graph.nodes)
        self.index = {tag: i for i, tag in enumerate(graph.nodes)}
        self.pred_masks = [0] * self.n
        for u, v in graph.edges:
            self.pred_masks[self.index[v]] |= 1 << self.index[u]
        self.group_masks = [
            sum(1 << self.index[m] for m in cset) for cset in graph.contiguity_sets
        ]

    def placeable(self, mask: int) -> Iterator[int]:
        """Indices placeable after the (reachable) prefix ``mask``."""
        open_mask = 0
        for gmask in self.group_masks:
            part = mask & gmask
            if part and part != gmask:
                open_mask = gmask
                break
        for i in range(self.n):
            bit = 1 << i
            if mask & bit or self.pred_masks[i] & ~mask:
                continue
            if open_mask and not open_mask & bit:
                continue
            yield i


def _guard(graph: ExpandedGraph, what: str) -> None:
    if len(graph.nodes) > MAX_EXACT_NODES:
        raise TooLargeError(
            f"{len(graph.nodes)} nodes exceed the exact {what} guard of {MAX_EXACT_NODES}"
        )


def count_orderings(graph: ExpandedGraph) -> int:
    """Exact number of accepted orderings, by DP over reachable subsets."""
    _guard(graph, "counting")
    bg = _BitGraph(graph)
    full = (1 << bg.n) - 1
    counts = {0: 1}
    level = [0]
    for _ in range(bg.n):
        nxt: dict[int, int] = {}
        for mask in level:
            ways = counts[mask]
            for i in bg.placeable(mask):
                succ = mask | 1 << i
                if succ in nxt:
                    nxt[succ] += ways
                else:
                    nxt[succ] = ways
        counts.update(nxt)
        level = list(nxt)
    return counts.get(full, 0)


def _first_occurrences(graph: ExpandedGraph, seq: Sequence[str]) -> list[str]:
    node_set = set(graph.nodes)
    kept: list[str] = []
    seen: set[str] = set()
    for tag in seq:
        if tag in node_set and tag not in seen:
            kept.append(tag)
            seen.add(tag)
    return kept


def edit_distance(graph: ExpandedGraph, seq: Sequence[str]) -> int:
    """Minimum insertions plus deletions turning ``seq`` into an accepted ordering.

    Duplicates beyond the first occurrence of a tag, distractors, and
    unknown tags each cost one deletion.  The core quantity is the best
    longest-common-subsequence length L between the cleaned submission and
    any accepted ordering, computed exactly by propagating LCS rows over
    reachable placement subsets (elementwise-max merge, which is exact for
    LCS rows).  Raises :class:`UnsolvableError` when no accepted ordering
    exists at all.
    """
    _guard(graph, "edit-distance")
    bg = _BitGraph(graph)
    cleaned = _first_occurrences(graph, seq)
    m = len(cleaned)
    full = (1 << bg.n) - 1

    # Cleaned tags are distinct, so placing block i can extend the common
    # subsequence at exactly one row position (1-based), or none.
    match_pos = [0] * bg.n
    for j, tag in enumerate(cleaned, start=1):
        match_pos[bg.index[tag]] = j

    # rows[mask][j] = best LCS between cleaned[:j] and any placement of
    # mask; LCS rows are non-decreasing, and the single-match update is
    # "raise the tail to at least row[jm-1] + 1".  Rows are shared between
    # states when a placement cannot change them, so merges must allocate.
    rows: dict[int, list[int]] = {0: [0] * (m + 1)}
    level = [0]
    for _ in range(bg.n):
        nxt: dict[int, list[int]] = {}
        for mask in level:
            row = rows[mask]
            for i in bg.placeable(mask):
                jm = match_pos[i]
                if jm == 0 or row[jm] >= row[jm - 1] + 1:
                    new = row
                else:
                    lift = row[jm - 1] + 1
                    new = row[:jm] + [x if x >= lift else lift for x in row[jm:]]
                succ = mask | 1 << i
                old = nxt.get(succ)
                if old is None:
                    nxt[succ] = new
                elif old is not new and old != new:
                    nxt[succ] = [a if a >= b else b for a, b in zip(old, new)]
        rows.update(nxt)
        level = list(nxt)

    final = rows.get(full)
    if final is None:
        raise UnsolvableError(
            "no ordering satisfies the dependencies and contiguity sets"
        )
    best_lcs = final[m]
    return (len(seq) - m) + (m - best_lcs) + (bg.n - best_lcs)


def score(graph: ExpandedGraph, seq: Sequence[str]) -> Fraction:
    """Edit-distance partial credit: max(0, (n - d) / n) as an exact rational."""
    n = len(graph.nodes)
    d = edit_distance(graph, seq)
    if n == 0:
        return Fraction(1) if d == 0 else Fraction(0)
    return max(Fraction(0), Fraction(n - d, n))


def grade(question: Question, submission: Submission) -> GradeOutcome:
    """Grade a submission against a question.

    Status is ``correct`` exactly when the ordering is accepted.  With
    first-failure feedback enabled, a rejected submission containing an
    unplaceable line reports ``wrong_at_line`` with its 1-based index;
    otherwise (a bare valid prefix, or feedback disabled) it reports
    ``incomplete``.  Under binary scoring the edit distance field is a
    0/1 correctness indicator rather than the exact distance.
    """
    graph = expand(question)
    ordering = submission.ordering
    correct = is_valid_ordering(graph, ordering)

    if question.options.scoring_mode is ScoringMode.EDIT_DISTANCE:
        d = edit_distance(graph, ordering)
        n = len(graph.nodes)
        points = max(Fraction(0), Fraction(n - d, n)) if n else Fraction(int(d == 0))
    else:
        d = 0 if correct else 1
        points = Fraction(1) if correct else Fraction(0)

    failure: int | None = None
    if not correct and question.options.feedback_mode is FeedbackMode.FIRST_FAILURE:
        failure = first_failure(graph, ordering)

    if correct:
        status = GradeStatus.CORRECT
    elif failure is not None:
        status = GradeStatus.WRONG_AT_LINE
    else:
        status = GradeStatus.INCOMPLETE
    return GradeOutcome(status=status, first_failure=failure, edit_distance=d, score=points)
