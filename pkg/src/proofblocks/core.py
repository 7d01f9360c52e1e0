"""Core domain model: questions, dependency expansion, and ordering checks.

A question is an ordered list of display blocks plus author-declared
dependencies.  ``expand`` lowers the authored structure (block- and
group-level ``depends``) into an :class:`ExpandedGraph`: a precedence DAG
over the required blocks together with contiguity sets, one per block
group.  An ordering of the required blocks is accepted exactly when it is
a linear extension of that DAG in which every contiguity set occupies
consecutive positions.

This module also carries ``valid_orderings``, a brute-force enumerator of
all accepted orderings.  It is deliberately simple (backtracking over the
author block order) and serves both as a small-scale grading aid and as
the reference oracle the rest of the package is tested against.
"""

from __future__ import annotations

import graphlib
from dataclasses import dataclass, field
from enum import Enum
from itertools import islice
from typing import Iterator, Sequence

#: Size guard for exhaustive enumeration without an explicit limit.
MAX_ENUMERATION_NODES = 10


class ProofBlocksError(Exception):
    """Base class for every error raised by this package."""


class QuestionError(ProofBlocksError, ValueError):
    """A question violates one of its structural invariants."""


class CycleError(ProofBlocksError):
    """The declared dependencies form a cycle."""

    def __init__(self, message: str, cycle: tuple[str, ...] = ()):
        super().__init__(message)
        self.cycle = cycle


class DistractorDependencyError(ProofBlocksError):
    """A ``depends`` list references a distractor block."""


class TooLargeError(ProofBlocksError):
    """The instance exceeds a size guard for exact computation."""


class Severity(Enum):
    """Shared severity scale for parser and linter findings."""

    ERROR = "error"
    WARNING = "warning"
    INFO = "info"


class FeedbackMode(Enum):
    FIRST_FAILURE = "first_failure"
    NONE = "none"


class ScoringMode(Enum):
    BINARY = "binary"
    EDIT_DISTANCE = "edit_distance"


def _as_str_tuple(value: Sequence[str]) -> tuple[str, ...]:
    return tuple(str(v) for v in value)


@dataclass(frozen=True)
class Block:
    """One draggable line of the question.

    ``depends`` lists tags (block or group) that must precede this block.
    A distractor is a line that belongs to no correct ordering; it carries
    no dependencies and may not be depended on.
    """

    tag: str
    text: str
    is_distractor: bool = False
    depends: tuple[str, ...] = ()
    group: str | None = None

    def __post_init__(self) -> None:
        object.__setattr__(self, "depends", _as_str_tuple(self.depends))


@dataclass(frozen=True)
class Group:
    """A subproof: its member blocks must appear contiguously.

    The group tag shares a namespace with block tags, so other blocks (or
    groups) can depend on the subproof as a whole.
    """

    tag: str
    members: tuple[str, ...]
    depends: tuple[str, ...] = ()

    def __post_init__(self) -> None:
        object.__setattr__(self, "members", _as_str_tuple(self.members))
        object.__setattr__(self, "depends", _as_str_tuple(self.depends))


@dataclass(frozen=True)
class GradingOptions:
    feedback_mode: FeedbackMode = FeedbackMode.FIRST_FAILURE
    scoring_mode: ScoringMode = ScoringMode.EDIT_DISTANCE


@dataclass(frozen=True)
class Submission:
    """An ordered sequence of block tags claimed as a proof.

    Arbitrary student input: tags may be unknown, duplicated, or refer to
    distractors.  Validation is entirely the grader's job.
    """

    ordering: tuple[str, ...]
    question_id: str = ""

    def __post_init__(self) -> None:
        object.__setattr__(self, "ordering", _as_str_tuple(self.ordering))


@dataclass(frozen=True)
class Question:
    """A parsed authoring artifact: prompt, blocks, groups, and options.

    Structural invariants (tag uniqueness, reference resolution, group
    consistency) are enforced at construction time.  Acyclicity and the
    no-dependency-on-distractors rule are checked by :func:`expand`, which
    is where they become observable.
    """

    id: str
    prompt: str
    blocks: tuple[Block, ...]
    groups: tuple[Group, ...] = ()
    options: GradingOptions = field(default_factory=GradingOptions)

    def __post_init__(self) -> None:
        object.__setattr__(self, "blocks", tuple(self.blocks))
        object.__setattr__(self, "groups", tuple(self.groups))
        self._validate()

    def _validate(self) -> None:
        blocks_by_tag: dict[str, Block] = {}
        seen: set[str] = set()
        for block in self.blocks:
            if not block.tag:
                raise QuestionError("block tag must be nonempty")
            if block.tag in seen:
                raise QuestionError(f"duplicate tag {block.tag!r}")
            seen.add(block.tag)
            blocks_by_tag[block.tag] = block
        for group in self.groups:
            if not group.tag:
                raise QuestionError("group tag must be nonempty")
            if group.tag in seen:
                raise QuestionError(f"duplicate tag {group.tag!r}")
            seen.add(group.tag)

        if not any(not b.is_distractor for b in self.blocks):
            raise QuestionError("question needs at least one non-distractor block")

        group_tags = {g.tag for g in self.groups}
        for group in self.groups:
            if not group.members:
                raise QuestionError(f"group {group.tag!r} has no members")
            if len(set(group.members)) != len(group.members):
                raise QuestionError(f"group {group.tag!r} repeats a member")
            for member in group.members:
                if member in group_tags:
                    raise QuestionError(
                        f"group {group.tag!r} nests group {member!r}; groups do not nest"
                    )
                member_block = blocks_by_tag.get(member)
                if member_block is None:
                    raise QuestionError(
                        f"group {group.tag!r} lists unknown member {member!r}"
                    )
                if member_block.group != group.tag:
                    raise QuestionError(
                        f"block {member!r} does not name its group {group.tag!r}"
                    )
                if member_block.is_distractor:
                    raise QuestionError(
                        f"distractor {member!r} cannot belong to a group"
                    )

        members_of = {g.tag: set(g.members) for g in self.groups}
        for block in self.blocks:
            if block.group is not None:
                if block.group not in members_of:
                    raise QuestionError(
                        f"block {block.tag!r} names unknown group {block.group!r}"
                    )
                if block.tag not in members_of[block.group]:
                    raise QuestionError(
                        f"group {block.group!r} does not list block {block.tag!r}"
                    )
            if block.is_distractor and block.depends:
                raise QuestionError(
                    f"distractor {block.tag!r} cannot carry dependencies"
                )
            for ref in block.depends:
                if ref not in seen:
                    raise QuestionError(
                        f"block {block.tag!r} depends on unknown tag {ref!r}"
                    )
        for group in self.groups:
            for ref in group.depends:
                if ref not in seen:
                    raise QuestionError(
                        f"group {group.tag!r} depends on unknown tag {ref!r}"
                    )

    @property
    def required_blocks(self) -> tuple[Block, ...]:
        return tuple(b for b in self.blocks if not b.is_distractor)

    @property
    def distractors(self) -> tuple[Block, ...]:
        return tuple(b for b in self.blocks if b.is_distractor)


@dataclass(frozen=True)
class ExpandedGraph:
    """The grading semantics object: precedence DAG plus contiguity sets.

    ``nodes`` holds the required block tags in author order (distractors
    are excluded); an edge ``(u, v)`` means "u must precede v".
    """

    nodes: tuple[str, ...]
    edges: frozenset[tuple[str, str]]
    contiguity_sets: tuple[frozenset[str], ...] = ()

    def __post_init__(self) -> None:
        object.__setattr__(self, "nodes", tuple(self.nodes))
        object.__setattr__(self, "edges", frozenset(self.edges))
        object.__setattr__(
            self, "contiguity_sets", tuple(frozenset(c) for c in self.contiguity_sets)
        )
        node_set = set(self.nodes)
        if len(node_set) != len(self.nodes):
            raise QuestionError("graph nodes must be distinct")
        for u, v in self.edges:
            if u not in node_set or v not in node_set:
                raise QuestionError(f"edge ({u!r}, {v!r}) leaves the node set")
        claimed: set[str] = set()
        for cset in self.contiguity_sets:
            if not cset:
                raise QuestionError("contiguity sets must be nonempty")
            if not cset <= node_set:
                raise QuestionError("contiguity set leaves the node set")
            if cset & claimed:
                raise QuestionError("contiguity sets must be pairwise disjoint")
            claimed |= cset
        self._check_acyclic()

    def _check_acyclic(self) -> None:
        sorter: graphlib.TopologicalSorter[str] = graphlib.TopologicalSorter()
        for node in self.nodes:
            sorter.add(node)
        for u, v in self.edges:
            sorter.add(v, u)
        try:
            sorter.prepare()
        except graphlib.CycleError as exc:
            cycle = tuple(str(t) for t in exc.args[1]) if len(exc.args) > 1 else ()
            raise CycleError(
                "dependencies form a cycle: " + " -> ".join(cycle), cycle
            ) from None

    def predecessors(self) -> dict[str, set[str]]:
        """Map each node to the set of nodes that must precede it."""
        preds: dict[str, set[str]] = {n: set() for n in self.nodes}
        for u, v in self.edges:
            preds[v].add(u)
        return preds

    def group_of(self) -> dict[str, frozenset[str]]:
        """Map each grouped node to its contiguity set."""
        return {m: cset for cset in self.contiguity_sets for m in cset}


def expand(question: Question) -> ExpandedGraph:
    """Lower authored dependencies into a precedence DAG with contiguity sets.

    Group references expand to per-member edges: depending *on* a group
    means after all of its members, and a group's own ``depends`` applies
    to every member.  Raises :class:`DistractorDependencyError` if any
    ``depends`` names a distractor and :class:`CycleError` if the expanded
    relation is cyclic.
    """
    blocks_by_tag = {b.tag: b for b in question.blocks}
    members_of = {g.tag: g.members for g in question.groups}

    def endpoints(ref: str, owner: str) -> tuple[str, ...]:
        if ref in members_of:
            return members_of[ref]
        block = blocks_by_tag[ref]
        if block.is_distractor:
            raise DistractorDependencyError(
                f"{owner!r} depends on distractor {ref!r}"
            )
        return (ref,)

    edges: set[tuple[str, str]] = set()
    for block in question.blocks:
        if block.is_distractor:
            continue
        for ref in block.depends:
            for u in endpoints(ref, block.tag):
                edges.add((u, block.tag))
    for group in question.groups:
        for ref in group.depends:
            for u in endpoints(ref, group.tag):
                for member in group.members:
                    edges.add((u, member))

    nodes = tuple(b.tag for b in question.blocks if not b.is_distractor)
    contiguity = tuple(frozenset(g.members) for g in question.groups)
    return ExpandedGraph(nodes=nodes, edges=frozenset(edges), contiguity_sets=contiguity)


def is_valid_ordering(graph: ExpandedGraph, seq: Sequence[str]) -> bool:
    """True iff ``seq`` is an accepted ordering of the graph.

    Accepted means: a permutation of the nodes, every edge's tail before
    its head, and every contiguity set on consecutive positions.  Total
    function; arbitrary junk in ``seq`` simply yields False.
    """
    if len(seq) != len(graph.nodes):
        return False
    node_set = set(graph.nodes)
    position: dict[str, int] = {}
    for i, tag in enumerate(seq):
        if tag not in node_set or tag in position:
            return False
        position[tag] = i
    for u, v in graph.edges:
        if position[u] > position[v]:
            return False
    for cset in graph.contiguity_sets:
        spots = [position[m] for m in cset]
        if max(spots) - min(spots) + 1 != len(cset):
            return False
    return True


def _iter_orderings(graph: ExpandedGraph) -> Iterator[tuple[str, ...]]:
    """Backtracking enumeration in lexicographic author-block order."""
    nodes = graph.nodes
    preds = graph.predecessors()
    group_of = graph.group_of()
    placed: list[str] = []
    placed_set: set[str] = set()
    open_group: frozenset[str] | None = None
    open_left = 0

    def walk() -> Iterator[tuple[str, ...]]:
        nonlocal open_group, open_left
        if len(placed) == len(nodes):
            yield tuple(placed)
            return
        current = open_group
        for tag in nodes:
            if tag in placed_set:
                continue
            if not preds[tag] <= placed_set:
                continue
            if current is not None and tag not in current:
                continue
            cset = group_of.get(tag)
            prev_group, prev_left = open_group, open_left
            if cset is not None:
                left = (prev_left if current is not None else len(cset)) - 1
                open_group, open_left = (None, 0) if left == 0 else (cset, left)
            placed.append(tag)
            placed_set.add(tag)
            yield from walk()
            placed.pop()
            placed_set.remove(tag)
            open_group, open_left = prev_group, prev_left

    return walk()


def valid_orderings(
    graph: ExpandedGraph, limit: int | None = None
) -> list[tuple[str, ...]]:
    """Enumerate accepted orderings, exhaustively unless ``limit`` is given.

    Without a limit the graph must have at most ``MAX_ENUMERATION_NODES``
    nodes (:class:`TooLargeError` otherwise).  The result is deterministic:
    lexicographic in the author block order.
    """
    if limit is None and len(graph.nodes) > MAX_ENUMERATION_NODES:
        raise TooLargeError(
            f"{len(graph.nodes)} nodes exceed the enumeration guard of "
            f"{MAX_ENUMERATION_NODES}; pass a limit to truncate"
        )
    it = _iter_orderings(graph)
    return list(it if limit is None else islice(it, limit))
