"""Randomized instance generators shared by the property and acceptance tests."""

from __future__ import annotations

import random

from proofblocks import Block, ExpandedGraph, GradingOptions, Group, Question


def random_graph(
    rng: random.Random,
    max_nodes: int = 7,
    max_groups: int = 2,
    edge_probability: float | None = None,
) -> ExpandedGraph:
    """A random DAG over t0..t{n-1} with optional disjoint contiguity runs.

    Edges always point from a lower to a higher index, so acyclicity is by
    construction.  Contiguity sets are index runs, but edges may cross
    them freely: some generated graphs are unsolvable once contiguity is
    imposed, which the validity oracles must agree on too.
    """
    n = rng.randint(1, max_nodes)
    p = rng.uniform(0.1, 0.6) if edge_probability is None else edge_probability
    nodes = tuple(f"t{i}" for i in range(n))
    edges = {
        (nodes[i], nodes[j])
        for j in range(n)
        for i in range(j)
        if rng.random() < p
    }
    contiguity = tuple(frozenset(run) for run in _random_runs(rng, nodes, max_groups))
    return ExpandedGraph(nodes=nodes, edges=frozenset(edges), contiguity_sets=contiguity)


def _random_runs(
    rng: random.Random, nodes: tuple[str, ...], max_groups: int
) -> list[tuple[str, ...]]:
    runs: list[tuple[str, ...]] = []
    cursor = 0
    for _ in range(rng.randint(0, max_groups)):
        if cursor >= len(nodes) - 1:
            break
        start = rng.randint(cursor, len(nodes) - 2)
        length = rng.randint(2, min(3, len(nodes) - start))
        runs.append(nodes[start : start + length])
        cursor = start + length
    return runs


def random_question(
    rng: random.Random,
    max_blocks: int = 7,
    max_groups: int = 2,
    max_distractors: int = 2,
    group_level_depends: bool = True,
    edge_probability: float | None = None,
) -> Question:
    """A structurally valid random question, as an author could write it.

    Group members sit consecutively in author order (the only shape the
    markup can express), dependencies point backward in author order, and
    distractors carry no dependencies.  Cross-group member dependencies
    are allowed, so unsolvable-but-acyclic questions can occur.
    """
    n = rng.randint(1, max_blocks)
    p = rng.uniform(0.1, 0.6) if edge_probability is None else edge_probability
    tags = [f"t{i}" for i in range(n)]
    runs = _random_runs(rng, tuple(tags), max_groups)
    group_of: dict[str, str] = {}
    groups: list[Group] = []
    for g_index, run in enumerate(runs):
        g_tag = f"G{g_index}"
        for tag in run:
            group_of[tag] = g_tag
        groups.append(Group(tag=g_tag, members=tuple(run)))

    blocks: list[Block] = []
    for j, tag in enumerate(tags):
        depends = [tags[i] for i in range(j) if rng.random() < p]
        blocks.append(
            Block(tag=tag, text=f"Step {tag}.", depends=tuple(depends), group=group_of.get(tag))
        )

    if group_level_depends:
        first_member = {g.tag: g.members[0] for g in groups}
        rebuilt_groups = []
        for group in groups:
            start = tags.index(first_member[group.tag])
            candidates = [t for t in tags[:start] if group_of.get(t) is None]
            g_depends = tuple(t for t in candidates if rng.random() < p / 2)
            rebuilt_groups.append(
                Group(tag=group.tag, members=group.members, depends=g_depends)
            )
        groups = rebuilt_groups

    for d in range(rng.randint(0, max_distractors)):
        blocks.append(Block(tag=f"x{d}", text=f"Bogus step {d}.", is_distractor=True))

    return Question(
        id=f"rq{rng.getrandbits(32):08x}",
        prompt="Arrange the steps into a valid argument.",
        blocks=tuple(blocks),
        groups=tuple(groups),
        options=GradingOptions(),
    )


def random_submission(
    rng: random.Random, question: Question, max_extra: int = 2
) -> list[str]:
    """Arbitrary student input: shuffles, truncations, duplicates, junk."""
    pool = [b.tag for b in question.blocks] + ["zz", "__unknown__"][: max_extra]
    length = rng.randint(0, len(question.blocks) + max_extra)
    if rng.random() < 0.3:
        # mostly-sensible orderings exercise more interesting branches
        base = [b.tag for b in question.required_blocks]
        rng.shuffle(base)
        return base[:length] if length < len(base) else base
    return [rng.choice(pool) for _ in range(length)]
