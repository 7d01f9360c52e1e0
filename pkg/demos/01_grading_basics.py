"""Grading basics: one dependency graph, many accepted orderings.

The fig1 question has two independent three-line threads (facts about m
and about n) joined by a final line, so 20 different orderings are all
full-credit proofs. Run from the repository root:

    python3 demos/01_grading_basics.py
"""

from pathlib import Path

from proofblocks import Submission, expand, grade, load_question, valid_orderings

FIXTURES = Path(__file__).resolve().parent.parent / "tests" / "fixtures"

question = load_question(FIXTURES / "fig1.pb.html").unwrap()
graph = expand(question)

print(f"Question {question.id!r}: {len(graph.nodes)} required blocks")
print(f"Declared dependencies: {sorted(graph.edges)}")
print(f"Accepted orderings: {len(valid_orderings(graph))}\n")

attempts = [
    ("the intended order", ["1", "2", "3", "4", "5", "6", "7"]),
    ("the n-thread first", ["4", "5", "6", "1", "2", "3", "7"]),
    ("the threads interleaved", ["1", "4", "2", "3", "5", "6", "7"]),
    ("two lines swapped", ["2", "1", "3", "4", "5", "6", "7"]),
    ("a bare prefix", ["1", "2", "3"]),
]

for label, ordering in attempts:
    outcome = grade(question, Submission(tuple(ordering)))
    failure = f", fails at line {outcome.first_failure}" if outcome.first_failure else ""
    print(
        f"{label:26} -> {outcome.status.value:13} "
        f"score {str(outcome.score):>4}{failure}"
    )
