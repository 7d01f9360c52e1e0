"""Partial credit: distance to the nearest accepted ordering.

The edit distance counts single-block deletions plus insertions needed to
reach *some* accepted ordering - never just the intended one - and the
score is (n - d) / n, floored at zero. Distractors dragged in, duplicate
lines, and missing lines all price in naturally.

    python3 demos/03_partial_credit.py
"""

from pathlib import Path

from proofblocks import Submission, edit_distance, expand, grade, load_question

FIXTURES = Path(__file__).resolve().parent.parent / "tests" / "fixtures"

question = load_question(FIXTURES / "evensum.pb.html").unwrap()
graph = expand(question)
print(f"{len(graph.nodes)} required blocks; distractors get synthetic tags d1, d2\n")

attempts = [
    ("perfect", ["def_m", "def_n", "sum", "conclude"]),
    ("swapped start (still fine)", ["def_n", "def_m", "sum", "conclude"]),
    ("used a distractor", ["def_m", "d1", "sum", "conclude"]),
    ("forgot the conclusion", ["def_m", "def_n", "sum"]),
    ("duplicated a line", ["def_m", "def_m", "def_n", "sum", "conclude"]),
    ("empty board", []),
]

for label, ordering in attempts:
    d = edit_distance(graph, ordering)
    outcome = grade(question, Submission(tuple(ordering)))
    print(f"{label:28} d={d}  score={outcome.score}")
