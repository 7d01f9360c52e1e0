"""Student views: seeded shuffles that hide the answer structure.

What a student receives is a prompt plus opaque (render id, text) pairs -
no tags, no dependencies, no distractor flags. The shuffle is a pinned
deterministic function of (question, seed), so a stateless server can map
render ids back to blocks later with nothing but the same seed.

    python3 demos/05_student_views.py
"""

from pathlib import Path

from proofblocks import (
    Submission,
    grade,
    load_question,
    render_student_view,
    resolve_ordering,
)

FIXTURES = Path(__file__).resolve().parent.parent / "tests" / "fixtures"

question = load_question(FIXTURES / "evensum.pb.html").unwrap()

view = render_student_view(question, seed=2026)
print(f"view for seed {view.seed}:")
for rid, text in view.blocks:
    print(f"  [{rid}] {text}")

# The student reorders render ids; the server re-derives the same shuffle
# and grades the resolved tags. Same seed, same mapping, every time.
assert render_student_view(question, 2026) == view

student_ordering = ["06", "01", "04", "03"]
tags = resolve_ordering(question, 2026, student_ordering)
outcome = grade(question, Submission(tuple(tags)))
print(f"\nsubmitted {student_ordering} -> tags {tags}")
print(f"status {outcome.status.value}, score {outcome.score}")
