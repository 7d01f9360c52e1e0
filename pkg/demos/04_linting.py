"""Linting: catch authoring pitfalls before students do.

The classic mistake is declaring more dependencies than the mathematics
needs - in the extreme, each line "depends" on the one before it, so the
autograder accepts exactly one ordering and marks every other correct
proof wrong. The linter counts accepted orderings, flags redundancy, and
catches group traps and distractor collisions.

    python3 demos/04_linting.py
"""

from pathlib import Path

from proofblocks import Block, Group, Question, lint, load_question

FIXTURES = Path(__file__).resolve().parent.parent / "tests" / "fixtures"


def report(name, question):
    print(f"--- {name}")
    for finding in lint(question):
        subject = f" [{finding.subject}]" if finding.subject else ""
        print(f"  {finding.severity.value:7} {finding.code}{subject}: {finding.message}")
    print()


report("over-specified chain", load_question(FIXTURES / "chain5.pb.html").unwrap())
report("well-specified question", load_question(FIXTURES / "fig1.pb.html").unwrap())

# A group member that waits for an outside block the group does not wait
# for: students can open the group and hit a dead end the first-failure
# feedback cannot explain. W03 names the trap; here it even makes the
# question unsolvable, which is the error E08.
trap = Question(
    id="trap",
    prompt="",
    blocks=(
        Block("setup", "Setup.", group="G"),
        Block("fact", "An outside fact.", depends=("setup",)),
        Block("finish", "Finish the case.", group="G", depends=("fact",)),
    ),
    groups=(Group("G", members=("setup", "finish")),),
)
report("dead-end group", trap)
