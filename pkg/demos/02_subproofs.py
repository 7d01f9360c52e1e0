"""Subproofs: grouped lines must stay contiguous.

An induction proof has a base case and an inductive step. Logically the
two subproofs are independent, so either may come first, but their lines
must not interleave. Block groups express exactly that: a topological
sort of the DAG is accepted only if each group's lines sit together.

    python3 demos/02_subproofs.py
"""

from pathlib import Path

from proofblocks import Submission, expand, grade, load_question, valid_orderings

FIXTURES = Path(__file__).resolve().parent.parent / "tests" / "fixtures"

question = load_question(FIXTURES / "induction.pb.html").unwrap()
graph = expand(question)

print("Contiguity sets:", [sorted(c) for c in graph.contiguity_sets])
print("Accepted orderings:")
for ordering in valid_orderings(graph):
    print("   ", ", ".join(ordering))

# A pure topological sort that interleaves the subproofs is rejected; the
# student is told the interleaving breaks at line 3 (i1 enters while the
# base-case group is still open).
interleaved = ["n1", "b1", "i1", "b2", "i2", "c"]
outcome = grade(question, Submission(tuple(interleaved)))
print(f"\n{interleaved} -> {outcome.status.value} at line {outcome.first_failure}")
