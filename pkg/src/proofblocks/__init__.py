"""Dependency-graph grading for drag-and-drop proof ordering exercises.

Instructors author questions as markup with per-line ``depends``
declarations; the grader accepts any ordering consistent with the
resulting DAG (subproof groups staying contiguous), reports the first
failing line, and assigns edit-distance partial credit.  A linter catches
the authoring pitfalls that make such questions misfire, and a small HTTP
service exposes seeded, dependency-stripped views for interactive use.
"""

from .core import (
    Block,
    CycleError,
    DistractorDependencyError,
    ExpandedGraph,
    FeedbackMode,
    GradingOptions,
    Group,
    MAX_ENUMERATION_NODES,
    ProofBlocksError,
    Question,
    QuestionError,
    ScoringMode,
    Severity,
    Submission,
    TooLargeError,
    expand,
    is_valid_ordering,
    valid_orderings,
)
from .grader import (
    GradeOutcome,
    GradeStatus,
    MAX_EXACT_NODES,
    UnsolvableError,
    count_orderings,
    edit_distance,
    first_failure,
    grade,
    score,
)
from .linter import LintFinding, lint
from .qformat import (
    ParseFinding,
    ParseResult,
    StudentView,
    SubmissionFormatError,
    UNKNOWN_TAG,
    load_question,
    parse_question,
    parse_submission,
    render_student_view,
    resolve_ordering,
    serialize_question,
)

__version__ = "0.1.0"

__all__ = [
    "Block",
    "CycleError",
    "DistractorDependencyError",
    "ExpandedGraph",
    "FeedbackMode",
    "GradeOutcome",
    "GradeStatus",
    "GradingOptions",
    "Group",
    "LintFinding",
    "MAX_ENUMERATION_NODES",
    "MAX_EXACT_NODES",
    "ParseFinding",
    "ParseResult",
    "ProofBlocksError",
    "Question",
    "QuestionError",
    "ScoringMode",
    "Severity",
    "StudentView",
    "Submission",
    "SubmissionFormatError",
    "TooLargeError",
    "UNKNOWN_TAG",
    "UnsolvableError",
    "count_orderings",
    "edit_distance",
    "expand",
    "first_failure",
    "grade",
    "is_valid_ordering",
    "lint",
    "load_question",
    "parse_question",
    "parse_submission",
    "render_student_view",
    "resolve_ordering",
    "score",
    "serialize_question",
    "valid_orderings",
]
