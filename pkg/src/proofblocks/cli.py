"""Command-line entry point: validate, grade, enumerate, count, render, serve.

Exit codes are stable: 0 success (and "correct" for grading), 1 the
grading verdict is not correct, 2 the question has errors (parse or lint
errors, or it cannot be graded as authored), 3 usage and IO errors.

``--json`` switches every reporting command to a documented structured
format; scores appear as exact rationals (numerator/denominator) plus a
rounded decimal convenience field.
"""

from __future__ import annotations

import argparse
import json
import os
import sys
from enum import IntEnum
from fractions import Fraction
from pathlib import Path
from typing import NoReturn, Sequence

from .core import (
    ProofBlocksError,
    Question,
    Severity,
    Submission,
    TooLargeError,
    expand,
    valid_orderings,
)
from .grader import GradeOutcome, GradeStatus, count_orderings, grade
from .linter import LintFinding, lint
from .qformat import (
    ParseFinding,
    ParseResult,
    SubmissionFormatError,
    load_question,
    parse_submission,
    render_student_view,
)

QUESTIONS_DIR_ENV = "PB_QUESTIONS_DIR"


class ExitStatus(IntEnum):
    OK = 0
    INCORRECT = 1
    QUESTION_ERROR = 2
    USAGE = 3


class _UsageError(Exception):
    pass


class _Parser(argparse.ArgumentParser):
    # argparse exits with 2 on bad usage; the exit-code table wants 3
    def error(self, message: str) -> NoReturn:
        raise _UsageError(message)


def _build_parser() -> argparse.ArgumentParser:
    parser = _Parser(prog="proofblocks", description=__doc__.splitlines()[0])
    sub = parser.add_subparsers(dest="command", required=True, parser_class=_Parser)

    p = sub.add_parser("validate", help="parse and lint a question file")
    p.add_argument("file", type=Path)
    p.add_argument("--json", action="store_true")

    p = sub.add_parser("grade", help="grade an ordering against a question file")
    p.add_argument("file", type=Path)
    ordering = p.add_mutually_exclusive_group(required=True)
    ordering.add_argument("--ordering", help="comma-separated block tags")
    ordering.add_argument("--submission", type=Path, help="submission JSON file")
    p.add_argument("--json", action="store_true")

    p = sub.add_parser("enumerate", help="list accepted orderings")
    p.add_argument("file", type=Path)
    p.add_argument("--limit", type=int)
    p.add_argument("--json", action="store_true")

    p = sub.add_parser("count", help="count accepted orderings")
    p.add_argument("file", type=Path)
    p.add_argument("--json", action="store_true")

    p = sub.add_parser("render", help="print a seeded student view")
    p.add_argument("file", type=Path)
    p.add_argument("--seed", required=True)
    p.add_argument("--json", action="store_true")

    p = sub.add_parser("serve", help="serve a question directory over HTTP")
    p.add_argument("--port", type=int, default=8000)
    p.add_argument("--host", default="127.0.0.1")
    p.add_argument(
        "--questions-dir",
        type=Path,
        default=os.environ.get(QUESTIONS_DIR_ENV),
        help=f"defaults to ${QUESTIONS_DIR_ENV}",
    )
    p.add_argument("--static-dir", type=Path, help="built client assets to serve at /")
    p.add_argument(
        "--cors-origin",
        action="append",
        help="allowed CORS origin; repeatable (default: any)",
    )
    return parser


def main(argv: Sequence[str] | None = None) -> int:
    parser = _build_parser()
    try:
        args = parser.parse_args(argv)
    except _UsageError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return ExitStatus.USAGE

    handler = {
        "validate": _cmd_validate,
        "grade": _cmd_grade,
        "enumerate": _cmd_enumerate,
        "count": _cmd_count,
        "render": _cmd_render,
        "serve": _cmd_serve,
    }[args.command]
    try:
        return handler(args)
    except OSError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return ExitStatus.USAGE


def _emit(document: dict) -> None:
    print(json.dumps(document, ensure_ascii=False, indent=2))


def _load(path: Path, as_json: bool) -> tuple[Question | None, ParseResult]:
    result = load_question(path)
    if result.question is None and not as_json:
        for finding in result.findings:
            print(_format_parse_finding(finding), file=sys.stderr)
    return result.question, result


def _format_parse_finding(finding: ParseFinding) -> str:
    return f"{finding.severity.value} {finding.code} line {finding.line}: {finding.message}"


def _format_lint_finding(finding: LintFinding) -> str:
    subject = f" [{finding.subject}]" if finding.subject else ""
    return f"{finding.severity.value} {finding.code}{subject}: {finding.message}"


def _finding_documents(
    parse_findings: Sequence[ParseFinding], lint_findings: Sequence[LintFinding]
) -> list[dict]:
    documents: list[dict] = []
    for f in parse_findings:
        documents.append(
            {"severity": f.severity.value, "code": f.code, "line": f.line, "message": f.message}
        )
    for f in lint_findings:
        documents.append(
            {
                "severity": f.severity.value,
                "code": f.code,
                "subject": f.subject,
                "message": f.message,
            }
        )
    return documents


def _cmd_validate(args: argparse.Namespace) -> int:
    result = load_question(args.file)
    lint_findings: list[LintFinding] = []
    if result.question is not None:
        lint_findings = lint(result.question)

    if args.json:
        _emit({"findings": _finding_documents(result.findings, lint_findings)})
    else:
        for finding in result.findings:
            print(_format_parse_finding(finding))
        for finding in lint_findings:
            print(_format_lint_finding(finding))
        if not result.findings and not lint_findings:
            print("no findings")

    has_errors = result.question is None or any(
        f.severity is Severity.ERROR for f in lint_findings
    )
    return ExitStatus.QUESTION_ERROR if has_errors else ExitStatus.OK


def _score_document(value: Fraction) -> dict:
    return {
        "numerator": value.numerator,
        "denominator": value.denominator,
        "decimal": round(float(value), 6),
    }


def _outcome_document(outcome: GradeOutcome) -> dict:
    return {
        "status": outcome.status.value,
        "first_failure": outcome.first_failure,
        "edit_distance": outcome.edit_distance,
        "score": _score_document(outcome.score),
    }


def _cmd_grade(args: argparse.Namespace) -> int:
    question, _ = _load(args.file, args.json)
    if question is None:
        return ExitStatus.QUESTION_ERROR

    if args.submission is not None:
        try:
            submission = parse_submission(args.submission.read_text(encoding="utf-8"))
        except SubmissionFormatError as exc:
            print(f"error: {exc}", file=sys.stderr)
            return ExitStatus.USAGE
        if submission.question_id and submission.question_id != question.id:
            print(
                f"error: submission is for {submission.question_id!r}, "
                f"not {question.id!r}",
                file=sys.stderr,
            )
            return ExitStatus.USAGE
    else:
        tags = [t.strip() for t in args.ordering.split(",") if t.strip()]
        submission = Submission(tuple(tags), question_id=question.id)

    try:
        outcome = grade(question, submission)
    except ProofBlocksError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return ExitStatus.QUESTION_ERROR

    if args.json:
        _emit(_outcome_document(outcome))
    else:
        if outcome.status is GradeStatus.CORRECT:
            print("correct (score 1)")
        elif outcome.status is GradeStatus.WRONG_AT_LINE:
            print(
                f"wrong at line {outcome.first_failure} "
                f"(edit distance {outcome.edit_distance}, score {outcome.score})"
            )
        else:
            print(
                f"incomplete (edit distance {outcome.edit_distance}, "
                f"score {outcome.score})"
            )
    return ExitStatus.OK if outcome.status is GradeStatus.CORRECT else ExitStatus.INCORRECT


def _cmd_enumerate(args: argparse.Namespace) -> int:
    question, _ = _load(args.file, args.json)
    if question is None:
        return ExitStatus.QUESTION_ERROR
    try:
        orderings = valid_orderings(expand(question), limit=args.limit)
    except TooLargeError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return ExitStatus.USAGE
    if args.json:
        _emit({"orderings": [list(o) for o in orderings]})
    else:
        for ordering in orderings:
            print(",".join(ordering))
    return ExitStatus.OK


def _cmd_count(args: argparse.Namespace) -> int:
    question, _ = _load(args.file, args.json)
    if question is None:
        return ExitStatus.QUESTION_ERROR
    try:
        total = count_orderings(expand(question))
    except TooLargeError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return ExitStatus.USAGE
    if args.json:
        _emit({"count": total})
    else:
        print(total)
    return ExitStatus.OK


def _cmd_render(args: argparse.Namespace) -> int:
    try:
        seed = int(args.seed)
        if not 0 <= seed < 1 << 64:
            raise ValueError
    except ValueError:
        print("error: --seed must be an unsigned 64-bit integer", file=sys.stderr)
        return ExitStatus.USAGE
    question, _ = _load(args.file, args.json)
    if question is None:
        return ExitStatus.QUESTION_ERROR
    view = render_student_view(question, seed)
    if args.json:
        _emit(
            {
                "question_id": view.question_id,
                "seed": str(view.seed),
                "prompt": view.prompt,
                "blocks": [{"id": rid, "text": text} for rid, text in view.blocks],
            }
        )
    else:
        if view.prompt:
            print(view.prompt)
            print()
        for rid, text in view.blocks:
            print(f"[{rid}] {text}")
    return ExitStatus.OK


def _cmd_serve(args: argparse.Namespace) -> int:
    if args.questions_dir is None:
        print(
            f"error: pass --questions-dir or set ${QUESTIONS_DIR_ENV}", file=sys.stderr
        )
        return ExitStatus.USAGE
    import uvicorn

    from .service import QuestionStore, create_app

    store = QuestionStore.load(Path(args.questions_dir))
    app = create_app(
        store,
        cors_origins=tuple(args.cors_origin or ("*",)),
        static_dir=args.static_dir,
    )
    uvicorn.run(app, host=args.host, port=args.port, log_level="info")
    return ExitStatus.OK


if __name__ == "__main__":
    raise SystemExit(main())
