"""Stateless HTTP API over a question directory.

Endpoints (JSON over HTTP/1.1, UTF-8):

- ``GET /api/questions`` lists ``{"id", "title"}`` pairs sorted by id.
- ``GET /api/questions/{id}?seed=S`` returns a shuffled student view;
  without a seed, a fresh random 64-bit one is drawn and echoed back.
- ``POST /api/questions/{id}/grade`` with ``{"seed": ..., "ordering":
  [render ids]}`` grades the ordering and returns ``{"status",
  "first_failure"?, "score", "attempt_echo"}``.

The seed in a request is the whole session state: views and grades are
reproducible from ``(question, seed)`` on any process, so the service
keeps nothing in memory beyond the questions parsed at startup.  Seeds
are serialized as decimal strings because 64-bit values overflow the
exact integer range of JSON implementations in browsers; requests may
send them as strings or numbers.

Responses never include tags, dependencies, group structure, distractor
flags, or edit distances; the only feedback is the grade status, the
score, and (when the question enables it) the first failing line.
"""

from __future__ import annotations

import logging
import re
import secrets
from dataclasses import dataclass
from pathlib import Path

from fastapi import FastAPI, HTTPException, Request
from fastapi.middleware.cors import CORSMiddleware
from fastapi.responses import JSONResponse
from fastapi.staticfiles import StaticFiles

from .core import ProofBlocksError, Question, Submission
from .grader import GradeStatus, grade
from .qformat import (
    QUESTION_SUFFIX,
    load_question,
    render_student_view,
    resolve_ordering,
)

logger = logging.getLogger(__name__)

_MAX_SEED = (1 << 64) - 1
_TAG_STRIP_RE = re.compile(r"<[^>]*>")
_TITLE_LIMIT = 80


@dataclass(frozen=True)
class QuestionStore:
    """Immutable snapshot of a question directory, keyed by file stem."""

    root: Path
    entries: dict[str, Question]

    @classmethod
    def load(cls, root: Path) -> "QuestionStore":
        entries: dict[str, Question] = {}
        for path in sorted(root.glob(f"*{QUESTION_SUFFIX}")):
            result = load_question(path)
            if result.question is None:
                details = "; ".join(
                    f"{f.code} line {f.line}: {f.message}" for f in result.errors
                )
                logger.warning("skipping %s: %s", path.name, details)
                continue
            entries[result.question.id] = result.question
        return cls(root=root, entries=entries)


def _title(question: Question) -> str:
    text = _TAG_STRIP_RE.sub(" ", question.prompt)
    text = " ".join(text.split())
    if len(text) > _TITLE_LIMIT:
        text = text[: _TITLE_LIMIT - 1].rstrip() + "…"
    return text


def _parse_seed(value: object) -> int:
    if isinstance(value, bool) or value is None:
        raise ValueError("seed must be an unsigned 64-bit integer")
    if isinstance(value, str):
        value = int(value, 10)
    if not isinstance(value, int) or not 0 <= value <= _MAX_SEED:
        raise ValueError("seed must be an unsigned 64-bit integer")
    return value


def create_app(
    store: QuestionStore,
    cors_origins: tuple[str, ...] = ("*",),
    static_dir: Path | None = None,
) -> FastAPI:
    app = FastAPI(title="proofblocks", docs_url=None, redoc_url=None)
    app.add_middleware(
        CORSMiddleware,
        allow_origins=list(cors_origins),
        allow_methods=["GET", "POST"],
        allow_headers=["Content-Type"],
    )

    def lookup(question_id: str) -> Question:
        question = store.entries.get(question_id)
        if question is None:
            raise HTTPException(status_code=404, detail="unknown question id")
        return question

    @app.get("/api/questions")
    def list_questions() -> JSONResponse:
        payload = [
            {"id": qid, "title": _title(store.entries[qid])}
            for qid in sorted(store.entries)
        ]
        return JSONResponse(payload)

    @app.get("/api/questions/{question_id}")
    def get_question(question_id: str, seed: str | None = None) -> JSONResponse:
        question = lookup(question_id)
        if seed is None:
            seed_value = secrets.randbits(64)
        else:
            try:
                seed_value = _parse_seed(seed)
            except ValueError as exc:
                raise HTTPException(status_code=400, detail=str(exc)) from None
        view = render_student_view(question, seed_value)
        return JSONResponse(
            {
                "question_id": view.question_id,
                "seed": str(view.seed),
                "prompt": view.prompt,
                "blocks": [{"id": rid, "text": text} for rid, text in view.blocks],
            }
        )

    @app.post("/api/questions/{question_id}/grade")
    async def post_grade(question_id: str, request: Request) -> JSONResponse:
        question = lookup(question_id)
        try:
            body = await request.json()
        except Exception:
            raise HTTPException(status_code=400, detail="body must be JSON") from None
        if not isinstance(body, dict):
            raise HTTPException(status_code=400, detail="body must be a JSON object")
        try:
            seed_value = _parse_seed(body.get("seed"))
        except ValueError as exc:
            raise HTTPException(status_code=400, detail=str(exc)) from None
        ordering = body.get("ordering")
        if not isinstance(ordering, list) or not all(
            isinstance(item, str) for item in ordering
        ):
            raise HTTPException(
                status_code=400, detail='"ordering" must be a list of render ids'
            )

        tags = resolve_ordering(question, seed_value, ordering)
        try:
            outcome = grade(question, Submission(tuple(tags), question_id=question.id))
        except ProofBlocksError as exc:
            # an unsolvable or oversized question slipped past validation
            raise HTTPException(status_code=500, detail=str(exc)) from None

        payload: dict = {"status": outcome.status.value}
        if outcome.status is GradeStatus.WRONG_AT_LINE:
            payload["first_failure"] = outcome.first_failure
        payload["score"] = float(outcome.score)
        payload["attempt_echo"] = list(ordering)
        return JSONResponse(payload)

    if static_dir is not None:
        app.mount("/", StaticFiles(directory=static_dir, html=True), name="client")

    return app
