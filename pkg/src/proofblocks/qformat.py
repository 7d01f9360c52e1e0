"""Question markup parsing, student views, and submission documents.

The question format is a UTF-8 text file (conventionally ``*.pb.html``)
built from four recognized elements:

``<pl-question-panel>``
    The prompt shown above the exercise.  Its content is opaque display
    markup and is preserved verbatim (surrounding whitespace trimmed).
``<pl-order-blocks feedback="first-wrong|none" partial-credit="lcs|none">``
    The exercise container; attributes select the grading options.
``<pl-answer tag="..." depends="a,b" correct="true|false">``
    One draggable line.  ``depends`` is a comma-separated list of block or
    group tags; ``correct="false"`` marks a distractor.  Untagged answers
    receive synthetic tags ``d1, d2, ...`` in document order.
``<pl-block-group tag="..." depends="...">``
    A subproof whose member lines must stay contiguous.  Children must be
    ``pl-answer`` elements; groups do not nest.

Anything else is opaque: markup inside answer bodies and the prompt is
carried through untouched, and stray content between recognized elements
is ignored.  Parsing is strict about structure and reports findings with
stable codes (E01..E07 errors, W05/W06 warnings) and 1-based source lines.

Student views use a pinned shuffle so that render ids are reproducible
from ``(question, seed)`` alone, on any host: the block order comes from
a Fisher-Yates pass driven by the splitmix64 generator, seeded with
``seed XOR fnv1a64(question_id)``.  Changing any of these ingredients
would invalidate outstanding render ids, so they are part of the wire
contract.
"""

from __future__ import annotations

import json
import re
from bisect import bisect_right
from dataclasses import dataclass
from pathlib import Path
from typing import Iterator, Sequence

from .core import (
    Block,
    CycleError,
    DistractorDependencyError,
    FeedbackMode,
    GradingOptions,
    Group,
    ProofBlocksError,
    Question,
    QuestionError,
    ScoringMode,
    Severity,
    Submission,
    expand,
)

#: Tag that unknown render ids resolve to; never placeable by the grader.
UNKNOWN_TAG = "__unknown__"

QUESTION_SUFFIX = ".pb.html"

_IDENT_RE = re.compile(r"[A-Za-z0-9_][A-Za-z0-9_.:-]*\Z")

_PL_TAG_RE = re.compile(
    r"<\s*(?P<close>/?)\s*(?P<name>pl-[a-zA-Z][a-zA-Z0-9-]*)"
    r"\s*(?P<attrs>(?:[^<>\"']|\"[^\"]*\"|'[^']*')*?)\s*(?P<selfclose>/?)\s*>"
)
_ATTR_RE = re.compile(
    r"\s*(?P<name>[a-zA-Z_][a-zA-Z0-9_-]*)"
    r"(?:\s*=\s*(?:\"(?P<dq>[^\"]*)\"|'(?P<sq>[^']*)'))?"
)
_COMMENT_RE = re.compile(r"<!--.*?-->", re.DOTALL)

_RECOGNIZED = {"pl-question-panel", "pl-order-blocks", "pl-answer", "pl-block-group"}

_FEEDBACK_VALUES = {"first-wrong": FeedbackMode.FIRST_FAILURE, "none": FeedbackMode.NONE}
_CREDIT_VALUES = {"lcs": ScoringMode.EDIT_DISTANCE, "none": ScoringMode.BINARY}
_FEEDBACK_ATTR = {v: k for k, v in _FEEDBACK_VALUES.items()}
_CREDIT_ATTR = {v: k for k, v in _CREDIT_VALUES.items()}


class SubmissionFormatError(ProofBlocksError):
    """A submission document is malformed; carries a 1-based position."""

    def __init__(self, message: str, line: int = 1, column: int = 1):
        super().__init__(f"{message} (line {line}, column {column})")
        self.line = line
        self.column = column


@dataclass(frozen=True)
class ParseFinding:
    severity: Severity
    code: str
    line: int
    message: str


@dataclass(frozen=True)
class ParseResult:
    """Outcome of parsing question markup.

    ``question`` is present exactly when no error-severity finding was
    emitted; warnings may accompany a successful parse.
    """

    question: Question | None
    findings: tuple[ParseFinding, ...]

    @property
    def ok(self) -> bool:
        return self.question is not None

    @property
    def errors(self) -> tuple[ParseFinding, ...]:
        return tuple(f for f in self.findings if f.severity is Severity.ERROR)

    def unwrap(self) -> Question:
        if self.question is None:
            raise QuestionError(
                "question markup has errors: "
                + "; ".join(f"{f.code} line {f.line}: {f.message}" for f in self.errors)
            )
        return self.question


@dataclass(frozen=True)
class StudentView:
    """Seeded, shuffled, dependency-stripped presentation of a question.

    ``blocks`` pairs an opaque render id with display markup; nothing in a
    view reveals tags, dependencies, groups, or which lines are distractors.
    """

    question_id: str
    seed: int
    prompt: str
    blocks: tuple[tuple[str, str], ...]


@dataclass
class _RawAnswer:
    line: int
    attrs: dict[str, str]
    text: str
    group_index: int | None


@dataclass
class _RawGroup:
    line: int
    attrs: dict[str, str]


class _Scanner:
    """Tokenizes the four recognized pl- elements; everything else is opaque."""

    def __init__(self, text: str):
        self.text = text
        # Comments are blanked (not removed) so offsets and line numbers
        # survive; verbatim slices still come from the original text.
        self.scan_text = _COMMENT_RE.sub(lambda m: " " * len(m.group()), text)
        self.line_starts = [0] + [m.end() for m in re.finditer(r"\n", text)]
        self.findings: list[ParseFinding] = []
        self.prompt_parts: list[str] = []
        self.answers: list[_RawAnswer] = []
        self.groups: list[_RawGroup] = []
        self.order_attrs: dict[str, str] | None = None
        self.order_line = 1

    def line_of(self, offset: int) -> int:
        return bisect_right(self.line_starts, offset)

    def error(self, code: str, line: int, message: str) -> None:
        self.findings.append(ParseFinding(Severity.ERROR, code, line, message))

    def parse_attrs(self, blob: str, line: int) -> dict[str, str]:
        attrs: dict[str, str] = {}
        pos = 0
        while pos < len(blob):
            m = _ATTR_RE.match(blob, pos)
            if m is None or m.end() == pos:
                self.error("E06", line, f"cannot parse attributes: {blob[pos:]!r}")
                break
            value = m.group("dq")
            if value is None:
                value = m.group("sq")
            attrs[m.group("name")] = "" if value is None else value
            pos = m.end()
        return attrs

    def scan(self) -> None:
        # Stack frames: (element, opening line, attrs, content start offset,
        # enclosing group index or None).
        stack: list[tuple[str, int, dict[str, str], int, int | None]] = []

        for m in _PL_TAG_RE.finditer(self.scan_text):
            name = m.group("name")
            closing = bool(m.group("close"))
            selfclosing = bool(m.group("selfclose"))
            line = self.line_of(m.start())
            context = stack[-1][0] if stack else "top"

            if context == "pl-question-panel":
                if closing and name == "pl-question-panel":
                    _, _, _, start, _ = stack.pop()
                    self.prompt_parts.append(self.text[start : m.start()].strip())
                elif not closing and name in _RECOGNIZED:
                    self.error("E06", line, f"<{name}> not allowed inside the prompt panel")
                # other pl-* markup inside the prompt is opaque display text
                continue

            if context == "pl-answer":
                if closing and name == "pl-answer":
                    _, open_line, attrs, start, group_index = stack.pop()
                    self.answers.append(
                        _RawAnswer(
                            line=open_line,
                            attrs=attrs,
                            text=self.text[start : m.start()].strip(),
                            group_index=group_index,
                        )
                    )
                elif name in _RECOGNIZED:
                    self.error("E06", line, f"<{name}> cannot appear inside a proof line")
                # anything else stays verbatim in the line's display markup
                continue

            if closing:
                if name == context and name in ("pl-order-blocks", "pl-block-group"):
                    stack.pop()
                else:
                    self.error("E06", line, f"unexpected closing tag </{name}>")
                continue

            if name == "pl-question-panel":
                if context != "top":
                    self.error("E06", line, "prompt panel must be a top-level element")
                elif selfclosing:
                    self.prompt_parts.append("")
                else:
                    stack.append((name, line, {}, m.end(), None))
            elif name == "pl-order-blocks":
                if context != "top":
                    self.error("E06", line, "<pl-order-blocks> must be a top-level element")
                elif self.order_attrs is not None:
                    self.error("E06", line, "only one <pl-order-blocks> element is allowed")
                else:
                    self.order_attrs = self.parse_attrs(m.group("attrs"), line)
                    self.order_line = line
                    if not selfclosing:
                        stack.append((name, line, {}, m.end(), None))
            elif name == "pl-block-group":
                if context not in ("pl-order-blocks", "pl-block-group"):
                    self.error(
                        "E06", line, "<pl-block-group> only appears inside <pl-order-blocks>"
                    )
                else:
                    if context == "pl-block-group":
                        # keep scanning inside the rejected group so one
                        # authoring mistake yields one finding
                        self.error("E05", line, "block groups do not nest")
                    attrs = self.parse_attrs(m.group("attrs"), line)
                    self.groups.append(_RawGroup(line=line, attrs=attrs))
                    if not selfclosing:
                        stack.append((name, line, attrs, m.end(), len(self.groups) - 1))
            elif name == "pl-answer":
                if context not in ("pl-order-blocks", "pl-block-group"):
                    self.error("E06", line, "<pl-answer> only appears inside <pl-order-blocks>")
                else:
                    attrs = self.parse_attrs(m.group("attrs"), line)
                    group_index = stack[-1][4] if context == "pl-block-group" else None
                    if selfclosing:
                        self.answers.append(
                            _RawAnswer(line=line, attrs=attrs, text="", group_index=group_index)
                        )
                    else:
                        stack.append((name, line, attrs, m.end(), group_index))
            else:
                self.error("E06", line, f"unknown element <{name}>")

        for element, line, _, _, _ in stack:
            self.error("E06", line, f"<{element}> is never closed")


class _TagFountain:
    """Hands out prefix1, prefix2, ... tags, skipping author-taken names."""

    def __init__(self, prefix: str, taken: set[str]):
        self.prefix = prefix
        self.taken = taken
        self.counter = 0

    def next(self) -> str:
        while True:
            self.counter += 1
            candidate = f"{self.prefix}{self.counter}"
            if candidate not in self.taken:
                self.taken.add(candidate)
                return candidate


def parse_question(text: str, question_id: str = "") -> ParseResult:
    """Parse question markup into a :class:`Question`.

    Returns a :class:`ParseResult`; the question is absent when any error
    finding (codes E01..E07) was produced.  Warnings (ignored attributes,
    dropped distractor dependencies) accompany successful parses.
    """
    scanner = _Scanner(text)
    scanner.scan()
    findings = scanner.findings

    if scanner.order_attrs is None:
        findings.append(
            ParseFinding(Severity.ERROR, "E07", 1, "question has no <pl-order-blocks> element")
        )
        return ParseResult(None, tuple(findings))

    options, option_findings = _read_options(scanner.order_attrs, scanner.order_line)
    findings.extend(option_findings)

    taken = {a.attrs["tag"].strip() for a in scanner.answers if a.attrs.get("tag", "").strip()}
    taken |= {g.attrs["tag"].strip() for g in scanner.groups if g.attrs.get("tag", "").strip()}
    answer_tags = _TagFountain("d", taken)
    group_tags = _TagFountain("g", taken)

    declarations: list[tuple[str, int]] = []
    group_tag_by_index: dict[int, str] = {}
    group_members: dict[int, list[str]] = {}
    line_by_tag: dict[str, int] = {}
    blocks: list[Block] = []

    for index, raw in enumerate(scanner.groups):
        _warn_extra_attrs(raw.attrs, {"tag", "depends"}, raw.line, findings)
        tag = _read_tag(raw.attrs, raw.line, group_tags, findings)
        if tag is None:
            continue
        group_tag_by_index[index] = tag
        group_members[index] = []
        line_by_tag.setdefault(tag, raw.line)
        declarations.append((tag, raw.line))

    for raw in scanner.answers:
        _warn_extra_attrs(raw.attrs, {"tag", "depends", "correct"}, raw.line, findings)
        correct_value = raw.attrs.get("correct", "true").strip().lower()
        if correct_value not in ("true", "false"):
            findings.append(
                ParseFinding(
                    Severity.ERROR,
                    "E06",
                    raw.line,
                    f"correct={raw.attrs.get('correct')!r} must be \"true\" or \"false\"",
                )
            )
            continue
        tag = _read_tag(raw.attrs, raw.line, answer_tags, findings)
        if tag is None:
            continue
        is_distractor = correct_value == "false"
        depends = _split_depends(raw.attrs.get("depends", ""))
        if is_distractor and depends:
            findings.append(
                ParseFinding(
                    Severity.WARNING,
                    "W06",
                    raw.line,
                    f"distractor {tag!r} cannot carry dependencies; ignored",
                )
            )
            depends = ()
        group_tag: str | None = None
        if raw.group_index is not None:
            if is_distractor:
                findings.append(
                    ParseFinding(
                        Severity.ERROR,
                        "E06",
                        raw.line,
                        "a distractor line cannot appear inside a block group",
                    )
                )
                continue
            group_tag = group_tag_by_index.get(raw.group_index)
            if group_tag is not None:
                group_members[raw.group_index].append(tag)
        line_by_tag.setdefault(tag, raw.line)
        declarations.append((tag, raw.line))
        blocks.append(
            Block(
                tag=tag,
                text=raw.text,
                is_distractor=is_distractor,
                depends=depends,
                group=group_tag,
            )
        )

    seen: set[str] = set()
    for tag, line in declarations:
        if tag in seen:
            findings.append(ParseFinding(Severity.ERROR, "E02", line, f"duplicate tag {tag!r}"))
        seen.add(tag)

    if _has_errors(findings):
        return ParseResult(None, tuple(findings))

    groups = tuple(
        Group(
            tag=group_tag_by_index[i],
            members=tuple(group_members[i]),
            depends=_split_depends(scanner.groups[i].attrs.get("depends", "")),
        )
        for i in sorted(group_tag_by_index)
    )
    for group in groups:
        if not group.members:
            findings.append(
                ParseFinding(
                    Severity.ERROR,
                    "E06",
                    line_by_tag[group.tag],
                    f"block group {group.tag!r} has no member lines",
                )
            )

    declared = {b.tag for b in blocks} | {g.tag for g in groups}
    distractor_tags = {b.tag for b in blocks if b.is_distractor}
    for owner, refs, line in _dependency_sites(blocks, groups, line_by_tag):
        for ref in refs:
            if ref not in declared:
                findings.append(
                    ParseFinding(
                        Severity.ERROR, "E01", line, f"{owner!r} depends on unknown tag {ref!r}"
                    )
                )
            elif ref in distractor_tags:
                findings.append(
                    ParseFinding(
                        Severity.ERROR, "E04", line, f"{owner!r} depends on distractor {ref!r}"
                    )
                )

    if not any(not b.is_distractor for b in blocks):
        findings.append(
            ParseFinding(
                Severity.ERROR,
                "E07",
                scanner.order_line,
                "question has no required (correct) blocks",
            )
        )

    if _has_errors(findings):
        return ParseResult(None, tuple(findings))

    prompt = "\n\n".join(part for part in scanner.prompt_parts if part)
    try:
        question = Question(
            id=question_id,
            prompt=prompt,
            blocks=tuple(blocks),
            groups=groups,
            options=options,
        )
        expand(question)
    except CycleError as exc:
        findings.append(
            ParseFinding(
                Severity.ERROR,
                "E03",
                scanner.order_line,
                f"dependencies form a cycle: {' -> '.join(exc.cycle)}",
            )
        )
        return ParseResult(None, tuple(findings))
    except DistractorDependencyError as exc:  # pragma: no cover - caught above
        findings.append(ParseFinding(Severity.ERROR, "E04", scanner.order_line, str(exc)))
        return ParseResult(None, tuple(findings))
    except QuestionError as exc:  # pragma: no cover - defensive
        findings.append(ParseFinding(Severity.ERROR, "E06", scanner.order_line, str(exc)))
        return ParseResult(None, tuple(findings))

    return ParseResult(question, tuple(findings))


def _read_tag(
    attrs: dict[str, str],
    line: int,
    fountain: _TagFountain,
    findings: list[ParseFinding],
) -> str | None:
    raw = attrs.get("tag")
    if raw is None or raw.strip() == "":
        return fountain.next()
    tag = raw.strip()
    if tag == UNKNOWN_TAG:
        findings.append(
            ParseFinding(Severity.ERROR, "E06", line, f"tag {UNKNOWN_TAG!r} is reserved")
        )
        return None
    if not _IDENT_RE.match(tag):
        findings.append(
            ParseFinding(Severity.ERROR, "E06", line, f"tag {tag!r} is not a valid identifier")
        )
        return None
    return tag


def _warn_extra_attrs(
    attrs: dict[str, str],
    known: set[str],
    line: int,
    findings: list[ParseFinding],
) -> None:
    for name in attrs:
        if name not in known:
            findings.append(
                ParseFinding(Severity.WARNING, "W05", line, f"attribute {name!r} is ignored")
            )


def _read_options(
    attrs: dict[str, str], line: int
) -> tuple[GradingOptions, list[ParseFinding]]:
    findings: list[ParseFinding] = []
    feedback = FeedbackMode.FIRST_FAILURE
    scoring = ScoringMode.EDIT_DISTANCE
    for name, value in attrs.items():
        if name == "feedback":
            if value in _FEEDBACK_VALUES:
                feedback = _FEEDBACK_VALUES[value]
            else:
                findings.append(
                    ParseFinding(
                        Severity.ERROR,
                        "E06",
                        line,
                        f'feedback={value!r} must be "first-wrong" or "none"',
                    )
                )
        elif name == "partial-credit":
            if value in _CREDIT_VALUES:
                scoring = _CREDIT_VALUES[value]
            else:
                findings.append(
                    ParseFinding(
                        Severity.ERROR,
                        "E06",
                        line,
                        f'partial-credit={value!r} must be "lcs" or "none"',
                    )
                )
        else:
            findings.append(
                ParseFinding(Severity.WARNING, "W05", line, f"attribute {name!r} is ignored")
            )
    return GradingOptions(feedback_mode=feedback, scoring_mode=scoring), findings


def _split_depends(raw: str) -> tuple[str, ...]:
    return tuple(part.strip() for part in raw.split(",") if part.strip())


def _dependency_sites(
    blocks: Sequence[Block], groups: Sequence[Group], line_by_tag: dict[str, int]
) -> Iterator[tuple[str, tuple[str, ...], int]]:
    for block in blocks:
        if block.depends:
            yield block.tag, block.depends, line_by_tag.get(block.tag, 1)
    for group in groups:
        if group.depends:
            yield group.tag, group.depends, line_by_tag.get(group.tag, 1)


def _has_errors(findings: Sequence[ParseFinding]) -> bool:
    return any(f.severity is Severity.ERROR for f in findings)


def load_question(path: str | Path) -> ParseResult:
    """Read and parse a question file; the id is the name sans ``.pb.html``.

    Line endings are normalized (CRLF accepted) before parsing.
    """
    path = Path(path)
    text = path.read_text(encoding="utf-8").replace("\r\n", "\n")
    return parse_question(text, question_id=question_id_for(path))


def question_id_for(path: str | Path) -> str:
    name = Path(path).name
    if name.endswith(QUESTION_SUFFIX):
        return name[: -len(QUESTION_SUFFIX)]
    return Path(path).stem


def parse_submission(text: str) -> Submission:
    """Parse a submission document: ``{"question_id": ..., "ordering": [...]}``.

    The ordering passes through unvalidated (grading totalizes over junk);
    only the document structure is checked.
    """
    try:
        doc = json.loads(text)
    except json.JSONDecodeError as exc:
        raise SubmissionFormatError(exc.msg, exc.lineno, exc.colno) from None
    if not isinstance(doc, dict):
        raise SubmissionFormatError("submission must be a JSON object")
    question_id = doc.get("question_id")
    ordering = doc.get("ordering")
    if not isinstance(question_id, str):
        raise SubmissionFormatError('submission needs a string "question_id" field')
    if not isinstance(ordering, list) or not all(isinstance(t, str) for t in ordering):
        raise SubmissionFormatError('"ordering" must be a list of strings')
    return Submission(ordering=tuple(ordering), question_id=question_id)


_MASK64 = (1 << 64) - 1


def _fnv1a64(data: bytes) -> int:
    """FNV-1a 64-bit; the pinned stable hash for question ids."""
    h = 0xCBF29CE484222325
    for byte in data:
        h ^= byte
        h = (h * 0x100000001B3) & _MASK64
    return h


class _SplitMix64:
    """splitmix64; the pinned generator behind student-view shuffles."""

    def __init__(self, seed: int):
        self.state = seed & _MASK64

    def next(self) -> int:
        self.state = (self.state + 0x9E3779B97F4A7C15) & _MASK64
        z = self.state
        z = ((z ^ (z >> 30)) * 0xBF58476D1CE4E5B9) & _MASK64
        z = ((z ^ (z >> 27)) * 0x94D049BB133111EB) & _MASK64
        return z ^ (z >> 31)


def _check_seed(seed: int) -> int:
    if not 0 <= seed <= _MASK64:
        raise ValueError("seed must be an unsigned 64-bit integer")
    return seed


def _shuffled_indices(question: Question, seed: int) -> list[int]:
    rng = _SplitMix64(_check_seed(seed) ^ _fnv1a64(question.id.encode("utf-8")))
    order = list(range(len(question.blocks)))
    for i in range(len(order) - 1, 0, -1):
        j = rng.next() % (i + 1)
        order[i], order[j] = order[j], order[i]
    return order


def _render_id(position: int, total: int) -> str:
    width = max(2, len(str(total)))
    return f"{position:0{width}d}"


def render_student_view(question: Question, seed: int) -> StudentView:
    """Deterministic shuffled view of all blocks for one (question, seed).

    Render ids are the 1-based, zero-padded positions in the shuffled
    order; the id-to-tag mapping is reproducible server-side from the
    same inputs (see module docstring for the pinned algorithm).
    """
    order = _shuffled_indices(question, seed)
    total = len(order)
    shuffled = tuple(
        (_render_id(pos, total), question.blocks[block_index].text)
        for pos, block_index in enumerate(order, start=1)
    )
    return StudentView(
        question_id=question.id, seed=seed, prompt=question.prompt, blocks=shuffled
    )


def resolve_ordering(
    question: Question, seed: int, render_ids: Sequence[str]
) -> list[str]:
    """Map render ids from a student view back to block tags.

    Unknown render ids become :data:`UNKNOWN_TAG`, which no graph contains,
    so they grade as wrong lines rather than erroring.
    """
    order = _shuffled_indices(question, seed)
    total = len(order)
    tag_by_render_id = {
        _render_id(pos, total): question.blocks[block_index].tag
        for pos, block_index in enumerate(order, start=1)
    }
    return [tag_by_render_id.get(rid, UNKNOWN_TAG) for rid in render_ids]


def serialize_question(question: Question) -> str:
    """Canonical markup for a question; ``parse_question`` round-trips it.

    Requires group members to sit consecutively in author block order,
    which holds for every question produced by the parser.
    """
    lines: list[str] = []
    if question.prompt:
        lines.append("<pl-question-panel>")
        lines.append(question.prompt)
        lines.append("</pl-question-panel>")
    options = question.options
    lines.append(
        "<pl-order-blocks"
        f' feedback="{_FEEDBACK_ATTR[options.feedback_mode]}"'
        f' partial-credit="{_CREDIT_ATTR[options.scoring_mode]}">'
    )
    groups_by_tag = {g.tag: g for g in question.groups}
    emitted_groups: set[str] = set()

    def answer_line(block: Block, indent: str) -> str:
        parts = [f'{indent}<pl-answer tag="{block.tag}"']
        if block.depends:
            parts.append(f' depends="{",".join(block.depends)}"')
        if block.is_distractor:
            parts.append(' correct="false"')
        parts.append(f">{block.text}</pl-answer>")
        return "".join(parts)

    i = 0
    blocks = question.blocks
    while i < len(blocks):
        block = blocks[i]
        if block.group is None:
            lines.append(answer_line(block, "  "))
            i += 1
            continue
        group = groups_by_tag[block.group]
        if group.tag in emitted_groups:
            raise QuestionError(
                f"group {group.tag!r} members are not consecutive in author order"
            )
        emitted_groups.add(group.tag)
        attrs = f' tag="{group.tag}"'
        if group.depends:
            attrs += f' depends="{",".join(group.depends)}"'
        lines.append(f"  <pl-block-group{attrs}>")
        pending = set(group.members)
        while i < len(blocks) and blocks[i].group == group.tag:
            lines.append(answer_line(blocks[i], "    "))
            pending.discard(blocks[i].tag)
            i += 1
        if pending:
            raise QuestionError(
                f"group {group.tag!r} members are not consecutive in author order"
            )
        lines.append("  </pl-block-group>")
    lines.append("</pl-order-blocks>")
    return "\n".join(lines) + "\n"
