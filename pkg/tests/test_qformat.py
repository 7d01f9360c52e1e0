import random

import pytest

from proofblocks import (
    Severity,
    Submission,
    SubmissionFormatError,
    UNKNOWN_TAG,
    expand,
    load_question,
    parse_question,
    parse_submission,
    render_student_view,
    resolve_ordering,
    serialize_question,
)

from helpers import random_question

MINIMAL = '<pl-order-blocks><pl-answer tag="a">x</pl-answer></pl-order-blocks>'


def codes(result):
    return {f.code for f in result.findings}


def error_codes(result):
    return {f.code for f in result.errors}


class TestParseQuestion:
    def test_fig1_fixture(self, fig1_question):
        assert fig1_question.id == "fig1"
        assert len(fig1_question.blocks) == 7
        assert not any(b.is_distractor for b in fig1_question.blocks)
        assert "even" in fig1_question.prompt
        graph = expand(fig1_question)
        assert graph.edges == frozenset(
            [("1", "2"), ("2", "3"), ("4", "5"), ("5", "6"), ("3", "7"), ("6", "7")]
        )

    def test_minimal_question(self):
        result = parse_question(MINIMAL, question_id="mini")
        assert result.ok and not result.findings
        question = result.unwrap()
        assert [b.tag for b in question.blocks] == ["a"]
        assert expand(question).edges == frozenset()

    def test_unknown_depends_is_e01_with_line(self):
        text = '<pl-order-blocks>\n<pl-answer tag="a" depends="z">x</pl-answer>\n</pl-order-blocks>'
        result = parse_question(text)
        assert not result.ok
        assert error_codes(result) == {"E01"}
        (finding,) = result.errors
        assert finding.line == 2

    def test_untagged_answers_get_synthetic_tags(self):
        text = (
            "<pl-order-blocks>"
            "<pl-answer>first</pl-answer>"
            "<pl-answer>second</pl-answer>"
            '<pl-answer correct="false">junk</pl-answer>'
            "</pl-order-blocks>"
        )
        question = parse_question(text).unwrap()
        assert [b.tag for b in question.blocks] == ["d1", "d2", "d3"]

    def test_synthetic_tags_skip_taken_names(self):
        text = (
            "<pl-order-blocks>"
            '<pl-answer tag="d1">explicit</pl-answer>'
            "<pl-answer>needs a tag</pl-answer>"
            "</pl-order-blocks>"
        )
        question = parse_question(text).unwrap()
        assert [b.tag for b in question.blocks] == ["d1", "d2"]

    def test_groups_and_options(self, induction_question):
        assert [g.tag for g in induction_question.groups] == ["B", "I"]
        assert induction_question.groups[0].members == ("b1", "b2")
        graph = expand(induction_question)
        assert frozenset({"b1", "b2"}) in graph.contiguity_sets

    def test_grading_option_attributes(self):
        text = (
            '<pl-order-blocks feedback="none" partial-credit="none">'
            '<pl-answer tag="a">x</pl-answer></pl-order-blocks>'
        )
        question = parse_question(text).unwrap()
        assert question.options.feedback_mode.value == "none"
        assert question.options.scoring_mode.value == "binary"

    def test_bad_option_value_is_an_error(self):
        text = (
            '<pl-order-blocks feedback="everything">'
            '<pl-answer tag="a">x</pl-answer></pl-order-blocks>'
        )
        assert error_codes(parse_question(text)) == {"E06"}

    def test_unmodeled_attributes_warn_and_parse(self):
        text = (
            '<pl-order-blocks answers-name="proof" grading-method="dag">'
            '<pl-answer tag="a" indent="2">x</pl-answer></pl-order-blocks>'
        )
        result = parse_question(text)
        assert result.ok
        warnings = [f for f in result.findings if f.severity is Severity.WARNING]
        assert {f.code for f in warnings} == {"W05"}
        assert len(warnings) == 3

    def test_distractor_depends_dropped_with_warning(self):
        text = (
            "<pl-order-blocks>"
            '<pl-answer tag="a">x</pl-answer>'
            '<pl-answer tag="d" correct="false" depends="a">junk</pl-answer>'
            "</pl-order-blocks>"
        )
        result = parse_question(text)
        assert result.ok
        assert codes(result) == {"W06"}
        distractor = result.unwrap().blocks[1]
        assert distractor.is_distractor and distractor.depends == ()

    def test_inline_markup_preserved_verbatim(self):
        text = (
            "<pl-order-blocks>"
            '<pl-answer tag="a">Let <em>x</em> &#8712; A &amp; B.</pl-answer>'
            "</pl-order-blocks>"
        )
        question = parse_question(text).unwrap()
        assert question.blocks[0].text == "Let <em>x</em> &#8712; A &amp; B."

    def test_comments_are_ignored_for_structure(self):
        text = (
            "<pl-order-blocks>"
            "<!-- <pl-answer tag='ghost'>never</pl-answer> -->"
            '<pl-answer tag="a">x</pl-answer>'
            "</pl-order-blocks>"
        )
        question = parse_question(text).unwrap()
        assert [b.tag for b in question.blocks] == ["a"]

    def test_distractor_inside_group_rejected(self):
        text = (
            "<pl-order-blocks>"
            '<pl-block-group tag="G">'
            '<pl-answer tag="a">x</pl-answer>'
            '<pl-answer tag="d" correct="false">junk</pl-answer>'
            "</pl-block-group>"
            "</pl-order-blocks>"
        )
        assert error_codes(parse_question(text)) == {"E06"}


E_CODE_FIXTURES = {
    "E01": "e01_unknown_dep.pb.html",
    "E02": "e02_duplicate_tag.pb.html",
    "E03": "e03_cycle.pb.html",
    "E04": "e04_depends_on_distractor.pb.html",
    "E05": "e05_nested_group.pb.html",
    "E06": "e06_unclosed.pb.html",
    "E07": "e07_no_blocks.pb.html",
}


class TestErrorFixtures:
    @pytest.mark.parametrize("code,name", sorted(E_CODE_FIXTURES.items()))
    def test_fixture_triggers_exactly_its_code(self, fixtures_dir, code, name):
        result = load_question(fixtures_dir / "errors" / name)
        assert not result.ok
        assert error_codes(result) == {code}


class TestSerializeRoundTrip:
    def test_fig1_round_trips(self, fig1_question):
        text = serialize_question(fig1_question)
        assert parse_question(text, question_id=fig1_question.id).unwrap() == fig1_question

    def test_induction_round_trips(self, induction_question):
        text = serialize_question(induction_question)
        reparsed = parse_question(text, question_id=induction_question.id).unwrap()
        assert reparsed == induction_question

    def test_random_questions_round_trip(self):
        rng = random.Random(4321)
        for _ in range(50):
            question = random_question(rng)
            text = serialize_question(question)
            assert parse_question(text, question_id=question.id).unwrap() == question


class TestStudentView:
    def test_same_seed_same_view(self, fig1_question):
        assert render_student_view(fig1_question, 42) == render_student_view(fig1_question, 42)

    def test_view_is_a_permutation_of_block_texts(self, evensum_question):
        view = render_student_view(evensum_question, 7)
        assert sorted(text for _, text in view.blocks) == sorted(
            b.text for b in evensum_question.blocks
        )
        assert len(view.blocks) == len(evensum_question.blocks)

    def test_seeds_differ_somewhere(self, fig1_question):
        views = {render_student_view(fig1_question, s).blocks for s in range(1, 101)}
        assert len(views) > 1

    def test_render_ids_are_padded_positions(self, fig1_question):
        view = render_student_view(fig1_question, 3)
        assert [rid for rid, _ in view.blocks] == [f"{i:02d}" for i in range(1, 8)]

    def test_view_carries_no_structure(self, fig1_question):
        view = render_student_view(fig1_question, 99)
        assert set(vars(view)) == {"question_id", "seed", "prompt", "blocks"}

    def test_seed_out_of_range_rejected(self, fig1_question):
        with pytest.raises(ValueError):
            render_student_view(fig1_question, -1)
        with pytest.raises(ValueError):
            render_student_view(fig1_question, 1 << 64)

    def test_resolve_round_trips_for_many_seeds(self, fig1_question):
        rng = random.Random(12)
        for _ in range(100):
            seed = rng.getrandbits(64)
            view = render_student_view(fig1_question, seed)
            tags = resolve_ordering(fig1_question, seed, [rid for rid, _ in view.blocks])
            texts_by_tag = {b.tag: b.text for b in fig1_question.blocks}
            assert [texts_by_tag[t] for t in tags] == [text for _, text in view.blocks]
            assert sorted(tags) == sorted(b.tag for b in fig1_question.blocks)

    def test_resolve_empty_and_bogus_ids(self, fig1_question):
        assert resolve_ordering(fig1_question, 5, []) == []
        view = render_student_view(fig1_question, 5)
        rids = [rid for rid, _ in view.blocks]
        rids[3] = "bogus"
        resolved = resolve_ordering(fig1_question, 5, rids)
        assert resolved[3] == UNKNOWN_TAG
        assert all(t != UNKNOWN_TAG for i, t in enumerate(resolved) if i != 3)


class TestParseSubmission:
    def test_round_trip(self):
        sub = parse_submission('{"question_id":"fig1","ordering":["1","4","2","3","5","6","7"]}')
        assert sub == Submission(("1", "4", "2", "3", "5", "6", "7"), question_id="fig1")

    def test_empty_ordering(self):
        assert parse_submission('{"question_id":"fig1","ordering":[]}').ordering == ()

    def test_truncated_document(self):
        with pytest.raises(SubmissionFormatError) as exc:
            parse_submission('{"question_id":"fig1","ordering":["1",')
        assert exc.value.line >= 1

    @pytest.mark.parametrize(
        "text",
        [
            "[]",
            '{"ordering":["1"]}',
            '{"question_id":"q"}',
            '{"question_id":"q","ordering":"12"}',
            '{"question_id":"q","ordering":[1,2]}',
        ],
    )
    def test_structural_errors(self, text):
        with pytest.raises(SubmissionFormatError):
            parse_submission(text)


class TestLoadQuestion:
    def test_crlf_normalized(self, tmp_path):
        crlf = MINIMAL.replace("><", ">\r\n<")
        path = tmp_path / "windows.pb.html"
        path.write_bytes(crlf.encode("utf-8"))
        result = load_question(path)
        assert result.ok
        assert result.unwrap().id == "windows"
