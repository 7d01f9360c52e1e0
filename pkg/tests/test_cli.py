import json

from proofblocks import Block, Question, serialize_question
from proofblocks.cli import main

FIG1_ARGS = lambda fixtures_dir: str(fixtures_dir / "fig1.pb.html")  # noqa: E731


def run(capsys, *argv):
    code = main(list(argv))
    captured = capsys.readouterr()
    return code, captured.out, captured.err


class TestGradeCommand:
    def test_accepted_ordering_exits_zero(self, capsys, fixtures_dir):
        code, out, _ = run(
            capsys, "grade", FIG1_ARGS(fixtures_dir), "--ordering", "1,4,2,3,5,6,7"
        )
        assert code == 0
        assert out.startswith("correct")

    def test_wrong_ordering_exits_one_with_json(self, capsys, fixtures_dir):
        code, out, _ = run(
            capsys,
            "grade",
            FIG1_ARGS(fixtures_dir),
            "--ordering",
            "2,1,3,4,5,6,7",
            "--json",
        )
        assert code == 1
        doc = json.loads(out)
        assert doc["status"] == "wrong_at_line"
        assert doc["first_failure"] == 1
        assert doc["edit_distance"] == 2
        assert doc["score"] == {"numerator": 5, "denominator": 7, "decimal": 0.714286}

    def test_incomplete_ordering(self, capsys, fixtures_dir):
        code, out, _ = run(capsys, "grade", FIG1_ARGS(fixtures_dir), "--ordering", "1,2,3")
        assert code == 1
        assert out.startswith("incomplete")
        assert "3/7" in out

    def test_submission_file(self, capsys, fixtures_dir, tmp_path):
        sub = tmp_path / "attempt.json"
        sub.write_text(
            json.dumps({"question_id": "fig1", "ordering": list("1234567")}),
            encoding="utf-8",
        )
        code, out, _ = run(capsys, "grade", FIG1_ARGS(fixtures_dir), "--submission", str(sub))
        assert code == 0 and out.startswith("correct")

    def test_submission_for_other_question_is_usage_error(
        self, capsys, fixtures_dir, tmp_path
    ):
        sub = tmp_path / "attempt.json"
        sub.write_text(
            json.dumps({"question_id": "otherq", "ordering": []}), encoding="utf-8"
        )
        code, _, err = run(capsys, "grade", FIG1_ARGS(fixtures_dir), "--submission", str(sub))
        assert code == 3
        assert "otherq" in err

    def test_malformed_submission_is_usage_error(self, capsys, fixtures_dir, tmp_path):
        sub = tmp_path / "attempt.json"
        sub.write_text('{"question_id": "fig1"', encoding="utf-8")
        code, _, err = run(capsys, "grade", FIG1_ARGS(fixtures_dir), "--submission", str(sub))
        assert code == 3 and "error" in err

    def test_broken_question_is_question_error(self, capsys, fixtures_dir):
        code, _, err = run(
            capsys,
            "grade",
            str(fixtures_dir / "errors" / "e03_cycle.pb.html"),
            "--ordering",
            "a,b",
        )
        assert code == 2
        assert "E03" in err


class TestValidateCommand:
    def test_clean_question(self, capsys, fixtures_dir):
        code, out, _ = run(capsys, "validate", FIG1_ARGS(fixtures_dir))
        assert code == 0
        assert "I01" in out and "20" in out

    def test_chain_warns_but_passes(self, capsys, fixtures_dir):
        code, out, _ = run(
            capsys, "validate", str(fixtures_dir / "chain5.pb.html"), "--json"
        )
        assert code == 0
        doc = json.loads(out)
        codes = {f["code"] for f in doc["findings"]}
        assert "W01" in codes and "I01" in codes

    def test_error_fixture_exits_two(self, capsys, fixtures_dir):
        code, out, _ = run(
            capsys, "validate", str(fixtures_dir / "errors" / "e01_unknown_dep.pb.html")
        )
        assert code == 2
        assert "E01" in out

    def test_missing_file_is_usage_error(self, capsys, tmp_path):
        code, _, err = run(capsys, "validate", str(tmp_path / "nope.pb.html"))
        assert code == 3 and err


class TestEnumerateAndCount:
    def test_count_chain_is_one(self, capsys, fixtures_dir):
        code, out, _ = run(capsys, "count", str(fixtures_dir / "chain5.pb.html"))
        assert code == 0 and out.strip() == "1"

    def test_count_fig1_json(self, capsys, fixtures_dir):
        code, out, _ = run(capsys, "count", FIG1_ARGS(fixtures_dir), "--json")
        assert code == 0 and json.loads(out) == {"count": 20}

    def test_enumerate_fig1(self, capsys, fixtures_dir):
        code, out, _ = run(capsys, "enumerate", FIG1_ARGS(fixtures_dir))
        lines = out.strip().splitlines()
        assert code == 0 and len(lines) == 20
        assert lines[0] == "1,2,3,4,5,6,7"

    def test_enumerate_limit(self, capsys, fixtures_dir):
        code, out, _ = run(capsys, "enumerate", FIG1_ARGS(fixtures_dir), "--limit", "3")
        assert code == 0 and len(out.strip().splitlines()) == 3

    def test_enumerate_guard_requires_limit(self, capsys, tmp_path):
        question = Question(
            id="big",
            prompt="",
            blocks=tuple(Block(f"t{i}", f"line {i}") for i in range(11)),
        )
        path = tmp_path / "big.pb.html"
        path.write_text(serialize_question(question), encoding="utf-8")
        code, _, err = run(capsys, "enumerate", str(path))
        assert code == 3 and "limit" in err
        code, out, _ = run(capsys, "enumerate", str(path), "--limit", "2")
        assert code == 0 and len(out.strip().splitlines()) == 2


class TestRenderCommand:
    def test_render_json_shape(self, capsys, fixtures_dir):
        code, out, _ = run(capsys, "render", FIG1_ARGS(fixtures_dir), "--seed", "42", "--json")
        assert code == 0
        doc = json.loads(out)
        assert doc["question_id"] == "fig1"
        assert doc["seed"] == "42"
        assert len(doc["blocks"]) == 7
        assert set(doc) == {"question_id", "seed", "prompt", "blocks"}
        assert all(set(b) == {"id", "text"} for b in doc["blocks"])

    def test_render_is_deterministic(self, capsys, fixtures_dir):
        _, first, _ = run(capsys, "render", FIG1_ARGS(fixtures_dir), "--seed", "7", "--json")
        _, second, _ = run(capsys, "render", FIG1_ARGS(fixtures_dir), "--seed", "7", "--json")
        assert first == second

    def test_bad_seed_is_usage_error(self, capsys, fixtures_dir):
        code, _, err = run(capsys, "render", FIG1_ARGS(fixtures_dir), "--seed", "-3")
        assert code == 3 and "seed" in err


class TestUsage:
    def test_unknown_subcommand(self, capsys):
        code, _, err = run(capsys, "frobnicate")
        assert code == 3 and "error" in err

    def test_unknown_flag(self, capsys, fixtures_dir):
        code, _, _ = run(capsys, "count", FIG1_ARGS(fixtures_dir), "--fast")
        assert code == 3

    def test_grade_requires_an_ordering_source(self, capsys, fixtures_dir):
        code, _, _ = run(capsys, "grade", FIG1_ARGS(fixtures_dir))
        assert code == 3

    def test_serve_requires_questions_dir(self, capsys, monkeypatch):
        monkeypatch.delenv("PB_QUESTIONS_DIR", raising=False)
        code, _, err = run(capsys, "serve")
        assert code == 3 and "questions-dir" in err
