from __future__ import annotations

from pathlib import Path

import pytest

from proofblocks import Question, expand, load_question

FIXTURES = Path(__file__).parent / "fixtures"


@pytest.fixture(scope="session")
def fixtures_dir() -> Path:
    return FIXTURES


@pytest.fixture(scope="session")
def fig1_question() -> Question:
    return load_question(FIXTURES / "fig1.pb.html").unwrap()


@pytest.fixture(scope="session")
def fig1_graph(fig1_question):
    return expand(fig1_question)


@pytest.fixture(scope="session")
def induction_question() -> Question:
    return load_question(FIXTURES / "induction.pb.html").unwrap()


@pytest.fixture(scope="session")
def induction_graph(induction_question):
    return expand(induction_question)


@pytest.fixture(scope="session")
def chain5_question() -> Question:
    return load_question(FIXTURES / "chain5.pb.html").unwrap()


@pytest.fixture(scope="session")
def evensum_question() -> Question:
    return load_question(FIXTURES / "evensum.pb.html").unwrap()
