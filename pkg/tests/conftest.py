from pathlib import Path

import pytest
from fastapi.testclient import TestClient

from main import app
from src import algebra
from src.algebra import BETA, Alphabet

FIXTURES = Path(__file__).resolve().parent.parent / "src" / "fixtures"


@pytest.fixture(scope="module", name="client")
def get_test_client():
    """
    Pytest fixture to provide a TestClient for making API requests.
    """
    with TestClient(app) as client:
        yield client


@pytest.fixture(name="gamma")
def gamma_alphabet() -> Alphabet:
    return algebra.gamma_alphabet(4)


@pytest.fixture(name="ab")
def ab_alphabet() -> Alphabet:
    return Alphabet.of("a", "b")


@pytest.fixture(name="beta")
def beta_braid():
    return BETA


@pytest.fixture(scope="session", name="t34")
def t34_enumeration():
    """The order-48 quotient of the (3,4) torus knot group, enumerated once."""
    knot = algebra.t34_quotient()
    return knot, algebra.todd_coxeter(knot.presentation)


@pytest.fixture(name="fixtures_dir")
def fixtures_directory() -> Path:
    return FIXTURES
