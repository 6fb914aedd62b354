import pytest
from hypothesis import settings

from golden import K4_MINUS_23_TERMS, K4_TERMS, from_named_terms

settings.register_profile("default", max_examples=60, deadline=None)
settings.load_profile("default")


@pytest.fixture
def f_k4():
    return from_named_terms(K4_TERMS)


@pytest.fixture
def f_k4_minus_23():
    return from_named_terms(K4_MINUS_23_TERMS)


def pytest_terminal_summary(terminalreporter):
    from test_acceptance import LINES

    if LINES:
        terminalreporter.section("acceptance criteria")
        for line in LINES:
            terminalreporter.write_line(line)
