import os
import time

import pytest
from hypothesis import HealthCheck, settings

from reltor.algebra import make_field, preset
from reltor.corpus import corpus_modules
from reltor.verify import Verifier

BOUND = 6
P = int(os.environ.get("RELTOR_TEST_P", "5"))
SEED = 0

settings.register_profile(
    "repo",
    max_examples=25,
    deadline=None,
    suppress_health_check=[HealthCheck.too_slow, HealthCheck.function_scoped_fixture],
)
settings.load_profile("repo")


@pytest.fixture(scope="session")
def F5():
    return make_field("Fp", 5)


@pytest.fixture(scope="session")
def R(F5):
    return preset("square_zero_2vars", F5)


@pytest.fixture(scope="session")
def mods(R):
    return corpus_modules(R)


@pytest.fixture(scope="session")
def C(mods):
    return mods["omega"]


ACCEPTANCE_LINES: dict[int, str] = {}


def pytest_terminal_summary(terminalreporter):
    if not ACCEPTANCE_LINES:
        return
    terminalreporter.section("acceptance criteria")
    for n in sorted(ACCEPTANCE_LINES):
        terminalreporter.write_line(ACCEPTANCE_LINES[n])


@pytest.fixture(scope="session")
def report():
    """The square-zero verification report at bound 6 over F_5, computed once."""
    t = time.perf_counter()
    rep = Verifier("square_zero_2vars", P, BOUND, SEED).run()
    rep["elapsed_s"] = time.perf_counter() - t
    return rep
