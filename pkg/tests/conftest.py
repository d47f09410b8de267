import os

import pytest
from hypothesis import HealthCheck, settings, strategies as st

from hopfkit.scalar import FieldElement

settings.register_profile("default", deadline=None, max_examples=60,
                          suppress_health_check=[HealthCheck.too_slow])
settings.register_profile("thorough", deadline=None, max_examples=1000,
                          suppress_health_check=[HealthCheck.too_slow])
settings.load_profile(os.environ.get("HOPFKIT_HYPOTHESIS", "default"))

small_q = st.fractions(min_value=-20, max_value=20, max_denominator=12)


@st.composite
def field_elements(draw, nonzero=False):
    c = [draw(small_q) for _ in range(4)]
    x = FieldElement(*c)
    if nonzero:
        from hypothesis import assume
        assume(bool(x))
    return x


@pytest.fixture(scope="session")
def H():
    from hopfkit.presets import H_alg
    return H_alg()


@pytest.fixture(scope="session")
def A():
    from hopfkit.presets import A_alg
    return A_alg()


@pytest.fixture(scope="session")
def Hd():
    from hopfkit.presets import Hdual
    return Hdual()


@pytest.fixture(scope="session")
def D():
    from hopfkit.double import the_double
    return the_double()


@pytest.fixture(scope="session")
def simples():
    from hopfkit.rep import simple_list
    return simple_list()


# one line per acceptance criterion, printed at the end of the run
CRITERIA: dict = {}


def pytest_terminal_summary(terminalreporter):
    if not CRITERIA:
        return
    terminalreporter.section("acceptance criteria")
    for n in sorted(CRITERIA):
        terminalreporter.write_line(CRITERIA[n])
