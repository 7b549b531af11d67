import os

import pytest
from hypothesis import HealthCheck, settings

from chios.catalog import figure1
from chios.realization import chi_cordovil, chi_os, chi_ot, circuits_from_vectors

settings.register_profile(
    "chios",
    max_examples=25,
    deadline=None,
    suppress_health_check=[HealthCheck.too_slow],
    derandomize=os.environ.get("CHIOS_SEED") is None,
)
settings.load_profile("chios")


@pytest.fixture(scope="session")
def fig():
    V = figure1()
    M = circuits_from_vectors(V)
    return V, M


@pytest.fixture(scope="session")
def chis(fig):
    V, M = fig
    return {"os": chi_os(M), "ot": chi_ot(V, M), "cordovil": chi_cordovil(V, M)}


def pytest_terminal_summary(terminalreporter):
    try:
        from test_acceptance import RESULTS
    except ImportError:
        return
    if RESULTS:
        terminalreporter.section("acceptance criteria")
        for line in RESULTS:
            terminalreporter.write_line(line)
