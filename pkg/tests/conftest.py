import numpy as np
import pytest

from plie.scenarios import load_scenario
from plie.suites import run_suite


@pytest.fixture(scope="session")
def su2():
    return load_scenario("su2-torus")


@pytest.fixture(scope="session")
def semi():
    return load_scenario("semidirect-zero")


@pytest.fixture(scope="session")
def scenarios(su2, semi):
    return {"su2-torus": su2, "semidirect-zero": semi}


@pytest.fixture(scope="session")
def reports(scenarios):
    """Memoized suite runs shared by the acceptance criteria."""
    cache = {}

    def get(scenario_name, suite):
        key = (scenario_name, suite)
        if key not in cache:
            cache[key] = run_suite(scenarios[scenario_name], suite)
        return cache[key]

    return get


@pytest.fixture()
def rng():
    return np.random.default_rng(0)
