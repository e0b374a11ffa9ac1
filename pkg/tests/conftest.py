import sys
from pathlib import Path

import numpy as np
import pytest

sys.path.insert(0, str(Path(__file__).parent))

from creditrisk.data import FEATURES, OUTCOME_COLUMN  # noqa: E402
from creditrisk.synth import GeneratorConfig, generate_synthetic  # noqa: E402

HEADER = ",".join([f.column for f in FEATURES] + [OUTCOME_COLUMN])


@pytest.fixture
def header():
    return HEADER


@pytest.fixture(scope="session")
def small_synth():
    return generate_synthetic(GeneratorConfig(n=600, separation=2.5, seed=3))


@pytest.fixture
def rng():
    return np.random.default_rng(12345)


def pytest_terminal_summary(terminalreporter):
    from test_acceptance import RESULTS

    if RESULTS:
        terminalreporter.section("acceptance criteria")
        for line in RESULTS:
            terminalreporter.write_line(line)
