import os
import sys

import pytest
from hypothesis import settings

sys.path.insert(0, os.path.dirname(__file__))

settings.register_profile("default", max_examples=40, deadline=None)
settings.load_profile("default")


@pytest.fixture(scope="session")
def random_cases():
    from gptmaxinc import zoo
    return zoo.random_instances(60, seed=7)


def pytest_terminal_summary(terminalreporter):
    try:
        import test_acceptance
    except ImportError:  # pragma: no cover
        return
    if test_acceptance.RESULTS:
        terminalreporter.section("acceptance criteria")
        for line in test_acceptance.RESULTS:
            terminalreporter.write_line(line)
