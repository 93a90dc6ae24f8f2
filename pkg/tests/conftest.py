from __future__ import annotations

import pytest
from hypothesis import HealthCheck, settings

from segalkit.fincat import FinCat, cyclic_group, group_category, walking_arrow

settings.register_profile(
    "default", max_examples=40, deadline=None, suppress_health_check=[HealthCheck.too_slow]
)
settings.load_profile("default")


@pytest.fixture(scope="session")
def z2() -> FinCat:
    return group_category(cyclic_group(2))


@pytest.fixture(scope="session")
def z3() -> FinCat:
    return group_category(cyclic_group(3))


@pytest.fixture(scope="session")
def arrow() -> FinCat:
    return walking_arrow()


# one line per acceptance criterion, repeated in the terminal summary
ACCEPTANCE_LINES: list[str] = []


def pytest_terminal_summary(terminalreporter) -> None:
    if ACCEPTANCE_LINES:
        terminalreporter.section("acceptance criteria")
        for line in sorted(ACCEPTANCE_LINES):
            terminalreporter.write_line(line)
