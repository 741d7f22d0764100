import pytest

from permsolv.atlas import build, default_manifest, expected_order

ACCEPTANCE_LINES = []


def corpus(max_order=None):
    specs = default_manifest()
    if max_order is None:
        return specs
    return [s for s in specs if expected_order(s) <= max_order]


_GROUPS = {}


def group(spec):
    """Built groups are shared across tests (they cache chains and enumerations)."""
    G = _GROUPS.get(spec)
    if G is None:
        G = _GROUPS[spec] = build(spec)
    return G


@pytest.fixture
def grp():
    return group


def pytest_terminal_summary(terminalreporter):
    if ACCEPTANCE_LINES:
        terminalreporter.section("acceptance criteria")
        for line in ACCEPTANCE_LINES:
            terminalreporter.write_line(line)
