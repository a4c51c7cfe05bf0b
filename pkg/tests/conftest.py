import pytest

from slpinterp import DEFAULT_RING, RingSpec, SparsePoly


def pytest_configure(config):
    config._acceptance_lines = []


def pytest_terminal_summary(terminalreporter, config):
    lines = getattr(config, "_acceptance_lines", [])
    if lines:
        terminalreporter.section("acceptance criteria")
        for line in lines:
            terminalreporter.write_line(line)


@pytest.fixture
def criterion(request):
    """Record a one-line PASS/FAIL verdict for an acceptance criterion, then assert it."""
    def report(number, title, ok, detail=""):
        line = f"{'PASS' if ok else 'FAIL'}  [{number}] {title}" + (f"  ({detail})" if detail else "")
        request.config._acceptance_lines.append(line)
        print(line)
        assert ok, line
    return report


@pytest.fixture
def R():
    return DEFAULT_RING


def poly(ring, *pairs):
    """poly(R, (e, c), ...) shorthand."""
    return SparsePoly.from_terms(ring, pairs)


Z101 = RingSpec.zmod(101)
