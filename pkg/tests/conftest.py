from fractions import Fraction

import pytest
from hypothesis import settings, strategies as st

settings.register_profile("ci", max_examples=30, deadline=None, derandomize=True)
settings.load_profile("ci")


def rationals():
    """Nonzero rationals on the sampling grid used by the verifier."""
    nums = st.integers(-50, 50).filter(lambda n: n != 0)
    return st.builds(Fraction, nums, st.integers(1, 20))


@pytest.fixture
def F():
    return Fraction


ACCEPTANCE_LINES = {}


def record_acceptance(number: int, ok: bool, text: str) -> None:
    ACCEPTANCE_LINES[number] = f"criterion {number:2d}: {'PASS' if ok else 'FAIL'}  {text}"
    print(ACCEPTANCE_LINES[number])


def pytest_terminal_summary(terminalreporter):
    if not ACCEPTANCE_LINES:
        return
    terminalreporter.section("acceptance criteria")
    for n in sorted(ACCEPTANCE_LINES):
        terminalreporter.write_line(ACCEPTANCE_LINES[n])
