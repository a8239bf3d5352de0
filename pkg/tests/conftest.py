from __future__ import annotations

import random

import pytest
from hypothesis import strategies as st

from cubicsurf import tabledata
from cubicsurf.picard import SIMPLE_ROOTS, DivisorClass

NEF_GENERATORS = [DivisorClass(v) for v in tabledata.TABLE_1]


@st.composite
def nef_classes(draw, max_terms: int = 4, max_coeff: int = 10):
    """Non-negative integer combinations of nef-cone generators (never zero)."""
    k = draw(st.integers(1, max_terms))
    idx = draw(st.lists(st.integers(0, len(NEF_GENERATORS) - 1), min_size=k, max_size=k))
    coeffs = draw(st.lists(st.integers(1, max_coeff), min_size=k, max_size=k))
    d = DivisorClass((0,) * 7)
    for i, c in zip(idx, coeffs):
        d = d + c * NEF_GENERATORS[i]
    return d


def weyl_words(max_len: int = 10):
    return st.lists(st.integers(0, len(SIMPLE_ROOTS) - 1), max_size=max_len)


def random_nef(rng: random.Random, max_terms: int = 4, max_coeff: int = 10) -> DivisorClass:
    d = DivisorClass((0,) * 7)
    while d == DivisorClass((0,) * 7):
        for _ in range(rng.randint(1, max_terms)):
            d = d + rng.randint(0, max_coeff) * rng.choice(NEF_GENERATORS)
    return d


@pytest.fixture
def rng() -> random.Random:
    return random.Random(20130118)


# ---------------------------------------------------------------------------
# one PASS/FAIL line per acceptance criterion, from pytest's own outcome

_criteria: list[tuple[str, str]] = []


def pytest_runtest_logreport(report):
    if report.when == "call" or (report.when == "setup" and report.outcome != "passed"):
        for key, label in report.user_properties:
            if key == "criterion":
                _criteria.append((label, report.outcome))


def pytest_terminal_summary(terminalreporter):
    if not _criteria:
        return
    terminalreporter.section("acceptance criteria")
    for label, outcome in _criteria:
        terminalreporter.write_line(f"{'PASS' if outcome == 'passed' else 'FAIL'}  {label}")
