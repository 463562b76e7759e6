from fractions import Fraction

import pytest
from hypothesis import strategies as st

from hncones.chow_ring import ChowElement, RingSpec
from hncones.hn_model import HNData, SemistablePiece, hn_from_summands

ACCEPTANCE_FILE = "test_acceptance.py"
_acceptance = {}


def hn(*pairs):
    return HNData.from_pairs(pairs)


small_rationals = st.fractions(min_value=-20, max_value=20, max_denominator=6)


@st.composite
def hn_data(draw, max_rank=8, max_pieces=4, max_degree=20, min_rank=2, rational=False):
    count = draw(st.integers(1, max_pieces))
    pieces = []
    for _ in range(count):
        rank = draw(st.integers(1, max(1, max_rank // count)))
        if rational:
            deg = draw(st.fractions(-max_degree, max_degree, max_denominator=5))
        else:
            deg = Fraction(draw(st.integers(-max_degree, max_degree)))
        pieces.append(SemistablePiece(rank, deg))
    h = hn_from_summands(pieces)
    if h.rank < min_rank:
        q = h.quotients[-1]
        extra = min_rank - h.rank
        h = HNData(h.quotients[:-1] + (SemistablePiece(q.rank + extra, q.slope * (q.rank + extra)),))
    return h


@st.composite
def ring_specs(draw, max_n=7):
    return RingSpec(draw(st.integers(1, max_n)), draw(small_rationals))


@st.composite
def chow_elements(draw, spec):
    coeffs = {m: draw(small_rationals) for m in spec.basis() if draw(st.booleans())}
    return ChowElement(spec, coeffs)


@pytest.fixture
def f2():
    """P(O(1) + O(3)), the Hirzebruch surface F_2."""
    return hn((1, 1), (1, 3))


@pytest.fixture
def three_lines():
    return hn((1, -1), (1, 1), (1, 2))


def pytest_runtest_logreport(report):
    if report.when == "call" and report.nodeid.split("::")[0].endswith(ACCEPTANCE_FILE):
        _acceptance[report.nodeid.split("::")[-1]] = report.outcome


def pytest_terminal_summary(terminalreporter):
    if not _acceptance:
        return
    terminalreporter.section("acceptance criteria")
    for name, outcome in _acceptance.items():
        terminalreporter.write_line(f"{'PASS' if outcome == 'passed' else 'FAIL'}  {name}")
