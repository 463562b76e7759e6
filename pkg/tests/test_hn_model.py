from fractions import Fraction

import pytest
from hypothesis import given
from hypothesis import strategies as st

from hncones.hn_model import (
    HNData,
    InvalidDescriptor,
    SemistablePiece,
    cumulative,
    hn_from_summands,
    parse_descriptor,
    twist,
)

from conftest import hn, hn_data, small_rationals


def test_summands_sorted_by_slope():
    assert hn_from_summands([(1, 3), (1, 1)]).pairs() == [(1, 1), (1, 3)]


def test_single_summand_unchanged():
    assert hn_from_summands([(1, 0)]).pairs() == [(1, 0)]


def test_equal_slopes_merge():
    assert hn_from_summands([(2, 1), (4, 2)]).pairs() == [(6, 3)]


def test_empty_summands_rejected():
    with pytest.raises(InvalidDescriptor):
        hn_from_summands([])


@pytest.mark.parametrize(
    "pairs",
    [[(1, 3), (1, 1)], [(1, 1), (2, 2)], [(2, 4), (1, 2)]],
)
def test_hn_requires_strict_ascent(pairs):
    with pytest.raises(InvalidDescriptor):
        HNData.from_pairs(pairs)


def test_bad_rank_rejected():
    with pytest.raises(InvalidDescriptor):
        SemistablePiece(0, 1)


def test_integral_flag():
    HNData.from_pairs([(2, 1)], integral=True)
    with pytest.raises(InvalidDescriptor):
        HNData.from_pairs([(2, Fraction(1, 2))], integral=True)
    HNData.from_pairs([(2, Fraction(1, 2))])


def test_twist_examples():
    h = hn((1, 1), (1, 3))
    assert twist(h, 0) == h
    t = twist(h, -2)
    assert t.pairs() == [(1, -1), (1, 1)]
    assert (h.degree, t.degree) == (4, 0)
    assert twist(hn((2, 0)), Fraction(1, 2)).pairs() == [(2, 1)]


def test_cumulative_examples():
    assert cumulative(hn((1, 1), (1, 3))) == [(0, 4), (1, 3), (2, 0)]
    assert cumulative(hn((3, 0))) == [(0, 0), (3, 0)]
    assert cumulative(hn((1, -1), (1, 1), (1, 2))) == [(0, 2), (1, 3), (2, 2), (3, 0)]


@given(hn_data())
def test_cumulative_invariants(h):
    cum = cumulative(h)
    assert cum[0] == (0, h.degree) and cum[-1] == (h.rank, 0)
    assert all(a[0] < b[0] for a, b in zip(cum, cum[1:]))
    seg = [(d0 - d1) / (r1 - r0) for (r0, d0), (r1, d1) in zip(cum, cum[1:])]
    assert seg == h.slopes
    assert all(a < b for a, b in zip(seg, seg[1:]))


@given(st.lists(st.tuples(st.integers(1, 4), st.integers(-9, 9)), min_size=1, max_size=6), st.randoms())
def test_summands_permutation_invariant(pieces, rnd):
    shuffled = list(pieces)
    rnd.shuffle(shuffled)
    assert hn_from_summands(pieces) == hn_from_summands(shuffled)


@given(hn_data(rational=True), small_rationals, small_rationals)
def test_twist_composes(h, s, t):
    assert twist(twist(h, s), t) == twist(h, s + t)
    assert twist(h, 0) == h
    assert twist(h, t).degree == h.degree + h.rank * t


def test_parse_descriptor_shapes():
    doc = {"kind": "summands", "pieces": [{"rank": 1, "degree": "3"}, {"rank": 1, "degree": 1}]}
    assert parse_descriptor(doc).pairs() == [(1, 1), (1, 3)]
    doc = {"kind": "hn", "quotients": [{"rank": 2, "degree": "-1/2"}]}
    assert parse_descriptor(doc).pairs() == [(2, Fraction(-1, 2))]


@pytest.mark.parametrize(
    "doc",
    [
        [],
        {"kind": "sum"},
        {"kind": "hn", "quotients": []},
        {"kind": "hn", "quotients": [{"rank": 1}]},
        {"kind": "hn", "quotients": [{"rank": 1, "degree": 0.5}]},
        {"kind": "hn", "quotients": [{"rank": 1, "degree": "0.5"}]},
        {"kind": "hn", "quotients": [{"rank": 1, "degree": 3}, {"rank": 1, "degree": 1}]},
        {"kind": "hn", "quotients": [{"rank": 1, "degree": "1/2"}], "integral": True},
    ],
)
def test_parse_descriptor_rejects(doc):
    with pytest.raises(InvalidDescriptor):
        parse_descriptor(doc)


def test_tail_drops_first_piece():
    assert hn((1, -1), (1, 1), (1, 2)).tail().pairs() == [(1, 1), (1, 2)]
