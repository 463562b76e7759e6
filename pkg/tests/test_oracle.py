import random

from hypothesis import given, settings

from hncones.cones import nu_table
from hncones.hn_model import hn_from_summands
from hncones.oracle import (
    CONING_RECURSION,
    SEMISTABLE_BASE,
    TAU_LOW_DIM,
    edge_cases,
    nu_oracle,
    random_hn,
)

from conftest import hn, hn_data


def test_semistable_base():
    table, trace = nu_oracle(hn((2, 0)))
    assert table.nu == {1: 0}
    assert trace.rules() == {1: SEMISTABLE_BASE}


def test_f2_via_tau(f2):
    table, trace = nu_oracle(f2)
    assert table.nu == {1: -3}
    assert trace.rules() == {1: TAU_LOW_DIM}
    assert str(trace.entries[0].element) == "xi - 3*f"


def test_three_lines_recursion(three_lines):
    table, trace = nu_oracle(three_lines)
    assert table.nu == {1: -3, 2: -2}
    assert trace.rules() == {1: TAU_LOW_DIM, 2: CONING_RECURSION}


def test_merged_summands_match_oracle():
    h = hn_from_summands([(2, 1), (4, 2)])
    assert nu_oracle(h)[0] == nu_table(h)


def test_rule_coverage():
    # Unstable with r_1 < n - 1 and a semistable-free recursion below.
    h = hn((2, -3), (3, 1), (1, 4))
    _, trace = nu_oracle(h)
    rules = trace.rules()
    assert sorted(rules) == list(range(1, h.rank))
    assert {TAU_LOW_DIM, CONING_RECURSION} <= set(rules.values())
    assert rules[1] == rules[2] == TAU_LOW_DIM


def test_all_three_rules_fire_across_recursion():
    seen = set()
    h = hn((1, -2), (2, 3))
    while True:
        _, trace = nu_oracle(h)
        seen |= set(trace.rules().values())
        if h.length == 1 or h.rank - h.quotients[0].rank < 2:
            break
        h = h.tail()
    assert seen == {TAU_LOW_DIM, CONING_RECURSION, SEMISTABLE_BASE}


def test_seam_at_r1_is_polygon_vertex():
    for h in edge_cases():
        if h.length == 1:
            continue
        r1, d1 = h.quotients[0].rank, h.quotients[0].degree
        if r1 < h.rank:
            assert nu_oracle(h)[0][r1] == -(h.degree - d1)


def test_edge_cases_agree():
    for h in edge_cases():
        assert nu_oracle(h)[0] == nu_table(h)
        assert nu_oracle(h, fast_cone=True)[0] == nu_table(h)


def test_random_hn_respects_bounds():
    rng = random.Random(3)
    for _ in range(200):
        h = random_hn(rng, max_rank=12, max_degree=20, max_pieces=5)
        assert 2 <= h.rank <= 12 and 1 <= h.length <= 5
        assert all(abs(d) <= 20 for d in h.degrees)


def test_random_hn_is_deterministic():
    a = [random_hn(random.Random(7)) for _ in range(3)]
    b = [random_hn(random.Random(7)) for _ in range(3)]
    assert a == b


@settings(max_examples=80, deadline=None)
@given(hn_data(max_rank=10, max_pieces=5, rational=True))
def test_oracle_matches_closed_form(h):
    table, trace = nu_oracle(h)
    assert table == nu_table(h)
    assert sorted(e.index for e in trace.entries) == list(range(1, h.rank))
