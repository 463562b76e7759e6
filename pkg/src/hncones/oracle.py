"""Recursive computation of the boundary slopes, independent of the closed form.

The table is rebuilt from three geometric inputs only:

* semistable base case: Eff^c is bounded by ``(xi - mu f)^c``;
* low dimensions ``i <= r_1``: the boundary is the class
  ``[P(Q_1)] (xi - mu_1 f)^(r_1 - i)``, expanded in the ring;
* high dimensions ``i > r_1``: the boundary of Eff^(n-i)(P(E_1)), computed
  recursively, carried over by the coning map through the blow-up.

Every slope is read off an explicit ring element as the coefficient of
``xi^(c-1) f`` next to the monic ``xi^c``.
"""

from __future__ import annotations

import random
from dataclasses import dataclass, field
from fractions import Fraction
from typing import Dict, List

from .blowup_tower import TowerSpec, cone_map_U, transfer
from .chow_ring import ChowElement
from .cones import NoCycles, NuTable, ring_spec, tau_class
from .hn_model import HNData, SemistablePiece

SEMISTABLE_BASE = "semistable-base"
TAU_LOW_DIM = "tau-low-dim"
CONING_RECURSION = "coning-recursion"


@dataclass
class TraceEntry:
    index: int
    rule: str
    element: ChowElement
    nu: Fraction


@dataclass
class OracleTrace:
    entries: List[TraceEntry] = field(default_factory=list)

    def rules(self) -> Dict[int, str]:
        return {e.index: e.rule for e in self.entries}


def _read_slope(x: ChowElement, codim: int) -> Fraction:
    lead = x.coeff(codim, 0)
    if lead == 0:
        raise ArithmeticError(f"boundary class {x} has no xi^{codim} term")
    return x.coeff(codim - 1, 1) / lead


def nu_oracle(h: HNData, fast_cone: bool = False) -> tuple[NuTable, OracleTrace]:
    """Boundary slopes ``nu_1..nu_{n-1}`` by recursion on the HN length.

    With ``fast_cone`` the coning step copies coefficients directly instead
    of routing through the blow-up tower.
    """
    n = h.rank
    if n < 2:
        raise NoCycles("P(E) has no proper cones when rank E < 2")
    spec = ring_spec(h)
    trace = OracleTrace()
    nu: Dict[int, Fraction] = {}

    if h.length == 1:
        mu = h.quotients[0].slope
        nef_div = spec.xi() - spec.f() * mu
        for i in range(1, n):
            c = n - i
            gen = nef_div**c
            nu[i] = _read_slope(gen, c)
            trace.entries.append(TraceEntry(i, SEMISTABLE_BASE, gen, nu[i]))
        return NuTable(spec, nu), trace

    r1 = h.quotients[0].rank
    for i in range(1, min(r1, n - 1) + 1):
        gen = tau_class(h, i)
        nu[i] = _read_slope(gen, n - i)
        trace.entries.append(TraceEntry(i, TAU_LOW_DIM, gen, nu[i]))

    if r1 < n - 1:
        tail = h.tail()
        tail_nu, _ = nu_oracle(tail, fast_cone=fast_cone)
        tail_spec = tail_nu.spec
        tower = TowerSpec.from_hn(h)
        for i in range(r1 + 1, n):
            c = n - i
            y = tail_spec.element(1, tail_nu.nu_codim(c), c)
            gen = transfer(y, spec) if fast_cone else cone_map_U(tower, y, c)
            nu[i] = _read_slope(gen, c)
            trace.entries.append(TraceEntry(i, CONING_RECURSION, gen, nu[i]))

    return NuTable(spec, nu), trace


def random_hn(
    rng: random.Random,
    max_rank: int = 12,
    max_degree: int = 20,
    max_pieces: int = 5,
    min_rank: int = 2,
) -> HNData:
    """A random HN profile with total rank in ``[min_rank, max_rank]``.

    Piece degrees are drawn from ``[-max_degree, max_degree]``; pieces are
    redrawn until the slopes are distinct, then sorted.
    """
    while True:
        total = rng.randint(min_rank, max_rank)
        count = rng.randint(1, min(max_pieces, total))
        cuts = sorted(rng.sample(range(1, total), count - 1))
        ranks = [b - a for a, b in zip([0] + cuts, cuts + [total])]
        pieces = [SemistablePiece(r, rng.randint(-max_degree, max_degree)) for r in ranks]
        slopes = {p.slope for p in pieces}
        if len(slopes) == len(pieces):
            return HNData(tuple(sorted(pieces, key=lambda p: p.slope)))


def edge_cases() -> list[HNData]:
    """Hand-picked profiles: semistable, ``r_1 = n - 1``, twisted, long chains."""
    pairs = [
        [(2, 0)],
        [(3, 0)],
        [(6, 3)],
        [(5, -7)],
        [(12, 5)],
        [(1, 1), (1, 3)],
        [(1, -1), (1, 1), (1, 2)],
        [(2, -2), (1, 3)],
        [(11, -20), (1, 20)],
        [(3, 1), (1, 1)],
        [(1, 0), (11, 20)],
        [(1, -20), (1, -10), (1, 0), (1, 10), (1, 20)],
        [(2, -3), (3, 1), (1, 4), (4, 19), (2, 20)],
        [(1, Fraction(-1, 2)), (2, Fraction(1, 3))],
        [(3, Fraction(-7, 5)), (4, Fraction(2, 3)), (1, Fraction(5, 2))],
    ]
    return [HNData.from_pairs(p) for p in pairs]
