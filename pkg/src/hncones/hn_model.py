"""Harder-Narasimhan numerical profiles of vector bundles over a curve.

A bundle is modelled only through the ranks and degrees of the semistable
quotients of its Harder-Narasimhan filtration

    0 = E_l < E_{l-1} < ... < E_1 < E_0 = E,    Q_k = E_{k-1} / E_k,

ordered so that the slopes mu_k = deg Q_k / rk Q_k strictly increase
(``Q_1`` is the most negative quotient).
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import Iterable, Mapping, Union

Rational = Union[int, Fraction, str]


class InvalidDescriptor(ValueError):
    """Raised when a bundle description violates the HN invariants."""


def as_fraction(value: Rational) -> Fraction:
    """Coerce an int, Fraction or ``"p/q"`` string to an exact Fraction.

    Floats are rejected on purpose: every quantity in this package is exact.
    """
    if isinstance(value, bool):
        raise InvalidDescriptor(f"not a rational number: {value!r}")
    if isinstance(value, (int, Fraction)):
        return Fraction(value)
    if isinstance(value, str):
        text = value.strip()
        if "." in text or "e" in text.lower():
            raise InvalidDescriptor(f"decimal notation is not accepted: {value!r}")
        try:
            return Fraction(text)
        except (ValueError, ZeroDivisionError) as exc:
            raise InvalidDescriptor(f"not a rational number: {value!r}") from exc
    raise InvalidDescriptor(f"not a rational number: {value!r}")


def format_fraction(q: Fraction) -> str:
    return str(q.numerator) if q.denominator == 1 else f"{q.numerator}/{q.denominator}"


@dataclass(frozen=True)
class SemistablePiece:
    """A semistable sheaf on the curve, remembered by rank and degree."""

    rank: int
    degree: Fraction

    def __post_init__(self):
        if isinstance(self.rank, bool) or not isinstance(self.rank, int) or self.rank < 1:
            raise InvalidDescriptor(f"rank must be a positive integer, got {self.rank!r}")
        object.__setattr__(self, "degree", as_fraction(self.degree))

    @property
    def slope(self) -> Fraction:
        return self.degree / self.rank

    def twist(self, t: Rational) -> SemistablePiece:
        return SemistablePiece(self.rank, self.degree + self.rank * as_fraction(t))

    def to_json(self) -> dict:
        return {"rank": self.rank, "degree": format_fraction(self.degree)}


@dataclass(frozen=True)
class HNData:
    """The ordered HN quotients ``Q_1, ..., Q_l`` of a bundle ``E``.

    Set ``integral=True`` to additionally require integer degrees, as for an
    honest (untwisted) bundle.
    """

    quotients: tuple[SemistablePiece, ...]
    integral: bool = False

    def __post_init__(self):
        quotients = tuple(
            q if isinstance(q, SemistablePiece) else SemistablePiece(*q)
            for q in self.quotients
        )
        object.__setattr__(self, "quotients", quotients)
        if not quotients:
            raise InvalidDescriptor("an HN profile needs at least one quotient")
        for prev, nxt in zip(quotients, quotients[1:]):
            if not prev.slope < nxt.slope:
                raise InvalidDescriptor(
                    "HN slopes must be strictly ascending, got "
                    f"{format_fraction(prev.slope)} then {format_fraction(nxt.slope)}"
                )
        if self.integral:
            for q in quotients:
                if q.degree.denominator != 1:
                    raise InvalidDescriptor(
                        f"degree {format_fraction(q.degree)} is not an integer"
                    )

    @classmethod
    def from_pairs(cls, pairs: Iterable[tuple[int, Rational]], integral: bool = False) -> HNData:
        return cls(tuple(SemistablePiece(r, d) for r, d in pairs), integral=integral)

    @property
    def length(self) -> int:
        return len(self.quotients)

    @property
    def rank(self) -> int:
        return sum(q.rank for q in self.quotients)

    @property
    def degree(self) -> Fraction:
        return sum((q.degree for q in self.quotients), Fraction(0))

    @property
    def ranks(self) -> list[int]:
        return [q.rank for q in self.quotients]

    @property
    def degrees(self) -> list[Fraction]:
        return [q.degree for q in self.quotients]

    @property
    def slopes(self) -> list[Fraction]:
        return [q.slope for q in self.quotients]

    @property
    def is_semistable(self) -> bool:
        return self.length == 1

    def tail(self) -> HNData:
        """HN profile of ``E_1``, the kernel of ``E -> Q_1``."""
        if self.length == 1:
            raise InvalidDescriptor("a semistable profile has no proper HN tail")
        return HNData(self.quotients[1:])

    def pairs(self) -> list[tuple[int, Fraction]]:
        return [(q.rank, q.degree) for q in self.quotients]

    def to_json(self) -> dict:
        return {"kind": "hn", "quotients": [q.to_json() for q in self.quotients]}

    def __str__(self):
        inner = ", ".join(f"({q.rank},{format_fraction(q.degree)})" for q in self.quotients)
        return f"[{inner}]"


def hn_from_summands(pieces: Iterable[SemistablePiece | tuple[int, Rational]]) -> HNData:
    """HN profile of a direct sum of semistable bundles.

    Summands of equal slope are merged (their sum is again semistable) and the
    groups are ordered by ascending slope.
    """
    pieces = [p if isinstance(p, SemistablePiece) else SemistablePiece(*p) for p in pieces]
    if not pieces:
        raise InvalidDescriptor("a bundle needs at least one summand")
    groups: dict[Fraction, list[SemistablePiece]] = {}
    for p in pieces:
        groups.setdefault(p.slope, []).append(p)
    merged = []
    for slope in sorted(groups):
        members = groups[slope]
        merged.append(
            SemistablePiece(
                sum(p.rank for p in members),
                sum((p.degree for p in members), Fraction(0)),
            )
        )
    return HNData(tuple(merged))


def twist(h: HNData, t: Rational) -> HNData:
    """Twist by a Q-divisor of degree ``t``: every slope moves by ``t``."""
    t = as_fraction(t)
    return HNData(tuple(q.twist(t) for q in h.quotients))


def cumulative(h: HNData) -> list[tuple[int, Fraction]]:
    """The pairs ``(rk(E/E_k), deg E_k)`` for ``k = 0..l``.

    >>> [(r, str(d)) for r, d in cumulative(HNData.from_pairs([(1, 1), (1, 3)]))]
    [(0, '4'), (1, '3'), (2, '0')]
    """
    out = [(0, h.degree)]
    rank, deg = 0, h.degree
    for q in h.quotients:
        rank += q.rank
        deg -= q.degree
        out.append((rank, deg))
    return out


def _parse_pieces(items, key) -> list[SemistablePiece]:
    if not isinstance(items, list) or not items:
        raise InvalidDescriptor(f"'{key}' must be a nonempty list")
    pieces = []
    for item in items:
        if not isinstance(item, Mapping) or "rank" not in item or "degree" not in item:
            raise InvalidDescriptor(f"each entry of '{key}' needs 'rank' and 'degree'")
        pieces.append(SemistablePiece(item["rank"], item["degree"]))
    return pieces


def parse_descriptor(doc) -> HNData:
    """Build HN data from a decoded JSON bundle document.

    Two shapes are accepted::

        {"kind": "summands", "pieces": [{"rank": 1, "degree": "3"}, ...]}
        {"kind": "hn", "quotients": [{"rank": 1, "degree": 1}, ...]}

    An optional ``"integral": true`` enforces integer degrees.
    """
    if not isinstance(doc, Mapping):
        raise InvalidDescriptor("bundle document must be a JSON object")
    integral = doc.get("integral", False)
    if not isinstance(integral, bool):
        raise InvalidDescriptor("'integral' must be a boolean")
    kind = doc.get("kind")
    if kind == "summands":
        h = hn_from_summands(_parse_pieces(doc.get("pieces"), "pieces"))
    elif kind == "hn":
        h = HNData(tuple(_parse_pieces(doc.get("quotients"), "quotients")))
    else:
        raise InvalidDescriptor(f"unknown bundle kind {kind!r}; expected 'summands' or 'hn'")
    if integral:
        h = HNData(h.quotients, integral=True)
    return h
