"""The numerical ring N(P(E)) of a projective bundle over a curve.

For ``E`` of rank ``n`` and degree ``D`` the ring is generated by the class
``xi`` of O(1) and the fiber class ``f`` subject to

    f^2 = 0,    xi^(n-1) f = [pt],    xi^n = D [pt].

Elements are kept in the reduced monomial basis ``xi^j f^e`` with
``0 <= j <= n-1`` and ``e in {0, 1}``; the codimension of ``xi^j f^e`` is
``j + e``.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import Dict, Iterator, Tuple, Union

from .hn_model import Rational, as_fraction, format_fraction

Monomial = Tuple[int, int]


class SpecMismatch(ValueError):
    pass


@dataclass(frozen=True)
class RingSpec:
    n: int
    D: Fraction

    def __post_init__(self):
        if not isinstance(self.n, int) or self.n < 1:
            raise ValueError(f"rank must be a positive integer, got {self.n!r}")
        object.__setattr__(self, "D", as_fraction(self.D))

    @property
    def dim(self) -> int:
        return self.n

    def basis(self, codim: int | None = None) -> list[Monomial]:
        """Reduced monomials, ordered by codimension then by the f-exponent."""
        monos = [(j, e) for j in range(self.n) for e in (0, 1)]
        monos.sort(key=lambda m: (m[0] + m[1], m[1]))
        if codim is not None:
            monos = [m for m in monos if m[0] + m[1] == codim]
        return monos

    def zero(self) -> ChowElement:
        return ChowElement(self, {})

    def one(self) -> ChowElement:
        return self.monomial(0, 0)

    def xi(self) -> ChowElement:
        return self.monomial(1, 0)

    def f(self) -> ChowElement:
        return self.monomial(0, 1)

    def point(self) -> ChowElement:
        return self.monomial(self.n - 1, 1)

    def monomial(self, j: int, e: int = 0, coeff: Rational = 1) -> ChowElement:
        """``coeff * xi^j f^e``, reduced."""
        out: Dict[Monomial, Fraction] = {}
        _accumulate(self, out, j, e, coeff if type(coeff) is Fraction else as_fraction(coeff))
        return ChowElement(self, out)

    def constant(self, c: Rational) -> ChowElement:
        return self.monomial(0, 0, c)

    def element(self, a: Rational, b: Rational, codim: int) -> ChowElement:
        """``a xi^codim + b xi^(codim-1) f``: the (a, b) coordinates used for cones."""
        if not 1 <= codim <= self.n - 1:
            raise ValueError(f"codimension {codim} outside 1..{self.n - 1}")
        return self.monomial(codim, 0, a) + self.monomial(codim - 1, 1, b)


def _accumulate(spec: RingSpec, out: Dict[Monomial, Fraction], j: int, e: int, c: Fraction):
    # Reduce xi^j f^e into out: f^2 = 0, xi^n = D xi^(n-1) f.
    if c == 0 or e >= 2:
        return
    n = spec.n
    if j >= n:
        if e == 1 or j > n:
            return
        j, e, c = n - 1, 1, c * spec.D
        if c == 0:
            return
    key = (j, e)
    prev = out.get(key)
    val = c if prev is None else prev + c
    if val:
        out[key] = val
    else:
        out.pop(key, None)


class ChowElement:
    """An exact element of N(P(E)), possibly of mixed codimension."""

    __slots__ = ("spec", "coeffs")

    def __init__(self, spec: RingSpec, coeffs: Dict[Monomial, Fraction] | None = None):
        self.spec = spec
        reduced: Dict[Monomial, Fraction] = {}
        for (j, e), c in (coeffs or {}).items():
            _accumulate(spec, reduced, j, e, c if type(c) is Fraction else as_fraction(c))
        self.coeffs = reduced

    def _coerce(self, other) -> ChowElement:
        if isinstance(other, ChowElement):
            if other.spec != self.spec:
                raise SpecMismatch(f"cannot combine elements over {self.spec} and {other.spec}")
            return other
        if isinstance(other, (int, Fraction)) and not isinstance(other, bool):
            return self.spec.constant(other)
        return NotImplemented

    def __add__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        out = dict(self.coeffs)
        for (j, e), c in other.coeffs.items():
            _accumulate(self.spec, out, j, e, c)
        return ChowElement._raw(self.spec, out)

    __radd__ = __add__

    def __neg__(self):
        return ChowElement._raw(self.spec, {m: -c for m, c in self.coeffs.items()})

    def __sub__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        return self + (-other)

    def __rsub__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        return other - self

    def __mul__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        out: Dict[Monomial, Fraction] = {}
        for (j1, e1), c1 in self.coeffs.items():
            for (j2, e2), c2 in other.coeffs.items():
                _accumulate(self.spec, out, j1 + j2, e1 + e2, c1 * c2)
        return ChowElement._raw(self.spec, out)

    __rmul__ = __mul__

    def __pow__(self, k: int):
        if not isinstance(k, int) or k < 0:
            raise ValueError(f"exponent must be a nonnegative integer, got {k!r}")
        result = self.spec.one()
        base = self
        while k:
            if k & 1:
                result = result * base
            base = base * base
            k >>= 1
        return result

    def scale(self, c: Rational) -> ChowElement:
        return self * as_fraction(c)

    @classmethod
    def _raw(cls, spec, coeffs):
        obj = cls.__new__(cls)
        obj.spec = spec
        obj.coeffs = coeffs
        return obj

    def __eq__(self, other):
        if isinstance(other, (int, Fraction)) and not isinstance(other, bool):
            other = self.spec.constant(other)
        if not isinstance(other, ChowElement):
            return NotImplemented
        return self.spec == other.spec and self.coeffs == other.coeffs

    def __hash__(self):
        return hash((self.spec, frozenset(self.coeffs.items())))

    def __bool__(self):
        return bool(self.coeffs)

    def __iter__(self) -> Iterator[tuple[Monomial, Fraction]]:
        return iter(sorted(self.coeffs.items(), key=lambda kv: (sum(kv[0]), kv[0][1])))

    def coeff(self, j: int, e: int = 0) -> Fraction:
        return self.coeffs.get((j, e), Fraction(0))

    def codims(self) -> set[int]:
        return {j + e for j, e in self.coeffs}

    def is_homogeneous(self) -> bool:
        return len(self.codims()) <= 1

    @property
    def codim(self) -> int | None:
        """Codimension of a nonzero homogeneous element, else ``None``."""
        cs = self.codims()
        return cs.pop() if len(cs) == 1 else None

    def homogeneous_part(self, codim: int) -> ChowElement:
        return ChowElement._raw(
            self.spec, {m: c for m, c in self.coeffs.items() if m[0] + m[1] == codim}
        )

    def degree(self) -> Fraction:
        """Coefficient of the point class ``xi^(n-1) f``."""
        return self.coeff(self.spec.n - 1, 1)

    def __repr__(self):
        return f"ChowElement(n={self.spec.n}, D={format_fraction(self.spec.D)}: {render(self)})"

    def __str__(self):
        return render(self)


def degree(x: ChowElement) -> Fraction:
    return x.degree()


def _render_monomial(j: int, e: int) -> str:
    parts = []
    if j == 1:
        parts.append("xi")
    elif j > 1:
        parts.append(f"xi^{j}")
    if e:
        parts.append("f")
    return "*".join(parts)


def render(x: ChowElement) -> str:
    """Canonical text form, e.g. ``xi^2 - 3*xi*f``.

    Terms run by increasing codimension, then f-exponent. Output reparses
    to the same element.
    """
    out = []
    for (j, e), c in x:
        mono = _render_monomial(j, e)
        mag = abs(c)
        if not mono:
            body = format_fraction(mag)
        elif mag == 1:
            body = mono
        else:
            body = f"{format_fraction(mag)}*{mono}"
        if not out:
            out.append(f"-{body}" if c < 0 else body)
        else:
            out.append(f"{'-' if c < 0 else '+'} {body}")
    return " ".join(out) if out else "0"


def pairing_matrix(spec: RingSpec, codim: int) -> list[list[Fraction]]:
    """Degree pairing between the codim-``codim`` basis and its complement."""
    rows = spec.basis(codim)
    cols = spec.basis(spec.n - codim)
    return [
        [(spec.monomial(*r) * spec.monomial(*c)).degree() for c in cols]
        for r in rows
    ]


def class_of_PQ1(spec: RingSpec, r1: int, d1: Rational) -> ChowElement:
    """Class of the sub-bundle ``P(Q_1) ⊂ P(E)`` for a quotient ``E -> Q_1``.

    Equals ``xi^(n-r1) + (d1 - D) xi^(n-r1-1) f``, and the fundamental class
    when ``r1 == n``.
    """
    if not 1 <= r1 <= spec.n:
        raise ValueError(f"quotient rank {r1} outside 1..{spec.n}")
    if r1 == spec.n:
        return spec.one()
    c = spec.n - r1
    return spec.monomial(c, 0) + spec.monomial(c - 1, 1, as_fraction(d1) - spec.D)
