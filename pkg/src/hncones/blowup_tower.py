"""Numerical ring of the blow-up of P(E) along P(Q_1), and the coning maps.

Let ``0 -> E_1 -> E -> Q_1 -> 0`` be the first HN step, ``X = P(E)`` and
``Y = P(E_1)``. The blow-up ``B: Xt -> X`` along ``P(Q_1)`` is a projective
bundle ``eta: Xt = P_Y(F) -> Y`` with ``F`` an extension of ``rho^* Q_1`` by
``O_Y(1)``, so ``c(F) = (1 + xi_1)(1 + d_1 f_1)`` and N(Xt) is the free
N(Y)-module on ``1, gamma, ..., gamma^r1``, reduced by

    gamma^(r1+1) = (xi_1 + d_1 f_1) gamma^r1 - d_1 xi_1 f_1 gamma^(r1-1).

Pullback along B sends ``xi -> gamma`` and ``f -> f_1``; the exceptional
divisor is ``gamma - xi_1``.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache
from typing import Dict

from .chow_ring import ChowElement, RingSpec, SpecMismatch
from .hn_model import HNData, as_fraction


@dataclass(frozen=True)
class TowerSpec:
    n: int
    D: Fraction
    r1: int
    d1: Fraction

    def __post_init__(self):
        object.__setattr__(self, "D", as_fraction(self.D))
        object.__setattr__(self, "d1", as_fraction(self.d1))
        if not 1 <= self.r1 <= self.n - 1:
            raise ValueError(
                f"blow-up needs 1 <= r1 <= n-1 (got r1={self.r1}, n={self.n}); "
                "a semistable bundle has nothing to blow up"
            )

    @classmethod
    def from_hn(cls, h: HNData) -> TowerSpec:
        q1 = h.quotients[0]
        return cls(h.rank, h.degree, q1.rank, q1.degree)

    @property
    def x_spec(self) -> RingSpec:
        return RingSpec(self.n, self.D)

    @property
    def y_spec(self) -> RingSpec:
        return RingSpec(self.n - self.r1, self.D - self.d1)

    @property
    def mu1(self) -> Fraction:
        return self.d1 / self.r1


class TowerElement:
    """``sum_a gamma^a * eta^*(alpha_a)`` with ``alpha_a`` in N(Y), ``a <= r1``."""

    __slots__ = ("spec", "coeffs")

    def __init__(self, spec: TowerSpec, coeffs: Dict[int, ChowElement] | None = None):
        self.spec = spec
        ys = spec.y_spec
        raw: Dict[int, ChowElement] = {}
        for a, c in (coeffs or {}).items():
            if c.spec != ys:
                raise SpecMismatch("tower coefficients must live on Y = P(E_1)")
            raw[a] = raw.get(a, ys.zero()) + c
        self.coeffs = _reduce(spec, raw)

    @classmethod
    def _raw(cls, spec, coeffs):
        obj = cls.__new__(cls)
        obj.spec = spec
        obj.coeffs = coeffs
        return obj

    def _check(self, other: TowerElement):
        if not isinstance(other, TowerElement) or other.spec != self.spec:
            raise SpecMismatch("tower elements over different blow-ups")

    def __add__(self, other: TowerElement) -> TowerElement:
        self._check(other)
        out = dict(self.coeffs)
        for a, c in other.coeffs.items():
            s = out[a] + c if a in out else c
            if s:
                out[a] = s
            else:
                out.pop(a, None)
        return TowerElement._raw(self.spec, out)

    def __neg__(self):
        return TowerElement._raw(self.spec, {a: -c for a, c in self.coeffs.items()})

    def __sub__(self, other):
        return self + (-other)

    def __mul__(self, other):
        if isinstance(other, (int, Fraction)):
            other = TowerElement(self.spec, {0: self.spec.y_spec.constant(other)})
        self._check(other)
        ys = self.spec.y_spec
        out: Dict[int, ChowElement] = {}
        for a, c in self.coeffs.items():
            for b, e in other.coeffs.items():
                out[a + b] = out.get(a + b, ys.zero()) + c * e
        return TowerElement._raw(self.spec, _reduce(self.spec, out))

    __rmul__ = __mul__

    def __pow__(self, k: int):
        if k < 0:
            raise ValueError("negative exponent")
        result = one(self.spec)
        for _ in range(k):
            result = result * self
        return result

    def __eq__(self, other):
        if not isinstance(other, TowerElement):
            return NotImplemented
        return self.spec == other.spec and self.coeffs == other.coeffs

    def __bool__(self):
        return bool(self.coeffs)

    def coeff(self, a: int) -> ChowElement:
        return self.coeffs.get(a, self.spec.y_spec.zero())

    def __repr__(self):
        if not self.coeffs:
            return "TowerElement(0)"
        terms = [f"gamma^{a}*({c})" for a, c in sorted(self.coeffs.items())]
        return "TowerElement(" + " + ".join(terms) + ")"


@lru_cache(maxsize=None)
def _relation(spec: TowerSpec) -> tuple[ChowElement, ChowElement]:
    # c_1(F) and c_2(F) from c(F) = (1 + xi_1)(1 + d_1 f_1).
    ys = spec.y_spec
    return ys.xi() + ys.f() * spec.d1, ys.xi() * ys.f() * spec.d1


def _reduce(spec: TowerSpec, coeffs: Dict[int, ChowElement]) -> Dict[int, ChowElement]:
    # Coefficients are already reduced in N(Y); fold gamma^a for a > r1 top-down.
    ys = spec.y_spec
    c1, c2 = _relation(spec)
    out = {a: c for a, c in coeffs.items() if c}
    r1 = spec.r1
    top = max(out, default=0)
    for a in range(top, r1, -1):
        c = out.pop(a, None)
        if c is None:
            continue
        for b, term in ((a - 1, c * c1), (a - 2, -(c * c2))):
            s = out.get(b, ys.zero()) + term
            if s:
                out[b] = s
            else:
                out.pop(b, None)
    return out


def one(spec: TowerSpec) -> TowerElement:
    return TowerElement(spec, {0: spec.y_spec.one()})


def gamma(spec: TowerSpec, power: int = 1) -> TowerElement:
    return TowerElement(spec, {power: spec.y_spec.one()})


def pull_eta(spec: TowerSpec, y: ChowElement) -> TowerElement:
    if y.spec != spec.y_spec:
        raise SpecMismatch("pull_eta expects a class on Y = P(E_1)")
    return TowerElement(spec, {0: y})


def push_eta(t: TowerElement) -> ChowElement:
    """Pushforward along the bundle map: the ``gamma^r1`` coefficient."""
    return t.coeff(t.spec.r1)


def tower_degree(t: TowerElement) -> Fraction:
    return push_eta(t).degree()


@lru_cache(maxsize=None)
def _pull_B_monomial(spec: TowerSpec, j: int, e: int) -> TowerElement:
    ys = spec.y_spec
    return TowerElement(spec, {j: ys.f() if e else ys.one()})


def pull_B(spec: TowerSpec, x: ChowElement) -> TowerElement:
    """Pullback along the blow-down: ``xi -> gamma``, ``f -> eta^* f_1``."""
    if x.spec != spec.x_spec:
        raise SpecMismatch("pull_B expects a class on X = P(E)")
    out = TowerElement(spec)
    for (j, e), c in x.coeffs.items():
        out = out + _pull_B_monomial(spec, j, e) * c
    return out


def exceptional(spec: TowerSpec) -> TowerElement:
    """Class of the exceptional divisor, ``gamma - eta^* xi_1``."""
    return gamma(spec) - pull_eta(spec, spec.y_spec.xi())


def nef_pullback(spec: TowerSpec) -> TowerElement:
    """``delta = B^*(xi - mu_1 f)^r1``."""
    xs = spec.x_spec
    return pull_B(spec, (xs.xi() - xs.f() * spec.mu1) ** spec.r1)


def _split_codim(t: TowerElement) -> Dict[int, TowerElement]:
    parts: Dict[int, Dict[int, ChowElement]] = {}
    for a, c in t.coeffs.items():
        for k in c.codims():
            parts.setdefault(a + k, {})[a] = c.homogeneous_part(k)
    return {k: TowerElement._raw(t.spec, v) for k, v in parts.items()}


def push_B(t: TowerElement) -> ChowElement:
    """Pushforward along the blow-down, as the adjoint of ``pull_B``.

    Returns the unique ``x`` with ``deg(x m) = deg(t B^*m)`` for every basis
    monomial ``m`` of N(X). The pairing only couples complementary
    codimensions, so each homogeneous part is a 1x1 or 2x2 solve.
    """
    spec = t.spec
    xs = spec.x_spec
    out = xs.zero()
    for c, part in _split_codim(t).items():
        rows = xs.basis(c)
        cols = xs.basis(xs.n - c)
        if not rows:
            # Cycles of negative dimension push forward to zero.
            continue
        gram = [[(xs.monomial(*r) * xs.monomial(*m)).degree() for m in cols] for r in rows]
        rhs = [tower_degree(part * _pull_B_monomial(spec, *m)) for m in cols]
        for mono, coeff in zip(rows, _solve_transposed(gram, rhs)):
            out = out + xs.monomial(*mono, coeff)
    return out


def _solve_transposed(gram, rhs) -> list[Fraction]:
    # Solve sum_r x_r gram[r][m] = rhs[m].
    if len(gram) == 1:
        return [rhs[0] / gram[0][0]]
    (a, b), (c, d) = gram
    det = a * d - b * c
    # x0 a + x1 c = rhs0 ; x0 b + x1 d = rhs1
    return [(rhs[0] * d - rhs[1] * c) / det, (a * rhs[1] - b * rhs[0]) / det]


def _check_cone_codim(spec: TowerSpec, x: ChowElement, i: int):
    if not 0 <= i <= spec.n - spec.r1 - 1:
        raise ValueError(
            f"coning is an isomorphism only for codimension 0..{spec.n - spec.r1 - 1}, got {i}"
        )
    if x and (not x.is_homogeneous() or x.codim != i):
        raise ValueError(f"expected a homogeneous class of codimension {i}")


def cone_map_U(spec: TowerSpec, y: ChowElement, i: int) -> ChowElement:
    """Cone over a class of P(E_1) with vertex P(Q_1): ``B_* eta^* y``."""
    _check_cone_codim(spec, y, i)
    return push_B(pull_eta(spec, y))


def cone_map_D(spec: TowerSpec, x: ChowElement, i: int) -> ChowElement:
    """Inverse of the coning map: ``eta_*(delta . B^* x)``."""
    _check_cone_codim(spec, x, i)
    return push_eta(nef_pullback(spec) * pull_B(spec, x))


def transfer(y: ChowElement, target: RingSpec) -> ChowElement:
    """Copy coefficients of ``xi_1^j f_1^e`` onto ``xi^j f^e`` of another ring."""
    return ChowElement(target, dict(y.coeffs))


def tower_for(h: HNData) -> TowerSpec:
    return TowerSpec.from_hn(h)


def identity_checks(spec: TowerSpec) -> list[tuple[str, bool]]:
    """Evaluate the numerical identities of the blow-up; one (label, ok) per row."""
    from .chow_ring import class_of_PQ1

    xs, ys = spec.x_spec, spec.y_spec
    exc = exceptional(spec)
    delta = nef_pullback(spec)
    top = spec.n - spec.r1 - 1
    rows = [
        ("E . B^*(xi - mu_1 f)^r1 = 0", not (exc * delta)),
        ("eta_* delta = [Y]", push_eta(delta) == ys.one()),
        (
            "B^* respects xi^n = D xi^(n-1) f",
            pull_B(spec, xs.xi()) ** spec.n == pull_B(spec, xs.point() * spec.D),
        ),
        (
            f"B_*(E^j) = 0 for 1 <= j <= {top}" if top else "B_*(E^j) = 0 (no j to check)",
            all(not push_B(exc**j) for j in range(1, top + 1)),
        ),
        (
            f"B_*(E^{top + 1}) = {'-' if top % 2 else ''}[P(Q_1)]",
            push_B(exc ** (top + 1))
            == class_of_PQ1(xs, spec.r1, spec.d1) * (-1) ** top,
        ),
        (
            "B_* B^* = id on the monomial basis",
            all(push_B(pull_B(spec, xs.monomial(*m))) == xs.monomial(*m) for m in xs.basis()),
        ),
    ]
    ud = du = True
    for i in range(top + 1):
        for m in ys.basis(i):
            y = ys.monomial(*m)
            du = du and cone_map_D(spec, cone_map_U(spec, y, i), i) == y
        for m in xs.basis(i):
            x = xs.monomial(*m)
            ud = ud and cone_map_U(spec, cone_map_D(spec, x, i), i) == x
    rows.append((f"U_i o D_i = id for 0 <= i <= {top}", ud))
    rows.append((f"D_i o U_i = id for 0 <= i <= {top}", du))
    return rows
