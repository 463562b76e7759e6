"""Pseudo-effective and nef cones of cycles on P(E) over a curve.

In every codimension ``1 <= k <= n-1`` the space N^k(P(E)) is spanned by
``xi^k`` and ``xi^(k-1) f``. Elements are given plane coordinates
``(a, b)`` meaning ``a xi^k + b xi^(k-1) f``. The pseudo-effective cone is

    Eff^k = < xi^k + nu^(k) xi^(k-1) f,  xi^(k-1) f >,    nu^(k) = nu_{n-k},

with the boundary slopes ``nu_i`` read off from the HN data. The nef cone
used here is the one living *inside* Eff^k: classes of Eff^k pairing
nonnegatively with all of Eff_k = Eff^{n-k}. This is narrower than the usual
nef cone of the ambient space, which is not required to be effective.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import Dict

from .chow_ring import ChowElement, RingSpec, class_of_PQ1
from .hn_model import HNData, cumulative


class NoCycles(ValueError):
    """Raised when ``n < 2``: P(E) is the curve itself and has no proper cones."""


def ring_spec(h: HNData) -> RingSpec:
    return RingSpec(h.rank, h.degree)


@dataclass(frozen=True)
class NuTable:
    spec: RingSpec
    nu: Dict[int, Fraction]

    def __getitem__(self, i: int) -> Fraction:
        return self.nu[i]

    def nu_codim(self, k: int) -> Fraction:
        """``nu^(k) = nu_{n-k}``, the slope indexed by codimension."""
        return self.nu[self.spec.n - k]

    def __eq__(self, other):
        if not isinstance(other, NuTable):
            return NotImplemented
        return self.spec == other.spec and self.nu == other.nu


@dataclass(frozen=True)
class Cone2D:
    codim: int
    gen_interior: ChowElement
    gen_fiber: ChowElement

    def __post_init__(self):
        for g in (self.gen_interior, self.gen_fiber):
            if not g or g.codim != self.codim:
                raise ValueError("cone generators must be nonzero and of the cone's codimension")
        if _cross(self.coords(self.gen_interior), self.coords(self.gen_fiber)) == 0:
            raise ValueError("cone generators are proportional")

    @property
    def spec(self) -> RingSpec:
        return self.gen_interior.spec

    def coords(self, x: ChowElement) -> tuple[Fraction, Fraction]:
        return x.coeff(self.codim, 0), x.coeff(self.codim - 1, 1)

    def same_as(self, other: Cone2D) -> bool:
        """Equality as cones: the two rays agree up to positive scaling."""
        return (
            self.codim == other.codim
            and _same_ray(self.coords(self.gen_interior), other.coords(other.gen_interior))
            and _same_ray(self.coords(self.gen_fiber), other.coords(other.gen_fiber))
        )


def _cross(u, v) -> Fraction:
    return u[0] * v[1] - u[1] * v[0]


def _dot(u, v) -> Fraction:
    return u[0] * v[0] + u[1] * v[1]


def _same_ray(u, v) -> bool:
    return _cross(u, v) == 0 and _dot(u, v) > 0


def nu_table(h: HNData) -> NuTable:
    """Boundary slopes ``nu_1, ..., nu_{n-1}`` in closed form.

    For the ``i``-th step inside the ``k``-th HN piece,
    ``nu_{rbar_{k-1} + i} = -dbar_{k-1} + i mu_k``; the last index ``n`` is
    skipped.
    """
    n = h.rank
    if n < 2:
        raise NoCycles("P(E) has no proper cones when rank E < 2")
    cum = cumulative(h)
    nu: Dict[int, Fraction] = {}
    for k, q in enumerate(h.quotients, start=1):
        rbar, dbar = cum[k - 1]
        for i in range(1, q.rank + 1):
            if rbar + i == n:
                continue
            nu[rbar + i] = -dbar + i * q.slope
    return NuTable(ring_spec(h), nu)


def _check_codim(h: HNData, k: int):
    if h.rank < 2:
        raise NoCycles("P(E) has no proper cones when rank E < 2")
    if not 1 <= k <= h.rank - 1:
        raise ValueError(f"codimension {k} outside 1..{h.rank - 1}")


def eff_cone(h: HNData, k: int, nu: NuTable | None = None) -> Cone2D:
    _check_codim(h, k)
    nu = nu or nu_table(h)
    spec = nu.spec
    return Cone2D(k, spec.element(1, nu.nu_codim(k), k), spec.element(0, 1, k))


def duality_defect(h: HNData, k: int, nu: NuTable | None = None) -> Fraction:
    """``s_k = D + nu^(k) + nu^(n-k)``; nonpositive, and zero iff semistable."""
    _check_codim(h, k)
    nu = nu or nu_table(h)
    return h.degree + nu.nu_codim(k) + nu.nu_codim(h.rank - k)


def _cut(rays, functional):
    # Intersect the 2D cone spanned by two rays with {v : functional(v) >= 0}.
    r1, r2 = rays
    v1, v2 = functional(r1), functional(r2)
    if v1 >= 0 and v2 >= 0:
        return rays
    if v1 < 0 and v2 < 0:
        raise ArithmeticError("dual constraints leave only the zero cone")
    if v1 < 0:
        r1 = (v2 * r1[0] - v1 * r2[0], v2 * r1[1] - v1 * r2[1])
    else:
        r2 = (v1 * r2[0] - v2 * r1[0], v1 * r2[1] - v2 * r1[1])
    return r1, r2


def nef_cone(h: HNData, k: int, nu: NuTable | None = None) -> Cone2D:
    """Classes of Eff^k meeting every generator of Eff^{n-k} nonnegatively.

    The dual constraints are assembled from the intersection pairing and cut
    into Eff^k one half-plane at a time.
    """
    _check_codim(h, k)
    nu = nu or nu_table(h)
    spec = nu.spec
    eff = eff_cone(h, k, nu)
    dual = eff_cone(h, spec.n - k, nu)
    basis = (spec.element(1, 0, k), spec.element(0, 1, k))
    rays = (eff.coords(eff.gen_interior), eff.coords(eff.gen_fiber))
    for g in (dual.gen_interior, dual.gen_fiber):
        weights = [(b * g).degree() for b in basis]
        rays = _cut(rays, lambda v, w=weights: _dot(w, v))
    gens = []
    for a, b in rays:
        if a != 0:
            a, b = Fraction(1), b / a
        else:
            b = Fraction(1)
        gens.append(spec.element(a, b, k))
    interior, fiber = sorted(gens, key=lambda g: g.coeff(k, 0) == 0)
    return Cone2D(k, interior, fiber)


def member(x: ChowElement, c: Cone2D) -> bool:
    """Closed-cone membership, solved exactly in the (a, b) plane."""
    if not x.is_homogeneous():
        raise ValueError("membership needs a homogeneous class")
    if x and x.codim != c.codim:
        raise ValueError(f"class has codimension {x.codim}, cone has {c.codim}")
    if x.spec != c.spec:
        raise ValueError("class and cone live on different bundles")
    u, v, w = c.coords(c.gen_interior), c.coords(c.gen_fiber), c.coords(x)
    det = _cross(u, v)
    # Cramer's rule for w = s u + t v.
    s = _cross(w, v) / det
    t = _cross(u, w) / det
    return s >= 0 and t >= 0


def is_k_homogeneous(h: HNData, k: int) -> bool:
    """Whether every pseudo-effective class of codimension ``k`` is nef.

    ``k`` is a codimension; the matching cycle dimension is ``n - k``.
    """
    nu = nu_table(h)
    return nef_cone(h, k, nu).same_as(eff_cone(h, k, nu))


def is_semistable(h: HNData) -> bool:
    return h.length == 1


def tau_class(h: HNData, i: int) -> ChowElement:
    """Boundary class ``[P(Q_1)] (xi - mu_1 f)^(r_1 - i)`` of Eff_i, dimension ``i <= r_1``."""
    r1 = h.quotients[0].rank
    if not 1 <= i <= r1:
        raise ValueError(f"dimension {i} outside 1..{r1}")
    spec = ring_spec(h)
    q1 = h.quotients[0]
    nef_div = spec.xi() - spec.f() * q1.slope
    return class_of_PQ1(spec, q1.rank, q1.degree) * nef_div ** (r1 - i)
