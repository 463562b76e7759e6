"""The Harder-Narasimhan polygon and its renderings.

The polygon joins the points ``(rk(E/E_k), -deg E_k)`` for ``k = 0..l``. Its
segments have slopes ``mu_1 < ... < mu_l``, so it is the graph of a convex
function on ``[0, n]``; the boundary slopes ``nu_i`` of the pseudo-effective
cones are its values at the integers.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from fractions import Fraction
from pathlib import Path
from typing import Sequence
from xml.sax.saxutils import escape

from .hn_model import HNData, Rational, as_fraction, cumulative, format_fraction


@dataclass(frozen=True)
class HNPolygon:
    vertices: tuple[tuple[int, Fraction], ...]

    def __post_init__(self):
        verts = tuple((int(x), as_fraction(y)) for x, y in self.vertices)
        if len(verts) < 2:
            raise ValueError("a polygon needs at least two vertices")
        if verts[0][0] != 0:
            raise ValueError("the first vertex must sit at x = 0")
        if any(b[0] <= a[0] for a, b in zip(verts, verts[1:])):
            raise ValueError("vertex abscissae must be strictly increasing")
        object.__setattr__(self, "vertices", verts)

    @property
    def width(self) -> int:
        return self.vertices[-1][0]

    def slopes(self) -> list[Fraction]:
        return [
            (y1 - y0) / (x1 - x0)
            for (x0, y0), (x1, y1) in zip(self.vertices, self.vertices[1:])
        ]


def build_polygon(h: HNData) -> HNPolygon:
    return HNPolygon(tuple((r, -d) for r, d in cumulative(h)))


def eval_polygon(p: HNPolygon, x: Rational) -> Fraction:
    x = as_fraction(x)
    if not 0 <= x <= p.width:
        raise ValueError(f"abscissa {format_fraction(x)} outside [0, {p.width}]")
    for (x0, y0), (x1, y1) in zip(p.vertices, p.vertices[1:]):
        if x0 <= x <= x1:
            return y0 + (y1 - y0) * (x - x0) / (x1 - x0)
    raise AssertionError("unreachable: x was range-checked")


def is_convex(p: HNPolygon) -> bool:
    s = p.slopes()
    return all(a < b for a, b in zip(s, s[1:]))


def nu_points(nu) -> list[tuple[int, Fraction]]:
    return [] if nu is None else sorted(nu.nu.items())


def csv_text(p: HNPolygon, nu) -> str:
    xs = {x for x, _ in p.vertices}
    lines = ["i,nu_i,on_vertex"]
    for i, v in nu_points(nu):
        lines.append(f"{i},{format_fraction(v)},{'true' if i in xs else 'false'}")
    return "\n".join(lines) + "\n"


def emit_csv(p: HNPolygon, nu, path) -> None:
    with open(Path(path), "w", encoding="utf-8", newline="\n") as fh:
        fh.write(csv_text(p, nu))


def _fmt(v: float) -> str:
    text = f"{v:.2f}".rstrip("0").rstrip(".")
    return "0" if text == "-0" else text


def svg_text(p: HNPolygon, nu, scale: int = 60) -> str:
    # Floats appear only in drawing coordinates.
    pts: Sequence[tuple[int, Fraction]] = p.vertices
    xs = [x for x, _ in pts]
    ys = [y for _, y in pts] + [v for _, v in nu_points(nu)]
    xmin, xmax = 0, max(xs)
    ymin, ymax = min(min(ys), 0), max(max(ys), 0)
    w = max(xmax - xmin, 1)
    hgt = max(ymax - ymin, 1)
    padx, pady = w * 0.1, hgt * 0.1
    left, top = xmin - padx, float(ymax) + pady
    width, height = (w + 2 * padx) * scale, (float(hgt) + 2 * pady) * scale

    def tx(x):
        return (float(x) - left) * scale

    def ty(y):
        return (top - float(y)) * scale

    out = [
        '<?xml version="1.0" encoding="UTF-8"?>',
        '<svg xmlns="http://www.w3.org/2000/svg" version="1.1" '
        f'width="{_fmt(width)}" height="{_fmt(height)}" '
        f'viewBox="0 0 {_fmt(width)} {_fmt(height)}">',
        f"<title>{escape('HN polygon')}</title>",
        '<g class="grid" stroke="#ddd" stroke-width="1">',
    ]
    for gx in range(xmin, xmax + 1):
        out.append(
            f'<line x1="{_fmt(tx(gx))}" y1="{_fmt(ty(ymin))}" '
            f'x2="{_fmt(tx(gx))}" y2="{_fmt(ty(ymax))}"/>'
        )
    for gy in range(math.floor(ymin), math.ceil(ymax) + 1):
        out.append(
            f'<line x1="{_fmt(tx(xmin))}" y1="{_fmt(ty(gy))}" '
            f'x2="{_fmt(tx(xmax))}" y2="{_fmt(ty(gy))}"/>'
        )
    out.append("</g>")
    out.append(
        f'<line class="axis" x1="{_fmt(tx(xmin))}" y1="{_fmt(ty(0))}" '
        f'x2="{_fmt(tx(xmax))}" y2="{_fmt(ty(0))}" stroke="#888" stroke-width="1.5"/>'
    )
    path = " ".join(f"{_fmt(tx(x))},{_fmt(ty(y))}" for x, y in pts)
    out.append(
        f'<polyline class="hn-polygon" points="{path}" fill="none" '
        'stroke="#1f4e99" stroke-width="2"/>'
    )
    for x, y in pts:
        out.append(
            f'<circle class="vertex" data-x="{x}" data-y="{format_fraction(y)}" '
            f'cx="{_fmt(tx(x))}" cy="{_fmt(ty(y))}" r="5" fill="#1f4e99"/>'
        )
    for i, v in nu_points(nu):
        out.append(
            f'<rect class="nu" data-i="{i}" data-nu="{format_fraction(v)}" '
            f'x="{_fmt(tx(i) - 3)}" y="{_fmt(ty(v) - 3)}" width="6" height="6" fill="#c0392b"/>'
        )
    out.append("</svg>")
    return "\n".join(out) + "\n"


def emit_svg(p: HNPolygon, nu, path) -> None:
    Path(path).write_text(svg_text(p, nu), encoding="utf-8")
