"""Assembly of the per-bundle report printed by ``hncones analyze``."""

from __future__ import annotations

from . import __version__
from .chow_ring import render
from .cones import duality_defect, eff_cone, nef_cone, nu_table
from .hn_model import HNData, format_fraction
from .polygon import build_polygon, eval_polygon

SCHEMA = 1


def build_report(h: HNData) -> dict:
    n = h.rank
    poly = build_polygon(h)
    report = {
        "schema": SCHEMA,
        "version": __version__,
        "input": h.to_json(),
        "rank": n,
        "degree": format_fraction(h.degree),
        "slopes": [format_fraction(s) for s in h.slopes],
        "semistable": h.is_semistable,
        "polygon": [[x, format_fraction(y)] for x, y in poly.vertices],
        "nu": [],
        "codimensions": [],
    }
    if n < 2:
        return report
    nu = nu_table(h)
    for i, v in sorted(nu.nu.items()):
        if eval_polygon(poly, i) != v:
            raise AssertionError(f"nu_{i} is off the HN polygon")
        report["nu"].append({"i": i, "nu": format_fraction(v)})
    for k in range(1, n):
        eff = eff_cone(h, k, nu)
        nef = nef_cone(h, k, nu)
        report["codimensions"].append(
            {
                "codim": k,
                "dimension": n - k,
                "eff": [render(eff.gen_interior), render(eff.gen_fiber)],
                "nef": [render(nef.gen_interior), render(nef.gen_fiber)],
                "s": format_fraction(duality_defect(h, k, nu)),
                "homogeneous": nef.same_as(eff),
            }
        )
    return report


def report_text(report: dict) -> str:
    lines = [
        f"bundle: rank {report['rank']}, degree {report['degree']}",
        "HN quotients (rank, degree): "
        + ", ".join(f"({q['rank']}, {q['degree']})" for q in report["input"]["quotients"]),
        f"slopes: {', '.join(report['slopes'])}",
        f"semistable: {'yes' if report['semistable'] else 'no'}",
        "polygon: " + " -> ".join(f"({x}, {y})" for x, y in report["polygon"]),
    ]
    if not report["nu"]:
        lines.append("no proper cones (rank < 2)")
        return "\n".join(lines) + "\n"
    lines.append("nu: " + ", ".join(f"nu_{e['i']} = {e['nu']}" for e in report["nu"]))
    for c in report["codimensions"]:
        lines.append(f"codim {c['codim']} (dim {c['dimension']}):")
        lines.append(f"  Eff = <{c['eff'][0]}, {c['eff'][1]}>")
        lines.append(f"  Nef = <{c['nef'][0]}, {c['nef'][1]}>")
        lines.append(f"  s = {c['s']}, homogeneous: {'yes' if c['homogeneous'] else 'no'}")
    return "\n".join(lines) + "\n"
