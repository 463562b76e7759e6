# Reading the boundary slopes off the Harder-Narasimhan polygon.

# %%
import tempfile
from pathlib import Path

from hncones import build_polygon, eval_polygon, hn_from_summands, nu_table
from hncones.polygon import csv_text, emit_svg

# A rank-6 bundle built from semistable summands; the two slope-1/2 pieces merge.
h = hn_from_summands([(2, 1), (1, -2), (1, 4), (2, 1)])
print("HN profile:", h)

# %%
poly = build_polygon(h)
print("vertices:", [(x, str(y)) for x, y in poly.vertices])
print("segment slopes:", [str(s) for s in poly.slopes()])

# %%
# Every nu_i sits on the polygon at abscissa i.
nu = nu_table(h)
for i in range(1, h.rank):
    print(f"nu_{i} = {nu[i]!s:>5}   polygon({i}) = {eval_polygon(poly, i)}")

# %%
print(csv_text(poly, nu), end="")
out = Path(tempfile.mkdtemp()) / "hn_polygon.svg"
emit_svg(poly, nu, out)
print("SVG written to", out)
