# Cones on the Hirzebruch surface F_2 = P(O(1) + O(3)).
#
# E = O(1) + O(3) has rank 2 and degree 4. Its HN quotients are O(1) (the
# most negative one) and O(3).

# %%
from hncones import HNData, eff_cone, nef_cone, nu_table, render
from hncones.cones import ring_spec

h = HNData.from_pairs([(1, 1), (1, 3)])
spec = ring_spec(h)
print("HN profile:", h, " rank", h.rank, " degree", h.degree)

# %%
# The single boundary slope nu_1 fixes both cones of curves.
nu = nu_table(h)
print("nu_1 =", nu[1])

eff = eff_cone(h, 1)
nef = nef_cone(h, 1)
print("Eff^1 =", f"<{render(eff.gen_interior)}, {render(eff.gen_fiber)}>")
print("Nef^1 =", f"<{render(nef.gen_interior)}, {render(nef.gen_fiber)}>")

# %%
# The non-fiber boundary of Eff is the negative section, of self-intersection -2.
section = eff.gen_interior
print("section^2 =", render(section * section), "   degree:", (section * section).degree())

# The nef boundary xi - f meets the section in 0 and the fiber in 1.
print("(xi - f).section =", (nef.gen_interior * section).degree())
print("(xi - f).f       =", (nef.gen_interior * spec.f()).degree())
