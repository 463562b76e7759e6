# The blow-up of P(E) along P(Q_1) and the coning maps.
#
# For E with HN quotients of ranks 1, 2 the blow-up Xt is a P^1-bundle over
# Y = P(E_1). Classes on Y are coned over P(Q_1) by U = B_* eta^*, and D
# undoes it.

# %%
from hncones import HNData, render
from hncones.blowup_tower import (
    TowerSpec,
    cone_map_D,
    cone_map_U,
    exceptional,
    identity_checks,
    nef_pullback,
    push_B,
    push_eta,
)

h = HNData.from_pairs([(1, -2), (2, 3)])
t = TowerSpec.from_hn(h)
xs, ys = t.x_spec, t.y_spec
print(f"X = P(E): rank {t.n}, degree {t.D};  Y = P(E_1): rank {ys.n}, degree {ys.D}")

# %%
E = exceptional(t)
delta = nef_pullback(t)
print("E . delta =", E * delta)
print("eta_* delta =", render(push_eta(delta)))
for j in range(1, t.n + 1):
    print(f"B_*(E^{j}) =", render(push_B(E**j)))

# %%
# Coning the boundary of Eff^1(Y) gives the boundary of Eff^1(X).
y = ys.xi() + ys.f() * 3
x = cone_map_U(t, y, 1)
print("U(", render(y), ") =", render(x))
print("D(", render(x), ") =", render(cone_map_D(t, x, 1)))

# %%
for label, ok in identity_checks(t):
    print(f"{label:40s} {'PASS' if ok else 'FAIL'}")
