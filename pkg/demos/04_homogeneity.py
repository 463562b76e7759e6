# Pseudo-effective equals nef exactly for semistable bundles.

# %%
from fractions import Fraction

from hncones import HNData, duality_defect, is_k_homogeneous, nu_oracle, nu_table, twist

examples = {
    "semistable (4, 2)": HNData.from_pairs([(4, 2)]),
    "O(-1)+O(1)+O(2)": HNData.from_pairs([(1, -1), (1, 1), (1, 2)]),
    "ranks 2,1,2": HNData.from_pairs([(2, -3), (1, 0), (2, 5)]),
}

# %%
for name, h in examples.items():
    flags = [is_k_homogeneous(h, k) for k in range(1, h.rank)]
    defects = [str(duality_defect(h, k)) for k in range(1, h.rank)]
    print(f"{name:20s} homogeneous per codim: {flags}  s_k: {defects}")

# %%
# Twisting to degree 0 shifts every nu_j by -(n - j) t and keeps the answer.
h = examples["ranks 2,1,2"]
t = -h.degree / h.rank
h0 = twist(h, t)
print("deg-0 twist:", h0, " degree", h0.degree)
for j in range(1, h.rank):
    print(f"  nu_{j}: {nu_table(h)[j]} -> {nu_table(h0)[j]}")

# %%
# The recursive oracle reaches the same table, and records how.
table, trace = nu_oracle(h)
assert table == nu_table(h)
for entry in trace.entries:
    print(f"  nu_{entry.index} = {entry.nu!s:>6} via {entry.rule}: {entry.element}")
