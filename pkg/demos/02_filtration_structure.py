"""The filtered module behind the counts: blocks, levels, dimensions.

Conjugacy classes of degree-p extensions correspond to stable lines in a
filtered module; each character class owns one f-dimensional block per
stratum, placed at a level prime to p, plus two distinguished lines (the
level-0 line of the cyclotomic class and, in mixed characteristic, the
top-level line of the trivial class).
"""

from localmass import (
    INFINITE_E,
    LocalField,
    eigenspace_dim,
    generic_char,
    layout,
    nth_prime_to_p,
    omega_char,
    stratum_level,
    stratum_slot,
    trivial_char,
)

# Full layout over the 3-adics: six basis dimensions, 2 + (p-1)^2 * e * f.
q3 = LocalField(3, 1, 1)
print("eigen-blocks over the 3-adic field:")
for block in layout(q3).blocks:
    print(f"  level {block.level}  vbar {block.valuation}  dim {block.dim}  {block.distinguished}")
print(f"  total dimension {layout(q3).total_dim} = 2 + (p-1)^2 ef")

# In equal characteristic the module is infinite; truncate to look at it.
series3 = LocalField(3, 1, INFINITE_E)
lay = layout(series3, 8)
print("\nlevels below 8 in equal characteristic (0 and the prime-to-3 integers):")
print(" ", sorted({b.level for b in lay.blocks}))

# Levels within a stratum are pinned by a congruence; for the cyclotomic
# class they sweep out (p-1) times the prime-to-p integers.
print("\ncyclotomic levels vs the prime-to-p sequence (p = 5, e = 5):")
k55 = LocalField(5, 1, 5)
om = omega_char(k55)
for i in range(5):
    level = stratum_level(k55, om, i)
    print(f"  stratum {i}: slot {stratum_slot(k55, om, i)}, level {level}"
          f" = 4 * {nth_prime_to_p(5, i + 1)}")

# Eigenspace dimensions grow by f per stratum; the distinguished classes get
# their extra lines.
print("\ndimension growth over the 3-adics:")
for chi, name in [(omega_char(q3), "cyclotomic"), (trivial_char(), "trivial"), (generic_char(0), "generic")]:
    dims = [eigenspace_dim(q3, chi, t) for t in range(q3.e + 1)]
    print(f"  {name:<10} {dims}")
