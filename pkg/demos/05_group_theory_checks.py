"""The degree-p group theory, verified on honest permutations.

Everything the counting rests on group-theoretically is checked here by
exhaustive computation in the symmetric group: the structure of the
normalizer of an order-p subgroup, Galois's solvable-iff-unique-Sylow
criterion for transitive subgroups, and the count of index-p subgroups of a
solvable transitive group.
"""

from localmass.permgroup import (
    subgroup_closure,
    pcycle,
    verify_galois_criterion,
    verify_index_p_subgroups,
    verify_normalizer,
)

print("normalizer of the cycle group in the symmetric group:")
for p in (3, 5, 7):
    result = verify_normalizer(p)
    print(f"  p={p}: order {result['normalizer_order']} = p(p-1),"
          f" split cyclic quotient of order {result['quotient_cyclic_order']}")

print("\nsolvable <=> unique Sylow p-subgroup, over transitive subgroups:")
for p in (3, 5, 7):
    result = verify_galois_criterion(p)
    orders = sorted(g["order"] for g in result["transitive_groups"])
    print(f"  p={p} ({result['enumeration']} enumeration): orders {orders}")

print("\nindex-p subgroups of solvable transitive groups (exactly p each):")
for p in (3, 5, 7):
    result = verify_index_p_subgroups(p)
    for entry in result["groups"]:
        if "skipped" in entry:
            print(f"  p={p}: order {entry['order']} skipped (commutative)")
        else:
            print(f"  p={p}: order {entry['order']} has {entry['index_p_subgroups']}"
                  " index-p subgroups, pairwise trivial meets, pairwise generating")

# Single subgroups can be inspected directly.
rec = subgroup_closure([pcycle(5), (1, 0, 2, 3, 4)])
print(f"\nthe symmetric group on 5 points: order {rec.order},"
      f" solvable={rec.solvable}, Sylow-5 count {rec.sylow_p_count}")
