"""Counting vertices by outdegree, exactly.

Over all plane trees with n edges, the vertices of outdegree i number
C(2n-i-1, n-1); over all k-ary trees they number C(k,i)*C(kn, n-i).
This script prints the small tables, checks them against exhaustive
enumeration, and shows the row/edge sum sanity identities.
"""

from collections import Counter

from treedegree import (
    binomial,
    catalan,
    count_kary_outdegree,
    count_plane_outdegree,
    count_plane_degree,
    enumerate_plane_trees,
    outdegree_histogram,
)

print("Plane trees: count of outdegree-i vertices over all n-edge trees")
print("n\\i " + "".join(f"{i:>8}" for i in range(7)))
for n in range(1, 7):
    row = [count_plane_outdegree(n, i) for i in range(7)]
    print(f"{n:>3} " + "".join(f"{v:>8}" for v in row))

print()
print("Cross-check against brute force (n = 5):")
totals = Counter()
trees = 0
for tree in enumerate_plane_trees(5):
    trees += 1
    totals.update(outdegree_histogram(tree))
print(f"  enumerated {trees} trees (catalan(5) = {catalan(5)})")
for i in range(6):
    formula = count_plane_outdegree(5, i)
    print(f"  i={i}: enumeration {totals.get(i, 0):>4}, formula {formula:>4}")
    assert totals.get(i, 0) == formula

print()
print("Row and edge sums (every vertex / edge counted once):")
for n in range(1, 7):
    row = sum(count_plane_outdegree(n, i) for i in range(n + 1))
    edge = sum(i * count_plane_outdegree(n, i) for i in range(n + 1))
    print(
        f"  n={n}: sum_i count = {row} = C(2n,n) = {binomial(2*n, n)}, "
        f"sum_i i*count = {edge} = n*c_n = {n * catalan(n)}"
    )

print()
print("Degrees double the outdegrees (degree = outdegree except at the root):")
for n in range(2, 5):
    for i in range(1, 4):
        print(
            f"  n={n}, i={i}: degree count {count_plane_degree(n, i)}"
            f" = 2 * {count_plane_outdegree(n, i)}"
        )

print()
print("Binary and ternary trees: count of outdegree-i vertices")
for k in (2, 3):
    print(f"  k={k}, n\\i " + "".join(f"{i:>8}" for i in range(k + 1)))
    for n in range(1, 6):
        row = [count_kary_outdegree(n, k, i) for i in range(k + 1)]
        print(f"  {n:>6} " + "".join(f"{v:>8}" for v in row))

print()
print("Counts grow fast but stay exact, e.g. n=40 leaves over plane trees:")
print(f"  {count_plane_outdegree(40, 0)}")
