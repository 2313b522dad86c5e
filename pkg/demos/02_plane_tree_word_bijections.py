"""Plane trees as words, and marked trees as arbitrary compositions.

Reading outdegrees in preorder turns a tree into a unit composition
(f >= 0 on proper prefixes, total f = -1); the map is bijective. Deleting
the marked vertex's entry from the cyclic word turns a marked tree into an
arbitrary n-part composition of n - i, which is why the outdegree counts
are single binomials: compositions are easy to count.
"""

from treedegree import (
    MarkedPlaneTree,
    PlaneTree,
    bar_delta_decode,
    bar_delta_encode,
    delta_decode,
    enumerate_plane_trees,
    f_statistic,
    format_composition,
    format_plane_tree,
    fundamental_decomposition,
    preorder_outdegrees,
)


def pt(*children):
    return PlaneTree(tuple(children))


# A 14-edge tree; vertex 4 in preorder has outdegree 2.
tree = pt(
    pt(pt(), pt(pt(), pt(pt(), pt()))),
    pt(),
    pt(pt(), pt(), pt(pt(), pt())),
)

word = preorder_outdegrees(tree)
print("tree text:     ", format_plane_tree(tree))
print("outdegree word:", format_composition(word))
print("prefix f-values stay >= 0 until the final -1:")
f = 0
values = []
for part in word:
    f += part - 1
    values.append(f)
print("  ", values)
assert delta_decode(word) == tree

print()
mark = 4
marked = MarkedPlaneTree(tree, mark)
cyclic = bar_delta_encode(marked)
print(f"mark vertex {mark} (outdegree {word[mark - 1]}) and delete it from the cyclic word:")
print("  ", format_composition(cyclic))
print(f"length {len(cyclic)} = n, sum {sum(cyclic)} = n - i: any such composition occurs")

units, tail = fundamental_decomposition(cyclic)
print()
print("its fundamental decomposition (unit blocks, then a positive tail):")
print("  units:", " ".join(format_composition(u) for u in units))
print("  tail: ", format_composition(tail))
print(f"  f(tail) = {f_statistic(tail)} = #units - i = {len(units)} - {word[mark - 1]}")

back = bar_delta_decode(cyclic, word[mark - 1])
print()
print("decoding rebuilds the same marked tree:", back == marked)

print()
print("the same machinery counts: marked pairs with outdegree i at n=4 edges")
n = 4
for i in range(n + 1):
    pairs = 0
    for t in enumerate_plane_trees(n):
        w = preorder_outdegrees(t)
        pairs += sum(1 for d in w if d == i)
    print(f"  i={i}: {pairs} marked pairs = C({2*n-i-1},{n-1}) compositions")
