"""Marked k-ary trees as subset pairs.

A k-ary tree completes to a plane tree whose internal vertices all have
outdegree k. Marking a vertex and taking its cyclic outdegree word gives a
composition of n copies of k and kn + k - n zeros; that word compresses to
a pair of subsets (X within 1..k, Y within 1..kn), which makes the count
C(k, i) * C(kn, n - i) immediate.
"""

from treedegree import (
    KaryTree,
    MarkedKaryTree,
    SubsetPair,
    complete,
    composition_to_kary_pair,
    format_composition,
    format_kary_tree,
    format_plane_tree,
    fundamental_decomposition,
    kary_leaf,
    kary_pair_to_composition,
    phi,
    phi_inverse,
    preorder_outdegrees,
)

L = kary_leaf(3)

# An 8-edge ternary tree; vertex 3 in preorder has two filled slots.
tree = KaryTree(
    3,
    (
        KaryTree(3, (None, None, KaryTree(3, (L, None, L)))),
        None,
        KaryTree(3, (None, None, KaryTree(3, (L, L, None)))),
    ),
)
mark = 3

print("ternary tree: ", format_kary_tree(tree))
completed, index_map = complete(tree)
print("completion:   ", format_plane_tree(completed))
print("completed word:", format_composition(preorder_outdegrees(completed)))
print("preorder index map (tree -> completion):", index_map)

word = kary_pair_to_composition(MarkedKaryTree(tree, mark))
print()
print(f"cyclic word at marked vertex {mark}:")
print("  ", format_composition(word))
units, tail = fundamental_decomposition(word)
print("  blocks:", " ".join(format_composition(u) for u in units), "|", format_composition(tail))

pair = phi(word)
print()
print("subset pair:", pair.to_json())
print("  X = block positions (among the first k) that begin with k")
print("  Y = positions of the k's left after deleting those block leaders")

assert phi_inverse(pair) == word
assert composition_to_kary_pair(word) == MarkedKaryTree(tree, mark)
print("round trips: subsets -> word -> marked tree all invert exactly")

print()
print("the eight marked binary trees with n=2 edges and a marked outdegree-1 vertex:")
for x in ({1}, {2}):
    for y in ({1}, {2}, {3}, {4}):
        pair = SubsetPair(2, 2, frozenset(x), frozenset(y))
        word = phi_inverse(pair)
        marked = composition_to_kary_pair(word)
        print(
            f"  X={sorted(x)} Y={sorted(y)}  "
            f"{format_composition(word):<16} "
            f"{format_kary_tree(marked.tree)} @ {marked.mark}"
        )
