"""Shared golden fixtures: hand-built sample trees and their frozen encodings.

The 14-edge plane tree and the 8-edge ternary tree below are drawn
vertex-by-vertex; every word, decomposition and subset pair next to them
was verified by hand against those drawings before being frozen here.
"""

from treedegree import KaryTree, PlaneTree, kary_leaf


def pt(*children: PlaneTree) -> PlaneTree:
    return PlaneTree(tuple(children))


# 14-edge plane tree: root has three subtrees; the second vertex in
# preorder carries a leaf and a (leaf, cherry) branch; vertex 4 (marked
# below) has outdegree 2.
SAMPLE_TREE_14 = pt(
    pt(pt(), pt(pt(), pt(pt(), pt()))),
    pt(),
    pt(pt(), pt(), pt(pt(), pt())),
)

SAMPLE_WORD_14 = (3, 2, 0, 2, 0, 2, 0, 0, 0, 3, 0, 0, 2, 0, 0)

SAMPLE_MARK = 4  # preorder index of a vertex with outdegree 2

SAMPLE_CYCLIC_WORD = (0, 2, 0, 0, 0, 3, 0, 0, 2, 0, 0, 3, 2, 0)

SAMPLE_CYCLIC_UNITS = ((0,), (2, 0, 0), (0,), (3, 0, 0, 2, 0, 0))
SAMPLE_CYCLIC_TAIL = (3, 2, 0)


def _ternary(slots) -> KaryTree:
    return KaryTree(3, tuple(slots))


_L3 = kary_leaf(3)

# 8-edge ternary tree; vertex 3 in preorder (two filled slots) is the
# marked vertex. Its completion has 28 vertices and the marked vertex
# lands at completed preorder index 5.
SAMPLE_TERNARY_8 = _ternary(
    (
        _ternary((None, None, _ternary((_L3, None, _L3)))),
        None,
        _ternary((None, None, _ternary((_L3, _L3, None)))),
    )
)

SAMPLE_TERNARY_MARK = 3

SAMPLE_TERNARY_COMPLETED_WORD = (
    3, 3, 0, 0, 3, 3, 0, 0, 0, 0, 3, 0, 0, 0, 0, 3, 0, 0, 3, 3, 0, 0, 0, 3, 0, 0, 0, 0,
)

SAMPLE_TERNARY_INDEX_MAP = (1, 2, 5, 6, 11, 16, 19, 20, 24)

SAMPLE_TERNARY_ALPHA = (
    3, 0, 0, 0, 0, 3, 0, 0, 0, 0, 3, 0, 0, 3, 3, 0, 0, 0, 3, 0, 0, 0, 0, 3, 3, 0, 0,
)

SAMPLE_TERNARY_UNITS = (
    (3, 0, 0, 0),
    (0,),
    (3, 0, 0, 0),
    (0,),
    (3, 0, 0, 3, 3, 0, 0, 0, 3, 0, 0, 0, 0),
)
SAMPLE_TERNARY_TAIL = (3, 3, 0, 0)

SAMPLE_TERNARY_X = frozenset({1, 3})
SAMPLE_TERNARY_Y = frozenset({8, 11, 12, 16, 21, 22})


def _binary(s1, s2) -> KaryTree:
    return KaryTree(2, (s1, s2))


_L2 = kary_leaf(2)

# All eight marked binary trees with 2 edges and a marked outdegree-1
# vertex, keyed by their subset pair (X, Y) with k = 2, n = 2. Each tree
# is one of the four 2-edge slot paths; the mark is the root (1) or the
# middle vertex (2).
BINARY_TABLE = [
    # (X, Y, word, tree, mark)
    ({1}, {1}, (2, 2, 0, 0, 0, 0), _binary(_binary(_L2, None), None), 1),
    ({2}, {1}, (0, 2, 2, 0, 0, 0), _binary(None, _binary(_L2, None)), 1),
    ({1}, {2}, (2, 0, 2, 0, 0, 0), _binary(_binary(None, _L2), None), 1),
    ({2}, {2}, (0, 2, 0, 2, 0, 0), _binary(None, _binary(None, _L2)), 1),
    ({1}, {3}, (2, 0, 0, 0, 2, 0), _binary(None, _binary(_L2, None)), 2),
    ({2}, {3}, (0, 2, 0, 0, 2, 0), _binary(None, _binary(None, _L2)), 2),
    ({1}, {4}, (2, 0, 0, 0, 0, 2), _binary(_binary(_L2, None), None), 2),
    ({2}, {4}, (0, 2, 0, 0, 0, 2), _binary(_binary(None, _L2), None), 2),
]
