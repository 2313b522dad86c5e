"""Plane trees, their outdegree words, and the marked-tree cyclic bijection.

A plane tree is a rooted tree whose subtrees are linearly ordered; vertices
are identified by their 1-based preorder (depth-first) index. Reading off
outdegrees in preorder gives a unit composition, and that map is a
bijection (:func:`preorder_outdegrees` / :func:`delta_decode`). Marking a
vertex of outdegree i and deleting its entry from the cyclic outdegree
word gives a bijection between marked trees and arbitrary n-part
compositions of n - i (:func:`bar_delta_encode` /
:func:`bar_delta_decode`); the inverse reads the fundamental decomposition
of the word.

Exhaustive enumeration (:func:`enumerate_plane_trees`) doubles as the
brute-force oracle for the closed-form counts.
"""

from __future__ import annotations

from collections import Counter
from dataclasses import dataclass
from typing import Iterator, NamedTuple

from ._limits import PLANE_EDGE_LIMIT, check_guard
from .compositions import Composition, fundamental_decomposition, is_unit

__all__ = [
    "PlaneTree",
    "MarkedPlaneTree",
    "preorder_outdegrees",
    "delta_decode",
    "outdegree_histogram",
    "degree_histogram",
    "enumerate_plane_trees",
    "bar_delta_encode",
    "bar_delta_decode",
    "count_outdegree_bruteforce",
    "format_plane_tree",
    "parse_plane_tree",
    "format_marked_plane_tree",
    "parse_marked_plane_tree",
]


@dataclass(frozen=True)
class PlaneTree:
    """Immutable plane tree; equality and hashing are structural."""

    children: tuple["PlaneTree", ...] = ()

    @property
    def vertex_count(self) -> int:
        total = 0
        stack = [self]
        while stack:
            node = stack.pop()
            total += 1
            stack.extend(node.children)
        return total

    @property
    def edge_count(self) -> int:
        return self.vertex_count - 1


class MarkedPlaneTree(NamedTuple):
    tree: PlaneTree
    mark: int  # 1-based preorder index of the marked vertex


def preorder_outdegrees(t: PlaneTree) -> Composition:
    """Outdegree word (d_1, ..., d_{n+1}) of the tree in preorder."""
    out: list[int] = []
    stack = [t]
    while stack:
        node = stack.pop()
        out.append(len(node.children))
        stack.extend(reversed(node.children))
    return tuple(out)


def delta_decode(word: Composition) -> PlaneTree:
    """Rebuild the unique plane tree whose preorder outdegree word is ``word``.

    Rejects words that are not unit compositions. Reconstruction is the
    usual stack scan: each entry opens a vertex expecting that many
    children, and a vertex closes as soon as its children are complete.
    """
    if not is_unit(word):
        raise ValueError(f"not a unit composition: {word!r}")
    stack: list[tuple[int, list[PlaneTree]]] = []
    for degree in word:
        stack.append((degree, []))
        while stack and len(stack[-1][1]) == stack[-1][0]:
            degree_done, kids = stack.pop()
            node = PlaneTree(tuple(kids))
            if not stack:
                return node
            stack[-1][1].append(node)
    raise AssertionError(f"unit word did not close into a tree: {word!r}")


def outdegree_histogram(t: PlaneTree) -> dict[int, int]:
    """Map outdegree -> number of vertices with that outdegree."""
    return dict(Counter(preorder_outdegrees(t)))


def degree_histogram(t: PlaneTree) -> dict[int, int]:
    """Map degree -> vertex count; the root's degree is its outdegree,
    every other vertex has degree outdegree + 1."""
    counts: Counter[int] = Counter()
    counts[len(t.children)] += 1
    stack = list(t.children)
    while stack:
        node = stack.pop()
        counts[len(node.children) + 1] += 1
        stack.extend(node.children)
    return dict(counts)


def _unit_words(n: int) -> Iterator[Composition]:
    # All unit (n+1)-part compositions of n in lexicographic order. At
    # 0-based position pos with running sum `total`, the next part must
    # keep the prefix f-value nonnegative (d >= pos + 1 - total) and the
    # sum within n; the final part is then forced to 0.
    word = [0] * (n + 1)

    def extend(pos: int, total: int) -> Iterator[Composition]:
        if pos == n:
            word[pos] = 0
            yield tuple(word)
            return
        for d in range(max(0, pos + 1 - total), n - total + 1):
            word[pos] = d
            yield from extend(pos + 1, total + d)

    yield from extend(0, 0)


def enumerate_plane_trees(n: int) -> Iterator[PlaneTree]:
    """Yield every plane tree with n edges exactly once.

    Order is lexicographic in the preorder outdegree word. Guarded: see
    :mod:`treedegree._limits`.
    """
    if n < 0:
        raise ValueError("edge count must be nonnegative")
    check_guard("plane-tree enumeration", n, PLANE_EDGE_LIMIT)
    for word in _unit_words(n):
        yield delta_decode(word)


def bar_delta_encode(m: MarkedPlaneTree) -> Composition:
    """Cyclic outdegree word of a marked tree, with the mark's entry removed.

    With the mark at preorder index j, the result is
    (d_{j+1}, ..., d_{n+1}, d_1, ..., d_{j-1}): length n, sum n - i where
    i is the marked vertex's outdegree.
    """
    word = preorder_outdegrees(m.tree)
    if not 1 <= m.mark <= len(word):
        raise ValueError(f"mark {m.mark} out of range 1..{len(word)}")
    return word[m.mark :] + word[: m.mark - 1]


def bar_delta_decode(word: Composition, i: int) -> MarkedPlaneTree:
    """Invert :func:`bar_delta_encode` for a marked vertex of outdegree i.

    ``word`` must have length n and sum n - i. Writing its fundamental
    decomposition as unit blocks u_1 ... u_s and positive tail p, the word
    p + (i) + u_1 + ... + u_s is always a unit composition; decoding it
    gives the tree, and the mark sits at preorder index len(p) + 1.
    """
    word = tuple(word)
    n = len(word)
    if n < 1:
        raise ValueError("encoded word must be nonempty")
    if i < 0 or sum(word) != n - i:
        raise ValueError(
            f"word of length {n} with sum {sum(word)} does not match outdegree {i}"
        )
    units, tail = fundamental_decomposition(word)
    s = len(units)
    tail_f = sum(tail) - len(tail)
    if tail_f != s - i or s < i:
        raise AssertionError(
            f"decomposition out of balance for {word!r}: s={s}, f(tail)={tail_f}, i={i}"
        )
    flat: tuple[int, ...] = ()
    for unit in units:
        flat += unit
    alpha = tail + (i,) + flat
    if not is_unit(alpha):
        raise AssertionError(f"rebuilt word is not a unit composition: {alpha!r}")
    return MarkedPlaneTree(delta_decode(alpha), len(tail) + 1)


def count_outdegree_bruteforce(n: int, i: int) -> int:
    """Oracle for the closed-form count: sum outdegree-i vertices over all
    enumerated n-edge plane trees."""
    if n < 1:
        raise ValueError("edge count must be at least 1")
    if i < 0:
        raise ValueError("outdegree must be nonnegative")
    return sum(outdegree_histogram(t).get(i, 0) for t in enumerate_plane_trees(n))


def format_plane_tree(t: PlaneTree) -> str:
    """Balanced-parentheses form: one () pair per non-root vertex, in preorder.

    The single vertex renders as the empty string; a root with two leaf
    children renders as ``()()``.
    """
    out: list[str] = []
    stack = [iter(t.children)]
    while stack:
        child = next(stack[-1], None)
        if child is None:
            stack.pop()
            if stack:
                out.append(")")
        else:
            out.append("(")
            stack.append(iter(child.children))
    return "".join(out)


def parse_plane_tree(text: str) -> PlaneTree:
    """Inverse of :func:`format_plane_tree`; whitespace is ignored."""
    frames: list[list[PlaneTree]] = [[]]
    for ch in text:
        if ch == "(":
            frames.append([])
        elif ch == ")":
            if len(frames) == 1:
                raise ValueError(f"unbalanced ')' in {text!r}")
            kids = frames.pop()
            frames[-1].append(PlaneTree(tuple(kids)))
        elif not ch.isspace():
            raise ValueError(f"unexpected character {ch!r} in plane tree text")
    if len(frames) != 1:
        raise ValueError(f"unbalanced '(' in {text!r}")
    return PlaneTree(tuple(frames[0]))


def format_marked_plane_tree(m: MarkedPlaneTree) -> str:
    return f"{format_plane_tree(m.tree)}@{m.mark}"


def parse_marked_plane_tree(text: str) -> MarkedPlaneTree:
    tree_part, sep, mark_part = text.rpartition("@")
    if not sep:
        raise ValueError(f"marked tree must end with '@<mark>': {text!r}")
    try:
        mark = int(mark_part)
    except ValueError:
        raise ValueError(f"mark must be an integer: {mark_part!r}") from None
    tree = parse_plane_tree(tree_part)
    if not 1 <= mark <= tree.vertex_count:
        raise ValueError(f"mark {mark} out of range 1..{tree.vertex_count}")
    return MarkedPlaneTree(tree, mark)
