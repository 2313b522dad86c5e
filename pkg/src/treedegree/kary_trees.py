"""k-ary trees, their completions, and the subset encoding of marked trees.

A k-ary tree gives every vertex exactly k ordered child slots, each empty
or holding a subtree; edges count the filled slots. Filling every empty
slot with a leaf produces the *completion*: a plane tree whose internal
vertices all have outdegree exactly k (:func:`complete` /
:func:`uncomplete`). A marked k-ary tree therefore encodes, through the
completion and the cyclic word of :mod:`treedegree.plane_trees`, as a
composition made of n copies of k and kn + k - n zeros whose fundamental
decomposition has at least k unit blocks (:func:`kary_pair_to_composition`
/ :func:`composition_to_kary_pair`).

Such a word compresses further to a pair of subsets: X records which of
the first k unit blocks begin with k, and Y records where the remaining
k entries sit after those block leaders are deleted (:func:`phi` /
:func:`phi_inverse`). The subset pair is the counting-friendly form: for
a marked vertex of outdegree i there are C(k, i) choices of X and
C(kn, n - i) choices of Y.
"""

from __future__ import annotations

import json
from dataclasses import dataclass
from itertools import product
from typing import Iterator, NamedTuple, Optional

from ._limits import KARY_EDGE_LIMIT, check_guard
from .compositions import (
    Composition,
    enumerate_compositions,
    fundamental_decomposition,
)
from .plane_trees import (
    MarkedPlaneTree,
    PlaneTree,
    bar_delta_decode,
    bar_delta_encode,
)

__all__ = [
    "KaryTree",
    "MarkedKaryTree",
    "SubsetPair",
    "kary_leaf",
    "kary_preorder_outdegrees",
    "complete",
    "uncomplete",
    "kary_word_parameters",
    "kary_pair_to_composition",
    "composition_to_kary_pair",
    "phi",
    "phi_inverse",
    "enumerate_kary_trees",
    "count_kary_outdegree_bruteforce",
    "format_kary_tree",
    "parse_kary_tree",
    "format_marked_kary_tree",
    "parse_marked_kary_tree",
]


@dataclass(frozen=True)
class KaryTree:
    """Vertex with exactly ``arity`` ordered slots, each empty (None) or a subtree."""

    arity: int
    slots: tuple[Optional["KaryTree"], ...]

    def __post_init__(self) -> None:
        if self.arity < 1:
            raise ValueError("arity must be at least 1")
        if len(self.slots) != self.arity:
            raise ValueError(
                f"expected {self.arity} slots, got {len(self.slots)}"
            )
        for sub in self.slots:
            if sub is not None and sub.arity != self.arity:
                raise ValueError("subtree arity differs from parent arity")

    @property
    def vertex_count(self) -> int:
        total = 0
        stack: list[KaryTree] = [self]
        while stack:
            node = stack.pop()
            total += 1
            stack.extend(sub for sub in node.slots if sub is not None)
        return total

    @property
    def edge_count(self) -> int:
        return self.vertex_count - 1


class MarkedKaryTree(NamedTuple):
    tree: KaryTree
    mark: int  # 1-based preorder index over present vertices


def kary_leaf(arity: int) -> KaryTree:
    """Single vertex with all slots empty."""
    return KaryTree(arity, (None,) * arity)


def kary_preorder_outdegrees(t: KaryTree) -> tuple[int, ...]:
    """Number of filled slots per vertex, in preorder over present vertices."""
    out: list[int] = []
    stack = [t]
    while stack:
        node = stack.pop()
        present = [sub for sub in node.slots if sub is not None]
        out.append(len(present))
        stack.extend(reversed(present))
    return tuple(out)


def complete(t: KaryTree) -> tuple[PlaneTree, tuple[int, ...]]:
    """Materialize every empty slot as a leaf.

    Returns the resulting plane tree together with the preorder index map:
    entry j-1 is the completed tree's preorder index of the j-th vertex of
    ``t``. Every original vertex becomes internal with outdegree exactly
    k, so a tree with n edges completes to k(n+1) edges.
    """
    index_map: list[int] = []
    counter = 0

    def walk(node: KaryTree) -> PlaneTree:
        nonlocal counter
        counter += 1
        index_map.append(counter)
        children: list[PlaneTree] = []
        for sub in node.slots:
            if sub is None:
                counter += 1
                children.append(PlaneTree())
            else:
                children.append(walk(sub))
        return PlaneTree(tuple(children))

    completed = walk(t)
    return completed, tuple(index_map)


def uncomplete(p: PlaneTree, k: int) -> KaryTree:
    """Inverse of :func:`complete`: leaves of ``p`` become empty slots.

    Rejects trees that are not completions, i.e. the single vertex or any
    tree with an internal vertex of outdegree other than k.
    """
    if k < 1:
        raise ValueError("arity must be at least 1")
    if not p.children:
        raise ValueError("a single vertex is not the completion of any tree")

    def walk(node: PlaneTree) -> KaryTree:
        if len(node.children) != k:
            raise ValueError(
                f"internal vertex has outdegree {len(node.children)}, expected {k}"
            )
        return KaryTree(
            k,
            tuple(None if not child.children else walk(child) for child in node.children),
        )

    return walk(p)


def kary_word_parameters(
    word: Composition, arity: int | None = None
) -> tuple[int, int, int]:
    """Validate a marked-pair word and return its (k, n, i).

    Shape requirements (reported as "entry shape"): entries are 0 or a
    single value k (matching ``arity`` when given), the length is k(n+1)
    and exactly n entries equal k. Block requirement (reported as "block
    structure"): the fundamental decomposition has at least k unit blocks;
    i counts how many of the first k begin with k.
    """
    word = tuple(word)
    if not word:
        raise ValueError("entry shape: word is empty")
    if any(part < 0 for part in word):
        raise ValueError("entry shape: entries must be nonnegative")
    values = {part for part in word if part != 0}
    if len(values) > 1:
        raise ValueError(
            f"entry shape: entries must be 0 or the arity, found {sorted(values)}"
        )
    if values:
        (k,) = values
        if arity is not None and arity != k:
            raise ValueError(f"entry shape: word uses {k}, expected arity {arity}")
    else:
        k = arity if arity is not None else len(word)
    if k < 1:
        raise ValueError("entry shape: arity must be at least 1")
    if len(word) % k:
        raise ValueError(
            f"entry shape: length {len(word)} is not a multiple of arity {k}"
        )
    n = len(word) // k - 1
    k_count = sum(1 for part in word if part != 0)
    if k_count != n:
        raise ValueError(
            f"entry shape: expected {n} copies of {k} in a word of length {len(word)}, "
            f"found {k_count}"
        )
    units, _tail = fundamental_decomposition(word)
    if len(units) < k:
        raise ValueError(
            f"block structure: expected at least {k} unit blocks, found {len(units)}"
        )
    i = sum(1 for unit in units[:k] if unit[0] == k)
    return k, n, i


def kary_pair_to_composition(m: MarkedKaryTree) -> Composition:
    """Encode a marked k-ary tree as a 0/k word of length k(n+1).

    Completes the tree, then takes the cyclic outdegree word at the
    marked vertex's image (which is internal, with outdegree k). The
    result's shape and block structure are self-checked before returning.
    """
    t = m.tree
    if not 1 <= m.mark <= t.vertex_count:
        raise ValueError(f"mark {m.mark} out of range 1..{t.vertex_count}")
    completed, index_map = complete(t)
    word = bar_delta_encode(MarkedPlaneTree(completed, index_map[m.mark - 1]))
    k, n, i = kary_word_parameters(word, t.arity)
    marked_outdegree = kary_preorder_outdegrees(t)[m.mark - 1]
    if (k, n, i) != (t.arity, t.edge_count, marked_outdegree):
        raise AssertionError(
            f"encoded word parameters {(k, n, i)} disagree with the marked tree "
            f"{(t.arity, t.edge_count, marked_outdegree)}"
        )
    return word


def composition_to_kary_pair(
    word: Composition,
    k: int | None = None,
    n: int | None = None,
    i: int | None = None,
) -> MarkedKaryTree:
    """Decode a 0/k word back to its marked k-ary tree.

    Any of k, n, i may be supplied for cross-validation; they are all
    derivable from the word itself. Decoding runs the cyclic-word inverse
    at outdegree k (the marked vertex is internal in the completion) and
    then strips the completion leaves, transporting the mark through the
    preorder index map.
    """
    word = tuple(word)
    derived_k, derived_n, derived_i = kary_word_parameters(word, k)
    if n is not None and n != derived_n:
        raise ValueError(f"word encodes n={derived_n}, expected {n}")
    if i is not None and i != derived_i:
        raise ValueError(f"word encodes outdegree i={derived_i}, expected {i}")
    completed_marked = bar_delta_decode(word, derived_k)
    tree = uncomplete(completed_marked.tree, derived_k)
    _, index_map = complete(tree)
    try:
        mark = index_map.index(completed_marked.mark) + 1
    except ValueError:
        raise AssertionError(
            f"decoded mark {completed_marked.mark} does not land on an internal vertex"
        ) from None
    return MarkedKaryTree(tree, mark)


def phi(
    word: Composition, arity: int | None = None, edges: int | None = None
) -> "SubsetPair":
    """Compress a marked-pair word to its subset pair (X, Y).

    X collects the positions among the first k unit blocks that begin
    with k. Deleting the first entry of each of those k blocks leaves a
    word beta of length kn; Y collects the 1-based positions of the k
    entries remaining in beta.
    """
    word = tuple(word)
    k, n, i = kary_word_parameters(word, arity)
    if edges is not None and edges != n:
        raise ValueError(f"word encodes n={n}, expected {edges}")
    units, tail = fundamental_decomposition(word)
    x = frozenset(j + 1 for j in range(k) if units[j][0] == k)
    beta: list[int] = []
    for unit in units[:k]:
        beta.extend(unit[1:])
    for unit in units[k:]:
        beta.extend(unit)
    beta.extend(tail)
    y = frozenset(pos + 1 for pos, part in enumerate(beta) if part != 0)
    if len(beta) != k * n or len(x) != i or len(x) + len(y) != n:
        raise AssertionError(
            f"subset extraction out of balance for {word!r}: "
            f"|beta|={len(beta)}, |X|={len(x)}, |Y|={len(y)}"
        )
    return SubsetPair(k, n, x, y)


def phi_inverse(pair: "SubsetPair") -> Composition:
    """Rebuild the marked-pair word from its subset pair.

    Lays out beta (k at the positions in Y, 0 elsewhere), then inserts one
    leader per unit block, left to right: an inserted 0 is a block by
    itself, while an inserted k absorbs entries of beta until the block's
    running f-statistic first reaches -1. The remainder of beta is
    appended unchanged. The counting of zeros guarantees each absorption
    completes, and the result is self-checked against the expected shape.
    """
    k, n = pair.k, pair.n
    if k < 1 or n < 0:
        raise ValueError("subset pair needs k >= 1 and n >= 0")
    if not all(1 <= j <= k for j in pair.X):
        raise ValueError(f"X must be a subset of 1..{k}")
    if not all(1 <= j <= k * n for j in pair.Y):
        raise ValueError(f"Y must be a subset of 1..{k * n}")
    if len(pair.X) + len(pair.Y) != n:
        raise ValueError(
            f"|X| + |Y| must equal n={n}, got {len(pair.X)} + {len(pair.Y)}"
        )
    beta = [k if j in pair.Y else 0 for j in range(1, k * n + 1)]
    out: list[int] = []
    pos = 0
    for j in range(1, k + 1):
        if j in pair.X:
            out.append(k)
            f = k - 1
            while f >= 0:
                if pos >= len(beta):
                    raise AssertionError(
                        f"insertion ran out of entries for pair {pair!r}"
                    )
                part = beta[pos]
                pos += 1
                out.append(part)
                f += part - 1
        else:
            out.append(0)
    out.extend(beta[pos:])
    word = tuple(out)
    derived = kary_word_parameters(word, k)
    if derived != (k, n, len(pair.X)):
        raise AssertionError(
            f"rebuilt word has parameters {derived}, expected {(k, n, len(pair.X))}"
        )
    return word


def enumerate_kary_trees(k: int, n: int) -> Iterator[KaryTree]:
    """Yield every k-ary tree with n edges exactly once, deterministically.

    Order: by the bitmask of filled slots (slot 1 = low bit, ascending),
    then lexicographically by the split of the remaining edge budget, then
    recursively within each filled slot. Guarded on k*n.
    """
    if k < 1:
        raise ValueError("arity must be at least 1")
    if n < 0:
        raise ValueError("edge count must be nonnegative")
    check_guard("k-ary tree enumeration", k * n, KARY_EDGE_LIMIT)
    cache: dict[int, list[KaryTree]] = {}

    def trees(budget: int) -> list[KaryTree]:
        if budget in cache:
            return cache[budget]
        result: list[KaryTree] = []
        if budget == 0:
            result.append(kary_leaf(k))
        else:
            for mask in range(1, 1 << k):
                filled = [j for j in range(k) if mask >> j & 1]
                if len(filled) > budget:
                    continue
                for parts in enumerate_compositions(budget - len(filled), len(filled)):
                    for combo in product(*(trees(b) for b in parts)):
                        slots: list[KaryTree | None] = [None] * k
                        for slot_index, sub in zip(filled, combo):
                            slots[slot_index] = sub
                        result.append(KaryTree(k, tuple(slots)))
        cache[budget] = result
        return result

    yield from trees(n)


def count_kary_outdegree_bruteforce(k: int, n: int, i: int) -> int:
    """Oracle for the closed-form count: sum outdegree-i vertices over all
    enumerated k-ary trees with n edges."""
    if n < 1:
        raise ValueError("edge count must be at least 1")
    if i < 0:
        raise ValueError("outdegree must be nonnegative")
    total = 0
    for t in enumerate_kary_trees(k, n):
        total += sum(1 for d in kary_preorder_outdegrees(t) if d == i)
    return total


@dataclass(frozen=True)
class SubsetPair:
    """Subsets (X, Y) encoding a marked k-ary tree: X within 1..k, Y within 1..kn."""

    k: int
    n: int
    X: frozenset[int]
    Y: frozenset[int]

    def to_json(self) -> str:
        return json.dumps(
            {"k": self.k, "n": self.n, "X": sorted(self.X), "Y": sorted(self.Y)},
            separators=(",", ":"),
        )

    @classmethod
    def from_json(cls, text: str) -> "SubsetPair":
        try:
            doc = json.loads(text)
        except json.JSONDecodeError as exc:
            raise ValueError(f"invalid subset-pair JSON: {exc}") from None
        if not isinstance(doc, dict) or set(doc) != {"k", "n", "X", "Y"}:
            raise ValueError('subset-pair JSON must have keys "k", "n", "X", "Y"')
        k, n = doc["k"], doc["n"]
        if not isinstance(k, int) or not isinstance(n, int):
            raise ValueError("k and n must be integers")
        for key in ("X", "Y"):
            if not isinstance(doc[key], list) or not all(
                isinstance(v, int) for v in doc[key]
            ):
                raise ValueError(f"{key} must be a list of integers")
        return cls(k, n, frozenset(doc["X"]), frozenset(doc["Y"]))


def format_kary_tree(t: KaryTree) -> str:
    """Recursive slot form: ``( s_1 ... s_k )`` with ``.`` for an empty slot."""
    parts = [
        "." if sub is None else format_kary_tree(sub) for sub in t.slots
    ]
    return "( " + " ".join(parts) + " )"


def parse_kary_tree(text: str, arity: int | None = None) -> KaryTree:
    """Inverse of :func:`format_kary_tree`; whitespace is ignored.

    The arity is inferred from the groups and must be consistent
    throughout (and match ``arity`` when given).
    """
    frames: list[list[KaryTree | None]] = []
    root: KaryTree | None = None
    k = arity
    for ch in text:
        if ch.isspace():
            continue
        if ch == "(":
            frames.append([])
        elif ch == ".":
            if not frames:
                raise ValueError("'.' outside any group")
            frames[-1].append(None)
        elif ch == ")":
            if not frames:
                raise ValueError(f"unbalanced ')' in {text!r}")
            entries = frames.pop()
            if k is None:
                k = len(entries)
            elif len(entries) != k:
                raise ValueError(
                    f"group with {len(entries)} slots in arity-{k} tree"
                )
            node = KaryTree(k, tuple(entries))
            if frames:
                frames[-1].append(node)
            elif root is None:
                root = node
            else:
                raise ValueError("more than one root group")
        else:
            raise ValueError(f"unexpected character {ch!r} in k-ary tree text")
    if frames:
        raise ValueError(f"unbalanced '(' in {text!r}")
    if root is None:
        raise ValueError("empty k-ary tree text")
    return root


def format_marked_kary_tree(m: MarkedKaryTree) -> str:
    return f"{format_kary_tree(m.tree)}@{m.mark}"


def parse_marked_kary_tree(text: str, arity: int | None = None) -> MarkedKaryTree:
    tree_part, sep, mark_part = text.rpartition("@")
    if not sep:
        raise ValueError(f"marked tree must end with '@<mark>': {text!r}")
    try:
        mark = int(mark_part)
    except ValueError:
        raise ValueError(f"mark must be an integer: {mark_part!r}") from None
    tree = parse_kary_tree(tree_part, arity)
    if not 1 <= mark <= tree.vertex_count:
        raise ValueError(f"mark {mark} out of range 1..{tree.vertex_count}")
    return MarkedKaryTree(tree, mark)
