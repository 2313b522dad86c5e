"""Compositions of nonnegative integers and their block structure.

A composition is a finite tuple of nonnegative integers. The statistic
f(a_1, ..., a_m) = sum(a_j - 1) drives everything here: a *unit*
composition keeps f >= 0 on every proper prefix and ends at exactly -1
(these are the preorder outdegree words of plane trees), while a
*positive* composition keeps f >= 0 on every prefix, the whole word
included. Every composition factors uniquely as a run of unit blocks
followed by a positive tail; :func:`fundamental_decomposition` computes
that factorization greedily.
"""

from __future__ import annotations

from typing import Iterable, Iterator, NamedTuple

Composition = tuple[int, ...]

__all__ = [
    "Composition",
    "FundamentalDecomposition",
    "as_composition",
    "f_statistic",
    "is_unit",
    "is_positive",
    "fundamental_decomposition",
    "format_composition",
    "parse_composition",
    "enumerate_compositions",
]


def as_composition(parts: Iterable[int]) -> Composition:
    """Normalize to a tuple, rejecting negative parts."""
    c = tuple(int(p) for p in parts)
    if any(p < 0 for p in c):
        raise ValueError("composition parts must be nonnegative")
    return c


def f_statistic(c: Composition) -> int:
    """sum of (part - 1) over the composition: sum(c) - len(c)."""
    return sum(c) - len(c)


def is_unit(c: Composition) -> bool:
    """True iff f stays >= 0 on proper prefixes and reaches -1 at the end."""
    if not c:
        return False
    f = 0
    for part in c[:-1]:
        f += part - 1
        if f < 0:
            return False
    return f + c[-1] - 1 == -1


def is_positive(c: Composition) -> bool:
    """True iff f stays >= 0 on every prefix (vacuously true when empty)."""
    f = 0
    for part in c:
        f += part - 1
        if f < 0:
            return False
    return True


class FundamentalDecomposition(NamedTuple):
    units: tuple[Composition, ...]
    tail: Composition

    def concat(self) -> Composition:
        flat: tuple[int, ...] = ()
        for unit in self.units:
            flat += unit
        return flat + self.tail


def fundamental_decomposition(c: Composition) -> FundamentalDecomposition:
    """Split a composition into unit blocks followed by a positive tail.

    Greedy single pass: each block ends at the first position where the
    running f hits -1 (f steps down by at most 1, so -1 is the first
    negative value it can take). What remains after the last cut never
    reaches -1, i.e. it is a positive tail, possibly empty. Concatenating
    the parts reproduces the input exactly.
    """
    units: list[Composition] = []
    start = 0
    f = 0
    for pos, part in enumerate(c):
        f += part - 1
        if f == -1:
            units.append(tuple(c[start : pos + 1]))
            start = pos + 1
            f = 0
    return FundamentalDecomposition(tuple(units), tuple(c[start:]))


def format_composition(c: Composition) -> str:
    """Render as comma-separated parts in parentheses, e.g. ``(3,2,0)``."""
    return "(" + ",".join(str(part) for part in c) + ")"


def parse_composition(text: str) -> Composition:
    """Inverse of :func:`format_composition`; tolerates spaces around parts."""
    stripped = text.strip()
    if not stripped.startswith("(") or not stripped.endswith(")"):
        raise ValueError(f"composition must be parenthesized: {text!r}")
    inner = stripped[1:-1].strip()
    if not inner:
        return ()
    try:
        parts = tuple(int(piece.strip()) for piece in inner.split(","))
    except ValueError:
        raise ValueError(f"composition parts must be integers: {text!r}") from None
    if any(p < 0 for p in parts):
        raise ValueError(f"composition parts must be nonnegative: {text!r}")
    return parts


def enumerate_compositions(total: int, length: int) -> Iterator[Composition]:
    """All compositions of ``total`` into exactly ``length`` parts, lexicographically."""
    if total < 0 or length < 0:
        raise ValueError("total and length must be nonnegative")

    def rec(remaining: int, slots: int) -> Iterator[Composition]:
        if slots == 0:
            if remaining == 0:
                yield ()
            return
        if slots == 1:
            yield (remaining,)
            return
        for first in range(remaining + 1):
            for rest in rec(remaining - first, slots - 1):
                yield (first,) + rest

    yield from rec(total, length)
