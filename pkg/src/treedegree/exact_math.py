"""Closed-form vertex counts for plane and k-ary trees, in exact integers.

Every count is a plain Python ``int`` (arbitrary precision), so nothing
overflows and no floating point is involved. Binomial coefficients follow
the vanishing convention C(n, m) = 0 for m < 0, n < 0 or m > n; the finite
sums below rely on that convention to terminate.

Divisions only appear inside identities that are exact over the integers;
each one is performed by :func:`exact_div`, which raises instead of
rounding, so an algebra mistake fails loudly rather than silently.
"""

from __future__ import annotations

import math
from typing import Iterator, Sequence

from ._limits import SEQUENCE_LIMIT, check_guard

__all__ = [
    "exact_div",
    "binomial",
    "multinomial",
    "catalan",
    "count_plane_outdegree",
    "count_kary_outdegree",
    "count_plane_degree",
    "fine_number",
    "count_odd_outdegree",
    "verify_outdegree_sequence_identity",
]


def exact_div(numerator: int, denominator: int, label: str = "quotient") -> int:
    """Divide two integers, raising if the division is not exact."""
    quotient, remainder = divmod(numerator, denominator)
    if remainder:
        raise AssertionError(
            f"{label}: {numerator} is not divisible by {denominator}"
        )
    return quotient


def binomial(n: int, m: int) -> int:
    """C(n, m), with value 0 whenever m < 0, n < 0 or m > n."""
    if m < 0 or n < 0 or m > n:
        return 0
    return math.comb(n, m)


def multinomial(n: int, parts: Sequence[int]) -> int:
    """n! / (parts[0]! * parts[1]! * ...) if the parts sum to n, else 0."""
    if any(p < 0 for p in parts):
        raise ValueError("multinomial parts must be nonnegative")
    if sum(parts) != n:
        return 0
    result = 1
    consumed = 0
    for p in parts:
        consumed += p
        result *= math.comb(consumed, p)
    return result


def catalan(n: int) -> int:
    """Number of plane trees with n edges: C(2n, n) / (n + 1)."""
    if n < 0:
        raise ValueError("catalan index must be nonnegative")
    return exact_div(math.comb(2 * n, n), n + 1, "catalan")


def count_plane_outdegree(n: int, i: int) -> int:
    """Total number of outdegree-i vertices over all plane trees with n edges.

    Equals C(2n - i - 1, n - 1); in particular 0 once i > n.
    """
    if n < 1:
        raise ValueError("edge count must be at least 1")
    if i < 0:
        raise ValueError("outdegree must be nonnegative")
    return binomial(2 * n - i - 1, n - 1)


def count_kary_outdegree(n: int, k: int, i: int) -> int:
    """Total number of outdegree-i vertices over all k-ary trees with n edges.

    Equals C(k, i) * C(kn, n - i); vanishes once i > k or i > n.
    """
    if n < 1 or k < 1:
        raise ValueError("edge count and arity must be at least 1")
    if i < 0:
        raise ValueError("outdegree must be nonnegative")
    return binomial(k, i) * binomial(k * n, n - i)


def count_plane_degree(n: int, i: int) -> int:
    """Total number of degree-i vertices over all plane trees with n edges.

    Degree counts adjacent vertices: at the root it equals the outdegree,
    elsewhere outdegree + 1. The count is exactly twice the outdegree
    count: 2 * C(2n - i - 1, n - 1).
    """
    if n < 1:
        raise ValueError("edge count must be at least 1")
    if i < 1:
        raise ValueError("degree must be at least 1")
    return 2 * binomial(2 * n - i - 1, n - 1)


def fine_number(n: int) -> int:
    """Fine number F_n, normalized so that F_0 = 1, F_1 = 0, F_2 = 1, F_3 = 2.

    Computed as 3 * sum_{j >= 0} C(2n - 2j, n) - 2 * C(2n + 1, n); the sum
    terminates once 2n - 2j < n. This indexing is shifted relative to some
    references, which start the sequence 1, 1, 0, 2, 6, ...: here F_{n-1}
    pairs with plane trees that have n edges (see
    :func:`count_odd_outdegree`).
    """
    if n < 0:
        raise ValueError("fine number index must be nonnegative")
    tail_sum = sum(binomial(2 * n - 2 * j, n) for j in range(n // 2 + 1))
    value = 3 * tail_sum - 2 * binomial(2 * n + 1, n)
    if value < 0:
        raise AssertionError(f"fine number F_{n} came out negative: {value}")
    return value


def count_odd_outdegree(n: int) -> int:
    """Total number of odd-outdegree vertices over all plane trees with n edges.

    Computed as the sum of :func:`count_plane_outdegree` over odd i, then
    cross-checked against (2*C(2n-1, n) + F_{n-1}) / 3, which must agree
    exactly (the numerator is always divisible by 3). A failure of either
    check means the formulas disagree and raises AssertionError.
    """
    if n < 1:
        raise ValueError("edge count must be at least 1")
    total = sum(count_plane_outdegree(n, i) for i in range(1, n + 1, 2))
    cross = exact_div(
        2 * binomial(2 * n - 1, n) + fine_number(n - 1), 3, "odd-outdegree cross-check"
    )
    if total != cross:
        raise AssertionError(
            f"odd-outdegree mismatch at n={n}: row sum {total} != {cross}"
        )
    return total


def _outdegree_type_vectors(n: int) -> Iterator[tuple[int, ...]]:
    # All (r_0, ..., r_n) with sum r_j = n + 1 and sum j*r_j = n. Choosing
    # r_n, ..., r_1 first fixes the weighted sum; r_0 takes up the slack
    # and is automatically >= 1 because sum_{j>=1} r_j <= n.
    vec = [0] * (n + 1)

    def place(j: int, weight: int, used: int) -> Iterator[tuple[int, ...]]:
        if j == 0:
            if weight == 0:
                vec[0] = (n + 1) - used
                yield tuple(vec)
                vec[0] = 0
            return
        for r in range(weight // j + 1):
            vec[j] = r
            yield from place(j - 1, weight - j * r, used + r)
        vec[j] = 0

    yield from place(n, n, 0)


def verify_outdegree_sequence_identity(n: int, i: int) -> tuple[int, int]:
    """Check the outdegree-type identity for cell (n, i) and return both sides.

    The left side sums r_i * multinomial(n+1; r_0, ..., r_n) / (n+1) over
    all outdegree type vectors of n-edge plane trees (each division is
    exact and asserted); the right side is C(2n - i - 1, n - 1). The two
    must agree; a mismatch raises AssertionError.
    """
    if n < 1:
        raise ValueError("edge count must be at least 1")
    if i < 0:
        raise ValueError("outdegree must be nonnegative")
    check_guard("outdegree-type enumeration", n, SEQUENCE_LIMIT)
    lhs = 0
    for vec in _outdegree_type_vectors(n):
        r_i = vec[i] if i <= n else 0
        if r_i:
            lhs += exact_div(
                r_i * multinomial(n + 1, vec), n + 1, "outdegree-type term"
            )
    rhs = count_plane_outdegree(n, i)
    if lhs != rhs:
        raise AssertionError(
            f"outdegree-type identity fails at n={n}, i={i}: {lhs} != {rhs}"
        )
    return lhs, rhs
