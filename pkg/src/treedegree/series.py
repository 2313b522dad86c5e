"""Truncated power series with exact integer coefficients.

The generating function C(z) of plane trees satisfies C = 1 + z*C^2 and
the k-ary analogue B_k satisfies B_k = (1 + z*B_k)^k; both are computed
here coefficient by coefficient from their defining equations, with no
rationals and no rounding. The derivative-at-1 series of the bivariate
vertex-marking generating functions reduce to shifted powers of C and B_k:

    sum_{m >= 0} z^(m+i) * C^(2m+i)                           (plane, outdegree i)
    C(k,i) * sum_{r >= 0} (k-1)^r * (z^(i+r) B_k^(i+r)
                                     + z^(i+r+1) B_k^(i+r+1))  (k-ary, outdegree i)

Their coefficients are asserted against the closed-form counts, which
makes each construction a machine check of the corresponding identity.
Power-coefficient laws used along the way:

    [z^n] C^l   = l/(2n+l) * C(2n+l, n)
    [z^n] B_k^l = l/(n+l)  * C(k(n+l), n)

The second is the corrected form; the naive variant l/n * C(kn, n) is
wrong already at k=2, n=2, l=1 (see the tests).
"""

from __future__ import annotations

from typing import Iterable

from .exact_math import (
    binomial,
    count_kary_outdegree,
    count_plane_outdegree,
    exact_div,
)

__all__ = [
    "TruncatedSeries",
    "catalan_series",
    "kary_series",
    "verify_catalan_power_coeff",
    "verify_kary_power_coeff",
    "plane_derivative_series",
    "kary_derivative_series",
]


class TruncatedSeries:
    """Integer power series modulo z^(N+1), N fixed at construction.

    Arithmetic is exact and closed at one truncation order; combining
    series of different orders raises instead of silently re-truncating.
    Instances are immutable.
    """

    __slots__ = ("coefficients",)

    def __init__(self, coefficients: Iterable[int]):
        coeffs = tuple(int(c) for c in coefficients)
        if not coeffs:
            raise ValueError("a truncated series needs at least the constant term")
        object.__setattr__(self, "coefficients", coeffs)

    def __setattr__(self, name: str, value: object) -> None:
        raise AttributeError("TruncatedSeries is immutable")

    @property
    def order(self) -> int:
        return len(self.coefficients) - 1

    @classmethod
    def constant(cls, value: int, order: int) -> "TruncatedSeries":
        return cls((value,) + (0,) * order)

    def __getitem__(self, n: int) -> int:
        if not 0 <= n <= self.order:
            raise IndexError(f"coefficient {n} beyond truncation order {self.order}")
        return self.coefficients[n]

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, TruncatedSeries):
            return NotImplemented
        return self.coefficients == other.coefficients

    def __hash__(self) -> int:
        return hash(self.coefficients)

    def __repr__(self) -> str:
        return f"TruncatedSeries({list(self.coefficients)!r})"

    def _coerce(self, other: "TruncatedSeries | int") -> "TruncatedSeries":
        if isinstance(other, int):
            return TruncatedSeries.constant(other, self.order)
        if not isinstance(other, TruncatedSeries):
            raise TypeError(f"cannot combine TruncatedSeries with {type(other)!r}")
        if other.order != self.order:
            raise ValueError(
                f"truncation orders differ: {self.order} vs {other.order}"
            )
        return other

    def __add__(self, other: "TruncatedSeries | int") -> "TruncatedSeries":
        rhs = self._coerce(other)
        return TruncatedSeries(
            a + b for a, b in zip(self.coefficients, rhs.coefficients)
        )

    __radd__ = __add__

    def __sub__(self, other: "TruncatedSeries | int") -> "TruncatedSeries":
        rhs = self._coerce(other)
        return TruncatedSeries(
            a - b for a, b in zip(self.coefficients, rhs.coefficients)
        )

    def __rsub__(self, other: int) -> "TruncatedSeries":
        return self._coerce(other) - self

    def __mul__(self, other: "TruncatedSeries | int") -> "TruncatedSeries":
        if isinstance(other, int):
            return TruncatedSeries(other * c for c in self.coefficients)
        rhs = self._coerce(other)
        size = self.order + 1
        out = [0] * size
        for a_index, a in enumerate(self.coefficients):
            if a == 0:
                continue
            for b_index in range(size - a_index):
                b = rhs.coefficients[b_index]
                if b:
                    out[a_index + b_index] += a * b
        return TruncatedSeries(out)

    __rmul__ = __mul__

    def __pow__(self, exponent: int) -> "TruncatedSeries":
        if not isinstance(exponent, int) or exponent < 0:
            raise ValueError("exponent must be a nonnegative integer")
        result = TruncatedSeries.constant(1, self.order)
        base = self
        e = exponent
        while e:
            if e & 1:
                result = result * base
            e >>= 1
            if e:
                base = base * base
        return result

    def shift(self, m: int) -> "TruncatedSeries":
        """Multiply by z^m, truncating at the same order."""
        if m < 0:
            raise ValueError("shift must be nonnegative")
        size = self.order + 1
        if m >= size:
            return TruncatedSeries.constant(0, self.order)
        return TruncatedSeries((0,) * m + self.coefficients[: size - m])

    def truncate(self, new_order: int) -> "TruncatedSeries":
        """Deliberately drop to a lower truncation order."""
        if not 0 <= new_order <= self.order:
            raise ValueError(
                f"new order must lie in 0..{self.order}, got {new_order}"
            )
        return TruncatedSeries(self.coefficients[: new_order + 1])


def catalan_series(order: int) -> TruncatedSeries:
    """C(z) with C = 1 + z*C^2, via the convolution c_n = sum c_j c_{n-1-j}."""
    if order < 0:
        raise ValueError("order must be nonnegative")
    c = [0] * (order + 1)
    c[0] = 1
    for n in range(1, order + 1):
        c[n] = sum(c[j] * c[n - 1 - j] for j in range(n))
    return TruncatedSeries(c)


def kary_series(k: int, order: int) -> TruncatedSeries:
    """B_k(z) with B_k = (1 + z*B_k)^k and constant term 1.

    Coefficients are read off degree by degree: coefficient n of
    (1 + z*B)^k only involves coefficients of B below n.
    """
    if k < 1:
        raise ValueError("arity must be at least 1")
    if order < 0:
        raise ValueError("order must be nonnegative")
    b = [0] * (order + 1)
    b[0] = 1
    for n in range(1, order + 1):
        current = TruncatedSeries(b)
        b[n] = ((current.shift(1) + 1) ** k)[n]
    return TruncatedSeries(b)


def verify_catalan_power_coeff(n: int, l: int) -> tuple[int, int]:
    """Compare [z^n] C(z)^l with l/(2n+l) * C(2n+l, n); both returned.

    The two routes are independent: series convolution versus a single
    exact binomial evaluation. Disagreement raises AssertionError.
    """
    if l < 1:
        raise ValueError("power must be at least 1")
    if n < 0:
        raise ValueError("coefficient index must be nonnegative")
    series_value = (catalan_series(n) ** l)[n]
    closed_form = exact_div(
        l * binomial(2 * n + l, n), 2 * n + l, "catalan power coefficient"
    )
    if series_value != closed_form:
        raise AssertionError(
            f"[z^{n}] C^{l}: series {series_value} != closed form {closed_form}"
        )
    return series_value, closed_form


def verify_kary_power_coeff(k: int, n: int, l: int) -> tuple[int, int]:
    """Compare [z^n] B_k(z)^l with l/(n+l) * C(k(n+l), n); both returned.

    This is the corrected power-coefficient law (the naive l/n * C(kn, n)
    fails already at k=2, n=2, l=1). Disagreement raises AssertionError.
    """
    if k < 1 or l < 1:
        raise ValueError("arity and power must be at least 1")
    if n < 0:
        raise ValueError("coefficient index must be nonnegative")
    series_value = (kary_series(k, n) ** l)[n]
    closed_form = exact_div(
        l * binomial(k * (n + l), n), n + l, "k-ary power coefficient"
    )
    if series_value != closed_form:
        raise AssertionError(
            f"[z^{n}] B_{k}^{l}: series {series_value} != closed form {closed_form}"
        )
    return series_value, closed_form


def plane_derivative_series(i: int, order: int) -> TruncatedSeries:
    """Series whose coefficient n counts outdegree-i vertices over n-edge
    plane trees, built as sum_{m >= 0} z^(m+i) * C^(2m+i).

    Terms with m + i > order vanish below the truncation, so the sum is
    finite. Every coefficient 1..order is asserted equal to the closed
    form C(2n - i - 1, n - 1) before returning.
    """
    if i < 0:
        raise ValueError("outdegree must be nonnegative")
    if order < 0:
        raise ValueError("order must be nonnegative")
    acc = TruncatedSeries.constant(0, order)
    if i <= order:
        c = catalan_series(order)
        c_squared = c * c
        power = c**i
        for m in range(order - i + 1):
            acc = acc + power.shift(m + i)
            if m < order - i:
                power = power * c_squared
    for n in range(1, order + 1):
        expected = count_plane_outdegree(n, i)
        if acc[n] != expected:
            raise AssertionError(
                f"plane derivative series at i={i}: coefficient {n} is "
                f"{acc[n]}, closed form {expected}"
            )
    return acc


def kary_derivative_series(k: int, i: int, order: int) -> TruncatedSeries:
    """Series whose coefficient n counts outdegree-i vertices over n-edge
    k-ary trees, built as
    C(k,i) * sum_{r >= 0} (k-1)^r (z^(i+r) B_k^(i+r) + z^(i+r+1) B_k^(i+r+1)).

    Every coefficient 1..order is asserted equal to the closed form
    C(k, i) * C(kn, n - i) before returning.
    """
    if k < 1:
        raise ValueError("arity must be at least 1")
    if not 0 <= i <= k:
        raise ValueError(f"outdegree must lie in 0..{k}")
    if order < 0:
        raise ValueError("order must be nonnegative")
    acc = TruncatedSeries.constant(0, order)
    if i <= order:
        b = kary_series(k, order)
        power = b**i
        weight = 1
        for r in range(order - i + 1):
            power_next = power * b
            acc = acc + weight * (power.shift(i + r) + power_next.shift(i + r + 1))
            power = power_next
            weight *= k - 1
            if weight == 0:
                break
    acc = binomial(k, i) * acc
    for n in range(1, order + 1):
        expected = count_kary_outdegree(n, k, i)
        if acc[n] != expected:
            raise AssertionError(
                f"k-ary derivative series at k={k}, i={i}: coefficient {n} is "
                f"{acc[n]}, closed form {expected}"
            )
    return acc
