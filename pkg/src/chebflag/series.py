"""Exact polynomials and truncated power series over unbounded integers.

Coefficient vectors are little-endian: index equals degree.  Series
division is restricted to denominators with constant term 1, which keeps
every coefficient an exact integer (no rationals ever appear).
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Iterable


@dataclass(init=False, eq=True, frozen=True)
class IntPolynomial:
    """Polynomial with arbitrary-precision integer coefficients.

    Trailing zeros are trimmed on construction so equal polynomials
    compare equal.  The zero polynomial has an empty coefficient tuple
    and reports degree -1.

    >>> IntPolynomial([1, -1]).degree
    1
    >>> IntPolynomial([0, 0]) == IntPolynomial([])
    True
    >>> IntPolynomial([1, -3, 1])(2)
    -1
    """

    coeffs: tuple[int, ...]

    def __init__(self, coeffs: Iterable[int] = ()) -> None:
        cs = [int(c) for c in coeffs]
        while cs and cs[-1] == 0:
            cs.pop()
        object.__setattr__(self, "coeffs", tuple(cs))

    @property
    def degree(self) -> int:
        return len(self.coeffs) - 1

    def __bool__(self) -> bool:
        return bool(self.coeffs)

    def __getitem__(self, j: int) -> int:
        # coefficient of x^j, zero outside the stored range
        if 0 <= j < len(self.coeffs):
            return self.coeffs[j]
        return 0

    def __call__(self, x):
        """Evaluate by Horner's rule; exact for int and Fraction inputs."""
        acc = 0 * x
        for c in reversed(self.coeffs):
            acc = acc * x + c
        return acc

    def __add__(self, other: "IntPolynomial") -> "IntPolynomial":
        return poly_add(self, other)

    def __sub__(self, other: "IntPolynomial") -> "IntPolynomial":
        return poly_add(self, poly_scale(other, -1))

    def __mul__(self, other: "IntPolynomial") -> "IntPolynomial":
        return poly_mul(self, other)

    def __neg__(self) -> "IntPolynomial":
        return poly_scale(self, -1)


ZERO = IntPolynomial()
ONE = IntPolynomial((1,))
X = IntPolynomial((0, 1))


@dataclass(init=False, eq=True, frozen=True)
class TruncatedSeries:
    """Formal power series known exactly up to x^order.

    Stores order+1 integer coefficients; the tail beyond ``order`` is
    unknown, not zero, so indexing past it is an error rather than 0.
    """

    coeffs: tuple[int, ...]
    order: int

    def __init__(self, coeffs: Iterable[int], order: int | None = None) -> None:
        cs = tuple(int(c) for c in coeffs)
        if order is None:
            order = len(cs) - 1
        if order < 0:
            raise ValueError("truncation order must be nonnegative")
        if len(cs) != order + 1:
            raise ValueError(
                f"need exactly order+1 = {order + 1} coefficients, got {len(cs)}"
            )
        object.__setattr__(self, "coeffs", cs)
        object.__setattr__(self, "order", order)

    def truncate(self, new_order: int) -> "TruncatedSeries":
        if not 0 <= new_order <= self.order:
            raise ValueError(f"cannot extend truncation {self.order} to {new_order}")
        return TruncatedSeries(self.coeffs[: new_order + 1], new_order)


def poly_add(p: IntPolynomial, q: IntPolynomial) -> IntPolynomial:
    """Coefficientwise sum.

    >>> poly_add(IntPolynomial([1, -1]), IntPolynomial([0, 1]))
    IntPolynomial(coeffs=(1,))
    """
    n = max(len(p.coeffs), len(q.coeffs))
    return IntPolynomial(p[i] + q[i] for i in range(n))


def poly_mul(p: IntPolynomial, q: IntPolynomial) -> IntPolynomial:
    """Convolution product.

    >>> poly_mul(IntPolynomial([1, -2]), IntPolynomial([1, -1])).coeffs
    (1, -3, 2)
    """
    if not p.coeffs or not q.coeffs:
        return ZERO
    out = [0] * (len(p.coeffs) + len(q.coeffs) - 1)
    for i, a in enumerate(p.coeffs):
        if a == 0:
            continue
        for j, b in enumerate(q.coeffs):
            out[i + j] += a * b
    return IntPolynomial(out)


def poly_scale(p: IntPolynomial, c: int) -> IntPolynomial:
    return IntPolynomial(c * a for a in p.coeffs)


def poly_pow(p: IntPolynomial, e: int) -> IntPolynomial:
    if e < 0:
        raise ValueError("negative exponent")
    acc = ONE
    for _ in range(e):
        acc = poly_mul(acc, p)
    return acc


def series_div_unit(
    num: IntPolynomial, den: IntPolynomial, order: int
) -> TruncatedSeries:
    """Expand num/den as a power series through x^order.

    The denominator must have constant term exactly 1; that makes the
    quotient's coefficients integers and the recurrence below exact:

        s[n] = num[n] - sum(den[i] * s[n-i] for i >= 1)

    >>> series_div_unit(ONE, IntPolynomial([1, -1]), 4).coeffs
    (1, 1, 1, 1, 1)
    >>> series_div_unit(ONE, IntPolynomial([1, -2]), 3).coeffs
    (1, 2, 4, 8)
    """
    if order < 0:
        raise ValueError("truncation order must be nonnegative")
    if den[0] != 1:
        raise ValueError(
            f"denominator constant term must be 1, got {den[0]}"
        )
    dden = den.degree
    out = [0] * (order + 1)
    for n in range(order + 1):
        acc = num[n]
        for i in range(1, min(n, dden) + 1):
            acc -= den.coeffs[i] * out[n - i]
        out[n] = acc
    return TruncatedSeries(out, order)


def coeff(s: TruncatedSeries, j: int) -> int:
    """Coefficient of x^j; zero for j < 0, error beyond the truncation.

    >>> coeff(TruncatedSeries([1, 2, 4]), -1)
    0
    >>> coeff(TruncatedSeries([1, 2, 4]), 2)
    4
    """
    if j < 0:
        return 0
    if j > s.order:
        raise ValueError(
            f"coefficient {j} beyond truncation order {s.order}; re-expand"
        )
    return s.coeffs[j]
