"""The Chebyshev-type sequence p_r and its numeric root data.

p_0 = p_1 = 1 and p_{r+1} = p_r - x * p_{r-1}, so deg p_r = floor(r/2)
and every constant term is 1.  Coefficients double as matching counts of
path graphs: [x^j] p_r = (-1)^j * C(r-j, j).

Roots of p_m come from the closed trigonometric form and are used for
diagnostics only; exact coefficient arithmetic never touches them.
"""

from __future__ import annotations

import math
import sys
from dataclasses import dataclass
from functools import lru_cache
from typing import Iterable

from .series import IntPolynomial, ONE, X, poly_mul

__all__ = [
    "Partition",
    "RootData",
    "p_poly",
    "p_coeff_closed",
    "p_partition",
    "roots_of_pm",
    "p_at_rho1",
]


@dataclass(init=False, eq=True, frozen=True)
class Partition:
    """Nonincreasing tuple of positive integer parts; may be empty.

    >>> Partition([3, 2, 2]).size
    7
    >>> Partition([]).length
    0
    """

    parts: tuple[int, ...]

    def __init__(self, parts: Iterable[int] = ()) -> None:
        ps = tuple(int(p) for p in parts)
        for p in ps:
            if p <= 0:
                raise ValueError(f"parts must be positive, got {p}")
        if any(ps[i] < ps[i + 1] for i in range(len(ps) - 1)):
            raise ValueError(f"parts must be nonincreasing, got {ps}")
        object.__setattr__(self, "parts", ps)

    @property
    def size(self) -> int:
        return sum(self.parts)

    @property
    def length(self) -> int:
        return len(self.parts)

    def __iter__(self):
        return iter(self.parts)


_PS: list[IntPolynomial] = [ONE, ONE]


def p_poly(r: int) -> IntPolynomial:
    """p_r computed by the recurrence, cached.

    >>> p_poly(2).coeffs
    (1, -1)
    >>> p_poly(4).coeffs
    (1, -3, 1)
    """
    if r < 0:
        raise ValueError("index must be nonnegative")
    while len(_PS) <= r:
        _PS.append(_PS[-1] - X * _PS[-2])
    return _PS[r]


def p_coeff_closed(r: int, j: int) -> int:
    """[x^j] p_r by the closed form (-1)^j * C(r-j, j).

    The binomial C(A, B) is taken as 0 unless 0 <= B <= A, so this
    vanishes for j > floor(r/2).
    """
    if j < 0 or r - j < j:
        return 0
    return (-1) ** j * math.comb(r - j, j)


def p_partition(xi: Partition) -> IntPolynomial:
    """Product of p over the parts; the empty partition gives 1."""
    acc = ONE
    for part in xi:
        acc = poly_mul(acc, p_poly(part))
    return acc


def _horner(coeffs: tuple[int, ...], x: float) -> float:
    acc = 0.0
    for c in reversed(coeffs):
        acc = acc * x + c
    return acc


def _residual_tol(coeffs: tuple[int, ...], x: float) -> float:
    # Attainability floor for the residual of a double-precision root:
    # evaluation noise plus one-ulp argument uncertainty both scale with
    # sum |c_i| |x|^i.  The bound exceeds the 1e-9 target only at the
    # largest roots for m = 10 and m = 12; of those, m = 12 is the one
    # where no double can actually reach 1e-9 (best is about 1.04e-9).
    cond = _horner(tuple(abs(c) for c in coeffs), abs(x))
    return max(1.0e-9, 16.0 * sys.float_info.epsilon * cond)


@dataclass(frozen=True)
class RootData:
    """Roots of p_m, increasing, with the angle step theta = pi/(m+1)."""

    m: int
    roots: tuple[float, ...]
    theta: float

    def __post_init__(self) -> None:
        if self.m < 2:
            raise ValueError("root data needs m >= 2")
        if len(self.roots) != self.m // 2:
            raise ValueError(
                f"expected {self.m // 2} roots for m={self.m}, got {len(self.roots)}"
            )
        prev = 0.0
        for rho in self.roots:
            if not rho > prev:
                raise ValueError("roots must be positive and strictly increasing")
            prev = rho
        pm = p_poly(self.m).coeffs
        for rho in self.roots:
            res = abs(_horner(pm, rho))
            if not res < _residual_tol(pm, rho):
                raise ValueError(
                    f"root residual {res:.3e} too large at m={self.m}, rho={rho!r}"
                )

    @property
    def rho1(self) -> float:
        return self.roots[0]


@lru_cache(maxsize=None)
def roots_of_pm(m: int) -> RootData:
    """All floor(m/2) roots 1/(4 cos^2(j pi/(m+1))), j = 1..floor(m/2).

    >>> abs(roots_of_pm(2).roots[0] - 1.0) < 1e-12
    True
    >>> abs(roots_of_pm(3).roots[0] - 0.5) < 1e-12
    True
    """
    if m < 2:
        raise ValueError("p_0 and p_1 are constant; roots need m >= 2")
    theta = math.pi / (m + 1)
    roots = tuple(1.0 / (4.0 * math.cos(j * theta) ** 2) for j in range(1, m // 2 + 1))
    return RootData(m, roots, theta)


def p_at_rho1(r: int, m: int) -> float:
    """p_r evaluated at the smallest root of p_m; positive for 0 <= r < m."""
    if not 0 <= r < m:
        raise ValueError(f"need 0 <= r < m, got r={r}, m={m}")
    return _horner(p_poly(r).coeffs, roots_of_pm(m).rho1)
