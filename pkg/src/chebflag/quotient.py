"""The normalized quotient F = prod p_alpha / p_m^k, its exact expansion,
the eventual-positivity trichotomy, the signed coefficient formula, and
multiplicity extraction.

Given a partition xi with parts <= m and a weight mu written as
mu = mu1*m + mu0, the quotient p_{m-mu0-1} * p_xi / p_m^(mu1+1) cancels
one p_m for every part equal to m.  What is left is tracked exactly:
numerator indices alphas (all < m) over p_m^k with k = mu1 + 1 - t.
Negative k means surplus cancellation and the quotient is a polynomial.
"""

from __future__ import annotations

import math
from dataclasses import dataclass, field
from functools import lru_cache

from .chebpoly import Partition, p_poly
from .pathcomb import full_height_count
from .series import (
    IntPolynomial,
    TruncatedSeries,
    coeff,
    poly_mul,
    poly_pow,
    series_div_unit,
)

__all__ = [
    "QuotientSpec",
    "PositivityClass",
    "CoefficientReport",
    "make_spec",
    "expand",
    "signed_coefficient",
    "classify",
    "positivity_threshold",
    "default_order",
    "multiplicity",
]


@dataclass(frozen=True)
class QuotientSpec:
    """Bookkeeping for F: Euclidean data of mu, the count t of parts equal
    to m, the net denominator exponent k, and the numerator indices."""

    xi: Partition
    m: int
    mu: int
    mu1: int
    mu0: int
    t: int
    k: int
    alphas: tuple[int, ...]

    def __post_init__(self) -> None:
        if self.m < 1:
            raise ValueError("level m must be >= 1")
        if self.mu < 0:
            raise ValueError("mu must be nonnegative")
        if not (0 <= self.mu0 < self.m) or self.mu != self.mu1 * self.m + self.mu0:
            raise ValueError("broken Euclidean data for mu")
        if any(p > self.m for p in self.xi):
            raise ValueError("every part must be <= m")
        if self.t != sum(1 for p in self.xi if p == self.m):
            raise ValueError("t must count the parts equal to m")
        if self.k != self.mu1 + 1 - self.t:
            raise ValueError("k must equal mu1 + 1 - t")
        expected = (self.m - self.mu0 - 1,) + tuple(p for p in self.xi if p < self.m)
        if self.alphas != expected:
            raise ValueError(f"alphas must be {expected}, got {self.alphas}")
        if any(not 0 <= a <= self.m - 1 for a in self.alphas):
            raise ValueError("numerator indices must lie in [0, m-1]")

    def numerator(self) -> IntPolynomial:
        acc = IntPolynomial((1,))
        for a in self.alphas:
            acc = poly_mul(acc, p_poly(a))
        return acc


@dataclass(frozen=True)
class PositivityClass:
    """One of constant_one, polynomial (with a degree bound), or
    eventually_positive (optionally with an empirical threshold r0)."""

    kind: str
    degree_bound: int | None = None
    threshold: int | None = None

    _KINDS = ("constant_one", "polynomial", "eventually_positive")

    def __post_init__(self) -> None:
        if self.kind not in self._KINDS:
            raise ValueError(f"kind must be one of {self._KINDS}")
        if (self.kind == "polynomial") != (self.degree_bound is not None):
            raise ValueError("degree_bound goes with the polynomial kind only")
        if self.threshold is not None and self.kind != "eventually_positive":
            raise ValueError("threshold goes with eventually_positive only")

    @classmethod
    def constant_one(cls) -> "PositivityClass":
        return cls("constant_one")

    @classmethod
    def polynomial(cls, degree_bound: int) -> "PositivityClass":
        return cls("polynomial", degree_bound=degree_bound)

    @classmethod
    def eventually_positive(cls, threshold: int | None = None) -> "PositivityClass":
        return cls("eventually_positive", threshold=threshold)


@dataclass(frozen=True)
class CoefficientReport:
    """Exact coefficients plus a record of which routes produced them.

    Routes map a route name (division, signed, product) to the full
    coefficient vector that route computed; all must agree.
    """

    spec: QuotientSpec
    order: int
    coeffs: TruncatedSeries
    routes: dict[str, tuple[int, ...]] = field(default_factory=dict)

    def __post_init__(self) -> None:
        if self.coeffs.order != self.order:
            raise ValueError("series order does not match report order")
        for name, vec in self.routes.items():
            if tuple(vec) != self.coeffs.coeffs:
                raise ValueError(
                    f"route {name!r} disagrees with the reported coefficients"
                )


def make_spec(xi: Partition, m: int, mu: int) -> QuotientSpec:
    """Normalize (xi, m, mu) into a QuotientSpec.

    >>> sp = make_spec(Partition([2, 2]), 2, 0)
    >>> (sp.mu1, sp.mu0, sp.t, sp.k, sp.alphas)
    (0, 0, 2, -1, (1,))
    >>> sp = make_spec(Partition([1]), 2, 1)
    >>> (sp.mu1, sp.mu0, sp.t, sp.k, sp.alphas)
    (0, 1, 0, 1, (0, 1))
    """
    if m < 1:
        raise ValueError("level m must be >= 1")
    if mu < 0:
        raise ValueError("mu must be nonnegative")
    if any(p > m for p in xi):
        big = max(xi.parts)
        raise ValueError(f"part {big} exceeds the level m={m}")
    mu1, mu0 = divmod(mu, m)
    t = sum(1 for p in xi if p == m)
    alphas = (m - mu0 - 1,) + tuple(p for p in xi if p < m)
    return QuotientSpec(xi, m, mu, mu1, mu0, t, mu1 + 1 - t, alphas)


def expand(spec: QuotientSpec, order: int) -> CoefficientReport:
    """Exact coefficients a_0..a_order of F.

    For k <= 0 the denominator cancels completely and F is the polynomial
    prod p_alpha * p_m^(-k), padded with zeros; otherwise one truncated
    division by p_m^k does it.
    """
    if order < 0:
        raise ValueError("order must be nonnegative")
    num = spec.numerator()
    if spec.k <= 0:
        poly = poly_mul(num, poly_pow(p_poly(spec.m), -spec.k))
        series = TruncatedSeries([poly[i] for i in range(order + 1)], order)
    else:
        series = series_div_unit(num, poly_pow(p_poly(spec.m), spec.k), order)
    return CoefficientReport(spec, order, series, {"division": series.coeffs})


@lru_cache(maxsize=None)
def _b_convolved(m: int, slots: int, total: int) -> int:
    # sum over u_1 + ... + u_slots = total of prod B_m(u_nu)
    if slots == 0:
        return 1 if total == 0 else 0
    return sum(
        full_height_count(m, u) * _b_convolved(m, slots - 1, total - u)
        for u in range(total + 1)
    )


def signed_coefficient(spec: QuotientSpec, r: int) -> int:
    """a_r by the signed tuple count: sum over j_0..j_L, u_1..u_k with
    sum r of (-1)^(sum j) * prod C(alpha_i - j_i, j_i) * prod B_m(u_nu),
    the B product read as 1 when k = 0.

    Nested bounded loops; each j_i stops at floor(alpha_i / 2) where the
    binomial dies.  Only defined for k >= 0.
    """
    if spec.k < 0:
        raise ValueError("signed formula requires k >= 0; expand instead")
    if r < 0:
        raise ValueError("coefficient index must be nonnegative")
    alphas = spec.alphas
    m, k = spec.m, spec.k
    total = 0

    def go(i: int, rem: int, weight: int) -> None:
        nonlocal total
        if i == len(alphas):
            total += weight * _b_convolved(m, k, rem)
            return
        a = alphas[i]
        for j in range(min(a // 2, rem) + 1):
            w = math.comb(a - j, j)
            go(i + 1, rem - j, weight * w if j % 2 == 0 else -weight * w)

    go(0, r, 1)
    return total


def classify(spec: QuotientSpec) -> PositivityClass:
    """The trichotomy: m=1 gives the constant 1; t >= mu1+1 makes F a
    polynomial with an explicit degree bound; otherwise coefficients are
    eventually strictly positive (simple growth from the pole at rho_1)."""
    if spec.m == 1:
        return PositivityClass.constant_one()
    if spec.t >= spec.mu1 + 1:
        bound = (sum(spec.alphas) + (spec.t - spec.mu1 - 1) * spec.m) // 2
        return PositivityClass.polynomial(bound)
    return PositivityClass.eventually_positive()


def positivity_threshold(spec: QuotientSpec, horizon: int) -> int | None:
    """Smallest r0 <= horizon with a_r > 0 for all r0 <= r <= horizon, or
    None when even a_horizon fails.  Empirical evidence, not a proof."""
    pc = classify(spec)
    if pc.kind != "eventually_positive":
        raise ValueError("threshold search applies to eventually positive quotients")
    if horizon < 0:
        raise ValueError("horizon must be nonnegative")
    cs = expand(spec, horizon).coeffs.coeffs
    r0 = horizon + 1
    for r in range(horizon, -1, -1):
        if cs[r] > 0:
            r0 = r
        else:
            break
    return r0 if r0 <= horizon else None


def default_order(spec: QuotientSpec) -> int:
    """Heuristic sweep order: past the polynomial degree bound and deep
    enough that pole growth dominates.  Recorded as a heuristic; there is
    no effective bound for where positivity must set in."""
    bound = (sum(spec.alphas) + max(-spec.k, 0) * spec.m) // 2
    return max(bound, 4 * spec.m * (max(spec.k, 0) + 1) + 40)


def multiplicity(xi: Partition, m: int, n: int) -> int:
    """The flag multiplicity: coefficient (|xi| - n)/2 of F built from
    (xi, m, n), zero when n < 0 or |xi| - n is negative or odd.

    >>> multiplicity(Partition([2]), 2, 2)
    1
    >>> multiplicity(Partition([1, 1]), 2, 0)
    1
    >>> multiplicity(Partition([2]), 2, 1)
    0
    """
    if m < 1:
        raise ValueError("level m must be >= 1")
    if xi.length and xi.parts[0] > m:
        raise ValueError(f"part {xi.parts[0]} exceeds the level m={m}")
    if n < 0:
        return 0
    gap = xi.size - n
    if gap < 0 or gap % 2:
        return 0
    idx = gap // 2
    return coeff(expand(make_spec(xi, m, n), idx).coeffs, idx)
