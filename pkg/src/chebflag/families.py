"""Unsigned product models: pair decompositions of the numerator, the
three explicit families (m^t, 1^s), (m^t, r, 1^s), (m^t, r_1..r_d, 1^s),
and the direct multiplicity formulas with their edge cases.

A pair decomposition writes prod p_alpha as prod p_a * p_b over k pairs
with a + b <= m - 1.  When one exists, coefficient r of F counts k-tuples
of constrained Dyck paths with total excess r, so every coefficient is
visibly nonnegative.
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import lru_cache

from .chebpoly import Partition, p_poly
from .pathcomb import DyckConstraint, dyck_count
from .quotient import QuotientSpec, expand, make_spec
from .series import IntPolynomial, coeff, poly_mul

__all__ = [
    "PairDecomposition",
    "FamilyQuery",
    "FamilyModel",
    "find_pair_decomposition",
    "product_model_coeff",
    "family_quotient",
    "family_multiplicity",
]


@dataclass(frozen=True)
class PairDecomposition:
    """k admissible pairs (a, b), each with a + b <= m - 1."""

    m: int
    pairs: tuple[tuple[int, int], ...]

    def __post_init__(self) -> None:
        if self.m < 1:
            raise ValueError("need m >= 1")
        for a, b in self.pairs:
            if not (0 <= a <= self.m - 1 and 0 <= b <= self.m - 1):
                raise ValueError(f"pair ({a}, {b}) outside [0, {self.m - 1}]")
            if a + b > self.m - 1:
                raise ValueError(f"pair ({a}, {b}) violates a + b <= m - 1")

    @property
    def k(self) -> int:
        return len(self.pairs)

    def product(self) -> IntPolynomial:
        acc = IntPolynomial((1,))
        for a, b in self.pairs:
            acc = poly_mul(acc, poly_mul(p_poly(a), p_poly(b)))
        return acc


def find_pair_decomposition(spec: QuotientSpec) -> PairDecomposition | None:
    """Search for a decomposition of the numerator indices into exactly
    spec.k admissible pairs.

    Works at the presentation level: indices >= 2 are grouped into pairs
    or left single, slots are padded with 0s (p_0 = p_1 = 1), and any
    candidate is confirmed by exact polynomial-product equality.  None
    means no grouping of the given index multiset fits; it does not rule
    out decompositions through nontrivial polynomial identities.
    """
    if spec.k <= 0:
        raise ValueError("pair decompositions need k >= 1")
    big = sorted((a for a in spec.alphas if a >= 2), reverse=True)
    limit = spec.m - 1
    k = spec.k

    def pack(
        items: tuple[int, ...], slots: int
    ) -> tuple[tuple[int, int], ...] | None:
        # group indices into at most `slots` groups of size <= 2, paired
        # sums capped by limit; the first index is either single or paired
        if not items:
            return ()
        if slots <= 0 or len(items) > 2 * slots:
            return None
        first, rest = items[0], items[1:]
        sub = pack(rest, slots - 1)
        if sub is not None:
            return ((first, 0),) + sub
        tried: set[int] = set()
        for i, other in enumerate(rest):
            if other in tried:
                continue
            tried.add(other)
            if first + other <= limit:
                sub = pack(rest[:i] + rest[i + 1 :], slots - 1)
                if sub is not None:
                    return ((first, other),) + sub
        return None

    grouped = pack(tuple(big), k)
    if grouped is None:
        return None
    pairs = grouped + ((0, 0),) * (k - len(grouped))
    dec = PairDecomposition(spec.m, pairs)
    if dec.product() != spec.numerator():
        return None
    return dec


def product_model_coeff(dec: PairDecomposition, r: int) -> int:
    """Number of k-tuples of constrained Dyck paths with total excess r:
    the convolution over the pairs of the per-pair counts D_m(a, b; u)."""
    if r < 0:
        raise ValueError("coefficient index must be nonnegative")
    vec = [1] + [0] * r
    for a, b in dec.pairs:
        counts = [dyck_count(DyckConstraint(dec.m, a, b, u)) for u in range(r + 1)]
        vec = [
            sum(vec[i] * counts[n - i] for i in range(n + 1)) for n in range(r + 1)
        ]
    return vec[r]


@dataclass(frozen=True)
class FamilyQuery:
    """A partition of the shape (m^t, middle, 1^s) plus an optional
    coefficient index N.

    kind "a" has no middle part, "b" has the single part r, "c" has parts
    rs.  Without N the weight is |xi| itself (generating-series mode);
    with N the weight is |xi| - 2N and the Euclidean division runs on
    base - 2N, where base = s, r + s, or sum(rs) + s.  q may then be
    negative, which forces the multiplicity to vanish.
    """

    kind: str
    m: int
    t: int
    s: int
    r: int | None = None
    rs: tuple[int, ...] = ()
    N: int | None = None

    def __post_init__(self) -> None:
        if self.kind not in ("a", "b", "c"):
            raise ValueError("kind must be one of a, b, c")
        if self.m < 1:
            raise ValueError("need m >= 1")
        if self.t < 0 or self.s < 0:
            raise ValueError("t and s must be nonnegative")
        if self.kind == "a":
            if self.r is not None or self.rs:
                raise ValueError("kind a takes no middle parts")
        elif self.kind == "b":
            if self.r is None or self.rs:
                raise ValueError("kind b takes exactly the middle part r")
            if not 1 <= self.r <= self.m - 1:
                raise ValueError(f"need 1 <= r <= m-1, got r={self.r}")
        else:
            if self.r is not None or not self.rs:
                raise ValueError("kind c takes the middle parts rs")
            for ri in self.rs:
                if not 1 <= ri <= self.m - 1:
                    raise ValueError(f"need 1 <= r_i <= m-1, got {ri}")
        if self.N is not None and self.N < 0:
            raise ValueError("N must be nonnegative")

    @property
    def middles(self) -> tuple[int, ...]:
        if self.kind == "a":
            return ()
        if self.kind == "b":
            return (self.r,)
        return tuple(sorted(self.rs, reverse=True))

    @property
    def base(self) -> int:
        return sum(self.middles) + self.s

    @property
    def q_rho(self) -> tuple[int, int]:
        shift = 2 * self.N if self.N is not None else 0
        return divmod(self.base - shift, self.m)

    def partition(self) -> Partition:
        return Partition((self.m,) * self.t + self.middles + (1,) * self.s)


@dataclass(frozen=True)
class FamilyModel:
    """Reduced quotient data for a family query: the QuotientSpec, the
    canonical pair list when the family's applicability condition holds,
    and a note when it does not."""

    query: FamilyQuery
    spec: QuotientSpec
    decomposition: PairDecomposition | None
    note: str = ""


def family_quotient(fq: FamilyQuery) -> FamilyModel:
    """The reduced quotient prod p_middle * p_{m-rho-1} / p_m^(q+1) with
    the canonical pairs ((0, m-rho-1), (r_i, 0)..., (0,0)...) when the
    kind's condition holds: a needs q >= 0, b needs q >= 1 or the single
    admissible pair at q = 0, c needs q >= d."""
    q, rho = fq.q_rho
    if q < 0:
        raise ValueError("q < 0: the quotient degenerates; the multiplicity is 0")
    xi = fq.partition()
    mu = xi.size - 2 * fq.N if fq.N is not None else xi.size
    spec = make_spec(xi, fq.m, mu)
    m = fq.m
    d = len(fq.middles)
    dec: PairDecomposition | None = None
    note = ""
    if fq.kind == "a":
        dec = PairDecomposition(m, ((0, m - rho - 1),) + ((0, 0),) * q)
    elif fq.kind == "b":
        if q >= 1:
            dec = PairDecomposition(
                m, ((0, m - rho - 1), (fq.r, 0)) + ((0, 0),) * (q - 1)
            )
        elif rho >= fq.r:
            # q = 0: the single pair (r, m-rho-1) fits since r + (m-rho-1) <= m-1
            dec = PairDecomposition(m, ((fq.r, m - rho - 1),))
        else:
            note = "no unsigned model: q = 0 and the single pair is inadmissible"
    else:
        if q >= d:
            dec = PairDecomposition(
                m,
                ((0, m - rho - 1),)
                + tuple((ri, 0) for ri in fq.middles)
                + ((0, 0),) * (q - d),
            )
        else:
            note = f"no unsigned model: q = {q} < d = {d}"
    if dec is not None and dec.product() != spec.numerator():
        raise RuntimeError("family pairs fail to reproduce the numerator")
    return FamilyModel(fq, spec, dec, note)


def family_multiplicity(fq: FamilyQuery) -> int:
    """Multiplicity at coefficient index N by the direct formula.

    q < 0 returns 0 outright.  Whenever the unsigned model applies the
    value is recomputed as a tuple count and the two must agree; kind b
    with q = 0 and 2N > s is the documented exception where the value
    stands without an unsigned model.
    """
    if fq.N is None:
        raise ValueError("family queries need the coefficient index N")
    q, rho = fq.q_rho
    if q < 0:
        return 0
    model = family_quotient(fq)
    value = coeff(expand(model.spec, fq.N).coeffs, fq.N)
    if model.decomposition is not None:
        recount = product_model_coeff(model.decomposition, fq.N)
        if recount != value:
            raise RuntimeError(
                f"product model disagrees with expansion: {recount} != {value}"
            )
    return value


@lru_cache(maxsize=None)
def family_kind_of(parts: tuple[int, ...], m: int) -> str:
    """Classify a partition with parts <= m by its middle parts: a, b, or
    c for zero, one, or more parts strictly between 1 and m."""
    mids = [p for p in parts if 1 < p < m]
    if not mids:
        return "a"
    return "b" if len(mids) == 1 else "c"
