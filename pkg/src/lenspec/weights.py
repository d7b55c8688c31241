"""Closed-form weight multiplicities and invariant-dimension sums.

The multiplicity of a weight in the harmonic family representations of
so(2n) depends only on the weight's one-norm and its number of zero entries.
The closed form below evaluates it directly; summing it against lattice
shell counts gives the dimension of the invariant subspace, which is exactly
an eigenvalue multiplicity of the quotient.

The eigenvalue pairing used throughout the package is
``mult(lambda_{k, p-1}) = m_gamma(L, k, p)`` and
``mult(lambda_{k, p}) = m_gamma(L, k, p+1)``, certified against the
Freudenthal oracle in the test suite.
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import lru_cache

from .errors import DimensionMismatch, InvalidParameters
from .lattice import CongruenceLattice
from .polyseries import binom


@dataclass(frozen=True)
class WeightClass:
    """A Weyl-invariant class of weights: one-norm, zero entries, rank."""

    norm: int
    zeros: int
    n: int

    def __post_init__(self):
        if self.n < 2:
            raise InvalidParameters("rank n must be >= 2")
        if not 0 <= self.zeros <= self.n:
            raise InvalidParameters("zero count must lie in 0..n")
        if self.norm < self.n - self.zeros or (self.norm == 0) != (self.zeros == self.n):
            raise InvalidParameters(
                f"no weight has one-norm {self.norm} with {self.zeros} zeros in rank {self.n}"
            )


@dataclass(frozen=True)
class RepIndex:
    """Index (k, p) of a harmonic family representation of so(2n).

    p = 0 names the zero representation; p = n names the reducible sum of the
    two mirror components.
    """

    k: int
    p: int
    n: int

    def __post_init__(self):
        if self.n < 2:
            raise InvalidParameters("rank n must be >= 2")
        if self.k < 0:
            raise InvalidParameters("k must be >= 0")
        if not 0 <= self.p <= self.n:
            raise InvalidParameters(f"p must lie in 0..{self.n}")


@lru_cache(maxsize=None)
def _class_multiplicity(n: int, k: int, p: int, norm: int, zeros: int) -> int:
    """Multiplicity of any weight with the given (norm, zeros) in family (k, p)."""
    gap = k + p - norm
    if gap < 0 or gap % 2:
        return 0
    r = gap // 2
    total = 0
    for j in range(1, p + 1):
        sign = -1 if j % 2 == 0 else 1
        for t in range((p - j) // 2 + 1):
            c_t = binom(n - p + j + 2 * t, t)
            if c_t == 0:
                continue
            for beta in range(p - j - 2 * t + 1):
                c_b = (
                    (1 << (p - j - 2 * t - beta))
                    * binom(n - zeros, beta)
                    * binom(zeros, p - j - 2 * t - beta)
                )
                if c_b == 0:
                    continue
                for alpha in range(beta + 1):
                    c_a = binom(beta, alpha)
                    if c_a == 0:
                        continue
                    tail = 0
                    for i in range(j):
                        tail += binom(r - i - p + alpha + t + j + n - 2, n - 2)
                    total += sign * c_t * c_b * c_a * tail
    return total


def weight_multiplicity(idx: RepIndex, w: WeightClass) -> int:
    """Exact weight multiplicity for the class ``w`` in the representation ``idx``."""
    if idx.n != w.n:
        raise DimensionMismatch(f"rank mismatch: {idx.n} vs {w.n}")
    if idx.p < 1:
        raise InvalidParameters("weight multiplicities require p >= 1")
    return _class_multiplicity(idx.n, idx.k, idx.p, w.norm, w.zeros)


def m_gamma(L: CongruenceLattice, k: int, p: int) -> int:
    """Invariant dimension of family (k-1, p), summed over the lattice.

    Equals the multiplicity of the eigenvalue paired with (k, p-1) on
    (p-1)-forms of the quotient.  Returns 0 for p = 0.
    """
    n = L.n
    if k < 1:
        raise InvalidParameters("k must be >= 1")
    if not 0 <= p <= n:
        raise InvalidParameters(f"p must lie in 0..{n}")
    if p == 0:
        return 0
    top = k - 1 + p
    table = L.shell_table(top)
    total = 0
    for r in range(top // 2 + 1):
        norm = top - 2 * r
        for zeros in range(n + 1):
            count = int(table[norm, zeros])
            if count:
                total += count * _class_multiplicity(n, k - 1, p, norm, zeros)
    return total


def invariant_dimension(L: CongruenceLattice, idx: RepIndex) -> int:
    """Dimension of the lattice-invariant subspace of the representation ``idx``."""
    if idx.n != L.n:
        raise DimensionMismatch(f"rank mismatch: {idx.n} vs {L.n}")
    if idx.p < 1:
        raise InvalidParameters("invariant dimensions are defined for p >= 1")
    return m_gamma(L, idx.k + 1, idx.p)
