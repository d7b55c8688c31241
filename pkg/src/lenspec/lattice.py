"""Finite torus subgroups, their congruence lattices and norm statistics.

A finite subgroup of the block-rotation torus in SO(2n) is described by
generator exponent vectors.  Its congruence lattice is the set of integer
vectors a with sum_j a_j s_{i,j} = 0 mod q_i for every generator (q_i, s_i);
all spectral data of the quotient depends on the lattice only through the
counts of vectors with a given one-norm and a given number of zero entries.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from functools import cached_property
from itertools import product

from . import _kernels
from .errors import DimensionMismatch, InvalidParameters
from .polyseries import LaurentPolynomial

_FREENESS_LIMIT = 2_000_000


@dataclass(frozen=True)
class TorusSubgroup:
    """Finite subgroup of the standard torus, given by generator exponents.

    Each generator is a pair (order q_i, exponents s_i mod q_i).  Use
    :func:`torus_subgroup` or :func:`lens_group` to construct normalized
    instances.
    """

    n: int
    generators: tuple[tuple[int, tuple[int, ...]], ...]

    @property
    def exponent(self) -> int:
        """Least m with g^m = 1 for every group element."""
        return math.lcm(*(q for q, _ in self.generators)) if self.generators else 1

    @cached_property
    def order(self) -> int:
        return len(self._element_rotations())

    def _element_rotations(self) -> set[tuple[int, ...]]:
        # rotation exponents of every group element, over the common modulus
        big = self.exponent
        if math.prod(q for q, _ in self.generators) > _FREENESS_LIMIT:
            raise InvalidParameters("group too large to enumerate")
        elems = set()
        ranges = [range(q) for q, _ in self.generators]
        scaled = [
            tuple(x * (big // q) % big for x in s) for q, s in self.generators
        ]
        for powers in product(*ranges):
            rot = [0] * self.n
            for m, s in zip(powers, scaled):
                for j in range(self.n):
                    rot[j] = (rot[j] + m * s[j]) % big
            elems.add(tuple(rot))
        return elems

    def acts_freely(self) -> bool:
        """True when no nontrivial element fixes a point of the sphere."""
        for rot in self._element_rotations():
            if any(rot) and not all(rot):
                return False
        return True

    def lattice(self) -> "CongruenceLattice":
        return CongruenceLattice(
            n=self.n,
            congruences=self.generators,
            exponent=self.exponent,
            is_manifold=self.acts_freely(),
        )


def torus_subgroup(n: int, generators) -> TorusSubgroup:
    """Normalize and validate generator data for a torus subgroup.

    Exponents are reduced mod the order, a common factor with the order is
    divided out, and generators of order 1 are dropped.
    """
    if n < 2:
        raise InvalidParameters("rank n must be >= 2")
    normalized = []
    for q, s in generators:
        if q < 1:
            raise InvalidParameters(f"generator order {q} must be >= 1")
        s = tuple(int(x) for x in s)
        if len(s) != n:
            raise DimensionMismatch(f"generator has {len(s)} exponents, expected {n}")
        s = tuple(x % q for x in s)
        g = math.gcd(q, *s)
        q //= g
        s = tuple((x // g) % q for x in s)
        if q > 1:
            normalized.append((q, s))
    return TorusSubgroup(n=n, generators=tuple(normalized))


def lens_group(q: int, s) -> TorusSubgroup:
    """Cyclic group of order q rotating coordinate plane j by 2*pi*s_j/q."""
    s = tuple(int(x) for x in s)
    if q < 1:
        raise InvalidParameters("q must be >= 1")
    if math.gcd(q, *s) != 1:
        raise InvalidParameters(f"gcd(q, s_1, ..., s_n) must be 1, got parameters ({q}; {s})")
    return torus_subgroup(len(s), [(q, s)])


def lattice_from_lens(q: int, s) -> "CongruenceLattice":
    """Congruence lattice of the lens parameters (q; s_1, ..., s_n)."""
    return lens_group(q, s).lattice()


@dataclass(frozen=True)
class ShellCounts:
    """Counts of lattice vectors with one-norm k, split by zero entries.

    counts[zeros] is the number of vectors with exactly ``zeros`` zero
    coordinates; the total shell count is their sum.
    """

    k: int
    counts: tuple[int, ...]

    @property
    def total(self) -> int:
        return sum(self.counts)


@dataclass(frozen=True)
class CongruenceLattice:
    """Sublattice of Z^n cut out by modular congruences.

    Membership is exact: a is in the lattice iff every congruence
    sum_j a_j s_{i,j} = 0 mod q_i holds.  ``exponent`` is the lcm of the
    moduli; membership is periodic with that period in every coordinate.
    """

    n: int
    congruences: tuple[tuple[int, tuple[int, ...]], ...]
    exponent: int
    is_manifold: bool

    def member(self, a) -> bool:
        # every congruence is tested directly; a Smith-normal-form reduction of
        # stacked congruences would be the natural fast path if this ever
        # dominates, but moduli and ranks stay desk-scale here
        a = tuple(a)
        if len(a) != self.n:
            raise DimensionMismatch(f"vector has length {len(a)}, expected {self.n}")
        return all(
            sum(x * c for x, c in zip(a, s)) % q == 0 for q, s in self.congruences
        )

    # -- counting ------------------------------------------------------------

    def shell_table(self, kmax: int):
        """int64 array N[k, zeros] for 0 <= k <= kmax (cached, grows on demand)."""
        cached = self.__dict__.get("_shell_cache")
        if cached is None or cached.shape[0] <= kmax:
            cached = _kernels.shell_table(self.congruences, self.n, kmax)
            self.__dict__["_shell_cache"] = cached
        return cached

    def shell_count(self, k: int, zeros: int) -> int:
        return int(self.shell_table(k)[k, zeros])

    def shell_counts(self, k: int) -> ShellCounts:
        """All counts N(k, zeros) for one-norm exactly k."""
        if k < 0:
            raise InvalidParameters("one-norm must be >= 0")
        row = self.shell_table(k)[k]
        return ShellCounts(k=k, counts=tuple(int(x) for x in row))

    @cached_property
    def _reduced(self):
        return _kernels.box_table(self.congruences, self.n, self.exponent - 1)

    def reduced_counts(self) -> tuple[tuple[int, ...], ...]:
        """Counts restricted to the open box |a_i| < exponent, as rows by norm.

        Row k lists the counts by zero entries; rows run from norm 0 to
        n*(exponent-1), beyond which every count vanishes.
        """
        return tuple(tuple(int(x) for x in row) for row in self._reduced)

    def reduced_count(self, k: int, zeros: int) -> int:
        table = self._reduced
        if k < 0 or k >= table.shape[0]:
            return 0
        return int(table[k, zeros])

    @cached_property
    def _phi(self) -> tuple[LaurentPolynomial, ...]:
        table = self._reduced
        polys = []
        for zeros in range(self.n + 1):
            polys.append(
                LaurentPolynomial(
                    {k: int(table[k, zeros]) for k in range(table.shape[0])}
                )
            )
        return tuple(polys)

    def phi_polynomials(self) -> tuple[LaurentPolynomial, ...]:
        """Box-count generating polynomials, one per zero-entry count.

        Entry ``ell`` has degree at most (n - ell) * (exponent - 1); entry n
        is the constant 1 coming from the zero vector.
        """
        return self._phi

    def label(self) -> str:
        if not self.congruences:
            return f"Z^{self.n}"
        if len(self.congruences) == 1:
            q, s = self.congruences[0]
            return f"L({q};{','.join(str(x) for x in s)})"
        gens = "|".join(
            f"{q}:{','.join(str(x) for x in s)}" for q, s in self.congruences
        )
        return f"G({gens})"
