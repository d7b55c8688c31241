"""Isometry classification and isospectrality search for lens parameters.

Two lens parameter vectors give isometric quotients exactly when one is
carried to the other by a unit multiplier mod q together with coordinate
permutations and sign flips; :func:`canonical_key` minimizes over that whole
action, so key equality decides isometry.  The isospectrality tests compare
exact rational series, never truncations.
"""

from __future__ import annotations

import hashlib
import math
from dataclasses import dataclass
from itertools import product

from .errors import DimensionMismatch, InvalidParameters
from .genfun import f_rational, theta_ell_rational
from .lattice import CongruenceLattice, lattice_from_lens
from .polyseries import RationalSeries


@dataclass(frozen=True, order=True)
class LensKey:
    """Canonical isometry key of lens parameters: equal keys <=> isometric."""

    n: int
    q: int
    exponents: tuple[int, ...]

    def label(self) -> str:
        return f"L({self.q};{','.join(str(x) for x in self.exponents)})"

    def lattice(self) -> CongruenceLattice:
        return lattice_from_lens(self.q, self.exponents)


def canonical_key(q: int, s) -> LensKey:
    """Minimize (t * s_i mod q) over units t, signs and coordinate order.

    Each coordinate is folded to its sign-orbit representative in
    [0, q // 2]; sorting handles permutations and the minimum over all units
    handles the residual equivalence.
    """
    s = tuple(int(x) for x in s)
    n = len(s)
    if n < 2:
        raise InvalidParameters("rank n must be >= 2")
    if q < 1:
        raise InvalidParameters("q must be >= 1")
    if math.gcd(q, *s) != 1:
        raise InvalidParameters(f"gcd(q, s_1, ..., s_n) must be 1, got ({q}; {s})")

    def folded(t: int) -> tuple[int, ...]:
        out = []
        for x in s:
            v = (t * x) % q
            out.append(min(v, q - v))
        return tuple(sorted(out))

    best = min(folded(t) for t in range(1, q + 1) if math.gcd(t, q) == 1)
    return LensKey(n=n, q=q, exponents=best)


def _f_or_zero(L: CongruenceLattice, p: int) -> RationalSeries:
    if p < 0:
        return RationalSeries.zero()
    return f_rational(L, p)


def _check_pair(L1: CongruenceLattice, L2: CongruenceLattice) -> None:
    if L1.n != L2.n:
        raise DimensionMismatch(f"rank mismatch: {L1.n} vs {L2.n}")


def p_isospectral(L1: CongruenceLattice, L2: CongruenceLattice, p: int) -> bool:
    """Exact equality of the p-form spectra of the two quotients.

    Decided by equality of the two encoding series of each space; the lower
    one is the zero series when p = 0.
    """
    _check_pair(L1, L2)
    if not 0 <= p <= L1.n - 1:
        raise InvalidParameters(f"p must lie in 0..{L1.n - 1}")
    return _f_or_zero(L1, p - 1) == _f_or_zero(L2, p - 1) and f_rational(
        L1, p
    ) == f_rational(L2, p)


def weighted_theta(L: CongruenceLattice, h: int) -> RationalSeries:
    """The moment series sum_ell ell^h * theta^(ell), with 0^0 = 1."""
    acc = RationalSeries.zero()
    for ell in range(L.n + 1):
        acc = acc + theta_ell_rational(L, ell) * ell**h
    return acc


def isospectral_range(L1: CongruenceLattice, L2: CongruenceLattice, p0: int) -> bool:
    """True iff the quotients are p-isospectral for every 0 <= p <= p0.

    Equivalent to equality of the zero-count moment series of orders
    0 .. p0, which is a finite exact test.
    """
    _check_pair(L1, L2)
    if not 0 <= p0 <= L1.n - 1:
        raise InvalidParameters(f"p0 must lie in 0..{L1.n - 1}")
    return all(weighted_theta(L1, h) == weighted_theta(L2, h) for h in range(p0 + 1))


def norm_star_isospectral(L1: CongruenceLattice, L2: CongruenceLattice) -> bool:
    """True iff every refined count series theta^(ell) agrees; equivalent to
    p-isospectrality for all p."""
    _check_pair(L1, L2)
    n = L1.n
    return all(
        theta_ell_rational(L1, ell) == theta_ell_rational(L2, ell)
        for ell in range(n + 1)
    )


# -- search ---------------------------------------------------------------------


@dataclass(frozen=True)
class IsospectralFamily:
    """A maximal set of >= 2 isometry classes sharing all spectra up to p0."""

    q: int
    n: int
    p0: int
    members: tuple[LensKey, ...]
    fingerprint: str


def isometry_classes(q: int, n: int, mode: str = "manifolds") -> list[LensKey]:
    """All isometry classes of lens parameters with modulus q and rank n.

    ``manifolds`` enumerates free actions only (every s_i a unit, normalized
    to s_1 = 1); ``orbifolds`` enumerates every valid parameter vector, the
    manifold ones included.
    """
    if q < 1:
        raise InvalidParameters("q must be >= 1")
    if n < 2:
        raise InvalidParameters("rank n must be >= 2")
    if mode not in ("manifolds", "orbifolds"):
        raise InvalidParameters(f"mode must be 'manifolds' or 'orbifolds', got {mode!r}")
    seen: set[LensKey] = set()
    if mode == "manifolds":
        units = [t for t in range(1, q + 1) if math.gcd(t, q) == 1]
        vectors = ((1,) + rest for rest in product(units, repeat=n - 1)) if q > 1 else iter([(0,) * n])
    else:
        vectors = (
            s for s in product(range(max(q, 1)), repeat=n) if math.gcd(q, *s) == 1
        )
    for s in vectors:
        seen.add(canonical_key(q, s))
    return sorted(seen)


def _moment_fingerprint(L: CongruenceLattice, p0: int):
    # numerator coefficients of the moment series; all classes with the same
    # (q, n) land on the identical denominator, so tuples compare exactly
    data = []
    for h in range(p0 + 1):
        series = weighted_theta(L, h)
        data.append(tuple(sorted(series.numerator.coeffs.items())))
    return tuple(data)


def fingerprint_digest(data) -> str:
    return hashlib.sha256(repr(data).encode()).hexdigest()[:16]


def search(q: int, n: int, p0: int, mode: str = "manifolds") -> list[IsospectralFamily]:
    """Group the isometry classes with modulus q into families that are
    p-isospectral for all p <= p0; families of size >= 2 are returned.

    Classes are bucketed by the exact moment-series fingerprint and verified
    pairwise inside each bucket, so the result does not rely on hashing.
    """
    if not 0 <= p0 <= n - 1:
        raise InvalidParameters(f"p0 must lie in 0..{n - 1}")
    keys = isometry_classes(q, n, mode)
    buckets: dict[tuple, list[LensKey]] = {}
    for key in keys:
        fp = _moment_fingerprint(key.lattice(), p0)
        buckets.setdefault(fp, []).append(key)
    families = []
    for fp, members in buckets.items():
        if len(members) < 2:
            continue
        members = sorted(members)
        base = members[0].lattice()
        for other in members[1:]:
            if not isospectral_range(base, other.lattice(), p0):
                raise RuntimeError("fingerprint bucket failed exact verification")
        families.append(
            IsospectralFamily(
                q=q,
                n=n,
                p0=p0,
                members=tuple(members),
                fingerprint=fingerprint_digest(fp),
            )
        )
    families.sort(key=lambda fam: fam.members)
    return families
