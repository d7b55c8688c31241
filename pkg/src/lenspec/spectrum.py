"""Exact p-form spectra of sphere quotients as eigenvalue tables.

For 0 <= p <= n-1 every eigenvalue on p-forms belongs to one of two integer
families indexed by k >= 1 (plus the constant functions at 0 when p = 0);
the table lists eigenvalues in increasing order with their multiplicities
and the contributing (k, family) pairs.
"""

from __future__ import annotations

from concurrent.futures import ThreadPoolExecutor
from dataclasses import dataclass

from .errors import InvalidParameters
from .lattice import CongruenceLattice
from .weights import m_gamma


def eigenvalue(k: int, p: int, n: int) -> int:
    """The k-th eigenvalue of family p on the (2n-1)-sphere: (k+p)(k+2n-2-p).

    Family p = -1 is identically zero.
    """
    if n < 2:
        raise InvalidParameters("rank n must be >= 2")
    if k < 1:
        raise InvalidParameters("k must be >= 1")
    if not -1 <= p <= n - 1:
        raise InvalidParameters(f"family must lie in -1..{n - 1}")
    if p == -1:
        return 0
    return (k + p) * (k + 2 * n - 2 - p)


@dataclass(frozen=True)
class Contribution:
    """One (k, family) source feeding an eigenvalue, with its multiplicity."""

    k: int
    family: int
    multiplicity: int


@dataclass(frozen=True)
class SpectrumEntry:
    eigenvalue: int
    multiplicity: int
    contributors: tuple[Contribution, ...]


@dataclass(frozen=True)
class SpectrumTable:
    """Eigenvalue -> multiplicity table of the p-form spectrum.

    Complete for all eigenvalues up to the k_max-th member of family p-1
    (family p when p = 0); eigenvalues are strictly increasing and
    multiplicities positive.
    """

    n: int
    p: int
    k_max: int
    entries: tuple[SpectrumEntry, ...]


def spectrum_table(
    L: CongruenceLattice, p: int, k_max: int, threads: int = 1
) -> SpectrumTable:
    """Tabulate the p-form spectrum of the quotient by the lattice's group.

    The k-th eigenvalue of family p-1 carries multiplicity m_gamma(L, k, p)
    and the k-th of family p carries m_gamma(L, k, p+1); for p = 0 the zero
    eigenvalue of the constants is added with multiplicity 1.  Results do not
    depend on ``threads``.
    """
    n = L.n
    if not 0 <= p <= n - 1:
        raise InvalidParameters(f"p must lie in 0..{n - 1}")
    if k_max < 1:
        raise InvalidParameters("k_max must be >= 1")
    # one shared shell table covering the largest norm any k needs
    L.shell_table(k_max - 1 + min(p + 1, n))

    def per_k(k: int):
        low = m_gamma(L, k, p) if p >= 1 else 0
        high = m_gamma(L, k, p + 1)
        return k, low, high

    ks = range(1, k_max + 1)
    if threads > 1:
        with ThreadPoolExecutor(max_workers=threads) as pool:
            rows = list(pool.map(per_k, ks))
    else:
        rows = [per_k(k) for k in ks]

    cells: dict[int, list[Contribution]] = {}
    if p == 0:
        cells[0] = [Contribution(k=0, family=0, multiplicity=1)]
    for k, low, high in rows:
        if low:
            cells.setdefault(eigenvalue(k, p - 1, n), []).append(
                Contribution(k=k, family=p - 1, multiplicity=low)
            )
        if high:
            cells.setdefault(eigenvalue(k, p, n), []).append(
                Contribution(k=k, family=p, multiplicity=high)
            )

    entries = []
    for eig in sorted(cells):
        contribs = tuple(sorted(cells[eig], key=lambda c: (c.family, c.k)))
        entries.append(
            SpectrumEntry(
                eigenvalue=eig,
                multiplicity=sum(c.multiplicity for c in contribs),
                contributors=contribs,
            )
        )
    return SpectrumTable(n=n, p=p, k_max=k_max, entries=tuple(entries))
