"""Hot counting kernels for congruence lattices.

Both kernels tabulate integer vectors by one-norm and number of zero entries,
subject to a family of modular congruences.  The loop versions are compiled
with numba's @njit when numba is importable; setting ``LENSPEC_PURE=1`` (or a
missing numba) selects vectorized numpy fallbacks instead.  The two backends
return identical int64 tables; ``benchmarks/bench_kernels.py`` compares them.

Counts are numbers of lattice points inside explicit boxes, so int64 is exact
as long as the enumerated box stays below 2^62 points; the wrappers enforce
that bound before dispatching.
"""

from __future__ import annotations

import os

import numpy as np

from .errors import InvalidParameters

PURE_ENV = "LENSPEC_PURE"

_INT64_SAFE = 1 << 62


def _shell_table_loops(moduli, coeffs, kmax):
    """Count vectors with one-norm k <= kmax by (norm, zero entries).

    moduli: (m,) int64, coeffs: (m, n) int64.  A vector a belongs to the
    lattice when coeffs[r] . a == 0 mod moduli[r] for every row r.  Returns an
    int64 table of shape (kmax+1, n+1) indexed [norm, zeros].
    """
    ncong, n = coeffs.shape
    out = np.zeros((kmax + 1, n + 1), dtype=np.int64)
    out[0, n] = 1
    if kmax == 0:
        return out
    a = np.zeros(n, dtype=np.int64)
    budget = np.zeros(n + 1, dtype=np.int64)
    budget[0] = kmax
    i = 0
    a[0] = -kmax - 1
    while i >= 0:
        a[i] += 1
        if a[i] > budget[i]:
            i -= 1
            continue
        v = a[i]
        if v < 0:
            v = -v
        budget[i + 1] = budget[i] - v
        if i == n - 1:
            norm = kmax - budget[n]
            if norm > 0:
                ok = True
                for r in range(ncong):
                    acc = 0
                    for j in range(n):
                        acc += coeffs[r, j] * a[j]
                    if acc % moduli[r] != 0:
                        ok = False
                        break
                if ok:
                    zeros = 0
                    for j in range(n):
                        if a[j] == 0:
                            zeros += 1
                    out[norm, zeros] += 1
        else:
            i += 1
            a[i] = -budget[i] - 1
    return out


def _box_table_loops(moduli, coeffs, radius):
    """Count lattice vectors in the box |a_i| <= radius by (norm, zeros)."""
    ncong, n = coeffs.shape
    out = np.zeros((n * radius + 1, n + 1), dtype=np.int64)
    a = np.zeros(n, dtype=np.int64)
    i = 0
    a[0] = -radius - 1
    while i >= 0:
        a[i] += 1
        if a[i] > radius:
            i -= 1
            continue
        if i == n - 1:
            ok = True
            for r in range(ncong):
                acc = 0
                for j in range(n):
                    acc += coeffs[r, j] * a[j]
                if acc % moduli[r] != 0:
                    ok = False
                    break
            if ok:
                norm = 0
                zeros = 0
                for j in range(n):
                    if a[j] == 0:
                        zeros += 1
                    elif a[j] < 0:
                        norm -= a[j]
                    else:
                        norm += a[j]
                out[norm, zeros] += 1
        else:
            i += 1
            a[i] = -radius - 1
    return out


def _member_mask(vecs, moduli, coeffs):
    ok = np.ones(vecs.shape[0], dtype=bool)
    for r in range(moduli.shape[0]):
        ok &= (vecs @ coeffs[r]) % moduli[r] == 0
    return ok


def _shell_table_numpy(moduli, coeffs, kmax):
    """Vectorized fallback for :func:`_shell_table_loops`."""
    n = coeffs.shape[1]
    out = np.zeros((kmax + 1, n + 1), dtype=np.int64)
    out[0, n] = 1
    if kmax == 0:
        return out
    # chunk over the first coordinate so memory stays at O((2*kmax+1)^(n-1))
    for a0 in range(-kmax, kmax + 1):
        r = kmax - abs(a0)
        rest = np.arange(-r, r + 1, dtype=np.int64)
        grids = np.meshgrid(*([rest] * (n - 1)), indexing="ij")
        cols = [np.full(grids[0].size, a0, dtype=np.int64)]
        cols.extend(g.ravel() for g in grids)
        vecs = np.stack(cols, axis=1)
        norms = np.abs(vecs).sum(axis=1)
        keep = (norms <= kmax) & (norms > 0)
        vecs = vecs[keep]
        norms = norms[keep]
        ok = _member_mask(vecs, moduli, coeffs)
        vecs = vecs[ok]
        zeros = (vecs == 0).sum(axis=1)
        np.add.at(out, (norms[ok], zeros), 1)
    return out


def _box_table_numpy(moduli, coeffs, radius):
    """Vectorized fallback for :func:`_box_table_loops`."""
    n = coeffs.shape[1]
    out = np.zeros((n * radius + 1, n + 1), dtype=np.int64)
    rest = np.arange(-radius, radius + 1, dtype=np.int64)
    for a0 in range(-radius, radius + 1):
        grids = np.meshgrid(*([rest] * (n - 1)), indexing="ij")
        cols = [np.full(grids[0].size, a0, dtype=np.int64)]
        cols.extend(g.ravel() for g in grids)
        vecs = np.stack(cols, axis=1)
        ok = _member_mask(vecs, moduli, coeffs)
        vecs = vecs[ok]
        norms = np.abs(vecs).sum(axis=1)
        zeros = (vecs == 0).sum(axis=1)
        np.add.at(out, (norms, zeros), 1)
    return out


def _pure_requested() -> bool:
    return os.environ.get(PURE_ENV, "").strip() not in ("", "0")


try:
    from numba import njit

    _shell_table_jit = njit(cache=True)(_shell_table_loops)
    _box_table_jit = njit(cache=True)(_box_table_loops)
    HAS_NUMBA = True
except ImportError:  # pragma: no cover - exercised only without numba
    HAS_NUMBA = False

USE_JIT = HAS_NUMBA and not _pure_requested()


def backend_name() -> str:
    return "numba" if USE_JIT else "numpy"


def _congruence_arrays(congruences, n):
    moduli = np.array([q for q, _ in congruences], dtype=np.int64)
    if congruences:
        coeffs = np.array([s for _, s in congruences], dtype=np.int64)
    else:
        coeffs = np.zeros((0, n), dtype=np.int64)
    return moduli, coeffs.reshape(len(congruences), n)


def _check_scale(points: int, span: int, congruences) -> None:
    if points >= _INT64_SAFE:
        raise InvalidParameters("enumeration exceeds the exact int64 range of the kernels")
    qmax = max((q for q, _ in congruences), default=1)
    if span * qmax * 64 >= _INT64_SAFE:
        raise InvalidParameters("congruence dot products exceed the exact int64 range")


def shell_table(congruences, n: int, kmax: int) -> np.ndarray:
    """Table N[k, zeros] of lattice vectors with one-norm k for 0 <= k <= kmax."""
    if kmax < 0:
        raise InvalidParameters("kmax must be >= 0")
    _check_scale((2 * kmax + 1) ** n, kmax * n, congruences)
    moduli, coeffs = _congruence_arrays(congruences, n)
    fn = _shell_table_jit if USE_JIT else _shell_table_numpy
    return fn(moduli, coeffs, kmax)


def box_table(congruences, n: int, radius: int) -> np.ndarray:
    """Table of lattice vectors in the box |a_i| <= radius by (norm, zeros)."""
    if radius < 0:
        raise InvalidParameters("radius must be >= 0")
    _check_scale((2 * radius + 1) ** n, radius * n, congruences)
    moduli, coeffs = _congruence_arrays(congruences, n)
    fn = _box_table_jit if USE_JIT else _box_table_numpy
    return fn(moduli, coeffs, radius)
