import random
from itertools import product

import numpy as np
import pytest

from lenspec import (
    CongruenceLattice,
    LaurentPolynomial,
    lattice_from_lens,
    lens_group,
    torus_subgroup,
)
from lenspec import _kernels
from lenspec.errors import DimensionMismatch, InvalidParameters


def brute_shell(L, kmax):
    """Naive full-cube enumeration, independent of the counting kernels."""
    n = L.n
    out = [[0] * (n + 1) for _ in range(kmax + 1)]
    for a in product(range(-kmax, kmax + 1), repeat=n):
        norm = sum(abs(x) for x in a)
        if norm <= kmax and L.member(a):
            out[norm][sum(1 for x in a if x == 0)] += 1
    return out


def test_trivial_lens_is_full_lattice():
    L = lattice_from_lens(1, (0, 0))
    assert L.congruences == ()
    assert L.exponent == 1
    assert L.is_manifold
    assert L.member((3, -7))


def test_lens_manifold_flags():
    assert lattice_from_lens(4, (1, 1)).is_manifold
    orb = lattice_from_lens(4, (1, 2))
    assert not orb.is_manifold
    assert orb.member((2, 1))  # 2 + 2 = 4


def test_lens_rejects_bad_gcd():
    with pytest.raises(InvalidParameters):
        lens_group(4, (2, 2))


def test_rank_one_rejected():
    with pytest.raises(InvalidParameters):
        torus_subgroup(1, [(5, (1,))])


def test_generator_normalization():
    # common factor with the order divides out; order-1 generators vanish
    G = torus_subgroup(2, [(6, (2, 4)), (1, (0, 0))])
    assert G.generators == ((3, (1, 2)),)
    assert G.exponent == 3


def test_member_examples():
    L = lattice_from_lens(4, (1, 1))
    assert L.member((1, -1))
    assert not L.member((1, 1))
    assert L.member((0, 0))
    with pytest.raises(DimensionMismatch):
        L.member((1, 2, 3))


def test_multi_generator_intersection():
    G = torus_subgroup(2, [(2, (1, 0)), (3, (0, 1))])
    L = G.lattice()
    assert L.exponent == 6
    for a in product(range(-6, 7), repeat=2):
        assert L.member(a) == (a[0] % 2 == 0 and a[1] % 3 == 0)


def test_shell_counts_full_lattice_rank3():
    L = lattice_from_lens(1, (0, 0, 0))
    sc = L.shell_counts(2)
    assert sc.counts[2] == 6
    assert sc.counts[1] == 12
    assert sc.counts[0] == 0
    assert sc.total == 18


def test_shell_counts_lens_4_11():
    L = lattice_from_lens(4, (1, 1))
    sc = L.shell_counts(2)
    assert sc.counts == (2, 0, 0)


def test_shell_counts_k0():
    for L in (lattice_from_lens(5, (1, 2)), lattice_from_lens(1, (0, 0, 0))):
        sc = L.shell_counts(0)
        assert sc.counts[L.n] == 1
        assert sc.total == 1


def test_shell_table_matches_naive_enumeration():
    for L in (
        lattice_from_lens(1, (0, 0)),
        lattice_from_lens(4, (1, 1)),
        lattice_from_lens(4, (1, 2)),
        lattice_from_lens(7, (1, 2, 3)),
        torus_subgroup(2, [(2, (1, 1)), (4, (1, 3))]).lattice(),
    ):
        kmax = 8
        table = L.shell_table(kmax)
        brute = brute_shell(L, kmax)
        for k in range(kmax + 1):
            assert [int(x) for x in table[k]] == brute[k], (L.label(), k)


def test_periodicity_property():
    rng = random.Random(5)
    for L in (lattice_from_lens(4, (1, 1)), lattice_from_lens(6, (1, 2, 3))):
        q = L.exponent
        members = [
            a
            for a in product(range(-q, q + 1), repeat=L.n)
            if L.member(a)
        ]
        for _ in range(50):
            a = rng.choice(members)
            v = tuple(rng.randint(-2, 2) for _ in range(L.n))
            shifted = tuple(x + q * y for x, y in zip(a, v))
            assert L.member(shifted)


def test_reduced_counts_q1():
    # the open box for q = 1 contains only the zero vector
    L = lattice_from_lens(1, (0, 0, 0))
    table = L.reduced_counts()
    assert table[0][3] == 1
    assert sum(map(sum, table)) == 1


def test_reduced_counts_box_oracle():
    L = lattice_from_lens(4, (1, 1))
    q = L.exponent
    brute = {}
    for a in product(range(-(q - 1), q), repeat=2):
        if L.member(a):
            key = (sum(abs(x) for x in a), sum(1 for x in a if x == 0))
            brute[key] = brute.get(key, 0) + 1
    table = L.reduced_counts()
    for k in range(len(table)):
        for ell in range(3):
            assert table[k][ell] == brute.get((k, ell), 0)
    # reduced counts never exceed shell counts
    shell = L.shell_table(len(table) - 1)
    for k in range(len(table)):
        for ell in range(3):
            assert table[k][ell] <= int(shell[k, ell])


def test_reduced_counts_degree_bound():
    L = lattice_from_lens(5, (1, 2, 3))
    q = L.exponent
    table = L.reduced_counts()
    for k in range(len(table)):
        for ell in range(L.n + 1):
            if k > (L.n - ell) * (q - 1):
                assert table[k][ell] == 0


def test_phi_polynomials_examples():
    L = lattice_from_lens(1, (0, 0))
    phis = L.phi_polynomials()
    assert phis[2] == LaurentPolynomial.one()
    assert phis[0].is_zero() and phis[1].is_zero()

    L = lattice_from_lens(2, (1, 1))
    phis = L.phi_polynomials()
    assert phis[2] == LaurentPolynomial.one()
    assert phis[1].is_zero()
    assert phis[0] == LaurentPolynomial({2: 4})


def test_phi_always_one_at_top():
    for L in (lattice_from_lens(9, (1, 4)), lattice_from_lens(12, (1, 5, 7))):
        assert L.phi_polynomials()[L.n] == LaurentPolynomial.one()


def test_kernel_backends_agree():
    rng = np.random.default_rng(2)
    for _ in range(10):
        n = int(rng.integers(2, 4))
        q = int(rng.integers(2, 9))
        s = tuple(int(x) for x in rng.integers(0, q, n))
        congs = ((q, s),)
        mod = np.array([q], dtype=np.int64)
        co = np.array([s], dtype=np.int64)
        assert (
            _kernels._shell_table_loops(mod, co, 9)
            == _kernels._shell_table_numpy(mod, co, 9)
        ).all()
        assert (
            _kernels._box_table_loops(mod, co, q - 1)
            == _kernels._box_table_numpy(mod, co, q - 1)
        ).all()
        if _kernels.HAS_NUMBA:
            assert (
                _kernels._shell_table_jit(mod, co, 9)
                == _kernels._shell_table_numpy(mod, co, 9)
            ).all()
            assert (
                _kernels._box_table_jit(mod, co, q - 1)
                == _kernels._box_table_numpy(mod, co, q - 1)
            ).all()


def test_kernel_scale_guard():
    with pytest.raises(InvalidParameters):
        _kernels.shell_table(((3, (1, 1, 1, 1, 1, 1, 1, 1)),), 8, 10**8)


def test_labels():
    assert lattice_from_lens(4, (1, 3)).label() == "L(4;1,3)"
    assert lattice_from_lens(1, (0, 0)).label() == "Z^2"
    G = torus_subgroup(2, [(2, (1, 1)), (4, (1, 3))])
    assert G.lattice().label() == "G(2:1,1|4:1,3)"
