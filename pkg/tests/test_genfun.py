import pytest

from lenspec import (
    LaurentPolynomial,
    RationalSeries,
    RepIndex,
    a_laurent,
    f_rational,
    f_rational_p0_direct,
    invariant_dimension,
    lattice_from_lens,
    theta_ell_rational,
    theta_rational,
    torus_subgroup,
)
from lenspec.errors import InvalidParameters
from lenspec.polyseries import binom


SAMPLES = [
    lattice_from_lens(1, (0, 0)),
    lattice_from_lens(2, (1, 1)),
    lattice_from_lens(4, (1, 1)),
    lattice_from_lens(4, (1, 2)),
    lattice_from_lens(7, (1, 2)),
    lattice_from_lens(1, (0, 0, 0)),
    lattice_from_lens(11, (1, 2, 3)),
    lattice_from_lens(6, (1, 2, 3)),
    torus_subgroup(2, [(2, (1, 1)), (4, (1, 3))]).lattice(),
]


def test_theta_ell_full_lattice_closed_form():
    # for the full lattice only the top box polynomial survives
    for n in (2, 3):
        L = lattice_from_lens(1, (0,) * n)
        for ell in range(n + 1):
            expected = RationalSeries(
                LaurentPolynomial({n - ell: binom(n, ell) * 2 ** (n - ell)}),
                ((1, n - ell),) if n > ell else (),
            )
            assert theta_ell_rational(L, ell) == expected


def test_theta_ell_top_is_one():
    for L in SAMPLES:
        assert theta_ell_rational(L, L.n) == RationalSeries(LaurentPolynomial.one())


def test_theta_ell_matches_shell_counts():
    for L in SAMPLES:
        top = min(max(3 * L.exponent, 8), 24)
        table = L.shell_table(top)
        for ell in range(L.n + 1):
            got = theta_ell_rational(L, ell).expand(top)
            assert got == [int(table[k, ell]) for k in range(top + 1)], (L.label(), ell)


def test_theta_rational_full_lattice():
    for n in (2, 3):
        L = lattice_from_lens(1, (0,) * n)
        expected = RationalSeries(
            LaurentPolynomial({0: 1, 1: 1}) ** n, ((1, n),)
        )
        assert theta_rational(L) == expected


def test_theta_is_sum_of_refinements():
    for L in SAMPLES:
        total = RationalSeries.zero()
        for ell in range(L.n + 1):
            total = total + theta_ell_rational(L, ell)
        assert theta_rational(L) == total


def test_theta_low_coefficients_lens_4_11():
    got = theta_rational(lattice_from_lens(4, (1, 1))).expand(1)
    assert got == [1, 0]


def test_a_laurent_p1_is_inverse_monomial():
    for n in (2, 3, 4):
        for ell in range(n + 1):
            assert a_laurent(1, ell, n) == LaurentPolynomial({-1: 1})


def test_a_laurent_exponent_window():
    for n in range(2, 6):
        for p in range(1, n + 1):
            for ell in range(n + 1):
                poly = a_laurent(p, ell, n)
                if poly.is_zero():
                    continue
                assert poly.min_exp() >= -p
                assert poly.max_exp() <= p - 2


def test_a_laurent_validation():
    with pytest.raises(InvalidParameters):
        a_laurent(0, 0, 2)
    with pytest.raises(InvalidParameters):
        a_laurent(3, 0, 2)


def test_f0_sphere_series():
    got = f_rational(lattice_from_lens(1, (0, 0)), 0).expand(3)
    assert got == [4, 9, 16, 25]


def test_f_matches_direct_zero_form_formula():
    for L in SAMPLES:
        assert f_rational(L, 0) == f_rational_p0_direct(L)


def test_f_coefficients_are_invariant_dimensions():
    for L in SAMPLES[:5]:
        for p in range(L.n):
            got = f_rational(L, p).expand(30)
            want = [
                invariant_dimension(L, RepIndex(k, p + 1, L.n)) for k in range(31)
            ]
            assert got == want, (L.label(), p)


def test_f_nonnegative_coefficients():
    for L in SAMPLES:
        for p in range(L.n):
            assert all(c >= 0 for c in f_rational(L, p).expand(40))


def test_f_p_validation():
    L = lattice_from_lens(4, (1, 1))
    with pytest.raises(InvalidParameters):
        f_rational(L, 2)
    with pytest.raises(InvalidParameters):
        f_rational(L, -1)


def test_main_identity_all_p_families():
    # the assembled series agrees with the invariant-dimension route for
    # every family index, including the reducible top one; rank 4 included
    cases = [
        (lattice_from_lens(5, (1, 2)), 20),
        (lattice_from_lens(4, (1, 2, 2)), 20),
        (lattice_from_lens(5, (1, 2, 3, 4)), 10),
    ]
    for L, order in cases:
        n = L.n
        for p in range(1, n + 1):
            acc = RationalSeries.zero()
            for ell in range(n + 1):
                acc = acc + theta_ell_rational(L, ell) * a_laurent(p, ell, n)
            acc = acc.over_factor(2, n - 1)
            sign = -1 if p % 2 else 1
            series = acc + RationalSeries(LaurentPolynomial.term(sign, -p))
            got = series.expand(order)
            want = [invariant_dimension(L, RepIndex(k, p, n)) for k in range(order + 1)]
            assert got == want


def test_f_denominator_shape():
    L = lattice_from_lens(4, (1, 1))
    series = f_rational(L, 1)
    assert dict(series.denominator) == {2: 1, 4: 2}
    assert series.numerator.min_exp() >= 0


def test_theta_serialization_example():
    text = theta_rational(lattice_from_lens(1, (0, 0))).to_text()
    assert text == "1*z^0 + 2*z^1 + 1*z^2 | (1-z^1)^2"
