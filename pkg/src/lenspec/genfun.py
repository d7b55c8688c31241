"""Exact rational generating functions for lattice counts and form spectra.

The one-norm count series theta and its refinements by zero entries are
rational with denominator powers of (1 - z^q); their numerators come from the
finite box-count polynomials.  The form-spectrum series F^p combines the
refined theta series against universal Laurent polynomial weights and a
single corrective monomial, on the denominator (1-z^2)^(n-1) (1-z^q)^n.
"""

from __future__ import annotations

from functools import lru_cache

from .errors import InvalidParameters, NegativeOrderTerm
from .lattice import CongruenceLattice
from .polyseries import LaurentPolynomial, RationalSeries, binom


@lru_cache(maxsize=None)
def theta_ell_rational(L: CongruenceLattice, ell: int) -> RationalSeries:
    """Generating function of shell counts with exactly ``ell`` zero entries.

    Exact rational form with denominator (1 - z^q)^(n - ell), q the lattice
    exponent; the coefficient of z^k is the count N(k, ell).
    """
    n, q = L.n, L.exponent
    if not 0 <= ell <= n:
        raise InvalidParameters(f"ell must lie in 0..{n}")
    phis = L.phi_polynomials()
    num = LaurentPolynomial.zero()
    for s in range(n - ell + 1):
        weight = (1 << s) * binom(ell + s, s)
        num = num + phis[ell + s].shift(s * q) * weight
    factors = ((q, n - ell),) if n > ell else ()
    return RationalSeries(num, factors)


@lru_cache(maxsize=None)
def theta_rational(L: CongruenceLattice) -> RationalSeries:
    """Generating function of all shell counts, with denominator (1 - z^q)^n."""
    n, q = L.n, L.exponent
    phis = L.phi_polynomials()
    num = LaurentPolynomial.zero()
    for t in range(n + 1):
        inner = LaurentPolynomial.zero()
        for ell in range(t, n + 1):
            inner = inner + phis[ell] * binom(ell, t)
        num = num + inner.shift(t * q)
    return RationalSeries(num, ((q, n),))


@lru_cache(maxsize=None)
def a_laurent(p: int, ell: int, n: int) -> LaurentPolynomial:
    """Universal Laurent weight attached to the zero-entry count ``ell``.

    Depends only on (p, ell, n); every exponent lies in [-p, p-2].
    """
    if n < 2:
        raise InvalidParameters("rank n must be >= 2")
    if not 1 <= p <= n:
        raise InvalidParameters(f"p must lie in 1..{n}")
    if not 0 <= ell <= n:
        raise InvalidParameters(f"ell must lie in 0..{n}")
    coeffs: dict[int, int] = {}
    for j in range(1, p + 1):
        sign = -1 if j % 2 == 0 else 1
        for t in range((p - j) // 2 + 1):
            c_t = binom(n - p + j + 2 * t, t)
            if c_t == 0:
                continue
            for beta in range(p - j - 2 * t + 1):
                c_b = (
                    (1 << (p - j - 2 * t - beta))
                    * binom(n - ell, beta)
                    * binom(ell, p - j - 2 * t - beta)
                )
                if c_b == 0:
                    continue
                for alpha in range(beta + 1):
                    c = sign * c_t * c_b * binom(beta, alpha)
                    if c == 0:
                        continue
                    for i in range(j):
                        e = p - 2 * (j + t + alpha - i)
                        coeffs[e] = coeffs.get(e, 0) + c
    return LaurentPolynomial(coeffs)


def f_rational(L: CongruenceLattice, p: int) -> RationalSeries:
    """Spectrum-encoding series F^p: coefficient k is the multiplicity of the
    (k+1)-st eigenvalue of the p-family on p-forms of the quotient.

    Assembled on the denominator (1-z^2)^(n-1) (1-z^q)^n; the corrective
    monomial cancels exactly against the theta terms, so the numerator has no
    negative exponents.  A surviving negative exponent signals an internal
    inconsistency and raises NegativeOrderTerm.
    """
    n = L.n
    if not 0 <= p <= n - 1:
        raise InvalidParameters(f"p must lie in 0..{n - 1}")
    P = p + 1
    acc = RationalSeries.zero()
    for ell in range(n + 1):
        acc = acc + theta_ell_rational(L, ell) * a_laurent(P, ell, n)
    acc = acc.over_factor(2, n - 1)
    sign = -1 if P % 2 else 1
    series = acc + RationalSeries(LaurentPolynomial.term(sign, -P))
    lo = series.numerator.min_exp()
    if lo is not None and lo < 0:
        raise NegativeOrderTerm(
            f"pole cancellation failed for {L.label()} at p={p}: z^{lo} survives"
        )
    return series


def f_rational_p0_direct(L: CongruenceLattice) -> RationalSeries:
    """Independent closed form of F^0 straight from the theta series:
    (theta / (1-z^2)^(n-1) - 1) / z."""
    base = theta_rational(L).over_factor(2, L.n - 1)
    shifted = (base + RationalSeries(LaurentPolynomial.term(-1, 0))) * LaurentPolynomial.term(1, -1)
    return shifted
