"""Self-check battery wiring the independent computation routes against each
other at a configurable scale.  Used by the ``verify`` CLI subcommand."""

from __future__ import annotations

import random
from dataclasses import dataclass

from . import _kernels
from .errors import LenspecError
from .genfun import a_laurent, f_rational, f_rational_p0_direct, theta_ell_rational, theta_rational
from .lattice import CongruenceLattice, lattice_from_lens, torus_subgroup
from .oracle import oracle_weight_multiplicity, weyl_dimension
from .polyseries import LaurentPolynomial, RationalSeries, binom
from .weights import RepIndex, _class_multiplicity, invariant_dimension
from .spectrum import spectrum_table


@dataclass(frozen=True)
class CheckResult:
    name: str
    ok: bool
    detail: str


def _sample_lattices(max_n: int, qmax: int) -> list[CongruenceLattice]:
    samples = [lattice_from_lens(1, (0, 0)), lattice_from_lens(4, (1, 1)), lattice_from_lens(4, (1, 2))]
    if qmax >= 7:
        samples.append(lattice_from_lens(7, (1, 2)))
    if qmax >= 8:
        samples.append(lattice_from_lens(8, (1, 3)))
    if max_n >= 3:
        samples.append(lattice_from_lens(1, (0, 0, 0)))
        samples.append(lattice_from_lens(min(qmax, 11), (1, 2, 3)))
        samples.append(lattice_from_lens(4, (1, 2, 2)))
        # a genuinely non-cyclic group
        samples.append(torus_subgroup(3, [(2, (1, 1, 0)), (2, (0, 1, 1))]).lattice())
    return samples


def _feasible_classes(n: int, max_norm: int):
    for norm in range(max_norm + 1):
        for zeros in range(n + 1):
            if norm == 0 and zeros != n:
                continue
            if norm > 0 and (zeros == n or norm < n - zeros):
                continue
            yield norm, zeros


def _class_representative(n: int, norm: int, zeros: int) -> tuple[int, ...]:
    nonzeros = n - zeros
    if nonzeros == 0:
        return (0,) * n
    return (norm - (nonzeros - 1),) + (1,) * (nonzeros - 1) + (0,) * zeros


def _class_size(n: int, norm: int, zeros: int) -> int:
    if norm == 0:
        return 1 if zeros == n else 0
    nonzeros = n - zeros
    if nonzeros == 0:
        return 0
    return binom(n, zeros) * (1 << nonzeros) * binom(norm - 1, nonzeros - 1)


def _family_dimension(k: int, p: int, n: int) -> int:
    dim = weyl_dimension((k + 1,) + (1,) * (p - 1) + (0,) * (n - p), n)
    if p == n:
        dim += weyl_dimension((k + 1,) + (1,) * (n - 2) + (-1,), n)
    return dim


def compositions_count(total: int, parts: int) -> int:
    """Weak compositions of ``total`` into ``parts`` parts; 1 iff total = 0
    when there are no parts."""
    if parts == 0:
        return 1 if total == 0 else 0
    return binom(total + parts - 1, parts - 1)


def convolution_rhs(L: CongruenceLattice, a: int, r: int, ell: int) -> int:
    """Shell count reconstructed from the box table by unfolding periodicity."""
    n, q = L.n, L.exponent
    total = 0
    for s in range(n - ell + 1):
        inner = 0
        for t in range(s, a + 1):
            inner += compositions_count(t - s, n - ell) * L.reduced_count(
                (a - t) * q + r, ell + s
            )
        total += (1 << s) * binom(ell + s, s) * inner
    return total


def run_checks(max_n: int = 3, kmax: int = 6, qmax: int = 11, seed: int = 0) -> list[CheckResult]:
    """Run every cross-route identity at the given scale."""
    results = []
    rng = random.Random(seed)

    def record(name, fn):
        try:
            detail = fn()
            results.append(CheckResult(name, True, detail))
        except LenspecError as exc:  # configuration errors count as failures
            results.append(CheckResult(name, False, str(exc)))
        except AssertionError as exc:
            results.append(CheckResult(name, False, str(exc) or "assertion failed"))

    def binom_convention():
        import math

        for b in range(31):
            for a in range(b + 1):
                assert binom(b, a) == math.factorial(b) // (
                    math.factorial(a) * math.factorial(b - a)
                )
        assert binom(1, 3) == 0 and binom(4, -1) == 0
        return "0 <= a <= b <= 30 plus out-of-range conventions"

    record("binom-convention", binom_convention)

    def ring_axioms():
        def rand_poly():
            return LaurentPolynomial(
                {rng.randint(-4, 4): rng.randint(-9, 9) for _ in range(4)}
            )

        for _ in range(200):
            f, g, h = rand_poly(), rand_poly(), rand_poly()
            assert (f + g) + h == f + (g + h)
            assert f * (g + h) == f * g + f * h
            assert (f * g) * h == f * (g * h)
            assert f * g == g * f
        return "200 random triples"

    record("laurent-ring-axioms", ring_axioms)

    def series_consistency():
        one = RationalSeries(LaurentPolynomial.one(), ((1, 3),))
        assert one.expand(3) == [1, 3, 6, 10]
        for _ in range(40):
            num = LaurentPolynomial({rng.randint(0, 4): rng.randint(-5, 5) for _ in range(3)})
            fac = tuple((rng.randint(1, 3), rng.randint(1, 2)) for _ in range(2))
            r1 = RationalSeries(num, fac)
            extra = rng.randint(1, 3)
            r2 = RationalSeries(num * LaurentPolynomial({0: 1, extra: -1}), fac + ((extra, 1),))
            assert r1 == r2
            assert r1.expand(50) == r2.expand(50)
        return "equality implies identical order-50 expansions"

    record("series-expand-equal", series_consistency)

    def closed_form_vs_oracle():
        checked = 0
        for n in range(2, max_n + 1):
            for p in range(1, n + 1):
                for k in range(kmax + 1):
                    for norm, zeros in _feasible_classes(n, k + p + 2):
                        mu = _class_representative(n, norm, zeros)
                        lhs = _class_multiplicity(n, k, p, norm, zeros)
                        rhs = oracle_weight_multiplicity(k, p, mu, n)
                        assert lhs == rhs, (n, k, p, norm, zeros, lhs, rhs)
                        checked += 1
        return f"{checked} classes, n <= {max_n}, k <= {kmax}"

    record("multiplicity-closed-form", closed_form_vs_oracle)

    def dimension_sums():
        checked = 0
        for n in range(2, max_n + 1):
            for p in range(1, n + 1):
                for k in range(kmax + 1):
                    total = 0
                    for norm, zeros in _feasible_classes(n, k + p):
                        total += _class_size(n, norm, zeros) * _class_multiplicity(
                            n, k, p, norm, zeros
                        )
                    assert total == _family_dimension(k, p, n), (n, k, p)
                    checked += 1
        return f"{checked} representations"

    record("dimension-sums", dimension_sums)

    lattices = _sample_lattices(max_n, qmax)

    def theta_vs_shells():
        for L in lattices:
            top = 3 * L.exponent
            table = L.shell_table(top)
            for ell in range(L.n + 1):
                got = theta_ell_rational(L, ell).expand(top)
                assert got == [int(table[k, ell]) for k in range(top + 1)], (L.label(), ell)
            total = theta_rational(L)
            summed = RationalSeries.zero()
            for ell in range(L.n + 1):
                summed = summed + theta_ell_rational(L, ell)
            assert total == summed, L.label()
        return f"{len(lattices)} lattices to order 3q"

    record("theta-rational", theta_vs_shells)

    def convolution():
        for L in lattices:
            q = L.exponent
            table = L.shell_table(3 * q + q)
            for a in range(4):
                for r in range(q):
                    for ell in range(L.n + 1):
                        lhs = int(table[a * q + r, ell])
                        assert lhs == convolution_rhs(L, a, r, ell), (L.label(), a, r, ell)
        return f"{len(lattices)} lattices, a <= 3"

    record("reduced-convolution", convolution)

    def central_identity():
        order = 20
        for L in lattices:
            for p in range(1, L.n + 1):
                got = f_rational(L, p - 1).expand(order)
                want = [
                    invariant_dimension(L, RepIndex(k=k, p=p, n=L.n))
                    for k in range(order + 1)
                ]
                assert got == want, (L.label(), p)
        return f"{len(lattices)} lattices to order 20"

    record("central-identity", central_identity)

    def f0_closed_form():
        for L in lattices:
            assert f_rational(L, 0) == f_rational_p0_direct(L), L.label()
        return f"{len(lattices)} lattices"

    record("zero-form-closed-form", f0_closed_form)

    def degree_window():
        for n in range(2, max(max_n, 2) + 1):
            for p in range(1, n + 1):
                for ell in range(n + 1):
                    poly = a_laurent(p, ell, n)
                    if poly.is_zero():
                        continue
                    assert poly.min_exp() >= -p and poly.max_exp() <= p - 2, (p, ell, n)
        return f"exponents within [-p, p-2] for n <= {max_n}"

    record("laurent-weight-degrees", degree_window)

    def sphere():
        table = spectrum_table(lattice_from_lens(1, (0, 0)), 0, 20)
        want = [(k * (k + 2), (k + 1) ** 2) for k in range(21)]
        got = [(e.eigenvalue, e.multiplicity) for e in table.entries]
        assert got == want
        return "3-sphere functions to k = 20"

    record("sphere-spectrum", sphere)

    results.append(
        CheckResult("kernel-backend", True, f"counting kernels on {_kernels.backend_name()}")
    )
    return results
