import math
import random
from fractions import Fraction

import pytest

from quatroots.errors import DegreeTooSmallError, NoConvergence, PairingAmbiguity
from quatroots.numeric import (
    ApproxRoot,
    all_complex_roots,
    exact_residual_bound,
    pair_conjugates,
    sqrt_upper,
)
from quatroots.poly import ComplexPoly, RealPoly
from quatroots.scalar import GaussianRational

x = RealPoly.t()
z = ComplexPoly.t()
ci = GaussianRational(0, 1)


def _planted(rng, deg):
    roots = [GaussianRational(Fraction(rng.randint(-400, 400), rng.randint(1, 40)),
                              Fraction(rng.randint(-400, 400), rng.randint(1, 40)))
             for _ in range(deg)]
    return ComplexPoly.from_roots(roots), roots


def _match(found, planted):
    """Max distance after greedy matching with multiplicities expanded."""
    pool = [complex(r) for r in planted]
    worst = 0.0
    for r in found:
        for _ in range(r.multiplicity_hint):
            d, idx = min((abs(r.value - w), i) for i, w in enumerate(pool))
            worst = max(worst, d)
            pool.pop(idx)
    assert not pool
    return worst


def test_examples():
    roots = all_complex_roots(x**2 + 1)
    assert [r.value for r in roots] == pytest.approx([-1j, 1j], abs=1e-12)
    (r,) = all_complex_roots(z - ci)
    assert r.value == 1j and r.residual_bound == 0.0
    p = (z - ci) * (z - GaussianRational(2, 3))
    assert [r.value for r in all_complex_roots(p)] == pytest.approx([1j, 2 + 3j], abs=1e-10)


def test_multiplicities_are_exact():
    p = (x - 1) ** 3 * (x**2 + 1) ** 2 * (x + 2)
    roots = all_complex_roots(p)
    assert [(round(r.re, 9), round(r.im, 9), r.multiplicity_hint) for r in roots] == [
        (-2, 0, 1), (0, -1, 2), (0, 1, 2), (1, 0, 3)]


def test_planted_roots_recovered():
    rng = random.Random(7)
    for _ in range(60):
        p, planted = _planted(rng, rng.randint(1, 12))
        found = all_complex_roots(p)
        assert _match(found, planted) <= 1e-8 * max(1.0, max(abs(complex(r)) for r in planted))


def test_deterministic():
    rng = random.Random(3)
    p, _ = _planted(rng, 10)
    assert all_complex_roots(p) == all_complex_roots(p)


def test_residual_bound_is_certified():
    rng = random.Random(11)
    p, _ = _planted(rng, 8)
    for r in all_complex_roots(p):
        exact = p(r.as_gaussian()).norm_sq()
        assert Fraction(r.residual_bound) ** 2 >= exact
        assert r.residual_bound == exact_residual_bound(p, r.value)


def test_sqrt_upper():
    for v in (Fraction(2), Fraction(1, 3), Fraction(10**40 + 1), Fraction(0)):
        s = sqrt_upper(v)
        assert Fraction(s) ** 2 >= v
        if v:
            assert Fraction(math.nextafter(s, 0)) ** 2 < v


def test_errors():
    with pytest.raises(DegreeTooSmallError):
        all_complex_roots(RealPoly([3]))
    with pytest.raises(ValueError):
        all_complex_roots(x**2 + 1, tol=0)


def test_no_convergence_keeps_partial():
    p = x**7 - 3 * x + 1
    with pytest.raises(NoConvergence) as info:
        all_complex_roots(p, max_iters=1)
    assert len(info.value.partial) == 7


def test_pair_conjugates_examples():
    pairs, reals = pair_conjugates(all_complex_roots(x**2 + 1), x**2 + 1)
    assert len(pairs) == 1 and not reals
    assert (pairs[0].re, pairs[0].imag_norm_sq) == pytest.approx((0, 1))

    p = (x**2 + 1) * (x**2 - 2 * x + 2)
    pairs, reals = pair_conjugates(all_complex_roots(p), p)
    assert sorted((round(q.re, 9), round(q.imag_norm_sq, 9)) for q in pairs) == [(0, 1), (1, 1)]

    pairs, reals = pair_conjugates(all_complex_roots(x - 1), x - 1)
    assert not pairs and [r.re for r in reals] == [1]


def test_pair_conjugates_ambiguity():
    with pytest.raises(PairingAmbiguity):
        pair_conjugates([ApproxRoot(0.0, 1.0, 0.0)])
    # two candidates equally close to the conjugate of the upper root
    with pytest.raises(PairingAmbiguity):
        pair_conjugates([ApproxRoot(0.0, 1.0, 0.0), ApproxRoot(1e-3, -1.0, 0.0),
                         ApproxRoot(-1e-3, -1.0, 0.0), ApproxRoot(0.0, 2.0, 0.0)])
    with pytest.raises(PairingAmbiguity):
        pair_conjugates([ApproxRoot(0.0, 1.0, 0.0), ApproxRoot(0.5, -1.0, 0.0)])
    with pytest.raises(PairingAmbiguity):
        pair_conjugates(all_complex_roots(x**2 + 1), x**3 + x)
