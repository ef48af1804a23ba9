import random
from fractions import Fraction as F

import pytest
import sympy

from binforms.errors import ZeroPolynomialError
from binforms.realroots import (
    RealAlgebraic,
    UniPoly,
    count_real_roots,
    deflate_rational_roots,
    isolate_roots,
    rational_roots,
    sign_at,
    scalar_cmp,
    squarefree_part,
)

T = sympy.Symbol("t")


def to_sympy(f: UniPoly):
    return sum(sympy.Rational(c) * T**i for i, c in enumerate(f.coeffs))


def random_poly(rng, degree, bound=6):
    while True:
        cs = [F(rng.randint(-bound, bound)) for _ in range(degree + 1)]
        if cs[-1] != 0:
            return UniPoly(cs)


class TestUniPoly:
    def test_arithmetic(self):
        f = UniPoly([1, 2, 3])
        g = UniPoly([0, 1])
        assert (f * g).coeffs == (0, 1, 2, 3)
        assert (f + g).coeffs == (1, 3, 3)
        assert f(F(2)) == 1 + 4 + 12

    def test_divmod_exact(self):
        f = UniPoly([-1, 0, 1])  # t^2 - 1
        g = UniPoly([-1, 1])  # t - 1
        q, r = f.divmod(g)
        assert r.is_zero and q.coeffs == (1, 1)

    def test_gcd(self):
        f = UniPoly([-1, 0, 1]) * UniPoly([-1, 1])  # (t^2-1)(t-1)
        g = f.gcd(f.derivative())
        assert g.monic().coeffs == (-1, 1)

    def test_zero_rejections(self):
        with pytest.raises(ZeroPolynomialError):
            UniPoly().squarefree_part()
        with pytest.raises(ZeroPolynomialError):
            count_real_roots(UniPoly())


class TestSquarefree:
    def test_power(self):
        assert squarefree_part(UniPoly([0, 0, 0, 0, 1])).coeffs == (0, 1)

    def test_product(self):
        f = UniPoly([-1, 0, 1]) * UniPoly([-1, 1])
        sf = squarefree_part(f)
        assert sf.monic().coeffs == (1, 0, -1)[::-1] or sf.monic() == UniPoly([-1, 0, 1]).monic()

    def test_already_squarefree(self):
        f = UniPoly([1, 0, 1])
        assert squarefree_part(f).monic() == f.monic()

    def test_divides(self):
        rng = random.Random(2)
        for _ in range(20):
            f = random_poly(rng, rng.randint(2, 5))
            g = f.gcd(f.derivative())
            sf = f.squarefree_part()
            prod = sf * g
            # sf * gcd(f, f') is a scalar multiple of f
            q, r = f.divmod(prod)
            assert r.is_zero and q.degree == 0


class TestCounting:
    def test_cofactor_quartic(self):
        f = UniPoly([1, 0, F(-10, 3), 0, 1])
        assert count_real_roots(f) == 4

    def test_definite(self):
        assert count_real_roots(UniPoly([1, 0, 1])) == 0

    def test_interval(self):
        assert count_real_roots(UniPoly([-2, 0, 1]), F(0), F(2)) == 1

    def test_interval_endpoints(self):
        f = UniPoly([0, -1, 0, 1])  # t(t-1)(t+1)
        assert count_real_roots(f, F(-1), F(1)) == 3
        assert count_real_roots(f, F(0), F(1)) == 2

    def test_against_sympy(self):
        rng = random.Random(17)
        for _ in range(40):
            f = random_poly(rng, rng.randint(1, 6))
            expected = len(sympy.Poly(to_sympy(f), T).real_roots())
            distinct = len(set(sympy.Poly(to_sympy(f), T).real_roots()))
            assert count_real_roots(f) == distinct


class TestIsolation:
    def test_sqrt2(self):
        f = UniPoly([-2, 0, 1])
        roots = isolate_roots(f)
        assert len(roots) == 2
        assert roots[0].sign() == -1 and roots[1].sign() == 1
        for r in roots:
            assert f(r.lo) * f(r.hi) < 0

    def test_rational_roots_bracketed(self):
        roots = isolate_roots(UniPoly([0, -1, 0, 1]))
        assert len(roots) == 3
        for r, val in zip(roots, (-1, 0, 1)):
            assert r.lo < val < r.hi

    def test_random_products(self):
        rng = random.Random(23)
        for _ in range(15):
            vals = rng.sample(range(-8, 9), rng.randint(2, 5))
            f = UniPoly([1])
            for v in vals:
                f = f * UniPoly([-v, 1])
            roots = isolate_roots(f)
            assert len(roots) == len(vals)
            for r, v in zip(roots, sorted(vals)):
                assert r.lo < v < r.hi
            assert count_real_roots(f) == len(vals)

    def test_refinement_stability(self):
        roots = isolate_roots(UniPoly([-2, 0, 1]))
        pos = roots[1]
        finer = pos.refined(30)
        assert pos.lo <= finer.lo <= finer.hi <= pos.hi
        assert finer.width < F(1, 10**8)
        assert finer == pos


class TestSignAt:
    def test_shared_root(self):
        root2 = isolate_roots(UniPoly([-2, 0, 1]))[1]
        assert sign_at(UniPoly([-2, 0, 1]), root2) == 0

    def test_positive(self):
        root2 = isolate_roots(UniPoly([-2, 0, 1]))[1]
        assert sign_at(UniPoly([0, 1]), root2) == 1

    def test_cube(self):
        root2 = isolate_roots(UniPoly([-2, 0, 1]))[1]
        assert sign_at(UniPoly([-2, 0, 0, 1]), root2) == 1
        assert sign_at(UniPoly([-2, 0, 0, -1]), root2) == -1

    def test_rational_point(self):
        assert sign_at(UniPoly([-2, 1]), F(3)) == 1
        assert sign_at(UniPoly([-2, 1]), F(2)) == 0


class TestComparison:
    def test_cross_poly_equality(self):
        a = RealAlgebraic(UniPoly([-2, 0, 1]), F(1), F(2))
        b = RealAlgebraic(UniPoly([2, 0, -1]) * UniPoly([-1, 1]), F(1, 2), F(10, 7))
        assert a == b

    def test_order(self):
        root2 = RealAlgebraic(UniPoly([-2, 0, 1]), F(1), F(2))
        root3 = RealAlgebraic(UniPoly([-3, 0, 1]), F(1), F(2))
        assert root2 < root3
        assert root2.cmp_rational(F(3, 2)) < 0
        assert root2.cmp_rational(F(7, 5)) > 0

    def test_mixed_scalar_cmp(self):
        root2 = RealAlgebraic(UniPoly([-2, 0, 1]), F(1), F(2))
        assert scalar_cmp(F(1), root2) < 0
        assert scalar_cmp(root2, F(1)) > 0
        assert scalar_cmp(F(2), F(2)) == 0

    def test_comparisons_stable_under_refinement(self):
        a = RealAlgebraic(UniPoly([-2, 0, 1]), F(1), F(2))
        b = RealAlgebraic(UniPoly([-5, 0, 0, 1]), F(1), F(2))  # cbrt(5)
        first = a < b
        assert (a.refined(20) < b.refined(20)) == first


class TestAlgebraicArithmetic:
    def test_negation(self):
        root2 = RealAlgebraic(UniPoly([-2, 0, 1]), F(1), F(2))
        assert (-root2).sign() == -1
        assert -(-root2) == root2

    def test_reciprocal(self):
        root2 = RealAlgebraic(UniPoly([-2, 0, 1]), F(1), F(2))
        half = root2.reciprocal()
        assert half.sign() == 1
        # 1/sqrt(2) squared is 1/2
        assert sign_at(UniPoly([F(-1, 2), 0, 1]), half) == 0

    def test_scaled(self):
        root2 = RealAlgebraic(UniPoly([-2, 0, 1]), F(1), F(2))
        threeroot2 = root2.scaled(F(3))
        assert sign_at(UniPoly([-18, 0, 1]), threeroot2) == 0

    def test_sign_of_zero(self):
        zero_root = isolate_roots(UniPoly([0, -1, 0, 1]))[1]
        assert zero_root.sign() == 0


class TestRationalRoots:
    def test_complete_extraction(self):
        f = UniPoly([1])
        for v in (F(1, 2), F(-3), F(5)):
            f = f * UniPoly([-v, 1])
        f = f * UniPoly([1, 0, 1])  # irreducible factor
        roots = rational_roots(f)
        assert roots == [F(-3), F(1, 2), F(5)]
        rats, cof = deflate_rational_roots(f)
        assert rats == roots and cof.monic() == UniPoly([1, 0, 1]).monic()
