import random
from fractions import Fraction as F

import pytest

from binforms import (
    DimensionMismatchError,
    OddDegreeError,
    RankOutOfRangeError,
    SymMatrix,
    catalecticant,
    catalecticant_value,
    hankel,
    inertia,
    inner_product,
    is_psd,
    kernel_basis,
    parse_form,
    substitute,
    width,
)
from binforms.quadforms import inertia_from_charpoly, square_linear_combo


def random_symmetric(rng, n, bound=6):
    entries = [[F(0)] * n for _ in range(n)]
    for i in range(n):
        for j in range(i, n):
            v = F(rng.randint(-bound, bound), rng.randint(1, 3))
            entries[i][j] = entries[j][i] = v
    return SymMatrix(tuple(tuple(row) for row in entries))


def random_invertible(rng, n):
    while True:
        rows = [[F(rng.randint(-3, 3)) for _ in range(n)] for _ in range(n)]
        if _det(rows) != 0:
            return rows


def _det(rows):
    n = len(rows)
    m = [row[:] for row in rows]
    det = F(1)
    for c in range(n):
        piv = next((i for i in range(c, n) if m[i][c] != 0), None)
        if piv is None:
            return F(0)
        if piv != c:
            m[c], m[piv] = m[piv], m[c]
            det = -det
        det *= m[c][c]
        for i in range(c + 1, n):
            f = m[i][c] / m[c][c]
            for j in range(c, n):
                m[i][j] -= f * m[c][j]
    return det


def congruent(m: SymMatrix, c):
    n = m.n
    out = [[F(0)] * n for _ in range(n)]
    for i in range(n):
        for j in range(n):
            out[i][j] = sum(
                c[k][i] * m[k, l] * c[l][j] for k in range(n) for l in range(n)
            )
    return SymMatrix(tuple(tuple(row) for row in out))


class TestCatalecticant:
    def test_section3_example(self):
        m = catalecticant(parse_form("8*x^4 + 48*x^2*y^2 - 8*y^4"))
        assert m.entries == ((8, 0, 8), (0, 8, 0), (8, 0, -8))

    def test_family_matrix(self):
        m = catalecticant(parse_form("6*x^5*y + 40*x^3*y^3 + 6*x*y^5"))
        assert m.entries == ((0, 1, 0, 2), (1, 0, 2, 0), (0, 2, 0, 1), (2, 0, 1, 0))

    def test_diagonal(self):
        m = catalecticant(parse_form("x^4 + y^4"))
        assert m.entries == ((1, 0, 0), (0, 0, 0), (0, 0, 1))

    def test_odd_degree_rejected(self):
        with pytest.raises(OddDegreeError):
            catalecticant(parse_form("x^3"))


class TestHankel:
    def test_sextic_two_rows(self):
        m = hankel(parse_form("6*x^5*y + 6*x*y^5"), 5)
        assert m.rows == ((0, 1, 0, 0, 0, 1), (1, 0, 0, 0, 1, 0))

    def test_full_row(self):
        p = parse_form("x^4 + 8*x^3*y + y^4")
        m = hankel(p, 4)
        assert m.rows == (tuple(p.coeffs),)

    def test_middle_matches_catalecticant(self):
        p = parse_form("x^4 + y^4")
        assert hankel(p, 2).rows == catalecticant(p).entries

    def test_range_check(self):
        with pytest.raises(RankOutOfRangeError):
            hankel(parse_form("x^4"), 5)


class TestInertia:
    def test_examples(self):
        assert inertia(catalecticant(parse_form("8*x^4 + 48*x^2*y^2 - 8*y^4"))).pair() == (2, 1)
        q2 = parse_form("6*x^5*y + 40*x^3*y^3 + 6*x*y^5")
        i = inertia(catalecticant(q2))
        assert (i.pos, i.neg, i.null) == (2, 2, 0)
        q1 = parse_form("6*x^5*y + 20*x^3*y^3 + 6*x*y^5")
        i = inertia(catalecticant(q1))
        assert (i.pos, i.neg, i.null) == (1, 1, 2)

    def test_zero_matrix(self):
        z = SymMatrix(((F(0),) * 3,) * 3)
        assert inertia(z).null == 3

    def test_congruence_invariance(self):
        rng = random.Random(31)
        for _ in range(60):
            n = rng.randint(1, 5)
            m = random_symmetric(rng, n)
            c = random_invertible(rng, n)
            assert inertia(congruent(m, c)).pair() == inertia(m).pair()

    def test_charpoly_oracle(self):
        rng = random.Random(37)
        for _ in range(60):
            n = rng.randint(1, 6)
            m = random_symmetric(rng, n)
            a, b = inertia(m), inertia_from_charpoly(m)
            assert (a.pos, a.neg, a.null) == (b.pos, b.neg, b.null)

    def test_substitution_invariance(self):
        rng = random.Random(41)
        for _ in range(15):
            d = rng.choice([4, 6])
            from binforms import BinaryForm

            p = BinaryForm.from_raw(d, [F(rng.randint(-5, 5)) for _ in range(d + 1)])
            if p.is_zero:
                continue
            while True:
                m = tuple(
                    tuple(F(rng.randint(-3, 3)) for _ in range(2)) for _ in range(2)
                )
                if m[0][0] * m[1][1] - m[0][1] * m[1][0] != 0:
                    break
            q = substitute(p, m)
            assert inertia(catalecticant(q)).pair() == inertia(catalecticant(p)).pair()


class TestKernel:
    def test_xy_kernel(self):
        basis = kernel_basis(hankel(parse_form("x^4 + y^4"), 2))
        assert basis == [(0, 1, 0)]

    def test_family_trivial_kernels(self):
        q2 = parse_form("6*x^5*y + 40*x^3*y^3 + 6*x*y^5")
        assert kernel_basis(hankel(q2, 3)) == []
        assert kernel_basis(catalecticant(q2)) == []

    def test_identity_kernel_empty(self):
        m = SymMatrix(((F(1), F(0)), (F(0), F(1))))
        assert kernel_basis(m) == []

    def test_kernel_vectors_annihilate(self):
        rng = random.Random(43)
        for _ in range(40):
            rows = [
                [F(rng.randint(-4, 4), rng.randint(1, 2)) for _ in range(rng.randint(2, 6))]
                for _ in range(rng.randint(1, 5))
            ]
            ncols = max(len(r) for r in rows)
            rows = [r + [F(0)] * (ncols - len(r)) for r in rows]
            basis = kernel_basis(rows)
            for vec in basis:
                for row in rows:
                    assert sum(a * b for a, b in zip(row, vec)) == 0
            # rank-nullity
            rank = ncols - len(basis)
            assert 0 <= rank <= min(len(rows), ncols)


class TestWidthPsd:
    def test_circle_powers(self):
        from binforms.families import circle_power

        for s in (1, 2, 3):
            w = width(circle_power(s))
            assert w.rank == s + 1 and w.cone == "p"

    def test_quartic_diagonal(self):
        w = width(parse_form("x^4 + y^4"))
        assert w.rank == 2 and w.cone == "p"

    def test_indefinite(self):
        w = width(parse_form("x^6 - y^6"))
        assert w.cone == "none"
        assert not is_psd(catalecticant(parse_form("x^6 - y^6")))

    def test_negative_cone(self):
        w = width(parse_form("-x^4 - y^4"))
        assert w.cone == "-p"


class TestCatalecticantValue:
    def test_corners(self):
        p = parse_form("x^4 + y^4")
        assert catalecticant_value(p, [1, 0, 0]) == 1
        p2 = parse_form("8*x^4 + 48*x^2*y^2 - 8*y^4")
        assert catalecticant_value(p2, [0, 0, 1]) == -8

    def test_inner_product_oracle(self):
        rng = random.Random(47)
        for _ in range(25):
            d = rng.choice([4, 6])
            s = d // 2
            from binforms import BinaryForm

            p = BinaryForm.from_raw(d, [F(rng.randint(-5, 5)) for _ in range(d + 1)])
            t = [F(rng.randint(-3, 3)) for _ in range(s + 1)]
            assert catalecticant_value(p, t) == inner_product(
                p, square_linear_combo(t, s)
            )

    def test_dimension_check(self):
        with pytest.raises(DimensionMismatchError):
            catalecticant_value(parse_form("x^4"), [1, 2])
