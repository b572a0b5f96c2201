"""Minimal polynomial, index, group and Drazin inverses, EP detection."""

import random
from fractions import Fraction
from itertools import chain

import pytest
from hypothesis import given

import support
from geninv import (DimensionMismatch, IndexTooLarge, RMatrix, factor_with,
                    group_blocks, drazin_inverse, drazin_onecheck,
                    group_inverse_block, group_inverse_poly, identity,
                    index_of, is_ep, mat_inverse, mat_mul, mat_pow, mat_rank,
                    minimal_polynomial, moore_penrose, poly_at, poly_str,
                    q_polynomial, zeros)
from support import (NILPOTENT_2, rand_index_one_singular, rand_matrix,
                     rand_nilpotent, rand_symmetric_singular, rmatrices)


class TestMinimalPolynomial:
    def test_golden_example(self):
        mu = minimal_polynomial(support.EX1)
        assert mu.coeffs == (Fraction(0), Fraction(-18), Fraction(-15), Fraction(1))
        assert mu.degree == 3
        assert mu.index == 1
        assert str(mu) == "x^3 - 15*x^2 - 18*x"

    def test_identity(self):
        mu = minimal_polynomial(identity(4))
        assert mu.coeffs == (Fraction(-1), Fraction(1))

    def test_zero_matrix(self):
        mu = minimal_polynomial(zeros(3, 3))
        assert mu.coeffs == (Fraction(0), Fraction(1))
        assert mu.index == 1

    def test_non_square(self):
        with pytest.raises(DimensionMismatch):
            minimal_polynomial(zeros(2, 3))

    @given(rmatrices(square=True))
    def test_annihilates_and_is_minimal(self, a):
        mu = minimal_polynomial(a)
        assert poly_at(mu.coeffs, a) == zeros(a.rows, a.rows)
        # independence of lower powers, checked by an independent rank oracle
        vectors = [list(chain.from_iterable(mat_pow(a, d).entries))
                   for d in range(mu.degree)]
        stacked = RMatrix.from_rows(vectors)
        assert mat_rank(stacked) == mu.degree


class TestQPolynomial:
    def test_golden_example(self):
        q = q_polynomial(minimal_polynomial(support.EX1))
        assert q.coeffs == (Fraction(-5, 6), Fraction(1, 18))
        assert str(q) == "1/18*x - 5/6"

    def test_identity_matrix(self):
        # mu = x - 1 gives q = 1, and -1 * (1 - x*1) = x - 1
        q = q_polynomial(minimal_polynomial(identity(3)))
        assert q.coeffs == (Fraction(1),)

    def test_nilpotent(self):
        q = q_polynomial(minimal_polynomial(NILPOTENT_2))
        assert q.coeffs == (Fraction(0),)

    @given(rmatrices(square=True))
    def test_rebuild_identity(self, a):
        mu = minimal_polynomial(a)
        q = q_polynomial(mu)
        # mu(x) = c_k x^k (1 - x q(x)), checked coefficientwise
        ck = mu.coeffs[mu.index]
        rebuilt = [Fraction(0)] * mu.index + [ck] + [-ck * c for c in q.coeffs]
        rebuilt = rebuilt[:mu.degree + 1] + [Fraction(0)] * (mu.degree + 1 - len(rebuilt))
        assert tuple(rebuilt) == mu.coeffs


class TestIndex:
    def test_golden_example(self):
        assert index_of(support.EX1) == 1

    def test_regular(self):
        assert index_of(identity(3)) == 0
        assert index_of(RMatrix.from_rows([[2, 1], [1, 1]])) == 0

    def test_jordan_block(self):
        assert index_of(NILPOTENT_2) == 2

    @given(rmatrices(square=True))
    def test_matches_polynomial_index(self, a):
        assert index_of(a) == minimal_polynomial(a).index


class TestGroupInverse:
    def test_poly_golden_values(self):
        assert group_inverse_poly(support.EX1) == support.EX1_PINV

    def test_poly_identity(self):
        assert group_inverse_poly(identity(3)) == identity(3)

    def test_poly_rejects_high_index(self):
        with pytest.raises(IndexTooLarge):
            group_inverse_poly(NILPOTENT_2)

    def test_block_rejects_high_index(self):
        with pytest.raises(IndexTooLarge):
            group_inverse_block(NILPOTENT_2)

    def test_block_golden_values(self):
        assert group_inverse_block(support.EX1) == support.EX1_PINV

    def test_block_golden_5x5(self):
        assert group_inverse_block(support.EX3) == support.EX3_PINV

    def test_block_regular(self):
        a = RMatrix.from_rows([[2, 1], [1, 1]])
        assert group_inverse_block(a) == mat_inverse(a)

    def test_golden_group_blocks(self):
        f = factor_with(support.EX1, support.EX1_P, support.EX1_Q)
        v = group_blocks(f)
        assert v.v2 == RMatrix.from_rows([[-3], [2]])
        assert v.v3 == RMatrix.from_rows([[1, -2]])
        assert v.v4 == RMatrix.from_rows([[6]])

    def test_zero_matrix(self):
        assert group_inverse_poly(zeros(2, 2)) == zeros(2, 2)
        assert group_inverse_block(zeros(2, 2)) == zeros(2, 2)

    def test_routes_agree_on_random_index_one(self):
        rng = random.Random(21)
        for _ in range(40):
            a = rand_index_one_singular(rng, rng.randint(2, 4))
            assert group_inverse_poly(a) == group_inverse_block(a)

    def test_routes_agree_on_regular_and_zero(self):
        rng = random.Random(26)
        mats = [support.rand_invertible(rng, n) for n in (1, 2, 3, 4)]
        mats += [zeros(n, n) for n in (1, 2, 3)]
        for a in mats:
            assert group_inverse_poly(a) == group_inverse_block(a)

    def test_qa_is_a_one_inverse_at_index_one(self):
        rng = random.Random(22)
        for _ in range(40):
            a = rand_index_one_singular(rng, rng.randint(2, 4))
            qa = poly_at(q_polynomial(minimal_polynomial(a)).coeffs, a)
            assert mat_mul(mat_mul(a, qa), a) == a

    def test_defining_equations(self):
        x = group_inverse_poly(support.EX1)
        a = support.EX1
        assert mat_mul(mat_mul(a, x), a) == a
        assert mat_mul(mat_mul(x, a), x) == x
        assert mat_mul(a, x) == mat_mul(x, a)


class TestDrazin:
    def test_equals_group_at_index_one(self):
        assert drazin_inverse(support.EX1) == group_inverse_poly(support.EX1)

    def test_nilpotent_gives_zero(self):
        assert drazin_inverse(NILPOTENT_2) == zeros(2, 2)

    def test_identity(self):
        assert drazin_inverse(identity(3)) == identity(3)

    def test_defining_equations_on_mixed_corpus(self):
        rng = random.Random(23)
        mats = [rand_matrix(rng, n, n) for n in (1, 2, 2, 3, 3, 4)]
        mats += [rand_nilpotent(rng, n) for n in (2, 3, 4)]
        mats += [rand_index_one_singular(rng, n) for n in (2, 3, 4)]
        for a in mats:
            ad = drazin_inverse(a)
            k = index_of(a)
            assert mat_mul(mat_mul(ad, a), ad) == ad
            assert mat_mul(a, ad) == mat_mul(ad, a)
            ak = mat_pow(a, k)
            assert mat_mul(mat_mul(ak, ad), a) == ak

    def test_onecheck_golden(self):
        assert drazin_onecheck(support.EX1)

    def test_onecheck_jordan_block(self):
        assert not drazin_onecheck(NILPOTENT_2)

    def test_onecheck_regular(self):
        assert drazin_onecheck(RMatrix.from_rows([[2, 1], [1, 1]]))

    @given(rmatrices(square=True, max_dim=4))
    def test_onecheck_matches_index(self, a):
        assert drazin_onecheck(a) == (index_of(a) <= 1)


class TestEP:
    def test_golden_5x5(self):
        assert is_ep(support.EX3)

    def test_golden_3x3(self):
        # its pseudoinverse coincides with its group inverse
        assert is_ep(support.EX1)

    def test_jordan_block_is_not_ep(self):
        # null spaces differ: A kills e2, At kills e1
        assert not is_ep(NILPOTENT_2)

    def test_symmetric_singular_matrices_are_ep(self):
        rng = random.Random(24)
        for _ in range(25):
            a = rand_symmetric_singular(rng, rng.randint(2, 5))
            assert mat_rank(a) < a.rows
            assert is_ep(a)

    def test_ep_inverses_coincide(self):
        rng = random.Random(25)
        for _ in range(15):
            a = rand_symmetric_singular(rng, rng.randint(2, 4))
            mp = moore_penrose(a)
            assert mp == drazin_inverse(a)
            assert mp == group_inverse_poly(a)
            assert mp == group_inverse_block(a)

    @given(rmatrices(square=True, max_dim=4))
    def test_routes_agree(self, a):
        # the cross-check inside is_ep raises if the two routes ever diverge
        is_ep(a)


class TestPolyStr:
    @pytest.mark.parametrize("coeffs,text", [
        ((Fraction(0), Fraction(1)), "x"),
        ((Fraction(-1), Fraction(1)), "x - 1"),
        ((Fraction(0),), "0"),
        ((Fraction(3, 2),), "3/2"),
        ((Fraction(0), Fraction(0), Fraction(-2), Fraction(1)), "x^3 - 2*x^2"),
    ])
    def test_rendering(self, coeffs, text):
        assert poly_str(coeffs) == text
