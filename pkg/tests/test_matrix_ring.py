import itertools

import pytest
from hypothesis import given, strategies as st

from models.finite_field.field import parse_field
from models.matrix_ring.mat2 import (
    IDENTITY,
    ZERO,
    Mat2,
    all_matrices,
    det,
    general_linear_group,
    is_idempotent,
    is_nilpotent,
    is_unit,
    is_zero_divisor,
    line_signature,
    mat_add,
    mat_mul,
    rank,
    scalar_mul,
    trace,
    zero_divisors,
)
from utils.errors import UnsupportedOrder

GF3 = parse_field("3")
GF4 = parse_field("4")

mat_gf3 = st.builds(Mat2, *[st.integers(min_value=0, max_value=2)] * 4)
mat_gf4 = st.builds(Mat2, *[st.integers(min_value=0, max_value=3)] * 4)


class TestArithmetic:
    def test_identity_is_neutral(self, gf5):
        x = Mat2(1, 2, 3, 4)
        assert mat_mul(IDENTITY, x, gf5) == x
        assert mat_mul(x, IDENTITY, gf5) == x
        assert mat_add(x, ZERO, gf5) == x

    def test_square_vanishes_over_gf5(self, gf5):
        x = Mat2(1, 2, 2, 4)
        assert mat_mul(x, x, gf5).is_zero()

    def test_det_trace(self, gf3):
        assert det(Mat2(1, 0, 0, 0), gf3) == 0
        assert det(Mat2(1, 2, 1, 1), gf3) == 2
        assert trace(Mat2(2, 1, 0, 2), gf3) == 1

    def test_scalar_mul(self, gf3):
        assert scalar_mul(2, Mat2(1, 0, 2, 1), gf3) == Mat2(2, 0, 1, 2)

    @given(mat_gf4, mat_gf4, mat_gf4)
    def test_multiplication_is_associative(self, x, y, z):
        assert mat_mul(mat_mul(x, y, GF4), z, GF4) == mat_mul(x, mat_mul(y, z, GF4), GF4)

    @given(mat_gf3, mat_gf3)
    def test_det_is_multiplicative(self, x, y):
        assert det(mat_mul(x, y, GF3), GF3) == (det(x, GF3) * det(y, GF3)) % 3


class TestPredicates:
    def test_named_examples(self, gf3):
        e0 = Mat2(0, 0, 0, 1)
        assert is_idempotent(e0, gf3) and not is_nilpotent(e0, gf3) and is_zero_divisor(e0, gf3)
        assert is_nilpotent(Mat2(0, 1, 0, 0), gf3)
        assert is_unit(IDENTITY, gf3) and not is_zero_divisor(IDENTITY, gf3)
        assert not is_zero_divisor(ZERO, gf3)

    @given(mat_gf3)
    def test_nonzero_is_unit_xor_zero_divisor(self, x):
        if not x.is_zero():
            assert is_unit(x, GF3) != is_zero_divisor(x, GF3)

    @given(mat_gf4)
    def test_nilpotent_means_square_zero(self, x):
        assert is_nilpotent(x, GF4) == (not x.is_zero() and mat_mul(x, x, GF4).is_zero())

    def test_rank(self, gf3):
        assert rank(ZERO, gf3) == 0
        assert rank(Mat2(1, 2, 2, 1), gf3) == 1
        assert rank(IDENTITY, gf3) == 2


class TestEnumeration:
    @pytest.mark.parametrize(
        "text, count",
        [("2", 9), ("3", 32), ("4", 75), ("5", 144), ("7", 384), ("8", 567), ("9", 800)],
    )
    def test_zero_divisor_count(self, text, count):
        spec = parse_field(text)
        assert len(zero_divisors(spec)) == count == spec.n * (spec.n + 2) ** 2

    def test_enumeration_is_lexicographic(self, gf3):
        zd = zero_divisors(gf3)
        assert list(zd) == sorted(zd, key=lambda x: x.entries())
        assert zd[0] == Mat2(0, 0, 0, 1)

    def test_all_matrices(self, gf2):
        assert len(list(all_matrices(gf2))) == 16

    def test_general_linear_group_order(self, gf3):
        q = gf3.order
        assert len(general_linear_group(gf3)) == (q * q - 1) * (q * q - q)

    def test_order_cap(self):
        with pytest.raises(UnsupportedOrder):
            zero_divisors(parse_field("32"))


class TestLineSignature:
    def test_products_vanish_exactly_on_matching_lines(self, small_field):
        zd = zero_divisors(small_field)
        sig = {x: line_signature(x, small_field) for x in zd}
        for x, y in itertools.product(zd, repeat=2):
            assert mat_mul(x, y, small_field).is_zero() == (sig[x][1] == sig[y][0])

    def test_points_at_infinity(self, gf3):
        # column line of [[0,1],[0,0]] is (1, 0), slope 0; it annihilates (1, 0), slope 0
        assert line_signature(Mat2(0, 1, 0, 0), gf3) == (0, 0)
        # [[0,0],[1,0]] has column (0, 1), the point at infinity
        assert line_signature(Mat2(0, 0, 1, 0), gf3) == (gf3.order, gf3.order)
