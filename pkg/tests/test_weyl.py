import numpy as np
import pytest
import sympy
from hypothesis import given, strategies as st

from models.finite_field.field import parse_field
from models.spectra.closed_forms import closed_form
from models.spectra.join_spectra import nilpotent_indicator
from models.spectra.multiset import spectrum_exact
from models.spectra.weyl import (
    bounds_partition,
    bounds_table,
    verify_bounds,
    weyl_interval,
    weyl_matrix,
    weyl_soundness_trial,
)
from utils.errors import IndexOutOfRange, OutOfDomain, SizeMismatch


class TestInterval:
    def test_largest_eigenvalue_over_gf3(self, gf3):
        lo, hi = weyl_interval(closed_form("H", 2), spectrum_exact(nilpotent_indicator(gf3)), 1)
        assert (lo, hi) == (7, 8)

    def test_plain_sequences(self):
        lo, hi = weyl_interval([3, 1], [2, 0], 2)
        assert (lo, hi) == (1, 3)
        assert isinstance(lo, sympy.Basic)

    def test_diagonal_sum_is_inside(self):
        a, b = [5, 2, -1], [4, 0, -3]
        total = sorted((x + y for x, y in zip(a, b)), reverse=True)
        for i in range(1, 4):
            lo, hi = weyl_interval(a, b, i)
            assert lo <= total[i - 1] <= hi

    def test_bad_arguments(self):
        with pytest.raises(SizeMismatch):
            weyl_interval([1, 2], [1], 1)
        with pytest.raises(IndexOutOfRange):
            weyl_interval([1, 2], [1, 2], 3)

    def test_soundness_on_random_pairs(self):
        rng = np.random.default_rng(11)
        assert all(weyl_soundness_trial(rng) for _ in range(100))

    def test_surd_spectra(self):
        # H2 at n = 2 opens with 3 + 2*sqrt(2), then 3
        top = closed_form("H2", 2).to_sympy()[:2]
        lo, hi = weyl_interval(top, [0, 0], 1)
        assert sympy.simplify(lo - hi) == 0
        assert sympy.simplify(hi - (3 + 2 * sympy.sqrt(2))) == 0


class TestBoundsTable:
    def test_ten_items(self):
        table = bounds_table(4)
        assert [b.item for b in table] == list(range(1, 11))
        assert table[0].indices == range(1, 2)

    def test_item_five_empty_for_n_two(self):
        assert bounds_table(2)[4].is_empty
        assert not bounds_table(3)[4].is_empty

    @given(st.integers(min_value=2, max_value=30))
    def test_index_ranges_partition(self, n):
        assert bounds_partition(n)

    def test_needs_n_two(self):
        with pytest.raises(OutOfDomain):
            bounds_table(1)

    def test_weyl_matrix(self, gf3):
        M = weyl_matrix(gf3)
        assert M.shape == (16, 16)
        assert int(np.trace(M)) == 4 + 2


class TestVerifyBounds:
    @pytest.mark.parametrize(
        "text",
        ["3", "4", "5", "7", pytest.param("8", marks=pytest.mark.slow), pytest.param("9", marks=pytest.mark.slow)],
    )
    def test_all_items_hold(self, text):
        records = verify_bounds(parse_field(text))
        assert len(records) == 10
        assert [r["item"] for r in records if not r["pass"]] == []

    def test_small_cap_falls_back_to_eigh(self, gf3):
        records = verify_bounds(gf3, cap=4)
        assert {r["method"] for r in records} == {"numeric"}
        assert all(r["pass"] for r in records)

    def test_record_shape(self, gf4):
        record = verify_bounds(gf4)[0]
        assert record["indices"] == [1, 1]
        assert record["expected"] == [4, 10]
        assert 9 < record["computed"][0] <= 10
        assert record["method"] in ("exact", "numeric")
