import numpy as np
import pytest
from hypothesis import given, strategies as st

from models.graph_builder.templates import A, B, C, D, L, M, N, assemble, block_matrix, block_templates, h4_upper, v_block
from models.spectra.closed_forms import graph_order


class TestBlocks:
    def test_square_blocks_are_symmetric(self):
        for block in (A, C, D, M, N):
            assert np.array_equal(block, block.T)

    def test_padded_shapes(self):
        assert L.shape == (4, 5) and M.shape == (5, 5) and N.shape == (5, 5)
        assert np.array_equal(L[:, :4], B) and not L[:, 4].any()
        assert M[4].tolist() == [1, 1, 1, 1, 1]
        assert not N[4].any()

    def test_loops_only_at_m_and_n(self):
        assert np.diag(A).tolist() == [1, 1, 0, 0]

    def test_block_matrix(self):
        out = block_matrix(np.eye(2, dtype=np.int64), np.ones((2, 2), dtype=np.int64), 3)
        assert out.shape == (6, 6)
        assert out[:2, :2].tolist() == [[1, 0], [0, 1]]
        assert out[:2, 2:4].tolist() == [[1, 1], [1, 1]]

    def test_v_block(self):
        assert v_block(4, 2, 3).tolist() == [[0, 0, 1], [1, 1, 1], [0, 0, 1]]

    def test_h4_upper_is_strictly_block_upper(self):
        n = 4
        upper = h4_upper(n)
        size = n - 1
        for j in range(n):
            assert not upper[j * size:(j + 1) * size, : (j + 1) * size].any()

    def test_h4_needs_two_blocks(self):
        with pytest.raises(ValueError):
            block_templates(1, "H4")

    def test_unknown_layout(self):
        with pytest.raises(ValueError):
            block_templates(3, "H7")


class TestAssembled:
    @given(st.integers(min_value=2, max_value=9), st.sampled_from(["H1", "H2", "H3", "H4"]))
    def test_assembled_matrix_is_an_adjacency(self, n, which):
        adj = assemble(n, which)
        assert adj.shape == (graph_order(which, n),) * 2
        assert np.array_equal(adj, adj.T)
        assert np.isin(adj, (0, 1)).all()

    @given(st.integers(min_value=1, max_value=9))
    def test_loop_counts(self, n):
        assert np.trace(assemble(n, "H1")) == 0
        assert np.trace(assemble(n, "H2")) == 2
        assert np.trace(assemble(n, "H3")) == n + 2

    @given(st.integers(min_value=2, max_value=9))
    def test_h4_has_no_loops(self, n):
        assert np.trace(assemble(n, "H4")) == 0
