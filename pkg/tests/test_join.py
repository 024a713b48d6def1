import numpy as np
import pytest

from models.exact_linalg.numeric import max_abs_difference, numeric_spectrum
from models.finite_field.field import parse_field
from models.graph_builder.builders import build_gamma
from models.graph_builder.graph import Graph, complete_graph, cycle_graph, empty_graph
from models.graph_builder.join import generalized_join
from models.spectra.closed_forms import closed_form
from models.spectra.join_spectra import (
    VARIANTS,
    adjacency_quotient,
    join_variants,
    gamma_join_input,
    gamma_laplacian_via_join,
    gamma_spectrum_via_join,
    join_adjacency_spectrum,
    join_laplacian_spectrum,
    laplacian_quotient,
    make_join_input,
    nilpotent_indicator,
    random_join_trial,
    symmetric_quotient,
)
from models.spectra.multiset import SpectrumMultiset
from utils.errors import NotRegular, SizeMismatch

PATH3 = Graph(("a", "b", "c"), np.array([[0, 1, 0], [1, 0, 1], [0, 1, 0]]))


@pytest.fixture
def small_join():
    K = PATH3
    family = [complete_graph(["x1", "x2"]), cycle_graph(["y1", "y2", "y3", "y4"]), empty_graph(["z1", "z2", "z3"])]
    return K, family


class TestJoinInput:
    def test_collects_parameters(self, small_join):
        K, family = small_join
        inp = make_join_input(K, family)
        assert inp.size == 3
        assert inp.regularity == (1, 2, 0)
        assert inp.orders == (2, 4, 3)
        assert inp.neighbor_orders == (4, 5, 4)

    def test_rejects_irregular_member(self):
        K = complete_graph(["u", "v"])
        with pytest.raises(NotRegular):
            make_join_input(K, [PATH3, empty_graph(["z"])])

    def test_rejects_wrong_size(self):
        with pytest.raises(SizeMismatch):
            make_join_input(PATH3, [empty_graph(["z"])])

    def test_quotients(self, small_join):
        inp = make_join_input(*small_join)
        assert adjacency_quotient(inp).tolist() == [[1, 2, 0], [4, 2, 4], [0, 3, 0]]
        assert laplacian_quotient(inp).tolist() == [[4, -2, 0], [-4, 5, -4], [0, -3, 4]]

    @pytest.mark.parametrize("laplacian", [False, True])
    def test_symmetric_quotient_is_similar(self, small_join, laplacian):
        inp = make_join_input(*small_join)
        integer = laplacian_quotient(inp) if laplacian else adjacency_quotient(inp)
        symmetric = symmetric_quotient(inp, laplacian)
        assert np.allclose(symmetric, symmetric.T)
        assert max_abs_difference(numeric_spectrum(symmetric), np.linalg.eigvals(integer).real) < 1e-9


class TestJoinSpectra:
    def test_small_join_against_eigh(self, small_join):
        K, family = small_join
        inp = make_join_input(K, family)
        joined = generalized_join(K, family)
        adj = join_adjacency_spectrum(inp)
        lap = join_laplacian_spectrum(inp)
        assert adj.total == lap.total == joined.order
        assert max_abs_difference(numeric_spectrum(joined.adjacency), adj.to_floats()) < 1e-9
        assert max_abs_difference(numeric_spectrum(joined.laplacian()), lap.to_floats()) < 1e-9

    def test_seeded_random_joins(self):
        rng = np.random.default_rng(20240517)
        for _ in range(100):
            adj_gap, lap_gap = random_join_trial(rng)
            assert adj_gap < 1e-8
            assert lap_gap < 1e-8

    def test_random_trials_are_reproducible(self):
        first = [random_join_trial(np.random.default_rng(5)) for _ in range(3)]
        second = [random_join_trial(np.random.default_rng(5)) for _ in range(3)]
        assert first == second


class TestGammaJoin:
    def test_indicator_marks_n_classes(self, gf4):
        T = nilpotent_indicator(gf4)
        assert T.shape == (25, 25)
        assert int(np.trace(T)) == 3

    def test_join_input_of_gamma(self, gf3):
        inp = gamma_join_input(gf3)
        assert inp.size == 16
        assert set(inp.orders) == {2}
        assert sorted(set(inp.regularity)) == [0, 1]

    @pytest.mark.parametrize("text", ["2", "3", "4"])
    def test_quotient_form_is_the_gamma_spectrum(self, text):
        spec = parse_field(text)
        assert gamma_spectrum_via_join(spec) == closed_form("gamma", spec.n)

    def test_only_the_quotient_form_reproduces_gamma(self, gf3):
        variants = join_variants(gf3, build_gamma(gf3))
        assert set(variants) == set(VARIANTS)
        assert variants["quotient"]["matches"]
        assert not variants["statement"]["matches"]
        assert not variants["proof"]["matches"]

    def test_unknown_variant(self, gf3):
        with pytest.raises(ValueError):
            gamma_spectrum_via_join(gf3, "folklore")

    @pytest.mark.parametrize("text", ["2", "3"])
    def test_laplacian_via_join(self, text):
        spec = parse_field(text)
        gamma = build_gamma(spec)
        lap = gamma_laplacian_via_join(spec)
        assert isinstance(lap, SpectrumMultiset)
        assert max_abs_difference(numeric_spectrum(gamma.laplacian()), lap.to_floats()) < 1e-8
