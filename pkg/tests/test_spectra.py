import numpy as np
import pytest
from hypothesis import given, strategies as st

from models.exact_linalg.eigenvalue import AlgebraicEigenvalue
from models.exact_linalg.exact import EXACT, NUMERIC
from models.finite_field.field import parse_field
from models.graph_builder.builders import build_gamma, build_H
from models.graph_builder.graph import LOOPS, complete_graph, cycle_graph
from models.graph_builder.templates import assemble
from models.graph_builder.vertex_sets import build_subgraph
from models.spectra.closed_forms import (
    GRAPH_IDS,
    MIN_N,
    closed_form,
    compare_forms,
    gamma_fixed_part,
    graph_order,
    printed_form,
)
from models.spectra.multiset import SpectrumMultiset, certify_spectrum, roots_of_factor, spectrum_exact
from utils.errors import DimensionTooLarge, OutOfDomain, UnresolvedFactor

K3 = complete_graph("abc")


def ms(*pairs):
    return SpectrumMultiset.from_pairs(pairs)


class TestMultiset:
    def test_merges_and_sorts(self):
        spec = ms((1, 2), (3, 1), (1, 1), (0, 0))
        assert spec.entries == ((AlgebraicEigenvalue.rational(3), 1), (AlgebraicEigenvalue.rational(1), 3))
        assert spec.total == 4
        assert str(spec) == "{3, 1^3}"

    def test_negative_multiplicity(self):
        with pytest.raises(ValueError):
            ms((1, -1))

    def test_remove_scale_shift(self):
        spec = ms((2, 1), (-1, 2))
        assert spec.remove(2) == ms((-1, 2))
        assert spec.scaled(3) == ms((6, 1), (-3, 2))
        assert spec.shifted(1) == ms((3, 1), (0, 2))
        with pytest.raises(ValueError):
            spec.remove(5)

    def test_union_and_trace(self):
        a, b = ms((1, 1)), ms((-1, 2))
        assert (a + b).total == 3
        assert (a + b).trace() == -1

    def test_symmetry(self):
        assert ms((1, 2), (-1, 2)).is_symmetric()
        assert not ms((1, 2), (-1, 1)).is_symmetric()

    def test_method_does_not_affect_equality(self):
        assert SpectrumMultiset.from_pairs([(1, 1)], method=NUMERIC) == ms((1, 1))

    def test_roots_of_factor(self):
        assert roots_of_factor((1, -2)) == [AlgebraicEigenvalue.rational(2)]
        assert roots_of_factor((2, -1)) == [AlgebraicEigenvalue(1, 0, 1, 2)]
        assert len(roots_of_factor((1, 0, -2))) == 2
        assert roots_of_factor((1, 0, 0, -2)) is None


class TestSpectrumExact:
    def test_triangle(self):
        assert spectrum_exact(K3) == ms((2, 1), (-1, 2))

    def test_candidates_shortcut(self):
        result = spectrum_exact(K3, candidates=ms((2, 1), (-1, 2)))
        assert result == ms((2, 1), (-1, 2))
        assert result.method == EXACT

    def test_incomplete_candidates_fall_back_to_factoring(self):
        assert spectrum_exact(K3, candidates=ms((2, 1))) == ms((2, 1), (-1, 2))

    def test_cubic_factor_goes_numeric(self):
        # C7 = (x - 2)(x^3 + x^2 - 2x - 1)^2
        c7 = cycle_graph(range(7))
        with pytest.raises(UnresolvedFactor):
            spectrum_exact(c7, strict=True)
        result = spectrum_exact(c7)
        assert result.method == NUMERIC
        assert len(result.numeric) == 6
        expected = sorted((2 * np.cos(2 * np.pi * k / 7) for k in range(7)), reverse=True)
        assert result.to_floats() == pytest.approx(expected)

    def test_cap_is_passed_to_factoring(self):
        with pytest.raises(DimensionTooLarge):
            spectrum_exact(cycle_graph(range(7)), cap=3)
        assert spectrum_exact(K3, cap=3) == ms((2, 1), (-1, 2))

    def test_gamma_over_gf2(self, gf2):
        hi, lo = AlgebraicEigenvalue.quadratic_roots(1, -3, -8)
        r2, m2 = AlgebraicEigenvalue.quadratic_roots(1, 0, -2)
        expected = ms((1, 1), (hi, 1), (lo, 1), (-2, 2), (r2, 2), (m2, 2))
        assert spectrum_exact(build_gamma(gf2)) == expected

    def test_h_over_gf3(self, gf3):
        assert spectrum_exact(build_H(gf3, LOOPS)) == ms((7, 1), (3, 3), (-3, 3), (1, 3), (-1, 6))


class TestCertify:
    def test_matches(self):
        report = certify_spectrum(K3.adjacency, ms((2, 1), (-1, 2)))
        assert report["matches"]
        assert report["observed"] == {"2": 1, "-1": 2}

    def test_short_claim_fails(self):
        assert not certify_spectrum(K3.adjacency, ms((2, 1), (-1, 1)))["matches"]

    def test_wrong_multiplicity_fails(self):
        assert not certify_spectrum(K3.adjacency, ms((2, 2), (-1, 1)))["matches"]


class TestClosedForms:
    @given(st.integers(min_value=1, max_value=40), st.sampled_from(GRAPH_IDS))
    def test_totals_match_orders(self, n, graph_id):
        if n < MIN_N[graph_id]:
            with pytest.raises(OutOfDomain):
                closed_form(graph_id, n)
        else:
            assert closed_form(graph_id, n).total == graph_order(graph_id, n)

    @given(st.integers(min_value=3, max_value=40))
    def test_traces_count_loops(self, n):
        assert closed_form("H", n).trace() == n + 2
        assert closed_form("H1", n).trace() == 0
        assert closed_form("H2", n).trace() == 2
        assert closed_form("H3", n).trace() == n + 2
        assert closed_form("H4", n).trace() == 0
        assert closed_form("gamma", n).trace() == 0

    @given(st.integers(min_value=2, max_value=9), st.sampled_from(["H1", "H2", "H3"]))
    def test_template_spectra(self, n, which):
        assert certify_spectrum(assemble(n, which), closed_form(which, n))["matches"]

    @given(st.integers(min_value=3, max_value=9))
    def test_h4_template_spectrum(self, n):
        assert certify_spectrum(assemble(n, "H4"), closed_form("H4", n))["matches"]

    @pytest.mark.parametrize("text", ["4", "5", "7"])
    def test_built_graphs(self, text):
        spec = parse_field(text)
        H = build_H(spec, LOOPS)
        assert spectrum_exact(H) == closed_form("H", spec.n)
        for which in ("H1", "H2", "H3", "H4"):
            assert spectrum_exact(build_subgraph(spec, which, H)) == closed_form(which, spec.n)

    @pytest.mark.parametrize("text", ["2", "3", "4"])
    def test_gamma_closed_form(self, text):
        spec = parse_field(text)
        assert certify_spectrum(build_gamma(spec).adjacency, closed_form("gamma", spec.n))["matches"]

    def test_fixed_part(self):
        assert gamma_fixed_part(3) == ms((0, 40), (-1, 10))
        assert gamma_fixed_part(1).total == 0

    def test_out_of_domain(self):
        with pytest.raises(OutOfDomain):
            closed_form("H4", 2)
        with pytest.raises(OutOfDomain):
            closed_form("H1", 1)
        with pytest.raises(ValueError):
            closed_form("H9", 3)

    def test_h1_symmetric_h2_not(self):
        assert closed_form("H1", 5).is_symmetric()
        assert not closed_form("H2", 5).is_symmetric()


class TestPrintedForms:
    def test_h1_difference(self):
        assert compare_forms(closed_form("H1", 3), printed_form("H1", 3)) == {
            "4": 1, "1": -2, "0": -2, "-1": -2, "-4": 1,
        }

    def test_h_and_h4_agree(self):
        assert compare_forms(closed_form("H", 4), printed_form("H", 4)) == {}
        assert compare_forms(closed_form("H4", 4), printed_form("H4", 4)) == {}

    @pytest.mark.parametrize("which", ["H1", "H2", "H3"])
    def test_printed_totals_differ_from_orders(self, which):
        assert printed_form(which, 5).total != graph_order(which, 5)

    def test_printed_domain(self):
        with pytest.raises(ValueError):
            printed_form("gamma", 3)
        with pytest.raises(OutOfDomain):
            printed_form("H4", 2)
