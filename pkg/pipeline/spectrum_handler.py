import logging

from models.exact_linalg.numeric import max_abs_difference, numeric_spectrum
from models.finite_field.field import parse_field
from models.graph_builder.builders import build_gamma, build_H
from models.graph_builder.graph import LOOPS
from models.graph_builder.vertex_sets import build_subgraph
from models.spectra.closed_forms import PRINTED_MIN_N, closed_form, compare_forms, printed_form
from models.spectra.multiset import spectrum_exact
from utils.errors import EXIT_FAILED_CLAIM, EXIT_OK, ShunyaError, error_result

logger = logging.getLogger(__name__)

GRAPHS = ("gamma", "H", "H1", "H2", "H3", "H4")


def build_graph(spec, graph_id):
    if graph_id == "gamma":
        return build_gamma(spec)
    if graph_id == "H":
        return build_H(spec, LOOPS)
    return build_subgraph(spec, graph_id)


def run_spectrum(field_text, graph_id, seed=None, exact_cap=None):
    try:
        spec = parse_field(field_text)
        expected = closed_form(graph_id, spec.n)
        graph = build_graph(spec, graph_id)
        computed = spectrum_exact(graph, candidates=expected, seed=seed, cap=exact_cap)
    except ShunyaError as exc:
        return error_result(exc)

    printed_diff = None
    if graph_id in PRINTED_MIN_N and spec.n >= PRINTED_MIN_N[graph_id]:
        printed_diff = compare_forms(expected, printed_form(graph_id, spec.n))

    residual = max_abs_difference(numeric_spectrum(graph.adjacency), computed.to_floats())
    matches = computed == expected
    if not matches:
        logger.warning("%s over %s differs from its closed form", graph_id, spec.label)
    return {
        "field": spec.canonical(),
        "graph": graph_id,
        "order": graph.order,
        "spectrum": str(computed),
        "multiplicities": computed.as_dict(),
        "closed_form": str(expected),
        "matches_closed_form": matches,
        "method": computed.method,
        "printed_difference": printed_diff,
        "numeric_residual": residual,
        "exit_code": EXIT_OK if matches else EXIT_FAILED_CLAIM,
    }
