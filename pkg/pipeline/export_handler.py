import logging

from models.finite_field.field import parse_field
from pipeline.spectrum_handler import GRAPHS, build_graph
from utils.errors import EXIT_FAILED_CLAIM, EXIT_OK, EXIT_UNWRITABLE, ShunyaError, error_result
from utils.export import FORMATS, export_graph

logger = logging.getLogger(__name__)


def run_export(field_text, graph_id, fmt, out):
    if graph_id not in GRAPHS:
        return {"error": f"unknown graph {graph_id}", "exit_code": EXIT_FAILED_CLAIM}
    if fmt not in FORMATS:
        return {"error": f"unknown export format {fmt}", "exit_code": EXIT_FAILED_CLAIM}

    try:
        spec = parse_field(field_text)
        graph = build_graph(spec, graph_id)
        path = export_graph(graph, spec, fmt, out)
    except ShunyaError as exc:
        return error_result(exc)
    except OSError as exc:
        logger.error("cannot write %s: %s", out, exc)
        return {"error": str(exc), "error_type": type(exc).__name__, "exit_code": EXIT_UNWRITABLE}

    return {
        "field": spec.canonical(),
        "graph": graph_id,
        "format": fmt,
        "path": path,
        "vertices": graph.order,
        "edges": graph.edge_count(),
        "loops": len(graph.loops()),
        "exit_code": EXIT_OK,
    }
