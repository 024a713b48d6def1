"""
Graph Export
Edge list (networkx), DOT and Matrix Market (scipy) writers with canonical labels
"""

import logging

import networkx as nx
import scipy.io
import scipy.sparse

from models.graph_builder.builders import graph_labels

logger = logging.getLogger(__name__)

FORMATS = ("edgelist", "dot", "matrixmarket")


def write_edgelist(graph, labels, path):
    g = nx.relabel_nodes(graph.to_networkx(), dict(enumerate(labels)), copy=True)
    nx.write_edgelist(g, path, data=False)


def dot_quote(text):
    """DOT double-quoted string body: backslash and quote escaped"""
    return str(text).replace("\\", "\\\\").replace('"', '\\"')


def write_dot(graph, labels, path, name="G"):
    lines = [f"graph {name} {{"]
    lines += [f'  {i} [label="{dot_quote(label)}"];' for i, label in enumerate(labels)]
    lines += [f"  {i} -- {i};" for i in graph.loops()]
    lines += [f"  {i} -- {j};" for i, j in graph.edges()]
    lines.append("}")
    with open(path, "w", encoding="utf-8") as fh:
        fh.write("\n".join(lines) + "\n")


def write_matrix_market(graph, path):
    """Symmetric coordinate format, 1-indexed"""
    # an open handle keeps mmwrite from appending .mtx to the name
    with open(path, "wb") as fh:
        scipy.io.mmwrite(fh, scipy.sparse.coo_matrix(graph.adjacency), field="integer", symmetry="symmetric")


def export_graph(graph, spec, fmt, path):
    """Write graph to path; OSError propagates for unwritable paths"""
    if fmt not in FORMATS:
        raise ValueError(f"unknown export format {fmt}")
    labels = graph_labels(graph, spec)
    if fmt == "edgelist":
        write_edgelist(graph, labels, path)
    elif fmt == "dot":
        write_dot(graph, labels, path)
    else:
        write_matrix_market(graph, path)
    logger.debug("wrote %s (%s, %d vertices)", path, fmt, graph.order)
    return str(path)
