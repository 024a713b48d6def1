"""
Zero-Divisor Graph Builders
Γ(M2(F)), the class graph H and the class-induced graphs

- Adjacency: xy = 0 or yx = 0
- Products of class members reduce to products of representatives:
  (a r)(b s) = ab (r s), so Γ is H expanded over the scalar orbits
"""

import logging

import numpy as np

from models.classification.classes import all_classes, ordered_forms
from models.classification.forms import canonical_form
from models.finite_field.field import element_str
from models.graph_builder.graph import LOOPS, SIMPLE, Graph, complete_graph, empty_graph
from models.matrix_ring.mat2 import mat_mul, zero_divisors

logger = logging.getLogger(__name__)


def representative_zero_table(forms, spec):
    """Z[i, j] = 1 iff rep_i * rep_j = 0"""
    reps = [f.materialize(spec) for f in forms]
    k = len(reps)
    table = np.zeros((k, k), dtype=np.int64)
    for i, x in enumerate(reps):
        for j, y in enumerate(reps):
            table[i, j] = int(mat_mul(x, y, spec).is_zero())
    return table


def build_H(spec, policy=LOOPS):
    """Graph on the class representatives in class order"""
    forms = [f for _, f in ordered_forms(spec)]
    zero = representative_zero_table(forms, spec)
    adj = np.maximum(zero, zero.T)
    if policy == SIMPLE:
        np.fill_diagonal(adj, 0)
    return Graph(tuple(forms), adj, policy)


def build_gamma(spec):
    """Simple zero-divisor graph on Z(M2(F)), vertices in lexicographic order"""
    vertices = zero_divisors(spec)
    classes = all_classes(spec)
    forms = [c.representative for c in classes]
    zero = representative_zero_table(forms, spec)
    cls_adj = np.maximum(zero, zero.T)

    class_of = {}
    for ci, cls in enumerate(classes):
        for m in cls.members:
            class_of[m] = ci
    idx = np.array([class_of[v] for v in vertices], dtype=np.int64)

    adj = cls_adj[np.ix_(idx, idx)].copy()
    np.fill_diagonal(adj, 0)
    logger.debug("Γ over GF(%d): %d vertices, %d edges", spec.order, len(vertices), int(adj.sum()) // 2)
    return Graph(vertices, adj, SIMPLE)


def class_induced_graph(cls):
    """K_n on a nilpotent class, the null graph on an idempotent class"""
    if cls.representative.nilpotent:
        return complete_graph(cls.members)
    return empty_graph(cls.members)


def class_family(spec):
    """(classes, class-induced graphs) in class order"""
    classes = all_classes(spec)
    return classes, [class_induced_graph(c) for c in classes]


def vertex_label(x, spec):
    """'scalar*REP' for a zero-divisor, e.g. '2*E_sub(1)'"""
    scalar, form = canonical_form(x, spec)
    return f"{element_str(scalar, spec)}*{form.label(spec)}"


def graph_labels(graph, spec):
    """Printable labels for either Γ (matrices) or H-type graphs (forms)"""
    out = []
    for label in graph.labels:
        if hasattr(label, "materialize"):
            out.append(label.label(spec))
        else:
            out.append(vertex_label(label, spec))
    return out
