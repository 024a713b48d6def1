"""
Generalized Join
Replace vertex i of K by G_i and join G_i completely to G_j for every edge ij of K
"""

import numpy as np

from models.graph_builder.graph import LOOPS, SIMPLE, Graph
from utils.errors import OverlappingFamilies, SizeMismatch


def generalized_join(K, family):
    """The K-join of the family; loops of K are ignored"""
    family = list(family)
    if len(family) != K.order:
        raise SizeMismatch(f"K has {K.order} vertices, family has {len(family)} graphs")

    labels = [label for g in family for label in g.labels]
    if len(set(labels)) != len(labels):
        raise OverlappingFamilies("family vertex sets are not disjoint")

    sizes = [g.order for g in family]
    offsets = np.concatenate([[0], np.cumsum(sizes)]).astype(int)
    total = int(offsets[-1])
    adj = np.zeros((total, total), dtype=np.int64)

    for i, g in enumerate(family):
        lo, hi = offsets[i], offsets[i + 1]
        adj[lo:hi, lo:hi] = g.adjacency
        for j in range(i + 1, K.order):
            if K.adjacency[i, j]:
                adj[lo:hi, offsets[j]:offsets[j + 1]] = 1
                adj[offsets[j]:offsets[j + 1], lo:hi] = 1

    policy = LOOPS if np.diag(adj).any() else SIMPLE
    return Graph(tuple(labels), adj, policy)
