"""
Labeled Graphs
Vertex labels plus a read-only symmetric 0/1 adjacency matrix

- loop_policy 'simple': zero diagonal
- loop_policy 'loops': diagonal entries mark loops, each counted once in degrees
"""

from dataclasses import dataclass

import networkx as nx
import numpy as np

SIMPLE = "simple"
LOOPS = "loops"
LOOP_POLICIES = (SIMPLE, LOOPS)


@dataclass(frozen=True, eq=False)
class Graph:
    labels: tuple
    adjacency: np.ndarray
    loop_policy: str = SIMPLE

    def __post_init__(self):
        adj = np.array(self.adjacency, dtype=np.int64)
        if adj.ndim != 2 or adj.shape[0] != adj.shape[1] or adj.shape[0] != len(self.labels):
            raise ValueError(f"adjacency shape {adj.shape} does not fit {len(self.labels)} labels")
        if not np.array_equal(adj, adj.T):
            raise ValueError("adjacency must be symmetric")
        if not np.isin(adj, (0, 1)).all():
            raise ValueError("adjacency must be 0/1")
        if self.loop_policy not in LOOP_POLICIES:
            raise ValueError(f"unknown loop policy {self.loop_policy}")
        if self.loop_policy == SIMPLE and np.diag(adj).any():
            raise ValueError("simple graph with a loop")
        adj.setflags(write=False)
        object.__setattr__(self, "labels", tuple(self.labels))
        object.__setattr__(self, "adjacency", adj)

    @property
    def order(self):
        return len(self.labels)

    def degrees(self):
        return self.adjacency.sum(axis=1)

    def is_regular(self):
        deg = self.degrees()
        return bool(deg.size == 0 or (deg == deg[0]).all())

    def loops(self):
        return [i for i in range(self.order) if self.adjacency[i, i]]

    def edges(self):
        """Index pairs i < j; loops are not edges"""
        rows, cols = np.nonzero(np.triu(self.adjacency, k=1))
        return list(zip(rows.tolist(), cols.tolist()))

    def edge_count(self):
        return int(np.triu(self.adjacency, k=1).sum())

    def laplacian(self):
        """D - A with loops ignored"""
        adj = self.adjacency - np.diag(np.diag(self.adjacency))
        return np.diag(adj.sum(axis=1)) - adj

    def induced(self, indices):
        idx = list(indices)
        return Graph(
            tuple(self.labels[i] for i in idx),
            self.adjacency[np.ix_(idx, idx)],
            self.loop_policy,
        )

    def index_of(self, label):
        return self.labels.index(label)

    def same_as(self, other):
        """Labeled equality: same labels in the same order and equal adjacency"""
        return (
            self.labels == other.labels
            and self.loop_policy == other.loop_policy
            and np.array_equal(self.adjacency, other.adjacency)
        )

    def to_networkx(self):
        g = nx.Graph()
        g.add_nodes_from(range(self.order))
        g.add_edges_from(self.edges())
        g.add_edges_from((i, i) for i in self.loops())
        return g


def empty_graph(labels):
    k = len(labels)
    return Graph(tuple(labels), np.zeros((k, k), dtype=np.int64))


def complete_graph(labels):
    k = len(labels)
    return Graph(tuple(labels), np.ones((k, k), dtype=np.int64) - np.eye(k, dtype=np.int64))


def cycle_graph(labels):
    k = len(labels)
    adj = np.zeros((k, k), dtype=np.int64)
    if k >= 3:
        for i in range(k):
            adj[i, (i + 1) % k] = adj[(i + 1) % k, i] = 1
    elif k == 2:
        adj[0, 1] = adj[1, 0] = 1
    return Graph(tuple(labels), adj)
