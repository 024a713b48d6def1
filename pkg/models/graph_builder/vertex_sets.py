"""
Vertex Families and the Subgraphs H1-H4
S0 = {M, N, E0, Etop0}; S_j the five classes around a_j; T_j the E_pair classes

- H1: S_1..S_n without their nilpotents        (4n vertices)
- H2: S_0 plus the H1 vertices                  (4n+4)
- H3: S_0..S_n                                  (5n+4)
- H4: all E_pair classes, T_1..T_n              (n(n-1))
"""

from dataclasses import dataclass

from models.classification.classes import ordered_forms
from models.graph_builder.builders import build_H
from models.graph_builder.graph import LOOPS
from utils.errors import EmptySubgraph

SUBGRAPHS = ("H1", "H2", "H3", "H4")


@dataclass(frozen=True)
class VertexSetSpec:
    identifier: str
    members: tuple

    @property
    def size(self):
        return len(self.members)


def vertex_sets(spec):
    """S0, S1..Sn, T1..Tn in class order; T_j is empty when n = 1"""
    grouped = {}
    for block, form in ordered_forms(spec):
        grouped.setdefault(block, []).append(form)
    ids = ["S0"] + [f"S{j}" for j in range(1, spec.n + 1)] + [f"T{j}" for j in range(1, spec.n + 1)]
    return [VertexSetSpec(i, tuple(grouped.get(i, ()))) for i in ids]


def subgraph_vertices(spec, which):
    sets = vertex_sets(spec)
    s0 = sets[0].members
    s_blocks = [vs.members for vs in sets if vs.identifier.startswith("S") and vs.identifier != "S0"]
    t_blocks = [vs.members for vs in sets if vs.identifier.startswith("T")]

    if which == "H1":
        return [f for block in s_blocks for f in block if not f.nilpotent]
    if which == "H2":
        return list(s0) + [f for block in s_blocks for f in block if not f.nilpotent]
    if which == "H3":
        return list(s0) + [f for block in s_blocks for f in block]
    if which == "H4":
        return [f for block in t_blocks for f in block]
    raise ValueError(f"unknown subgraph {which}")


def build_subgraph(spec, which, H=None):
    """Induced subgraph of the loops-allowed H"""
    members = subgraph_vertices(spec, which)
    if not members:
        raise EmptySubgraph(f"{which} is empty over GF({spec.order})")
    if H is None:
        H = build_H(spec, LOOPS)
    return H.induced(H.index_of(f) for f in members)
