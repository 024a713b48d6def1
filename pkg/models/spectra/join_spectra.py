"""
Join Spectra
Spectra of generalized joins of regular graphs from a small quotient matrix,
and the adjacency / Laplacian spectra of Γ(M2(F)) as a join over its classes

- Adjacency: leftover σ(G_i) minus r_i, plus σ(P + √R A(K) √R)
- Laplacian: leftover N_i + (σ_L(G_i) minus 0), plus σ(Q - √R A(K) √R)
- √R X √R is similar to R X, so both quotients are handled as integer matrices
"""

import logging
from dataclasses import dataclass

import numpy as np

from models.classification.classes import ordered_forms
from models.exact_linalg.numeric import max_abs_difference, numeric_spectrum
from models.graph_builder.builders import build_H, class_family
from models.graph_builder.graph import LOOPS, SIMPLE, Graph, complete_graph, cycle_graph, empty_graph
from models.graph_builder.join import generalized_join
from models.spectra.closed_forms import gamma_fixed_part, gamma_quotient_form
from models.spectra.multiset import certify_spectrum, spectrum_exact
from utils import config
from utils.errors import NotRegular, SizeMismatch

logger = logging.getLogger(__name__)

VARIANTS = ("statement", "proof", "quotient")


@dataclass(frozen=True, eq=False)
class JoinInput:
    K: object
    family: tuple
    regularity: tuple
    orders: tuple
    spectra: tuple
    neighbor_orders: tuple

    @property
    def size(self):
        return len(self.family)


def make_join_input(K, family, spectra=None):
    """Validate regularity and collect r_i, m_i, σ(G_i) and N_i"""
    family = tuple(family)
    if len(family) != K.order:
        raise SizeMismatch(f"K has {K.order} vertices, family has {len(family)} graphs")
    for i, g in enumerate(family):
        if not g.is_regular():
            raise NotRegular(f"family graph {i} is not regular")

    regularity = tuple(int(g.degrees()[0]) if g.order else 0 for g in family)
    orders = tuple(g.order for g in family)
    if spectra is None:
        spectra = tuple(spectrum_exact(g) for g in family)
    adj = np.array(K.adjacency, dtype=np.int64)
    np.fill_diagonal(adj, 0)
    neighbor_orders = tuple(int(v) for v in adj @ np.array(orders, dtype=np.int64))
    return JoinInput(K, family, regularity, orders, tuple(spectra), neighbor_orders)


def _simple_k(inp):
    adj = np.array(inp.K.adjacency, dtype=np.int64)
    np.fill_diagonal(adj, 0)
    return adj


def adjacency_quotient(inp):
    """P + R A(K), similar to P + √R A(K) √R"""
    return np.diag(inp.regularity) + np.diag(inp.orders) @ _simple_k(inp)


def laplacian_quotient(inp):
    """Q - R A(K), similar to Q - √R A(K) √R"""
    return np.diag(inp.neighbor_orders) - np.diag(inp.orders) @ _simple_k(inp)


def symmetric_quotient(inp, laplacian=False):
    root = np.diag(np.sqrt(np.array(inp.orders, dtype=float)))
    middle = root @ _simple_k(inp) @ root
    if laplacian:
        return np.diag(np.array(inp.neighbor_orders, dtype=float)) - middle
    return np.diag(np.array(inp.regularity, dtype=float)) + middle


def join_adjacency_spectrum(inp, candidates=None):
    leftover = None
    for g_spec, r in zip(inp.spectra, inp.regularity):
        if g_spec.total == 0:
            continue
        part = g_spec.remove(r)
        leftover = part if leftover is None else leftover + part
    quotient = spectrum_exact(adjacency_quotient(inp), candidates)
    return quotient if leftover is None else leftover + quotient


def join_laplacian_spectrum(inp, candidates=None):
    leftover = None
    for g, n_i in zip(inp.family, inp.neighbor_orders):
        if g.order == 0:
            continue
        part = spectrum_exact(g.laplacian()).remove(0).shifted(n_i)
        leftover = part if leftover is None else leftover + part
    quotient = spectrum_exact(laplacian_quotient(inp), candidates)
    return quotient if leftover is None else leftover + quotient


# ==== Γ(M2(F)) as the H-join of its class graphs ====
def nilpotent_indicator(spec):
    """Diagonal 0/1 matrix marking the N_k classes in class order"""
    forms = [f for _, f in ordered_forms(spec)]
    return np.diag([1 if f.tag == "N_k" else 0 for f in forms]).astype(np.int64)


def gamma_join_input(spec):
    K = build_H(spec, SIMPLE)
    classes, family = class_family(spec)
    clique = next(g for c, g in zip(classes, family) if c.representative.nilpotent)
    null = next(g for c, g in zip(classes, family) if not c.representative.nilpotent)
    clique_spec, null_spec = spectrum_exact(clique), spectrum_exact(null)
    spectra = [clique_spec if c.representative.nilpotent else null_spec for c in classes]
    return make_join_input(K, family, spectra)


def gamma_spectrum_via_join(spec, variant="quotient"):
    """
    quotient:  class-graph leftovers plus σ(P + n A(H simple))
    statement: fixed part plus σ(T + A(H))
    proof:     fixed part plus n σ(T + A(H))
    """
    n = spec.n
    if variant == "quotient":
        return join_adjacency_spectrum(gamma_join_input(spec), candidates=gamma_quotient_form(n))
    if variant not in VARIANTS:
        raise ValueError(f"unknown variant {variant}")
    H = build_H(spec, LOOPS)
    core = spectrum_exact(nilpotent_indicator(spec) + H.adjacency)
    if variant == "proof":
        core = core.scaled(n)
    return gamma_fixed_part(n) + core


def gamma_laplacian_via_join(spec):
    return join_laplacian_spectrum(gamma_join_input(spec))


def variant_matches(gamma, multiset, seed=None):
    """(matches, method) of a multiset against A(Γ): nullity if exact, eigh otherwise"""
    if multiset.is_exact:
        report = certify_spectrum(gamma.adjacency, multiset, seed)
        return report["matches"], report["method"]
    gap = max_abs_difference(numeric_spectrum(gamma.adjacency), multiset.to_floats())
    return gap <= config.NUMERIC_TOL * max(gamma.order, 1), "numeric"


def join_variants(spec, gamma, seed=None):
    """{variant: {'matches', 'method', 'spectrum'}} for all three formulations"""
    out = {}
    for variant in VARIANTS:
        ms = gamma_spectrum_via_join(spec, variant)
        matches, method = variant_matches(gamma, ms, seed)
        out[variant] = {"matches": bool(matches), "method": method, "spectrum": str(ms)}
        logger.debug("variant %s over GF(%d): %s", variant, spec.order, matches)
    return out


# ==== Randomised oracle ====
def random_regular_family_member(rng, tag, max_order=4):
    m = int(rng.integers(1, max_order + 1))
    labels = [(tag, v) for v in range(m)]
    kind = int(rng.integers(0, 3))
    if kind == 0:
        return complete_graph(labels)
    if kind == 1:
        return empty_graph(labels)
    return cycle_graph(labels)


def random_join_trial(rng, max_k=4, max_order=4):
    """(adjacency gap, Laplacian gap) between the join formulas and direct eigensolves"""
    k = int(rng.integers(1, max_k + 1))
    upper = np.triu(rng.integers(0, 2, size=(k, k)), 1)
    K = Graph(tuple(range(k)), upper + upper.T)
    family = [random_regular_family_member(rng, i, max_order) for i in range(k)]

    inp = make_join_input(K, family)
    joined = generalized_join(K, family)
    adj_gap = max_abs_difference(numeric_spectrum(joined.adjacency), join_adjacency_spectrum(inp).to_floats())
    lap_gap = max_abs_difference(numeric_spectrum(joined.laplacian()), join_laplacian_spectrum(inp).to_floats())
    return adj_gap, lap_gap
