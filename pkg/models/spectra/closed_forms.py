"""
Closed-Form Spectra
Adjacency spectra of H, H1-H4 and Γ(M2(F)) as functions of n = q - 1

- closed_form: multisets that sum to the graph order and match the built graphs
- printed_form: the published multisets, kept for side-by-side reports
"""

from models.exact_linalg.eigenvalue import AlgebraicEigenvalue
from models.spectra.multiset import SpectrumMultiset
from utils.errors import OutOfDomain

GRAPH_IDS = ("gamma", "H", "H1", "H2", "H3", "H4")

MIN_N = {"gamma": 1, "H": 1, "H1": 2, "H2": 2, "H3": 2, "H4": 3}


def graph_order(graph_id, n):
    return {
        "gamma": n * (n + 2) ** 2,
        "H": (n + 2) ** 2,
        "H1": 4 * n,
        "H2": 4 * n + 4,
        "H3": 5 * n + 4,
        "H4": n * (n - 1),
    }[graph_id]


def _check_domain(graph_id, n):
    if graph_id not in MIN_N:
        raise ValueError(f"unknown graph {graph_id}")
    if n < MIN_N[graph_id]:
        raise OutOfDomain(f"{graph_id} closed form needs n >= {MIN_N[graph_id]}, got {n}")


def _pair(p1, p0, mult):
    """Both roots of x^2 + p1 x + p0 with the same multiplicity"""
    return [(r, mult) for r in AlgebraicEigenvalue.quadratic_roots(1, p1, p0)]


def gamma_fixed_part(n):
    """Eigenvalues contributed by the class graphs: 0 from the null graphs, -1 from the cliques"""
    return SpectrumMultiset.from_pairs([(0, (n + 1) * (n + 2) * (n - 1)), (-1, (n + 2) * (n - 1))])


def gamma_quotient_form(n):
    """Spectrum of the (n+2)^2 quotient matrix (n-1)T' + n A(H simple)"""
    pairs = [
        (n, n * (n + 1) // 2),
        (-n * (n + 1), n + 1),
        (-n, (n + 2) * (n - 1) // 2),
    ]
    pairs += _pair(-(n * n - 1), -n * (n * n + 2 * n - 1), n + 1)
    pairs += _pair(-(2 * n * n + 2 * n - 1), -n * (2 * n * n + 5 * n + 1), 1)
    return SpectrumMultiset.from_pairs(pairs)


def closed_form(graph_id, n):
    _check_domain(graph_id, n)
    if graph_id == "gamma":
        return gamma_fixed_part(n) + gamma_quotient_form(n)
    if graph_id == "H":
        pairs = [
            (2 * n + 3, 1),
            (n + 1, n + 1),
            (-(n + 1), n + 1),
            (1, n * (n + 1) // 2),
            (-1, (n + 1) * (n + 2) // 2),
        ]
    elif graph_id == "H1":
        pairs = [(n + 1, 1), (n - 1, 1), (-(n - 1), 1), (-(n + 1), 1), (1, 2 * n - 2), (-1, 2 * n - 2)]
    elif graph_id == "H2":
        # loops at M and N: trace 2, not symmetric about 0
        pairs = [(n + 1, 1), (-(n + 1), 2), (1, 2 * n - 1), (-1, 2 * n)]
        pairs += _pair(-(n + 4), 3 - n, 1)
    elif graph_id == "H3":
        pairs = [(3, n - 1), (1, n), (-1, 3 * n), (n + 1, 1), (-(n + 1), 2)]
        pairs += _pair(-(n + 6), n + 9, 1)
    else:
        m = n * (n - 3) // 2
        pairs = [(2 * n - 3, 1), (n - 3, n - 1), (-(n - 1), n - 1), (-1, m), (1, m + 1)]
    return SpectrumMultiset.from_pairs(pairs)


PRINTED_MIN_N = {"H": 1, "H1": 2, "H2": 2, "H3": 2, "H4": 3}


def printed_form(graph_id, n):
    """The published multisets; they need not sum to the graph order"""
    if graph_id not in PRINTED_MIN_N:
        raise ValueError(f"no printed spectrum for {graph_id}")
    if n < PRINTED_MIN_N[graph_id]:
        raise OutOfDomain(f"printed {graph_id} spectrum needs n >= {PRINTED_MIN_N[graph_id]}")
    if graph_id in ("H", "H4"):
        return closed_form(graph_id, n)
    if graph_id == "H1":
        pairs = [(n - 1, 1), (n - 3, 1), (1, 2 * n), (-1, 2 * n), (-n + 3, 1), (-n + 1, 1)]
    elif graph_id == "H2":
        pairs = [(n, 1), (-n, 1), (1, 2 * n - 3), (-1, 2 * n - 2)]
        # (n+3 ± sqrt(n^2+10n-7))/2
        pairs += _pair(-(n + 3), 4 - n, 1)
    else:
        pairs = [(n, 1), (-n, 2), (3, n - 2), (1, n - 1), (-1, 3 * n - 2)]
        # (n+5 ± sqrt(n^2+6n-7))/2
        pairs += _pair(-(n + 5), n + 8, 1)
    return SpectrumMultiset.from_pairs(pairs)


def compare_forms(computed, printed):
    """Per-eigenvalue multiplicity differences, computed minus printed"""
    values = {v for v, _ in computed.entries} | {v for v, _ in printed.entries}
    diff = {}
    for v in sorted(values, reverse=True):
        delta = computed.multiplicity(v) - printed.multiplicity(v)
        if delta:
            diff[str(v)] = delta
    return diff
