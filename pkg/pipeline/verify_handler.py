"""
Verification Suites
Each suite checks one family of claims for a single field and adds claim
records to a ReportGenerator

- counting, classification, oracle, regularity, relations, templates
- spectra, join, blockdet, weyl
"""

import itertools
import logging

import networkx as nx
import numpy as np
import sympy

from models.classification.classes import GL2Oracle, all_classes, derived_pair_count, related
from models.classification.forms import canonical_form
from models.exact_linalg.exact import (
    assemble_blocks,
    block_structured_charpoly,
    block_structured_det,
    char_poly,
    det_exact,
    multiplicity,
)
from models.exact_linalg.numeric import max_abs_difference, numeric_spectrum
from models.finite_field.field import parse_field
from models.graph_builder.builders import build_gamma, build_H, class_family
from models.graph_builder.graph import LOOPS, SIMPLE
from models.graph_builder.join import generalized_join
from models.graph_builder.relations import zero_relation_table
from models.graph_builder.templates import C, D, assemble
from models.graph_builder.vertex_sets import build_subgraph, vertex_sets
from models.matrix_ring.mat2 import is_idempotent, is_nilpotent, line_signature, mat_mul, scalar_mul, zero_divisors
from models.spectra.closed_forms import MIN_N, closed_form, graph_order, printed_form
from models.spectra.join_spectra import (
    join_variants,
    gamma_laplacian_via_join,
    nilpotent_indicator,
    random_join_trial,
)
from models.spectra.multiset import certify_spectrum, spectrum_exact
from models.spectra.weyl import bounds_partition, verify_bounds, weyl_interval, weyl_soundness_trial
from utils import config
from utils.errors import EXIT_FAILED_CLAIM, EXIT_OK, ShunyaError, error_result
from utils.reports import ReportGenerator

logger = logging.getLogger(__name__)

_x = sympy.Symbol("x")
EXAMPLE_POLY = sympy.Poly((_x - 1) * (_x ** 2 - 3 * _x - 8) * (_x + 2) ** 2 * (_x ** 2 - 2) ** 2, _x)
EXAMPLE_PRINTED_EDGES = 14


# ==== Counting and classification ====
def suite_counting(spec, report, rng):
    n = spec.n
    zd = zero_divisors(spec)
    classes = all_classes(spec)
    report.add("counting: |Z| = n(n+2)^2", n * (n + 2) ** 2, len(zd), len(zd) == n * (n + 2) ** 2)
    report.add("counting: class count (n+2)^2", (n + 2) ** 2, len(classes), len(classes) == (n + 2) ** 2)
    sizes = sorted({c.size for c in classes})
    report.add("counting: class size n", [n], sizes, sizes == [n])
    nil = sum(c.representative.nilpotent for c in classes)
    report.add("counting: nilpotent classes n+2", n + 2, nil, nil == n + 2)
    report.add("counting: idempotent classes (n+1)(n+2)", (n + 1) * (n + 2), len(classes) - nil,
               len(classes) - nil == (n + 1) * (n + 2))
    pairs = sum(c.representative.tag == "E_pair" for c in classes)
    report.add("counting: E_pair classes m = n(n-1)", derived_pair_count(spec), pairs, pairs == derived_pair_count(spec))


def suite_classification(spec, report, rng):
    bad_forms, bad_kind = 0, 0
    for x in zero_divisors(spec):
        scalar, form = canonical_form(x, spec)
        rep = form.materialize(spec)
        if scalar_mul(scalar, rep, spec) != x:
            bad_forms += 1
        if form.nilpotent != is_nilpotent(rep, spec) or form.nilpotent == is_idempotent(rep, spec):
            bad_kind += 1
    report.add("classification: scalar * form reproduces every zero-divisor", 0, bad_forms, bad_forms == 0)
    report.add("classification: forms are idempotent or nilpotent as tagged", 0, bad_kind, bad_kind == 0)

    orbit_law = all(
        set(c.members) == {scalar_mul(a, c.members[0], spec) for a in range(1, spec.order)} for c in all_classes(spec)
    )
    report.add("classification: classes are scalar orbits", True, orbit_law, orbit_law)


def suite_oracle(spec, report, rng):
    """Scalar-orbit relation against the GL2 brute force, and adjacency against line signatures"""
    zd = zero_divisors(spec)
    oracle = GL2Oracle(spec)
    if spec.order <= 4:
        pairs = list(itertools.product(zd, repeat=2))
        how = "exhaustive"
    else:
        idx = rng.integers(0, len(zd), size=(config.ORACLE_SAMPLE_PAIRS, 2))
        pairs = [(zd[i], zd[j]) for i, j in idx]
        how = f"{len(pairs)} sampled pairs"
    disagree = sum(related(x, y, spec) != oracle.related(x, y) for x, y in pairs)
    report.add(f"oracle: related agrees with GL2 brute force ({how})", 0, disagree, disagree == 0)

    sig = [line_signature(x, spec) for x in zd]
    wrong = 0
    for (x, sx), (y, sy) in itertools.product(list(zip(zd, sig)), repeat=2):
        if mat_mul(x, y, spec).is_zero() != (sx[1] == sy[0]):
            wrong += 1
    report.add("oracle: xy = 0 iff annihilated line of x is the column line of y", 0, wrong, wrong == 0)


def suite_regularity(spec, report, rng):
    n = spec.n
    H = build_H(spec, LOOPS)
    degrees = sorted(set(H.degrees().tolist()))
    report.add(f"regularity: H is {2 * n + 3}-regular", [2 * n + 3], degrees, degrees == [2 * n + 3], graph="H")

    simple = build_H(spec, SIMPLE)
    nil = [i for i, f in enumerate(simple.labels) if f.nilpotent]
    deg = simple.degrees()
    ok = all(deg[i] == 2 * n + 2 for i in nil) and all(
        deg[i] == 2 * n + 3 for i in range(simple.order) if i not in nil
    )
    report.add("regularity: simple H drops one degree at each nilpotent", True, ok, ok, graph="H")
    report.add("regularity: loops sit exactly at nilpotents", nil, H.loops(), H.loops() == nil, graph="H")


def suite_relations(spec, report, rng):
    records = zero_relation_table(spec)
    for group in sorted({r.group for r in records}):
        rows = [r for r in records if r.group == group]
        failed = [list(r.params) for r in rows if not r.holds]
        report.add(f"relations: group {group:02d} ({rows[0].identity})", 0, len(failed), not failed)


def suite_templates(spec, report, rng):
    n = spec.n
    sets = vertex_sets(spec)
    sizes = {vs.identifier: vs.size for vs in sets}
    ok = sizes["S0"] == 4 and all(sizes[f"S{j}"] == 5 for j in range(1, n + 1)) and sum(sizes.values()) == (n + 2) ** 2
    report.add("templates: vertex families cover every class once", (n + 2) ** 2, sum(sizes.values()), ok)

    H = build_H(spec, LOOPS)
    for which in ("H1", "H2", "H3", "H4"):
        if which == "H4" and n < 2:
            continue
        sub = build_subgraph(spec, which, H)
        report.add(f"templates: |{which}|", graph_order(which, n), sub.order, sub.order == graph_order(which, n),
                   graph=which)
        same = bool(np.array_equal(sub.adjacency, assemble(n, which)))
        report.add(f"templates: A({which}) matches its block layout", True, same, same, graph=which)

    h1 = build_subgraph(spec, "H1", H)
    bip = nx.is_bipartite(h1.to_networkx())
    report.add("templates: H1 is bipartite", True, bip, bip, graph="H1")
    h2_bip = nx.is_bipartite(build_subgraph(spec, "H2", H).to_networkx())
    report.add_discrepancy("printed: H2 is bipartite", True, h2_bip, graph="H2")


# ==== Spectra ====
def suite_spectra(spec, report, rng, seed=None, cap=None):
    n = spec.n
    cap = config.EXACT_CAP if cap is None else cap
    gamma = build_gamma(spec)
    if spec.order == 2:
        computed = sympy.Poly(list(char_poly(gamma.adjacency, cap)), _x)
        report.add("spectra: Γ(M2(GF(2))) characteristic polynomial", str(EXAMPLE_POLY.as_expr()),
                   str(computed.as_expr()), computed == EXAMPLE_POLY, graph="gamma")
        report.add_discrepancy("printed: Γ(M2(GF(2))) edge count", EXAMPLE_PRINTED_EDGES, gamma.edge_count(),
                               graph="gamma")

    H = build_H(spec, LOOPS)
    graphs = {"gamma": gamma, "H": H}
    for which in ("H1", "H2", "H3", "H4"):
        if n >= MIN_N[which]:
            graphs[which] = build_subgraph(spec, which, H)

    for graph_id, graph in graphs.items():
        if n < MIN_N[graph_id]:
            continue
        expected = closed_form(graph_id, n)
        cert = certify_spectrum(graph.adjacency, expected, seed)
        report.add(f"spectra: σ({graph_id}) equals its closed form", expected.as_dict(), cert["observed"],
                   cert["matches"], graph=graph_id, method=cert["method"])

        trace = int(np.trace(graph.adjacency))
        report.add(f"spectra: trace of σ({graph_id}) is the loop count", trace, str(expected.trace()),
                   expected.trace() == trace, graph=graph_id)

        if graph.order <= cap:
            gap = max_abs_difference(numeric_spectrum(graph.adjacency), expected.to_floats())
            report.add(f"spectra: eigh agrees with σ({graph_id})", 0.0, gap,
                       gap <= config.NUMERIC_TOL * max(graph.order, 1), graph=graph_id, method="numeric")

        if graph_id in ("H1", "H2", "H3"):
            printed = printed_form(graph_id, n)
            report.add_discrepancy(f"printed: σ({graph_id})", printed.as_dict(), expected.as_dict(), graph=graph_id)

    if "H1" in graphs:
        sym = closed_form("H1", n).is_symmetric()
        report.add("spectra: σ(H1) symmetric about 0", True, sym, sym, graph="H1")
    if "H2" in graphs:
        report.add_discrepancy("printed: σ(H2) symmetric about 0", True, closed_form("H2", n).is_symmetric(),
                               graph="H2")


def suite_join(spec, report, rng, seed=None, cap=None):
    n = spec.n
    cap = config.EXACT_CAP if cap is None else cap
    gamma = build_gamma(spec)
    _, family = class_family(spec)
    joined = generalized_join(build_H(spec, SIMPLE), family)
    where = {v: i for i, v in enumerate(gamma.labels)}
    perm = [where[v] for v in joined.labels]
    same = bool(np.array_equal(gamma.adjacency[np.ix_(perm, perm)], joined.adjacency))
    report.add("join: H-join of class graphs reproduces Γ", True, same, same, graph="gamma")

    for label, value in ((0, (n + 1) * (n + 2) * (n - 1)), (-1, (n + 2) * (n - 1))):
        got = multiplicity(gamma.adjacency, label, seed)
        report.add(f"join: multiplicity of {label} in σ(Γ)", value, got, got == value, graph="gamma")

    variants = join_variants(spec, gamma, seed)
    report.add("join: class-graph join spectrum equals σ(Γ)", True, variants["quotient"]["matches"],
               variants["quotient"]["matches"], graph="gamma", method=variants["quotient"]["method"])
    for variant in ("statement", "proof"):
        report.add_discrepancy(f"printed: join formula ({variant} form) equals σ(Γ)", True,
                               variants[variant]["matches"], graph="gamma", method=variants[variant]["method"])

    if gamma.order <= cap:
        lap = gamma_laplacian_via_join(spec)
        gap = max_abs_difference(numeric_spectrum(gamma.laplacian()), lap.to_floats())
        report.add("join: Laplacian join spectrum equals σ_L(Γ)", 0.0, gap,
                   gap <= config.NUMERIC_TOL * gamma.order, graph="gamma", method="numeric")

    gaps = [random_join_trial(rng) for _ in range(config.RANDOM_TRIALS)]
    worst = max(max(g) for g in gaps)
    report.add(f"join: {len(gaps)} random joins match direct eigensolves", 0.0, worst, worst <= 1e-8, method="numeric")


def suite_blockdet(spec, report, rng, cap=None):
    cap = config.EXACT_CAP if cap is None else cap
    bad = 0
    for _ in range(config.BLOCKDET_TRIALS):
        size, n = int(rng.integers(1, 4)), int(rng.integers(1, 5))
        Cb = rng.integers(-3, 4, size=(size, size))
        Bb = rng.integers(-3, 4, size=(size, size))
        if block_structured_det(Cb, Bb, n) != det_exact(assemble_blocks(Cb, Bb, n)):
            bad += 1
    report.add(f"blockdet: {config.BLOCKDET_TRIALS} random block determinants", 0, bad, bad == 0)

    n = spec.n
    h1 = build_subgraph(spec, "H1")
    via_blocks = block_structured_charpoly(D, C, n)
    direct = char_poly(h1.adjacency, cap) if h1.order <= cap else via_blocks
    report.add("blockdet: charpoly of H1 from its 4x4 blocks", list(direct), list(via_blocks), direct == via_blocks,
               graph="H1")


def suite_weyl(spec, report, rng, cap=None):
    n = spec.n
    for _ in range(config.RANDOM_TRIALS):
        if not weyl_soundness_trial(rng):
            report.add("weyl: interval contains λ_i(A+B) on random pairs", True, False, False, method="numeric")
            break
    else:
        report.add("weyl: interval contains λ_i(A+B) on random pairs", True, True, True, method="numeric")

    if n < 2:
        logger.info("bounds table needs n >= 2, skipped for %s", spec.label)
        return

    report.add("weyl: bound index ranges partition 1..(n+2)^2", True, bounds_partition(n), bounds_partition(n))
    for record in verify_bounds(spec, cap=cap):
        report.add(f"weyl: bound item {record['item']:02d}", record["expected"], record["computed"], record["pass"],
                   graph="T+A(H)", method=record["method"])

    sigma_h = closed_form("H", n)
    sigma_t = spectrum_exact(nilpotent_indicator(spec))
    lo, hi = weyl_interval(sigma_h, sigma_t, 1)
    report.add_discrepancy("printed: Weyl lower bound for α_1", n + 1, int(lo), graph="T+A(H)")
    inside = n + 1 <= lo and hi <= 2 * n + 4
    report.add("weyl: Weyl interval for α_1 lies inside the printed bound", [n + 1, 2 * n + 4], [str(lo), str(hi)],
               inside, graph="T+A(H)")


SUITES = {
    "counting": suite_counting,
    "classification": suite_classification,
    "oracle": suite_oracle,
    "regularity": suite_regularity,
    "relations": suite_relations,
    "templates": suite_templates,
    "spectra": suite_spectra,
    "join": suite_join,
    "blockdet": suite_blockdet,
    "weyl": suite_weyl,
}
SEEDED = ("spectra", "join")
CAPPED = ("spectra", "join", "blockdet", "weyl")
SCOPES = tuple(SUITES) + ("all",)


def run_verify(field_text, scope="all", seed=None, exact_cap=None):
    seed = config.DEFAULT_SEED if seed is None else seed
    try:
        spec = parse_field(field_text)
    except ShunyaError as exc:
        return error_result(exc)
    if scope not in SCOPES:
        return {"error": f"unknown scope {scope}", "exit_code": EXIT_FAILED_CLAIM}

    report = ReportGenerator(spec.canonical(), seed)
    names = list(SUITES) if scope == "all" else [scope]
    for name in names:
        rng = np.random.default_rng(seed)
        logger.debug("suite %s over %s", name, spec.label)
        try:
            kwargs = {}
            if name in SEEDED:
                kwargs["seed"] = seed
            if name in CAPPED:
                kwargs["cap"] = exact_cap
            SUITES[name](spec, report, rng, **kwargs)
        except ShunyaError as exc:
            report.add(f"{name}: suite ran", "completed", f"{type(exc).__name__}: {exc}", False)

    return {
        "field": spec.canonical(),
        "scope": scope,
        "report": report,
        "summary": report.summary(),
        "exit_code": EXIT_OK if report.ok else EXIT_FAILED_CLAIM,
    }
