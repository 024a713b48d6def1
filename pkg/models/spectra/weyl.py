"""
Weyl Bounds
Eigenvalue intervals for sums of symmetric matrices, and the ten index-ranged
bounds on the eigenvalues α_1 >= ... >= α_(n+2)^2 of T + A(H)

- Upper: min over j + k = i + 1 of λ_j(A) + λ_k(B)
- Lower: max over l + h = i + d of λ_l(A) + λ_h(B)
"""

import logging
from dataclasses import dataclass

import numpy as np
import sympy

from models.exact_linalg.numeric import numeric_spectrum
from models.graph_builder.builders import build_H
from models.graph_builder.graph import LOOPS
from models.spectra.join_spectra import nilpotent_indicator
from models.spectra.multiset import spectrum_exact
from utils import config
from utils.errors import DimensionTooLarge, IndexOutOfRange, OutOfDomain, SizeMismatch, UnresolvedFactor

logger = logging.getLogger(__name__)


@dataclass(frozen=True)
class EigenBound:
    item: int
    i_lo: int
    i_hi: int
    lower: int
    upper: int

    @property
    def indices(self):
        return range(self.i_lo, self.i_hi + 1)

    @property
    def is_empty(self):
        return self.i_lo > self.i_hi


def _descending(values):
    """Expanded descending sympy numbers from a multiset or a plain sequence"""
    if hasattr(values, "to_sympy"):
        return values.to_sympy()
    return sorted((sympy.sympify(v) for v in values), key=float, reverse=True)


def weyl_interval(spec_a, spec_b, i):
    """(lower, upper) bracketing λ_i(A + B), 1-based i"""
    a, b = _descending(spec_a), _descending(spec_b)
    d = len(a)
    if len(b) != d:
        raise SizeMismatch(f"spectra have sizes {d} and {len(b)}")
    if not 1 <= i <= d:
        raise IndexOutOfRange(f"index {i} outside 1..{d}")
    uppers = [a[j - 1] + b[i - j] for j in range(1, i + 1)]
    lowers = [a[l - 1] + b[i + d - l - 1] for l in range(i, d + 1)]
    return max(lowers, key=float), min(uppers, key=float)


def bounds_table(n):
    """The ten printed bounds; item 5 is empty for n = 2"""
    if n < 2:
        raise OutOfDomain(f"bounds table needs n >= 2, got {n}")
    tri = n * (n + 1) // 2
    d = (n + 2) ** 2
    return [
        EigenBound(1, 1, 1, n + 1, 2 * n + 4),
        EigenBound(2, 2, n + 1, n + 1, n + 2),
        EigenBound(3, n + 2, n + 2, 1, n + 1),
        EigenBound(4, n + 3, 2 * n + 2, 1, 2),
        EigenBound(5, 2 * n + 3, n + 1 + tri, 1, 1),
        EigenBound(6, n + 2 + tri, n + 2 + tri, -1, 1),
        EigenBound(7, n + 3 + tri, 2 * n + 3 + tri, -1, 0),
        EigenBound(8, 2 * n + 4 + tri, d - n - 1, -1, -1),
        EigenBound(9, d - n, d - 1, -(n + 1), -n),
        EigenBound(10, d, d, -(n + 1), -(n + 1)),
    ]


def bounds_partition(n):
    """True iff the non-empty index ranges cover 1..(n+2)^2 exactly once"""
    covered = [i for b in bounds_table(n) for i in b.indices]
    return sorted(covered) == list(range(1, (n + 2) ** 2 + 1))


def weyl_matrix(spec):
    """T + A(H) with loops"""
    return nilpotent_indicator(spec) + build_H(spec, LOOPS).adjacency


def verify_bounds(spec, tol=None, cap=None):
    """Check every bound against the eigenvalues of T + A(H); one record per item"""
    n = spec.n
    tol = config.NUMERIC_TOL if tol is None else tol
    M = weyl_matrix(spec)
    try:
        alphas = spectrum_exact(M, strict=True, cap=cap).to_floats()
        method = "exact"
    except (UnresolvedFactor, DimensionTooLarge) as exc:
        logger.warning("exact spectrum of T + A(H) unavailable (%s), using eigh", exc)
        alphas = list(numeric_spectrum(M))
        method = "numeric"

    records = []
    for bound in bounds_table(n):
        witnessed = [alphas[i - 1] for i in bound.indices]
        ok = all(bound.lower - tol <= a <= bound.upper + tol for a in witnessed)
        records.append({
            "item": bound.item,
            "indices": [bound.i_lo, bound.i_hi],
            "expected": [bound.lower, bound.upper],
            "computed": [round(a, 10) for a in witnessed],
            "method": method,
            "pass": bool(ok),
        })
    return records


def weyl_soundness_trial(rng, max_dim=8):
    """One random symmetric integer pair; True iff every λ_i(A+B) is in its interval"""
    d = int(rng.integers(1, max_dim + 1))
    a = rng.integers(-3, 4, size=(d, d))
    b = rng.integers(-3, 4, size=(d, d))
    a, b = np.triu(a) + np.triu(a, 1).T, np.triu(b) + np.triu(b, 1).T
    la, lb, lab = numeric_spectrum(a), numeric_spectrum(b), numeric_spectrum(a + b)
    slack = 1e-8
    for i in range(1, d + 1):
        lo, hi = weyl_interval(la, lb, i)
        if not float(lo) - slack <= lab[i - 1] <= float(hi) + slack:
            return False
    return True
