"""
Spectrum Multisets
Exact eigenvalue multisets, computed either by nullity certification of
candidate eigenvalues or by factoring the characteristic polynomial

- Rational and quadratic factors resolve exactly
- Higher-degree factors land in a numeric tail (or raise, in strict mode)
"""

import logging
from collections import Counter
from dataclasses import dataclass, field

import numpy as np
import sympy

from models.exact_linalg.eigenvalue import AlgebraicEigenvalue
from models.exact_linalg.exact import EXACT, MODULAR, NUMERIC, char_poly_factors, eigenvalue_multiplicity
from utils.errors import UnresolvedFactor

logger = logging.getLogger(__name__)


@dataclass(frozen=True)
class SpectrumMultiset:
    entries: tuple = ()
    numeric: tuple = ()
    method: str = field(default=EXACT, compare=False)

    @classmethod
    def from_pairs(cls, pairs, numeric=(), method=EXACT):
        """Merge (eigenvalue, multiplicity) pairs; zero multiplicities drop out"""
        counts = Counter()
        for value, mult in pairs:
            if mult < 0:
                raise ValueError(f"negative multiplicity {mult} for {value}")
            if not isinstance(value, AlgebraicEigenvalue):
                value = AlgebraicEigenvalue.rational(value)
            counts[value] += int(mult)
        entries = tuple(sorted(((v, m) for v, m in counts.items() if m > 0), key=lambda e: e[0], reverse=True))
        return cls(entries, tuple(sorted((float(x) for x in numeric), reverse=True)), method)

    @property
    def total(self):
        return sum(m for _, m in self.entries) + len(self.numeric)

    @property
    def is_exact(self):
        return not self.numeric

    def multiplicity(self, value):
        if not isinstance(value, AlgebraicEigenvalue):
            value = AlgebraicEigenvalue.rational(value)
        return dict(self.entries).get(value, 0)

    def exact_values(self):
        """Expanded exact eigenvalues, descending"""
        return [v for v, m in self.entries for _ in range(m)]

    def to_floats(self):
        values = [float(v) for v in self.exact_values()] + list(self.numeric)
        return sorted(values, reverse=True)

    def to_sympy(self):
        """Expanded list of exact sympy numbers; numeric tail as Floats"""
        values = [v.to_sympy() for v in self.exact_values()] + [sympy.Float(x) for x in self.numeric]
        return sorted(values, key=float, reverse=True)

    def trace(self):
        return sympy.expand(sum((v.to_sympy() * m for v, m in self.entries), sympy.Integer(0))) + sum(self.numeric)

    def union(self, other):
        return SpectrumMultiset.from_pairs(
            self.entries + other.entries, self.numeric + other.numeric, _weaker(self.method, other.method)
        )

    __add__ = union

    def scaled(self, k):
        return SpectrumMultiset.from_pairs(
            [(v.scaled(k), m) for v, m in self.entries], [k * x for x in self.numeric], self.method
        )

    def shifted(self, k):
        return SpectrumMultiset.from_pairs(
            [(v.shifted(k), m) for v, m in self.entries], [k + x for x in self.numeric], self.method
        )

    def remove(self, value, count=1):
        """Drop count copies of an eigenvalue that must be present"""
        if not isinstance(value, AlgebraicEigenvalue):
            value = AlgebraicEigenvalue.rational(value)
        have = self.multiplicity(value)
        if have < count:
            raise ValueError(f"{value} occurs {have} times, cannot remove {count}")
        pairs = [(v, m - count if v == value else m) for v, m in self.entries]
        return SpectrumMultiset.from_pairs(pairs, self.numeric, self.method)

    def is_symmetric(self):
        """Symmetric about the origin"""
        return all(self.multiplicity(v.scaled(-1)) == m for v, m in self.entries) and np.allclose(
            sorted(self.numeric), sorted(-x for x in self.numeric)
        )

    def as_dict(self):
        return {str(v): m for v, m in self.entries}

    def __str__(self):
        parts = [f"{v}^{m}" if m > 1 else str(v) for v, m in self.entries]
        parts += [f"~{x:.10g}" for x in self.numeric]
        return "{" + ", ".join(parts) + "}"


def _weaker(a, b):
    order = (EXACT, MODULAR, NUMERIC)
    return max(a, b, key=order.index)


def _matrix_of(G):
    return np.asarray(G.adjacency if hasattr(G, "adjacency") else G, dtype=np.int64)


def roots_of_factor(coeffs):
    """Exact roots of a linear or quadratic integer factor"""
    if len(coeffs) == 2:
        c1, c0 = coeffs
        return [AlgebraicEigenvalue(-c0, 0, 1, c1)]
    if len(coeffs) == 3:
        return list(AlgebraicEigenvalue.quadratic_roots(*coeffs))
    return None


def certify_spectrum(A, claimed, seed=None):
    """
    Compare a claimed multiset with a matrix by nullity counts.
    Returns {'matches', 'observed', 'claimed', 'method'}.
    """
    A = _matrix_of(A)
    pairs, method = _observed_pairs(A, claimed, seed)
    observed = dict(pairs)
    claimed_counts = dict(claimed.entries)
    matches = (
        claimed.is_exact
        and claimed.total == A.shape[0]
        and all(observed.get(v, 0) == m for v, m in claimed_counts.items())
    )
    return {
        "matches": bool(matches),
        "observed": {str(v): m for v, m in sorted(pairs, key=lambda e: e[0], reverse=True)},
        "claimed": claimed.as_dict(),
        "method": method,
    }


def spectrum_exact(G, candidates=None, strict=False, seed=None, cap=None):
    """
    Exact spectrum of an integer matrix or Graph adjacency. Candidate
    eigenvalues are certified by nullity first; if they leave eigenvalues
    unexplained the characteristic polynomial is factored instead.
    """
    A = _matrix_of(G)
    dim = A.shape[0]

    if candidates is not None and candidates.is_exact:
        pairs, method = _observed_pairs(A, candidates, seed)
        found = sum(m for _, m in pairs)
        if found == dim:
            logger.debug("spectrum of dimension %d certified from %d candidates", dim, len(pairs))
            return SpectrumMultiset.from_pairs(pairs, method=method)
        logger.debug("candidates explain %d of %d eigenvalues, factoring", found, dim)

    pairs, tail = [], []
    for coeffs, mult in char_poly_factors(A, cap):
        roots = roots_of_factor(coeffs)
        if roots is not None:
            pairs += [(r, mult) for r in roots]
            continue
        if strict:
            raise UnresolvedFactor(f"irreducible factor of degree {len(coeffs) - 1}")
        logger.warning("degree-%d factor resolved numerically", len(coeffs) - 1)
        tail += [float(np.real(r)) for r in np.roots([float(c) for c in coeffs]) for _ in range(mult)]
    return SpectrumMultiset.from_pairs(pairs, tail, NUMERIC if tail else EXACT)


def _observed_pairs(A, candidates, seed):
    """[(eigenvalue, nullity-certified multiplicity)] over the distinct candidates"""
    out, seen, method = [], set(), EXACT
    for value, _ in candidates.entries:
        if value in seen:
            continue
        mult, m = eigenvalue_multiplicity(A, value, seed)
        method = _weaker(method, m)
        out.append((value, mult))
        seen.add(value)
        if not value.is_rational:
            # conjugates share the nullity of the minimal polynomial
            out.append((value.conjugate(), mult))
            seen.add(value.conjugate())
    return out, method
