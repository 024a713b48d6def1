"""
Exact Linear Algebra over ZZ / QQ
Characteristic polynomials, ranks, nullities and the block-determinant identity

- Matrices arrive as integer numpy arrays and are lifted to sympy DomainMatrix
- Ranks switch to the multi-prime modular path above MODULAR_THRESHOLD
"""

import logging
import math

import numpy as np
from sympy import QQ, ZZ, Rational
from sympy.polys.densearith import dup_mul, dup_pow
from sympy.polys.matrices import DomainMatrix

from models.exact_linalg.modular import rank_modular
from utils import config
from utils.errors import DimensionTooLarge, ReduciblePolynomial

logger = logging.getLogger(__name__)

EXACT = "exact"
MODULAR = "modular"
NUMERIC = "numeric"


def to_domain(A, domain=ZZ):
    A = np.asarray(A)
    rows = [[domain(int(v)) for v in row] for row in A.tolist()]
    return DomainMatrix(rows, A.shape, domain)


def char_poly(A, cap=None):
    """Monic integer coefficients of det(xI - A), highest degree first"""
    A = np.asarray(A)
    cap = config.EXACT_CAP if cap is None else cap
    if A.shape[0] > cap:
        raise DimensionTooLarge(f"dimension {A.shape[0]} exceeds the exact cap {cap}")
    if A.shape[0] == 0:
        return (1,)
    return tuple(int(c) for c in to_domain(A).charpoly())


def char_poly_factors(A, cap=None):
    """[(factor coefficients, multiplicity)] over ZZ"""
    A = np.asarray(A)
    cap = config.EXACT_CAP if cap is None else cap
    if A.shape[0] > cap:
        raise DimensionTooLarge(f"dimension {A.shape[0]} exceeds the exact cap {cap}")
    return [(tuple(int(c) for c in f), m) for f, m in to_domain(A).charpoly_factor_list()]


def det_exact(A):
    A = np.asarray(A)
    if A.shape[0] == 0:
        return 1
    return int(to_domain(A).det())


def rank_exact(A):
    A = np.asarray(A)
    if A.size == 0:
        return 0
    return int(to_domain(A).convert_to(QQ).rank())


def rank(A, seed=None):
    """(rank, method), exact below MODULAR_THRESHOLD"""
    A = np.asarray(A)
    if A.shape[0] > config.MODULAR_THRESHOLD:
        logger.debug("modular rank for dimension %d", A.shape[0])
        return rank_modular(A, seed=seed), MODULAR
    return rank_exact(A), EXACT


def nullity(A, seed=None):
    r, method = rank(A, seed)
    return np.asarray(A).shape[1] - r, method


def multiplicity(A, value, seed=None):
    """Nullity of A - value*I for a rational value"""
    num, den = _as_fraction(value)
    A = np.asarray(A, dtype=np.int64)
    return nullity(den * A - num * np.eye(A.shape[0], dtype=np.int64), seed)[0]


def surd_pair_multiplicity(A, s, p, seed=None):
    """Nullity of A^2 - sA + pI: combined multiplicity of the conjugate roots of x^2 - sx + p"""
    disc = s * s - 4 * p
    if disc >= 0 and math.isqrt(disc) ** 2 == disc:
        raise ReduciblePolynomial(f"x^2 - {s}x + {p} splits over the rationals")
    A = np.asarray(A, dtype=np.int64)
    poly = A @ A - s * A + p * np.eye(A.shape[0], dtype=np.int64)
    return nullity(poly, seed)[0]


def eigenvalue_multiplicity(A, eig, seed=None):
    """(multiplicity, method) for an AlgebraicEigenvalue; surd pairs split evenly"""
    A = np.asarray(A, dtype=np.int64)
    eye = np.eye(A.shape[0], dtype=np.int64)
    coeffs = eig.minimal_polynomial()
    if len(coeffs) == 2:
        return nullity(coeffs[0] * A + coeffs[1] * eye, seed)
    c2, c1, c0 = coeffs
    both, method = nullity(c2 * (A @ A) + c1 * A + c0 * eye, seed)
    return both // 2, method


def _as_fraction(value):
    if isinstance(value, tuple):
        return int(value[0]), int(value[1])
    frac = Rational(value)
    return int(frac.p), int(frac.q)


# ==== Block-determinant identity ====
def assemble_blocks(C, B, n):
    """n x n block matrix with C on the diagonal and B elsewhere"""
    C, B = np.asarray(C, dtype=np.int64), np.asarray(B, dtype=np.int64)
    eye = np.eye(n, dtype=np.int64)
    return np.kron(eye, C) + np.kron(np.ones((n, n), dtype=np.int64) - eye, B)


def block_structured_det(C, B, n):
    """det(C + (n-1)B) * det(C - B)^(n-1)"""
    if n < 1:
        raise ValueError("n must be at least 1")
    C, B = np.asarray(C, dtype=np.int64), np.asarray(B, dtype=np.int64)
    if C.shape != B.shape:
        raise ValueError(f"block shapes differ: {C.shape} vs {B.shape}")
    return det_exact(C + (n - 1) * B) * det_exact(C - B) ** (n - 1)


def block_structured_charpoly(C, B, n):
    """Characteristic polynomial of assemble_blocks(C, B, n) from two small ones"""
    C, B = np.asarray(C, dtype=np.int64), np.asarray(B, dtype=np.int64)
    first = [ZZ(c) for c in char_poly(C + (n - 1) * B)]
    rest = [ZZ(c) for c in char_poly(C - B)]
    return tuple(int(c) for c in dup_mul(first, dup_pow(rest, n - 1, ZZ), ZZ))
