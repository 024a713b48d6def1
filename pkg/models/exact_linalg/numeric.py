"""
Numeric Symmetric Eigensolver
Cross-check oracle for the exact paths
"""

import logging

import numpy as np

from utils import config
from utils.errors import NonSymmetric

logger = logging.getLogger(__name__)


def numeric_spectrum(A, tol=None):
    """Eigenvalues of a symmetric matrix, descending, with a residual check per pair"""
    A = np.asarray(A, dtype=float)
    if A.size == 0:
        return ()
    if not np.allclose(A, A.T, atol=0.0):
        raise NonSymmetric("numeric_spectrum needs a symmetric matrix")
    tol = config.NUMERIC_TOL if tol is None else tol

    values, vectors = np.linalg.eigh(A)
    scale = max(np.linalg.norm(A, 2), 1.0)
    residual = np.linalg.norm(A @ vectors - vectors * values, axis=0).max()
    if residual > tol * scale:
        logger.warning("eigen residual %.3e exceeds %.1e", residual, tol * scale)
    return tuple(float(v) for v in values[::-1])


def max_abs_difference(xs, ys):
    xs, ys = np.sort(np.asarray(xs, dtype=float)), np.sort(np.asarray(ys, dtype=float))
    if xs.shape != ys.shape:
        return float("inf")
    return float(np.abs(xs - ys).max()) if xs.size else 0.0
