"""
Multi-Prime Modular Rank
rank over QQ as the max of ranks modulo random 30-bit primes; a prime can only
lower the rank, so the max is wrong only if every prime divides the same minor
"""

import logging

import numpy as np
from sympy import nextprime

from utils import config

logger = logging.getLogger(__name__)


def random_primes(count, seed=None):
    rng = np.random.default_rng(config.DEFAULT_SEED if seed is None else seed)
    primes = []
    while len(primes) < count:
        p = int(nextprime(int(rng.integers(2 ** 29, 2 ** 30 - 2 ** 20))))
        if p not in primes:
            primes.append(p)
    return primes


def rank_mod_p(A, p):
    """Gaussian elimination over GF(p); int64 holds products of residues below 2^30"""
    M = np.mod(np.asarray(A, dtype=np.int64), p)
    rows, cols = M.shape
    r = 0
    for c in range(cols):
        if r == rows:
            break
        nz = np.nonzero(M[r:, c])[0]
        if nz.size == 0:
            continue
        pivot = r + int(nz[0])
        if pivot != r:
            M[[r, pivot], :] = M[[pivot, r], :]
        M[r, :] = (M[r, :] * pow(int(M[r, c]), -1, p)) % p
        below = M[r + 1:, c].copy()
        hit = np.nonzero(below)[0]
        if hit.size:
            M[r + 1 + hit, :] = (M[r + 1 + hit, :] - np.outer(below[hit], M[r, :])) % p
        r += 1
    return r


def rank_modular(A, primes=None, seed=None):
    A = np.asarray(A, dtype=np.int64)
    if A.size == 0:
        return 0
    primes = primes or random_primes(config.MODULAR_PRIMES, seed)
    ranks = [rank_mod_p(A, p) for p in primes]
    logger.debug("modular ranks %s for dimension %s", ranks, A.shape)
    return max(ranks)
