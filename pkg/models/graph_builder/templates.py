"""
Block Adjacency Templates
Closed block layouts of A(H1), A(H2), A(H3) and A(H4) in class order

- A: S0 against itself (loops at M and N)
- B: S0 against the four idempotents of one S_j
- C: S_j against S_k, j != k (idempotents only)
- D: S_j against itself (idempotents only)
- L, M, N: B, D and C extended by the nilpotent N_k of each S_j
- V(r, c): (n-1)x(n-1) block with ones in row r and column c
"""

import numpy as np

A = np.array([[1, 0, 1, 1], [0, 1, 1, 1], [1, 1, 0, 1], [1, 1, 1, 0]], dtype=np.int64)
B = np.array([[1, 0, 0, 1], [0, 1, 1, 0], [0, 1, 0, 1], [1, 0, 1, 0]], dtype=np.int64)
C = np.fliplr(np.eye(4, dtype=np.int64))
D = np.array([[0, 0, 1, 1], [0, 0, 1, 1], [1, 1, 0, 0], [1, 1, 0, 0]], dtype=np.int64)


def _pad(block, rows, cols, fill_last=None):
    out = np.zeros((rows, cols), dtype=np.int64)
    out[: block.shape[0], : block.shape[1]] = block
    if fill_last is not None:
        out[-1, :] = fill_last
        out[:, -1] = fill_last
    return out


L = _pad(B, 4, 5)
M = _pad(D, 5, 5, fill_last=1)
N = _pad(C, 5, 5)


def block_matrix(diag, off, n):
    """n x n blocks: diag on the diagonal, off everywhere else"""
    return np.kron(np.eye(n, dtype=np.int64), diag) + np.kron(
        np.ones((n, n), dtype=np.int64) - np.eye(n, dtype=np.int64), off
    )


def v_block(n, row, col):
    """1-based row and column of ones in an (n-1)x(n-1) block"""
    v = np.zeros((n - 1, n - 1), dtype=np.int64)
    v[row - 1, :] = 1
    v[:, col - 1] = 1
    return v


def h4_upper(n):
    """Block upper-triangular L with A(H4) = L + L^t"""
    size = n - 1
    upper = np.zeros((n * size, n * size), dtype=np.int64)
    for j in range(1, n + 1):
        for k in range(j + 1, n + 1):
            upper[(j - 1) * size: j * size, (k - 1) * size: k * size] = v_block(n, k - 1, j)
    return upper


def block_templates(n, which):
    """Named blocks for one subgraph layout"""
    if which == "H1":
        return {"C": C, "D": D}
    if which == "H2":
        return {"A": A, "B": B, "C": C, "D": D}
    if which == "H3":
        return {"A": A, "L": L, "M": M, "N": N}
    if which == "H4":
        if n < 2:
            raise ValueError("H4 needs n >= 2")
        return {"L": h4_upper(n)}
    raise ValueError(f"unknown subgraph {which}")


def assemble(n, which):
    """Full adjacency matrix of H1..H4 from the block layout"""
    t = block_templates(n, which)
    if which == "H1":
        return block_matrix(D, C, n)
    if which == "H2":
        return np.block([[A, np.tile(B, (1, n))], [np.tile(B.T, (n, 1)), block_matrix(D, C, n)]])
    if which == "H3":
        return np.block([[A, np.tile(L, (1, n))], [np.tile(L.T, (n, 1)), block_matrix(M, N, n)]])
    upper = t["L"]
    return upper + upper.T
