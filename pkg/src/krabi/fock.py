"""Truncated bosonic ladder operators.

All operators act on the span of the first ``dim`` Fock states
|0>, ..., |dim-1> and are the top-left ``dim x dim`` corner of their
infinite-dimensional matrices. Lowering never leaves the kept subspace,
so products of truncated annihilation operators are exact; it is the
raising direction that feels the cutoff, which surfaces only in the
top-level entry of the commutator [a, a^dag].
"""

from __future__ import annotations

import numpy as np

from .errors import ShapeError
from .linalg import as_square_complex


def _check_dim(dim) -> int:
    if isinstance(dim, bool) or not isinstance(dim, (int, np.integer)):
        raise ShapeError(f"dim must be an integer, got {dim!r}")
    if dim < 2:
        raise ShapeError(f"dim must be at least 2, got {dim}")
    return int(dim)


def annihilation(dim: int) -> np.ndarray:
    """Annihilation operator ``a`` with <n-1|a|n> = sqrt(n)."""
    dim = _check_dim(dim)
    a = np.zeros((dim, dim), dtype=np.complex128)
    ns = np.arange(1, dim)
    a[ns - 1, ns] = np.sqrt(ns)
    return a


def creation(dim: int) -> np.ndarray:
    """Creation operator ``a^dag``, the adjoint of :func:`annihilation`."""
    return np.ascontiguousarray(annihilation(dim).conj().T)


def number(dim: int) -> np.ndarray:
    """Number operator ``a^dag a``, diagonal with entries 0 .. dim-1."""
    dim = _check_dim(dim)
    return np.diag(np.arange(dim, dtype=np.float64)).astype(np.complex128)


def power_k(op, k: int) -> np.ndarray:
    """k-fold matrix product ``op^k`` of a square operator.

    Requires k >= 1 (zero-photon coupling is not a meaningful model and is
    rejected) and dim >= k + 1 so that op^k can act nontrivially.
    """
    if isinstance(k, bool) or not isinstance(k, (int, np.integer)):
        raise ValueError(f"k must be an integer, got {k!r}")
    if k < 1:
        raise ValueError(f"k must be a positive integer, got {k}")
    op = as_square_complex(op, "op")
    if op.shape[0] < k + 1:
        raise ShapeError(f"dim must be at least k + 1 = {k + 1}, got {op.shape[0]}")
    return np.linalg.matrix_power(op, int(k))
