"""Bipolar vectors, the sign rule, Hebbian training and the storage test.

Weights are exact integers: every entry of ``T`` is a sum of ``+1``/``-1``
products, so nothing here needs a tolerance.
"""

from __future__ import annotations

from typing import Iterable, Sequence

import numpy as np


class DimensionError(ValueError):
    """Inputs whose sizes do not agree, or whose size cannot be known."""


class BipolarError(ValueError):
    """A value that should be +1 or -1 is something else."""


def sgn(x: int) -> int:
    """Return ``+1`` for ``x >= 0`` and ``-1`` otherwise (note ``sgn(0) == +1``)."""
    return 1 if x >= 0 else -1


def sgn_array(x: np.ndarray) -> np.ndarray:
    """Elementwise :func:`sgn` on an integer array."""
    return np.where(np.asarray(x) >= 0, 1, -1).astype(np.int64)


def as_bipolar(bits: Iterable[int]) -> np.ndarray:
    """Validate ``bits`` as a nonempty bipolar vector and return an int64 copy."""
    arr = np.array(list(bits) if not isinstance(bits, np.ndarray) else bits)
    if arr.ndim != 1 or arr.size == 0:
        raise DimensionError("a bipolar vector must be one-dimensional with length >= 1")
    if not np.all((arr == 1) | (arr == -1)):
        bad = [v for v in arr.tolist() if v not in (1, -1)]
        raise BipolarError(f"entries must be +1 or -1, got {bad[0]!r}")
    return arr.astype(np.int64)


def as_memory_set(memories: Iterable[Sequence[int]]) -> np.ndarray:
    """Stack memories into an ``(m, n)`` int64 array, checking shape and values."""
    rows = [as_bipolar(x) for x in memories]
    if not rows:
        raise DimensionError("empty memory set: the number of neurons is unknown")
    n = rows[0].size
    for k, row in enumerate(rows):
        if row.size != n:
            raise DimensionError(
                f"memory {k + 1} has length {row.size}, expected {n}"
            )
    return np.vstack(rows)


def train_hebbian(memories: Iterable[Sequence[int]]) -> np.ndarray:
    """Sum of outer products of the memories with the diagonal zeroed.

    Duplicate memories are counted once per occurrence.
    """
    X = as_memory_set(memories)
    T = X.T @ X
    np.fill_diagonal(T, 0)
    return T


def check_weights(T: np.ndarray) -> np.ndarray:
    T = np.asarray(T)
    if T.ndim != 2 or T.shape[0] != T.shape[1]:
        raise DimensionError(f"weight matrix must be square, got shape {T.shape}")
    if not np.issubdtype(T.dtype, np.integer):
        if not np.all(T == np.round(T)):
            raise ValueError("weight matrix entries must be integers")
        T = T.astype(np.int64)
    return T


def net_input(T: np.ndarray, x: np.ndarray) -> np.ndarray:
    T = check_weights(T)
    x = as_bipolar(x)
    if T.shape[0] != x.size:
        raise DimensionError(
            f"weight matrix is {T.shape[0]}x{T.shape[0]} but vector has length {x.size}"
        )
    return T @ x


def is_stored(T: np.ndarray, x: Sequence[int]) -> bool:
    """True iff ``x == sgn(T @ x)`` holds for every neuron."""
    x = as_bipolar(x)
    return bool(np.array_equal(sgn_array(net_input(T, x)), x))
