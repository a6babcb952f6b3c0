"""Fragment-expansion recall through the lower triangular B-matrix.

Recall starts from a short clamped fragment on the first neurons of an
activity order. Each step computes the net input of the next neuron from the
bits already determined, through ``B``. It appends ``sgn`` of that input and
feeds the longer fragment back in. A single forward pass ends once all ``n``
neurons are set.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Sequence

import numpy as np

from .core import DimensionError, as_bipolar, check_weights, sgn
from .proximity import ActivityOrder


@dataclass(frozen=True)
class RecallStep:
    position: int  # 1-based position in the activity order
    neuron: int  # 1-based neuron label at that position
    net_input: int
    bit: int
    zero_input: bool


@dataclass(frozen=True)
class RecallTrace:
    order: ActivityOrder
    seed_length: int
    steps: tuple[RecallStep, ...]
    fragments: tuple[tuple[int, ...], ...]

    @property
    def has_zero_input(self) -> bool:
        return any(s.zero_input for s in self.steps)


@dataclass(frozen=True)
class RecallResult:
    ordered_bits: tuple[int, ...]
    normative_bits: tuple[int, ...]
    trace: RecallTrace

    @property
    def order(self) -> ActivityOrder:
        return self.trace.order


def _as_order(order) -> ActivityOrder:
    return order if isinstance(order, ActivityOrder) else ActivityOrder(tuple(order))


def permute_weights(T, order) -> np.ndarray:
    """Relabel ``T`` so row/column ``a`` is neuron ``order[a]``."""
    T = check_weights(T)
    order = _as_order(order)
    if len(order) != T.shape[0]:
        raise DimensionError(
            f"order has {len(order)} neurons but the weight matrix is {T.shape[0]}x{T.shape[0]}"
        )
    idx = order.indices
    return T[np.ix_(idx, idx)]


def lower_triangular(Tp) -> np.ndarray:
    """Strictly lower triangle of a symmetric matrix, so ``Tp == B + B.T``."""
    Tp = check_weights(Tp)
    if not np.array_equal(Tp, Tp.T):
        raise ValueError("B-matrix needs a symmetric weight matrix")
    if np.any(np.diag(Tp) != 0):
        raise ValueError("B-matrix needs a zero-diagonal weight matrix")
    return np.tril(Tp, k=-1)


def map_to_normative(ordered_bits: Sequence[int], order) -> tuple[int, ...]:
    """Put the bit at order position ``a`` back on neuron ``order[a]``."""
    order = _as_order(order)
    bits = as_bipolar(ordered_bits)
    if bits.size != len(order):
        raise DimensionError(f"{bits.size} bits for an order of {len(order)} neurons")
    out = np.empty_like(bits)
    out[order.indices] = bits
    return tuple(int(v) for v in out)


def map_to_order(normative_bits: Sequence[int], order) -> tuple[int, ...]:
    """Inverse of :func:`map_to_normative`."""
    order = _as_order(order)
    bits = as_bipolar(normative_bits)
    if bits.size != len(order):
        raise DimensionError(f"{bits.size} bits for an order of {len(order)} neurons")
    return tuple(int(v) for v in bits[order.indices])


def recall(T, order, seed: Sequence[int]) -> RecallResult:
    """Grow ``seed`` to a full state along ``order`` using the B-matrix.

    The seed occupies the first ``len(seed)`` positions of the order and is
    never overwritten.
    """
    order = _as_order(order)
    B = lower_triangular(permute_weights(T, order))
    n = B.shape[0]
    if isinstance(seed, (int, np.integer)):
        seed = [seed]
    seed = list(seed)
    if not seed:
        raise ValueError("seed fragment is empty")
    if len(seed) > n:
        raise DimensionError(f"seed has {len(seed)} bits but the network has {n} neurons")
    fragment = [int(v) for v in as_bipolar(seed)]

    steps = []
    fragments = [tuple(fragment)]
    for k in range(len(fragment), n):
        h = int(B[k, :k] @ np.array(fragment, dtype=np.int64))
        bit = sgn(h)
        fragment.append(bit)
        steps.append(RecallStep(k + 1, order.order[k], h, bit, h == 0))
        fragments.append(tuple(fragment))

    trace = RecallTrace(order, len(seed), tuple(steps), tuple(fragments))
    ordered = tuple(fragment)
    return RecallResult(ordered, map_to_normative(ordered, order), trace)
