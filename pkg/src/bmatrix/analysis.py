"""Network-level studies built on recall and the storage test."""

from __future__ import annotations

from dataclasses import dataclass
from enum import Enum
from typing import Iterable, Sequence

import numpy as np

from .core import (
    DimensionError,
    as_bipolar,
    as_memory_set,
    check_weights,
    is_stored,
    sgn_array,
    train_hebbian,
)
from .proximity import ActivityOrder, activity_order, validate_proximity, ProximityMatrix
from .recall import RecallResult, recall

DEFAULT_ENUMERATION_LIMIT = 20
_CHUNK = 1 << 16


class EnumerationLimitError(ValueError):
    def __init__(self, n: int, limit: int):
        super().__init__(
            f"refusing to enumerate 2^{n} states: n={n} exceeds the enumeration limit of {limit}"
        )
        self.n = n
        self.limit = limit


class OutcomeKind(str, Enum):
    STORED = "stored-memory"
    COMPLEMENT = "complement-of"
    SPURIOUS = "spurious-fixed-point"
    NON_FIXED = "non-fixed-point"


@dataclass(frozen=True)
class RecallOutcome:
    """What a state is with respect to the trained memories.

    ``index`` is the 1-based memory number for stored and complement outcomes.
    A complement is named by identity alone, so ``fixed_point`` says whether
    it actually satisfies the storage test.
    """

    kind: OutcomeKind
    vector: tuple[int, ...]
    fixed_point: bool
    index: int | None = None

    def label(self) -> str:
        if self.index is None:
            return self.kind.value
        return f"{self.kind.value}({self.index})"


def classify(vector: Sequence[int], memories, T) -> RecallOutcome:
    """Precedence: stored memory, then complement, then spurious, then non-fixed."""
    v = as_bipolar(vector)
    T = check_weights(T)
    if T.shape[0] != v.size:
        raise DimensionError(f"vector length {v.size} does not match {T.shape[0]} neurons")
    X = _memories_or_empty(memories, v.size)
    fixed = is_stored(T, v)
    vec = tuple(int(b) for b in v)
    for k, x in enumerate(X):
        if np.array_equal(x, v):
            return RecallOutcome(OutcomeKind.STORED, vec, fixed, k + 1)
    for k, x in enumerate(X):
        if np.array_equal(-x, v):
            return RecallOutcome(OutcomeKind.COMPLEMENT, vec, fixed, k + 1)
    kind = OutcomeKind.SPURIOUS if fixed else OutcomeKind.NON_FIXED
    return RecallOutcome(kind, vec, fixed)


def _memories_or_empty(memories, n: int) -> np.ndarray:
    rows = list(memories) if memories is not None else []
    if not rows:
        return np.empty((0, n), dtype=np.int64)
    X = as_memory_set(rows)
    if X.shape[1] != n:
        raise DimensionError(f"memories have {X.shape[1]} neurons, expected {n}")
    return X


def all_states(n: int, start: int = 0, stop: int | None = None) -> np.ndarray:
    """Bipolar states ``start..stop-1`` of the 2^n enumeration, one per row.

    State ``s`` puts ``-1`` on neuron ``j`` when bit ``n-1-j`` of ``s`` is set,
    so the scan runs from all ``+1`` to all ``-1``.
    """
    stop = 1 << n if stop is None else stop
    codes = np.arange(start, stop, dtype=np.int64)
    shifts = np.arange(n - 1, -1, -1, dtype=np.int64)
    bits = (codes[:, None] >> shifts) & 1
    return 1 - 2 * bits


def enumerate_fixed_points(
    T, memories=None, limit: int = DEFAULT_ENUMERATION_LIMIT
) -> list[RecallOutcome]:
    """Every state satisfying ``x == sgn(T @ x)``, classified, in scan order."""
    T = check_weights(T)
    n = T.shape[0]
    if n > limit:
        raise EnumerationLimitError(n, limit)
    X = _memories_or_empty(memories, n)
    found = []
    total = 1 << n
    for lo in range(0, total, _CHUNK):
        S = all_states(n, lo, min(lo + _CHUNK, total))
        ok = np.all(sgn_array(S @ T.T) == S, axis=1)
        found.extend(S[ok])
    return [classify(v, X, T) for v in found]


def census(outcomes: Iterable[RecallOutcome]) -> dict[str, int]:
    counts = {k.value: 0 for k in OutcomeKind}
    for o in outcomes:
        counts[o.kind.value] += 1
    return counts


@dataclass(frozen=True)
class MapEntry:
    neuron: int
    order: ActivityOrder
    polarity: int
    result: RecallResult
    outcome: RecallOutcome


def neuron_memory_map(
    T, P, memories, polarities: Sequence[int] = (1, -1)
) -> list[MapEntry]:
    """Recall from every single neuron with each seed polarity and classify."""
    T = check_weights(T)
    P = P if isinstance(P, ProximityMatrix) else validate_proximity(P)
    if P.n != T.shape[0]:
        raise DimensionError(
            f"proximity matrix has {P.n} neurons but the weight matrix has {T.shape[0]}"
        )
    polarities = [int(p) for p in polarities]
    if not polarities or any(p not in (1, -1) for p in polarities):
        raise ValueError(f"polarities must be drawn from +1/-1, got {polarities}")
    X = _memories_or_empty(memories, T.shape[0])
    entries = []
    for k in range(1, P.n + 1):
        order = activity_order(P, k)
        for p in polarities:
            res = recall(T, order, [p])
            entries.append(MapEntry(k, order, p, res, classify(res.normative_bits, X, T)))
    return entries


@dataclass(frozen=True)
class CapacityRow:
    m: int
    trials: int
    all_stored_fraction: float
    per_memory_stored_fraction: float


@dataclass(frozen=True)
class CapacityReport:
    n: int
    rng_seed: int
    rows: tuple[CapacityRow, ...]


def _trial_memories(n: int, m: int, rng_seed: int, trial: int) -> np.ndarray:
    # One stream per (rng_seed, trial): the m-memory set is a prefix of the
    # (m+1)-memory set, so rows share random numbers across m.
    rng = np.random.default_rng(np.random.SeedSequence(rng_seed, spawn_key=(trial,)))
    return 1 - 2 * rng.integers(0, 2, size=(m, n), dtype=np.int64)


def capacity_sweep(
    n: int, m_values: Iterable[int], trials: int, rng_seed: int
) -> CapacityReport:
    """Monte-Carlo storage rates for random uniform bipolar memory sets."""
    if n < 2:
        raise ValueError(f"n must be at least 2, got {n}")
    if trials < 1:
        raise ValueError(f"trials must be at least 1, got {trials}")
    ms = sorted(set(int(m) for m in m_values))
    if not ms or ms[0] < 1:
        raise ValueError("m values must be positive integers")
    rows = []
    for m in ms:
        all_ok = 0
        stored = 0
        for trial in range(trials):
            X = _trial_memories(n, m, rng_seed, trial)
            T = train_hebbian(X)
            ok = np.all(sgn_array(X @ T) == X, axis=1)
            stored += int(ok.sum())
            all_ok += int(ok.all())
        rows.append(CapacityRow(m, trials, all_ok / trials, stored / (trials * m)))
    return CapacityReport(n, rng_seed, tuple(rows))
