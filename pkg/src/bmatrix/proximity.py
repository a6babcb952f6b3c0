"""Proximity matrices and the per-neuron activity orders derived from them.

Neuron labels are 1-based everywhere in this module's public surface.
Row ``i`` of a proximity matrix holds the distances *from* neuron ``i``, so an
asymmetric matrix gives each starting neuron its own view of the network.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Iterator, Sequence

import numpy as np


class ProximityError(ValueError):
    """Raised for a malformed proximity matrix."""


@dataclass(frozen=True)
class ProximityMatrix:
    distances: np.ndarray
    symmetric: bool

    @property
    def n(self) -> int:
        return self.distances.shape[0]


@dataclass(frozen=True)
class ActivityOrder:
    """A permutation of ``1..n`` whose first label is the starting neuron."""

    order: tuple[int, ...]

    def __post_init__(self) -> None:
        order = tuple(int(v) for v in self.order)
        if sorted(order) != list(range(1, len(order) + 1)):
            raise ValueError(f"{order} is not a permutation of 1..{len(order)}")
        object.__setattr__(self, "order", order)

    @property
    def start(self) -> int:
        return self.order[0]

    @property
    def indices(self) -> np.ndarray:
        """0-based neuron indices, in activity order."""
        return np.array(self.order, dtype=np.int64) - 1

    @classmethod
    def identity(cls, n: int) -> "ActivityOrder":
        return cls(tuple(range(1, n + 1)))

    def __len__(self) -> int:
        return len(self.order)

    def __iter__(self) -> Iterator[int]:
        return iter(self.order)

    def __str__(self) -> str:
        return " ".join(map(str, self.order))


def validate_proximity(P: Sequence[Sequence[float]] | np.ndarray) -> ProximityMatrix:
    """Check ``P`` is square, nonnegative and zero on the diagonal.

    Symmetry and the triangle inequality are not required; whether ``P`` is
    symmetric is reported on the result.
    """
    try:
        D = np.array(P, dtype=float)
    except ValueError as exc:
        raise ProximityError(f"proximity matrix is not a numeric matrix: {exc}") from exc
    if D.ndim != 2 or D.shape[0] != D.shape[1] or D.shape[0] == 0:
        raise ProximityError(f"proximity matrix must be square and nonempty, got shape {D.shape}")
    if not np.all(np.isfinite(D)):
        raise ProximityError("proximity matrix has non-finite entries")
    neg = np.argwhere(D < 0)
    if neg.size:
        i, j = neg[0]
        raise ProximityError(f"negative distance {D[i, j]:g} at ({i + 1}, {j + 1})")
    diag = np.flatnonzero(np.diag(D) != 0)
    if diag.size:
        i = diag[0]
        raise ProximityError(f"nonzero diagonal entry {D[i, i]:g} at ({i + 1}, {i + 1})")
    D.setflags(write=False)
    return ProximityMatrix(D, bool(np.array_equal(D, D.T)))


def _coerce(P) -> ProximityMatrix:
    return P if isinstance(P, ProximityMatrix) else validate_proximity(P)


def activity_order(P, start: int) -> ActivityOrder:
    """Neurons sorted by distance from ``start``, ties going to the lower label."""
    P = _coerce(P)
    if not 1 <= start <= P.n:
        raise ValueError(f"start neuron {start} out of range 1..{P.n}")
    row = P.distances[start - 1]
    others = sorted((j for j in range(P.n) if j != start - 1), key=lambda j: (row[j], j))
    return ActivityOrder((start, *(j + 1 for j in others)))


def all_orders(P) -> list[ActivityOrder]:
    P = _coerce(P)
    return [activity_order(P, k) for k in range(1, P.n + 1)]


def is_rotation(a: Sequence[int], b: Sequence[int]) -> bool:
    """True if ``b`` is a cyclic rotation of ``a`` (including ``a`` itself)."""
    a, b = list(a), list(b)
    if len(a) != len(b):
        return False
    return any(a[k:] + a[:k] == b for k in range(len(a)))
