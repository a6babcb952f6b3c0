"""Proximity-ordered B-matrix recall for Hebbian associative memories."""

from .analysis import (
    CapacityReport,
    CapacityRow,
    EnumerationLimitError,
    MapEntry,
    OutcomeKind,
    RecallOutcome,
    capacity_sweep,
    census,
    classify,
    enumerate_fixed_points,
    neuron_memory_map,
)
from .core import (
    BipolarError,
    DimensionError,
    as_bipolar,
    is_stored,
    sgn,
    train_hebbian,
)
from .proximity import (
    ActivityOrder,
    ProximityError,
    ProximityMatrix,
    activity_order,
    all_orders,
    validate_proximity,
)
from .recall import (
    RecallResult,
    RecallStep,
    RecallTrace,
    lower_triangular,
    map_to_normative,
    map_to_order,
    permute_weights,
    recall,
)

__version__ = "0.1.0"
