import numpy as np
import pytest

from bmatrix.core import DimensionError
from bmatrix.proximity import ActivityOrder
from bmatrix.recall import (
    lower_triangular,
    map_to_normative,
    map_to_order,
    permute_weights,
    recall,
)

import oracles
from worked_examples import B, B2, B3, B5, MEMORIES, T, T2, T3, T5

# Entry (a, b) = T[order[a]][order[b]] for order 4 3 1 2 5, from oracles.reorder.
# The printed matrix for this order is a copy of T3, which this is not.
T4_DERIVED = [
    [0, 3, -1, 1, 1],
    [3, 0, -1, 1, 1],
    [-1, -1, 0, 1, 1],
    [1, 1, 1, 0, -1],
    [1, 1, 1, -1, 0],
]


@pytest.mark.parametrize(
    "order, expected",
    [((2, 1, 3, 5, 4), T2), ((3, 4, 2, 1, 5), T3), ((5, 2, 4, 3, 1), T5), ((1, 2, 3, 4, 5), T)],
)
def test_permute_weights_examples(order, expected):
    assert permute_weights(T, order).tolist() == expected


def test_permute_weights_neuron_four_follows_definition():
    assert oracles.reorder(T, [4, 3, 1, 2, 5]) == T4_DERIVED
    got = permute_weights(T, (4, 3, 1, 2, 5))
    assert got.tolist() == T4_DERIVED
    assert got.tolist() != T3


def test_permute_weights_dimension_mismatch():
    with pytest.raises(DimensionError):
        permute_weights(T, (1, 2, 3))


@pytest.mark.parametrize("src, expected", [(T, B), (T2, B2), (T3, B3), (T5, B5)])
def test_lower_triangular_examples(src, expected):
    assert lower_triangular(src).tolist() == expected


def test_lower_triangular_zero():
    assert lower_triangular(np.zeros((3, 3), dtype=int)).tolist() == [[0] * 3] * 3


def test_lower_triangular_rejects_asymmetric():
    with pytest.raises(ValueError):
        lower_triangular([[0, 1], [2, 0]])


@pytest.mark.parametrize(
    "order, seed, ordered, normative",
    [
        ((1, 2, 3, 4, 5), [1], (1, 1, 1, 1, 1), (1, 1, 1, 1, 1)),
        ((2, 1, 3, 5, 4), [1], (1, 1, 1, 1, 1), (1, 1, 1, 1, 1)),
        ((3, 4, 2, 1, 5), [-1], (-1, -1, -1, 1, 1), (1, -1, -1, -1, 1)),
        ((5, 2, 4, 3, 1), [1], (1, -1, 1, 1, -1), (-1, -1, 1, 1, 1)),
        ((5, 2, 4, 3, 1), [-1], (-1, 1, 1, 1, -1), (-1, 1, 1, 1, -1)),
    ],
)
def test_recall_worked_example(order, seed, ordered, normative):
    res = recall(T, order, seed)
    assert res.ordered_bits == ordered
    assert res.normative_bits == normative


def test_recall_first_pass_fragment():
    # after the first step from neuron 1 the fragment is 1 1, then 1 1 1
    res = recall(T, (1, 2, 3, 4, 5), [1])
    assert res.trace.fragments[:3] == ((1,), (1, 1), (1, 1, 1))


@pytest.mark.parametrize(
    "seed, ordered, normative, nets",
    [
        ([1], [1, 1, -1, 1, 1], [-1, 1, 1, 1, 1], [3, -2, 1, 0]),
        ([-1], [-1, -1, 1, -1, 1], [1, -1, -1, -1, 1], [-3, 2, -1, 0]),
    ],
)
def test_recall_neuron_four_against_hand_loop(seed, ordered, normative, nets):
    assert oracles.fragment_recall(T, [4, 3, 1, 2, 5], seed) == (ordered, normative, nets)
    res = recall(T, (4, 3, 1, 2, 5), seed)
    assert list(res.ordered_bits) == ordered
    assert list(res.normative_bits) == normative
    assert [s.net_input for s in res.trace.steps] == nets


def test_trace_contents():
    res = recall(T, (3, 4, 2, 1, 5), [-1])
    tr = res.trace
    assert tr.seed_length == 1
    assert [s.position for s in tr.steps] == [2, 3, 4, 5]
    assert [s.neuron for s in tr.steps] == [4, 2, 1, 5]
    assert [s.net_input for s in tr.steps] == [-3, -2, 1, 0]
    assert [s.zero_input for s in tr.steps] == [False, False, False, True]
    assert [len(f) for f in tr.fragments] == [1, 2, 3, 4, 5]
    assert tr.has_zero_input


@pytest.mark.parametrize("k", [0, 1, 2])
@pytest.mark.parametrize("order", [(1, 2, 3, 4, 5), (5, 2, 4, 3, 1), (3, 4, 2, 1, 5)])
def test_full_seed_returns_memory(k, order):
    seed = map_to_order(MEMORIES[k], order)
    res = recall(T, order, seed)
    assert list(res.normative_bits) == MEMORIES[k]
    assert res.trace.steps == ()


def test_multi_bit_seed_clamps_prefix():
    res = recall(T, (5, 2, 4, 3, 1), [1, 1])
    assert res.ordered_bits[:2] == (1, 1)
    assert oracles.fragment_recall(T, [5, 2, 4, 3, 1], [1, 1])[0] == list(res.ordered_bits)


@pytest.mark.parametrize("seed", [[], [1] * 6, [0], [2]])
def test_recall_bad_seed(seed):
    with pytest.raises(ValueError):
        recall(T, (1, 2, 3, 4, 5), seed)


@pytest.mark.parametrize(
    "bits, order, expected",
    [
        ([-1, -1, -1, 1, 1], (3, 4, 2, 1, 5), (1, -1, -1, -1, 1)),
        ([1, -1, 1, 1, -1], (5, 2, 4, 3, 1), (-1, -1, 1, 1, 1)),
        ([1, -1, -1, 1], (1, 2, 3, 4), (1, -1, -1, 1)),
    ],
)
def test_map_to_normative(bits, order, expected):
    assert map_to_normative(bits, order) == expected
    assert map_to_order(expected, ActivityOrder(order)) == tuple(bits)


def test_map_to_normative_mismatch():
    with pytest.raises(DimensionError):
        map_to_normative([1, 1], (1, 2, 3))
