import numpy as np
import pytest

from bmatrix.proximity import (
    ActivityOrder,
    ProximityError,
    activity_order,
    all_orders,
    is_rotation,
    validate_proximity,
)

from worked_examples import ORDERS_P1, ORDERS_P2, P1, P2


def test_validate_example_one():
    P = validate_proximity(P1)
    assert P.symmetric and P.n == 4


def test_validate_single_neuron():
    assert validate_proximity([[0]]).n == 1


def test_asymmetric_allowed_and_flagged():
    P = validate_proximity([[0, 1], [2, 0]])
    assert not P.symmetric


@pytest.mark.parametrize(
    "bad",
    [
        [[0, 1], [1, -2]],
        [[1, 1], [1, 0]],
        [[0, 1, 2], [1, 0, 1]],
        [[0, float("nan")], [1, 0]],
        [],
    ],
)
def test_validate_rejects(bad):
    with pytest.raises(ProximityError):
        validate_proximity(bad)


@pytest.mark.parametrize(
    "P, start, expected",
    [
        (P2, 3, (3, 4, 2, 1, 5)),
        (P1, 4, (4, 2, 3, 1)),
        (P2, 5, (5, 2, 4, 3, 1)),
        ([[0]], 1, (1,)),
    ],
)
def test_activity_order(P, start, expected):
    assert activity_order(P, start).order == expected


def test_all_orders_examples():
    assert [o.order for o in all_orders(P1)] == ORDERS_P1
    assert [o.order for o in all_orders(P2)] == ORDERS_P2


def test_ties_go_to_lower_label():
    P = np.full((5, 5), 2.0)
    np.fill_diagonal(P, 0)
    orders = [o.order for o in all_orders(P)]
    for k, o in enumerate(orders, start=1):
        assert o == (k, *[j for j in range(1, 6) if j != k])


def test_asymmetric_uses_rows():
    P = [[0, 1, 5], [9, 0, 1], [1, 1, 0]]
    assert activity_order(P, 1).order == (1, 2, 3)
    assert activity_order(P, 2).order == (2, 3, 1)
    assert activity_order(P, 3).order == (3, 1, 2)


def test_start_out_of_range():
    with pytest.raises(ValueError):
        activity_order(P1, 0)
    with pytest.raises(ValueError):
        activity_order(P1, 5)


@pytest.mark.parametrize("P", [P1, P2])
def test_no_order_is_a_rotation_of_another(P):
    orders = [o.order for o in all_orders(P)]
    for a in range(len(orders)):
        for b in range(len(orders)):
            if a != b:
                assert not is_rotation(orders[a], orders[b])


def test_activity_order_rejects_non_permutation():
    with pytest.raises(ValueError):
        ActivityOrder((1, 1, 2))
