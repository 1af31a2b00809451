from itertools import product
from math import comb

import pytest
from hypothesis import given, strategies as st

from oracles import all_partitions_brute
from thomschur.partitions import (Partition, classify_h, partitions_in_rectangle,
                                  partitions_of, partitions_up_to)

P = Partition


def test_construction_normalizes_zeros():
    assert P((0, 0, 1, 2)) == P((1, 2))
    assert P(()).weight == 0 and len(P(())) == 0


def test_construction_rejects_decreasing():
    with pytest.raises(ValueError):
        P((3, 1))


@pytest.mark.parametrize("I, J", [
    ((3,), (1, 1, 1)),
    ((), ()),
    ((1, 2), (1, 2)),
    ((1, 1, 4), (1, 1, 1, 3)),
])
def test_conjugate(I, J):
    assert P(I).conjugate() == P(J)


@pytest.mark.parametrize("I, J, expected", [
    ((2, 2), (1, 2), True),
    ((1, 1, 1, 1), (2,), False),
    ((1, 2, 3), (1, 2, 3), True),
    ((3,), (1, 1), False),
])
def test_contains(I, J, expected):
    assert P(I).contains(P(J)) is expected


@pytest.mark.parametrize("I, m, n, expected", [
    ((2, 2), 1, 1, False),
    ((3, 3), 1, 2, False),
    ((5,), 1, 1, True),
    ((1, 1, 1, 9), 1, 1, True),
    ((2, 2, 2), 2, 1, False),
])
def test_in_hook(I, m, n, expected):
    assert P(I).in_hook(m, n) is expected


def test_rectangle_enumeration_small():
    assert partitions_in_rectangle(1, 2) == [P(()), P((1,)), P((2,))]
    assert partitions_in_rectangle(2, 1) == [P(()), P((1,)), P((1, 1))]


def test_rectangle_enumeration_matches_brute_force():
    # brute force: every increasing tuple in {0..cols}^rows
    for rows, cols in product(range(4), repeat=2):
        brute = {P(t) for t in product(range(cols + 1), repeat=rows) if list(t) == sorted(t)}
        got = partitions_in_rectangle(rows, cols)
        assert len(got) == len(set(got)) == comb(rows + cols, rows) == len(brute)
        assert set(got) == brute
        assert all(len(I) <= rows and I.largest <= cols for I in got)
    assert len(partitions_in_rectangle(2, 2)) == 6


def test_rectangle_order_is_weight_then_lex():
    got = partitions_in_rectangle(3, 2)
    keys = [(I.weight, I.padded(3)) for I in got]
    assert keys == sorted(keys)


@pytest.mark.parametrize("I, r, h", [
    ((2, 2), 1, 2),
    ((4,), 1, 1),
    ((3, 3), 2, 2),
    ((1, 1, 1, 1), 2, None),
    ((3, 3, 3), 1, 3),
])
def test_classify_h(I, r, h):
    assert classify_h(P(I), r) == h


def test_partitions_of_counts():
    assert [sum(1 for _ in partitions_of(n)) for n in range(9)] == [1, 1, 2, 3, 5, 7, 11, 15, 22]
    assert {I.parts for I in partitions_up_to(6)} == all_partitions_brute(6)


def test_render_and_parse():
    assert str(P((1, 2, 3))) == "123"
    assert str(P((1, 1, 10))) == "1,1,10"
    for I in [P(()), P((1, 2, 3)), P((1, 1, 10)), P((9,))]:
        assert P.parse(str(I)) == I
    assert P((1, 2)).to_json() == [1, 2]


SMALL = list(partitions_up_to(12))
UP_TO_8 = list(partitions_up_to(8))


def test_conjugate_involution_exhaustive():
    for I in SMALL:
        J = I.conjugate()
        assert J.conjugate() == I and J.weight == I.weight


def test_containment_is_partial_order_exhaustive():
    by_weight = UP_TO_8
    for I in by_weight:
        assert I.contains(I)
    for I, J in product(by_weight, repeat=2):
        if I.contains(J) and J.contains(I):
            assert I == J


partition_st = st.sampled_from(UP_TO_8)


@given(partition_st, partition_st, partition_st)
def test_containment_transitive(I, J, K):
    if I.contains(J) and J.contains(K):
        assert I.contains(K)


@given(partition_st, partition_st, st.integers(0, 3), st.integers(0, 3))
def test_hook_monotone(I, J, m, n):
    if J.contains(I) and J.in_hook(m, n):
        assert I.in_hook(m, n)


@given(partition_st, st.integers(1, 4))
def test_classify_h_exhaustive_and_exclusive(I, r):
    h = classify_h(I, r)
    if I.largest < r:
        assert h is None
        return
    assert 1 <= h <= len(I)
    matching = [k for k in range(1, len(I) + 2)
                if I.contains(P.rectangle(k, r + k - 1)) and not I.contains(P.rectangle(k + 1, r + k))]
    assert matching == [h]
