"""Partitions: weight, dominance, staircase shift, enumeration."""

import itertools

import pytest

from symfact.partitions import (
    Partition,
    dominance_leq,
    enumerate_partitions,
    partitions_of_weight,
    staircase,
)
from symfact.poly import PolyError


def brute_force_partitions(max_weight, n):
    """Independent oracle: filter all weakly decreasing tuples."""
    found = []
    for parts in itertools.product(range(max_weight + 1), repeat=n):
        if sum(parts) <= max_weight and all(a >= b for a, b in zip(parts, parts[1:])):
            found.append(parts)
    return set(found)


def test_weight():
    assert Partition((2, 1, 0)).weight() == 3
    assert Partition((0, 0)).weight() == 0
    assert Partition((3, 3, 1)).weight() == 7


def test_validation():
    with pytest.raises(PolyError):
        Partition((1, 2))
    with pytest.raises(PolyError):
        Partition((1, -1))


def test_part_accessor_with_virtual_zero():
    lam = Partition((3, 1))
    assert lam.part(1) == 3 and lam.part(2) == 1 and lam.part(3) == 0
    assert lam.diff(1, 2) == 2
    assert lam.diff(2, 3) == 1


def test_dominance():
    assert dominance_leq(Partition((1, 1, 1)), Partition((3, 0, 0)))
    assert dominance_leq(Partition((2, 1)), Partition((2, 1)))
    assert dominance_leq(Partition((2, 2, 0)), Partition((3, 1, 0)))
    assert not dominance_leq(Partition((3, 1, 0)), Partition((2, 2, 0)))
    assert not dominance_leq(Partition((1, 0)), Partition((2, 0)))  # weights differ
    with pytest.raises(PolyError):
        dominance_leq(Partition((1,)), Partition((1, 0)))


def test_dominance_is_partial_order_on_sweep():
    sweep = enumerate_partitions(5, 3)
    for a in sweep:
        assert dominance_leq(a, a)
    for a, b in itertools.permutations(sweep, 2):
        if dominance_leq(a, b) and dominance_leq(b, a):
            assert a == b
    for a, b, c in itertools.permutations(sweep, 3):
        if dominance_leq(a, b) and dominance_leq(b, c):
            assert dominance_leq(a, c)


def test_staircase_shift():
    assert Partition((1, 0)).shifted().parts == (2, 0)
    assert Partition((0, 0, 0)).shifted().parts == staircase(3)
    assert Partition((2, 1, 0)).shifted().parts == (4, 2, 0)


def test_shift_is_strictly_decreasing_with_weight_offset():
    for lam in enumerate_partitions(6, 4):
        mu = lam.shifted()
        assert all(a > b for a, b in zip(mu.parts, mu.parts[1:]))
        assert sum(mu.parts) == lam.weight() + 4 * 3 // 2


def test_enumeration_small():
    assert [p.parts for p in enumerate_partitions(1, 2)] == [(0, 0), (1, 0)]
    assert [p.parts for p in enumerate_partitions(2, 2)] == [(0, 0), (1, 0), (2, 0), (1, 1)]


def test_enumeration_matches_brute_force():
    for max_weight, n in [(4, 3), (6, 2), (5, 4)]:
        got = enumerate_partitions(max_weight, n)
        assert len(got) == len(set(got)), "no duplicates"
        assert {p.parts for p in got} == brute_force_partitions(max_weight, n)
    assert len(enumerate_partitions(4, 3)) == 11


def test_enumeration_order_is_by_weight_then_desc_lex():
    sweep = enumerate_partitions(3, 3)
    weights = [p.weight() for p in sweep]
    assert weights == sorted(weights)
    for w in set(weights):
        block = [p.parts for p in sweep if p.weight() == w]
        assert block == sorted(block, reverse=True)


def test_partitions_of_weight_exact():
    assert [p.parts for p in partitions_of_weight(3, 2)] == [(3, 0), (2, 1)]
