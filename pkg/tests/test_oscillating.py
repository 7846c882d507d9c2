from math import comb

import pytest

from asmdpp.errors import ValidationError
from asmdpp.oscillating import (
    ascent_count,
    ascent_distribution,
    delta_diagram,
    double_factorial_odd,
    enumerate_oscillating,
    osc_counts,
    strict_partitions,
)
from helpers import asm_triples, dpp_triples


def test_empty_shape_zero_length():
    ts = list(enumerate_oscillating((), 0))
    assert len(ts) == 1
    assert ts[0].diagrams == ((),)
    assert ascent_count(ts[0]) == 0


def test_parity_gives_empty_sets():
    assert list(enumerate_oscillating((), 3)) == []
    assert list(enumerate_oscillating((2,), 1)) == []


def test_empty_shape_length_four():
    ts = list(enumerate_oscillating((), 4))
    assert len(ts) == 3
    assert sorted(ascent_count(t) for t in ts) == [0, 1, 1]
    # the column-then-column tableau has its single ascent at step 3
    two_col = next(t for t in ts if t.diagrams[2] == (2,))
    assert ascent_count(two_col) == 1
    contents = [j - i for i, j in two_col.changes]
    assert contents == [0, 1, 1, 0]


def test_sizes_are_odd_double_factorials():
    for p in range(5):
        count = sum(1 for _ in enumerate_oscillating((), 2 * p))
        assert count == double_factorial_odd(p)
    assert [double_factorial_odd(p) for p in range(5)] == [1, 1, 3, 15, 105]


def test_strict_partitions():
    assert strict_partitions(0) == [()]
    assert strict_partitions(4) == [(4,), (3, 1)]
    assert strict_partitions(6) == [(6,), (5, 1), (4, 2), (3, 2, 1)]
    with pytest.raises(ValidationError):
        strict_partitions(-1)


def test_delta_diagram_examples():
    assert delta_diagram((1,)) == (2,)
    assert delta_diagram((2,)) == (3, 1)
    assert delta_diagram((3, 1)) == (4, 3, 1)
    assert delta_diagram(()) == ()
    with pytest.raises(ValidationError):
        delta_diagram((2, 2))


def test_delta_diagram_size_is_doubled():
    for p in range(1, 6):
        for kappa in strict_partitions(p):
            assert sum(delta_diagram(kappa)) == 2 * p


def test_union_sizes_match_double_factorial():
    for p in range(5):
        total = sum(
            sum(1 for _ in enumerate_oscillating(delta_diagram(k), 2 * p))
            for k in strict_partitions(p)
        )
        assert total == double_factorial_odd(p)


def test_ascent_distributions_agree():
    for p in range(5):
        left = ascent_distribution(enumerate_oscillating((), 2 * p))
        right: dict[int, int] = {}
        for kappa in strict_partitions(p):
            for t in enumerate_oscillating(delta_diagram(kappa), 2 * p):
                a = ascent_count(t)
                right[a] = right.get(a, 0) + 1
        assert left == right


def test_p2_closed_form():
    for n in range(1, 9):
        expected = comb(n, 4) + 2 * comb(n + 1, 4)
        assert osc_counts(n, 2) == (expected, expected)


def test_p0_counts_are_one():
    for n in (1, 3, 5):
        assert osc_counts(n, 0) == (1, 1)


def test_counts_match_enumeration_small():
    for n in range(1, 5):
        for p in range(4):
            asm_side, dpp_side = osc_counts(n, p)
            assert asm_side == sum(1 for t in asm_triples(n) if t[0] == p)
            assert dpp_side == sum(1 for t in dpp_triples(n) if t[0] == p)
