from math import factorial

import pytest
from hypothesis import given, strategies as st

from branchwork.partitions import (
    CycleType,
    Partition,
    centralizer_order,
    conjugate,
    gl_dimension,
    hook_dimension,
    partitions_of,
    partitions_with_max_parts,
)
from oracles import standard_tableaux_count


def test_partitions_small():
    assert partitions_of(0) == (Partition(),)
    assert partitions_of(4) == tuple(Partition(p) for p in [(4,), (3, 1), (2, 2), (2, 1, 1), (1, 1, 1, 1)])


def test_partitions_of_ten_has_42():
    parts = partitions_of(10)
    assert len(parts) == 42
    assert parts[0] == (10,) and parts[-1] == (1,) * 10
    assert list(parts) == sorted(parts, reverse=True)
    assert len(set(parts)) == 42


@pytest.mark.parametrize("n, k, expected", [
    (4, 2, [(4,), (3, 1), (2, 2)]),
    (3, 1, [(3,)]),
    (0, 0, [()]),
])
def test_partitions_with_max_parts(n, k, expected):
    assert list(partitions_with_max_parts(n, k)) == expected


def test_trailing_zeros_are_stripped():
    assert Partition((3, 0)) == Partition((3,))
    assert hash(Partition((2, 0, 0))) == hash(Partition((2,)))
    assert Partition.parse("11,9") == (11, 9)
    assert Partition.parse("-") == Partition()
    assert Partition().text() == "-"
    assert Partition((11, 9)).text() == "11,9"


@pytest.mark.parametrize("bad", [(1, 2), (3, -1), (0, 1)])
def test_invalid_partitions(bad):
    with pytest.raises(ValueError):
        Partition(bad)


@pytest.mark.parametrize("text", ["a", "1,,2", "-1", "1;2"])
def test_malformed_text(text):
    with pytest.raises(ValueError):
        Partition.parse(text)


def test_conjugate_examples():
    assert conjugate((3, 1)) == (2, 1, 1)
    assert conjugate((2, 2)) == (2, 2)
    assert conjugate((5,)) == (1,) * 5


def test_conjugate_is_involution():
    for n in range(13):
        for lam in partitions_of(n):
            assert conjugate(conjugate(lam)) == lam


def test_centralizer_examples():
    assert centralizer_order((1, 1, 1)) == 6
    assert centralizer_order((3,)) == 3
    assert centralizer_order((2, 1)) == 2
    assert CycleType((2, 2, 1)).multiplicities == {1: 1, 2: 2}
    assert CycleType((2, 2, 1)).centralizer_order == 8


def test_class_sizes_partition_the_group():
    for n in range(13):
        assert sum(factorial(n) // centralizer_order(r) for r in partitions_of(n)) == factorial(n)


def test_hook_dimension_examples():
    assert hook_dimension((6,)) == 1
    assert hook_dimension((2, 1)) == 2
    assert hook_dimension((5, 4, 1)) == standard_tableaux_count((5, 4, 1))


def test_hook_dimension_matches_tableau_count():
    for n in range(1, 7):
        for mu in partitions_of(n):
            assert hook_dimension(mu) == standard_tableaux_count(mu)


def test_sum_of_squared_dimensions():
    for n in range(11):
        assert sum(hook_dimension(mu) ** 2 for mu in partitions_of(n)) == factorial(n)


def test_gl_dimension_examples():
    assert gl_dimension((3,), 3) == 10
    assert gl_dimension((2,), 3) == 6
    assert gl_dimension((2, 1), 3) == 8
    with pytest.raises(ValueError):
        gl_dimension((1, 1, 1, 1), 3)


@given(st.lists(st.integers(0, 6), min_size=0, max_size=5))
def test_conjugate_preserves_size_and_swaps_length(parts):
    lam = Partition(sorted(parts, reverse=True))
    lam_t = conjugate(lam)
    assert lam_t.size == lam.size
    assert len(lam_t) == lam.part(0)
