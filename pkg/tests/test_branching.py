import pytest

from branchwork.branching import (
    BranchingTable,
    branch,
    branch_one,
    contains_all,
    gl_dimension_check,
    one_row_rule,
)
from branchwork.errors import ConsistencyError
from branchwork.partitions import Partition, gl_dimension, partitions_of
from oracles import character_by_tabloids, descending_partitions, tensor_branching

# Sym^d C^4 over S_4, d = 0..3
SYM_C4 = {
    0: {(4,): 1},
    1: {(4,): 1, (3, 1): 1},
    2: {(4,): 2, (3, 1): 2, (2, 2): 1},
    3: {(4,): 3, (3, 1): 4, (2, 2): 1, (2, 1, 1): 1},
}


def test_small_cases():
    assert list(branch((3,), 3).multiplicities.values()) == [3, 3, 1]
    assert list(branch((2,), 3).multiplicities.values()) == [2, 2, 0]
    assert branch((2, 1), 3)[(2, 1)] == 3
    assert contains_all((1, 1), 3) == (False, [Partition((3,))])
    assert contains_all((3,), 3) == (True, [])


def test_symmetric_powers_of_c4():
    for d, expected in SYM_C4.items():
        got = branch((d,), 4)
        assert {mu: b for mu, b in got.items() if b} == {Partition(k): v for k, v in expected.items()}


@pytest.mark.parametrize("n", range(1, 7))
def test_one_row_rule_agrees(n):
    for d in range(9):
        table = branch((d,), n)
        for mu in partitions_of(n):
            assert one_row_rule(d, mu) == table[mu]


def test_one_row_rule_small():
    assert [one_row_rule(3, mu) for mu in partitions_of(4)] == [3, 4, 1, 1, 0]
    assert one_row_rule(-1, (2,)) == 0


def test_low_degree_anchors():
    # Sym^0 is trivial; Sym^1 is the permutation representation
    for n in range(1, 9):
        assert {mu for mu, b in branch((), n).items() if b} == {Partition((n,))}
        ones = {mu: b for mu, b in branch((1,), n).items() if b}
        expected = {Partition((n,)): 1} if n == 1 else {Partition((n,)): 1, Partition((n - 1, 1)): 1}
        assert ones == expected


@pytest.mark.parametrize("n", range(1, 7))
def test_dimension_sums(n):
    for size in range(13):
        for lam in partitions_of(size):
            if len(lam) <= n:
                result = branch(lam, n)
                assert all(isinstance(b, int) and b >= 0 for b in result.multiplicities.values())
                assert gl_dimension_check(result)
                assert result.dimension() == gl_dimension(lam, n)


@pytest.mark.parametrize("n", [2, 3, 4])
def test_tensor_power_oracle(n):
    chars_n = character_by_tabloids(n)
    for k in range(0, 4):
        chars_k = character_by_tabloids(k) if k else {}
        for lam in descending_partitions(k):
            if len(lam) > n:
                continue
            expected = tensor_branching(lam, n, chars_k, chars_n)
            got = branch(lam, n)
            assert {tuple(mu): b for mu, b in got.items()} == expected


def test_branch_one_matches_table():
    table = branch((4, 2), 4)
    for mu in partitions_of(4):
        assert branch_one((4, 2), mu) == table[mu]
    assert branch_one((10, 10), (1,) * 10) == 1
    with pytest.raises(ValueError):
        branch_one((2,), (2, 1), 4)


def test_invalid_shapes():
    with pytest.raises(ValueError):
        branch((1, 1, 1), 2)
    with pytest.raises(ValueError):
        branch((2, 1), -1)


def test_json_roundtrip():
    t = branch((5, 3), 5)
    doc = t.to_json()
    assert doc["lambda"] == "5,3" and doc["n"] == 5
    assert all(isinstance(v, str) for v in doc["multiplicities"].values())
    assert BranchingTable.from_json(doc) == t


def test_inexact_sum_is_rejected(monkeypatch):
    import branchwork.branching as mod

    monkeypatch.setattr(mod, "schur_values", lambda lam, n: (1,) + (0,) * (len(partitions_of(n)) - 1))
    with pytest.raises(ConsistencyError):
        mod.branch((2,), 3)
