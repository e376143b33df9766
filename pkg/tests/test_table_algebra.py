"""Axiom scanner, group tables, tensor products and the text format."""

import pytest

from planalg.table_algebra import (
    TableAlgebra,
    check_algebra,
    cyclic_group_algebra,
    index_tuple,
    permutation_group_algebra,
    tensor,
    tensor_power,
    trivial_algebra,
    tuple_index,
)


def test_cyclic_three_passes_all_flags():
    alg = cyclic_group_algebra(3)
    res = check_algebra(alg)
    assert res.ok and not res.witnesses
    assert alg.mul_basis(1, 1) == {2: 1}
    assert alg.inv == (0, 2, 1)


@pytest.mark.parametrize("n", [1, 2, 3, 4, 5])
def test_cyclic_groups_pass(n):
    assert check_algebra(cyclic_group_algebra(n)).ok


def test_permutation_group_passes():
    alg = permutation_group_algebra(3)
    assert alg.rank == 6
    res = check_algebra(alg)
    assert res.ok
    # transpositions are self-inverse, so inv fixes at least 4 indices
    assert sum(1 for i in range(6) if alg.inv[i] == i) == 4


def test_trivial_algebra():
    alg = trivial_algebra()
    assert alg.rank == 1
    assert check_algebra(alg).ok


def test_broken_nonnegativity_is_flagged():
    good = cyclic_group_algebra(2)
    rows = dict(good.rows)
    rows[(1, 1)] = {0: -1}
    bad = TableAlgebra(2, 0, (0, 1), rows, labels=good.labels)
    res = check_algebra(bad)
    assert not res.t1
    assert any("kappa" in w for w in res.witnesses)


def test_broken_involution_is_flagged():
    good = cyclic_group_algebra(3)
    bad = TableAlgebra(3, 0, (1, 0, 2), dict(good.rows), labels=good.labels)
    res = check_algebra(bad)
    assert not res.t2
    assert any("identity" in w for w in res.witnesses)


def test_broken_identity_is_flagged():
    good = cyclic_group_algebra(2)
    rows = dict(good.rows)
    rows[(0, 1)] = {0: 1}
    bad = TableAlgebra(2, 0, (0, 1), rows, labels=good.labels)
    assert not check_algebra(bad).identity


def test_mul_trace_support():
    alg = cyclic_group_algebra(3)
    x = {1: 2, 2: 1}
    y = {1: 1}
    assert alg.mul(x, y) == {2: 2, 0: 1}
    assert alg.trace(alg.mul(x, {2: 1})) == 2
    assert alg.support({0: 0, 1: 5}) == frozenset({1})
    assert alg.bar_elt({1: 3}) == {2: 3}


def test_tensor_product_is_componentwise():
    a, b = cyclic_group_algebra(2), cyclic_group_algebra(3)
    t = tensor(a, b)
    assert t.rank == 6
    assert check_algebra(t).ok
    # (g, h) * (g, h) = (e, h^2) under flat index i * rank(b) + j
    assert t.mul_basis(4, 4) == {2: 1}


def test_tensor_power_and_tuple_indexing():
    alg = cyclic_group_algebra(2)
    cube = tensor_power(alg, 3)
    assert cube.rank == 8
    assert check_algebra(cube).ok
    for idx in range(8):
        tup = index_tuple(alg, idx, 3)
        assert tuple_index(alg, tup) == idx
    # componentwise product of (g,e,g) with itself is the identity tuple
    k = tuple_index(alg, (1, 0, 1))
    assert cube.mul_basis(k, k) == {tuple_index(alg, (0, 0, 0)): 1}


def test_tensor_power_zero_is_trivial():
    assert tensor_power(cyclic_group_algebra(3), 0).rank == 1


def test_text_round_trip():
    for alg in (cyclic_group_algebra(4), permutation_group_algebra(3)):
        back = TableAlgebra.from_text(alg.to_text())
        assert back == alg
        assert back.to_text() == alg.to_text()
