"""Fusion tables: truncated product rule, duality label, sqrt(2) map."""

import pytest

from planalg.laurent import QSqrt2, SQRT2
from planalg.table_algebra import check_algebra
from planalg.verlinde import (
    make_verlinde,
    phi_is_homomorphism,
    phi_v3_to_v2,
    reduction_structure_constants,
    w_identities,
)


def test_rank_two_table():
    alg = make_verlinde(2)
    assert alg.rank == 2
    assert alg.mul_basis(1, 1) == {0: 1}
    assert alg.inv == (0, 1)


def test_rank_three_table():
    alg = make_verlinde(3)
    assert alg.mul_basis(1, 1) == {0: 1, 2: 1}
    assert alg.mul_basis(1, 2) == {1: 1}
    assert alg.mul_basis(2, 2) == {0: 1}


def test_rank_four_truncation():
    alg = make_verlinde(4)
    # u_1 u_2 would contain u_3 and the reflection-killed u_5 only
    assert alg.mul_basis(1, 2) == {1: 1, 3: 1}
    assert alg.mul_basis(2, 2) == {0: 1, 2: 1}
    assert alg.mul_basis(3, 3) == {0: 1}


@pytest.mark.parametrize("r", range(1, 9))
def test_axioms_and_reduction_oracle(r):
    alg = make_verlinde(r)
    assert check_algebra(alg).ok
    assert reduction_structure_constants(r) == alg.rows


@pytest.mark.parametrize("r", range(1, 9))
def test_duality_identities(r):
    alg = make_verlinde(r)
    assert w_identities(alg)
    for i in range(r):
        assert alg.mul_basis(i, r - 1) == {r - 1 - i: 1}
    assert alg.mul_basis(r - 1, r - 1) == {0: 1}


def test_labels_are_indexed():
    assert make_verlinde(3).labels == ("u0", "u1", "u2")


def test_phi_is_a_homomorphism():
    assert phi_is_homomorphism()


def test_phi_pinned_images():
    half_rt2 = SQRT2 / QSqrt2(2)
    assert phi_v3_to_v2({0: 1}) == {0: QSqrt2(1)}
    assert phi_v3_to_v2({1: 1}) == {0: half_rt2, 1: half_rt2}
    assert phi_v3_to_v2({2: 1}) == {1: QSqrt2(1)}


def test_phi_is_linear():
    x = phi_v3_to_v2({0: 2, 1: 1, 2: 3})
    want = {}
    for i, c in ((0, 2), (1, 1), (2, 3)):
        for k, q in phi_v3_to_v2({i: 1}).items():
            want[k] = want.get(k, QSqrt2(0)) + q * QSqrt2(c)
    assert x == {k: q for k, q in want.items() if q}
