from fractions import Fraction

import pytest
from hypothesis import given, settings, strategies as st

from apolarium.exact import (EchelonState, SparseEchelon, identity,
                             kernel_basis, mat, mat_mul, rank, rat,
                             row_reduce_incremental, rref, solve_unique,
                             transpose, zeros)

F = Fraction


def test_rat_accepts_ints_fractions_strings():
    assert rat(3) == F(3)
    assert rat(F(2, 4)) == F(1, 2)
    assert rat("5/15") == F(1, 3)


def test_rat_rejects_floats():
    with pytest.raises(TypeError):
        rat(0.5)


def test_rref_known_matrix():
    m = mat([[1, 2, 3], [2, 4, 6], [1, 1, 1]])
    rows, pivots = rref(m)
    assert pivots == [0, 1]
    assert rows == [[F(1), F(0), F(-1)], [F(0), F(1), F(2)]]


def test_rref_drops_zero_rows_and_is_fully_reduced():
    m = mat([[0, 0], [1, 5], [2, 10]])
    rows, pivots = rref(m)
    assert rows == [[F(1), F(5)]]
    assert pivots == [0]


def test_rank_examples():
    assert rank(mat([[1, 2], [2, 4]])) == 1
    assert rank(identity(4)) == 4
    assert rank(zeros(3, 5)) == 0


def test_kernel_basis_dimension_and_membership():
    m = mat([[1, 1, 0], [0, 0, 1]])
    ker = kernel_basis(m)
    assert len(ker) == 1
    v = ker[0]
    for row in m:
        assert sum(a * b for a, b in zip(row, v)) == 0


def test_solve_unique():
    m = mat([[2, 1], [1, 3]])
    x = solve_unique(m, [F(5), F(10)])
    assert [sum(a * b for a, b in zip(row, x)) for row in m] == [F(5), F(10)]


def test_solve_unique_rejects_singular():
    with pytest.raises(ValueError):
        solve_unique(mat([[1, 2], [2, 4]]), [F(1), F(1)])


def test_incremental_matches_batch_rank():
    rows = mat([[1, 2, 3], [1, 2, 3], [0, 1, 1], [2, 5, 7]])
    state = None
    accepted = 0
    for row in rows:
        state, ok = row_reduce_incremental(state, row, ncols=3)
        accepted += ok
    assert accepted == rank(rows)


def test_sparse_echelon_contains_and_basis():
    order = {"a": 0, "b": 1, "c": 2}
    ech = SparseEchelon(order.get)
    assert ech.insert({"a": F(1), "b": F(1)})
    assert ech.insert({"b": F(2)})
    assert not ech.insert({"a": F(3), "b": F(-1)})
    assert ech.contains({"a": F(5), "b": F(7)})
    assert not ech.contains({"c": F(1)})
    basis = ech.basis()
    assert len(basis) == 2
    # fully reduced: the pivot of one row does not appear in the other
    assert basis[0] == {"a": F(1)}


small_rat = st.integers(-6, 6).map(F)
matrices = st.integers(1, 5).flatmap(
    lambda n: st.integers(1, 5).flatmap(
        lambda m: st.lists(
            st.lists(small_rat, min_size=m, max_size=m),
            min_size=n, max_size=n)))


@settings(max_examples=60, deadline=None)
@given(matrices)
def test_rank_equals_transpose_rank(m):
    assert rank(m) == rank(transpose(m))


@settings(max_examples=60, deadline=None)
@given(matrices)
def test_rank_nullity(m):
    ncols = len(m[0])
    assert rank(m) + len(kernel_basis(m)) == ncols


@settings(max_examples=60, deadline=None)
@given(matrices)
def test_rref_is_idempotent(m):
    rows, _ = rref(m)
    if rows:
        again, _ = rref(rows)
        assert again == rows


@settings(max_examples=40, deadline=None)
@given(matrices)
def test_kernel_vectors_annihilate(m):
    for v in kernel_basis(m):
        for row in m:
            assert sum(a * b for a, b in zip(row, v)) == 0


@settings(max_examples=30, deadline=None)
@given(matrices, matrices)
def test_product_rank_bound(a, b):
    # reshape b to have exactly ncols(a) rows so the product is defined
    need = len(a[0])
    b = [b[i % len(b)] for i in range(need)]
    p = mat_mul(a, b)
    assert rank(p) <= min(rank(a), rank(b))
