import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from toricfan.exact_linalg import (
    IntMatrix,
    cokernel_invariants,
    determinant,
    hermite_normal_form,
    is_unimodular,
    kernel_basis,
    primitive,
    rank,
    rank_mod_p,
    smith_normal_form,
    solve_integer,
)

from oracles import fraction_rank


def random_matrix(rng, max_size=12, bound=9):
    m, n = rng.randint(1, max_size), rng.randint(1, max_size)
    return IntMatrix([[rng.randint(-bound, bound) for _ in range(n)] for _ in range(m)])


def check_snf(A: IntMatrix):
    s = smith_normal_form(A)
    D = s.left @ A @ s.right
    assert D.is_diagonal()
    assert tuple(D[i, i] for i in range(min(A.shape))) == s.diagonal
    nz = [d for d in s.diagonal if d]
    assert all(d > 0 for d in nz)
    assert all(b % a == 0 for a, b in zip(nz, nz[1:]))
    assert s.diagonal[:len(nz)] == tuple(nz)
    assert is_unimodular(s.left) and is_unimodular(s.right)
    return s


def test_snf_examples():
    assert smith_normal_form(IntMatrix([[2, 4], [6, 8]])).diagonal == (2, 4)
    assert smith_normal_form(IntMatrix.identity(3)).diagonal == (1, 1, 1)
    assert smith_normal_form(IntMatrix.zeros(2, 3)).diagonal == (0, 0)


def test_kernel_examples():
    assert kernel_basis(IntMatrix([[1, -1]])).columns() == [(1, 1)]
    assert kernel_basis(IntMatrix.identity(3)).cols == 0
    A = IntMatrix([[1, 2, 3]])
    K = kernel_basis(A)
    assert K.cols == 2
    assert (A @ K).is_zero()


def test_cokernel_examples():
    assert cokernel_invariants(IntMatrix([[2]])) == (0, [2])
    assert cokernel_invariants(IntMatrix.zeros(3, 0)) == (3, [])
    assert cokernel_invariants(IntMatrix([[1, 0], [0, 6]])) == (0, [6])


def test_determinant_and_unimodular():
    assert determinant(IntMatrix([[1, 2], [3, 4]])) == -2
    assert determinant(IntMatrix([[2, 0, 0], [0, 3, 0], [1, 1, 1]])) == 6
    assert is_unimodular(IntMatrix([[2, 1], [1, 1]]))
    assert not is_unimodular(IntMatrix([[2, 0], [0, 1]]))


def test_rank_mod_p_sees_torsion():
    A = IntMatrix([[2, 0], [0, 3]])
    assert rank(A) == 2
    assert rank_mod_p(A, 2) == 1
    assert rank_mod_p(A, 3) == 1
    assert rank_mod_p(A, 5) == 2


def test_hnf_is_canonical():
    A = IntMatrix([[2, 4, 4], [-6, 6, 12], [10, -4, -16]])
    H = hermite_normal_form(A)
    # same row lattice under a unimodular change of rows
    U = IntMatrix([[1, 1, 0], [0, 1, 0], [3, 2, 1]])
    assert hermite_normal_form(U @ A) == H
    # leading entries positive and strictly to the right
    leads = [next(j for j in range(H.cols) if H[i, j]) for i in range(H.rows)]
    assert leads == sorted(set(leads))
    assert all(H[i, leads[i]] > 0 for i in range(H.rows))


def test_solve_integer():
    A = IntMatrix([[2, 0], [0, 3]])
    assert solve_integer(A, (4, 9)) == (2, 3)
    assert solve_integer(A, (1, 0)) is None
    assert primitive((4, -6, 0)) == (2, -3, 0)


def test_random_property_suite(rng):
    for _ in range(200):
        A = random_matrix(rng)
        s = check_snf(A)
        K = kernel_basis(A)
        r = rank(A)
        assert r == s.rank == fraction_rank(A.tolist())
        assert K.cols + r == A.cols
        assert (A @ K).is_zero()
        # the kernel basis is saturated: its SNF diagonal is all ones
        if K.cols:
            assert all(d == 1 for d in smith_normal_form(K).diagonal)


small_matrices = st.integers(1, 5).flatmap(lambda m: st.integers(1, 5).flatmap(
    lambda n: st.lists(st.lists(st.integers(-6, 6), min_size=n, max_size=n),
                       min_size=m, max_size=m)))


@settings(max_examples=150, deadline=None)
@given(small_matrices)
def test_snf_hypothesis(data):
    A = IntMatrix(data)
    s = check_snf(A)
    free, torsion = cokernel_invariants(A)
    assert free == A.rows - s.rank
    assert all(t > 1 for t in torsion)
    if A.rows == A.cols:
        prod = 1
        for d in s.diagonal:
            prod *= d
        assert prod == abs(determinant(A))


@settings(max_examples=100, deadline=None)
@given(small_matrices, st.sampled_from([2, 3, 5, 7]))
def test_rank_mod_p_bounded_by_rank(data, p):
    A = IntMatrix(data)
    assert rank_mod_p(A, p) <= rank(A)
    assert rank_mod_p(A, p) == sum(1 for d in smith_normal_form(A).diagonal if d % p)


def test_ragged_data_rejected():
    with pytest.raises(ValueError):
        IntMatrix([[1, 2], [3]])
