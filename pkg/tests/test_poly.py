from math import comb

import pytest

from toricfan.cone_algebra import cone_from_rays, faces
from toricfan.errors import ConeMismatch, NotAFace
from toricfan.exact_linalg import IntMatrix
from toricfan.poly import (
    GradedPolySpace,
    PolyElement,
    basis_change,
    from_terms,
    global_restriction,
    monomials,
    multiply,
    restriction_matrix,
)

ORTHANT = cone_from_rays(2, [(1, 0), (0, 1)])


def random_poly(rng, cone, q):
    space = GradedPolySpace(cone, q)
    return PolyElement(space, tuple(rng.randint(-4, 4) for _ in range(space.rank)))


def test_monomial_order_and_count():
    assert monomials(2, 2) == ((2, 0), (1, 1), (0, 2))
    assert monomials(0, 0) == ((),) and monomials(0, 3) == ()
    for d in range(1, 5):
        for q in range(5):
            assert len(monomials(d, q)) == comb(q + d - 1, d - 1)
            assert GradedPolySpace(cone_from_rays(d, [tuple(int(i == j) for j in range(d))
                                                      for i in range(d)]), q).rank == comb(q + d - 1, d - 1)


def test_restriction_examples():
    assert restriction_matrix(ORTHANT, ORTHANT, 3) == IntMatrix.identity(4)
    e1 = cone_from_rays(2, [(1, 0)])
    assert restriction_matrix(ORTHANT, e1, 1).tolist() == [[1, 0]]
    s = cone_from_rays(2, [(1, 0), (1, 1)])
    diag = cone_from_rays(2, [(1, 1)])
    assert restriction_matrix(s, diag, 2).tolist() == [[1, 1, 1]]


def test_restriction_to_non_face():
    with pytest.raises(NotAFace):
        basis_change(ORTHANT, cone_from_rays(2, [(1, 1)]))


def test_multiply_examples():
    x = from_terms(ORTHANT, 1, {(1, 0): 1})
    y = from_terms(ORTHANT, 1, {(0, 1): 1})
    one = from_terms(ORTHANT, 0, {(0, 0): 1})
    assert multiply(one, x) == x
    assert multiply(x, y).terms() == {(1, 1): 1}
    s = x + y
    assert multiply(s, s).terms() == {(2, 0): 1, (1, 1): 2, (0, 2): 1}
    with pytest.raises(ConeMismatch):
        multiply(x, from_terms(cone_from_rays(2, [(1, 0)]), 1, {(1,): 1}))


def test_global_restriction():
    assert global_restriction(2, ORTHANT) == IntMatrix.identity(3)
    z = cone_from_rays(2, [])
    g = global_restriction(2, z)
    assert g.shape == (0, 3)
    assert global_restriction(0, z).shape == (1, 1)
    assert global_restriction(1, cone_from_rays(2, [(1, 1)])).tolist() == [[1, 1]]


def test_functoriality(rng):
    cones = [cone_from_rays(3, [(1, 0, 0), (1, 2, 0), (0, 1, 3)]),
             cone_from_rays(3, [(1, 1, 1), (1, -1, 1), (-1, 1, 1), (-1, -1, 1)])]
    for s in cones:
        fs = faces(s)
        for t in fs:
            for r in fs:
                if not (r.is_face_of(t) and t.is_face_of(s)):
                    continue
                for q in range(4):
                    assert (restriction_matrix(t, r, q) @ restriction_matrix(s, t, q)
                            == restriction_matrix(s, r, q))


def test_restriction_is_multiplicative(rng):
    s = cone_from_rays(3, [(1, 0, 0), (1, 2, 0), (0, 1, 3)])
    for t in faces(s):
        for _ in range(5):
            f = random_poly(rng, s, rng.randint(0, 2))
            g = random_poly(rng, s, rng.randint(0, 2))
            assert multiply(f, g).restrict(t) == multiply(f.restrict(t), g.restrict(t))


def test_restriction_agrees_with_evaluation(rng):
    # oracle: evaluate on a lattice point of the face in both coordinate systems
    s = cone_from_rays(3, [(1, 0, 0), (1, 2, 0), (0, 1, 3)])
    for t in faces(s):
        if t.dim == 0:
            continue
        C = basis_change(s, t)
        for _ in range(5):
            f = random_poly(rng, s, rng.randint(0, 3))
            u = tuple(rng.randint(-3, 3) for _ in range(t.dim))
            assert f.restrict(t).evaluate(u) == f.evaluate(C.apply(u))
