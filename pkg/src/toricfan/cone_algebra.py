"""
Strongly convex rational polyhedral cones.

A :class:`Cone` carries both descriptions: its primitive extremal rays and
its facet normals (plus equations cutting out its linear span). The facet
description is computed by the double description method, run in
coordinates of a lattice basis of the span so that the cone is always
full-dimensional there.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from functools import cached_property
from fractions import Fraction
from typing import Iterable, Sequence

from .errors import NotStronglyConvex, ZeroCone
from .exact_linalg import (
    IntMatrix,
    determinant,
    hermite_normal_form,
    kernel_basis,
    primitive,
    rank,
    smith_normal_form,
    solve_integer,
)

Vector = tuple[int, ...]


def _dot(a: Sequence, b: Sequence):
    return sum(x * y for x, y in zip(a, b))


def extreme_rays(inequalities: Sequence[Sequence[int]], dim: int) -> list[Vector]:
    """Extreme rays of the pointed cone ``{x in R^dim : a.x >= 0}``.

    ``inequalities`` must have rank ``dim``. Rows are added one at a time
    (double description); new rays come only from adjacent pairs, tested
    algebraically, so no redundant generators are ever created.
    """
    rows = [tuple(a) for a in inequalities if any(a)]
    if dim == 0:
        return []
    basis_idx: list[int] = []
    for i in range(len(rows)):
        if rank([rows[j] for j in basis_idx + [i]]) == len(basis_idx) + 1:
            basis_idx.append(i)
            if len(basis_idx) == dim:
                break
    if len(basis_idx) < dim:
        raise NotStronglyConvex("inequality system does not define a pointed cone")

    # initial simplicial cone: ray j lies on every basis hyperplane except j
    rays: list[tuple[Vector, frozenset]] = []
    for j, bj in enumerate(basis_idx):
        others = [rows[i] for i in basis_idx if i != bj]
        if others:
            k = kernel_basis(IntMatrix(others, dim - 1, dim)).column(0)
        else:
            k = (1,)
        if _dot(rows[bj], k) < 0:
            k = tuple(-x for x in k)
        rays.append((primitive(k), frozenset(i for i in basis_idx if i != bj)))

    for idx, a in enumerate(rows):
        if idx in basis_idx:
            continue
        pos, zero, neg = [], [], []
        for r, z in rays:
            v = _dot(a, r)
            (pos if v > 0 else neg if v < 0 else zero).append((r, z, v))
        if not neg:
            rays = [(r, z) for r, z, _ in pos] + [(r, z | {idx}) for r, z, _ in zero]
            continue
        new = []
        if dim >= 2:
            for p, zp, vp in pos:
                for q, zq, vq in neg:
                    common = zp & zq
                    if len(common) < dim - 2:
                        continue
                    if rank([rows[i] for i in sorted(common)]) != dim - 2:
                        continue
                    combo = primitive(tuple(vp * y - vq * x for x, y in zip(p, q)))
                    new.append((combo, common | {idx}))
        rays = ([(r, z) for r, z, _ in pos] + [(r, z | {idx}) for r, z, _ in zero] + new)

    seen: dict[Vector, None] = {}
    for r, _ in rays:
        seen.setdefault(r, None)
    return sorted(seen)


@dataclass(frozen=True, eq=False)
class Cone:
    """A strongly convex rational cone in ``N = Z^ambient_rank``.

    ``rays`` are the primitive extremal generators, sorted. ``facet_normals``
    are primitive elements of ``M`` nonnegative on the cone, one per facet;
    ``orthogonal`` is a basis of the annihilator of the span. Together they
    give the inequality description. ``span_basis`` is a Hermite-reduced
    Z-basis of ``N ∩ lin(cone)``; its order fixes the cone's orientation.
    """

    ambient_rank: int
    rays: tuple[Vector, ...]
    facet_normals: tuple[Vector, ...]
    orthogonal: tuple[Vector, ...]
    span_basis: tuple[Vector, ...]
    _key: tuple = field(init=False, repr=False)

    def __post_init__(self):
        object.__setattr__(self, "_key", (self.ambient_rank, self.rays))

    @property
    def dim(self) -> int:
        return len(self.span_basis)

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, Cone):
            return NotImplemented
        return self._key == other._key

    def __hash__(self) -> int:
        return hash(self._key)

    def sort_key(self) -> tuple:
        return (self.dim, self.rays)

    def __repr__(self) -> str:
        return f"Cone(n={self.ambient_rank}, rays={[list(r) for r in self.rays]})"

    @cached_property
    def span_matrix(self) -> IntMatrix:
        """``n x dim`` matrix whose columns are ``span_basis``."""
        return IntMatrix.from_columns(self.span_basis, self.ambient_rank)

    def coordinates(self, v: Sequence[int]) -> Vector:
        """Coordinates of a lattice point of ``N_σ`` in ``span_basis``."""
        x = solve_integer(self.span_matrix, v)
        if x is None:
            raise ValueError(f"{list(v)} is not in the lattice spanned by {self!r}")
        return x

    def contains(self, point: Sequence) -> bool:
        """Membership via the inequality description; accepts Fractions."""
        return (all(_dot(m, point) >= 0 for m in self.facet_normals)
                and all(_dot(o, point) == 0 for o in self.orthogonal))

    def contains_cone(self, other: "Cone") -> bool:
        return all(self.contains(r) for r in other.rays)

    def relative_interior_contains(self, point: Sequence) -> bool:
        return (all(_dot(m, point) > 0 for m in self.facet_normals)
                and all(_dot(o, point) == 0 for o in self.orthogonal))

    @cached_property
    def faces(self) -> tuple["Cone", ...]:
        return tuple(faces(self))

    def is_face_of(self, other: "Cone") -> bool:
        return self.dim <= other.dim and self in other.faces


def _normalize_rays(ambient_rank: int, rays: Iterable[Sequence[int]]) -> list[Vector]:
    out: dict[Vector, None] = {}
    for r in rays:
        r = tuple(int(x) for x in r)
        if len(r) != ambient_rank:
            raise ValueError(f"ray {list(r)} does not have length {ambient_rank}")
        if any(r):
            out.setdefault(primitive(r), None)
    return sorted(out)


def cone_from_rays(ambient_rank: int, rays: Iterable[Sequence[int]]) -> Cone:
    """Build a cone from (possibly redundant, non-primitive) generators.

    Raises NotStronglyConvex if the generators span a cone containing a line.
    """
    n = ambient_rank
    gens = _normalize_rays(n, rays)
    if not gens:
        ident = tuple(tuple(int(i == j) for j in range(n)) for i in range(n))
        return Cone(n, (), (), ident, ())

    R = IntMatrix(gens, len(gens), n)
    orth_cols = kernel_basis(R)
    orthogonal = tuple(hermite_normal_form(orth_cols.T).tolist()) if orth_cols.cols else ()
    orthogonal = tuple(tuple(o) for o in orthogonal)
    if orthogonal:
        span_cols = kernel_basis(IntMatrix(orthogonal, len(orthogonal), n))
    else:
        span_cols = IntMatrix.identity(n)
    span_basis = tuple(tuple(b) for b in hermite_normal_form(span_cols.T).tolist())
    d = len(span_basis)
    B = IntMatrix.from_columns(span_basis, n)
    coords = [solve_integer(B, g) for g in gens]

    facets_local = extreme_rays(coords, d)
    if (rank(facets_local) if facets_local else 0) < d:
        raise NotStronglyConvex(
            f"generators {[list(g) for g in gens]} span a cone containing a line")

    extremal = []
    for g, c in zip(gens, coords):
        tight = [f for f in facets_local if _dot(f, c) == 0]
        if (rank(tight) if tight else 0) == d - 1:
            extremal.append(g)

    Bt = B.T
    normals = []
    for f in facets_local:
        m = solve_integer(Bt, f)
        normals.append(primitive(m))
    return Cone(n, tuple(sorted(extremal)), tuple(sorted(normals)), orthogonal, span_basis)


def zero_cone(ambient_rank: int) -> Cone:
    return cone_from_rays(ambient_rank, [])


def cone_from_inequalities(ambient_rank: int, inequalities: Sequence[Sequence[int]],
                           equations: Sequence[Sequence[int]] = ()) -> Cone:
    """Cone ``{x : a.x >= 0, e.x = 0}``; the result must be pointed."""
    n = ambient_rank
    eqs = [tuple(e) for e in equations if any(e)]
    if eqs:
        K = kernel_basis(IntMatrix(eqs, len(eqs), n))
    else:
        K = IntMatrix.identity(n)
    k = K.cols
    if k == 0:
        return zero_cone(n)
    local = [K.T.apply(a) for a in inequalities]
    if (rank(local) if local else 0) < k:
        raise NotStronglyConvex("inequality system has a lineality space")
    rays_local = extreme_rays(local, k)
    return cone_from_rays(n, [K.apply(r) for r in rays_local])


def intersect(a: Cone, b: Cone) -> Cone:
    if a.ambient_rank != b.ambient_rank:
        raise ValueError("cones live in different lattices")
    return cone_from_inequalities(
        a.ambient_rank, a.facet_normals + b.facet_normals, a.orthogonal + b.orthogonal)


def dual_cone(c: Cone) -> Cone:
    """The dual cone in ``M``; only strongly convex for full-dimensional ``c``."""
    if c.dim < c.ambient_rank:
        raise NotStronglyConvex(
            f"dual of {c!r} contains its orthogonal complement (dim {c.dim} < {c.ambient_rank})")
    return cone_from_rays(c.ambient_rank, c.facet_normals)


def faces(c: Cone) -> list[Cone]:
    """All faces of ``c`` (itself and the zero cone included), sorted by dim."""
    rays = c.rays
    top = frozenset(range(len(rays)))
    found = {top}
    stack = [top]
    while stack:
        s = stack.pop()
        for m in c.facet_normals:
            t = frozenset(i for i in s if _dot(m, rays[i]) == 0)
            if t not in found:
                found.add(t)
                stack.append(t)
    out = [c if s == top else cone_from_rays(c.ambient_rank, [rays[i] for i in sorted(s)])
           for s in found]
    return sorted(out, key=Cone.sort_key)


def interior_point(c: Cone) -> Vector:
    """Sum of the primitive ray generators; lies in the relative interior."""
    if c.dim == 0:
        raise ZeroCone("the zero cone has no nonzero interior point")
    return tuple(sum(col) for col in zip(*c.rays))


def is_simplicial(c: Cone) -> bool:
    return len(c.rays) == c.dim


def is_smooth(c: Cone) -> bool:
    if not is_simplicial(c):
        return False
    if c.dim == 0:
        return True
    snf = smith_normal_form(IntMatrix(c.rays, len(c.rays), c.ambient_rank))
    return all(d == 1 for d in snf.diagonal)


def multiplicity(c: Cone) -> int:
    """Index of the sublattice generated by the rays in ``N_σ`` (simplicial cones)."""
    if not is_simplicial(c):
        raise ValueError("multiplicity is only defined here for simplicial cones")
    if c.dim == 0:
        return 1
    coords = [c.coordinates(r) for r in c.rays]
    return abs(determinant(coords))


@dataclass(frozen=True)
class QuotientMap:
    """``π_σ : N -> N/N_σ`` as an integer matrix in fixed bases."""

    source_rank: int
    target_rank: int
    matrix: IntMatrix

    def __call__(self, v: Sequence[int]) -> Vector:
        return self.matrix.apply(v)


def quotient_map(c: Cone) -> QuotientMap:
    """The projection killing ``N_σ``; target basis is dual to the
    Hermite-reduced basis of the annihilator of the span."""
    n = c.ambient_rank
    mat = IntMatrix(c.orthogonal, len(c.orthogonal), n)
    return QuotientMap(n, n - c.dim, mat)


def rational_point_in_cone_by_generators(c: Cone, point: Sequence[Fraction]) -> bool:
    """Membership by writing ``point`` as a nonnegative combination of rays.

    Tries every linearly independent subset of ``dim`` rays (a triangulation
    covers the cone, so some simplicial subcone contains the point). Meant as
    a slow independent check of :meth:`Cone.contains`.
    """
    from itertools import combinations

    if any(_dot(o, point) != 0 for o in c.orthogonal):
        return False
    if c.dim == 0:
        return all(x == 0 for x in point)
    coords_rays = [c.coordinates(r) for r in c.rays]
    # coordinates of the point: solve over Q in the span basis
    target = _rational_coordinates(c, point)
    for subset in combinations(range(len(c.rays)), c.dim):
        mat = [[Fraction(coords_rays[j][i]) for j in subset] for i in range(c.dim)]
        lam = _solve_square_fraction(mat, target)
        if lam is not None and all(x >= 0 for x in lam):
            return True
    return False


def _rational_coordinates(c: Cone, point: Sequence[Fraction]) -> list[Fraction]:
    B = [[Fraction(c.span_basis[j][i]) for j in range(c.dim)] for i in range(c.ambient_rank)]
    # least-squares-free: pick dim independent rows of B
    rows = []
    for i in range(c.ambient_rank):
        trial = rows + [i]
        if rank([c.span_matrix.row(k) for k in trial]) == len(trial):
            rows = trial
        if len(rows) == c.dim:
            break
    sol = _solve_square_fraction([B[i] for i in rows], [Fraction(point[i]) for i in rows])
    assert sol is not None
    return sol


def _solve_square_fraction(mat: list[list[Fraction]], rhs: list[Fraction]) -> list[Fraction] | None:
    n = len(mat)
    M = [list(row) + [rhs[i]] for i, row in enumerate(mat)]
    for c in range(n):
        piv = next((i for i in range(c, n) if M[i][c] != 0), None)
        if piv is None:
            return None
        M[c], M[piv] = M[piv], M[c]
        for i in range(n):
            if i != c and M[i][c] != 0:
                k = M[i][c] / M[c][c]
                M[i] = [x - k * y for x, y in zip(M[i], M[c])]
    return [M[i][n] / M[i][i] for i in range(n)]
