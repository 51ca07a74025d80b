"""
Combinatorial topology of fans: reduced simplicial homology over Z, link
homology of cones, cell counts of the torus-orbit CW structure, and the
cubical subdivision of the non-negative part.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from itertools import combinations
from math import comb, factorial
from typing import Iterable, Sequence

from .errors import NotComplete, NotSimplicial
from .exact_linalg import IntMatrix, smith_normal_form
from .fan import Fan, chains, is_complete, is_fan_simplicial

Simplex = tuple[int, ...]


class SimplicialComplexZ:
    """Finite abstract simplicial complex with integer boundary matrices.

    Simplices are sorted vertex tuples; the complex is closed under faces on
    construction.
    """

    def __init__(self, simplices: Iterable[Sequence[int]]):
        faces: set[Simplex] = set()
        for s in simplices:
            s = tuple(sorted(set(s)))
            if not s:
                continue
            for k in range(1, len(s) + 1):
                faces.update(combinations(s, k))
        by_dim: dict[int, list[Simplex]] = {}
        for s in faces:
            by_dim.setdefault(len(s) - 1, []).append(s)
        self.simplices: dict[int, tuple[Simplex, ...]] = {
            d: tuple(sorted(v)) for d, v in sorted(by_dim.items())}
        self.vertices = tuple(s[0] for s in self.simplices.get(0, ()))
        self._index = {d: {s: i for i, s in enumerate(ss)} for d, ss in self.simplices.items()}

    @property
    def dimension(self) -> int:
        return max(self.simplices, default=-1)

    @property
    def f_vector(self) -> tuple[int, ...]:
        return tuple(len(self.simplices[d]) for d in range(self.dimension + 1))

    @property
    def euler(self) -> int:
        return sum((-1) ** d * k for d, k in enumerate(self.f_vector))

    def count(self, d: int) -> int:
        if d == -1:
            return 1
        return len(self.simplices.get(d, ()))

    def boundary_matrix(self, d: int, augmented: bool = True) -> IntMatrix:
        """``∂_d : C_d -> C_{d-1}``; for ``d = 0`` the augmentation to ``C_{-1} = Z``."""
        if d == 0:
            n0 = self.count(0)
            return IntMatrix([[1] * n0], 1, n0) if augmented else IntMatrix.zeros(0, n0)
        src = self.simplices.get(d, ())
        tgt_index = self._index.get(d - 1, {})
        rows = [[0] * len(src) for _ in range(len(tgt_index))]
        for j, s in enumerate(src):
            for k in range(len(s)):
                rows[tgt_index[s[:k] + s[k + 1:]]][j] += (-1) ** k
        return IntMatrix(rows, len(tgt_index), len(src))

    def boundaries_square_to_zero(self) -> bool:
        return all((self.boundary_matrix(d - 1) @ self.boundary_matrix(d)).is_zero()
                   for d in range(1, self.dimension + 1))


@dataclass(frozen=True)
class HomologyGroup:
    degree: int
    free_rank: int
    torsion: tuple[int, ...] = ()

    @property
    def vanishes(self) -> bool:
        return self.free_rank == 0 and not self.torsion


def reduced_homology(c: SimplicialComplexZ) -> dict[int, HomologyGroup]:
    """Reduced homology in degrees ``-1 .. dim``.

    The empty complex has ``H̃_{-1} = Z`` (augmentation ``0 -> Z``); for any
    nonempty complex degree ``-1`` vanishes.
    """
    top = c.dimension
    ranks: dict[int, int] = {}
    snfs = {}
    for d in range(0, top + 2):
        b = c.boundary_matrix(d)
        if b.rows and b.cols:
            snfs[d] = smith_normal_form(b)
            ranks[d] = snfs[d].rank
        else:
            ranks[d] = 0
    out = {}
    for d in range(-1, top + 1):
        z = c.count(d) - ranks.get(d, 0)
        b = ranks.get(d + 1, 0)
        torsion = tuple(x for x in snfs[d + 1].diagonal if x > 1) if d + 1 in snfs else ()
        out[d] = HomologyGroup(d, z - b, torsion)
    return out


def upper_link_complex(f: Fan, sigma: int) -> SimplicialComplexZ:
    """Order complex of ``{τ ∈ f : τ > σ}``: a barycentric model of ``lk σ``."""
    above = [j for j in f.star(sigma) if j != sigma]
    return SimplicialComplexZ(chains(f, above).all_simplices())


def link_homology(f: Fan, sigma) -> dict[int, HomologyGroup]:
    return reduced_homology(upper_link_complex(f, f.cone_id(sigma)))


def free_link_check(f: Fan, sigma) -> bool:
    """``H̃_i(lk σ; Z) = 0`` for all ``i < n - dim σ - 1``; vacuous for maximal ``σ``."""
    i = f.cone_id(sigma)
    if i in f.maximal:
        return True
    bound = f.ambient_rank - f.cones[i].dim - 1
    return all(g.vanishes for d, g in link_homology(f, i).items() if d < bound)


@dataclass(frozen=True)
class CellCensus:
    variant: str
    counts: tuple[int, ...]

    @property
    def euler(self) -> int:
        return sum((-1) ** d * k for d, k in enumerate(self.counts))


FIELDS = ("C", "R", "R+")


def cell_census(f: Fan, k: str) -> CellCensus:
    """Ordinary cells of ``(T(k) × |F(Σ)|)/∼``.

    A chain ``σ_0 < ... < σ_p`` carries the torus ``T/T_{σ_0}`` of rank
    ``m = n - dim σ_0``: over C it splits into ``C(m, j)`` cells of dimension
    ``j`` (times the p-simplex), over R into ``2^m`` points, over R+ it is a
    point.
    """
    if k not in FIELDS:
        raise ValueError(f"unknown field {k!r}; expected one of {FIELDS}")
    n = f.ambient_rank
    counts: dict[int, int] = {}
    for ch in chains(f, range(len(f.cones))).all_simplices():
        p = len(ch) - 1
        m = n - f.cones[ch[0]].dim
        if k == "C":
            for j in range(m + 1):
                counts[j + p] = counts.get(j + p, 0) + comb(m, j)
        elif k == "R":
            counts[p] = counts.get(p, 0) + 2 ** m
        else:
            counts[p] = counts.get(p, 0) + 1
    top = max(counts)
    return CellCensus(k, tuple(counts.get(d, 0) for d in range(top + 1)))


@dataclass(frozen=True)
class Cube:
    bottom: int
    top: int
    dim: int
    simplices: tuple[Simplex, ...] = field(repr=False)

    @property
    def top_simplices(self) -> tuple[Simplex, ...]:
        return tuple(s for s in self.simplices if len(s) - 1 == self.dim)


@dataclass(frozen=True)
class CubicalSubdivision:
    cubes: tuple[Cube, ...]

    @property
    def counts(self) -> tuple[int, ...]:
        top = max(c.dim for c in self.cubes)
        return tuple(sum(1 for c in self.cubes if c.dim == d) for d in range(top + 1))

    @property
    def euler(self) -> int:
        return sum((-1) ** d * k for d, k in enumerate(self.counts))

    def cubes_containing(self, simplex: Simplex) -> list[Cube]:
        return [c for c in self.cubes if simplex in set(c.simplices)]


def cubical_subdivision(f: Fan) -> CubicalSubdivision:
    """One cube ``I_τ^σ`` per pair ``τ ≤ σ``, made of the chains in ``[τ, σ]``."""
    if not is_complete(f):
        raise NotComplete("cubical subdivision needs a complete fan")
    if not is_fan_simplicial(f):
        raise NotSimplicial("cubical subdivision needs a simplicial fan")
    cubes = []
    for s in range(len(f.cones)):
        for t in sorted(f.face_ids[s]):
            interval = [j for j in f.face_ids[s] if t in f.face_ids[j]]
            simplices = chains(f, interval).all_simplices()
            cubes.append(Cube(t, s, f.cones[s].dim - f.cones[t].dim, tuple(simplices)))
    cubes.sort(key=lambda c: (c.dim, c.bottom, c.top))
    return CubicalSubdivision(tuple(cubes))


def expected_top_simplices(d: int) -> int:
    return factorial(d)


def homology_rank_check(c: SimplicialComplexZ) -> bool:
    """Euler–Poincaré: alternating sum of reduced Betti numbers equals ``χ - 1``."""
    h = reduced_homology(c)
    return sum((-1) ** d * g.free_rank for d, g in h.items()) == c.euler - 1
