"""
Fans as face-closed collections of cones with their face poset.

Cones inside a :class:`Fan` are addressed by integer ids. Ids follow the
canonical order (dimension, then sorted ray list), so every proper face of a
cone has a smaller id and maximal-cone orderings are reproducible.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from functools import cached_property
from itertools import combinations
from typing import Iterable, Sequence

from .cone_algebra import (
    Cone,
    cone_from_rays,
    interior_point,
    intersect,
    is_simplicial,
    is_smooth,
    quotient_map,
)
from .errors import ConeNotInFan, NotAFan, NotStronglyConvex


class Fan:
    """A rational fan in ``N = Z^ambient_rank``, stored fully face-closed."""

    def __init__(self, ambient_rank: int, cones: Iterable[Cone]):
        self.ambient_rank = ambient_rank
        generators = list(dict.fromkeys(cones))
        for c in generators:
            if c.ambient_rank != ambient_rank:
                raise ValueError(f"{c!r} does not live in rank {ambient_rank}")

        closure: dict[Cone, None] = {}
        for c in generators:
            for face in c.faces:
                closure.setdefault(face, None)
        if not closure:
            closure[cone_from_rays(ambient_rank, [])] = None

        self.cones: tuple[Cone, ...] = tuple(sorted(closure, key=Cone.sort_key))
        self._ids = {c: i for i, c in enumerate(self.cones)}
        self.face_ids: tuple[frozenset[int], ...] = tuple(
            frozenset(self._ids[f] for f in c.faces) for c in self.cones)
        cofaces: list[set[int]] = [set() for _ in self.cones]
        for j, fs in enumerate(self.face_ids):
            for i in fs:
                cofaces[i].add(j)
        self.coface_ids: tuple[frozenset[int], ...] = tuple(frozenset(s) for s in cofaces)
        self.maximal: tuple[int, ...] = tuple(
            i for i, co in enumerate(self.coface_ids) if len(co) == 1)
        self._check_fan_condition()

    def _check_fan_condition(self) -> None:
        for i, j in combinations(self.maximal, 2):
            a, b = self.cones[i], self.cones[j]
            meet = intersect(a, b)
            if meet not in a.faces or meet not in b.faces:
                raise NotAFan(
                    f"{a!r} and {b!r} intersect in {meet!r}, which is not a common face",
                    pair=(a, b))

    # lookup
    def __len__(self) -> int:
        return len(self.cones)

    def __iter__(self):
        return iter(self.cones)

    def __contains__(self, c: object) -> bool:
        return c in self._ids

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, Fan):
            return NotImplemented
        return self.ambient_rank == other.ambient_rank and self.cones == other.cones

    def __hash__(self) -> int:
        return hash((self.ambient_rank, self.cones))

    def __repr__(self) -> str:
        return f"Fan(n={self.ambient_rank}, f_vector={self.f_vector})"

    def cone_id(self, c: Cone | int) -> int:
        if isinstance(c, int):
            if not 0 <= c < len(self.cones):
                raise ConeNotInFan(f"no cone with id {c}")
            return c
        try:
            return self._ids[c]
        except KeyError:
            raise ConeNotInFan(f"{c!r} is not a cone of this fan") from None

    def dim(self, i: int) -> int:
        return self.cones[i].dim

    def ids_of_dim(self, d: int) -> list[int]:
        return [i for i, c in enumerate(self.cones) if c.dim == d]

    @property
    def zero_id(self) -> int:
        return 0

    @cached_property
    def f_vector(self) -> tuple[int, ...]:
        top = max(c.dim for c in self.cones)
        return tuple(len(self.ids_of_dim(d)) for d in range(top + 1))

    @cached_property
    def rays(self) -> tuple[tuple[int, ...], ...]:
        return tuple(self.cones[i].rays[0] for i in self.ids_of_dim(1))

    def is_face(self, i: int, j: int) -> bool:
        """Whether cone ``i`` is a face of cone ``j``."""
        return i in self.face_ids[j]

    def facets(self, i: int) -> list[int]:
        d = self.cones[i].dim
        return sorted(k for k in self.face_ids[i] if self.cones[k].dim == d - 1)

    def meet(self, i: int, j: int) -> int:
        """Id of ``σ_i ∩ σ_j``; in a fan it is the face spanned by the common rays."""
        common = self.face_ids[i] & self.face_ids[j]
        return max(common, key=lambda k: self.cones[k].dim)

    def star(self, i: int) -> list[int]:
        return sorted(self.coface_ids[i])

    def maximal_in_star(self, i: int) -> list[int]:
        return [j for j in self.maximal if i in self.face_ids[j]]

    def covers_point(self, point: Sequence) -> bool:
        return any(self.cones[i].contains(point) for i in self.maximal)


def fan_from_maximal(ambient_rank: int, maximal_cones: Sequence[Sequence[int]],
                     rays: Sequence[Sequence[int]]) -> Fan:
    """Fan generated by cones given as index lists into ``rays``.

    Cones listed that are faces of others simply disappear from the maximal
    list; a pair meeting in a non-face raises NotAFan.
    """
    cones = []
    for k, idx in enumerate(maximal_cones):
        try:
            cones.append(cone_from_rays(ambient_rank, [rays[i] for i in idx]))
        except NotStronglyConvex as exc:
            raise NotStronglyConvex(str(exc), cone_index=k) from None
    return Fan(ambient_rank, cones)


def maximal_full_dim(f: Fan) -> bool:
    return all(f.cones[i].dim == f.ambient_rank for i in f.maximal)


def facet_components(f: Fan, ids: Sequence[int]) -> list[list[int]]:
    """Components of ``ids`` under "the two cones share a common facet"."""
    parent = {i: i for i in ids}

    def find(x):
        while parent[x] != x:
            parent[x] = parent[parent[x]]
            x = parent[x]
        return x

    for a, b in combinations(ids, 2):
        m = f.meet(a, b)
        dm = f.cones[m].dim
        if dm == f.cones[a].dim - 1 and dm == f.cones[b].dim - 1:
            ra, rb = find(a), find(b)
            if ra != rb:
                parent[max(ra, rb)] = min(ra, rb)
    groups: dict[int, list[int]] = {}
    for i in ids:
        groups.setdefault(find(i), []).append(i)
    return sorted(groups.values())


def is_complete(f: Fan) -> bool:
    """Support equals ``N_R``.

    Criterion: pure of full dimension, every codimension-one cone lies in
    exactly two full-dimensional cones, and those cones are facet-connected.
    """
    n = f.ambient_rank
    if not maximal_full_dim(f):
        return False
    top = f.ids_of_dim(n)
    for t in f.ids_of_dim(n - 1) if n >= 1 else []:
        if sum(1 for j in f.coface_ids[t] if f.cones[j].dim == n) != 2:
            return False
    return len(facet_components(f, top)) == 1


def is_fan_smooth(f: Fan) -> bool:
    return all(is_smooth(c) for c in f.cones)


def is_fan_simplicial(f: Fan) -> bool:
    return all(is_simplicial(c) for c in f.cones)


@dataclass(frozen=True)
class OrderComplex:
    """Strictly ascending chains of cone ids, grouped by simplex dimension."""

    vertices: tuple[int, ...]
    simplices: dict[int, tuple[tuple[int, ...], ...]] = field(repr=False)

    @property
    def dimension(self) -> int:
        return max(self.simplices, default=-1)

    @property
    def f_vector(self) -> tuple[int, ...]:
        return tuple(len(self.simplices[p]) for p in range(self.dimension + 1))

    @property
    def euler(self) -> int:
        return sum((-1) ** p * k for p, k in enumerate(self.f_vector))

    def all_simplices(self) -> list[tuple[int, ...]]:
        return [s for p in sorted(self.simplices) for s in self.simplices[p]]


def chains(f: Fan, ids: Iterable[int]) -> OrderComplex:
    """Order complex of the subposet of ``f`` on ``ids``."""
    verts = tuple(sorted(set(ids)))
    vset = set(verts)
    up = {i: sorted(j for j in f.coface_ids[i] if j != i and j in vset) for i in verts}
    out: dict[int, list[tuple[int, ...]]] = {}

    def extend(chain):
        out.setdefault(len(chain) - 1, []).append(chain)
        for j in up[chain[-1]]:
            extend(chain + (j,))

    for v in verts:
        extend((v,))
    return OrderComplex(verts, {p: tuple(sorted(s)) for p, s in sorted(out.items())})


def order_complex(f: Fan) -> OrderComplex:
    return chains(f, range(len(f.cones)))


def star_poset(f: Fan, sigma: Cone | int) -> list[int]:
    return f.star(f.cone_id(sigma))


def star_fan(f: Fan, sigma: Cone | int) -> Fan:
    """The star of ``σ`` pushed to ``N(σ)``; describes the orbit closure."""
    i = f.cone_id(sigma)
    pi = quotient_map(f.cones[i])
    images = [cone_from_rays(pi.target_rank, [pi(r) for r in f.cones[j].rays])
              for j in f.maximal_in_star(i)]
    return Fan(pi.target_rank, images)


def barycentric_fan(f: Fan, sigma: Cone | int = 0) -> Fan:
    """Barycentric subdivision of the star of ``σ``, living in ``N(σ)``.

    One cone per chain ``σ = σ_0 < ... < σ_p``, spanned by the projected
    interior points of ``σ_1, ..., σ_p``.
    """
    i = f.cone_id(sigma)
    pi = quotient_map(f.cones[i])
    points = {j: pi(interior_point(f.cones[j])) for j in f.star(i) if j != i}
    oc = chains(f, f.star(i))
    top = [ch for ch in oc.all_simplices() if ch[0] == i and _is_saturated_top(f, ch)]
    cones = [cone_from_rays(pi.target_rank, [points[j] for j in ch[1:]]) for ch in top]
    if not cones:
        cones = [cone_from_rays(pi.target_rank, [])]
    return Fan(pi.target_rank, cones)


def _is_saturated_top(f: Fan, chain: tuple[int, ...]) -> bool:
    # maximal chains of the star: end at a maximal cone, consecutive dims
    if chain[-1] not in f.maximal:
        return False
    return all(f.cones[b].dim == f.cones[a].dim + 1 for a, b in zip(chain, chain[1:]))


@dataclass
class HereditaryReport:
    hereditary: bool
    maximal_full_dim: bool
    failures: dict[int, list[list[int]]]

    def __bool__(self) -> bool:
        return self.hereditary


def hereditary_report(f: Fan) -> HereditaryReport:
    full = maximal_full_dim(f)
    failures = {}
    for t in range(len(f.cones)):
        comps = facet_components(f, f.maximal_in_star(t))
        if len(comps) > 1:
            failures[t] = comps
    return HereditaryReport(full and not failures, full, failures)


def is_hereditary(f: Fan) -> bool:
    return hereditary_report(f).hereditary


def validate_completion(f: Fan, g: Fan) -> bool:
    """Whether ``g`` is a complete fan containing ``f`` as a subfan."""
    if f.ambient_rank != g.ambient_rank:
        return False
    if any(c not in g for c in f.cones):
        return False
    if not is_complete(g):
        return False
    inside = {g.cone_id(c) for c in f.cones}
    # f must be face-closed inside g, so chains starting outside f stay outside
    for i in inside:
        if not g.face_ids[i] <= inside:
            return False
    f_chains = {tuple(g.cone_id(f.cones[k]) for k in ch)
                for ch in order_complex(f).all_simplices()}
    for ch in chains(g, inside).all_simplices():
        if ch not in f_chains:
            return False
    outside = set(range(len(g.cones))) - inside
    for ch in order_complex(g).all_simplices():
        if ch[0] not in inside and not set(ch) <= outside:
            return False
    return True
