"""
Piecewise polynomials on a fan.

``PP(Σ)_q`` is computed as the kernel of the Mayer–Vietoris map
``δ : ⊕_{σ max} Z[σ]_q -> ⊕_{σ0<σ1} Z[σ0 ∩ σ1]_q`` with
``(δf)_{σ0σ1} = f_{σ1}|_{σ0∩σ1} - f_{σ0}|_{σ0∩σ1}``, maximal cones ordered
by fan id.
"""

from __future__ import annotations

from dataclasses import dataclass
from itertools import combinations
from typing import Sequence

from .errors import FanMismatch
from .exact_linalg import (
    IntMatrix,
    cokernel_invariants,
    kernel_basis,
    rank,
    rank_mod_p,
    solve_integer,
)
from .fan import Fan, facet_components, maximal_full_dim
from .poly import (
    GradedPolySpace,
    PolyElement,
    global_restriction,
    monomial_count,
    multiply,
    restriction_matrix,
)


def column_layout(f: Fan, q: int, cone_ids: Sequence[int] | None = None) -> list[tuple[int, int]]:
    """``(cone id, offset)`` pairs for the block columns of ``⊕ Z[σ]_q``."""
    ids = f.maximal if cone_ids is None else cone_ids
    out, off = [], 0
    for i in ids:
        out.append((i, off))
        off += monomial_count(f.cones[i].dim, q)
    return out


def _block_row(width: int, blocks: list[tuple[int, IntMatrix]], nrows: int) -> list[list[int]]:
    rows = [[0] * width for _ in range(nrows)]
    for off, mat in blocks:
        for r in range(nrows):
            row = mat.row(r)
            for c, x in enumerate(row):
                rows[r][off + c] += x
    return rows


def delta_matrix(f: Fan, q: int) -> IntMatrix:
    """Block matrix of the Mayer–Vietoris map in degree ``q``.

    Pairs whose intersection carries no degree-``q`` polynomials contribute
    no rows.
    """
    layout = column_layout(f, q)
    width = sum(monomial_count(f.cones[i].dim, q) for i in f.maximal)
    offset = dict(layout)
    rows: list[list[int]] = []
    for s0, s1 in combinations(f.maximal, 2):
        m = f.meet(s0, s1)
        nrows = monomial_count(f.cones[m].dim, q)
        if nrows == 0:
            continue
        r1 = restriction_matrix(f.cones[s1], f.cones[m], q)
        r0 = restriction_matrix(f.cones[s0], f.cones[m], q)
        rows.extend(_block_row(width, [(offset[s1], r1), (offset[s0], -r0)], nrows))
    return IntMatrix(rows, len(rows), width)


@dataclass(frozen=True)
class PPElement:
    """A piecewise polynomial: one polynomial per maximal cone, fan order."""

    fan: Fan
    degree: int
    pieces: tuple[PolyElement, ...]

    def coefficients(self) -> tuple[int, ...]:
        return tuple(c for p in self.pieces for c in p.coefficients)

    def is_compatible(self) -> bool:
        return not any(delta_matrix(self.fan, self.degree).apply(self.coefficients()))

    def __add__(self, other: "PPElement") -> "PPElement":
        if other.fan is not self.fan and other.fan != self.fan:
            raise FanMismatch("piecewise polynomials on different fans")
        return PPElement(self.fan, self.degree,
                         tuple(a + b for a, b in zip(self.pieces, other.pieces)))


def element_from_vector(f: Fan, q: int, vec: Sequence[int]) -> PPElement:
    pieces = []
    for i, off in column_layout(f, q):
        space = GradedPolySpace(f.cones[i], q)
        pieces.append(PolyElement(space, tuple(vec[off:off + space.rank])))
    return PPElement(f, q, tuple(pieces))


def pp_basis(f: Fan, q: int) -> list[PPElement]:
    """A Z-basis of ``PP(Σ)_q``."""
    K = kernel_basis(delta_matrix(f, q))
    out = [element_from_vector(f, q, K.column(j)) for j in range(K.cols)]
    for e in out:
        assert e.is_compatible()
    return out


def pp_rank(f: Fan, q: int) -> int:
    D = delta_matrix(f, q)
    return D.cols - (rank(D) if D.rows else 0)


def hilbert_function(f: Fan, d_max: int) -> list[int]:
    """Ranks of ``PP(Σ)_q`` for ``q = 0..d_max`` (cohomological degree ``2q``)."""
    return [pp_rank(f, q) for q in range(d_max + 1)]


def pp_multiply(a: PPElement, b: PPElement) -> PPElement:
    if a.fan is not b.fan and a.fan != b.fan:
        raise FanMismatch("piecewise polynomials on different fans")
    out = PPElement(a.fan, a.degree + b.degree,
                    tuple(multiply(x, y) for x, y in zip(a.pieces, b.pieces)))
    assert out.is_compatible()
    return out


def in_span(elements: Sequence[PPElement], target: PPElement) -> tuple[int, ...] | None:
    """Integer coefficients expressing ``target`` in ``elements``, if any."""
    n = len(target.coefficients())
    A = IntMatrix.from_columns([e.coefficients() for e in elements], n)
    return solve_integer(A, target.coefficients())


def global_polynomial(f: Fan, q: int, coefficients: Sequence[int]) -> PPElement:
    """Restriction of a polynomial on ``N`` (monomial basis of Sym^q) to every maximal cone."""
    pieces = []
    for i in f.maximal:
        g = global_restriction(q, f.cones[i])
        pieces.append(PolyElement(GradedPolySpace(f.cones[i], q), g.apply(coefficients)))
    return PPElement(f, q, tuple(pieces))


@dataclass(frozen=True)
class Components:
    count: int
    labels: dict[int, int]
    degenerate: bool


def piecewise_constant_components(f: Fan) -> Components:
    """Facet-connected components of the maximal cones.

    ``degenerate`` flags fans with lower-dimensional maximal cones, where the
    count need not equal ``rank PP_0``.
    """
    comps = facet_components(f, f.maximal)
    labels = {i: k for k, comp in enumerate(comps) for i in comp}
    return Components(len(comps), labels, not maximal_full_dim(f))


@dataclass(frozen=True)
class ModPDiscrepancy:
    degree: int
    prime: int
    rank_over_z: int
    rank_mod_p: int
    coker_torsion: tuple[int, ...]


def mod_p_discrepancies(f: Fan, d_max: int, primes: Sequence[int] = (2, 3, 5)) -> list[ModPDiscrepancy]:
    """Degrees and primes where ``ker δ`` and ``ker(δ mod p)`` differ in rank."""
    out = []
    for q in range(d_max + 1):
        D = delta_matrix(f, q)
        kz = D.cols - (rank(D) if D.rows else 0)
        _, torsion = cokernel_invariants(D)
        for p in primes:
            kp = D.cols - (rank_mod_p(D, p) if D.rows else 0)
            if kp != kz:
                out.append(ModPDiscrepancy(q, p, kz, kp, tuple(torsion)))
    return out
