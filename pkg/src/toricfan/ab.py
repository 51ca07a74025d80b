"""
The Atiyah–Bredon complex of a complete fan, one polynomial degree at a time.

Position ``i`` holds ``⊕_{σ ∈ Σ_{n-i}} Z[σ]_q``; the differential from
position ``i`` to ``i+1`` restricts each cone to its facets with an
incidence sign coming from the cones' orientations. Position-0 cohomology is
``PP(Σ)_q``; exactness at positions ``≥ 1`` is the evenness criterion.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from typing import Mapping, Sequence

from .cone_algebra import Cone
from .errors import ComplexError, MaximalNotFullDim, NotComplete
from .exact_linalg import (
    IntMatrix,
    determinant,
    hermite_normal_form,
    kernel_basis,
    rank,
    rank_mod_p,
    smith_normal_form,
    solve_integer_matrix,
)
from .fan import Fan, is_complete, maximal_full_dim, star_fan
from .poly import basis_change, monomial_count, monomials, restriction_matrix
from .pp import column_layout, delta_matrix

Coefficients = str | int  # "Z", "Q" or a prime p


def incidence_sign(sigma: Cone, tau: Cone) -> int:
    """Sign comparing ``[inward vector, basis of τ]`` with the basis of ``σ``."""
    inward = next(r for r in sigma.rays if not tau.contains(r))
    cols = [sigma.coordinates(inward)] + basis_change(sigma, tau).columns()
    d = determinant(IntMatrix.from_columns(cols, sigma.dim))
    return 1 if d > 0 else -1


@dataclass
class ABComplex:
    fan: Fan
    degree: int
    cones: list[list[int]]            # cones[i]: ids of codimension-i cones
    differentials: list[IntMatrix]    # differentials[i]: position i -> i+1
    orientation: dict[int, int] = field(repr=False)

    @property
    def length(self) -> int:
        return len(self.cones)

    @property
    def term_ranks(self) -> list[int]:
        n = self.fan.ambient_rank
        return [sum(monomial_count(n - i, self.degree) for _ in ids)
                for i, ids in enumerate(self.cones)]

    def term_basis(self, i: int) -> list[tuple[int, tuple[int, ...]]]:
        n = self.fan.ambient_rank
        return [(c, e) for c in self.cones[i] for e in monomials(n - i, self.degree)]

    def differential_ranks(self) -> list[int]:
        return [rank(d) if d.rows and d.cols else 0 for d in self.differentials]

    def squares_vanish(self) -> bool:
        return all((b @ a).is_zero() for a, b in zip(self.differentials, self.differentials[1:]))

    def cohomology(self, coefficients: Coefficients = "Z") -> list["CohomologyGroup"]:
        return cochain_cohomology(self.term_ranks, self.differentials, coefficients)


@dataclass(frozen=True)
class CohomologyGroup:
    position: int
    rank: int
    torsion: tuple[int, ...] = ()

    @property
    def vanishes(self) -> bool:
        return self.rank == 0 and not self.torsion


def _rank_over(d: IntMatrix, coefficients: Coefficients) -> int:
    if d.rows == 0 or d.cols == 0:
        return 0
    if coefficients in ("Z", "Q"):
        return rank(d)
    return rank_mod_p(d, int(coefficients))


def cochain_cohomology(term_ranks: Sequence[int], differentials: Sequence[IntMatrix],
                       coefficients: Coefficients = "Z") -> list[CohomologyGroup]:
    """Cohomology of ``C^0 -> C^1 -> ...``; torsion only reported over Z.

    Over Z the torsion of ``H^i`` equals that of ``coker d^{i-1}``, since
    ``C^i / ker d^i`` embeds in a free module.
    """
    ranks = [_rank_over(d, coefficients) for d in differentials]
    out = []
    for i, c in enumerate(term_ranks):
        r_out = ranks[i] if i < len(ranks) else 0
        r_in = ranks[i - 1] if i >= 1 else 0
        torsion: tuple[int, ...] = ()
        if coefficients == "Z" and i >= 1 and r_in:
            d = differentials[i - 1]
            torsion = tuple(x for x in smith_normal_form(d).diagonal if x > 1)
        out.append(CohomologyGroup(i, c - r_out - r_in, torsion))
    return out


def build_ab(f: Fan, q: int, orientation: Mapping[int, int] | None = None) -> ABComplex:
    """Atiyah–Bredon complex of the complete fan ``f`` in polynomial degree ``q``.

    ``orientation`` optionally flips cone orientations (``±1`` per cone id);
    cohomology does not depend on it.
    """
    if not is_complete(f):
        raise NotComplete("the Atiyah–Bredon complex is only built for complete fans")
    n = f.ambient_rank
    ori = {i: 1 for i in range(len(f.cones))}
    if orientation:
        ori.update(orientation)
    cones = [f.ids_of_dim(n - i) for i in range(n + 1)]
    diffs = []
    for i in range(n):
        src, tgt = cones[i], cones[i + 1]
        src_off = dict(column_layout(f, q, src))
        tgt_off = dict(column_layout(f, q, tgt))
        ncols = sum(monomial_count(n - i, q) for _ in src)
        nrows = sum(monomial_count(n - i - 1, q) for _ in tgt)
        rows = [[0] * ncols for _ in range(nrows)]
        for s in src:
            for t in f.facets(s):
                sign = incidence_sign(f.cones[s], f.cones[t]) * ori[s] * ori[t]
                block = restriction_matrix(f.cones[s], f.cones[t], q)
                r0, c0 = tgt_off[t], src_off[s]
                for r in range(block.rows):
                    for c, x in enumerate(block.row(r)):
                        rows[r0 + r][c0 + c] += sign * x
        diffs.append(IntMatrix(rows, nrows, ncols))
    cx = ABComplex(f, q, cones, diffs, ori)
    if not cx.squares_vanish():
        raise ComplexError(f"δ∘δ ≠ 0 in degree {q}")
    return cx


def delta0_general(f: Fan, q: int) -> IntMatrix:
    """First Atiyah–Bredon differential for any fan with full-dimensional
    maximal cones.

    Only codimension-one cones lying in two full-dimensional cones
    ``σ0 < σ1`` contribute rows: ``(f0, f1) -> f1|τ - f0|τ``.
    """
    if not maximal_full_dim(f):
        raise MaximalNotFullDim("δ⁰ needs all maximal cones full-dimensional")
    n = f.ambient_rank
    offset = dict(column_layout(f, q))
    width = sum(monomial_count(n, q) for _ in f.maximal)
    rows = []
    for t in f.ids_of_dim(n - 1):
        above = sorted(j for j in f.coface_ids[t] if f.cones[j].dim == n)
        if len(above) != 2:
            continue
        s0, s1 = above
        r0 = restriction_matrix(f.cones[s0], f.cones[t], q)
        r1 = restriction_matrix(f.cones[s1], f.cones[t], q)
        for r in range(r0.rows):
            row = [0] * width
            for c, x in enumerate(r1.row(r)):
                row[offset[s1] + c] += x
            for c, x in enumerate(r0.row(r)):
                row[offset[s0] + c] -= x
            rows.append(row)
    return IntMatrix(rows, len(rows), width)


def _kernel(d: IntMatrix) -> IntMatrix:
    if d.rows == 0:
        return IntMatrix.identity(d.cols)
    return kernel_basis(d)


@dataclass(frozen=True)
class KernelComparison:
    degree: int
    ker_delta0_rank: int
    ker_delta_rank: int
    equal: bool
    basis_change_witness: IntMatrix | None
    ker_delta0_basis: IntMatrix = field(repr=False)
    ker_delta_basis: IntMatrix = field(repr=False)


def kernel_comparison(f: Fan, q: int) -> KernelComparison:
    """Compare ``ker δ⁰`` with the Mayer–Vietoris kernel ``ker δ``.

    Both kernels are saturated, so they agree iff each basis is killed by the
    other map. The witness is the (unimodular) matrix expressing one
    Hermite-reduced basis in the other; for equal saturated lattices the two
    reduced bases coincide and the witness is the identity.
    """
    d0 = delta0_general(f, q)
    d = delta_matrix(f, q)
    k0, k = _kernel(d0), _kernel(d)
    k0_in_k = d.rows == 0 or all(not any(d.apply(k0.column(j))) for j in range(k0.cols))
    k_in_k0 = d0.rows == 0 or all(not any(d0.apply(k.column(j))) for j in range(k.cols))
    equal = k0_in_k and k_in_k0
    witness = None
    if equal:
        witness = solve_integer_matrix(k0, k)
        assert witness is not None
        assert hermite_normal_form(k0.T) == hermite_normal_form(k.T)
    return KernelComparison(q, k0.cols, k.cols, equal, witness, k0, k)


@dataclass
class DegreeReport:
    degree: int
    term_ranks: list[int]
    groups: list[CohomologyGroup]

    @property
    def h0_rank(self) -> int:
        return self.groups[0].rank

    @property
    def exact_at(self) -> list[int]:
        return [g.position for g in self.groups[1:] if g.vanishes]

    @property
    def passed(self) -> bool:
        return all(g.vanishes for g in self.groups[1:])

    def torsion(self) -> dict[int, tuple[int, ...]]:
        return {g.position: g.torsion for g in self.groups}


@dataclass
class EvennessReport:
    """Exactness of the Atiyah–Bredon complex up to degree ``d_max`` only."""

    d_max: int
    coefficients: Coefficients
    degrees: list[DegreeReport]

    @property
    def passed(self) -> bool:
        return all(r.passed for r in self.degrees)


def evenness_probe(f: Fan, d_max: int | None = None,
                   coefficients: Coefficients = "Z") -> EvennessReport:
    if d_max is None:
        d_max = 2 * f.ambient_rank
    if not is_complete(f):
        raise NotComplete("evenness probe needs a complete fan")
    reports = []
    for q in range(d_max + 1):
        cx = build_ab(f, q)
        reports.append(DegreeReport(q, cx.term_ranks, cx.cohomology(coefficients)))
    return EvennessReport(d_max, coefficients, reports)


@dataclass
class SweepReport:
    d_max: int
    whole_fan_passed: bool
    per_cone: dict[int, bool]
    counterexamples: list[int]


def orbit_closure_sweep(f: Fan, d_max: int | None = None) -> SweepReport:
    """Evenness probe on the star fan of every cone.

    ``counterexamples`` lists cones whose star fails while the whole fan passes.
    """
    if d_max is None:
        d_max = 2 * f.ambient_rank
    whole = evenness_probe(f, d_max).passed
    per_cone = {i: evenness_probe(star_fan(f, i), d_max).passed for i in range(len(f.cones))}
    bad = [i for i, ok in per_cone.items() if whole and not ok]
    return SweepReport(d_max, whole, per_cone, bad)


@dataclass
class TorsionDegree:
    degree: int
    torsion: dict[int, tuple[int, ...]]
    rational_ranks: list[int]
    mod_p_dims: dict[int, list[int]]
    h0_saturated: bool

    @property
    def mismatches(self) -> dict[int, list[int]]:
        """Primes and positions where the F_p dimension exceeds the rational rank."""
        out = {}
        for p, dims in self.mod_p_dims.items():
            bad = [i for i, (a, b) in enumerate(zip(self.rational_ranks, dims)) if a != b]
            if bad:
                out[p] = bad
        return out

    @property
    def clean(self) -> bool:
        return not any(self.torsion.values()) and not self.mismatches and self.h0_saturated


@dataclass
class TorsionReport:
    d_max: int
    primes: tuple[int, ...]
    degrees: list[TorsionDegree]

    @property
    def torsion_free(self) -> bool:
        return all(d.clean for d in self.degrees)


def torsion_probe(f: Fan, d_max: int | None = None,
                  primes: Sequence[int] = (2, 3, 5)) -> TorsionReport:
    if d_max is None:
        d_max = 2 * f.ambient_rank
    if not is_complete(f):
        raise NotComplete("torsion probe needs a complete fan")
    out = []
    for q in range(d_max + 1):
        cx = build_ab(f, q)
        z = cx.cohomology("Z")
        ranks = [g.rank for g in cx.cohomology("Q")]
        mod_p = {p: [g.rank for g in cx.cohomology(p)] for p in primes}
        k = _kernel(cx.differentials[0]) if cx.differentials else IntMatrix.identity(cx.term_ranks[0])
        saturated = k.cols == 0 or all(x == 1 for x in smith_normal_form(k).diagonal)
        out.append(TorsionDegree(q, {g.position: g.torsion for g in z}, ranks, mod_p, saturated))
    return TorsionReport(d_max, tuple(primes), out)
