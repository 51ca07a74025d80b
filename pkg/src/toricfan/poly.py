"""
Homogeneous integral polynomials on the lattices ``N_σ``.

A degree-``q`` polynomial on ``N_σ`` is stored as a coefficient vector over
the monomials in the coordinates of ``σ.span_basis``. Restricting along
``τ ≤ σ`` substitutes the linear forms expressing ``τ``'s basis in ``σ``'s
basis, which gives an integer matrix (rows: target monomials, columns:
source monomials).
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import lru_cache
from math import comb
from typing import Sequence

from .cone_algebra import Cone
from .errors import ConeMismatch, NotAFace
from .exact_linalg import IntMatrix, solve_integer_matrix

Exponent = tuple[int, ...]


@lru_cache(maxsize=None)
def monomials(nvars: int, q: int) -> tuple[Exponent, ...]:
    """Exponent vectors of total degree ``q``, lexicographically descending
    (``x^2, xy, y^2`` for two variables)."""
    if nvars == 0:
        return ((),) if q == 0 else ()
    if nvars == 1:
        return ((q,),)
    out = []
    for first in range(q, -1, -1):
        for rest in monomials(nvars - 1, q - first):
            out.append((first,) + rest)
    return tuple(out)


def monomial_count(nvars: int, q: int) -> int:
    if nvars == 0:
        return int(q == 0)
    return comb(q + nvars - 1, nvars - 1)


@dataclass(frozen=True)
class GradedPolySpace:
    """Degree-``q`` integral polynomials on ``N_σ`` (cohomological degree ``2q``)."""

    cone: Cone
    degree: int

    @property
    def nvars(self) -> int:
        return self.cone.dim

    @property
    def monomials(self) -> tuple[Exponent, ...]:
        return monomials(self.cone.dim, self.degree)

    @property
    def rank(self) -> int:
        return len(self.monomials)

    @property
    def cohomological_degree(self) -> int:
        return 2 * self.degree

    def index(self, exponent: Exponent) -> int:
        return _monomial_index(self.cone.dim, self.degree)[exponent]


@lru_cache(maxsize=None)
def _monomial_index(nvars: int, q: int) -> dict[Exponent, int]:
    return {e: i for i, e in enumerate(monomials(nvars, q))}


@dataclass(frozen=True)
class PolyElement:
    space: GradedPolySpace
    coefficients: tuple[int, ...]

    def __post_init__(self):
        if len(self.coefficients) != self.space.rank:
            raise ValueError(
                f"{len(self.coefficients)} coefficients for a space of rank {self.space.rank}")

    def __add__(self, other: "PolyElement") -> "PolyElement":
        if other.space != self.space:
            raise ConeMismatch("cannot add polynomials from different spaces")
        return PolyElement(self.space, tuple(a + b for a, b in zip(self.coefficients,
                                                                   other.coefficients)))

    def terms(self) -> dict[Exponent, int]:
        return {e: c for e, c in zip(self.space.monomials, self.coefficients) if c}

    def evaluate(self, point: Sequence[int]) -> int:
        """Value at a point given in ``span_basis`` coordinates."""
        total = 0
        for e, c in self.terms().items():
            term = c
            for x, k in zip(point, e):
                term *= x ** k
            total += term
        return total

    def restrict(self, tau: Cone) -> "PolyElement":
        m = restriction_matrix(self.space.cone, tau, self.space.degree)
        return PolyElement(GradedPolySpace(tau, self.space.degree), m.apply(self.coefficients))


def from_terms(cone: Cone, q: int, terms: dict[Exponent, int]) -> PolyElement:
    space = GradedPolySpace(cone, q)
    coeffs = [0] * space.rank
    for e, c in terms.items():
        coeffs[space.index(tuple(e))] += c
    return PolyElement(space, tuple(coeffs))


def _poly_mul(a: dict[Exponent, int], b: dict[Exponent, int]) -> dict[Exponent, int]:
    out: dict[Exponent, int] = {}
    for ea, ca in a.items():
        for eb, cb in b.items():
            e = tuple(x + y for x, y in zip(ea, eb))
            out[e] = out.get(e, 0) + ca * cb
    return {e: c for e, c in out.items() if c}


def substitution_matrix(forms: IntMatrix, q: int) -> IntMatrix:
    """Matrix of ``f(y) -> f(forms · t)`` on degree-``q`` polynomials.

    ``forms`` is ``nsrc x ntgt``: source variable ``y_i`` becomes
    ``sum_j forms[i, j] t_j``.
    """
    nsrc, ntgt = forms.shape
    src = monomials(nsrc, q)
    tgt_index = _monomial_index(ntgt, q)
    linear = []
    for i in range(nsrc):
        lf = {}
        for j in range(ntgt):
            if forms[i, j]:
                lf[tuple(int(k == j) for k in range(ntgt))] = forms[i, j]
        linear.append(lf)
    one = {(0,) * ntgt: 1}
    powers: dict[tuple[int, int], dict] = {}

    def power(i, k):
        key = (i, k)
        if key not in powers:
            powers[key] = one if k == 0 else _poly_mul(power(i, k - 1), linear[i])
        return powers[key]

    cols = []
    for e in src:
        poly = one
        for i, k in enumerate(e):
            if k:
                poly = _poly_mul(poly, power(i, k))
        col = [0] * len(tgt_index)
        for te, c in poly.items():
            col[tgt_index[te]] += c
        cols.append(col)
    return IntMatrix.from_columns(cols, len(tgt_index))


@lru_cache(maxsize=None)
def basis_change(sigma: Cone, tau: Cone) -> IntMatrix:
    """``dim σ x dim τ`` integer matrix ``C`` with ``span(τ) = span(σ) · C``."""
    if not tau.is_face_of(sigma):
        raise NotAFace(f"{tau!r} is not a face of {sigma!r}")
    if tau.dim == 0:
        return IntMatrix.zeros(sigma.dim, 0)
    C = solve_integer_matrix(sigma.span_matrix, tau.span_matrix)
    assert C is not None
    return C


@lru_cache(maxsize=None)
def restriction_matrix(sigma: Cone, tau: Cone, q: int) -> IntMatrix:
    """Restriction ``Z[σ]_q -> Z[τ]_q`` for a face ``τ ≤ σ``."""
    return substitution_matrix(basis_change(sigma, tau), q)


def multiply(f: PolyElement, g: PolyElement) -> PolyElement:
    if f.space.cone != g.space.cone:
        raise ConeMismatch("polynomials live on different cones")
    return from_terms(f.space.cone, f.space.degree + g.space.degree,
                      _poly_mul(f.terms(), g.terms()))


@lru_cache(maxsize=None)
def global_restriction(q: int, sigma: Cone) -> IntMatrix:
    """Restriction ``Sym^q(M) -> Z[σ]_q`` of polynomials on ``N``."""
    if sigma.dim == 0:
        return substitution_matrix(IntMatrix.zeros(sigma.ambient_rank, 0), q)
    return substitution_matrix(sigma.span_matrix, q)
