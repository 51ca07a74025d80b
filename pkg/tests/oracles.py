"""Independent reference computations for the tests.

Nothing here goes through Smith forms or the package's restriction maps:
ranks come from Gaussian elimination over Fractions, and gluing conditions
come from evaluating ambient monomials at points of each shared face.
"""

from fractions import Fraction
from itertools import combinations
from math import comb
import random


def fraction_rank(rows) -> int:
    rows = [[Fraction(x) for x in r] for r in rows]
    if not rows:
        return 0
    r = 0
    for c in range(len(rows[0])):
        piv = next((i for i in range(r, len(rows)) if rows[i][c]), None)
        if piv is None:
            continue
        rows[r], rows[piv] = rows[piv], rows[r]
        for i in range(len(rows)):
            if i != r and rows[i][c]:
                t = rows[i][c] / rows[r][c]
                rows[i] = [a - t * b for a, b in zip(rows[i], rows[r])]
        r += 1
    return r


def _exponents(n, q):
    if n == 0:
        return [()] if q == 0 else []
    if n == 1:
        return [(q,)]
    return [(a,) + rest for a in range(q, -1, -1) for rest in _exponents(n - 1, q - a)]


def _monomial_values(point, exps):
    out = []
    for e in exps:
        v = 1
        for x, k in zip(point, e):
            v *= x ** k
        out.append(v)
    return out


def pp_rank_by_evaluation(n, rays, maximal, q, seed=0):
    """Rank of piecewise polynomials of degree ``q`` on a fan whose maximal
    cones (index lists into ``rays``) are all full-dimensional.

    Each piece is a polynomial in the ambient coordinates. Two pieces must
    agree on the span of the rays the cones share, which is imposed by
    evaluation at enough random points of that span.
    """
    rng = random.Random(seed)
    sets = [set(c) for c in maximal]
    maximal = [c for c, s in zip(maximal, sets) if not any(s < t for t in sets)]
    exps = _exponents(n, q)
    m = len(exps)
    width = m * len(maximal)
    rows = []
    for a, b in combinations(range(len(maximal)), 2):
        common = sorted(set(maximal[a]) & set(maximal[b]))
        k = len(common)
        npts = 3 * comb(q + k, k) + 3 if k else 1
        for _ in range(npts):
            coeffs = [rng.randint(1, 50) for _ in common]
            p = [sum(c * rays[i][j] for c, i in zip(coeffs, common)) for j in range(n)]
            vals = _monomial_values(p, exps)
            row = [0] * width
            for j, v in enumerate(vals):
                row[a * m + j] += v
                row[b * m + j] -= v
            rows.append(row)
    return width - fraction_rank(rows)


def stanley_reisner_hilbert(h, n, q):
    """Hilbert function of a Stanley-Reisner ring from its h-vector."""
    return sum(hi * comb(q - i + n - 1, n - 1) for i, hi in enumerate(h) if q >= i)
