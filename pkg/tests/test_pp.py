import pytest

from toricfan.ab import kernel_comparison
from toricfan.errors import FanMismatch
from toricfan.fan import fan_from_maximal
from toricfan.fixtures import COMPLETE_EVEN, FIXTURES
from toricfan.pp import (
    delta_matrix,
    element_from_vector,
    global_polynomial,
    hilbert_function,
    in_span,
    mod_p_discrepancies,
    piecewise_constant_components,
    pp_basis,
    pp_multiply,
)
from toricfan.exact_linalg import rank
from toricfan.poly import monomial_count

from oracles import pp_rank_by_evaluation, stanley_reisner_hilbert

DIAMOND = fan_from_maximal(2, [[0, 1], [1, 2], [2, 3], [3, 0]],
                           [(1, 1), (-1, 1), (-1, -1), (1, -1)])


def test_delta_examples(fan):
    assert delta_matrix(fan("p1"), 0).tolist() == [[-1, 1]]
    assert delta_matrix(fan("orthant"), 3).rows == 0
    d = delta_matrix(fan("p2"), 1)
    assert d.shape == (3, 6) and rank(d) == 3


def test_hilbert_examples(fan):
    assert hilbert_function(fan("p2"), 3) == [1, 3, 6, 9]
    assert hilbert_function(fan("p1"), 3) == [1, 2, 2, 2]
    assert hilbert_function(fan("p1xp1"), 3) == [1, 4, 8, 12]
    assert hilbert_function(fan("f1"), 2) == [1, 4, 8]
    assert hilbert_function(fan("orthant"), 2) == [1, 2, 3]


@pytest.mark.parametrize("name", [k for k in FIXTURES if k not in ("p3", "p1xp1xp1")])
def test_hilbert_matches_evaluation_oracle(fan, name):
    data = FIXTURES[name]
    got = hilbert_function(fan(name), 3)
    want = [pp_rank_by_evaluation(data["dim"], data["rays"], data["cones"], q) for q in range(4)]
    assert got == want


def test_three_dimensional_against_h_vectors(fan):
    # smooth complete fans: PP is the Stanley-Reisner ring
    assert hilbert_function(fan("p3"), 4) == [stanley_reisner_hilbert((1, 1, 1, 1), 3, q)
                                              for q in range(5)]
    assert hilbert_function(fan("p1xp1xp1"), 4) == [stanley_reisner_hilbert((1, 3, 3, 1), 3, q)
                                                    for q in range(5)]


def test_complete_plane_fans_closed_form(fan):
    for name in ("p2", "p1xp1", "f1", "weighted_p2"):
        f = fan(name)
        r = len(f.rays)
        assert hilbert_function(f, 5) == [1] + [r * q for q in range(1, 6)]


def test_basis_is_compatible_and_saturated(fan):
    for name in ("p2", "f1", "half_plane", "antipodal"):
        f = fan(name)
        for q in range(3):
            basis = pp_basis(f, q)
            assert all(e.is_compatible() for e in basis)
            assert len(basis) == hilbert_function(f, q)[-1]


def test_constants_and_components(fan):
    # components are facet-connected pieces, i.e. the rank of ker δ⁰ in degree 0
    for name in FIXTURES:
        f = fan(name)
        comps = piecewise_constant_components(f)
        assert not comps.degenerate
        assert comps.count == kernel_comparison(f, 0).ker_delta0_rank
        if name != "antipodal":
            assert comps.count == hilbert_function(f, 0)[0]
    # the two antipodal cones still meet at the origin, so constants glue there
    assert hilbert_function(fan("antipodal"), 0) == [1]
    assert piecewise_constant_components(fan("antipodal")).count == 2
    assert piecewise_constant_components(fan("three_quadrants")).count == 1
    assert piecewise_constant_components(fan("p2")).count == 1


def test_global_polynomials_are_piecewise(fan, rng):
    for name in COMPLETE_EVEN:
        f = fan(name)
        n = f.ambient_rank
        for q in range(3):
            coeffs = [rng.randint(-5, 5) for _ in range(monomial_count(n, q))]
            g = global_polynomial(f, q, coeffs)
            assert g.is_compatible()
            assert in_span(pp_basis(f, q), g) is not None


def test_multiplication(fan):
    f = fan("p2")
    one = pp_basis(f, 0)[0]
    lin = pp_basis(f, 1)
    for b in lin:
        prod = pp_multiply(one, b)
        assert prod.coefficients() == tuple(x * one.pieces[0].coefficients[0]
                                            for x in b.coefficients())
    quad = pp_basis(f, 2)
    for a in lin:
        for b in lin:
            assert in_span(quad, pp_multiply(a, b)) is not None
    p1 = fan("p1")
    for a in pp_basis(p1, 1):
        assert pp_multiply(a, a).is_compatible()


def test_multiplication_needs_same_fan(fan):
    with pytest.raises(FanMismatch):
        pp_multiply(pp_basis(fan("p2"), 1)[0], pp_basis(fan("p1xp1"), 1)[0])


def test_element_round_trip(fan):
    f = fan("f1")
    for e in pp_basis(f, 2):
        assert element_from_vector(f, 2, e.coefficients()) == e


def test_mod_p_discrepancies(fan):
    for name in FIXTURES:
        assert mod_p_discrepancies(fan(name), 3) == []
    found = mod_p_discrepancies(DIAMOND, 2)
    assert {(d.degree, d.prime) for d in found} == {(1, 2), (2, 2)}
    for d in found:
        assert d.rank_mod_p > d.rank_over_z
        assert any(t % d.prime == 0 for t in d.coker_torsion)
