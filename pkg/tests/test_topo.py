from math import factorial

import pytest

from toricfan.errors import NotComplete, NotSimplicial
from toricfan.fan import fan_from_maximal, order_complex
from toricfan.fixtures import COMPLETE_EVEN, FIXTURES
from toricfan.topo import (
    SimplicialComplexZ,
    cell_census,
    cubical_subdivision,
    expected_top_simplices,
    free_link_check,
    homology_rank_check,
    link_homology,
    reduced_homology,
    upper_link_complex,
)

RP2 = [(0, 1, 2), (0, 2, 3), (0, 3, 4), (0, 4, 5), (0, 5, 1),
       (1, 2, 4), (2, 3, 5), (3, 4, 1), (4, 5, 2), (5, 1, 3)]


def summary(h):
    return {d: (g.free_rank, g.torsion) for d, g in h.items() if not g.vanishes}


def test_homology_examples():
    circle = SimplicialComplexZ([(0, 1), (1, 2), (0, 2)])
    assert summary(reduced_homology(circle)) == {1: (1, ())}
    assert summary(reduced_homology(SimplicialComplexZ([(0,)]))) == {}
    assert summary(reduced_homology(SimplicialComplexZ([]))) == {-1: (1, ())}
    rp2 = SimplicialComplexZ(RP2)
    assert rp2.f_vector == (6, 15, 10)
    assert summary(reduced_homology(rp2)) == {1: (0, (2,))}
    two_points = SimplicialComplexZ([(0,), (1,)])
    assert summary(reduced_homology(two_points)) == {0: (1, ())}
    sphere = SimplicialComplexZ([s for s in [(0, 1, 2), (0, 1, 3), (0, 2, 3), (1, 2, 3)]])
    assert summary(reduced_homology(sphere)) == {2: (1, ())}


def test_boundaries_and_euler(fan):
    for simplices in (RP2, [(0, 1, 2, 3)], [(0, 1), (2, 3, 4)]):
        c = SimplicialComplexZ(simplices)
        assert c.boundaries_square_to_zero()
        assert homology_rank_check(c)
    for name in FIXTURES:
        c = SimplicialComplexZ(order_complex(fan(name)).all_simplices())
        assert c.boundaries_square_to_zero()
        # order complexes of fans are cones over the zero cone: acyclic
        assert all(g.vanishes for g in reduced_homology(c).values())


def test_p2_links(fan):
    f = fan("p2")
    assert summary(link_homology(f, 0)) == {1: (1, ())}
    for r in f.ids_of_dim(1):
        assert summary(link_homology(f, r)) == {0: (1, ())}
    for m in f.maximal:
        assert upper_link_complex(f, m).dimension == -1
        assert summary(link_homology(f, m)) == {-1: (1, ())}
    assert all(free_link_check(f, i) for i in range(len(f)))


def test_link_condition(fan):
    for name in COMPLETE_EVEN:
        f = fan(name)
        assert all(free_link_check(f, i) for i in range(len(f))), name
    assert not free_link_check(fan("antipodal"), 0)
    assert free_link_check(fan("p1"), 0)


def test_census(fan):
    f = fan("p2")
    c = cell_census(f, "C")
    assert c.counts == (7, 17, 25, 18, 6) and c.euler == 3
    assert cell_census(f, "R+").counts == (7, 12, 6)
    assert cell_census(fan("p1"), "R").counts == (4, 4)
    for name in COMPLETE_EVEN:
        g = fan(name)
        assert cell_census(g, "C").euler == len(g.maximal)
        assert cell_census(g, "R+").euler == 1
    # real points: P2(R) has χ 1, the torus (P1 x P1)(R) has χ 0
    assert cell_census(f, "R").euler == 1
    assert cell_census(fan("p1xp1"), "R").euler == 0
    with pytest.raises(ValueError):
        cell_census(f, "H")


def test_cubes(fan):
    assert cubical_subdivision(fan("p1")).counts == (3, 2)
    sub = cubical_subdivision(fan("p2"))
    assert sub.counts == (7, 9, 3) and sub.euler == 1
    sub = cubical_subdivision(fan("p1xp1"))
    assert sub.counts == (9, 12, 4) and sub.euler == 1
    for name in COMPLETE_EVEN:
        f = fan(name)
        sub = cubical_subdivision(f)
        assert sub.counts[-1] == len(f.maximal)
        for cube in sub.cubes:
            assert len(cube.top_simplices) == expected_top_simplices(cube.dim) == factorial(cube.dim)


def test_cubes_partition_top_chains(fan):
    f = fan("p3")
    sub = cubical_subdivision(f)
    oc = order_complex(f)
    for ch in oc.simplices[oc.dimension]:
        containing = sub.cubes_containing(ch)
        assert len(containing) == 1 and (containing[0].bottom, containing[0].top) == (ch[0], ch[-1])
    for ch in oc.all_simplices():
        for cube in sub.cubes_containing(ch):
            assert cube.bottom <= ch[0] and f.is_face(ch[-1], cube.top)


def test_cubes_need_complete_simplicial(fan):
    with pytest.raises(NotComplete):
        cubical_subdivision(fan("orthant"))
    square = [(1, 1, 1), (1, -1, 1), (-1, -1, 1), (-1, 1, 1), (0, 0, -1)]
    f = fan_from_maximal(3, [[0, 1, 2, 3], [0, 1, 4], [1, 2, 4], [2, 3, 4], [3, 0, 4]], square)
    with pytest.raises(NotSimplicial):
        cubical_subdivision(f)
