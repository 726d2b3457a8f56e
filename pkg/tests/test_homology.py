import itertools

import pytest

from maxdepth.errors import BudgetExceeded, DomainError
from maxdepth.homology import (SimplicialComplex, boundary_matrix, check_prime, induced,
                               rank_mod_p, reduced_homology, stanley_reisner)
from maxdepth.families import cycle_graph, line_graph

from oracles import gauss_rank, reduced_betti


def faces_of(delta):
    return sorted({F for f in delta.facets for k in range(len(f) + 1)
                   for F in itertools.combinations(sorted(f), k)})


def test_void_and_empty_face():
    assert reduced_homology(SimplicialComplex(3, ())).ranks == {}
    assert reduced_homology(SimplicialComplex(3, (frozenset(),))).ranks == {-1: 1}


def test_two_points():
    delta = SimplicialComplex(2, ({1}, {2}))
    assert reduced_homology(delta).ranks == {0: 1}


def test_circle_and_sphere():
    circle = SimplicialComplex(3, ({1, 2}, {2, 3}, {1, 3}))
    assert reduced_homology(circle).ranks == {1: 1}
    sphere = SimplicialComplex(4, tuple(set(f) for f in itertools.combinations(range(1, 5), 3)))
    assert reduced_homology(sphere).ranks == {2: 1}


def test_projective_plane_depends_on_characteristic():
    # six-vertex triangulation of RP^2
    facets = [(1, 2, 3), (1, 3, 4), (1, 4, 5), (1, 5, 6), (1, 2, 6), (2, 3, 5),
              (2, 4, 5), (2, 4, 6), (3, 4, 6), (3, 5, 6)]
    delta = SimplicialComplex(6, tuple(set(f) for f in facets))
    assert reduced_homology(delta, 2).ranks == {1: 1, 2: 1}
    assert reduced_homology(delta, 3).ranks == {}
    assert reduced_homology(delta, 32003).ranks == {}


def test_cone_is_acyclic():
    delta = SimplicialComplex(4, ({1, 2, 4}, {2, 3, 4}, {1, 3, 4}))
    assert reduced_homology(delta).ranks == {}


def test_stanley_reisner_of_path():
    delta = stanley_reisner(line_graph(4).edge_ideal())
    assert set(map(frozenset, delta.facets)) == {frozenset({1, 3}), frozenset({1, 4}),
                                                 frozenset({2, 4})}


def test_stanley_reisner_needs_squarefree():
    from maxdepth.ideal import MonomialIdeal
    with pytest.raises(DomainError):
        stanley_reisner(MonomialIdeal(2, ((2, 0),)))


def test_induced():
    delta = stanley_reisner(cycle_graph(5).edge_ideal())
    sub = induced(delta, [1, 2, 3])
    assert set(map(frozenset, sub.facets)) == {frozenset({1, 3}), frozenset({2})}


def test_facet_order_is_canonical():
    a = SimplicialComplex(4, ({1, 2}, {3, 4}, {2, 3}))
    b = SimplicialComplex(4, ({3, 4}, {2, 3}, {1, 2}, {1}))
    assert a == b


@pytest.mark.parametrize("p", [2, 3, 5, 32003])
def test_matches_oracle_on_cycles(p):
    for n in range(4, 10):
        delta = stanley_reisner(cycle_graph(n).edge_ideal())
        assert reduced_homology(delta, p).ranks == reduced_betti(faces_of(delta), p)


def test_boundary_squares_to_zero():
    delta = stanley_reisner(cycle_graph(7).edge_ideal())
    groups = delta.faces_by_size()
    p = 32003
    for k in range(1, len(groups) - 1):
        A = boundary_matrix(groups, k, p)
        B = boundary_matrix(groups, k + 1, p)
        prod = [[sum(A[i][t] * B[t][j] for t in range(len(B))) % p for j in range(len(B[0]))]
                for i in range(len(A))]
        assert all(x == 0 for row in prod for x in row)


def test_rank_mod_p_against_oracle():
    M = [[1, 2, 3], [2, 4, 6], [1, 0, 1]]
    for p in (2, 3, 5, 7):
        assert rank_mod_p(M, p) == gauss_rank(M, p)


def test_budget():
    delta = SimplicialComplex(12, (set(range(1, 13)),))
    with pytest.raises(BudgetExceeded):
        reduced_homology(delta, max_faces=1000)


def test_characteristic_must_be_prime():
    with pytest.raises(DomainError):
        check_prime(4)
    with pytest.raises(DomainError):
        reduced_homology(SimplicialComplex(2, ({1},)), 0)
