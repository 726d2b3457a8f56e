import itertools

from hypothesis import given, settings, strategies as st

from maxdepth.homology import SimplicialComplex, boundary_matrix, rank_mod_p, reduced_homology
from maxdepth.ideal import MonomialIdeal, colon, intersection, minimal_generators, polarize, product
from maxdepth.invariants import betti_table_koszul, depth_general, has_maximal_depth
from maxdepth.primes import alexander_dual, ass_general, ass_via_polarization, minimal_primes


@st.composite
def ideals(draw, max_n=4, max_e=3, squarefree=False, n=None):
    n = n or draw(st.integers(1, max_n))
    top = 1 if squarefree else max_e
    vec = st.tuples(*[st.integers(0, top)] * n).filter(any)
    gens = draw(st.lists(vec, min_size=1, max_size=5))
    return MonomialIdeal(n, tuple(gens))


@st.composite
def complexes(draw, max_n=7):
    n = draw(st.integers(1, max_n))
    facets = draw(st.lists(st.frozensets(st.integers(1, n), max_size=n), min_size=1, max_size=6))
    return SimplicialComplex(n, tuple(facets))


@given(ideals())
def test_minimal_generators_idempotent(I):
    assert minimal_generators(I.gens, I.nvars) == I


@given(ideals(max_n=3), st.data())
def test_product_and_intersection_commute(I, data):
    J = data.draw(ideals(n=I.nvars))
    assert product(I, J) == product(J, I)
    assert intersection(I, J) == intersection(J, I)
    assert all(I.contains(g) and J.contains(g) for g in intersection(I, J).gens)


@given(ideals(max_n=3), st.data())
def test_colon_contains_ideal_and_multiplies_back(I, data):
    u = data.draw(st.tuples(*[st.integers(0, 2)] * I.nvars))
    if I.contains(u):
        return
    Q = colon(I, u)
    assert all(Q.contains(g) for g in I.gens)
    assert all(I.contains(tuple(a + b for a, b in zip(g, u))) for g in Q.gens)


@given(complexes())
def test_euler_poincare(delta):
    groups = delta.faces_by_size()
    chi = sum((-1) ** (k - 1) * len(g) for k, g in enumerate(groups))
    assert reduced_homology(delta).euler_characteristic() == chi


@given(complexes(max_n=6), st.sampled_from([2, 3, 32003]))
def test_boundary_of_boundary(delta, p):
    groups = delta.faces_by_size()
    for k in range(1, len(groups) - 1):
        A, B = boundary_matrix(groups, k, p), boundary_matrix(groups, k + 1, p)
        for i in range(len(A)):
            for j in range(len(B[0]) if B else 0):
                assert sum(A[i][t] * B[t][j] for t in range(len(B))) % p == 0


@given(complexes(max_n=6))
def test_cone_is_acyclic(delta):
    apex = delta.nverts + 1
    cone = SimplicialComplex(apex, tuple(f | {apex} for f in delta.facets))
    assert reduced_homology(cone).ranks == {}


@given(complexes(), st.randoms())
def test_facet_order_independent(delta, rnd):
    facets = list(delta.facets)
    rnd.shuffle(facets)
    again = SimplicialComplex(delta.nverts, tuple(facets))
    assert again == delta
    assert reduced_homology(again).ranks == reduced_homology(delta).ranks


@given(ideals(max_n=7, squarefree=True))
def test_alexander_duality_is_involution(I):
    assert alexander_dual(alexander_dual(I)) == I


@given(ideals(max_n=6, squarefree=True))
def test_witness_search_on_squarefree_gives_minimal_primes(I):
    assert ass_general(I) == minimal_primes(I)


@settings(max_examples=60)
@given(ideals())
def test_witness_search_agrees_with_polarization(I):
    assert ass_general(I) == ass_via_polarization(I)


@settings(max_examples=40, deadline=None)
@given(ideals(max_n=3, max_e=3))
def test_polarization_depth_matches_koszul(I):
    assert depth_general(I) == I.nvars - betti_table_koszul(I).pd


@settings(max_examples=40, deadline=None)
@given(ideals(max_n=4, max_e=2))
def test_depth_bounds(I):
    r = has_maximal_depth(I)
    assert 0 <= r.depth <= r.mdepth <= I.nvars
    assert (r.depth == 0) == (r.mdepth == 0)
    if r.mdepth == 1:
        assert r.depth == 1


@given(st.integers(1, 6), st.integers(1, 6), st.integers(2, 7).filter(lambda p: p in (2, 3, 5, 7)))
def test_rank_of_identity_blocks(a, b, p):
    M = [[int(i == j) for j in range(b)] for i in range(a)]
    assert rank_mod_p(M, p) == min(a, b)
