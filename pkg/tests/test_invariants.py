import random

import pytest

from maxdepth.errors import BudgetExceeded, DomainError
from maxdepth.families import cycle_graph, line_graph, complete_bipartite_graph
from maxdepth.ideal import MonomialIdeal, polarize
from maxdepth.invariants import (betti_table, betti_table_koszul, depth, depth_general,
                                 has_maximal_depth, maximal_depth_by_dual, projective_dimension,
                                 regularity, union_closure, witness_monomial)
from maxdepth.primes import alexander_dual, ass

from oracles import naive_betti, naive_depth


def random_squarefree(rng, n):
    gens = set()
    for _ in range(rng.randint(1, 6)):
        S = rng.sample(range(n), rng.randint(1, min(4, n)))
        gens.add(tuple(int(i in S) for i in range(n)))
    return MonomialIdeal(n, tuple(gens))


def test_betti_table_cycle_five():
    B = betti_table(cycle_graph(5).edge_ideal())
    assert B.entries == {(0, 0): 1, (1, 2): 5, (2, 3): 5, (3, 5): 1}
    assert B.pd == 3 and B.reg == 2


@pytest.mark.parametrize("p", [2, 3, 32003])
def test_betti_matches_naive_hochster(p):
    rng = random.Random(p)
    for _ in range(25):
        I = random_squarefree(rng, rng.randint(2, 7))
        assert betti_table(I, p).entries == naive_betti(I, p)


def test_union_closure():
    assert union_closure([0b011, 0b110]) == [0, 0b011, 0b110, 0b111]


def test_depth_small_cases():
    assert depth(line_graph(2).edge_ideal()) == 1
    assert depth(cycle_graph(4).edge_ideal()) == 1
    assert depth(MonomialIdeal(3, ())) == 3


def test_regularity_of_ideal():
    I = cycle_graph(5).edge_ideal()
    assert regularity(I) == 3
    with pytest.raises(DomainError):
        regularity(MonomialIdeal(2, ()))


def test_terai_on_examples():
    for n in range(3, 9):
        I = cycle_graph(n).edge_ideal()
        assert regularity(alexander_dual(I)) == projective_dimension(I)


def test_koszul_route_agrees_with_polarization():
    rng = random.Random(3)
    for _ in range(30):
        n = rng.randint(1, 4)
        gens = tuple(g for g in (tuple(rng.randint(0, 3) for _ in range(n))
                                 for _ in range(rng.randint(1, 4))) if any(g))
        if not gens:
            continue
        I = MonomialIdeal(n, gens)
        J, added = polarize(I)
        K = betti_table_koszul(I)
        assert K.entries == betti_table(J).entries
        assert depth_general(I) == n - K.pd
        if J.nvars <= 8:
            assert naive_depth(J) - added == depth_general(I)


def test_general_depth_examples():
    assert depth(MonomialIdeal(2, ((2, 0), (1, 1)))) == 0
    assert depth(MonomialIdeal(2, ((2, 0),))) == 1


def test_maximal_depth_cycle_four():
    r = has_maximal_depth(cycle_graph(4).edge_ideal())
    assert (r.holds, r.depth, r.mdepth) == (False, 1, 2)
    assert r.witness == frozenset({2, 4})
    assert not maximal_depth_by_dual(cycle_graph(4).edge_ideal())


def test_maximal_depth_bipartite():
    assert has_maximal_depth(complete_bipartite_graph(1, 3).edge_ideal()).holds
    assert not has_maximal_depth(complete_bipartite_graph(2, 2).edge_ideal()).holds


def test_witness_monomial():
    I = cycle_graph(4).edge_ideal()
    assert witness_monomial(I, frozenset({2, 4})) == (1, 0, 1, 0)
    with pytest.raises(DomainError):
        witness_monomial(I, frozenset({1, 2}))


def test_caps():
    with pytest.raises(BudgetExceeded):
        betti_table(cycle_graph(19).edge_ideal())
    with pytest.raises(BudgetExceeded):
        betti_table(cycle_graph(12).edge_ideal(), max_faces=10)
    with pytest.raises(DomainError):
        betti_table(MonomialIdeal(1, ((2,),)))


def test_parallel_sweep_is_identical():
    I = cycle_graph(10).edge_ideal()
    serial = betti_table(I, 5, jobs=1)
    parallel = betti_table(I, 5, jobs=2)
    assert serial.entries == parallel.entries
    assert list(serial.entries) == list(parallel.entries)


def test_depth_at_most_mdepth_random():
    rng = random.Random(5)
    for _ in range(30):
        I = random_squarefree(rng, rng.randint(2, 8))
        r = has_maximal_depth(I)
        assert r.depth <= r.mdepth
        assert r.mdepth == I.nvars - max(len(F) for F in ass(I))
