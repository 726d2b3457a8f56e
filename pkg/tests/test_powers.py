import pytest

from maxdepth.errors import DomainError
from maxdepth.families import Graph, complete_bipartite_graph, cycle_graph, line_graph, star_graph
from maxdepth.ideal import MonomialIdeal
from maxdepth.powers import (bipartite_power_ass, is_star, mdepth_sequence, persistence_check,
                             power_depth, power_maxdepth_report)
from maxdepth.primes import minimal_primes


def test_star_powers():
    report = power_maxdepth_report(star_graph(2), 3)
    assert report.flags() == [True, True, True]
    assert [e.depth for e in report.entries] == [1, 1, 1]
    assert "k <= 3" in report.note


def test_square_powers_fail():
    report = power_maxdepth_report(complete_bipartite_graph(2, 2), 2)
    assert report.flags() == [False, False]


def test_bipartite_ass_equals_min():
    G = line_graph(4)
    assert bipartite_power_ass(G, 2) == minimal_primes(G.edge_ideal())
    with pytest.raises(DomainError):
        bipartite_power_ass(cycle_graph(5), 2)


def test_is_star():
    assert is_star(star_graph(4))
    assert not is_star(line_graph(4))
    with pytest.raises(DomainError):
        is_star(Graph.from_edges(4, [(1, 2), (3, 4)]))


def test_triangle_powers_gain_maximal_ideal():
    I = cycle_graph(3).edge_ideal()
    assert mdepth_sequence(I, 2) == [1, 0]
    assert power_depth(I, 2) == 0
    assert persistence_check(I, 2)


def test_budget_becomes_entry():
    report = power_maxdepth_report(complete_bipartite_graph(3, 3), 3, max_vars=10)
    assert report.entries[0].error is None
    assert report.entries[-1].error is not None


def test_disconnected_rejected():
    with pytest.raises(DomainError):
        power_maxdepth_report(Graph.from_edges(4, [(1, 2), (3, 4)]), 2)
