import pytest

from maxdepth.errors import DomainError
from maxdepth.ideal import (MonomialIdeal, colon, depolarization_map, intersection,
                            minimal_generators, polarize, power, prime_ideal, product)


def test_minimal_generators_drops_multiples():
    I = minimal_generators([(1, 1, 0), (1, 1, 1), (0, 1, 1)], 3)
    assert I.gens == ((1, 1, 0), (0, 1, 1))


def test_line_three_from_vectors():
    I = MonomialIdeal(3, ((1, 1, 0), (0, 1, 1)))
    assert str(I) == "(x1*x2, x2*x3)"
    assert I.is_squarefree


def test_unit_ideal_rejected():
    with pytest.raises(DomainError):
        MonomialIdeal(2, ((0, 0),))


def test_length_and_sign_checks():
    with pytest.raises(DomainError):
        MonomialIdeal(2, ((1, 0, 0),))
    with pytest.raises(DomainError):
        MonomialIdeal(2, ((-1, 1),))


def test_zero_ideal():
    I = MonomialIdeal(3, ())
    assert I.is_zero
    assert str(I) == "(0)"


def test_product_of_primes():
    I = product(prime_ideal([1, 2], 3), prime_ideal([2, 3], 3))
    assert set(I.gens) == {(1, 1, 0), (1, 0, 1), (0, 2, 0), (0, 1, 1)}


def test_intersection_of_primes_is_lcm():
    I = intersection(prime_ideal([1], 2), prime_ideal([2], 2))
    assert I.gens == ((1, 1),)


def test_colon():
    I = MonomialIdeal(3, ((2, 1, 0), (0, 1, 1)))
    assert set(colon(I, (1, 0, 0)).gens) == {(1, 1, 0), (0, 1, 1)}
    assert set(colon(I, (0, 1, 0)).gens) == {(2, 0, 0), (0, 0, 1)}
    with pytest.raises(DomainError):
        colon(I, (2, 1, 0))


def test_power():
    I = MonomialIdeal(2, ((1, 1),))
    assert power(I, 3).gens == ((3, 3),)
    J = MonomialIdeal(2, ((1, 0), (0, 1)))
    assert len(power(J, 2).gens) == 3


def test_polarize_squarefree_unchanged():
    I = MonomialIdeal(3, ((1, 1, 0), (0, 1, 1)))
    J, added = polarize(I)
    assert added == 0
    assert J == I


def test_polarize_square():
    I = MonomialIdeal(2, ((2, 0), (1, 1)))
    J, added = polarize(I)
    assert added == 1
    assert J.nvars == 3 and J.is_squarefree
    assert len(J.gens) == 2
    assert depolarization_map(I) == [1, 1, 2]


def test_contains():
    I = MonomialIdeal(2, ((1, 1),))
    assert I.contains((2, 1))
    assert not I.contains((2, 0))
