import pytest

from maxdepth.families import whisker_cycle_graph, line_graph
from maxdepth.parsing import ParseError, dump_ideal, parse_document, parse_ideal, parse_symbolic


def test_document_line_three():
    I = parse_ideal('{"vars":3,"gens":[[1,1,0],[0,1,1]]}')
    assert I == line_graph(3).edge_ideal()


def test_symbolic_whisker():
    I = parse_symbolic("x1*x2, x2*x3, x1*x3, x1*x4", 4)
    assert I == whisker_cycle_graph(3).edge_ideal()


def test_unit_generator_rejected():
    with pytest.raises(ParseError) as info:
        parse_ideal('{"vars":2,"gens":[[0,0]]}')
    assert info.value.line == 1 and info.value.column > 1


def test_length_mismatch_has_position():
    text = '{"vars": 2,\n "gens": [[1, 0],\n   [1, 1, 1]]}'
    with pytest.raises(ParseError) as info:
        parse_document(text)
    assert info.value.line == 3


def test_malformed_json():
    with pytest.raises(ParseError) as info:
        parse_document('{"vars": 2, "gens": [[1,0]')
    assert info.value.line == 1


def test_symbolic_exponents_and_whitespace():
    I = parse_symbolic(" x1 ^2 * x3 ,x2", 3)
    assert set(I.gens) == {(2, 0, 1), (0, 1, 0)}


def test_symbolic_unknown_variable_column():
    with pytest.raises(ParseError) as info:
        parse_symbolic("x1*x2, x1*y", 2)
    assert info.value.column == 11


def test_symbolic_index_out_of_range():
    with pytest.raises(ParseError):
        parse_symbolic("x1*x5", 3)


def test_names():
    I = parse_ideal('{"vars":2,"names":["a","b"],"gens":["a*b^2"]}')
    assert I.gens == ((1, 2),)
    assert str(I) == "(a*b^2)"


def test_round_trip():
    I = parse_symbolic("x1^3*x2, x2*x3^2", 3)
    assert parse_ideal(dump_ideal(I)) == I
