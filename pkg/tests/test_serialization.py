import math
from fractions import Fraction

import pytest

from ccx.calculus import evaluate
from ccx.convex import separate_point
from ccx.errors import ImproperFunctionError, MalformedInputError
from ccx.lp import Relation, Sense, solve_lp
from ccx.polyhedra import Openness, VPolyhedron, h_to_v, same_set
from ccx.serialization import (dumps, function_from_json, function_to_json, hpolyhedron_from_json,
                               hpolyhedron_to_json, loads, lp_problem_from_json, lp_result_to_json, map_from_json,
                               polyhedron_from_json, rational_from_json, separation_to_json, sublinear_from_json,
                               value_to_json, vector_from_json, vpolyhedron_to_json)

SQUARE = {'dim': 2, 'constraints': [{'a': [1, 0], 'b': 1}, {'a': [-1, 0], 'b': 1},
                                    {'a': [0, 1], 'b': 1}, {'a': [0, -1], 'b': 1}]}


@pytest.mark.parametrize('value, expected', [(3, Fraction(3)), ('-2/5', Fraction(-2, 5)), ('4/6', Fraction(2, 3))])
def test_rationals(value, expected):
    assert rational_from_json(value) == expected


@pytest.mark.parametrize('value', [0.5, True, None, 'abc', '1/0', [1]])
def test_rejected_rationals(value):
    with pytest.raises(MalformedInputError):
        rational_from_json(value)


def test_error_path_points_at_the_value():
    doc = {'dim': 2, 'constraints': [{'a': [1, 0], 'b': 1}, {'a': [1, 0.5], 'b': 1}]}
    with pytest.raises(MalformedInputError) as info:
        hpolyhedron_from_json(doc)
    assert info.value.path == '$.constraints[1].a[1]'


def test_vector_length():
    with pytest.raises(MalformedInputError) as info:
        vector_from_json([1, 2, 3], '$.point', dim=2)
    assert info.value.path == '$.point'


def test_square(square):
    P = hpolyhedron_from_json(SQUARE)
    assert P == square
    assert P.openness is Openness.CLOSED
    assert hpolyhedron_to_json(P)['openness'] == 'closed'


def test_openness_rules():
    opened = hpolyhedron_from_json(dict(SQUARE, openness='open'))
    assert opened.openness is Openness.OPEN
    flagged = dict(SQUARE, openness='closed')
    flagged['constraints'] = [dict(SQUARE['constraints'][0], strict=True)] + SQUARE['constraints'][1:]
    with pytest.raises(MalformedInputError) as info:
        hpolyhedron_from_json(flagged)
    assert info.value.path == '$.constraints[0].strict'
    del flagged['openness']
    assert hpolyhedron_from_json(flagged).openness is Openness.MIXED
    with pytest.raises(MalformedInputError):
        hpolyhedron_from_json(dict(SQUARE, openness='half-open'))


def test_missing_fields():
    with pytest.raises(MalformedInputError) as info:
        hpolyhedron_from_json({'constraints': []})
    assert 'dim' in info.value.message
    with pytest.raises(MalformedInputError) as info:
        hpolyhedron_from_json({'dim': 1, 'constraints': [{'a': [1]}]})
    assert info.value.path == '$.constraints[0]'


def test_generator_form(triangle):
    doc = {'dim': 2, 'vertices': [[0, 0], [1, 0], [0, 1]]}
    V = polyhedron_from_json(doc)
    assert isinstance(V, VPolyhedron)
    assert V == h_to_v(triangle)
    assert vpolyhedron_to_json(V) == {'dim': 2, 'vertices': [['0', '0'], ['0', '1'], ['1', '0']], 'rays': []}
    with pytest.raises(MalformedInputError):
        polyhedron_from_json({'dim': 1, 'rays': [[1]]})


def test_functions():
    phi = function_from_json({'dim': 1, 'max_affine': [{'g': [1], 'c': 0}, {'g': [-1], 'c': 0}]})
    assert evaluate(phi, (Fraction(-3, 2),)) == Fraction(3, 2)
    indicator = function_from_json({'dim': 1, 'domain': {'dim': 1, 'constraints': [{'a': [1], 'b': 1}]}})
    assert evaluate(indicator, (Fraction(2),)) == math.inf
    again = function_from_json(function_to_json(phi))
    assert same_set(again.epigraph, phi.epigraph)
    with pytest.raises(MalformedInputError):
        function_from_json({'dim': 1})
    with pytest.raises(MalformedInputError) as info:
        function_from_json({'dim': 1, 'epigraph': {'dim': 2, 'constraints': [{'a': [0, 1], 'b': 0}]}})
    assert info.value.path == '$'
    with pytest.raises(ImproperFunctionError):
        function_from_json({'dim': 1, 'epigraph': {'dim': 2, 'constraints': [{'a': [1, 0], 'b': 1}]}})


def test_map_dimensions():
    with pytest.raises(MalformedInputError) as info:
        map_from_json({'dim_x': 1, 'dim_y': 1, 'graph': {'dim': 3, 'constraints': []}})
    assert info.value.path == '$.graph.dim'


def test_sublinear():
    p = sublinear_from_json({'pieces': [[1, 0], [0, 1]]})
    assert p((Fraction(2), Fraction(3))) == 3
    with pytest.raises(MalformedInputError):
        sublinear_from_json({'pieces': []})


def test_lp_problem():
    problem = lp_problem_from_json({'objective': [1, 1], 'sense': 'min',
                                    'constraints': [{'a': [1, 1], 'b': 2, 'relation': '='},
                                                    {'a': [-1, 0], 'b': 0}, {'a': [0, -1], 'b': 0}]})
    assert problem.sense is Sense.MIN
    assert problem.constraints[0].relation is Relation.EQ
    doc = lp_result_to_json(solve_lp(problem))
    assert doc['status'] == 'optimal'
    assert doc['optimum'] == '2'
    with pytest.raises(MalformedInputError) as info:
        lp_problem_from_json({'objective': [1], 'constraints': [{'a': [1], 'b': 0, 'relation': '>='}]})
    assert info.value.path == '$.constraints[0].relation'


def test_separation_document(square):
    doc = separation_to_json(separate_point(square, (2, 0)))
    assert doc['outcome'] == 'separated'
    assert doc['f'] == ['1', '0']
    assert doc['level'] == '1'
    assert doc['strict'] is False
    inside = separation_to_json(separate_point(square, (0, 0)))
    assert inside == {'outcome': 'inseparable', 'reason': inside['reason'], 'witness': ['0', '0']}


def test_infinite_values():
    assert value_to_json(math.inf) == '+inf'
    assert value_to_json(-math.inf) == '-inf'
    assert value_to_json(Fraction(-7, 3)) == '-7/3'


def test_canonical_text():
    text = dumps({'b': ['1/2'], 'a': 1})
    assert text.index('"a"') < text.index('"b"')
    assert loads(text) == {'a': 1, 'b': ['1/2']}
    with pytest.raises(MalformedInputError) as info:
        loads('{not json', 'set.json')
    assert info.value.path == 'set.json'
