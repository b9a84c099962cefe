# -*- coding: utf-8 -*-
"""
JSON codecs of every public value. Rationals are written as exact text ("3", "-2/5") and
read from such strings or from JSON integers; floats are refused. Decoding errors carry the
JSON path of the offending value.
"""
from __future__ import annotations

import json
import math
from fractions import Fraction
from typing import Any, Dict, List, Optional, Union

from .arith import QMatrix, QVector, format_rational, parse_rational
from .calculus import PolyhedralFunction, SetValuedMap, Subdifferential
from .convex import Functional, Inseparable, NotAMember, SeparationResult, SublinearFunc
from .errors import CcxError, ImproperFunctionError, MalformedInputError
from .lp import LinearConstraint, LPProblem, LPResult, Relation, Sense
from .polyhedra import Cone, Constraint, HPolyhedron, VPolyhedron


def _expect(doc, kind, path):
    if not isinstance(doc, kind):
        raise MalformedInputError(path, "expected {}".format(kind.__name__ if isinstance(kind, type) else
                                                             ' or '.join(k.__name__ for k in kind)))
    return doc


def _field(doc: Dict, key: str, path: str, required: bool = True, default=None):
    if key not in doc:
        if required:
            raise MalformedInputError(path, "missing field {!r}".format(key))
        return default
    return doc[key]


def rational_from_json(value, path: str = '$') -> Fraction:
    if isinstance(value, bool) or isinstance(value, float):
        raise MalformedInputError(path, "rationals are integers or strings like \"p/q\", got {!r}".format(value))
    if isinstance(value, int):
        return Fraction(value)
    if isinstance(value, str):
        try:
            return parse_rational(value)
        except ValueError as e:
            raise MalformedInputError(path, str(e))
    raise MalformedInputError(path, "expected a rational, got {!r}".format(value))


def vector_from_json(value, path: str = '$', dim: Optional[int] = None) -> QVector:
    _expect(value, list, path)
    vector = tuple(rational_from_json(v, "{}[{}]".format(path, k)) for k, v in enumerate(value))
    if dim is not None and len(vector) != dim:
        raise MalformedInputError(path, "expected {} entries, got {}".format(dim, len(vector)))
    return vector


def matrix_from_json(value, path: str = '$', cols: Optional[int] = None) -> QMatrix:
    _expect(value, list, path)
    rows = tuple(vector_from_json(row, "{}[{}]".format(path, k), cols) for k, row in enumerate(value))
    if rows and len({len(r) for r in rows}) > 1:
        raise MalformedInputError(path, "rows of different lengths")
    return rows


def _dim(doc: Dict, path: str) -> int:
    dim = _field(doc, 'dim', path)
    if isinstance(dim, bool) or not isinstance(dim, int) or dim < 0:
        raise MalformedInputError(path + '.dim', "expected a nonnegative integer")
    return dim


def rational_to_json(value: Fraction) -> str:
    return format_rational(value)


def vector_to_json(v) -> List[str]:
    return [format_rational(x) for x in v]


def value_to_json(value: Union[Fraction, float]) -> str:
    """Rational, or "+inf" / "-inf" for the infinite values of extended-real functions"""
    if isinstance(value, float) and math.isinf(value):
        return '+inf' if value > 0 else '-inf'
    return format_rational(value)


def hpolyhedron_from_json(doc, path: str = '$') -> HPolyhedron:
    """{"dim": n, "openness": "closed"|"open", "constraints": [{"a": [...], "b": r, "strict": bool}]}

    "open" makes every constraint strict, "closed" forbids strict flags and a missing
    openness keeps the per-constraint flags.
    """
    _expect(doc, dict, path)
    dim = _dim(doc, path)
    openness = _field(doc, 'openness', path, required=False)
    if openness not in (None, 'closed', 'open'):
        raise MalformedInputError(path + '.openness', "expected \"closed\" or \"open\"")
    raw = _expect(_field(doc, 'constraints', path, required=False, default=[]), list, path + '.constraints')
    constraints = []
    for k, item in enumerate(raw):
        cpath = "{}.constraints[{}]".format(path, k)
        _expect(item, dict, cpath)
        a = vector_from_json(_field(item, 'a', cpath), cpath + '.a', dim)
        b = rational_from_json(_field(item, 'b', cpath), cpath + '.b')
        strict = _field(item, 'strict', cpath, required=False)
        if strict is not None and not isinstance(strict, bool):
            raise MalformedInputError(cpath + '.strict', "expected a boolean")
        if openness == 'open':
            if strict is False:
                raise MalformedInputError(cpath + '.strict', "non-strict constraint in an open set")
            strict = True
        elif openness == 'closed' and strict:
            raise MalformedInputError(cpath + '.strict', "strict constraint in a closed set")
        constraints.append(Constraint(a, b, bool(strict)))
    return HPolyhedron(dim, tuple(constraints))


def hpolyhedron_to_json(P: HPolyhedron) -> Dict[str, Any]:
    return {'dim': P.dim,
            'openness': P.openness.value,
            'constraints': [{'a': vector_to_json(c.a), 'b': format_rational(c.b), 'strict': c.strict}
                            for c in P.constraints]}


def vpolyhedron_from_json(doc, path: str = '$') -> VPolyhedron:
    _expect(doc, dict, path)
    dim = _dim(doc, path)
    vertices = matrix_from_json(_field(doc, 'vertices', path, required=False, default=[]), path + '.vertices', dim)
    rays = matrix_from_json(_field(doc, 'rays', path, required=False, default=[]), path + '.rays', dim)
    if rays and not vertices:
        raise MalformedInputError(path + '.vertices', "a set with rays needs at least one vertex")
    return VPolyhedron(dim, vertices, rays)


def vpolyhedron_to_json(V: VPolyhedron) -> Dict[str, Any]:
    return {'dim': V.dim,
            'vertices': [vector_to_json(v) for v in V.vertices],
            'rays': [vector_to_json(r) for r in V.rays]}


def polyhedron_from_json(doc, path: str = '$') -> Union[HPolyhedron, VPolyhedron]:
    """Constraint form when "vertices" and "rays" are absent, generator form otherwise"""
    _expect(doc, dict, path)
    if 'vertices' in doc or 'rays' in doc:
        return vpolyhedron_from_json(doc, path)
    return hpolyhedron_from_json(doc, path)


def polyhedron_to_json(P: Union[HPolyhedron, VPolyhedron]) -> Dict[str, Any]:
    return hpolyhedron_to_json(P) if isinstance(P, HPolyhedron) else vpolyhedron_to_json(P)


def cone_to_json(cone: Cone) -> Dict[str, Any]:
    return {'dim': cone.dim, 'generators': [vector_to_json(g) for g in cone.generators]}


def not_a_member_to_json(marker: NotAMember) -> Dict[str, Any]:
    return {'outcome': 'not-a-member', 'point': vector_to_json(marker.point)}


def functional_from_json(doc, path: str = '$', dim: Optional[int] = None) -> Functional:
    _expect(doc, dict, path)
    return Functional(vector_from_json(_field(doc, 'coeffs', path), path + '.coeffs', dim))


def functional_to_json(f: Functional) -> Dict[str, Any]:
    return {'coeffs': vector_to_json(f.coeffs)}


def sublinear_from_json(doc, path: str = '$') -> SublinearFunc:
    _expect(doc, dict, path)
    pieces = matrix_from_json(_field(doc, 'pieces', path), path + '.pieces')
    if not pieces:
        raise MalformedInputError(path + '.pieces', "at least one piece is needed")
    return SublinearFunc.from_coeffs(pieces)


def sublinear_to_json(p: SublinearFunc) -> Dict[str, Any]:
    return {'pieces': [vector_to_json(r) for r in p.coeff_rows]}


def separation_to_json(result: Union[SeparationResult, Inseparable]) -> Dict[str, Any]:
    if isinstance(result, Inseparable):
        return {'outcome': 'inseparable', 'reason': result.reason, 'witness': vector_to_json(result.witness)}
    doc = {'outcome': 'separated',
           'f': vector_to_json(result.functional.coeffs),
           'level': format_rational(result.level),
           'witness_lo': vector_to_json(result.witness_lo),
           'witness_hi': vector_to_json(result.witness_hi),
           'strict': result.strict}
    if result.level_hi is not None:
        doc['level_hi'] = format_rational(result.level_hi)
    return doc


def map_from_json(doc, path: str = '$') -> SetValuedMap:
    """{"dim_x": n, "dim_y": m, "graph": <HPolyhedron>}"""
    _expect(doc, dict, path)
    dims = []
    for key in ('dim_x', 'dim_y'):
        value = _field(doc, key, path)
        if isinstance(value, bool) or not isinstance(value, int) or value < 0:
            raise MalformedInputError("{}.{}".format(path, key), "expected a nonnegative integer")
        dims.append(value)
    graph = hpolyhedron_from_json(_field(doc, 'graph', path), path + '.graph')
    if graph.dim != dims[0] + dims[1]:
        raise MalformedInputError(path + '.graph.dim', "expected {}".format(dims[0] + dims[1]))
    return SetValuedMap(dims[0], dims[1], graph)


def map_to_json(F: SetValuedMap) -> Dict[str, Any]:
    return {'dim_x': F.dim_x, 'dim_y': F.dim_y, 'graph': hpolyhedron_to_json(F.graph)}


def function_from_json(doc, path: str = '$') -> PolyhedralFunction:
    """{"dim": n, "epigraph": <HPolyhedron>} or
    {"dim": n, "max_affine": [{"g": [...], "c": r}], "domain": <HPolyhedron, optional>}"""
    _expect(doc, dict, path)
    dim = _dim(doc, path)
    try:
        if 'epigraph' in doc:
            epigraph = hpolyhedron_from_json(doc['epigraph'], path + '.epigraph')
            if epigraph.dim != dim + 1:
                raise MalformedInputError(path + '.epigraph.dim', "expected {}".format(dim + 1))
            return PolyhedralFunction(dim, epigraph)
        raw = _expect(_field(doc, 'max_affine', path, required=False, default=[]), list, path + '.max_affine')
        pieces = []
        for k, item in enumerate(raw):
            ipath = "{}.max_affine[{}]".format(path, k)
            _expect(item, dict, ipath)
            pieces.append((vector_from_json(_field(item, 'g', ipath), ipath + '.g', dim),
                           rational_from_json(_field(item, 'c', ipath), ipath + '.c')))
        domain = None
        if 'domain' in doc:
            domain = hpolyhedron_from_json(doc['domain'], path + '.domain')
            if domain.dim != dim:
                raise MalformedInputError(path + '.domain.dim', "expected {}".format(dim))
        if not pieces and domain is None:
            raise MalformedInputError(path, "a function needs an epigraph, affine pieces or a domain")
        if not pieces:
            return PolyhedralFunction.indicator(domain)
        return PolyhedralFunction.max_affine(pieces, domain)
    except (MalformedInputError, ImproperFunctionError):
        raise
    except CcxError as e:
        raise MalformedInputError(path, str(e))


def function_to_json(phi: PolyhedralFunction) -> Dict[str, Any]:
    return {'dim': phi.dim, 'epigraph': hpolyhedron_to_json(phi.epigraph)}


def subdifferential_to_json(sub: Subdifferential) -> Dict[str, Any]:
    return {'at': vector_to_json(sub.at), 'set': hpolyhedron_to_json(sub.set)}


def lp_problem_from_json(doc, path: str = '$') -> LPProblem:
    """{"objective": [...], "sense": "max"|"min", "constraints": [{"a": [...], "b": r, "relation": "<="|"="}]}"""
    _expect(doc, dict, path)
    objective = vector_from_json(_field(doc, 'objective', path), path + '.objective')
    sense = _field(doc, 'sense', path, required=False, default='max')
    if sense not in ('max', 'min'):
        raise MalformedInputError(path + '.sense', "expected \"max\" or \"min\"")
    constraints = []
    raw = _expect(_field(doc, 'constraints', path, required=False, default=[]), list, path + '.constraints')
    for k, item in enumerate(raw):
        cpath = "{}.constraints[{}]".format(path, k)
        _expect(item, dict, cpath)
        relation = _field(item, 'relation', cpath, required=False, default='<=')
        if relation not in ('<=', '='):
            raise MalformedInputError(cpath + '.relation', "expected \"<=\" or \"=\"")
        constraints.append(LinearConstraint(vector_from_json(_field(item, 'a', cpath), cpath + '.a', len(objective)),
                                            rational_from_json(_field(item, 'b', cpath), cpath + '.b'),
                                            Relation(relation)))
    return LPProblem(objective, tuple(constraints), Sense(sense))


def lp_result_to_json(result: LPResult) -> Dict[str, Any]:
    doc: Dict[str, Any] = {'status': result.status.value}
    if result.optimum is not None:
        doc['optimum'] = format_rational(result.optimum)
    if result.witness is not None:
        doc['witness'] = vector_to_json(result.witness)
    if result.ray is not None:
        doc['ray'] = vector_to_json(result.ray)
    if result.infeasibility is not None:
        doc['infeasibility'] = format_rational(result.infeasibility)
    return doc


def dumps(doc) -> str:
    """Canonical text: sorted keys, two-space indentation"""
    return json.dumps(doc, sort_keys=True, indent=2)


def loads(text: str, source: str = '$'):
    try:
        return json.loads(text)
    except json.JSONDecodeError as e:
        raise MalformedInputError(source, "invalid JSON: {}".format(e))
