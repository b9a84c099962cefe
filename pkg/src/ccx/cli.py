# -*- coding: utf-8 -*-
"""
Command-line surface: every operation reads JSON from a file or standard input and writes
JSON to standard output.

Exit codes: 0 success, 1 usage error (malformed input, dimension mismatch, unsupported
representation, unknown theorem), 2 typed mathematical outcome (inseparable, not a member,
precondition unmet and the other domain errors), 3 Fourier-Motzkin budget exhausted.
"""
from __future__ import annotations

import argparse
import sys
from typing import Any, Dict, List, Optional, Sequence, TextIO, Tuple

from pymodaq.utils.logger import set_logger, get_module_name

from . import config, __version__
from .arith import transpose
from .calculus import argmin_set, coderivative, marginal_subdifferential, marginal_value, subdifferential
from .convex import (Inseparable, NotAMember, core_of, gauge_eval, hahn_banach_extend, hahn_banach_via_separation,
                     lin_of, normal_cone, properly_separate, separate_point)
from .errors import (CcxError, DimensionError, DomainError, DominationError, FMBudgetExceeded, MalformedInputError,
                     PreconditionUnmet, RepresentationError, UnknownTheoremError)
from .lp import solve_lp
from .polyhedra import HPolyhedron, convert_representation, feasible_point, h_to_v
from .serialization import (cone_to_json, dumps, function_from_json, functional_to_json, hpolyhedron_from_json,
                            hpolyhedron_to_json, loads, lp_problem_from_json, lp_result_to_json, map_from_json,
                            matrix_from_json, not_a_member_to_json, polyhedron_from_json, polyhedron_to_json,
                            rational_to_json, separation_to_json, sublinear_from_json, subdifferential_to_json,
                            vector_from_json, vector_to_json)
from .verification import available_theorems, verify_all, verify_theorem

logger = set_logger(get_module_name(__file__))

EXIT_OK = 0
EXIT_USAGE = 1
EXIT_DOMAIN = 2
EXIT_BUDGET = 3


class _Parser(argparse.ArgumentParser):
    """argparse reporting usage errors as exceptions instead of exiting"""

    def error(self, message):
        raise MalformedInputError('argv', message)


class _Context:
    def __init__(self, stdin: Optional[TextIO]):
        self.stdin = stdin if stdin is not None else sys.stdin

    def document(self, path: Optional[str], flag: str = '--in'):
        if path is None or path == '-':
            return loads(self.stdin.read(), '<stdin>')
        try:
            with open(path, encoding='utf-8') as handle:
                return loads(handle.read(), path)
        except OSError as e:
            raise MalformedInputError(flag, "cannot read {}: {}".format(path, e.strerror))


def _point(text: str, flag: str = '--point'):
    return vector_from_json(loads(text, flag), flag)


def _field(doc, key: str):
    if not isinstance(doc, dict):
        raise MalformedInputError('$', "expected an object")
    if key not in doc:
        raise MalformedInputError('$', "missing field {!r}".format(key))
    return doc[key]


def _set(ctx: _Context, path: Optional[str], flag: str = '--set') -> HPolyhedron:
    return hpolyhedron_from_json(ctx.document(path, flag), '$')


def cmd_core(args, ctx) -> Tuple[int, Any]:
    return EXIT_OK, hpolyhedron_to_json(core_of(_set(ctx, args.input, '--in')))


def cmd_lin(args, ctx):
    return EXIT_OK, hpolyhedron_to_json(lin_of(_set(ctx, args.input, '--in')))


def cmd_gauge(args, ctx):
    S = _set(ctx, args.set)
    return EXIT_OK, {'value': rational_to_json(gauge_eval(S, _point(args.point)))}


def cmd_separate(args, ctx):
    S = _set(ctx, args.set)
    if (args.point is None) == (args.other is None):
        raise MalformedInputError('argv', "separate needs exactly one of --point and --other")
    if args.point is not None:
        result = separate_point(S, _point(args.point))
    else:
        result = properly_separate(S, _set(ctx, args.other, '--other'))
    return (EXIT_DOMAIN if isinstance(result, Inseparable) else EXIT_OK), separation_to_json(result)


def cmd_hahn_banach(args, ctx):
    """{"p": {"pieces": [...]}, "basis": [vectors spanning Y], "values": [g on each vector]}"""
    doc = ctx.document(args.input)
    p = sublinear_from_json(_field(doc, 'p'), '$.p')
    vectors = matrix_from_json(_field(doc, 'basis'), '$.basis', p.dim)
    values = vector_from_json(_field(doc, 'values'), '$.values', len(vectors))
    basis = transpose(vectors) if vectors else ()
    construct = hahn_banach_via_separation if args.method == 'separation' else hahn_banach_extend
    return EXIT_OK, functional_to_json(construct(p, basis, values))


def cmd_normal_cone(args, ctx):
    cone = normal_cone(_set(ctx, args.set), _point(args.point))
    if isinstance(cone, NotAMember):
        return EXIT_DOMAIN, not_a_member_to_json(cone)
    return EXIT_OK, cone_to_json(cone)


def cmd_coderivative(args, ctx):
    """{"map": <map>, "x": [...], "y": [...], "g": [...]}"""
    doc = ctx.document(args.input)
    F = map_from_json(_field(doc, 'map'), '$.map')
    x = vector_from_json(_field(doc, 'x'), '$.x', F.dim_x)
    y = vector_from_json(_field(doc, 'y'), '$.y', F.dim_y)
    g = vector_from_json(_field(doc, 'g'), '$.g', F.dim_y)
    result = coderivative(F, x, y, g)
    if isinstance(result, NotAMember):
        return EXIT_DOMAIN, not_a_member_to_json(result)
    return EXIT_OK, hpolyhedron_to_json(result)


def cmd_subdiff(args, ctx):
    """{"function": <function>, "x": [...]}"""
    doc = ctx.document(args.input)
    phi = function_from_json(_field(doc, 'function'), '$.function')
    x = vector_from_json(_field(doc, 'x'), '$.x', phi.dim)
    return EXIT_OK, subdifferential_to_json(subdifferential(phi, x))


def cmd_marginal(args, ctx):
    """{"function": <phi on (x, y)>, "map": <F>, "x": [...], "y": [..., optional]}

    Reports mu(x), the argmin set and the subdifferential of mu at x through a minimizer y,
    the first vertex of the argmin set when y is not given.
    """
    doc = ctx.document(args.input)
    phi = function_from_json(_field(doc, 'function'), '$.function')
    F = map_from_json(_field(doc, 'map'), '$.map')
    x = vector_from_json(_field(doc, 'x'), '$.x', F.dim_x)
    argmin = argmin_set(phi, F, x)
    if 'y' in doc:
        y = vector_from_json(doc['y'], '$.y', F.dim_y)
    else:
        vertices = h_to_v(argmin).vertices
        y = vertices[0] if vertices else feasible_point(argmin)
    return EXIT_OK, {'value': rational_to_json(marginal_value(phi, F, x)),
                     'argmin': hpolyhedron_to_json(argmin),
                     'y': vector_to_json(y),
                     'subdifferential': hpolyhedron_to_json(marginal_subdifferential(phi, F, x, y))}


def cmd_convert(args, ctx):
    return EXIT_OK, polyhedron_to_json(convert_representation(polyhedron_from_json(ctx.document(args.input))))


def cmd_lp(args, ctx):
    return EXIT_OK, lp_result_to_json(solve_lp(lp_problem_from_json(ctx.document(args.input))))


def cmd_verify(args, ctx):
    if args.list:
        return EXIT_OK, {'theorems': available_theorems()}
    seed = args.seed if args.seed is not None else int(config['verification', 'seed'])
    count = args.count if args.count is not None else int(config['verification', 'count'])
    dim = args.dim if args.dim is not None else int(config['verification', 'dim'])
    if args.theorem == 'all':
        verdicts = verify_all(seed, count, dim)
    else:
        verdicts = [verify_theorem(args.theorem, seed, count, dim)]
    code = EXIT_OK if all(v.ok for v in verdicts) else EXIT_DOMAIN
    if len(verdicts) == 1 and args.theorem != 'all':
        return code, verdicts[0].to_dict()
    return code, {'verdicts': [v.to_dict() for v in verdicts]}


def build_parser() -> argparse.ArgumentParser:
    parser = _Parser(prog='ccx', description="Exact convex calculus on rational polyhedra")
    parser.add_argument('--version', action='version', version='%(prog)s ' + __version__)
    sub = parser.add_subparsers(dest='command', required=True, parser_class=_Parser)

    def add(name, handler, help_text, in_flag=False, set_flag=False, point_flag=False):
        command = sub.add_parser(name, help=help_text)
        if in_flag:
            command.add_argument('--in', dest='input', default=None, help="JSON file, standard input if omitted")
        if set_flag:
            command.add_argument('--set', required=True, help="JSON file of a constraint-form set")
        if point_flag:
            command.add_argument('--point', required=True, help='point as a JSON array, e.g. "[1, \\"1/2\\"]"')
        command.set_defaults(handler=handler)
        return command

    add('core', cmd_core, "algebraic core of a set", in_flag=True)
    add('lin', cmd_lin, "algebraic closure of a set", in_flag=True)
    add('gauge', cmd_gauge, "Minkowski gauge of an absorbing set at a point", set_flag=True, point_flag=True)
    separate = add('separate', cmd_separate, "separate a set from a point or from another set", set_flag=True)
    separate.add_argument('--point', default=None)
    separate.add_argument('--other', default=None, help="JSON file of the second set")
    hb = add('hahn-banach', cmd_hahn_banach, "extend a dominated functional", in_flag=True)
    hb.add_argument('--method', choices=('extend', 'separation'), default='extend')
    add('normal-cone', cmd_normal_cone, "normal cone of a set at a point", set_flag=True, point_flag=True)
    add('coderivative', cmd_coderivative, "coderivative of a convex-graph map", in_flag=True)
    add('subdiff', cmd_subdiff, "subdifferential of a polyhedral function", in_flag=True)
    add('marginal', cmd_marginal, "optimal value function and its subdifferential", in_flag=True)
    add('convert', cmd_convert, "switch between constraint and generator form", in_flag=True)
    add('lp', cmd_lp, "solve a linear program exactly", in_flag=True)
    verify = add('verify', cmd_verify, "run theorem verification suites")
    verify.add_argument('--theorem', default='all', help="theorem id or 'all'")
    verify.add_argument('--seed', type=int, default=None)
    verify.add_argument('--count', type=int, default=None)
    verify.add_argument('--dim', type=int, default=None)
    verify.add_argument('--list', action='store_true', help="print the registered theorem ids")
    return parser


def _error(kind: str, error: Exception, **extra) -> Dict[str, Any]:
    doc = {'outcome': kind, 'error': type(error).__name__, 'message': str(error)}
    doc.update(extra)
    return doc


def run_command(argv: Sequence[str], stdin: Optional[TextIO] = None) -> Tuple[int, str]:
    """Run one command line and return (exit code, JSON text)"""
    ctx = _Context(stdin)
    try:
        args = build_parser().parse_args(list(argv))
        logger.info("running {}".format(args.command))
        code, doc = args.handler(args, ctx)
    except MalformedInputError as e:
        code, doc = EXIT_USAGE, _error('usage-error', e, path=e.path)
    except (DimensionError, RepresentationError, UnknownTheoremError) as e:
        code, doc = EXIT_USAGE, _error('usage-error', e)
    except PreconditionUnmet as e:
        code, doc = EXIT_DOMAIN, _error('precondition-unmet', e, condition=e.condition)
    except DominationError as e:
        extra = {'witness': vector_to_json(e.witness)} if e.witness is not None else {}
        code, doc = EXIT_DOMAIN, _error('not-dominated', e, **extra)
    except FMBudgetExceeded as e:
        code, doc = EXIT_BUDGET, _error('budget-exceeded', e)
    except DomainError as e:
        code, doc = EXIT_DOMAIN, _error('domain-error', e)
    except CcxError as e:
        code, doc = EXIT_USAGE, _error('usage-error', e)
    return code, dumps(doc)


def main(argv: Optional[List[str]] = None) -> int:
    code, text = run_command(argv if argv is not None else sys.argv[1:])
    stream = sys.stdout if code in (EXIT_OK, EXIT_DOMAIN) else sys.stderr
    stream.write(text + '\n')
    return code


if __name__ == '__main__':
    sys.exit(main())
