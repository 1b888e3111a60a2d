"""Command-line front end: one verb per invocation, text or JSON on stdout."""

import argparse
import functools
import json
import logging
import sys
from dataclasses import replace
from typing import Callable, Dict, List, Optional, Sequence

from .cache import BFunctionCache
from .config import Config
from .coxeter import degrees, opdam_bg
from .engine import BFunctionEngine
from .expr_parser import parse_polynomial
from .factored import FactoredBPoly, to_rational
from .invariants import reports_to_frame, run_invariant_suite
from .jumping import METHODS, flat_summary
from .lemmas import checks_passed, verify_all
from .log_setup import configure_logging
from .weyl_oracle import BernsteinOracle, verify_conjecture_small

logger = logging.getLogger(__name__)

EXIT_OK = 0
EXIT_CHECK_FAILED = 1
EXIT_USAGE = 2


class _Output:
    """Buffers stdout so that a failing command prints nothing."""

    def __init__(self, as_json: bool, indent: int):
        self.as_json = as_json
        self.indent = indent
        self.lines: List[str] = []

    def emit(self, text: str, payload=None) -> None:
        if self.as_json:
            self.lines.append(json.dumps(payload, indent=self.indent))
        else:
            self.lines.append(text)

    def flush(self) -> None:
        for line in self.lines:
            print(line)


def _add_global_flags(parser: argparse.ArgumentParser, defaults: bool) -> None:
    def default(value):
        return value if defaults else argparse.SUPPRESS

    parser.add_argument('--json', action='store_true', default=default(False),
                        help='Machine-readable output')
    parser.add_argument('--cache', type=str, default=default(None), help='Cache file path')
    parser.add_argument('--no-cache', action='store_true', default=default(False),
                        help='Neither read nor write the cache')
    parser.add_argument('--verbose', action='store_true', default=default(False),
                        help='Debug logging on stderr')


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog='bfunction',
        description='b-functions of Vandermonde determinants and Coxeter arrangements')
    _add_global_flags(parser, defaults=True)
    # the same flags are accepted after the verb
    common = argparse.ArgumentParser(add_help=False)
    _add_global_flags(common, defaults=False)
    sub = parser.add_subparsers(dest='verb', required=True)
    add_verb = functools.partial(sub.add_parser, parents=[common])

    for verb, help_text in (('conj', 'Conjectured b-function of xi_n'),
                            ('blowup', 'b-function after blowing up the diagonal'),
                            ('upper', 'Known multiple of b_{xi_n}')):
        p = add_verb(verb, help=help_text)
        p.add_argument('n', type=int)

    p = add_verb('local', help='Local b-function of xi_n at a point')
    p.add_argument('point', nargs='+', help='Rational coordinates, e.g. 5 5 7 or 1/2')

    p = add_verb('opdam', help='b-function of the discriminant on h/W')
    p.add_argument('label', help='Coxeter type such as A3, B4, E8, H3, I2(5)')

    p = add_verb('check', help='Run the invariant suite for n = 2..n_max')
    p.add_argument('n_max', type=int, nargs='?', default=None)
    p.add_argument('--csv', type=str, default=None, help='Also write the table to this CSV file')

    p = add_verb('verify-lemmas', help='Check the symbol-algebra identities')
    p.add_argument('n', type=int)

    p = add_verb('oracle', help='Search for a Bernstein operator of a polynomial')
    p.add_argument('expr', help='Polynomial in x1..x9, y1..y9, e.g. "y1*y2*(y1+y2)"')
    p.add_argument('--order', type=int, default=None)
    p.add_argument('--sdeg', type=int, default=None)
    p.add_argument('--cdeg', type=int, default=None)
    p.add_argument('--full-ansatz', action='store_true', help='Do not restrict to one weight')

    p = add_verb('jump', help='Minimal jumping coefficient of the braid arrangement')
    p.add_argument('n', type=int)
    p.add_argument('--method', choices=METHODS, default='set_partitions')
    p.add_argument('--table', action='store_true', help='Print the flats grouped by shape')

    p = add_verb('kashiwara', help='Smallest covers of b_{xi_n} by shifted factors')
    p.add_argument('n', type=int)
    p.add_argument('--max-n', type=int, default=None)
    p.add_argument('--max-m', type=int, default=None)

    p = add_verb('oracle-conj', help='Compare the oracle with b_{xi_n} for n = 2, 3')
    p.add_argument('n', type=int)
    p.add_argument('--allow-n4', action='store_true', help='Permit the slow n = 4 run')
    return parser


def _emit_b(out: _Output, b: FactoredBPoly, **extra) -> None:
    payload = b.to_json()
    payload.update(extra)
    out.emit(str(b), payload)


def _cmd_conj(args, engine: BFunctionEngine, out: _Output) -> int:
    _emit_b(out, engine.b_xi(args.n))
    return EXIT_OK


def _cmd_blowup(args, engine, out) -> int:
    _emit_b(out, engine.blowup_b(args.n))
    return EXIT_OK


def _cmd_upper(args, engine, out) -> int:
    _emit_b(out, engine.upper_bound_b(args.n))
    return EXIT_OK


def _cmd_local(args, engine, out) -> int:
    point = [to_rational(value) for value in args.point]
    _emit_b(out, engine.local_b(point))
    return EXIT_OK


def _cmd_opdam(args, engine, out) -> int:
    datum = degrees(args.label)
    if not datum.is_crystallographic:
        logger.warning("%s is not a Weyl group: conjectural coverage", datum.label)
    _emit_b(out, opdam_bg(datum), type=datum.label, degrees=list(datum.degrees),
            coverage=datum.coverage)
    return EXIT_OK


def _cmd_check(args, engine, out) -> int:
    n_max = engine.config.suite_n_max if args.n_max is None else args.n_max
    reports = run_invariant_suite(n_max, engine=engine)
    frame = reports_to_frame(reports)
    if args.csv:
        frame.to_csv(args.csv, index=False)
    columns = list(engine.config.table_columns) + [c for c in frame.columns
                                                   if c not in engine.config.table_columns]
    out.emit(frame[columns].to_string(index=False), [r.to_dict() for r in reports])
    return EXIT_OK if all(r.passed for r in reports) else EXIT_CHECK_FAILED


def _cmd_verify_lemmas(args, engine, out) -> int:
    table = verify_all(args.n)
    out.emit(table.to_string(index=False), table.to_dict(orient='records'))
    return EXIT_OK if checks_passed(table) else EXIT_CHECK_FAILED


def _cmd_oracle(args, engine, out) -> int:
    expr = parse_polynomial(args.expr)
    oracle = BernsteinOracle(engine.config)
    result = oracle.find_bernstein(expr, order_bound=args.order, s_degree_bound=args.sdeg,
                                   coeff_degree_bound=args.cdeg,
                                   homogeneous=False if args.full_ansatz else None)
    if result is None:
        out.emit('inconclusive: no Bernstein operator within the bounds',
                 {'b': None, 'status': 'inconclusive'})
    else:
        payload = result.to_dict()
        payload['status'] = 'found'
        out.emit(f'{result.describe()}\nL = {result.certificate}', payload)
    return EXIT_OK


def _cmd_jump(args, engine, out) -> int:
    value = engine.min_jumping_coefficient(args.n, method=args.method)
    payload = {'n': args.n, 'method': args.method, 'num': int(value.p), 'den': int(value.q)}
    text = str(value)
    if args.table:
        table = flat_summary(args.n, engine.config.max_set_partition_n)
        text = f'{text}\n{table.to_string(index=False)}'
        payload['flats'] = table.to_dict(orient='records')
    out.emit(text, payload)
    return EXIT_OK


def _cmd_kashiwara(args, engine, out) -> int:
    cover = engine.kashiwara_cover(args.n, max_n=args.max_n, max_m=args.max_m)
    blowup = engine.blowup_cover(args.n, max_m=args.max_m)
    shift = engine.blowup_shift_cover(args.n, max_n=args.max_n)

    def show(value) -> str:
        return 'none' if value is None else str(value)

    text = '\n'.join([
        f"kashiwara: {'none' if cover is None else f'N={cover[0]} M={cover[1]}'}",
        f'blowup: M={show(blowup)}',
        f'blowup-shift: N={show(shift)}',
    ])
    payload = {'n': args.n, 'kashiwara': list(cover) if cover else None,
               'blowup_cover': blowup, 'blowup_shift_cover': shift}
    out.emit(text, payload)
    return EXIT_OK


def _cmd_oracle_conj(args, engine, out) -> int:
    check = verify_conjecture_small(args.n, allow_n4=args.allow_n4,
                                    oracle=BernsteinOracle(engine.config), engine=engine)
    found = check.found.describe() if check.found is not None else 'none'
    text = f'{check.status}: oracle {found}, conjectured {check.expected}'
    payload = {'n': args.n, 'status': check.status, 'expected': check.expected.to_json(),
               'found': check.found.to_dict() if check.found is not None else None}
    out.emit(text, payload)
    return EXIT_CHECK_FAILED if check.status == 'refuted' else EXIT_OK


COMMANDS: Dict[str, Callable] = {
    'conj': _cmd_conj,
    'blowup': _cmd_blowup,
    'upper': _cmd_upper,
    'local': _cmd_local,
    'opdam': _cmd_opdam,
    'check': _cmd_check,
    'verify-lemmas': _cmd_verify_lemmas,
    'oracle': _cmd_oracle,
    'jump': _cmd_jump,
    'kashiwara': _cmd_kashiwara,
    'oracle-conj': _cmd_oracle_conj,
}


def run(argv: Optional[Sequence[str]] = None, config: Optional[Config] = None) -> int:
    """
    Execute one command.

    Args:
        argv: Arguments without the program name; sys.argv[1:] by default
        config: Base configuration; flags override its fields

    Returns:
        0 on success, 1 if a requested check failed, 2 on a usage error
    """
    parser = build_parser()
    try:
        args = parser.parse_args(sys.argv[1:] if argv is None else list(argv))
    except SystemExit as exc:
        return EXIT_OK if exc.code in (0, None) else EXIT_USAGE

    configure_logging(args.verbose)
    config = config or Config()
    if args.cache:
        config = replace(config, cache_path=args.cache)
    if args.no_cache:
        config = replace(config, use_cache=False)

    out = _Output(args.json, config.json_indent)
    try:
        cache = BFunctionCache(config.cache_path, config.cache_version) if config.use_cache else None
        engine = BFunctionEngine(config, cache.load() if cache else None)
        known = set(engine.memo)
        status = COMMANDS[args.verb](args, engine, out)
        if cache and set(engine.memo) != known:
            try:
                cache.save(engine.memo)
            except OSError as exc:
                logger.warning("Could not write cache %s: %s", cache.file_path, exc)
    except ValueError as exc:
        print(f'error: {exc}', file=sys.stderr)
        return EXIT_USAGE
    except RuntimeError as exc:
        print(f'error: {exc}', file=sys.stderr)
        return EXIT_CHECK_FAILED
    out.flush()
    return status
