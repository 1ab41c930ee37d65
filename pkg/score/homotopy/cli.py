# Copyright © 2015-2018 STRG.AT GmbH, Vienna, Austria
# Copyright © 2019-2023 Necdet Can Ateşman, Vienna, Austria
#
# This file is part of the The SCORE Framework.
#
# The SCORE Framework and all its parts are free software: you can redistribute
# them and/or modify them under the terms of the GNU Lesser General Public
# License version 3 as published by the Free Software Foundation which is in
# the file named COPYING.LESSER.txt.
#
# The SCORE Framework and all its parts are distributed without any WARRANTY;
# without even the implied warranty of MERCHANTABILITY or FITNESS FOR A
# PARTICULAR PURPOSE. For more details see the GNU Lesser General Public
# License.
#
# If you have not received a copy of the GNU Lesser General Public License see
# http://www.gnu.org/licenses/.
#
# The License-Agreement realised between you as Licensee and STRG.AT GmbH as
# Licenser including the issue of its valid conclusion and its pre- and
# post-contractual effects is governed by the laws of Austria. Any disputes
# concerning this License-Agreement including the issue of its valid conclusion
# and its pre- and post-contractual effects are exclusively decided by the
# competent court, in whose district STRG.AT GmbH has its registered seat, at
# the discretion of STRG.AT GmbH also the competent court, in whose district
# the Licensee has his registered seat, an establishment or assets.

"""
The ``score-homotopy`` command. Results are printed as JSON on standard
output, diagnostics go to standard error. Exit codes:

``0``
    success
``1``
    infeasible or invalid input (instances, certificates, moves)
``2``
    a resource cap was hit
``3``
    any other error
"""

import argparse
import json
import logging
import sys

from score.init import ConfigurationError, parse_config_file

from ._init import init
from .certificate import (
    CertificateError, certificate_from_document, certificate_to_document,
    trace, verify_certificate)
from .curve import InvalidMove
from .dataloader import load_document, parse_document
from .generators import generate, parse_weight_model
from .oracle import Infeasible
from .reductions import (
    FrechetInstance, LayoutInstance, frechet_to_hh, layout_to_hh)
from .render import render_to
from .solver import ResourceLimitExceeded, lower_bounds
from .surface import (
    InstanceError, Surface, content_hash, darts_to_walk, format_weight,
    parse_weight)


log = logging.getLogger(__name__)


EXIT_OK, EXIT_INVALID, EXIT_LIMIT, EXIT_INTERNAL = 0, 1, 2, 3


def _parser():
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument('--conf', help='INI file with a [score.homotopy] '
                        'section')
    common.add_argument('--threads', type=int)
    common.add_argument('--max-states', type=int, dest='max_states')
    common.add_argument('--max-seconds', type=int, dest='max_seconds')
    common.add_argument('--out', help='output file (or directory for '
                        'render)')
    common.add_argument('-v', '--verbose', action='store_true')
    parser = argparse.ArgumentParser(
        prog='score-homotopy',
        description='Homotopy height of annuli and disks.')
    commands = parser.add_subparsers(dest='command', metavar='command')
    commands.required = True
    for name, text in (('solve', 'compute an optimal homotopy'),
                       ('approx', 'approximate by cutting and gluing'),
                       ('frechet', 'homotopic Fréchet distance'),
                       ('layout', 'minimum height linear layout')):
        command = commands.add_parser(name, parents=[common], help=text)
        command.add_argument('--in', dest='input', required=True)
        command.add_argument('--trace', action='store_true')
    command = commands.add_parser('verify', parents=[common],
                                  help='replay a certificate')
    command.add_argument('--in', dest='input', required=True)
    command.add_argument('--cert', required=True)
    command.add_argument('--trace', action='store_true')
    command = commands.add_parser('oracle', parents=[common],
                                  help='brute force height of small '
                                  'instances')
    command.add_argument('--in', dest='input', required=True)
    command.add_argument('--cap', help='largest height to consider')
    command = commands.add_parser('gen', parents=[common],
                                  help='generate an instance')
    command.add_argument('family')
    command.add_argument('params', nargs='*', metavar='key=value')
    command.add_argument('--seed', type=int, default=0)
    command.add_argument('--weights', default='unit',
                         help='unit or uniform:LOW:HIGH')
    command = commands.add_parser('render', parents=[common],
                                  help='draw every level curve as SVG')
    command.add_argument('--in', dest='input', required=True)
    command.add_argument('--cert', required=True)
    return parser


def _configure(args):
    confdict = {}
    if args.conf:
        config = parse_config_file(args.conf, return_configparser=True)
        if config.has_section('score.homotopy'):
            confdict.update(config['score.homotopy'])
    if args.threads is not None:
        confdict['threads'] = args.threads
    if args.max_states is not None:
        confdict['max_states'] = args.max_states
    if args.max_seconds is not None:
        confdict['max_seconds'] = args.max_seconds
    return init(confdict)


def _surface(instance):
    """
    The surface certificates for *instance* refer to.
    """
    if isinstance(instance, FrechetInstance):
        return frechet_to_hh(instance).surface
    if isinstance(instance, LayoutInstance):
        return layout_to_hh(instance).surface
    return instance


def _expect(instance, *types):
    if not isinstance(instance, types):
        raise InstanceError('wrong instance kind for this command')
    return instance


def _trace(certificate):
    return [{'step': step, 'walk': curve.walk(),
             'length': format_weight(length), 'max': format_weight(best)}
            for step, curve, length, best in trace(certificate)]


def _emit_certificate(args, result, certificate, height):
    document = certificate_to_document(certificate, height)
    if args.out:
        with open(args.out, 'w', encoding='utf-8') as file:
            json.dump(document, file, indent=2)
        result['certificate_file'] = args.out
    else:
        result['certificate'] = document
    if getattr(args, 'trace', False):
        result['trace'] = _trace(certificate)


def cmd_solve(args, conf):
    surface = _expect(parse_document(load_document(args.input)), Surface)
    certificate = conf.solve_exact(surface)
    height = verify_certificate(certificate)
    result = {'height': format_weight(height),
              'lower': format_weight(lower_bounds(surface).lower),
              'moves': len(certificate),
              'instance': content_hash(surface)}
    _emit_certificate(args, result, certificate, height)
    return result


def cmd_verify(args, conf):
    surface = _surface(parse_document(load_document(args.input)))
    certificate = certificate_from_document(
        surface, load_document(args.cert))
    height = verify_certificate(
        certificate, max_moves=conf.limits['max_moves'])
    result = {'height': format_weight(height), 'moves': len(certificate),
              'instance': content_hash(surface)}
    if args.trace:
        result['trace'] = _trace(certificate)
    return result


def cmd_oracle(args, conf):
    surface = _expect(parse_document(load_document(args.input)), Surface)
    cap = None if args.cap is None else parse_weight(args.cap)
    height = conf.solve_oracle(surface, cap)
    return {'height': format_weight(height),
            'instance': content_hash(surface)}


def cmd_approx(args, conf):
    surface = _expect(parse_document(load_document(args.input)), Surface)
    approx = conf.approx_solve(surface)
    result = {'height': format_weight(approx.height),
              'disk_height': format_weight(approx.disk_height),
              'path_weight': format_weight(approx.path.weight),
              'moves': len(approx.certificate)}
    _emit_certificate(args, result, approx.certificate, approx.height)
    return result


def cmd_frechet(args, conf):
    instance = _expect(parse_document(load_document(args.input)),
                       FrechetInstance)
    frechet = conf.solve_frechet(instance)
    result = {'height': format_weight(frechet.height),
              'K': format_weight(frechet.augmentation.K),
              'leashes': [
                  darts_to_walk(instance.surface, leash.darts, leash.start)
                  for leash in frechet.leashes]}
    _emit_certificate(args, result, frechet.certificate,
                      frechet.certificate.height())
    return result


def cmd_layout(args, conf):
    instance = _expect(parse_document(load_document(args.input)),
                       LayoutInstance)
    layout = conf.solve_layout(instance)
    result = {'height': format_weight(layout.height),
              'order': layout.order}
    _emit_certificate(args, result, layout.certificate, layout.height)
    return result


def _param(text):
    key, sep, value = text.partition('=')
    if not sep:
        raise InstanceError('invalid generator parameters', text)
    try:
        return key, int(value)
    except ValueError:
        return key, value


def cmd_gen(args, conf):
    spec = dict(_param(p) for p in args.params)
    spec.update(family=args.family, seed=args.seed,
                weights=parse_weight_model(args.weights))
    document = generate(spec)
    parse_document(document)
    if args.out:
        with open(args.out, 'w', encoding='utf-8') as file:
            json.dump(document, file, indent=2)
        return {'file': args.out, 'kind': document['kind']}
    return document


def cmd_render(args, conf):
    surface = _surface(parse_document(load_document(args.input)))
    certificate = certificate_from_document(
        surface, load_document(args.cert))
    paths = render_to(certificate, args.out or '.')
    return {'frames': paths}


COMMANDS = {
    'solve': cmd_solve,
    'verify': cmd_verify,
    'oracle': cmd_oracle,
    'approx': cmd_approx,
    'frechet': cmd_frechet,
    'layout': cmd_layout,
    'gen': cmd_gen,
    'render': cmd_render,
}


def _emit_bounds(args, error, stdout):
    """
    Writes the bounds a search stopped with. A complete certificate found on
    the way is included like the certificate of a successful run.
    """
    result = {'command': args.command, 'status': 'limit',
              'reason': str(error)}
    for name in ('lower', 'upper'):
        value = getattr(error, name, None)
        result[name] = None if value is None else format_weight(value)
    if error.upper is not None and error.partial is not None:
        _emit_certificate(args, result, error.partial, error.upper)
    json.dump(result, stdout, indent=2)
    stdout.write('\n')


def run(argv, stdout=None):
    """
    Runs the command line *argv* (without the program name) and returns the
    exit code. The JSON result is written to *stdout*.
    """
    stdout = stdout or sys.stdout
    try:
        args = _parser().parse_args(argv)
    except SystemExit as e:
        return EXIT_OK if not e.code else EXIT_INVALID
    logging.basicConfig(
        stream=sys.stderr,
        level=logging.DEBUG if args.verbose else logging.WARNING,
        format='%(levelname)s %(name)s: %(message)s')
    try:
        conf = _configure(args)
        result = COMMANDS[args.command](args, conf)
    except (Infeasible, InstanceError, InvalidMove, CertificateError) as e:
        log.error('%s', e)
        return EXIT_INVALID
    except ResourceLimitExceeded as e:
        log.error('%s', e)
        _emit_bounds(args, e, stdout)
        return EXIT_LIMIT
    except ConfigurationError as e:
        log.error('%s', e)
        return EXIT_INTERNAL
    except Exception:
        log.exception('internal error')
        return EXIT_INTERNAL
    if args.command != 'gen':
        result = dict(command=args.command, **result)
    json.dump(result, stdout, indent=2)
    stdout.write('\n')
    log.info('%s done', args.command)
    return EXIT_OK


def main():
    sys.exit(run(sys.argv[1:]))
