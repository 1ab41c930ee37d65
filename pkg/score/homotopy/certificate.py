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
Certificates are discrete homotopies: an initial curve and a list of moves.
Replaying the moves yields the level curves, the maximum of their lengths is
the height of the homotopy.
"""

from collections import namedtuple
import logging

from .curve import (
    FaceFlip, InvalidMove, Spike, Unspike, curve_from_walk, flip_moves,
    goal_key, initial_curve, is_simple, reachable_faces, resolve_move,
    reversed_curve, shortest_homotopic_cycle, spike_moves, unspike_moves,
    winding)
from .surface import HomotopyError, content_hash, format_weight


log = logging.getLogger(__name__)


class CertificateError(HomotopyError):
    """
    Raised when a certificate does not describe a homotopy between the
    boundary curves of its surface.
    """


class NotMonotone(HomotopyError):
    pass


class NotAnIsotopy(HomotopyError):
    pass


class RetractionError(HomotopyError):
    pass


Monotonicity = namedtuple('Monotonicity', 'monotone order')


def move_bound(surface):
    """
    The number of moves an optimal reduced homotopy never exceeds:
    ``8m(n+1)+n`` for *m* edges and *n* faces.
    """
    m = len(surface.edges)
    n = len(surface.faces)
    return 8 * m * (n + 1) + n


class Certificate:
    """
    A discrete homotopy on *surface*: the *initial* curve (the first boundary
    curve if omitted) and a sequence of *moves*.
    """

    def __init__(self, surface, initial=None, moves=()):
        self.surface = surface
        if initial is None:
            initial = initial_curve(surface)
        self.initial = initial
        self.moves = tuple(moves)

    def __len__(self):
        return len(self.moves)

    def __repr__(self):
        return '<Certificate %d moves>' % len(self.moves)

    def replay(self):
        """
        Applies all moves and returns ``(curves, resolved_moves)``. The list
        of curves starts with the initial curve. Raises
        :class:`~score.homotopy.curve.InvalidMove` naming the failing step.
        """
        curves = [self.initial]
        resolved = []
        for step, move in enumerate(self.moves):
            try:
                curve, move = resolve_move(curves[-1], move)
            except InvalidMove as e:
                raise e.at_step(step) from None
            curves.append(curve)
            resolved.append(move)
        return curves, resolved

    def curves(self):
        return self.replay()[0]

    def height(self):
        return max(c.length for c in self.curves())


def verify_certificate(cert, *, max_moves=None):
    """
    Replays *cert* and returns its height, the maximum length over all level
    curves including both boundary curves.

    Raises :class:`~score.homotopy.curve.InvalidMove` ("invalid move at step
    i") or :class:`CertificateError` if the certificate does not start at the
    first or end at the second boundary curve. Certificates with more moves
    than *max_moves* (default :func:`move_bound`) are verified anyway, but
    logged.
    """
    surface = cert.surface
    if cert.initial.walk_key != initial_curve(surface).walk_key:
        raise CertificateError('wrong initial curve')
    curves, _ = cert.replay()
    if curves[-1].walk_key != goal_key(surface):
        raise CertificateError('wrong terminal curve')
    limit = move_bound(surface) if not max_moves else max_moves
    if len(cert.moves) > limit:
        log.warning('certificate has %d moves, more than the bound %d',
                    len(cert.moves), limit)
    height = max(c.length for c in curves)
    log.debug('verified %d moves, height %s', len(cert.moves), height)
    return height


def is_monotone(cert):
    """
    Checks whether *cert* is a monotone isotopy: every level curve is simple
    and every face flip sweeps a face that was not swept before. Returns a
    :class:`Monotonicity` carrying the flip order.
    """
    curves, moves = cert.replay()
    for curve in curves:
        if not is_simple(curve):
            raise NotAnIsotopy('not an isotopy')
    swept = set()
    order = []
    for move in moves:
        if not isinstance(move, FaceFlip):
            continue
        if not move.forward or move.face in swept:
            return Monotonicity(False, None)
        swept.add(move.face)
        order.append(move.face)
    return Monotonicity(True, order)


# reduction


def _acceptable(curve, height):
    return curve.length <= height and is_simple(curve)


def _cancel(curves, moves, i, height):
    if (isinstance(moves[i], Spike) and isinstance(moves[i + 1], Unspike)
            and curves[i] == curves[i + 2]):
        return []


def _absorb(curves, moves, i, height):
    if not (isinstance(moves[i], Spike) and
            isinstance(moves[i + 1], FaceFlip)):
        return None
    face = moves[i + 1].face
    for move, result in flip_moves(curves[i], [face], (True,)):
        if result == curves[i + 2]:
            return [move]


def _alternatives(curve, template):
    if isinstance(template, FaceFlip):
        return flip_moves(curve, [template.face], (template.forward,))
    if isinstance(template, Spike):
        return spike_moves(curve)
    return unspike_moves(curve)


def _swap(curves, moves, i, height, first_type, second_types):
    if not (isinstance(moves[i], first_type) and
            isinstance(moves[i + 1], second_types)):
        return None
    target = curves[i + 2]
    early, late = moves[i + 1], moves[i]
    for move, middle in _alternatives(curves[i], early):
        if not _acceptable(middle, height):
            continue
        for second, result in _alternatives(middle, late):
            if result == target:
                return [move, second]


def _postpone(curves, moves, i, height):
    return _swap(curves, moves, i, height, Spike, (FaceFlip, Unspike))


def _advance(curves, moves, i, height):
    if not isinstance(moves[i + 1], Unspike):
        return None
    return _swap(curves, moves, i, height, (FaceFlip, Spike), Unspike)


_RULES = (_cancel, _absorb, _postpone, _advance)


def reduce_certificate(cert):
    """
    Postpones spikes and advances unspikes until no rule applies, cancelling
    a spike that is immediately undone and merging a spike into the flip that
    follows it whenever the flip alone yields the same curve. The result has
    at most the height and the number of moves of *cert*.

    Rules are tried in a fixed order at the earliest applicable position.
    """
    monotonicity = is_monotone(cert)
    if not monotonicity.monotone:
        raise NotMonotone('not monotone')
    height = verify_certificate(cert)
    curves, moves = cert.replay()
    changed = True
    while changed:
        changed = False
        for i in range(len(moves) - 1):
            for rule in _RULES:
                replacement = rule(curves, moves, i, height)
                if replacement is None:
                    continue
                moves = moves[:i] + replacement + moves[i + 2:]
                curves = Certificate(cert.surface, cert.initial,
                                     moves).curves()
                log.debug('%s at %d', rule.__name__.strip('_'), i)
                changed = True
                break
            if changed:
                break
    return Certificate(cert.surface, cert.initial, moves)


# retraction


def _sides(surface, alpha):
    blocked = set(alpha.copies())
    lower = reachable_faces(surface, 'B0', blocked)
    if 'B1' in lower:
        raise RetractionError('alpha does not separate the boundaries')
    return lower - {'B0'}


def retract_certificate(cert, alpha, **kwargs):
    """
    Returns a monotone isotopy of at most the height of *cert* that has the
    closed curve *alpha* as one of its level curves. *alpha* must be simple,
    wind once around the annulus and be a shortest such cycle through each
    of its vertices.

    The faces between the first boundary and *alpha* are swept first,
    followed by the remaining ones, each part in the order of *cert*.
    """
    from .solver import solve_ordered
    surface = cert.surface
    if surface.kind != 'annulus' or not alpha.closed:
        raise RetractionError('alpha must be a closed curve of an annulus')
    if not is_simple(alpha):
        raise RetractionError('alpha is not simple')
    turns = winding(alpha)
    if turns == -1:
        alpha = reversed_curve(alpha)
    elif turns != 1:
        raise RetractionError('alpha not homotopic to the boundaries')
    for vertex in set(alpha.vertices()):
        if alpha.length > shortest_homotopic_cycle(surface, vertex):
            raise RetractionError('alpha is not a shortest cycle')
    first = initial_curve(surface)
    if alpha.walk_key in (first.walk_key, goal_key(surface)):
        return cert
    monotonicity = is_monotone(cert)
    if not monotonicity.monotone:
        raise NotMonotone('not monotone')
    height = verify_certificate(cert)
    lower = _sides(surface, alpha)
    order = monotonicity.order
    lower_order = [f for f in order if f in lower]
    upper_order = [f for f in order if f not in lower]
    head = solve_ordered(surface, first, alpha.walk_key, lower_order,
                         **kwargs)
    middle = head.curves()[-1]
    tail = solve_ordered(surface, middle, goal_key(surface), upper_order,
                         swept=lower, **kwargs)
    result = Certificate(surface, first, head.moves + tail.moves)
    if verify_certificate(result) > height:
        raise RetractionError('retraction increased height')
    return result


# documents


def _move_to_document(move):
    if isinstance(move, FaceFlip):
        body = {'face': move.face, 'at': move.at, 'len': move.len}
        if move.offset is not None:
            body['offset'] = move.offset
        if move.forward is not None:
            body['forward'] = move.forward
        return {'flip': body}
    if isinstance(move, Spike):
        body = {'at': move.at, 'edge': move.edge}
        if move.end is not None:
            body['end'] = move.end
        return {'spike': body}
    return {'unspike': {'at': move.at}}


def _move_from_document(document):
    try:
        (tag, body), = document.items()
        if tag == 'flip':
            return FaceFlip(str(body['face']), int(body['at']),
                            int(body['len']), body.get('offset'),
                            body.get('forward'))
        if tag == 'spike':
            return Spike(int(body['at']), str(body['edge']), body.get('end'))
        if tag == 'unspike':
            return Unspike(int(body['at']))
    except (ValueError, TypeError, KeyError, AttributeError):
        pass
    raise CertificateError('malformed move %r' % (document,))


def certificate_to_document(cert, height=None):
    """
    The structured representation of *cert*, tagged with the content hash
    of its surface.
    """
    document = {
        'surface': content_hash(cert.surface),
        'initial': cert.initial.walk(),
        'moves': [_move_to_document(m) for m in cert.moves],
    }
    if height is not None:
        document['height'] = format_weight(height)
    return document


def certificate_from_document(surface, document):
    """
    Inverse of :func:`certificate_to_document`. Raises
    :class:`CertificateError` if the document was written for another
    surface.
    """
    if not isinstance(document, dict):
        raise CertificateError('malformed certificate')
    expected = document.get('surface')
    if expected is not None and expected != content_hash(surface):
        raise CertificateError('surface hash mismatch')
    try:
        initial = curve_from_walk(surface, document['initial'])
        moves = [_move_from_document(m) for m in document['moves']]
    except KeyError as e:
        raise CertificateError('malformed certificate (%s)' % e)
    return Certificate(surface, initial, moves)


def trace(cert):
    """
    Yields ``(step, curve, length, running_max)`` for every level curve.
    """
    best = None
    for step, curve in enumerate(cert.curves()):
        best = curve.length if best is None else max(best, curve.length)
        yield step, curve, curve.length, best
