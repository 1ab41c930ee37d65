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
Exact homotopy height through a bottleneck search over monotone sweeps.

A search state is the current level curve together with the set of faces
already swept. Between two face flips the search first removes detours
(unspikes) and then grows a single path of detours (spikes) towards the next
face; at most four detours along the same edge are created in such a
segment. States are expanded in the order of the largest curve length seen
on the way to them, ties broken by the number of moves and a digest of the
state, so the result does not depend on the number of worker threads.

When a limit is hit, a greedy search over the same states (preferring
states with fewer faces left to sweep) tries to complete a sweep, which
provides an upper bound.
"""

from collections import namedtuple
from concurrent.futures import ThreadPoolExecutor
from fractions import Fraction
import hashlib
import heapq
import logging
import time

from .certificate import Certificate, move_bound, reduce_certificate
from .curve import (
    flip_moves, goal_key, initial_curve, goal_curve, is_simple, spike_moves,
    spike_tip, unspike_moves)
from .surface import HomotopyError, diameter


log = logging.getLogger(__name__)


class ResourceLimitExceeded(HomotopyError):
    """
    Raised when a search exceeds its configured limits. The best known
    bounds are available as :attr:`lower` and :attr:`upper` (``None`` if
    unknown), a partial result, if any, as :attr:`partial`: a complete
    certificate of height :attr:`upper` if one was found, otherwise a
    certificate prefix sweeping as many faces as the search got to.
    """

    def __init__(self, msg, lower=None, upper=None, partial=None):
        super().__init__(msg)
        self.lower = lower
        self.upper = upper
        self.partial = partial


Bounds = namedtuple('Bounds', 'lower components')

SweepState = namedtuple('SweepState', 'curve swept tip spikes')
SweepState.__doc__ = """
A monotone search state: the level *curve*, the sorted tuple of *swept*
faces, the position of the *tip* of the detour path currently being grown
(``None`` between flips and unspikes) and the per-edge detour counts of the
current flip-free segment as sorted tuple *spikes*.
"""

SPIKES_PER_SEGMENT = 4

# expansions granted to the greedy completion after a limit was hit
FALLBACK_STATES = 20000


def lower_bounds(surface):
    """
    Returns the :class:`Bounds` of *surface*: the lengths of both boundary
    curves and half the largest perimeter of an internal face. The diameter
    is reported as a component but not used for the bound.
    """
    first = initial_curve(surface).length
    last = goal_curve(surface).length
    half_face = max((surface.face[f].weight / 2
                     for f in surface.internal_faces), default=Fraction(0))
    components = [
        ('gamma0', first),
        ('gamma1', last),
        ('half_face', half_face),
        ('diameter', diameter(surface)),
    ]
    return Bounds(max(first, last, half_face), components)


def _key(state):
    return (state.curve.key, state.swept, state.tip, state.spikes)


def _digest(state):
    return hashlib.sha1(repr(_key(state)).encode('utf-8')).hexdigest()


def _within_copies(curve, limit):
    return not limit or max(curve.copies().values(), default=0) <= limit


class _Search:

    def __init__(self, surface, start, goal, faces, swept, order, *,
                 max_states, max_moves, max_edge_copies, threads,
                 max_seconds=0, greedy=False):
        self.surface = surface
        self.start = start
        self.goal = goal
        self.faces = frozenset(faces)
        self.initial_swept = tuple(sorted(swept))
        self.order = list(order) if order is not None else None
        self.max_states = max_states
        self.max_moves = max_moves or move_bound(surface)
        self.max_edge_copies = max_edge_copies
        self.threads = threads
        self.max_seconds = max_seconds
        self.greedy = greedy

    def _priority(self, height, state):
        if self.greedy:
            return (len(self.faces - set(state.swept)), height)
        return (height,)

    def _is_goal(self, state):
        return (self.faces <= set(state.swept) and
                state.curve.walk_key == self.goal)

    def _next_faces(self, state):
        swept = set(state.swept)
        if self.order is None:
            return sorted(self.faces - swept)
        done = len(swept) - len(self.initial_swept)
        if done < len(self.order):
            return [self.order[done]]
        return []

    def _candidates(self, state):
        curve = state.curve
        spikes = dict(state.spikes)
        if state.tip is None:
            for move, result in unspike_moves(curve):
                yield move, SweepState(result, state.swept, None,
                                       state.spikes)
            positions = None
        else:
            positions = [state.tip]
        for move, result in spike_moves(curve, positions):
            if spikes.get(move.edge, 0) >= SPIKES_PER_SEGMENT:
                continue
            counts = dict(spikes)
            counts[move.edge] = counts.get(move.edge, 0) + 1
            yield move, SweepState(result, state.swept,
                                   spike_tip(curve, move, result),
                                   tuple(sorted(counts.items())))
        for face in self._next_faces(state):
            for move, result in flip_moves(curve, [face], (True,)):
                swept = tuple(sorted(set(state.swept) | {face}))
                yield move, SweepState(result, swept, None, ())

    def _admissible(self, item):
        move, state = item
        return (_within_copies(state.curve, self.max_edge_copies) and
                is_simple(state.curve))

    def _limit(self, msg, best, parents, furthest):
        partial = Certificate(self.surface, self.start,
                              self._moves(parents, furthest))
        return ResourceLimitExceeded(msg, lower=best, partial=partial)

    def run(self):
        first = SweepState(self.start, self.initial_swept, None, ())
        height = self.start.length
        heap = [(self._priority(height, first), height, 0, _digest(first), 0,
                 first, None, None)]
        pushed = 1
        parents = {}
        expanded = 0
        best = height
        furthest, progress = _key(first), -1
        deadline = None
        if self.max_seconds:
            deadline = time.monotonic() + self.max_seconds
        executor = None
        if self.threads > 1:
            executor = ThreadPoolExecutor(max_workers=self.threads)
        try:
            while heap:
                (_, height, moves, _, _,
                 state, parent, move) = heapq.heappop(heap)
                key = _key(state)
                if key in parents:
                    continue
                parents[key] = (parent, move)
                if not self.greedy:
                    best = max(best, height)
                if len(state.swept) > progress:
                    furthest, progress = key, len(state.swept)
                if self._is_goal(state):
                    log.debug('goal reached after %d expansions, height %s',
                              expanded, height)
                    return self._moves(parents, key)
                expanded += 1
                if expanded > self.max_states:
                    raise self._limit('state limit exceeded', best, parents,
                                      furthest)
                if deadline is not None and time.monotonic() > deadline:
                    raise self._limit('time limit exceeded', best, parents,
                                      furthest)
                if expanded % 10000 == 0:
                    log.debug('expanded %d states, frontier %d, height %s',
                              expanded, len(heap), height)
                if moves >= self.max_moves:
                    continue
                candidates = list(self._candidates(state))
                if executor is None:
                    admissible = map(self._admissible, candidates)
                else:
                    admissible = executor.map(self._admissible, candidates)
                for ok, (next_move, next_state) in zip(admissible,
                                                       candidates):
                    if not ok or _key(next_state) in parents:
                        continue
                    next_height = max(height, next_state.curve.length)
                    heapq.heappush(heap, (
                        self._priority(next_height, next_state), next_height,
                        moves + 1, _digest(next_state), pushed, next_state,
                        key, next_move))
                    pushed += 1
        finally:
            if executor is not None:
                executor.shutdown()
        raise self._limit('search space exhausted', best, parents, furthest)

    def _moves(self, parents, key):
        moves = []
        while True:
            parent, move = parents[key]
            if parent is None:
                break
            moves.append(move)
            key = parent
        moves.reverse()
        return moves


def _limits(max_states=200000, max_moves=0, max_edge_copies=4, threads=1,
            max_seconds=0):
    return dict(max_states=max_states, max_moves=max_moves,
                max_edge_copies=max_edge_copies, threads=threads,
                max_seconds=max_seconds)


def _complete_sweep(surface, start, limits):
    """
    Returns some monotone certificate for *surface*, found greedily, or
    ``None`` if the greedy search runs out of states or time as well.
    """
    limits = dict(limits, max_states=FALLBACK_STATES)
    search = _Search(surface, start, goal_key(surface),
                     surface.internal_faces, (), None, greedy=True, **limits)
    try:
        return Certificate(surface, start, search.run())
    except ResourceLimitExceeded:
        return None


def solve_ordered(surface, start, goal, order, swept=frozenset(), **limits):
    """
    Finds a monotone homotopy of minimum height from the curve *start* to a
    curve with walk key *goal* that flips the faces in *order*, one after
    another. The faces in *swept* count as swept already. Returns a
    :class:`~score.homotopy.certificate.Certificate` starting at *start*.
    """
    search = _Search(surface, start, goal, order, swept, order,
                     **_limits(**limits))
    return Certificate(surface, start, search.run())


def solve_exact(surface, **limits):
    """
    Computes a certificate of minimum height for *surface*. The result is a
    reduced monotone isotopy flipping every internal face exactly once.

    Raises :class:`ResourceLimitExceeded` if the configured number of states
    (*max_states*) or seconds (*max_seconds*, ``0`` for no limit) is
    exceeded. The exception carries the best known lower bound and, if a
    greedy sweep succeeds, an upper bound together with its certificate.
    """
    limits = _limits(**limits)
    start = initial_curve(surface)
    search = _Search(surface, start, goal_key(surface),
                     surface.internal_faces, (), None, **limits)
    try:
        moves = search.run()
    except ResourceLimitExceeded as e:
        e.lower = max(e.lower, lower_bounds(surface).lower)
        complete = _complete_sweep(surface, start, limits)
        if complete is not None:
            e.upper = complete.height()
            e.partial = complete
        log.warning('%s, height at least %s, at most %s', e, e.lower,
                    e.upper)
        raise
    certificate = reduce_certificate(Certificate(surface, start, moves))
    log.info('solved %r: height %s with %d moves', surface,
             certificate.height(), len(certificate))
    return certificate
