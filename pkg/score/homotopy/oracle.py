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
Brute force homotopy height for small instances.

The oracle makes no assumption on the shape of an optimal homotopy: it
searches all walks reachable with any move, in both directions, while the
curve length stays below a candidate height. The length bound also bounds
how often a curve can traverse an edge of positive weight; only edges of
weight zero need an explicit cap. Since an optimal homotopy never needs more
than :func:`~score.homotopy.certificate.move_bound` moves, the search is
complete for every candidate. The smallest feasible candidate is found by
galloping and bisecting over the lengths a curve can have, doubling the
range of lengths considered as long as nothing is feasible.
"""

import bisect
from fractions import Fraction
import logging

from .certificate import move_bound
from .curve import (
    flip_moves, goal_curve, goal_key, initial_curve, spike_moves,
    unspike_moves)
from .solver import ResourceLimitExceeded
from .surface import HomotopyError


log = logging.getLogger(__name__)

# how often the range of candidate heights is doubled before giving up
MAX_DOUBLINGS = 16


class OracleTooLarge(ResourceLimitExceeded):
    pass


class Infeasible(HomotopyError):
    pass


def achievable_lengths(surface, copies=None, upper=None):
    """
    All sums of edge weights with every edge used at most *copies* times
    (any number of times if ``None``), in ascending order. Sums above
    *upper* are dropped; at least one of the two bounds is required.
    """
    if copies is None and upper is None:
        raise ValueError('either copies or upper is required')
    sums = {Fraction(0)}
    for edge in surface.edges.values():
        if not edge.weight:
            continue
        grown = set()
        for value in sums:
            count = 0
            while copies is None or count <= copies:
                total = value + count * edge.weight
                if upper is not None and total > upper:
                    break
                grown.add(total)
                count += 1
        sums = grown
    return sorted(sums)


def _successors(curve):
    yield from flip_moves(curve)
    yield from spike_moves(curve)
    yield from unspike_moves(curve)


def feasible(surface, height, *, zero_weight_copies=4, max_states=200000):
    """
    Whether a homotopy of height at most *height* exists whose level curves
    traverse no edge of weight zero more than *zero_weight_copies* times.
    """
    start = initial_curve(surface)
    goal = goal_key(surface)
    if start.length > height:
        return False
    if start.walk_key == goal:
        return True
    weightless = set(e.id for e in surface.edges.values() if not e.weight)
    seen = {start.walk_key}
    frontier = [start]
    for depth in range(move_bound(surface)):
        following = []
        for curve in frontier:
            for _, result in _successors(curve):
                if result.length > height:
                    continue
                if weightless and any(
                        count > zero_weight_copies
                        for edge_id, count in result.copies().items()
                        if edge_id in weightless):
                    continue
                key = result.walk_key
                if key in seen:
                    continue
                if key == goal:
                    log.debug('height %s feasible after %d moves',
                              height, depth + 1)
                    return True
                seen.add(key)
                if len(seen) > max_states:
                    raise OracleTooLarge('instance too large for oracle')
                following.append(result)
        if not following:
            break
        frontier = following
    return False


def _first_feasible(candidates, test):
    """
    Index of the first candidate passing *test*, assuming feasibility is
    monotone, or ``None``.
    """
    # gallop to the first feasible candidate, then bisect the last gap
    infeasible, index, step = -1, 0, 1
    while index < len(candidates) and not test(candidates[index]):
        infeasible = index
        index, step = index + step, step * 2
    if index >= len(candidates):
        index = len(candidates) - 1
        if index == infeasible or index < 0 or not test(candidates[index]):
            return None
    low, high = infeasible + 1, index
    while low < high:
        middle = (low + high) // 2
        if test(candidates[middle]):
            high = middle
        else:
            low = middle + 1
    return high


def solve_oracle(surface, height_cap=None, *, face_cap=6, edge_cap=14,
                 zero_weight_copies=4, max_states=200000):
    """
    Returns the minimum height over all homotopies of *surface*, computed by
    exhaustive search. Raises :class:`OracleTooLarge` ("instance too large for
    oracle") if the surface has more than *face_cap* internal faces or more
    than *edge_cap* edges, :class:`Infeasible` ("infeasible under cap") if no
    homotopy of height at most *height_cap* exists.
    """
    if (len(surface.internal_faces) > face_cap or
            len(surface.edges) > edge_cap):
        raise OracleTooLarge('instance too large for oracle')
    if height_cap is not None:
        height_cap = Fraction(height_cap)
    lower = max(initial_curve(surface).length, goal_curve(surface).length)
    if height_cap is not None and height_cap < lower:
        raise Infeasible('infeasible under cap')

    def test(height):
        return feasible(surface, height,
                        zero_weight_copies=zero_weight_copies,
                        max_states=max_states)

    if height_cap is not None:
        upper = height_cap
    else:
        weights = [e.weight for e in surface.edges.values() if e.weight]
        upper = max(2 * lower, min(weights, default=Fraction(1)))
    tested = None
    for _ in range(MAX_DOUBLINGS):
        candidates = achievable_lengths(surface, upper=upper)
        candidates = candidates[bisect.bisect_left(candidates, lower):]
        if tested is not None:
            candidates = candidates[bisect.bisect_right(candidates, tested):]
        index = _first_feasible(candidates, test)
        if index is not None:
            log.info('oracle height of %r is %s', surface, candidates[index])
            return candidates[index]
        if height_cap is not None:
            break
        tested, upper = upper, 2 * upper
    else:
        raise OracleTooLarge('instance too large for oracle')
    raise Infeasible('infeasible under cap')
