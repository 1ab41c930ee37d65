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
Level curves and the three elementary moves between them.

A :class:`Curve` is a walk in the graph of a :class:`Surface` together with
the *lane* it occupies on every traversed edge. If a curve traverses an edge
*k* times, the traversals occupy the ranks ``0 .. k-1``, rank ``0`` being the
lane closest to the left face of the dart ``(edge, False)``. In the
cross-metric picture the rank is the position of the crossing along the dual
edge. The ranks make it possible to decide whether a curve is simple: around
every vertex, the corners used by the curve must form non-crossing chords.
"""

from collections import Counter, namedtuple
from fractions import Fraction
import logging

import networkx as nx

from .surface import (
    HomotopyError, InstanceError, min_rotation, reverse_dart, reverse_darts,
    walk_to_darts)


log = logging.getLogger(__name__)

# position of the curve's endpoints inside a boundary corner of a disk
_ANCHOR = 1 << 30


class InvalidMove(HomotopyError):
    """
    Raised when a move cannot be applied to a curve. The attributes
    :attr:`step` (index of the move in a certificate, if known),
    :attr:`position` and :attr:`reason` describe the failure.
    """

    def __init__(self, reason, position=None, step=None):
        self.reason = reason
        self.position = position
        self.step = step
        if step is None:
            msg = 'invalid move (%s' % reason
        else:
            msg = 'invalid move at step %d (%s' % (step, reason)
        if position is not None:
            msg += ', position %s' % (position,)
        super().__init__(msg + ')')

    def at_step(self, step):
        return InvalidMove(self.reason, self.position, step)


Crossing = namedtuple('Crossing', 'edge reverse rank')


def _dart(crossing):
    return (crossing.edge, crossing.reverse)


FaceFlip = namedtuple('FaceFlip', 'face at len offset forward')
FaceFlip.__new__.__defaults__ = (None, None)
FaceFlip.__doc__ = """
Replaces the *len* crossings starting at vertex position *at* by the rest
of the boundary of *face*. With ``forward=True`` the replaced subpath runs
along the face with the face on its right, so the face ends up on the left
of the curve. *offset* is the index into the face walk where the matched
boundary part starts; both are resolved automatically when ``None``.
"""

Spike = namedtuple('Spike', 'at edge end')
Spike.__new__.__defaults__ = (None,)
Spike.__doc__ = """
Replaces the vertex at position *at* by the detour ``u, edge, v, edge, u``.
*end* selects the edge-end at ``u`` for self-loops.
"""

Unspike = namedtuple('Unspike', 'at')
Unspike.__doc__ = """
Removes the detour formed by the crossings *at* and *at + 1*.
"""


def _rerank(crossings):
    """
    Assigns consecutive ranks per edge, preserving the order given by the
    (arbitrary, comparable) rank keys of *crossings*.
    """
    by_edge = {}
    for i, c in enumerate(crossings):
        by_edge.setdefault(c.edge, []).append((c.rank, i))
    result = list(crossings)
    for entries in by_edge.values():
        for rank, (_, i) in enumerate(sorted(entries)):
            result[i] = result[i]._replace(rank=rank)
    return tuple(result)


class Curve:
    """
    An immutable level curve. Closed curves are stored in a canonical
    rotation (lexicographically minimal sequence of crossings); the number of
    positions the crossings were rotated by is kept in :attr:`offset`.
    """

    def __init__(self, surface, start, crossings, closed):
        self.surface = surface
        self.closed = closed
        crossings = tuple(crossings)
        self.offset = 0
        if closed and crossings:
            self.offset, crossings = min_rotation(crossings)
            start = surface.tail(_dart(crossings[0]))
        self.crossings = crossings
        self.start = start

    @property
    def darts(self):
        return tuple(_dart(c) for c in self.crossings)

    @property
    def length(self):
        return sum((self.surface.weight(c.edge) for c in self.crossings),
                   Fraction(0))

    def __len__(self):
        return len(self.crossings)

    @property
    def positions(self):
        """
        Number of vertex positions of the curve.
        """
        if self.closed:
            return max(1, len(self.crossings))
        return len(self.crossings) + 1

    def vertex(self, position):
        if not 0 <= position < self.positions:
            raise InvalidMove('position out of range', position)
        if position == 0 and (not self.closed or not self.crossings):
            return self.start
        if self.closed:
            return self.surface.tail(_dart(self.crossings[position]))
        return self.surface.head(_dart(self.crossings[position - 1]))

    def vertices(self):
        return [self.vertex(i) for i in range(self.positions)]

    def copies(self):
        """
        Counts how often every edge is traversed.
        """
        return Counter(c.edge for c in self.crossings)

    @property
    def key(self):
        return (self.closed, self.start, self.crossings)

    @property
    def walk_key(self):
        """
        Identifies the walk of this curve without its lanes; closed walks are
        compared up to rotation.
        """
        darts = self.darts
        if self.closed and darts:
            return (True, min_rotation(darts)[1])
        return (self.closed, self.start, darts)

    def __eq__(self, other):
        return isinstance(other, Curve) and self.key == other.key

    def __hash__(self):
        return hash(self.key)

    def __repr__(self):
        return '<Curve %s length=%s>' % (
            ' '.join(self.walk()), self.length)

    def walk(self):
        """
        The alternating vertex/edge list of this curve.
        """
        out = [self.start]
        for c in self.crossings:
            ends = self.surface.edges[c.edge].ends
            loop = ends[0] == ends[1]
            out.append('~' + c.edge if loop and c.reverse else c.edge)
            out.append(self.surface.head(_dart(c)))
        return out


def make_curve(surface, darts, *, closed, start=None):
    """
    Creates a :class:`Curve` following *darts*. Lanes are assigned so that a
    curve hugging the faces on the left of its darts is simple: traversals in
    the direction of the edge take the lowest ranks.
    """
    darts = tuple(darts)
    if darts:
        start = surface.tail(darts[0]) if start is None else start
        if surface.tail(darts[0]) != start:
            raise InstanceError('walk not incident', 'curve start')
        for a, b in zip(darts, darts[1:]):
            if surface.head(a) != surface.tail(b):
                raise InstanceError('walk not incident', b[0])
        if closed and surface.head(darts[-1]) != start:
            raise InstanceError('walk not closed')
    elif start is None:
        raise InstanceError('walk not incident', 'empty curve')
    keys = []
    for i, (edge, reverse) in enumerate(darts):
        keys.append(Crossing(edge, reverse, (reverse, i)))
    return Curve(surface, start, _rerank(keys), closed)


def curve_from_walk(surface, walk, *, closed=None):
    """
    Creates a :class:`Curve` from an alternating vertex/edge list.
    """
    darts = walk_to_darts(surface.edges, walk)
    if closed is None:
        closed = surface.kind == 'annulus'
    return make_curve(surface, darts, closed=closed, start=str(walk[0]))


def initial_curve(surface):
    """
    The first boundary curve: the walk of the first boundary face for
    annuli, the arc from *s* to *t* for disks.
    """
    if surface.kind == 'annulus':
        return make_curve(surface, surface.boundary0, closed=True)
    return make_curve(surface, surface.boundary0, closed=False,
                      start=surface.s)


def goal_darts(surface):
    """
    The darts of the second boundary curve, oriented like the first one.
    """
    return reverse_darts(surface.boundary1)


def goal_key(surface):
    darts = goal_darts(surface)
    if surface.kind == 'annulus':
        return (True, min_rotation(darts)[1])
    return (False, surface.s, darts)


def goal_curve(surface):
    if surface.kind == 'annulus':
        return make_curve(surface, goal_darts(surface), closed=True)
    return make_curve(surface, goal_darts(surface), closed=False,
                      start=surface.s)


def curve_length(curve):
    return curve.length


# simplicity


def _slot(surface, copies, crossing, arriving):
    if arriving:
        end = 0 if crossing.reverse else 1
    else:
        end = 1 if crossing.reverse else 0
    vertex, index = surface.rotation_index((crossing.edge, end))
    if end == 0:
        sub = copies[crossing.edge] - 1 - crossing.rank
    else:
        sub = crossing.rank
    return vertex, (index, sub)


def _anchor_slot(surface, arriving_dart):
    """
    The slot inside the boundary corner a disk curve ends in. The corner is
    the one reached by *arriving_dart* on the boundary walk.
    """
    end = (arriving_dart[0], 0 if arriving_dart[1] else 1)
    vertex, index = surface.rotation_index(end)
    size = len(surface.rotations[vertex])
    return vertex, ((index - 1) % size, _ANCHOR)


def chords(curve):
    """
    Maps every vertex to the list of chords ``(arriving_slot,
    departing_slot)`` the curve draws around it.
    """
    surface = curve.surface
    copies = curve.copies()
    crossings = curve.crossings
    result = {}
    k = len(crossings)
    if curve.closed:
        for i in range(k):
            vertex, arrive = _slot(surface, copies, crossings[i - 1], True)
            _, depart = _slot(surface, copies, crossings[i], False)
            result.setdefault(vertex, []).append((arrive, depart))
        return result
    vertex, arrive = _anchor_slot(surface, surface.boundary1[-1])
    if k == 0:
        return result
    _, depart = _slot(surface, copies, crossings[0], False)
    result.setdefault(vertex, []).append((arrive, depart))
    for i in range(1, k):
        vertex, arrive = _slot(surface, copies, crossings[i - 1], True)
        _, depart = _slot(surface, copies, crossings[i], False)
        result.setdefault(vertex, []).append((arrive, depart))
    vertex, arrive = _slot(surface, copies, crossings[-1], True)
    _, depart = _anchor_slot(surface, surface.boundary0[-1])
    result.setdefault(vertex, []).append((arrive, depart))
    return result


def _laminar(vertex_chords):
    events = sorted((pos, i) for i, chord in enumerate(vertex_chords)
                    for pos in chord)
    stack = []
    for _, i in events:
        if stack and stack[-1] == i:
            stack.pop()
        else:
            stack.append(i)
    return not stack


def is_simple(curve, vertices=None):
    """
    Whether the curve has no self-crossings. Only the chords around
    *vertices* are inspected if given.
    """
    for vertex, vertex_chords in chords(curve).items():
        if vertices is not None and vertex not in vertices:
            continue
        if not _laminar(vertex_chords):
            return False
    return True


# moves


def _check_position(curve, position):
    if not isinstance(position, int) or not 0 <= position < curve.positions:
        raise InvalidMove('position out of range', position)


def _rotated(curve, at):
    """
    Returns the crossings of a closed curve rotated to start at *at*.
    """
    crossings = curve.crossings
    return crossings[at:] + crossings[:at]


def _face_walk(curve, face):
    surface = curve.surface
    if face not in surface.internal_faces:
        raise InvalidMove('unknown face %s' % face)
    return surface.face[face].darts


def _new_lanes(new_darts, forward):
    """
    Builds the crossings of the replacement path. New lanes are placed on
    the side of the flipped face, outside all existing lanes.
    """
    result = []
    front = 0
    back = 0
    for dart in new_darts:
        edge, reverse = dart
        if (not reverse) == forward:
            front += 1
            rank = (-1, -front)
        else:
            back += 1
            rank = (2, back)
        result.append(Crossing(edge, reverse, rank))
    return result


def _flip_matches(curve, face, at, forward):
    """
    Yields ``(offset, length)`` of every match of the face boundary at
    vertex position *at*.
    """
    surface = curve.surface
    walk = _face_walk(curve, face)
    m = len(walk)
    vertex = curve.vertex(at)
    k = len(curve.crossings)
    if curve.closed:
        darts = [_dart(c) for c in _rotated(curve, at)] if k else []
        available = k
    else:
        darts = [_dart(c) for c in curve.crossings[at:]]
        available = k - at
    limit = min(m, available)
    for g in range(m):
        if surface.tail(walk[g]) != vertex:
            continue
        yield g, 0
        i = 0
        while i < limit:
            if forward:
                expected = reverse_dart(walk[(g - 1 - i) % m])
            else:
                expected = walk[(g + i) % m]
            if darts[i] != expected:
                break
            i += 1
            yield ((g - i) % m if forward else g), i


def _apply_flip(curve, move):
    walk = _face_walk(curve, move.face)
    m = len(walk)
    _check_position(curve, move.at)
    if not isinstance(move.len, int) or not 0 <= move.len <= m:
        raise InvalidMove('replaced length out of range', move.at)
    orientations = (True, False) if move.forward is None else (move.forward,)
    for forward in orientations:
        for offset, length in _flip_matches(curve, move.face, move.at,
                                            forward):
            if length != move.len:
                continue
            if move.offset is not None and offset != move.offset:
                continue
            return _flip(curve, move._replace(offset=offset,
                                              forward=forward), walk)
    raise InvalidMove('subpath not on boundary of %s' % move.face, move.at)


def _flip(curve, move, walk):
    surface = curve.surface
    m = len(walk)
    length, offset = move.len, move.offset
    rest = [walk[(offset + length + i) % m] for i in range(m - length)]
    new_darts = rest if move.forward else list(reverse_darts(rest))
    if curve.closed:
        crossings = _rotated(curve, move.at) if curve.crossings else ()
        remaining = crossings[length:]
        before = ()
        start = curve.vertex(move.at)
    else:
        before = curve.crossings[:move.at]
        remaining = curve.crossings[move.at + length:]
        start = curve.start
    keyed = [c._replace(rank=(0, c.rank)) for c in before]
    keyed += _new_lanes(new_darts, move.forward)
    keyed += [c._replace(rank=(0, c.rank)) for c in remaining]
    crossings = _rerank(keyed)
    result = Curve(surface, start, crossings, curve.closed)
    return result, move


def _apply_spike(curve, move):
    surface = curve.surface
    _check_position(curve, move.at)
    if move.edge not in surface.edges:
        raise InvalidMove('unknown edge %s' % move.edge, move.at)
    vertex = curve.vertex(move.at)
    ends = surface.edges[move.edge].ends
    choices = [j for j in (0, 1) if ends[j] == vertex]
    if move.end is not None:
        if move.end not in choices:
            raise InvalidMove('edge %s not incident' % move.edge, move.at)
        end = move.end
    elif choices:
        end = choices[0]
    else:
        raise InvalidMove('edge %s not incident' % move.edge, move.at)
    out = (move.edge, end == 1)
    back = reverse_dart(out)
    crossings = curve.crossings
    if curve.closed and not crossings:
        crossings = ()
    index = move.at
    existing = [c for c in crossings if c.edge == move.edge]
    count = len(existing)
    best = None
    for right in (True, False):
        for q in range(count + 1):
            out_first = right == (end == 1)
            out_rank = q if out_first else q + 1
            back_rank = q + 1 if out_first else q
            shifted = [c._replace(rank=c.rank + 2)
                       if c.edge == move.edge and c.rank >= q else c
                       for c in crossings]
            new = (shifted[:index] +
                   [Crossing(out[0], out[1], out_rank),
                    Crossing(back[0], back[1], back_rank)] +
                   shifted[index:])
            new = _rerank(new)
            candidate = Curve(surface, curve.start if not curve.closed
                              else vertex, new, curve.closed)
            if best is None:
                best = candidate
            if is_simple(candidate, {vertex}):
                return candidate, move._replace(end=end), index + 1
    return best, move._replace(end=end), index + 1


def _apply_unspike(curve, move):
    _check_position(curve, move.at)
    crossings = curve.crossings
    k = len(crossings)
    if curve.closed:
        if k < 2:
            raise InvalidMove('no detour to remove', move.at)
        first, second = move.at, (move.at + 1) % k
    else:
        if move.at + 1 >= k:
            raise InvalidMove('no detour to remove', move.at)
        first, second = move.at, move.at + 1
    a, b = crossings[first], crossings[second]
    if a.edge != b.edge or a.reverse == b.reverse:
        raise InvalidMove('crossings do not form a detour', move.at)
    rest = [c for i, c in enumerate(crossings) if i not in (first, second)]
    start = curve.surface.tail(_dart(a)) if curve.closed else curve.start
    return Curve(curve.surface, start, _rerank(rest), curve.closed)


def resolve_move(curve, move):
    """
    Applies *move* to *curve* and returns ``(new_curve, resolved_move)``
    where all optional fields of the move are filled in.
    """
    if isinstance(move, FaceFlip):
        return _apply_flip(curve, move)
    if isinstance(move, Spike):
        result, move, _ = _apply_spike(curve, move)
        return result, move
    if isinstance(move, Unspike):
        return _apply_unspike(curve, move), move
    raise InvalidMove('unknown move %r' % (move,))


def apply_move(curve, move):
    """
    Returns the curve obtained by applying *move*. Raises
    :class:`InvalidMove` if the move's preconditions do not hold.
    """
    return resolve_move(curve, move)[0]


def spike_tip(curve, move, result):
    """
    Returns the position of the tip of a detour just created by
    :class:`Spike` *move* in *result*.
    """
    index = move.at + 1
    if result.closed:
        return (index - result.offset) % len(result.crossings)
    return index


def flip_moves(curve, faces=None, orientations=(True, False)):
    """
    Yields every applicable :class:`FaceFlip` as ``(move, result)``.
    """
    surface = curve.surface
    if faces is None:
        faces = surface.internal_faces
    for at in range(curve.positions):
        for face in faces:
            walk = surface.face[face].darts
            for forward in orientations:
                for offset, length in _flip_matches(curve, face, at, forward):
                    move = FaceFlip(face, at, length, offset, forward)
                    yield _flip(curve, move, walk)[::-1]


def spike_moves(curve, positions=None):
    """
    Yields every applicable :class:`Spike` as ``(move, result)``.
    """
    surface = curve.surface
    if positions is None:
        positions = range(curve.positions)
    for at in positions:
        vertex = curve.vertex(at)
        for edge, end in surface.rotations[vertex]:
            result, move, _ = _apply_spike(curve, Spike(at, edge, end))
            yield move, result


def unspike_moves(curve):
    """
    Yields every applicable :class:`Unspike` as ``(move, result)``.
    """
    crossings = curve.crossings
    k = len(crossings)
    if curve.closed:
        candidates = range(k) if k >= 2 else ()
    else:
        candidates = range(max(0, k - 1))
    for at in candidates:
        a, b = crossings[at], crossings[(at + 1) % k]
        if a.edge == b.edge and a.reverse != b.reverse:
            yield Unspike(at), _apply_unspike(curve, Unspike(at))


# winding


def _cocycle(surface):
    """
    Returns a mapping dart -> +1/-1 for the darts crossed by a fixed dual
    path from the first to the second boundary face.
    """
    cached = getattr(surface, '_cocycle', None)
    if cached is not None:
        return cached
    graph = nx.MultiGraph()
    graph.add_nodes_from(f.id for f in surface.faces)
    for edge_id in sorted(surface.edges):
        left, right = surface.faces_of_edge(edge_id)
        if left != right:
            graph.add_edge(left, right, key=edge_id)
    faces = nx.shortest_path(graph, 'B0', 'B1')
    cocycle = {}
    for a, b in zip(faces, faces[1:]):
        edge_id = min(graph[a][b])
        # dart with face a on its left crosses from a to b
        if surface.left_face[(edge_id, False)] == a:
            cocycle[(edge_id, False)] = 1
            cocycle[(edge_id, True)] = -1
        else:
            cocycle[(edge_id, True)] = 1
            cocycle[(edge_id, False)] = -1
    sign = sum(cocycle.get(d, 0) for d in surface.boundary0) or 1
    cocycle = dict((d, v * sign) for d, v in cocycle.items())
    surface._cocycle = cocycle
    return cocycle


def winding(curve):
    """
    Algebraic number of times a closed curve of an annulus winds around the
    holes, normalized so that the first boundary winds once.
    """
    if curve.surface.kind != 'annulus' or not curve.closed:
        raise HomotopyError('winding needs a closed curve of an annulus')
    cocycle = _cocycle(curve.surface)
    return sum(cocycle.get(d, 0) for d in curve.darts)


def shortest_homotopic_cycle(surface, vertex):
    """
    Length of a shortest closed walk through *vertex* that winds once
    around the annulus.
    """
    cocycle = _cocycle(surface)
    bound = len(cocycle) // 2 + 1
    graph = nx.MultiDiGraph()
    for level in range(-bound, bound + 1):
        for edge in surface.edges.values():
            for reverse in (False, True):
                dart = (edge.id, reverse)
                step = cocycle.get(dart, 0)
                if abs(level + step) > bound:
                    continue
                graph.add_edge((surface.tail(dart), level),
                               (surface.head(dart), level + step),
                               weight=edge.weight)
    try:
        return Fraction(nx.dijkstra_path_length(
            graph, (vertex, 0), (vertex, 1)))
    except (nx.NetworkXNoPath, nx.NodeNotFound):
        raise HomotopyError('no path')


def reversed_curve(curve):
    """
    The same walk traversed backwards.
    """
    darts = reverse_darts(curve.darts)
    if curve.closed:
        return make_curve(curve.surface, darts, closed=True,
                          start=curve.start)
    end = curve.vertex(curve.positions - 1)
    return make_curve(curve.surface, darts, closed=False, start=end)


def reachable_faces(surface, start, blocked):
    """
    Faces reachable in the dual graph from face *start* without crossing
    the edges in *blocked*.
    """
    graph = nx.Graph()
    graph.add_nodes_from(f.id for f in surface.faces)
    for edge_id in surface.edges:
        if edge_id not in blocked:
            graph.add_edge(*surface.faces_of_edge(edge_id))
    return nx.node_connected_component(graph, start)
