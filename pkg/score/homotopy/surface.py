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
Edge-weighted graphs cellularly embedded on annuli and disks.

A :class:`Surface` is described by a rotation system: every vertex lists
the *edge-ends* incident to it in counterclockwise order. An edge-end is a
pair ``(edge_id, end)`` where *end* is ``0`` for the first and ``1`` for the
second entry of the edge's :attr:`Edge.ends`. A *dart* is a directed edge
``(edge_id, reverse)``; the dart ``(e, False)`` runs from ``ends[0]`` to
``ends[1]``.

Faces are traced by arriving at a vertex and leaving through the next
edge-end clockwise from the arriving one. Every traced face therefore lies
on the left of its darts.
"""

from collections import namedtuple
from fractions import Fraction
import hashlib
import heapq
import json
import logging

import networkx as nx


log = logging.getLogger(__name__)


class HomotopyError(Exception):
    """
    Base class for all errors raised by this package.
    """


class InstanceError(HomotopyError):
    """
    Raised when an instance document is malformed or a surface invariant
    does not hold. The failed check is available as :attr:`check`.
    """

    def __init__(self, check, detail=None):
        self.check = check
        self.detail = detail
        if detail:
            super().__init__('%s (%s)' % (check, detail))
        else:
            super().__init__(check)


class NoPath(HomotopyError):
    pass


Edge = namedtuple('Edge', 'id ends weight')

FaceWalk = namedtuple('FaceWalk', 'id darts vertices weight')
FaceWalk.__doc__ = """
A traced face: its *darts* in tracing order (the face lies on their left),
the tail *vertices* of these darts and the total boundary *weight*.
"""

Path = namedtuple('Path', 'vertices darts weight')

DualGraph = namedtuple('DualGraph', 'vertices punctures edges rotations')
DualGraph.__doc__ = """
The cross-metric view of a :class:`Surface`. Dual vertices are the face ids,
the boundary faces are listed in *punctures*. *edges* maps each primal edge
id to ``((right_face, left_face), weight)`` with respect to the primal dart
``(edge, False)``. *rotations* lists the dual edge-ends around every dual
vertex in counterclockwise order.
"""

CutSurface = namedtuple(
    'CutSurface',
    'surface vertex_map edge_map path gamma0 P gamma1 Q')
CutSurface.__doc__ = """
Result of :func:`cut_along`: the disk *surface*, maps from cut vertex and
edge ids to the original ids, the cut *path* and the four boundary arcs of
the disk as dart tuples: *gamma0* (a copy of the first boundary), *Q* (one
copy of the path), *gamma1* (a copy of the second boundary) and *P* (the
other copy of the path).
"""


def reverse_dart(dart):
    return (dart[0], not dart[1])


def reverse_darts(darts):
    return tuple(reverse_dart(d) for d in reversed(darts))


def min_rotation(seq):
    """
    Returns the pair ``(offset, rotated)`` of the lexicographically minimal
    rotation of the sequence *seq*.
    """
    seq = tuple(seq)
    if not seq:
        return 0, seq
    best = min(range(len(seq)), key=lambda i: seq[i:] + seq[:i])
    return best, seq[best:] + seq[:best]


def same_cycle(a, b):
    a, b = tuple(a), tuple(b)
    if len(a) != len(b):
        return False
    if not a:
        return True
    doubled = a + a
    return any(doubled[i:i + len(b)] == b for i in range(len(a)))


def parse_weight(value):
    """
    Converts a weight given as a decimal string (or an integer) into an exact
    :class:`fractions.Fraction`.
    """
    if isinstance(value, float):
        raise InstanceError('malformed weight', repr(value))
    try:
        return Fraction(str(value).strip())
    except (ValueError, ZeroDivisionError):
        raise InstanceError('malformed weight', repr(value))


def format_weight(weight):
    """
    Inverse of :func:`parse_weight`. Weights with a terminating decimal
    expansion are written as decimals, all others as ``p/q``.
    """
    weight = Fraction(weight)
    if weight.denominator == 1:
        return str(weight.numerator)
    den = weight.denominator
    twos = fives = 0
    while den % 2 == 0:
        den //= 2
        twos += 1
    while den % 5 == 0:
        den //= 5
        fives += 1
    if den != 1:
        return '%d/%d' % (weight.numerator, weight.denominator)
    digits = max(twos, fives)
    scaled = weight * 10 ** digits
    sign = '-' if scaled < 0 else ''
    text = str(abs(scaled.numerator)).rjust(digits + 1, '0')
    return '%s%s.%s' % (sign, text[:-digits], text[-digits:])


def trace_darts(rotations, ends):
    """
    Traces the faces of the rotation system *rotations* (vertex ->
    counterclockwise edge-ends), where *ends* maps edge ids to their endpoint
    pairs. Returns a list of dart tuples, one per face, in a deterministic
    order.
    """
    index = {}
    for vertex, rotation in rotations.items():
        for i, edge_end in enumerate(rotation):
            index[edge_end] = (vertex, i)
    seen = set()
    faces = []
    for edge in sorted(ends):
        for reverse in (False, True):
            start = (edge, reverse)
            if start in seen:
                continue
            walk = []
            dart = start
            while dart not in seen:
                seen.add(dart)
                walk.append(dart)
                arrival = (dart[0], 0 if dart[1] else 1)
                vertex, i = index[arrival]
                rotation = rotations[vertex]
                out_edge, out_end = rotation[(i - 1) % len(rotation)]
                dart = (out_edge, out_end == 1)
            faces.append(tuple(walk))
    return faces


class Surface:
    """
    A validated, immutable weighted graph embedded on an annulus or a disk.

    For ``kind == 'annulus'`` the darts *boundary0* and *boundary1* are the
    traced walks of the two boundary faces. For ``kind == 'disk'``
    *boundary0* is the arc from *s* to *t* and *boundary1* the arc from *t*
    back to *s* of the single boundary face. Walks matching a traced face in
    the opposite orientation are normalized; for disks this swaps *s* and
    *t*.
    """

    def __init__(self, kind, vertices, edges, rotations, boundary0,
                 boundary1, *, s=None, t=None):
        if kind not in ('annulus', 'disk'):
            raise InstanceError('unknown kind', repr(kind))
        self.kind = kind
        self.vertices = tuple(vertices)
        if len(set(self.vertices)) != len(self.vertices):
            raise InstanceError('duplicate vertex')
        self.edges = {}
        for edge in edges:
            edge = Edge(edge.id, tuple(edge.ends), Fraction(edge.weight))
            if edge.id in self.edges:
                raise InstanceError('duplicate edge', edge.id)
            for end in edge.ends:
                if end not in self.vertices:
                    raise InstanceError('unknown vertex', end)
            if edge.weight < 0:
                raise InstanceError('negative weight', edge.id)
            self.edges[edge.id] = edge
        self.rotations = {}
        self._rotation_index = {}
        for vertex in self.vertices:
            rotation = tuple(tuple(end) for end in rotations.get(vertex, ()))
            self.rotations[vertex] = rotation
            for i, (edge_id, end) in enumerate(rotation):
                if edge_id not in self.edges:
                    raise InstanceError('unknown edge', edge_id)
                if (edge_id, end) in self._rotation_index:
                    raise InstanceError('rotation duplicate', edge_id)
                if self.edges[edge_id].ends[end] != vertex:
                    raise InstanceError('rotation mismatch', edge_id)
                self._rotation_index[(edge_id, end)] = (vertex, i)
        for vertex in rotations:
            if vertex not in self.rotations:
                raise InstanceError('unknown vertex', vertex)
        for edge_id in self.edges:
            for end in (0, 1):
                if (edge_id, end) not in self._rotation_index:
                    raise InstanceError('rotation incomplete', edge_id)
        self._check_connected()
        self._trace()
        if kind == 'annulus':
            self._init_annulus(tuple(boundary0), tuple(boundary1))
        else:
            self._init_disk(tuple(boundary0), tuple(boundary1), s, t)
        self.internal_faces = tuple(
            f.id for f in self.faces if f.id not in self.boundary_faces)
        self.left_face = {}
        for face in self.faces:
            for dart in face.darts:
                self.left_face[dart] = face.id

    def _check_connected(self):
        if not self.edges:
            raise InstanceError('not a sphere embedding', 'no edges')
        graph = nx.MultiGraph()
        graph.add_nodes_from(self.vertices)
        graph.add_edges_from(e.ends for e in self.edges.values())
        if not nx.is_connected(graph):
            raise InstanceError('not connected')

    def _trace(self):
        ends = dict((e.id, e.ends) for e in self.edges.values())
        walks = trace_darts(self.rotations, ends)
        euler = len(self.vertices) - len(self.edges) + len(walks)
        if euler != 2:
            raise InstanceError(
                'not a sphere embedding', 'V - E + F = %d' % euler)
        self._walks = [min_rotation(w)[1] for w in walks]

    def _face(self, face_id, darts):
        return FaceWalk(face_id, darts,
                        tuple(self.tail(d) for d in darts),
                        sum((self.weight(d[0]) for d in darts), Fraction(0)))

    def _find_walk(self, darts):
        """
        Returns ``(walk_index, reversed)`` of the traced face matching the
        closed dart sequence *darts*.
        """
        for i, walk in enumerate(self._walks):
            if same_cycle(walk, darts):
                return i, False
        for i, walk in enumerate(self._walks):
            if same_cycle(walk, reverse_darts(darts)):
                return i, True
        return None, None

    def _assign_face_ids(self, boundary):
        faces = []
        others = sorted(
            w for i, w in enumerate(self._walks)
            if i not in boundary.values())
        for face_id, i in boundary.items():
            faces.append(self._face(face_id, self._walks[i]))
        for n, walk in enumerate(others):
            faces.append(self._face('F%d' % n, walk))
        self.faces = tuple(faces)
        self.face = dict((f.id, f) for f in faces)

    def _init_annulus(self, boundary0, boundary1):
        self._check_walk(boundary0, closed=True)
        self._check_walk(boundary1, closed=True)
        i0, _ = self._find_walk(boundary0)
        i1, _ = self._find_walk(boundary1)
        if i0 is None:
            raise InstanceError('boundary walk not a face', 'boundary0')
        if i1 is None:
            raise InstanceError('boundary walk not a face', 'boundary1')
        if i0 == i1:
            raise InstanceError('boundaries coincide')
        self.boundary_faces = ('B0', 'B1')
        self._assign_face_ids({'B0': i0, 'B1': i1})
        self.boundary0 = self.face['B0'].darts
        self.boundary1 = self.face['B1'].darts
        self.s = self.t = None

    def _init_disk(self, boundary0, boundary1, s, t):
        if s is None or t is None or s == t:
            raise InstanceError('disk anchors')
        for anchor in (s, t):
            if anchor not in self.vertices:
                raise InstanceError('unknown vertex', anchor)
        self._check_walk(boundary0, start=s, end=t)
        self._check_walk(boundary1, start=t, end=s)
        i, reverse = self._find_walk(boundary0 + boundary1)
        if i is None:
            raise InstanceError('boundary walk not a face', 'boundary')
        if reverse:
            boundary0, boundary1 = (
                reverse_darts(boundary0), reverse_darts(boundary1))
            s, t = t, s
        self.boundary_faces = ('B',)
        self._assign_face_ids({'B': i})
        self.boundary0 = boundary0
        self.boundary1 = boundary1
        self.s, self.t = s, t

    def _check_walk(self, darts, *, closed=False, start=None, end=None):
        for dart in darts:
            if dart[0] not in self.edges:
                raise InstanceError('unknown edge', dart[0])
        for a, b in zip(darts, darts[1:]):
            if self.head(a) != self.tail(b):
                raise InstanceError('walk not incident', b[0])
        if not darts:
            if start != end:
                raise InstanceError('walk not incident', 'empty arc')
            return
        if closed and self.head(darts[-1]) != self.tail(darts[0]):
            raise InstanceError('walk not closed')
        if start is not None and self.tail(darts[0]) != start:
            raise InstanceError('walk not incident', 'arc start')
        if end is not None and self.head(darts[-1]) != end:
            raise InstanceError('walk not incident', 'arc end')

    def tail(self, dart):
        return self.edges[dart[0]].ends[1 if dart[1] else 0]

    def head(self, dart):
        return self.edges[dart[0]].ends[0 if dart[1] else 1]

    def weight(self, edge_id):
        return self.edges[edge_id].weight

    def rotation_index(self, edge_end):
        """
        Returns ``(vertex, index)`` of the given edge-end in the rotation
        system.
        """
        return self._rotation_index[edge_end]

    def faces_of_edge(self, edge_id):
        """
        Returns ``(left, right)`` face ids of the dart ``(edge_id, False)``.
        """
        return (self.left_face[(edge_id, False)],
                self.left_face[(edge_id, True)])

    @property
    def total_weight(self):
        return sum((e.weight for e in self.edges.values()), Fraction(0))

    @property
    def boundary_vertices(self):
        """
        The vertex sets of the first and second boundary.
        """
        if self.kind == 'annulus':
            return (set(self.tail(d) for d in self.boundary0),
                    set(self.tail(d) for d in self.boundary1))
        return ({self.s} | set(self.head(d) for d in self.boundary0),
                {self.t} | set(self.head(d) for d in self.boundary1))

    def scaled(self, factor):
        """
        Returns a copy of this surface with all weights multiplied by
        *factor*.
        """
        factor = Fraction(factor)
        return Surface(
            self.kind, self.vertices,
            [e._replace(weight=e.weight * factor)
             for e in self.edges.values()],
            self.rotations, self.boundary0, self.boundary1, s=self.s, t=self.t)

    def mirrored(self):
        """
        Returns the reflection of this surface: every rotation is reversed.
        """
        rotations = dict((v, tuple(reversed(r)))
                         for v, r in self.rotations.items())
        if self.kind == 'annulus':
            return Surface('annulus', self.vertices, self.edges.values(),
                           rotations, reverse_darts(self.boundary0),
                           reverse_darts(self.boundary1))
        return Surface('disk', self.vertices, self.edges.values(), rotations,
                       reverse_darts(self.boundary1),
                       reverse_darts(self.boundary0), s=self.s, t=self.t)

    def __repr__(self):
        return '<Surface %s V=%d E=%d F=%d>' % (
            self.kind, len(self.vertices), len(self.edges), len(self.faces))


def trace_faces(surface):
    """
    Returns the :class:`FaceWalk` of every face of *surface*, boundary faces
    first. Validation already ran the Euler check, so this never fails on a
    constructed surface.
    """
    return list(surface.faces)


def walk_to_darts(edges, walk):
    """
    Converts an alternating vertex/edge list ``[v0, e1, v1, ...]`` into
    darts. Self-loops are traversed forwards unless their id is prefixed with
    ``~``.
    """
    if not walk:
        raise InstanceError('malformed walk', 'empty')
    if len(walk) % 2 != 1:
        raise InstanceError('malformed walk', 'must alternate vertices '
                            'and edges')
    darts = []
    for i in range(1, len(walk), 2):
        prev, token, nxt = str(walk[i - 1]), str(walk[i]), str(walk[i + 1])
        forced = token.startswith('~')
        edge_id = token[1:] if forced else token
        if edge_id not in edges:
            raise InstanceError('unknown edge', edge_id)
        ends = edges[edge_id].ends
        if ends == (prev, nxt) and not (forced and ends[0] == ends[1]):
            darts.append((edge_id, False))
        elif ends == (nxt, prev):
            darts.append((edge_id, True))
        else:
            raise InstanceError('walk not incident', edge_id)
    return tuple(darts)


def darts_to_walk(surface, darts, start=None):
    """
    Inverse of :func:`walk_to_darts`.
    """
    if not darts:
        return [start]
    walk = [surface.tail(darts[0])]
    for dart in darts:
        edge = surface.edges[dart[0]]
        loop = edge.ends[0] == edge.ends[1]
        walk.append(('~' + dart[0]) if loop and dart[1] else dart[0])
        walk.append(surface.head(dart))
    return walk


def _parse_rotations(document, edges):
    rotations = {}
    raw = document.get('rotations')
    if not isinstance(raw, dict):
        raise InstanceError('malformed document', 'rotations')
    for vertex, entries in raw.items():
        vertex = str(vertex)
        rotation = []
        for entry in entries:
            if isinstance(entry, (list, tuple)):
                edge_id, end = str(entry[0]), int(entry[1])
            else:
                edge_id = str(entry)
                if edge_id not in edges:
                    raise InstanceError('unknown edge', edge_id)
                ends = edges[edge_id].ends
                if ends[0] == ends[1]:
                    raise InstanceError('rotation ambiguous', edge_id)
                end = 0 if ends[0] == vertex else 1
            rotation.append((edge_id, end))
        rotations[vertex] = rotation
    return rotations


def _parse_graph(document):
    try:
        vertices = [str(v) for v in document['vertices']]
        edges = {}
        for raw in document['edges']:
            edge = Edge(str(raw['id']),
                        tuple(str(v) for v in raw['ends']),
                        parse_weight(raw.get('weight', '1')))
            if len(edge.ends) != 2:
                raise InstanceError('malformed document', edge.id)
            if edge.id in edges:
                raise InstanceError('duplicate edge', edge.id)
            edges[edge.id] = edge
    except (KeyError, TypeError) as e:
        raise InstanceError('malformed document', str(e))
    for edge in edges.values():
        for end in edge.ends:
            if end not in vertices:
                raise InstanceError('unknown vertex', end)
    return vertices, edges, _parse_rotations(document, edges)


def parse_instance(document):
    """
    Parses an instance document (the decoded JSON/YAML mapping) of kind
    ``annulus`` or ``disk`` into a validated :class:`Surface`. Documents of
    kind ``frechet`` and ``layout`` are handled by
    :mod:`score.homotopy.reductions`.
    """
    if not isinstance(document, dict):
        raise InstanceError('malformed document', 'not a mapping')
    kind = document.get('kind')
    if kind not in ('annulus', 'disk'):
        raise InstanceError('unknown kind', repr(kind))
    vertices, edges, rotations = _parse_graph(document)
    try:
        boundary0 = walk_to_darts(edges, document['boundary0'])
        boundary1 = walk_to_darts(edges, document['boundary1'])
    except KeyError as e:
        raise InstanceError('malformed document', str(e))
    surface = Surface(kind, vertices, edges.values(), rotations,
                      boundary0, boundary1,
                      s=document.get('s'), t=document.get('t'))
    log.debug('parsed %r', surface)
    return surface


def serialize_graph(edge_index, vertices, edges, rotations):
    document = {
        'vertices': list(vertices),
        'edges': [{'id': e.id, 'ends': list(e.ends),
                   'weight': format_weight(e.weight)} for e in edges],
        'rotations': {},
    }
    for vertex in vertices:
        entries = []
        for edge_id, end in rotations[vertex]:
            ends = edge_index[edge_id].ends
            if ends[0] == ends[1]:
                entries.append([edge_id, end])
            else:
                entries.append(edge_id)
        document['rotations'][vertex] = entries
    return document


def serialize(surface):
    """
    Returns the instance document of *surface*; the inverse of
    :func:`parse_instance`.
    """
    document = {'kind': surface.kind}
    document.update(serialize_graph(
        surface.edges, surface.vertices, surface.edges.values(),
        surface.rotations))
    if surface.kind == 'annulus':
        document['boundary0'] = darts_to_walk(surface, surface.boundary0)
        document['boundary1'] = darts_to_walk(surface, surface.boundary1)
    else:
        document['boundary0'] = darts_to_walk(
            surface, surface.boundary0, surface.s)
        document['boundary1'] = darts_to_walk(
            surface, surface.boundary1, surface.t)
        document['s'] = surface.s
        document['t'] = surface.t
    return document


def content_hash(surface):
    """
    The sha256 hex digest of the canonical instance document.
    """
    text = json.dumps(serialize(surface), sort_keys=True,
                      separators=(',', ':'))
    return hashlib.sha256(text.encode('utf-8')).hexdigest()


def dual(surface):
    """
    Returns the :class:`DualGraph` of *surface*. Boundary faces become
    punctures; dual edges keep the weights of their primal edges.
    """
    edges = {}
    for edge in surface.edges.values():
        left, right = surface.faces_of_edge(edge.id)
        edges[edge.id] = ((right, left), edge.weight)
    rotations = {}
    for face in surface.faces:
        # walking a face with the face on the left circles it
        # counterclockwise, so the walk order is the dual rotation
        rotations[face.id] = tuple(
            (d[0], 0 if d[1] else 1) for d in face.darts)
    return DualGraph(tuple(f.id for f in surface.faces),
                     tuple(surface.boundary_faces), edges, rotations)


def dual_faces(graph):
    """
    Traces the faces of a :class:`DualGraph`. Each face corresponds to a
    primal vertex; the result lists the cyclic edge sequence of every face.
    """
    ends = dict((e, v[0]) for e, v in graph.edges.items())
    return [tuple(d[0] for d in walk)
            for walk in trace_darts(graph.rotations, ends)]


def shortest_path(surface, sources, targets):
    """
    Returns a minimum weight :class:`Path` from some vertex in *sources* to
    some vertex in *targets*. Ties are broken lexicographically by the
    sequence of edge ids. Raises :class:`NoPath` if no target is reachable.
    """
    sources = sorted(set(sources))
    targets = set(targets)
    if not sources or not targets:
        raise NoPath('no path')
    heap = [((Fraction(0), ()), v, (v,), ()) for v in sources]
    heapq.heapify(heap)
    done = set()
    while heap:
        (weight, ids), vertex, vertices, darts = heapq.heappop(heap)
        if vertex in done:
            continue
        done.add(vertex)
        if vertex in targets:
            return Path(vertices, darts, weight)
        for edge_id, end in surface.rotations[vertex]:
            dart = (edge_id, end == 1)
            nxt = surface.head(dart)
            if nxt in done or nxt in vertices:
                continue
            label = (weight + surface.weight(edge_id), ids + (edge_id,))
            heapq.heappush(heap, (label, nxt, vertices + (nxt,),
                                  darts + (dart,)))
    raise NoPath('no path')


def diameter(surface):
    """
    The largest shortest-path distance between two vertices.
    """
    graph = nx.MultiGraph()
    graph.add_nodes_from(surface.vertices)
    for edge in surface.edges.values():
        graph.add_edge(*edge.ends, weight=edge.weight)
    best = Fraction(0)
    for _, lengths in nx.all_pairs_dijkstra_path_length(graph):
        for value in lengths.values():
            best = max(best, Fraction(value))
    return best


def _corner(surface, face_id, vertex, occurrence=0):
    """
    Returns the rotation index *i* at *vertex* such that the given face has
    a corner between the edge-ends ``i - 1`` and ``i``.
    """
    face = surface.face[face_id]
    seen = 0
    for k, dart in enumerate(face.darts):
        if surface.tail(dart) != vertex:
            continue
        if seen == occurrence:
            arriving = face.darts[k - 1]
            end = (arriving[0], 0 if arriving[1] else 1)
            return surface.rotation_index(end)[1]
        seen += 1
    raise InstanceError('vertex not on face', '%s/%s' % (vertex, face_id))


def _ccw_range(start, stop, size):
    """
    Indices from *start* counterclockwise up to, but excluding, *stop*.
    """
    out = []
    i = start % size
    while i != stop % size:
        out.append(i)
        i = (i + 1) % size
    return out


def cut_along(surface, path):
    """
    Cuts the annulus *surface* along the simple boundary-to-boundary *path*
    (a :class:`Path`) and returns a :class:`CutSurface` whose surface is a
    disk.

    Path vertices and edges are duplicated into an ``.a`` and a ``.b`` copy;
    the ``.a`` copies lie on the right of the path.
    """
    if surface.kind != 'annulus':
        raise InstanceError('cut needs an annulus')
    vertices = list(path.vertices)
    if len(set(vertices)) != len(vertices):
        raise InstanceError('cut path not simple')
    on0, on1 = surface.boundary_vertices
    if vertices[0] not in on0 or vertices[-1] not in on1:
        raise InstanceError('cut path endpoints not on distinct boundaries')
    darts = list(path.darts)
    path_edges = set(d[0] for d in darts)
    side = {}
    copies = {}
    copy_rotations = {}
    for k, vertex in enumerate(vertices):
        rotation = surface.rotations[vertex]
        size = len(rotation)
        if k > 0:
            dart = darts[k - 1]
            start = surface.rotation_index(
                (dart[0], 0 if dart[1] else 1))[1]
        else:
            start = _corner(surface, 'B0', vertex)
        if k < len(darts):
            dart = darts[k]
            stop = surface.rotation_index(
                (dart[0], 1 if dart[1] else 0))[1]
        else:
            stop = _corner(surface, 'B1', vertex)
        if k > 0:
            arc_a = _ccw_range(start + 1, stop, size)
        else:
            arc_a = _ccw_range(start, stop, size)
        if k < len(darts):
            arc_b = _ccw_range(stop + 1, start, size)
        else:
            arc_b = _ccw_range(stop, start, size)
        a_id, b_id = vertex + '.a', vertex + '.b'
        copies[vertex] = (a_id, b_id)
        rot_a = [rotation[i] for i in arc_a]
        rot_b = [rotation[i] for i in arc_b]
        if k > 0:
            rot_a.insert(0, ('in', k - 1))
            rot_b.append(('in', k - 1))
        if k < len(darts):
            rot_a.append(('out', k))
            rot_b.insert(0, ('out', k))
        if not rot_a or not rot_b:
            raise InstanceError('cut produces isolated vertex', vertex)
        copy_rotations[a_id] = rot_a
        copy_rotations[b_id] = rot_b
        for end in rot_a:
            side[end] = a_id
        for end in rot_b:
            side[end] = b_id
    new_edges = []
    edge_map = {}
    for edge in surface.edges.values():
        if edge.id in path_edges:
            continue
        ends = []
        for j in (0, 1):
            ends.append(side.get((edge.id, j), edge.ends[j]))
        new_edges.append(Edge(edge.id, tuple(ends), edge.weight))
        edge_map[edge.id] = edge.id
    path_copy = {}
    for k, dart in enumerate(darts):
        for letter, idx in (('a', 0), ('b', 1)):
            edge_id = '%s.%s' % (dart[0], letter)
            tail = copies[vertices[k]][idx]
            head = copies[vertices[k + 1]][idx]
            ends = (head, tail) if dart[1] else (tail, head)
            new_edges.append(Edge(edge_id, ends, surface.weight(dart[0])))
            edge_map[edge_id] = dart[0]
            path_copy[(k, letter)] = (edge_id, dart[1])
    rotations = {}
    vertex_map = {}
    for vertex in surface.vertices:
        if vertex not in copies:
            rotations[vertex] = list(surface.rotations[vertex])
            vertex_map[vertex] = vertex
    for vertex, (a_id, b_id) in copies.items():
        vertex_map[a_id] = vertex_map[b_id] = vertex
        for copy_id, idx in ((a_id, 0), (b_id, 1)):
            letter = 'ab'[idx]
            out = []
            for end in copy_rotations[copy_id]:
                if end[0] == 'in':
                    edge_id, reverse = path_copy[(end[1], letter)]
                    out.append((edge_id, 0 if reverse else 1))
                elif end[0] == 'out':
                    edge_id, reverse = path_copy[(end[1], letter)]
                    out.append((edge_id, 1 if reverse else 0))
                else:
                    out.append(end)
            rotations[copy_id] = out
    ordered = [v for v in surface.vertices if v not in copies]
    for vertex in vertices:
        ordered.extend(copies[vertex])
    # boundary arcs: gamma0 runs from the b copy to the a copy of the first
    # path vertex, then the a copy of the path, gamma1 reversed, and the b
    # copy of the path backwards
    b0 = surface.face['B0'].darts
    start = _corner(surface, 'B0', vertices[0])
    rot = surface.rotations[vertices[0]]
    first_out = rot[(start - 1) % len(rot)]
    first = next(i for i, d in enumerate(b0)
                 if (d[0], 1 if d[1] else 0) == first_out)
    gamma0 = b0[first:] + b0[:first]
    b1 = surface.face['B1'].darts
    start = _corner(surface, 'B1', vertices[-1])
    rot = surface.rotations[vertices[-1]]
    first_out = rot[(start - 1) % len(rot)]
    first = next(i for i, d in enumerate(b1)
                 if (d[0], 1 if d[1] else 0) == first_out)
    gamma1_rev = b1[first:] + b1[:first]
    q_arc = tuple(path_copy[(k, 'a')] for k in range(len(darts)))
    p_arc = tuple(path_copy[(k, 'b')] for k in range(len(darts)))
    boundary1 = q_arc + tuple(gamma1_rev) + reverse_darts(p_arc)
    disk = Surface('disk', ordered, new_edges, rotations, tuple(gamma0),
                   boundary1, s=copies[vertices[0]][1],
                   t=copies[vertices[0]][0])
    return CutSurface(disk, vertex_map, edge_map, path, tuple(gamma0),
                      p_arc, reverse_darts(gamma1_rev), q_arc)


def glue(cut):
    """
    Re-glues a :class:`CutSurface` along its cut path, returning the original
    annulus up to the normalization of boundary walks.
    """
    disk = cut.surface
    edges = {}
    for edge in disk.edges.values():
        original = cut.edge_map[edge.id]
        ends = tuple(cut.vertex_map[v] for v in edge.ends)
        if original in edges:
            continue
        edges[original] = Edge(original, ends, edge.weight)
    rotations = {}
    path_edges = set(d[0] for d in cut.path.darts)
    for k, vertex in enumerate(cut.path.vertices):
        a_rot = list(disk.rotations[vertex + '.a'])
        b_rot = list(disk.rotations[vertex + '.b'])
        merged = []
        for end in a_rot + b_rot:
            original = (cut.edge_map[end[0]], end[1])
            if original[0] in path_edges and original in merged:
                continue
            merged.append(original)
        rotations[vertex] = merged
    for vertex in disk.vertices:
        if cut.vertex_map[vertex] == vertex:
            rotations[vertex] = [(cut.edge_map[e], j)
                                 for e, j in disk.rotations[vertex]]
    vertices = []
    for vertex in disk.vertices:
        if cut.vertex_map[vertex] not in vertices:
            vertices.append(cut.vertex_map[vertex])
    boundary0 = tuple((cut.edge_map[e], r) for e, r in cut.gamma0)
    boundary1 = reverse_darts(
        tuple((cut.edge_map[e], r) for e, r in cut.gamma1))
    return Surface('annulus', vertices, edges.values(), rotations,
                   boundary0, boundary1)
