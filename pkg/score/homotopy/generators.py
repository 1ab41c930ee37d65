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
Instance families. Every generator returns an instance document (see
:func:`~score.homotopy.surface.serialize`), all randomness comes from a
:class:`random.Random` seeded with the given *seed*, so equal parameters
always produce identical documents.
"""

import random

from .surface import (
    Edge, InstanceError, format_weight, min_rotation, serialize_graph,
    trace_darts)


def _weights(count, model, rng):
    if model is None or model == 'unit':
        return [1] * count
    if isinstance(model, (list, tuple)) and model and model[0] == 'uniform':
        low, high = int(model[1]), int(model[2])
        if low < 0 or high < low:
            raise InstanceError('invalid generator parameters', 'weights')
        return [rng.randint(low, high) for _ in range(count)]
    if isinstance(model, (list, tuple)):
        if len(model) != count:
            raise InstanceError('invalid generator parameters', 'weights')
        return list(model)
    raise InstanceError('invalid generator parameters', repr(model))


def parse_weight_model(text):
    """
    Parses the command line notation of a weight model: ``unit`` or
    ``uniform:LOW:HIGH``.
    """
    if text in (None, 'unit'):
        return 'unit'
    parts = text.split(':')
    if parts[0] in ('uniform', 'uniform-integer') and len(parts) == 3:
        try:
            return ('uniform', int(parts[1]), int(parts[2]))
        except ValueError:
            pass
    raise InstanceError('invalid generator parameters', text)


class _Builder:
    """
    A rotation system under construction. Edge ids are kept in creation
    order, which is also the order weights are assigned in.
    """

    def __init__(self):
        self.vertices = []
        self.ends = {}
        self.order = []
        self.rotations = {}

    def vertex(self):
        name = 'v%d' % len(self.vertices)
        self.vertices.append(name)
        self.rotations[name] = []
        return name

    def edge(self, x, y):
        name = 'e%d' % len(self.order)
        self.ends[name] = (x, y)
        self.order.append(name)
        return name

    def tail(self, dart):
        return self.ends[dart[0]][1 if dart[1] else 0]

    def faces(self):
        return trace_darts(self.rotations, self.ends)

    def _corner_index(self, walk, i):
        arriving = walk[i - 1]
        end = (arriving[0], 0 if arriving[1] else 1)
        return self.rotations[self.tail(walk[i])].index(end)

    def subdivide(self, edge_id):
        x, y = self.ends[edge_id]
        w = self.vertex()
        extra = self.edge(w, y)
        self.ends[edge_id] = (x, w)
        rotation = self.rotations[y]
        rotation[rotation.index((edge_id, 1))] = (extra, 1)
        self.rotations[w] = [(edge_id, 1), (extra, 0)]
        return extra

    def chord(self, walk, i, j):
        x, y = self.tail(walk[i]), self.tail(walk[j])
        assert x != y
        at_x = self._corner_index(walk, i)
        at_y = self._corner_index(walk, j)
        edge_id = self.edge(x, y)
        self.rotations[x].insert(at_x, (edge_id, 0))
        self.rotations[y].insert(at_y, (edge_id, 1))
        return edge_id

    def pendant(self, walk, i):
        x = self.tail(walk[i])
        at_x = self._corner_index(walk, i)
        w = self.vertex()
        edge_id = self.edge(x, w)
        self.rotations[x].insert(at_x, (edge_id, 0))
        self.rotations[w] = [(edge_id, 1)]
        return w

    def random_chord(self, rng, walks):
        walks = [w for w in walks
                 if len(set(self.tail(d) for d in w)) > 1]
        walk = rng.choice(walks)
        i = rng.randrange(len(walk))
        others = [j for j in range(len(walk))
                  if self.tail(walk[j]) != self.tail(walk[i])]
        return self.chord(walk, i, rng.choice(others))

    def walk(self, darts, start=None):
        if not darts:
            return [start]
        result = [self.tail(darts[0])]
        for edge_id, reverse in darts:
            result += [edge_id, self.ends[edge_id][0 if reverse else 1]]
        return result

    def document(self, kind, weights, **walks):
        edges = [Edge(e, self.ends[e], w)
                 for e, w in zip(self.order, weights)]
        index = dict((e.id, e) for e in edges)
        document = {'kind': kind}
        document.update(serialize_graph(index, self.vertices, edges,
                                        self.rotations))
        document.update(walks)
        return document


def _face_with(walks, dart):
    return next(w for w in walks if dart in w)


def _arc(walk, start, stop):
    """
    Splits the closed dart sequence *walk* into the part starting at the
    first dart matching *start* up to the first dart matching *stop*, and
    the rest.
    """
    offset = next(i for i, d in enumerate(walk) if start(d))
    rotated = walk[offset:] + walk[:offset]
    end = next(i for i, d in enumerate(rotated) if stop(d))
    return rotated[:end], rotated[end:]


def theta(k=3, weights=None, seed=0):
    """
    Two vertices joined by *k* parallel edges ``a``, ``b``, ... The two
    faces next to edge ``a`` are the boundaries, the remaining ``k - 2``
    faces are internal.
    """
    if k < 2:
        raise InstanceError('invalid generator parameters', 'k < 2')
    names = ([chr(ord('a') + i) for i in range(k)] if k <= 26
             else ['e%d' % i for i in range(k)])
    values = _weights(k, weights, random.Random(seed))
    edges = [{'id': n, 'ends': ['u', 'v'], 'weight': format_weight(w)}
             for n, w in zip(names, values)]
    return {
        'kind': 'annulus',
        'vertices': ['u', 'v'],
        'edges': edges,
        'rotations': {'u': list(names), 'v': list(reversed(names))},
        'boundary0': ['u', names[0], 'v', names[1], 'u'],
        'boundary1': ['u', names[-1], 'v', names[0], 'u'],
    }


def cylinder_grid(rows=2, cols=3, weights=None, seed=0):
    """
    ``rows + 1`` concentric cycles of *cols* vertices each, consecutive
    cycles joined by rungs. The innermost cycle is the first boundary, the
    outermost the second; there are ``rows * cols`` internal faces.
    """
    if rows < 1 or cols < 3:
        raise InstanceError('invalid generator parameters',
                            'rows >= 1 and cols >= 3 required')
    vertices = ['%d.%d' % (r, c) for r in range(rows + 1) for c in range(cols)]
    ends = []
    for r in range(rows + 1):
        for c in range(cols):
            ends.append(('h%d.%d' % (r, c),
                         ['%d.%d' % (r, c), '%d.%d' % (r, (c + 1) % cols)]))
    for r in range(rows):
        for c in range(cols):
            ends.append(('v%d.%d' % (r, c),
                         ['%d.%d' % (r, c), '%d.%d' % (r + 1, c)]))
    values = _weights(len(ends), weights, random.Random(seed))
    rotations = {}
    for r in range(rows + 1):
        for c in range(cols):
            rotation = []
            if r < rows:
                rotation.append('v%d.%d' % (r, c))
            rotation.append('h%d.%d' % (r, c))
            if r > 0:
                rotation.append('v%d.%d' % (r - 1, c))
            rotation.append('h%d.%d' % (r, (c - 1) % cols))
            rotations['%d.%d' % (r, c)] = rotation
    inner = ['0.0']
    for c in range(cols):
        inner += ['h0.%d' % c, '0.%d' % ((c + 1) % cols)]
    outer = ['%d.0' % rows]
    for c in reversed(range(cols)):
        outer += ['h%d.%d' % (rows, c), '%d.%d' % (rows, c)]
    return {
        'kind': 'annulus',
        'vertices': vertices,
        'edges': [{'id': e, 'ends': v, 'weight': format_weight(w)}
                  for (e, v), w in zip(ends, values)],
        'rotations': rotations,
        'boundary0': inner,
        'boundary1': outer,
    }


def _check_budget(faces, base, max_edges):
    if faces < 0 or faces + base > max_edges:
        raise InstanceError('invalid generator parameters',
                            '%d faces need more than %d edges'
                            % (faces, max_edges))


def random_annulus(faces=4, seed=0, weights=None, max_edges=14):
    """
    A random annulus with *faces* internal faces and at most *max_edges*
    edges, grown from two parallel edges by subdividing edges and adding
    chords inside faces.
    """
    _check_budget(faces, 2, max_edges)
    rng = random.Random(seed)
    builder = _Builder()
    u, v = builder.vertex(), builder.vertex()
    first, second = builder.edge(u, v), builder.edge(u, v)
    builder.rotations[u] = [(first, 0), (second, 0)]
    builder.rotations[v] = [(second, 1), (first, 1)]
    markers = ((first, False), (second, False))
    walks = builder.faces()
    while len(walks) - 2 < faces:
        spare = max_edges - len(builder.order) - (faces - len(walks) + 2)
        if spare > 0 and rng.random() < 0.35:
            builder.subdivide(rng.choice(builder.order))
        else:
            builder.random_chord(rng, walks)
        walks = builder.faces()
    boundary0 = _face_with(walks, markers[0])
    boundary1 = _face_with(walks, markers[1])
    values = _weights(len(builder.order), weights, rng)
    return builder.document(
        'annulus', values,
        boundary0=builder.walk(min_rotation(boundary0)[1]),
        boundary1=builder.walk(min_rotation(boundary1)[1]))


def random_disk(faces=3, seed=0, weights=None, max_edges=14):
    """
    A random disk with *faces* internal faces (at least one). The boundary
    is a subdivided cycle through ``s`` and ``t``; chords are only added
    inside internal faces.
    """
    if faces < 1:
        raise InstanceError('invalid generator parameters', 'faces >= 1')
    _check_budget(faces, 1, max_edges)
    rng = random.Random(seed)
    builder = _Builder()
    s, t = builder.vertex(), builder.vertex()
    forth, back = builder.edge(s, t), builder.edge(t, s)
    builder.rotations[s] = [(forth, 0), (back, 1)]
    builder.rotations[t] = [(forth, 1), (back, 0)]
    marker = (forth, False)
    walks = builder.faces()
    for _ in range(rng.randint(0, 2)):
        if len(builder.order) + faces - 1 < max_edges:
            builder.subdivide(rng.choice(builder.order))
    walks = builder.faces()
    while len(walks) - 1 < faces:
        spare = max_edges - len(builder.order) - (faces - len(walks) + 1)
        if spare > 0 and rng.random() < 0.3:
            builder.subdivide(rng.choice(builder.order))
        else:
            builder.random_chord(
                rng, [w for w in walks if marker not in w])
        walks = builder.faces()
    boundary = _face_with(walks, marker)
    arc0, arc1 = _arc(boundary, lambda d: builder.tail(d) == s,
                      lambda d: builder.tail(d) == t)
    values = _weights(len(builder.order), weights, rng)
    return builder.document(
        'disk', values, boundary0=builder.walk(arc0),
        boundary1=builder.walk(arc1), s=s, t=t)


# layouts


def _layout_document(builder, outer, weights, rng):
    values = _weights(len(builder.order), weights, rng)
    document = builder.document('layout', values)
    document['outer_face'] = builder.walk(outer, builder.vertices[0])
    return document


def path_layout(n=3, weights=None, seed=0):
    """
    The path on *n* vertices.
    """
    if n < 1:
        raise InstanceError('invalid generator parameters', 'n >= 1')
    builder = _Builder()
    previous = builder.vertex()
    for _ in range(n - 1):
        current = builder.vertex()
        edge_id = builder.edge(previous, current)
        builder.rotations[previous].append((edge_id, 0))
        builder.rotations[current].append((edge_id, 1))
        previous = current
    walks = builder.faces() or [()]
    return _layout_document(builder, walks[0], weights, random.Random(seed))


def star_layout(k=3, weights=None, seed=0):
    """
    The star with *k* leaves around the center ``v0``.
    """
    if k < 1:
        raise InstanceError('invalid generator parameters', 'k >= 1')
    builder = _Builder()
    center = builder.vertex()
    for _ in range(k):
        leaf = builder.vertex()
        edge_id = builder.edge(center, leaf)
        builder.rotations[center].append((edge_id, 0))
        builder.rotations[leaf].append((edge_id, 1))
    return _layout_document(builder, builder.faces()[0], weights,
                            random.Random(seed))


def random_layout(n=5, seed=0, weights=None, max_edges=10):
    """
    A random connected plane graph on *n* vertices with a random outer face.
    """
    if n < 2:
        raise InstanceError('invalid generator parameters', 'n >= 2')
    rng = random.Random(seed)
    builder = _Builder()
    u, v = builder.vertex(), builder.vertex()
    edge_id = builder.edge(u, v)
    builder.rotations[u] = [(edge_id, 0)]
    builder.rotations[v] = [(edge_id, 1)]
    while len(builder.vertices) < n:
        walks = builder.faces()
        roll = rng.random()
        missing = n - len(builder.vertices)
        if roll < 0.25 and len(builder.order) + missing < max_edges:
            builder.random_chord(rng, walks)
        elif roll < 0.4:
            builder.subdivide(rng.choice(builder.order))
        else:
            walk = rng.choice(walks)
            builder.pendant(walk, rng.randrange(len(walk)))
    walks = builder.faces()
    return _layout_document(builder, rng.choice(walks), weights, rng)


# Fréchet


def square_frechet(weights=None, seed=0):
    """
    A single square face: ``gamma0`` and ``gamma1`` are opposite sides,
    ``P`` and ``Q`` the sides joining their endpoints.
    """
    builder = _Builder()
    p0, q0, q1, p1 = (builder.vertex() for _ in range(4))
    return _frechet_document(builder, p0, q0, q1, p1, weights,
                             random.Random(seed))


def _frechet_document(builder, p0, q0, q1, p1, weights, rng, grow=None):
    g0 = builder.edge(p0, q0)
    q = builder.edge(q0, q1)
    g1 = builder.edge(p1, q1)
    p = builder.edge(p0, p1)
    builder.rotations[p0] = [(g0, 0), (p, 0)]
    builder.rotations[q0] = [(q, 0), (g0, 1)]
    builder.rotations[q1] = [(g1, 1), (q, 1)]
    builder.rotations[p1] = [(p, 1), (g1, 0)]
    chains = {'gamma0': [g0], 'Q': [q], 'gamma1': [g1], 'P': [p]}
    if grow is not None:
        grow(builder, chains)
    values = _weights(len(builder.order), weights, rng)
    starts = {'gamma0': p0, 'Q': q0, 'gamma1': p1, 'P': p0}
    arcs = dict((name, builder.walk(tuple((e, False) for e in chain),
                                    starts[name]))
                for name, chain in chains.items())
    return builder.document('frechet', values, **arcs)


def random_frechet(faces=2, seed=0, weights=None, max_edges=12):
    """
    A random Fréchet instance: the square of :func:`square_frechet` with
    subdivided sides and *faces* internal faces.
    """
    if faces < 1:
        raise InstanceError('invalid generator parameters', 'faces >= 1')
    _check_budget(faces, 3, max_edges)
    rng = random.Random(seed)

    def grow(builder, chains):
        for _ in range(rng.randint(0, 2)):
            if len(builder.order) + faces - 1 >= max_edges:
                break
            edge_id = rng.choice(builder.order)
            extra = builder.subdivide(edge_id)
            for chain in chains.values():
                if edge_id in chain:
                    chain.insert(chain.index(edge_id) + 1, extra)
        walks = builder.faces()
        outer = (chains['gamma0'][0], False)
        while len(walks) - 1 < faces:
            builder.random_chord(rng, [w for w in walks if outer not in w])
            walks = builder.faces()

    builder = _Builder()
    p0, q0, q1, p1 = (builder.vertex() for _ in range(4))
    return _frechet_document(builder, p0, q0, q1, p1, weights, rng, grow)


FAMILIES = {
    'theta': theta,
    'cylinder-grid': cylinder_grid,
    'random-annulus': random_annulus,
    'random-disk': random_disk,
    'path-layout': path_layout,
    'star-layout': star_layout,
    'random-layout': random_layout,
    'square-frechet': square_frechet,
    'random-frechet': random_frechet,
}


def generate(spec):
    """
    Generates the instance document described by the mapping *spec*, which
    names the ``family`` and passes all other keys as parameters to the
    corresponding generator, e.g. ``{'family': 'cylinder-grid', 'rows': 2,
    'cols': 3}``.
    """
    spec = dict(spec)
    family = spec.pop('family', None)
    if family not in FAMILIES:
        raise InstanceError('unknown generator family', repr(family))
    if isinstance(spec.get('weights'), str):
        spec['weights'] = parse_weight_model(spec['weights'])
    try:
        return FAMILIES[family](**spec)
    except TypeError as e:
        raise InstanceError('invalid generator parameters', str(e))
