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
Problems that translate into homotopy height.

*Homotopic Fréchet distance* on a disk: the disk boundary consists of the
arcs ``gamma0`` (from ``p0`` to ``q0``), ``Q`` (from ``q0`` to ``q1``),
``gamma1`` reversed and ``P`` reversed. A leash starting at ``gamma0`` has to
sweep the disk while its endpoints slide along ``P`` and ``Q``. Connecting all
vertices of ``P`` and ``Q`` to a new apex by heavy edges turns the disk into
an annulus whose homotopy height exceeds the leash length by twice the
heavy weight.

*Minimum height linear layouts* of a plane graph are homotopies on the disk
obtained by drilling a hole into the outer face of the dual graph.
"""

from collections import namedtuple
from fractions import Fraction
import logging

import networkx as nx

from .certificate import Certificate, is_monotone, verify_certificate
from .curve import flip_moves, initial_curve, spike_moves, unspike_moves
from .solver import solve_exact
from .surface import (
    Edge, HomotopyError, InstanceError, Surface, _parse_graph, cut_along,
    darts_to_walk, min_rotation, reverse_darts, same_cycle, serialize,
    serialize_graph, shortest_path, trace_darts, walk_to_darts)


log = logging.getLogger(__name__)


FrechetInstance = namedtuple('FrechetInstance', 'surface gamma0 Q gamma1 P')
FrechetInstance.__doc__ = """
A disk *surface* whose boundary walk is ``gamma0 + Q + reversed(gamma1) +
reversed(P)``; all four arcs are dart tuples, *P* and *Q* may be empty.
"""

FrechetAugmentation = namedtuple(
    'FrechetAugmentation', 'apex edges K surface instance')

FrechetResult = namedtuple(
    'FrechetResult', 'height augmentation certificate leashes')

Leash = namedtuple('Leash', 'start darts')

ApproxResult = namedtuple(
    'ApproxResult', 'certificate height disk_height ratio path')

LayoutReduction = namedtuple('LayoutReduction', 'surface correspondence')

LayoutResult = namedtuple(
    'LayoutResult', 'order height certificate surface correspondence')


def _fresh(name, taken):
    while name in taken:
        name += "'"
    return name


# Fréchet


def frechet_instance(vertices, edges, rotations, gamma0, Q, gamma1, P):
    """
    Builds a validated :class:`FrechetInstance` from a graph and the four
    boundary arcs given as dart tuples. An instance described with the
    opposite orientation is normalized by exchanging *P* and *Q*.
    """
    gamma0, Q, gamma1, P = map(tuple, (gamma0, Q, gamma1, P))
    if not gamma0 or not gamma1:
        raise InstanceError('leash arcs must not be empty')
    used = [d[0] for arc in (gamma0, Q, gamma1, P) for d in arc]
    if len(set(used)) != len(used):
        raise InstanceError('arcs not edge-disjoint')
    edge_index = dict((e.id, e) for e in edges)

    def tail(dart):
        return edge_index[dart[0]].ends[1 if dart[1] else 0]

    p0, q0 = tail(gamma0[0]), tail(reverse_darts(gamma0)[0])
    surface = Surface('disk', vertices, edges, rotations, gamma0,
                      Q + reverse_darts(gamma1) + reverse_darts(P),
                      s=p0, t=q0)
    if surface.s != p0:
        return FrechetInstance(surface, reverse_darts(gamma0), P,
                               reverse_darts(gamma1), Q)
    return FrechetInstance(surface, gamma0, Q, gamma1, P)


def parse_frechet(document):
    """
    Parses a document of kind ``frechet`` with the walks ``gamma0``,
    ``gamma1``, ``P`` and ``Q``.
    """
    if document.get('kind') != 'frechet':
        raise InstanceError('unknown kind', repr(document.get('kind')))
    vertices, edges, rotations = _parse_graph(document)
    try:
        arcs = [walk_to_darts(edges, document[name])
                for name in ('gamma0', 'Q', 'gamma1', 'P')]
    except KeyError as e:
        raise InstanceError('malformed document', str(e))
    return frechet_instance(vertices, edges.values(), rotations, *arcs)


def frechet_to_document(instance):
    surface = instance.surface
    document = serialize(surface)
    document['kind'] = 'frechet'
    for key in ('boundary0', 'boundary1', 's', 't'):
        del document[key]
    p0 = surface.s
    q0 = surface.t
    p1 = surface.head(instance.P[-1]) if instance.P else p0
    document['gamma0'] = darts_to_walk(surface, instance.gamma0)
    document['Q'] = darts_to_walk(surface, instance.Q, q0)
    document['gamma1'] = darts_to_walk(surface, instance.gamma1)
    document['P'] = darts_to_walk(surface, instance.P, p0)
    assert document['gamma1'][0] == p1
    return document


def frechet_to_hh(instance):
    """
    Adds an apex joined by edges of weight ``K = total weight + 1`` to every
    vertex of *P* and *Q* and returns the resulting
    :class:`FrechetAugmentation`. Its surface is an annulus pinched at the
    apex whose boundary curves are *gamma0* and *gamma1* closed through the
    apex.
    """
    disk = instance.surface
    K = disk.total_weight + 1
    walk = (instance.gamma0 + instance.Q +
            reverse_darts(instance.gamma1) + reverse_darts(instance.P))
    size = len(walk)
    g0, q, g1, p = (len(instance.gamma0), len(instance.Q),
                    len(instance.gamma1), len(instance.P))
    corners = [('q%d' % i, g0 + i) for i in range(q + 1)]
    corners += [('p%d' % i, (g0 + q + g1 + p - i) % size)
                for i in reversed(range(p + 1))]
    apex = _fresh('apex', disk.vertices)
    edges = list(disk.edges.values())
    rotations = dict((v, list(r)) for v, r in disk.rotations.items())
    inserts = {}
    added = []
    taken = set(disk.edges)
    for name, corner in corners:
        edge_id = _fresh('K.' + name, taken)
        taken.add(edge_id)
        added.append(edge_id)
        vertex = disk.tail(walk[corner])
        arriving = walk[corner - 1]
        _, index = disk.rotation_index(
            (arriving[0], 0 if arriving[1] else 1))
        inserts.setdefault(vertex, []).append((index, edge_id))
        edges.append(Edge(edge_id, (apex, vertex), K))
    for vertex, entries in inserts.items():
        for index, edge_id in sorted(entries, reverse=True):
            rotations[vertex].insert(index, (edge_id, 1))
    vertices = list(disk.vertices) + [apex]
    ends = dict((e.id, e.ends) for e in edges)
    for order in (added, list(reversed(added))):
        rotations[apex] = [(edge_id, 0) for edge_id in order]
        faces = trace_darts(rotations, ends)
        if len(vertices) - len(edges) + len(faces) == 2:
            break
    else:
        raise InstanceError('arcs do not form the boundary')
    first = next(f for f in faces if walk[0] in f)
    second = next(f for f in faces if walk[g0 + q] in f)
    surface = Surface('annulus', vertices, edges, rotations, first, second)
    log.debug('augmented %r with apex %s and K=%s', disk, apex, K)
    return FrechetAugmentation(apex, tuple(added), K, surface, instance)


def _leash(curve, augmentation):
    surface = augmentation.surface
    darts = curve.darts
    start = next(i for i, d in enumerate(darts)
                 if surface.tail(d) == augmentation.apex)
    darts = darts[start:] + darts[:start]
    return Leash(surface.head(darts[0]), darts[1:-1])


def solve_frechet(instance, **limits):
    """
    Solves the homotopic Fréchet problem of *instance* through
    :func:`frechet_to_hh` and returns a :class:`FrechetResult`. The height
    is the minimum homotopy height of the augmented annulus minus ``2K``;
    *leashes* lists the level curves with the apex removed.
    """
    augmentation = frechet_to_hh(instance)
    certificate = solve_exact(augmentation.surface, **limits)
    heavy = set(augmentation.edges)
    leashes = []
    for step, curve in enumerate(certificate.curves()):
        count = sum(1 for c in curve.crossings if c.edge in heavy)
        if count != 2:
            raise HomotopyError(
                'level curve %d uses %d apex edges' % (step, count))
        leashes.append(_leash(curve, augmentation))
    height = certificate.height() - 2 * augmentation.K
    log.info('homotopic Fréchet height %s', height)
    return FrechetResult(height, augmentation, certificate, leashes)


# approximation


def _closed_key(darts):
    return (True, min_rotation(darts)[1])


def _glued(cut, curve):
    """
    The darts of the disk *curve* in the original annulus. Both endpoints
    of a disk level curve are copies of the first path vertex, so the result
    is closed.
    """
    return tuple((cut.edge_map[e], r) for e, r in curve.darts)


def _connect(curve, target, depth):
    """
    Finds at most *depth* moves turning *curve* into a curve with walk key
    *target*.
    """
    frontier = [(curve, [])]
    for _ in range(depth):
        following = []
        for current, moves in frontier:
            for source in (flip_moves, spike_moves, unspike_moves):
                for move, result in source(current):
                    if result.walk_key == target:
                        return result, moves + [move]
                    following.append((result, moves + [move]))
        frontier = following
    return None


def _follow(curve, targets, moves):
    for target in targets:
        if curve.walk_key == target:
            continue
        found = _connect(curve, target, 1) or _connect(curve, target, 2)
        if found is None:
            raise HomotopyError('cannot connect glued level curves')
        curve, steps = found
        moves.extend(steps)
    return curve


def approx_solve(surface, disk_subsolver=None, **limits):
    """
    Approximates the homotopy height of the annulus *surface*: cuts it along
    a shortest path between the boundaries and solves the resulting disk
    with *disk_subsolver*, then glues the disk's level curves back into the
    annulus.

    *disk_subsolver* is any callable taking a disk
    :class:`~score.homotopy.surface.Surface` and returning a
    :class:`~score.homotopy.certificate.Certificate` for it;
    :func:`~score.homotopy.solver.solve_exact` by default. Every level curve
    of the disk runs between two copies of the first path vertex and becomes
    a closed curve of the same length. The last one travels the path twice;
    both copies are removed by unspiking. The reported height therefore
    never exceeds the height of the disk certificate.
    """
    if surface.kind != 'annulus':
        raise InstanceError('approximation needs an annulus')
    if disk_subsolver is None:
        def disk_subsolver(disk):
            return solve_exact(disk, **limits)
    first, second = surface.boundary_vertices
    path = shortest_path(surface, first, second)
    cut = cut_along(surface, path)
    disk = disk_subsolver(cut.surface)
    if disk.surface is not cut.surface:
        raise HomotopyError('disk certificate for another surface')
    disk_height = verify_certificate(disk)
    curves = disk.curves()
    targets = [_closed_key(_glued(cut, c)) for c in curves]
    last = _glued(cut, curves[-1])
    targets += [_closed_key(last[j:len(last) - j])
                for j in range(1, len(path.darts) + 1)]
    moves = []
    _follow(initial_curve(surface), targets, moves)
    certificate = Certificate(surface, None, moves)
    height = verify_certificate(certificate)
    ratio = height / disk_height if disk_height else None
    log.info('approximate height %s (disk %s, path %s)', height, disk_height,
             path.weight)
    return ApproxResult(certificate, height, disk_height, ratio, path)


# linear layouts


class LayoutInstance:
    """
    A connected plane graph given by a rotation system and the darts of its
    *outer* face walk (empty for a graph without edges).
    """

    def __init__(self, vertices, edges, rotations, outer):
        self.vertices = tuple(vertices)
        self.edges = dict(
            (e.id, Edge(e.id, tuple(e.ends), Fraction(e.weight)))
            for e in edges)
        self.rotations = dict((v, tuple(tuple(x) for x in rotations.get(v, ())))
                              for v in self.vertices)
        self.outer = tuple(outer)
        for edge in self.edges.values():
            if edge.weight < 0:
                raise InstanceError('negative weight', edge.id)
            for end in edge.ends:
                if end not in self.vertices:
                    raise InstanceError('unknown vertex', end)
        listed = [end for r in self.rotations.values() for end in r]
        expected = [(e, j) for e in self.edges for j in (0, 1)]
        if sorted(listed) != sorted(expected):
            raise InstanceError('rotation incomplete')
        graph = nx.MultiGraph()
        graph.add_nodes_from(self.vertices)
        graph.add_edges_from(e.ends for e in self.edges.values())
        if not self.vertices or not nx.is_connected(graph):
            raise InstanceError('not connected')
        ends = dict((e.id, e.ends) for e in self.edges.values())
        self.faces = trace_darts(self.rotations, ends) or [()]
        euler = len(self.vertices) - len(self.edges) + len(self.faces)
        if euler != 2:
            raise InstanceError('not a sphere embedding',
                                'V - E + F = %d' % euler)
        if not any(same_cycle(f, self.outer) for f in self.faces):
            raise InstanceError('boundary walk not a face', 'outer_face')

    def mirrored(self):
        rotations = dict((v, tuple(reversed(r)))
                         for v, r in self.rotations.items())
        return LayoutInstance(self.vertices, self.edges.values(), rotations,
                              reverse_darts(self.outer))


def parse_layout(document):
    """
    Parses a document of kind ``layout`` whose ``outer_face`` is a closed
    walk (a single vertex for a graph without edges).
    """
    if document.get('kind') != 'layout':
        raise InstanceError('unknown kind', repr(document.get('kind')))
    vertices, edges, rotations = _parse_graph(document)
    try:
        walk = document['outer_face']
    except KeyError as e:
        raise InstanceError('malformed document', str(e))
    outer = walk_to_darts(edges, walk)
    return LayoutInstance(vertices, edges.values(), rotations, outer)


def layout_to_document(instance):
    document = serialize_graph(instance.edges, instance.vertices,
                               instance.edges.values(), instance.rotations)
    document['kind'] = 'layout'
    if instance.outer:
        edge = instance.edges[instance.outer[0][0]]
        walk = [edge.ends[1 if instance.outer[0][1] else 0]]
        for edge_id, reverse in instance.outer:
            walk += [edge_id, instance.edges[edge_id].ends[0 if reverse
                                                           else 1]]
    else:
        walk = [instance.vertices[0]]
    document['outer_face'] = walk
    return document


def layout_to_hh(instance):
    """
    Builds the disk whose faces are the vertices of the plane graph of
    *instance*: every face of the graph except the outer one becomes a
    vertex, every edge crosses its dual edge, and the outer face is drilled
    into a hole whose boundary of weight zero is split into the arcs from
    ``s`` to ``t`` and back. Returns a :class:`LayoutReduction` mapping the
    internal faces of the disk to the vertices of the graph.
    """
    outer_index = next(i for i, f in enumerate(instance.faces)
                       if same_cycle(f, instance.outer))
    outer = instance.faces[outer_index]
    taken = set(instance.edges)
    names = {}
    others = sorted(f for i, f in enumerate(instance.faces)
                    if i != outer_index)
    vertices = []
    for n, face in enumerate(others):
        names[face] = 'x%d' % n
        vertices.append(names[face])
    holes = ['h%d' % i for i in range(len(outer))]
    s, t = _fresh('s', set(vertices) | set(holes)), None
    t = _fresh('t', set(vertices) | set(holes) | {s})
    vertices += holes + [s, t]
    left = {}
    for face in others:
        for dart in face:
            left[dart] = names[face]
    for i, dart in enumerate(outer):
        left[dart] = holes[i]
    edges = []
    for edge in instance.edges.values():
        edges.append(Edge(edge.id, (left[(edge.id, True)],
                                    left[(edge.id, False)]), edge.weight))
    rotations = {}
    for face in others:
        rotations[names[face]] = [(d[0], 0 if d[1] else 1) for d in face]
    ring = holes + [s, t]
    cycle = []
    for i, vertex in enumerate(ring):
        after = ring[(i + 1) % len(ring)]
        edge_id = _fresh('L' if vertex == s else 'c%d' % i, taken)
        taken.add(edge_id)
        cycle.append(edge_id)
        edges.append(Edge(edge_id, (vertex, after), Fraction(0)))
    ends = dict((e.id, e.ends) for e in edges)
    hole_walk = tuple((edge_id, False) for edge_id in cycle)
    for option in (0, 1):
        for i, vertex in enumerate(ring):
            entries = [(cycle[i], 0), (cycle[i - 1], 1)]
            if option:
                entries.reverse()
            if i < len(holes):
                dart = outer[i]
                entries.insert(0, (dart[0], 1 if not dart[1] else 0))
            rotations[vertex] = entries
        faces = trace_darts(rotations, ends)
        if (len(vertices) - len(edges) + len(faces) == 2 and any(
                same_cycle(f, hole_walk) or
                same_cycle(f, reverse_darts(hole_walk)) for f in faces)):
            break
    else:
        raise InstanceError('not a sphere embedding', 'drilled hole')
    position = ring.index(s)
    arc = hole_walk[position:position + 1]
    rest = hole_walk[position + 1:] + hole_walk[:position]
    surface = Surface('disk', vertices, edges, rotations, arc, rest,
                      s=s, t=t)
    correspondence = {}
    for face_id in surface.internal_faces:
        walk = surface.face[face_id].darts
        dual = [d for d in walk if d[0] in instance.edges]
        if dual:
            edge_id, reverse = dual[0]
            correspondence[face_id] = instance.edges[edge_id].ends[
                1 if reverse else 0]
        else:
            correspondence[face_id] = instance.vertices[0]
    return LayoutReduction(surface, correspondence)


def solve_layout(instance, **limits):
    """
    Computes a minimum height linear layout of *instance*. The vertex order
    is the order in which the homotopy sweeps the corresponding faces.
    """
    reduction = layout_to_hh(instance)
    certificate = solve_exact(reduction.surface, **limits)
    order = [reduction.correspondence[f]
             for f in is_monotone(certificate).order]
    height = verify_certificate(certificate)
    log.info('layout height %s, order %s', height, ' '.join(order))
    return LayoutResult(order, height, certificate, reduction.surface,
                        reduction.correspondence)
