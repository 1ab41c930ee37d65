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
SVG frames of a sweep, one per level curve. Annuli are drawn as concentric
rings of vertices (the first boundary innermost), disks as rows starting at
the first boundary arc.
"""

import math
import os

import networkx as nx
import svgwrite

from .certificate import trace, verify_certificate
from .surface import format_weight


SIZE = 480
MARGIN = 40


def _layers(surface):
    graph = nx.MultiGraph()
    graph.add_nodes_from(surface.vertices)
    graph.add_edges_from(e.ends for e in surface.edges.values())
    if surface.kind == 'annulus':
        start = [surface.tail(d) for d in surface.boundary0]
    else:
        start = [surface.s] + [surface.head(d) for d in surface.boundary0]
    first = list(dict.fromkeys(start))
    depth = nx.multi_source_dijkstra_path_length(graph, set(first),
                                                 weight=lambda *a: 1)
    layers = [first]
    for vertex in sorted(surface.vertices, key=lambda v: (depth[v], v)):
        if vertex in first:
            continue
        while len(layers) <= depth[vertex]:
            layers.append([])
        layers[depth[vertex]].append(vertex)
    return graph, [layer for layer in layers if layer]


def layout(surface):
    """
    Returns a deterministic position for every vertex of *surface*. Vertices
    of later layers are ordered by the mean position of their neighbours in
    the previous layer.
    """
    graph, layers = _layers(surface)
    annulus = surface.kind == 'annulus'
    center = SIZE / 2
    positions = {}
    slot = {}
    for depth, layer in enumerate(layers):
        if depth:
            def key(vertex):
                known = [slot[n] for n in graph.neighbors(vertex)
                         if n in slot]
                return (sum(known) / len(known) if known else 1.0, vertex)
            layer = sorted(layer, key=key)
        for i, vertex in enumerate(layer):
            fraction = (i + 0.5) / len(layer)
            slot[vertex] = fraction
            if annulus:
                radius = 30 + (center - MARGIN - 30) * (
                    (depth + 1) / len(layers))
                angle = 2 * math.pi * fraction
                positions[vertex] = (center + radius * math.cos(angle),
                                     center - radius * math.sin(angle))
            else:
                step = (SIZE - 2 * MARGIN) / max(1, len(layers) - 1)
                positions[vertex] = (MARGIN + fraction * (SIZE - 2 * MARGIN),
                                     SIZE - MARGIN - depth * step)
    return positions


def _bend(positions, edge, parallel, offset=0.0):
    (x0, y0), (x1, y1) = positions[edge.ends[0]], positions[edge.ends[1]]
    if edge.ends[0] == edge.ends[1]:
        return [(x0, y0), (x0 + 12, y0 - 18), (x0 - 12, y0 - 18), (x0, y0)]
    dx, dy = x1 - x0, y1 - y0
    norm = math.hypot(dx, dy) or 1.0
    bend = 14 * parallel + offset
    middle = ((x0 + x1) / 2 - dy / norm * bend,
              (y0 + y1) / 2 + dx / norm * bend)
    return [(x0, y0), middle, (x1, y1)]


def _parallel_index(surface):
    seen = {}
    index = {}
    for edge_id in sorted(surface.edges):
        pair = tuple(sorted(surface.edges[edge_id].ends))
        count = seen.get(pair, 0)
        index[edge_id] = (count + 1) // 2 * (1 if count % 2 else -1)
        seen[pair] = count + 1
    return index


def frame(surface, curve, step, length, running_max, positions=None):
    """
    Draws a single level *curve* and returns the :class:`svgwrite.Drawing`.
    """
    if positions is None:
        positions = layout(surface)
    parallel = _parallel_index(surface)
    dwg = svgwrite.Drawing(profile='full', size=(SIZE, SIZE))
    edges = dwg.g(id='edges', stroke='#999', fill='none', stroke_width=1)
    for edge_id in sorted(surface.edges):
        edge = surface.edges[edge_id]
        edges.add(dwg.polyline(
            points=_bend(positions, edge, parallel[edge_id]),
            id='edge-%s' % edge_id))
    dwg.add(edges)
    lanes = dwg.g(id='curve', stroke='#d11', fill='none', stroke_width=2)
    for crossing in curve.crossings:
        edge = surface.edges[crossing.edge]
        points = _bend(positions, edge, parallel[crossing.edge],
                       3 * (crossing.rank + 1))
        if crossing.reverse:
            points.reverse()
        lanes.add(dwg.polyline(points=points))
    dwg.add(lanes)
    dots = dwg.g(id='vertices', fill='#222', stroke='none')
    for vertex in surface.vertices:
        dots.add(dwg.circle(center=positions[vertex], r=3))
    dwg.add(dots)
    if not curve.crossings:
        dwg.add(dwg.circle(center=positions[curve.start], r=5,
                           fill='#d11', id='point-curve'))
    dwg.add(dwg.text(
        'step %d  length %s  max %s' % (
            step, format_weight(length), format_weight(running_max)),
        insert=(MARGIN / 2, MARGIN / 2), font_size=14, id='label'))
    return dwg


def render(cert):
    """
    Verifies *cert* and returns one drawing per level curve.
    """
    verify_certificate(cert)
    positions = layout(cert.surface)
    return [frame(cert.surface, curve, step, length, best, positions)
            for step, curve, length, best in trace(cert)]


def render_to(cert, directory):
    """
    Writes the frames of *cert* to ``frame-NNNN.svg`` files in *directory*
    and returns their paths.
    """
    os.makedirs(directory, exist_ok=True)
    paths = []
    for step, drawing in enumerate(render(cert)):
        path = os.path.join(directory, 'frame-%04d.svg' % step)
        drawing.saveas(path)
        paths.append(path)
    return paths
