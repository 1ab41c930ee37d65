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

from .surface import (
    HomotopyError, InstanceError, NoPath, Edge, FaceWalk, Path, DualGraph,
    CutSurface, Surface, parse_instance, serialize, content_hash,
    trace_faces, dual, shortest_path, diameter, cut_along, glue,
    parse_weight, format_weight)
from .curve import (
    InvalidMove, Crossing, FaceFlip, Spike, Unspike, Curve, make_curve,
    curve_from_walk, initial_curve, goal_curve, curve_length, is_simple,
    apply_move, flip_moves, spike_moves, unspike_moves, winding,
    shortest_homotopic_cycle)
from .certificate import (
    CertificateError, NotMonotone, NotAnIsotopy, RetractionError,
    Monotonicity, Certificate, move_bound, verify_certificate, is_monotone,
    reduce_certificate, retract_certificate, certificate_to_document,
    certificate_from_document, trace)
from .solver import (
    ResourceLimitExceeded, Bounds, lower_bounds, solve_ordered, solve_exact)
from .oracle import OracleTooLarge, Infeasible, solve_oracle
from .reductions import (
    FrechetInstance, FrechetAugmentation, FrechetResult, ApproxResult,
    LayoutInstance, LayoutResult, frechet_instance, frechet_to_hh,
    solve_frechet, approx_solve, layout_to_hh, solve_layout)
from .generators import generate
from .dataloader import load_document, load_corpus, parse_document
from ._init import init, ConfiguredHomotopyModule, DEFAULTS

__version__ = '0.1.0'

__all__ = (
    'HomotopyError', 'InstanceError', 'NoPath', 'Edge', 'FaceWalk', 'Path',
    'DualGraph', 'CutSurface', 'Surface', 'parse_instance', 'serialize',
    'content_hash', 'trace_faces', 'dual', 'shortest_path', 'diameter',
    'cut_along', 'glue', 'parse_weight', 'format_weight', 'InvalidMove',
    'Crossing', 'FaceFlip', 'Spike', 'Unspike', 'Curve', 'make_curve',
    'curve_from_walk', 'initial_curve', 'goal_curve', 'curve_length',
    'is_simple', 'apply_move', 'flip_moves', 'spike_moves', 'unspike_moves',
    'winding', 'shortest_homotopic_cycle', 'CertificateError', 'NotMonotone',
    'NotAnIsotopy', 'RetractionError', 'Monotonicity', 'Certificate',
    'move_bound', 'verify_certificate', 'is_monotone', 'reduce_certificate',
    'retract_certificate', 'certificate_to_document',
    'certificate_from_document', 'trace', 'ResourceLimitExceeded', 'Bounds',
    'lower_bounds', 'solve_ordered', 'solve_exact', 'OracleTooLarge',
    'Infeasible', 'solve_oracle', 'FrechetInstance', 'FrechetAugmentation',
    'FrechetResult', 'ApproxResult', 'LayoutInstance', 'LayoutResult',
    'frechet_instance', 'frechet_to_hh', 'solve_frechet', 'approx_solve',
    'layout_to_hh', 'solve_layout', 'generate', 'load_document',
    'load_corpus', 'parse_document', 'init', 'ConfiguredHomotopyModule',
    'DEFAULTS')
