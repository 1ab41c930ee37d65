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

import logging

from score.init import ConfiguredModule, ConfigurationError, parse_bool
import sqlalchemy as sa

from ._session import sessionmaker, QueryRunsMixin
from .certificate import Certificate, certificate_to_document
from .models import Base, Instance, Run
from .oracle import solve_oracle
from .reductions import (
    approx_solve, layout_to_hh, solve_frechet, solve_layout)
from .solver import ResourceLimitExceeded, solve_exact
from .surface import content_hash, format_weight, serialize


log = logging.getLogger(__name__)


DEFAULTS = {
    'max_states': 200000,
    'max_seconds': 0,
    'max_moves': 0,
    'max_edge_copies': 4,
    'oracle_face_cap': 6,
    'oracle_edge_cap': 14,
    'threads': 1,
    'store.url': None,
    'store.record': True,
}


def _parse_int(conf, key, minimum):
    try:
        value = int(conf[key])
    except (TypeError, ValueError):
        raise ConfigurationError(
            'score.homotopy', 'Invalid integer for %s: %r' % (key, conf[key]))
    if value < minimum:
        raise ConfigurationError(
            'score.homotopy', '%s must be at least %d' % (key, minimum))
    return value


def init(confdict):
    """
    Initializes this module acoording to :ref:`our module initialization
    guidelines <module_initialization>` with the following configuration keys:

    :confkey:`max_states` :confdefault:`200000`
        The number of search states the exact solver expands before giving
        up with :class:`~score.homotopy.solver.ResourceLimitExceeded`.

    :confkey:`max_seconds` :confdefault:`0`
        Wall time in seconds the exact solver may spend on one search. The
        default ``0`` means no limit.

    :confkey:`max_moves` :confdefault:`0`
        The maximum length of a homotopy considered by the solver. The
        default ``0`` uses the bound every optimal homotopy fulfills.

    :confkey:`max_edge_copies` :confdefault:`4`
        How often a single level curve may traverse the same edge.

    :confkey:`oracle_face_cap` :confdefault:`6`
        The number of internal faces beyond which the brute force oracle
        refuses to run.

    :confkey:`oracle_edge_cap` :confdefault:`14`
        Same for the number of edges.

    :confkey:`threads` :confdefault:`1`
        Number of worker threads testing candidate curves. Results do not
        depend on this value.

    :confkey:`store.url` :confdefault:`None`
        An sqlalchemy database URL. If present, runs can be recorded in the
        results store.

    :confkey:`store.record` :confdefault:`True`
        Whether the convenience solvers of the configured module record
        their runs automatically when a store is configured.
    """
    conf = DEFAULTS.copy()
    conf.update(confdict)
    limits = {
        'max_states': _parse_int(conf, 'max_states', 1),
        'max_seconds': _parse_int(conf, 'max_seconds', 0),
        'max_moves': _parse_int(conf, 'max_moves', 0),
        'max_edge_copies': _parse_int(conf, 'max_edge_copies', 1),
        'threads': _parse_int(conf, 'threads', 1),
    }
    oracle_caps = {
        'face_cap': _parse_int(conf, 'oracle_face_cap', 0),
        'edge_cap': _parse_int(conf, 'oracle_edge_cap', 0),
    }
    engine = None
    if conf['store.url'] and conf['store.url'] != 'None':
        try:
            engine = sa.create_engine(conf['store.url'])
        except (sa.exc.ArgumentError, ImportError) as e:
            raise ConfigurationError(
                'score.homotopy', 'Invalid store.url: %s' % e)
        if engine.dialect.name == 'sqlite':
            @sa.event.listens_for(engine, "connect")
            def set_sqlite_pragma(dbapi_connection, connection_record):
                cursor = dbapi_connection.cursor()
                cursor.execute("PRAGMA foreign_keys=ON")
                cursor.close()
    record = parse_bool(conf['store.record'])
    return ConfiguredHomotopyModule(limits, oracle_caps, engine, record)


class ConfiguredHomotopyModule(ConfiguredModule):
    """
    This module's :class:`configuration class
    <score.init.ConfiguredModule>`. Its solvers run with the configured
    limits.
    """

    def __init__(self, limits, oracle_caps, engine, record):
        super().__init__('score.homotopy')
        self.limits = limits
        self.oracle_caps = oracle_caps
        self.engine = engine
        self.record_runs = record and engine is not None
        self.session_mixins = {QueryRunsMixin}
        self.Session = None
        if engine is not None:
            self.Session = sessionmaker(self, bind=engine,
                                        expire_on_commit=False)

    def create(self):
        """
        Generates the tables of the results store.
        """
        if self.engine is None:
            raise Exception('No store.url configured')
        Base.metadata.create_all(self.engine)

    def solve_exact(self, surface):
        return self._run('solve', surface, lambda: solve_exact(
            surface, **self.limits))

    def solve_oracle(self, surface, height_cap=None):
        return solve_oracle(
            surface, height_cap, max_states=self.limits['max_states'],
            **self.oracle_caps)

    def approx_solve(self, surface, disk_subsolver=None):
        return self._run('approx', surface, lambda: approx_solve(
            surface, disk_subsolver, **self.limits))

    def solve_frechet(self, instance):
        return self._run('frechet', instance.surface, lambda: solve_frechet(
            instance, **self.limits))

    def solve_layout(self, instance):
        surface = layout_to_hh(instance).surface
        return self._run('layout', surface, lambda: solve_layout(
            instance, **self.limits))

    def _run(self, command, surface, solve):
        try:
            result = solve()
        except ResourceLimitExceeded as e:
            if self.record_runs:
                self.record(command, surface, status='limit', lower=e.lower,
                            upper=e.upper)
            raise
        if self.record_runs:
            if isinstance(result, Certificate):
                certificate, height = result, None
            else:
                certificate, height = result.certificate, result.height
            self.record(command, surface, certificate=certificate,
                        height=height)
        return result

    def record(self, command, surface, *, certificate=None, height=None,
               lower=None, upper=None, status='ok'):
        """
        Stores a :class:`~score.homotopy.models.Run` of *command* on
        *surface* and returns it.
        """
        if self.Session is None:
            raise Exception('No store.url configured')
        if height is None and certificate is not None:
            height = certificate.height()
        key = content_hash(surface)
        session = self.Session()
        try:
            instance = next(session.by_hashes([key]), None)
            if instance is None:
                instance = Instance(hash=key, kind=surface.kind,
                                    document=serialize(surface))
                session.add(instance)
            run = Run(
                instance=instance, command=command, status=status,
                height=None if height is None else format_weight(height),
                lower=None if lower is None else format_weight(lower),
                upper=None if upper is None else format_weight(upper),
                moves=None if certificate is None else len(certificate),
                config=dict(self.limits),
                certificate=None if certificate is None else
                certificate_to_document(certificate, height))
            session.add(run)
            session.commit()
            log.debug('recorded %r', run)
            return run
        finally:
            session.close()
