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

import sqlalchemy.orm.session

from .models import Instance


class RunsNotFound(Exception):
    """
    Thrown by :meth:`.QueryRunsMixin.by_hashes` if any of the given content
    hashes is not in the store.
    """
    pass


class QueryRunsMixin:
    """
    A mixin for sqlalchemy :class:`session <sqlalchemy.orm.session.Session>`
    classes adding lookups by content hash.
    """

    def __init__(self, *args, **kwargs):
        pass

    def by_hashes(self, hashes, *, ignore_missing=True):
        """
        Yields the stored :class:`~score.homotopy.models.Instance` objects
        with the given content *hashes*, in the order of *hashes*::

          for instance in session.by_hashes(corpus_hashes):
              print(instance.runs[-1].height)

        If *ignore_missing* evaluates to `False`, a :class:`RunsNotFound`
        exception listing the missing hashes is raised instead.
        """
        hashes = list(hashes)
        if not ignore_missing:
            rows = self.query(Instance.hash).\
                filter(Instance.hash.in_(hashes)).all()
            existing = set(row[0] for row in rows)
            missing = [h for h in hashes if h not in existing]
            if missing:
                raise RunsNotFound(missing)
        chunk_size = 20
        while hashes:
            chunk, hashes = hashes[:chunk_size], hashes[chunk_size:]
            result = dict(self.query(Instance.hash, Instance).
                          filter(Instance.hash.in_(chunk)))
            for key in chunk:
                try:
                    yield result[key]
                except KeyError:
                    pass


def sessionmaker(conf, *args, **kwargs):
    """
    Wrapper around sqlalchemy's :func:`sessionmaker
    <sqlalchemy.orm.sessionmaker>` that adds the session mixins of the
    :class:`~score.homotopy.ConfiguredHomotopyModule` *conf* to the session
    class. All other arguments are passed to the wrapped function.
    """
    base = kwargs.get('class_', sqlalchemy.orm.session.Session)
    bases = (base,) + tuple(conf.session_mixins)

    def __init__(self, *args, **kwargs):
        self.conf = conf
        for base in bases:
            base.__init__(self, *args, **kwargs)

    ConfiguredSession = type('ConfiguredSession', bases, {
        '__init__': __init__
    })
    kwargs['class_'] = ConfiguredSession
    return sqlalchemy.orm.sessionmaker(*args, **kwargs)
