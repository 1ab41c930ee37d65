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
Tables of the results store. Every solver run is recorded with a snapshot of
the configuration it ran with, so batches over a corpus can be compared
later.
"""

from datetime import datetime

import sqlalchemy as sa
from sqlalchemy.orm import relationship

from .base import create_base


Base = create_base()


class Instance(Base):
    """
    An instance document, identified by its content hash.
    """

    hash = sa.Column(sa.String(64), nullable=False, unique=True)
    kind = sa.Column(sa.String(16), nullable=False)
    document = sa.Column(sa.JSON, nullable=False)
    runs = relationship('Run', back_populates='instance',
                        order_by='Run.id')

    def __repr__(self):
        return '<Instance %s %s>' % (self.kind, self.hash[:12])


class Run(Base):
    """
    A single command run on an :class:`Instance`. Heights are stored in the
    exact notation of :func:`~score.homotopy.surface.format_weight`; *status*
    is ``ok``, ``limit`` or ``error``.
    """

    instance_id = sa.Column(sa.Integer, sa.ForeignKey('_instance.id'),
                            nullable=False)
    instance = relationship(Instance, back_populates='runs')
    command = sa.Column(sa.String(32), nullable=False)
    status = sa.Column(sa.String(16), nullable=False, default='ok')
    height = sa.Column(sa.String(64))
    lower = sa.Column(sa.String(64))
    upper = sa.Column(sa.String(64))
    moves = sa.Column(sa.Integer)
    config = sa.Column(sa.JSON)
    certificate = sa.Column(sa.JSON)
    created = sa.Column(sa.DateTime, nullable=False, default=datetime.utcnow)

    def __repr__(self):
        return '<Run %s %s height=%s>' % (self.command, self.status,
                                          self.height)
