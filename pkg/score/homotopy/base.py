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

import re
import sqlalchemy as sa
try:
    from sqlalchemy.orm import declarative_base
except ImportError:
    from sqlalchemy.ext.declarative import declarative_base
try:
    from sqlalchemy.orm.decl_api import DeclarativeMeta
except ImportError:
    from sqlalchemy.ext.declarative.api import DeclarativeMeta


IdType = sa.BigInteger()
IdType = IdType.with_variant(sa.Integer, 'sqlite')


_first_cap_re = re.compile('(.)([A-Z][a-z]+)')
_all_cap_re = re.compile('([a-z0-9])([A-Z])')


def cls2tbl(cls):
    """
    Converts a class (or a class name) in *CamelCase* to a table name
    *separated_by_underscores*, prefixed with an underscore.
    """
    if isinstance(cls, type):
        cls = cls.__name__
    s1 = _first_cap_re.sub(r'\1_\2', cls)
    return '_' + _all_cap_re.sub(r'\1_\2', s1).lower()


def tbl2cls(tbl):
    """
    Inverse of :func:`.cls2tbl`. Returns the name of a class.
    """
    if tbl[0] == '_':
        tbl = tbl[1:]
    return ''.join(part.capitalize() for part in tbl.split('_'))


class BaseMeta(DeclarativeMeta):
    """
    Metaclass of the results store base class: derives the ``__tablename__``
    from the class name and adds an integer ``id`` primary key unless the
    class defines one.
    """

    def __init__(cls, classname, bases, attrs):
        if hasattr(cls, '__score_homotopy__') and \
                '__tablename__' not in attrs:
            cls.__tablename__ = attrs['__tablename__'] = cls2tbl(classname)
            if 'id' not in attrs:
                id_type = cls.__score_homotopy__['id_type']
                cls.id = attrs['id'] = sa.Column(id_type, primary_key=True)
        DeclarativeMeta.__init__(cls, classname, bases, attrs)


def create_base(*, id_type=IdType):
    """
    Returns a declarative base class for the results store. The type of the
    generated ``id`` columns can be changed with *id_type*.
    """
    Base = declarative_base(metaclass=BaseMeta)
    Base.__score_homotopy__ = {
        'id_type': id_type,
    }
    return Base
