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
Loading of instance, certificate and corpus documents. All documents are
read with PyYAML, which also accepts their JSON notation. Unquoted decimal
numbers are kept as strings, so weights like ``0.1`` reach
:func:`~score.homotopy.surface.parse_weight` unrounded.
"""

import io
import logging
import urllib.request

import yaml
try:
    from yaml import CSafeLoader as SafeLoader
except ImportError:
    from yaml import SafeLoader

from .generators import generate
from .reductions import parse_frechet, parse_layout
from .surface import InstanceError, parse_instance


log = logging.getLogger(__name__)


class DocumentLoader(SafeLoader):
    pass


DocumentLoader.add_constructor(
    'tag:yaml.org,2002:float',
    lambda loader, node: loader.construct_scalar(node))


def load_document(thing):
    """
    Loads a document from the given *thing*: a file name, a file-like object
    or a URL (anything containing ``:``, except Windows drive letters).
    """
    if isinstance(thing, io.IOBase):
        return _load(thing)
    if not isinstance(thing, str):
        raise InstanceError('malformed document',
                            'could not determine loader to use')
    if ':' in thing and not (len(thing) > 1 and thing[1] == ':'):
        log.debug('loading %s', thing)
        with urllib.request.urlopen(thing) as response:
            return _load(io.TextIOWrapper(response, encoding='utf-8'))
    with open(thing, encoding='utf-8') as file:
        return _load(file)


def _load(file):
    try:
        return yaml.load(file, Loader=DocumentLoader)
    except yaml.YAMLError as e:
        raise InstanceError('malformed document', str(e).splitlines()[0])


def parse_document(document):
    """
    Parses an instance document of any kind: ``annulus`` and ``disk``
    documents become a :class:`~score.homotopy.surface.Surface`, ``frechet``
    and ``layout`` documents the instance types of
    :mod:`score.homotopy.reductions`.
    """
    if not isinstance(document, dict):
        raise InstanceError('malformed document', 'not a mapping')
    kind = document.get('kind')
    if kind == 'frechet':
        return parse_frechet(document)
    if kind == 'layout':
        return parse_layout(document)
    return parse_instance(document)


def load_corpus(thing):
    """
    Loads a corpus: a list whose entries are either instance documents or
    generator specifications of the form ``{'gen': {'family': ...}}``.
    Returns the list of parsed instances.
    """
    documents = load_document(thing)
    if not isinstance(documents, list):
        raise InstanceError('malformed document', 'corpus must be a list')
    instances = []
    for entry in documents:
        if isinstance(entry, dict) and 'gen' in entry:
            entry = generate(entry['gen'])
        instances.append(parse_document(entry))
    log.info('loaded corpus of %d instances', len(instances))
    return instances
