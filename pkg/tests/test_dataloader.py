import io
import json
import os
import re
from fractions import Fraction

import pytest

from score.homotopy.dataloader import (
    load_corpus, load_document, parse_document)
from score.homotopy.generators import (
    path_layout, random_disk, square_frechet, theta)
from score.homotopy.reductions import FrechetInstance, LayoutInstance
from score.homotopy.surface import InstanceError, Surface, format_weight


THETA_YAML = """
kind: annulus
vertices: [u, v]
edges:
  - {id: a, ends: [u, v], weight: 0.5}
  - {id: b, ends: [u, v], weight: 1.25}
  - {id: c, ends: [u, v]}
rotations:
  u: [a, b, c]
  v: [c, b, a]
boundary0: [u, a, v, b, u]
boundary1: [u, c, v, a, u]
"""


def test_decimal_weights_stay_exact():
    document = load_document(io.StringIO(THETA_YAML))
    assert document['edges'][0]['weight'] == '0.5'
    surface = parse_document(document)
    assert isinstance(surface, Surface)
    assert surface.weight('a') == Fraction(1, 2)
    assert surface.weight('b') == Fraction(5, 4)
    assert surface.weight('c') == 1


def test_load_from_path(tmp_path):
    path = tmp_path / 'theta.yaml'
    path.write_text(THETA_YAML)
    assert load_document(str(path))['kind'] == 'annulus'


def test_json_is_yaml(tmp_path, theta_document):
    path = tmp_path / 'theta.json'
    path.write_text(json.dumps(theta_document))
    surface = parse_document(load_document(str(path)))
    assert surface.total_weight == 6


def test_malformed_yaml():
    with pytest.raises(InstanceError) as info:
        load_document(io.StringIO('kind: [annulus'))
    assert info.value.check == 'malformed document'


def test_dispatch_by_kind():
    assert isinstance(parse_document(square_frechet()), FrechetInstance)
    assert isinstance(parse_document(path_layout(3)), LayoutInstance)
    with pytest.raises(InstanceError):
        parse_document({'kind': 'torus'})


def test_corpus(tmp_path, theta_document):
    single = tmp_path / 'theta.json'
    single.write_text(json.dumps(theta_document))
    corpus = tmp_path / 'corpus.yaml'
    corpus.write_text(
        '- %s\n'
        '- gen: {family: cylinder-grid, rows: 1, cols: 4}\n'
        '- gen: {family: square-frechet}\n' % json.dumps(theta_document))
    instances = load_corpus(str(corpus))
    assert len(instances) == 3
    assert isinstance(instances[0], Surface)
    assert len(instances[1].internal_faces) == 4
    assert isinstance(instances[2], FrechetInstance)


SCHEMA = os.path.join(os.path.dirname(__file__), os.pardir, 'docs',
                      'instance.schema.json')


@pytest.fixture(scope='module')
def schema():
    return load_document(SCHEMA)


def _required(schema, kind):
    for variant in schema['oneOf']:
        if variant['properties']['kind']['const'] == kind:
            return set(schema['required']) | set(variant['required'])


@pytest.mark.parametrize('document', [
    theta(3), random_disk(2, seed=1, max_edges=6), square_frechet(),
    path_layout(3)], ids=['annulus', 'disk', 'frechet', 'layout'])
def test_documents_follow_schema(schema, document):
    assert document['kind'] in schema['properties']['kind']['enum']
    assert _required(schema, document['kind']) <= set(document)
    for edge in document['edges']:
        assert set(schema['definitions']['edge']['required']) <= set(edge)
        assert len(edge['ends']) == 2


def test_weight_pattern(schema):
    pattern = re.compile(
        schema['definitions']['weight']['oneOf'][1]['pattern'])
    for weight in (Fraction(1, 2), Fraction(1, 3), 7, Fraction(5, 4)):
        assert pattern.match(format_weight(weight))
    for text in ('0.5', '.25', '3/4', ' 2 '):
        assert pattern.match(text)
    for text in ('-1', '1/0', 'one', '1e3'):
        assert not pattern.match(text)
