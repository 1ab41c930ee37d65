import json

import pytest
from hypothesis import given, settings, strategies as st

from score.homotopy.generators import (
    generate, parse_weight_model, random_annulus, random_disk,
    random_layout, theta)
from score.homotopy.reductions import parse_layout
from score.homotopy.surface import InstanceError, parse_instance


def test_theta_document():
    document = theta(4, weights=[1, 2, 3, 4])
    assert document['boundary0'] == ['u', 'a', 'v', 'b', 'u']
    assert [e['weight'] for e in document['edges']] == ['1', '2', '3', '4']
    assert len(parse_instance(document).internal_faces) == 2


def test_generate_grid():
    surface = parse_instance(
        generate({'family': 'cylinder-grid', 'rows': 2, 'cols': 3}))
    assert len(surface.vertices) == 9
    assert len(surface.internal_faces) == 6


def test_generate_is_deterministic():
    spec = {'family': 'random-annulus', 'faces': 5, 'seed': 7,
            'weights': 'uniform:1:9'}
    first, second = generate(spec), generate(spec)
    assert json.dumps(first, sort_keys=True) == \
        json.dumps(second, sort_keys=True)


def test_uniform_weights():
    document = random_annulus(3, seed=3, weights=('uniform', 2, 4))
    weights = [int(e['weight']) for e in document['edges']]
    assert all(2 <= w <= 4 for w in weights)


def test_weight_models():
    assert parse_weight_model('unit') == 'unit'
    assert parse_weight_model('uniform:1:5') == ('uniform', 1, 5)
    with pytest.raises(InstanceError):
        parse_weight_model('gaussian')


def test_unknown_family():
    with pytest.raises(InstanceError) as info:
        generate({'family': 'moebius'})
    assert info.value.check == 'unknown generator family'


def test_unknown_parameter():
    with pytest.raises(InstanceError) as info:
        generate({'family': 'theta', 'spokes': 3})
    assert info.value.check == 'invalid generator parameters'


def test_edge_budget():
    with pytest.raises(InstanceError):
        random_annulus(20, max_edges=14)


@settings(deadline=None, max_examples=50)
@given(seed=st.integers(0, 10 ** 6), faces=st.integers(0, 8))
def test_random_annuli_are_valid(seed, faces):
    document = random_annulus(faces, seed=seed)
    surface = parse_instance(document)
    assert len(surface.internal_faces) == faces
    assert len(surface.edges) <= 14


@settings(deadline=None, max_examples=50)
@given(seed=st.integers(0, 10 ** 6), faces=st.integers(1, 6))
def test_random_disks_are_valid(seed, faces):
    surface = parse_instance(random_disk(faces, seed=seed))
    assert surface.kind == 'disk'
    assert len(surface.internal_faces) == faces


@settings(deadline=None, max_examples=50)
@given(seed=st.integers(0, 10 ** 6), n=st.integers(2, 7))
def test_random_layouts_are_valid(seed, n):
    instance = parse_layout(random_layout(n, seed=seed))
    assert len(instance.vertices) == n
