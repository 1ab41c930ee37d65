import pytest

from score.homotopy.generators import (
    cylinder_grid, generate, path_layout, square_frechet, star_layout, theta)
from score.homotopy.reductions import parse_frechet, parse_layout
from score.homotopy.solver import solve_exact
from score.homotopy.surface import content_hash, parse_instance


def pytest_configure(config):
    config.addinivalue_line('markers', 'slow: long running corpus checks')


def _annulus_spec(seed):
    faces = seed % 7
    return {'family': 'random-annulus', 'faces': faces, 'seed': seed,
            'weights': ('uniform', 1, 3),
            'max_edges': faces + (6 if faces < 5 else 4)}


def _disk_spec(seed):
    faces = 1 + seed % 4
    return {'family': 'random-disk', 'faces': faces, 'seed': seed,
            'weights': ('uniform', 1, 3), 'max_edges': faces + 6}


def _frechet_spec(seed):
    faces = 1 + seed % 3
    return {'family': 'random-frechet', 'faces': faces, 'seed': seed,
            'weights': ('uniform', 1, 3), 'max_edges': faces + 6}


def _layout_spec(seed):
    return {'family': 'random-layout', 'n': 2 + seed % 5, 'seed': seed,
            'weights': ('uniform', 1, 3), 'max_edges': 8}


ANNULI = [_annulus_spec(seed) for seed in range(200)]
DISKS = [_disk_spec(seed) for seed in range(60)]
FRECHETS = [_frechet_spec(seed) for seed in range(50)]
LAYOUTS = [_layout_spec(seed) for seed in range(50)]


def _spec_id(spec):
    size = spec.get('faces', spec.get('n'))
    return '%s-%s-%d' % (spec['family'], size, spec['seed'])


@pytest.fixture(params=ANNULI, ids=_spec_id)
def corpus_annulus(request):
    return parse_instance(generate(request.param))


@pytest.fixture(params=DISKS, ids=_spec_id)
def corpus_disk(request):
    return parse_instance(generate(request.param))


@pytest.fixture(params=ANNULI + DISKS, ids=_spec_id)
def corpus_surface(request):
    return parse_instance(generate(request.param))


@pytest.fixture(params=FRECHETS, ids=_spec_id)
def corpus_frechet(request):
    return parse_frechet(generate(request.param))


@pytest.fixture(params=LAYOUTS, ids=_spec_id)
def corpus_layout(request):
    return parse_layout(generate(request.param))


@pytest.fixture(scope='session')
def solved():
    """
    :func:`solve_exact` with results shared by all tests of a session.
    """
    cache = {}

    def solve(surface):
        key = content_hash(surface)
        if key not in cache:
            cache[key] = solve_exact(surface)
        return cache[key]
    return solve


@pytest.fixture
def theta_document():
    return theta(3, weights=[1, 2, 3])


@pytest.fixture
def theta_surface(theta_document):
    return parse_instance(theta_document)


@pytest.fixture
def unit_theta():
    return parse_instance(theta(3))


@pytest.fixture
def small_grid():
    return parse_instance(cylinder_grid(1, 3))


@pytest.fixture
def grid():
    return parse_instance(cylinder_grid(2, 3))


@pytest.fixture
def disk_document():
    """
    Three parallel s-t edges; the boundary consists of ``a`` and ``b``.
    """
    return {
        'kind': 'disk',
        'vertices': ['s', 't'],
        'edges': [
            {'id': 'a', 'ends': ['s', 't'], 'weight': '1'},
            {'id': 'b', 'ends': ['s', 't'], 'weight': '2'},
            {'id': 'c', 'ends': ['s', 't'], 'weight': '3'},
        ],
        'rotations': {'s': ['a', 'b', 'c'], 't': ['c', 'b', 'a']},
        'boundary0': ['s', 'a', 't'],
        'boundary1': ['t', 'b', 's'],
        's': 's',
        't': 't',
    }


@pytest.fixture
def disk_surface(disk_document):
    return parse_instance(disk_document)


@pytest.fixture
def square():
    return parse_frechet(square_frechet())


@pytest.fixture
def path3():
    return parse_layout(path_layout(3))


@pytest.fixture
def star3():
    return parse_layout(star_layout(3))
