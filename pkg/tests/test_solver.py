from collections import Counter
import itertools

import pytest

from score.homotopy.certificate import (
    Certificate, is_monotone, move_bound, verify_certificate)
from score.homotopy.curve import FaceFlip, Spike, Unspike
from score.homotopy.generators import cylinder_grid, theta
from score.homotopy import solver
from score.homotopy.solver import (
    SPIKES_PER_SEGMENT, ResourceLimitExceeded, lower_bounds, solve_exact)
from score.homotopy.surface import parse_instance, serialize


def test_lower_bounds(theta_surface):
    bounds = lower_bounds(theta_surface)
    assert bounds.lower == 4
    components = dict(bounds.components)
    assert components['gamma0'] == 3
    assert components['gamma1'] == 4
    assert components['half_face'] == 2.5
    assert components['diameter'] == 1


def test_grid_lower_bound(grid):
    assert lower_bounds(grid).lower == 3


def test_theta(theta_surface):
    cert = solve_exact(theta_surface)
    assert verify_certificate(cert) == 4
    assert is_monotone(cert).order == ['F0']


def test_unit_theta():
    surface = parse_instance(theta(5))
    assert verify_certificate(solve_exact(surface)) == 2


@pytest.mark.parametrize('rows, cols', [(1, 3), (2, 3), (1, 4)])
def test_unit_grid(rows, cols):
    surface = parse_instance(cylinder_grid(rows, cols))
    cert = solve_exact(surface)
    assert verify_certificate(cert) == cols + 2
    monotonicity = is_monotone(cert)
    assert monotonicity.monotone
    assert sorted(monotonicity.order) == sorted(surface.internal_faces)
    assert len(cert) <= move_bound(surface)


def test_disk(disk_surface):
    cert = solve_exact(disk_surface)
    assert verify_certificate(cert) == 3
    assert len(cert) == 2


def test_scaling(theta_surface):
    tripled = theta_surface.scaled(3)
    assert verify_certificate(solve_exact(tripled)) == 12


def test_height_at_least_lower_bound(small_grid):
    cert = solve_exact(small_grid)
    assert verify_certificate(cert) >= lower_bounds(small_grid).lower


def test_spikes_per_segment(small_grid):
    cert = solve_exact(small_grid)
    spikes = Counter()
    for move in cert.moves:
        if isinstance(move, FaceFlip):
            spikes.clear()
        elif isinstance(move, Spike):
            spikes[move.edge] += 1
            assert spikes[move.edge] <= SPIKES_PER_SEGMENT
        else:
            assert isinstance(move, Unspike)


def test_state_limit(grid):
    with pytest.raises(ResourceLimitExceeded) as info:
        solve_exact(grid, max_states=3)
    error = info.value
    assert str(error) == 'state limit exceeded'
    assert 3 <= error.lower <= 5 <= error.upper
    assert verify_certificate(error.partial) == error.upper
    assert is_monotone(error.partial).monotone


def test_time_limit(grid, monkeypatch):
    ticks = itertools.count()
    monkeypatch.setattr(solver.time, 'monotonic', lambda: next(ticks))
    with pytest.raises(ResourceLimitExceeded) as info:
        solve_exact(grid, max_seconds=5)
    error = info.value
    assert str(error) == 'time limit exceeded'
    assert error.lower >= 3
    assert error.partial.height() >= 3


def test_threads_do_not_change_result(small_grid):
    one = solve_exact(small_grid)
    two = solve_exact(small_grid, threads=2)
    assert one.moves == two.moves


def _swapped(surface):
    document = serialize(surface)
    document['boundary0'], document['boundary1'] = (
        document['boundary1'], document['boundary0'])
    if surface.kind == 'disk':
        document['s'], document['t'] = document['t'], document['s']
    return parse_instance(document)


def test_swapped_boundaries(theta_surface, disk_surface):
    for surface in (theta_surface, disk_surface):
        swapped = _swapped(surface)
        assert (verify_certificate(solve_exact(swapped)) ==
                verify_certificate(solve_exact(surface)))


@pytest.mark.slow
def test_structure_of_solutions(corpus_surface, solved):
    cert = solved(corpus_surface)
    height = verify_certificate(cert)
    assert height == cert.height()
    assert lower_bounds(corpus_surface).lower <= height
    monotonicity = is_monotone(cert)
    assert monotonicity.monotone
    flipped = Counter(m.face for m in cert.moves if isinstance(m, FaceFlip))
    assert flipped == Counter(corpus_surface.internal_faces)
    assert len(cert) <= move_bound(corpus_surface)
    spikes = Counter()
    for move in cert.moves:
        if isinstance(move, FaceFlip):
            spikes.clear()
        elif isinstance(move, Spike):
            spikes[move.edge] += 1
            assert spikes[move.edge] <= SPIKES_PER_SEGMENT


@pytest.mark.slow
def test_swap_invariance(corpus_surface, solved):
    height = verify_certificate(solved(corpus_surface))
    swapped = _swapped(corpus_surface)
    assert verify_certificate(solved(swapped)) == height


@pytest.mark.slow
def test_scaling_on_corpus(corpus_surface, solved):
    cert = solved(corpus_surface)
    height = verify_certificate(cert)
    tripled = corpus_surface.scaled(3)
    assert verify_certificate(solved(tripled)) == 3 * height
    replayed = Certificate(tripled, None, cert.moves)
    assert verify_certificate(replayed) == 3 * height
