import pytest

from score.homotopy.certificate import trace, verify_certificate
from score.homotopy.generators import cylinder_grid, theta
from score.homotopy.oracle import (
    Infeasible, OracleTooLarge, achievable_lengths, solve_oracle)
from score.homotopy.reductions import layout_to_hh, solve_layout
from score.homotopy.solver import solve_exact
from score.homotopy.surface import parse_instance


def test_achievable_lengths(theta_surface):
    lengths = achievable_lengths(theta_surface, 1)
    assert lengths == [0, 1, 2, 3, 4, 5, 6]
    assert achievable_lengths(theta_surface, 2, upper=3)[-1] == 3


def test_achievable_lengths_without_copy_limit(unit_theta):
    assert achievable_lengths(unit_theta, upper=5) == [0, 1, 2, 3, 4, 5]
    with pytest.raises(ValueError):
        achievable_lengths(unit_theta)


def test_theta(theta_surface):
    assert solve_oracle(theta_surface) == 4
    assert solve_oracle(theta_surface, '4') == 4


def test_cap_below_height(theta_surface):
    with pytest.raises(Infeasible) as info:
        solve_oracle(theta_surface, 3)
    assert str(info.value) == 'infeasible under cap'


def test_small_grid(small_grid):
    assert solve_oracle(small_grid) == 5


def test_too_large(grid):
    with pytest.raises(OracleTooLarge) as info:
        solve_oracle(grid)
    assert str(info.value) == 'instance too large for oracle'


def test_disk(disk_surface):
    assert solve_oracle(disk_surface) == 3


def test_zero_weights():
    surface = parse_instance(theta(3, weights=[0, 0, 0]))
    assert solve_oracle(surface) == 0
    assert verify_certificate(solve_exact(surface)) == 0


def _zero_weight_copies(certificate):
    weightless = set(e.id for e in certificate.surface.edges.values()
                     if not e.weight)
    copies = 1
    for _, curve, _, _ in trace(certificate):
        for edge_id, count in curve.copies().items():
            if edge_id in weightless:
                copies = max(copies, count)
    return copies


@pytest.mark.slow
def test_star_layout(star3):
    layout = solve_layout(star3)
    surface = layout_to_hh(star3).surface
    assert len(surface.edges) == len(layout.surface.edges)
    # the oracle may use zero weight edges as often as the layout did
    copies = _zero_weight_copies(layout.certificate)
    height = solve_oracle(layout.surface, zero_weight_copies=copies)
    assert height == layout.height


@pytest.mark.slow
def test_unit_grid_3x3():
    surface = parse_instance(cylinder_grid(3, 3))
    assert len(surface.internal_faces) == 9
    assert len(surface.edges) == 21
    assert verify_certificate(solve_exact(surface)) == 5
    assert solve_oracle(surface, face_cap=9, edge_cap=21,
                        max_states=10 ** 6) == 5


@pytest.mark.slow
def test_exact_matches_oracle_on_annuli(corpus_annulus, solved):
    height = verify_certificate(solved(corpus_annulus))
    assert height == solve_oracle(corpus_annulus)


@pytest.mark.slow
def test_exact_matches_oracle_on_disks(corpus_disk, solved):
    height = verify_certificate(solved(corpus_disk))
    assert height == solve_oracle(corpus_disk)
