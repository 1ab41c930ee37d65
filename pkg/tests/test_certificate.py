import functools

import pytest
from hypothesis import given, settings, strategies as st

from score.homotopy.certificate import (
    Certificate, CertificateError, NotMonotone, RetractionError,
    certificate_from_document, certificate_to_document, is_monotone,
    move_bound, reduce_certificate, retract_certificate, trace,
    verify_certificate)
from score.homotopy.curve import (
    FaceFlip, InvalidMove, Spike, apply_move, curve_from_walk, flip_moves,
    goal_key, initial_curve, reversed_curve, shortest_homotopic_cycle,
    unspike_moves)
from score.homotopy.generators import (
    cylinder_grid, random_annulus, random_disk)
from score.homotopy.solver import solve_exact
from score.homotopy.surface import parse_instance


@pytest.fixture
def flip(theta_surface):
    return Certificate(theta_surface, None, [FaceFlip('F0', 1, 1)])


def test_verify(flip):
    assert verify_certificate(flip) == 4
    assert flip.height() == 4
    assert len(flip.curves()) == 2


def test_wrong_terminal_curve(theta_surface):
    with pytest.raises(CertificateError) as info:
        verify_certificate(Certificate(theta_surface))
    assert str(info.value) == 'wrong terminal curve'


def test_wrong_initial_curve(theta_surface):
    other = curve_from_walk(theta_surface, ['u', 'b', 'v', 'c', 'u'])
    with pytest.raises(CertificateError):
        verify_certificate(Certificate(theta_surface, other, []))


def test_invalid_step(theta_surface):
    cert = Certificate(theta_surface, None, [FaceFlip('F0', 7, 1)])
    with pytest.raises(InvalidMove) as info:
        verify_certificate(cert)
    assert info.value.step == 0
    assert str(info.value).startswith('invalid move at step 0')


def test_move_bound(theta_surface, grid):
    assert move_bound(theta_surface) == 99
    assert move_bound(grid) == 8 * 15 * 9 + 8


def test_monotone(flip):
    monotonicity = is_monotone(flip)
    assert monotonicity.monotone
    assert monotonicity.order == ['F0']


def test_trace(flip):
    rows = list(trace(flip))
    assert [r[0] for r in rows] == [0, 1]
    assert [r[2] for r in rows] == [3, 4]
    assert rows[-1][3] == 4


def _detour_certificate(surface):
    start = initial_curve(surface)
    spiked = apply_move(start, Spike(0, 'c'))
    undo = next(m for m, r in unspike_moves(spiked)
                if r.walk_key == start.walk_key)
    return Certificate(surface, None,
                       [Spike(0, 'c'), undo, FaceFlip('F0', 1, 1)])


def test_reduce_cancels_detours(theta_surface):
    cert = _detour_certificate(theta_surface)
    assert verify_certificate(cert) == 9
    reduced = reduce_certificate(cert)
    assert len(reduced) == 1
    assert verify_certificate(reduced) == 4


def test_reduce_is_idempotent(small_grid):
    cert = solve_exact(small_grid)
    again = reduce_certificate(cert)
    assert again.moves == cert.moves
    assert verify_certificate(again) == verify_certificate(cert)


def test_document_round_trip(flip, theta_surface):
    document = certificate_to_document(flip, 4)
    assert document['height'] == '4'
    assert document['initial'] == ['u', 'a', 'v', 'b', 'u']
    assert document['moves'] == [
        {'flip': {'face': 'F0', 'at': 1, 'len': 1}}]
    again = certificate_from_document(theta_surface, document)
    assert verify_certificate(again) == 4


def test_document_for_other_surface(flip, unit_theta):
    document = certificate_to_document(flip)
    with pytest.raises(CertificateError) as info:
        certificate_from_document(unit_theta, document)
    assert str(info.value) == 'surface hash mismatch'


def test_malformed_move(theta_surface, flip):
    document = certificate_to_document(flip)
    document['moves'] = [{'twist': {}}]
    with pytest.raises(CertificateError):
        certificate_from_document(theta_surface, document)


def test_retract_to_boundary_is_identity(flip, theta_surface):
    alpha = initial_curve(theta_surface)
    assert retract_certificate(flip, alpha) is flip


def test_retract_through_middle_ring(grid):
    cert = solve_exact(grid)
    alpha = curve_from_walk(
        grid, ['1.0', 'h1.0', '1.1', 'h1.1', '1.2', 'h1.2', '1.0'])
    retracted = retract_certificate(cert, alpha)
    assert verify_certificate(retracted) <= verify_certificate(cert)
    keys = set(c.walk_key for c in retracted.curves())
    assert {alpha.walk_key, reversed_curve(alpha).walk_key} & keys
    assert is_monotone(retracted).monotone


def test_retract_rejects_long_cycles(theta_surface, flip):
    alpha = curve_from_walk(theta_surface, ['u', 'a', 'v', 'c', 'u'])
    with pytest.raises(RetractionError):
        retract_certificate(flip, alpha)



def test_flipping_back_is_not_monotone(flip, theta_surface):
    goal = flip.curves()[-1]
    back = next(m for m, r in flip_moves(goal, ['F0'], (False,))
                if r.walk_key == initial_curve(theta_surface).walk_key)
    moves = flip.moves + [back] + flip.moves
    cert = Certificate(theta_surface, None, moves)
    assert verify_certificate(cert) == 4
    assert is_monotone(cert).monotone is False
    with pytest.raises(NotMonotone):
        reduce_certificate(cert)


def test_reduce_absorbs_spike_into_flip(theta_surface):
    start = initial_curve(theta_surface)
    spiked = apply_move(start, Spike(0, 'c'))
    assert spiked.length == 9
    flip = next(m for m, r in flip_moves(spiked, ['F0'], (True,))
                if r.walk_key == goal_key(theta_surface))
    cert = Certificate(theta_surface, None, [Spike(0, 'c'), flip])
    assert verify_certificate(cert) == 9
    reduced = reduce_certificate(cert)
    assert len(reduced) == 1
    assert isinstance(reduced.moves[0], FaceFlip)
    assert verify_certificate(reduced) == 4


@pytest.mark.slow
def test_reduce_on_corpus(corpus_surface, solved):
    cert = solved(corpus_surface)
    again = reduce_certificate(cert)
    assert verify_certificate(again) <= verify_certificate(cert)
    assert len(again) <= len(cert)
    assert reduce_certificate(again).moves == again.moves


def _ring(rows, cols, r):
    walk = ['%d.0' % r]
    for c in range(cols):
        walk += ['h%d.%d' % (r, c), '%d.%d' % (r, (c + 1) % cols)]
    return walk


@pytest.mark.slow
@pytest.mark.parametrize('rows,cols', [
    (1, 3), (2, 3), (2, 4), (3, 3), (3, 4), (4, 4)])
def test_retract_on_grids(rows, cols):
    surface = parse_instance(cylinder_grid(rows, cols))
    cert = solve_exact(surface)
    height = verify_certificate(cert)
    assert height == cols + 2
    first = curve_from_walk(surface, _ring(rows, cols, 0))
    assert retract_certificate(cert, first) is cert
    for r in range(1, rows):
        alpha = curve_from_walk(surface, _ring(rows, cols, r))
        assert alpha.length == shortest_homotopic_cycle(surface, '%d.0' % r)
        retracted = retract_certificate(cert, alpha)
        assert verify_certificate(retracted) <= height
        assert is_monotone(retracted).monotone
        keys = set(c.walk_key for c in retracted.curves())
        assert {alpha.walk_key, reversed_curve(alpha).walk_key} & keys


@functools.lru_cache()
def _certificate(name):
    documents = {
        'grid': cylinder_grid(1, 4),
        'tall': cylinder_grid(2, 3),
        'weighted': random_annulus(3, seed=7, weights=('uniform', 1, 3),
                                   max_edges=9),
        'disk': random_disk(2, seed=3, weights=('uniform', 1, 3),
                            max_edges=8),
    }
    return solve_exact(parse_instance(documents[name]))


def _corrupt(move, kind, surface):
    if kind == 'face':
        return FaceFlip('F99', 0, 1)
    if kind == 'far':
        return move._replace(at=move.at + 1000)
    if kind == 'shift':
        return move._replace(at=move.at + 1)
    if kind == 'back':
        return move._replace(at=move.at - 1)
    if isinstance(move, FaceFlip):
        if kind == 'longer':
            return move._replace(len=move.len + 1)
        if kind == 'shorter':
            return move._replace(len=move.len - 1)
        if kind == 'offset':
            return move._replace(offset=(move.offset or 0) + 1)
    if isinstance(move, Spike) and kind == 'edge':
        edges = sorted(surface.edges)
        following = edges[(edges.index(move.edge) + 1) % len(edges)]
        return move._replace(edge=following, end=None)
    return move._replace(at=move.at + 1)


@pytest.mark.slow
@settings(deadline=None, max_examples=1000)
@given(data=st.data())
def test_corrupted_certificates(data):
    name = data.draw(st.sampled_from(['grid', 'tall', 'weighted', 'disk']))
    cert = _certificate(name)
    optimum = verify_certificate(cert)
    moves = list(cert.moves)
    index = data.draw(st.integers(0, len(moves) - 1))
    kind = data.draw(st.sampled_from([
        'face', 'far', 'shift', 'back', 'longer', 'shorter', 'offset',
        'edge', 'truncate', 'drop']))
    if kind == 'truncate':
        moves = moves[:index]
    elif kind == 'drop':
        del moves[index]
    else:
        moves[index] = _corrupt(moves[index], kind, cert.surface)
    try:
        height = verify_certificate(Certificate(cert.surface, None, moves))
    except (InvalidMove, CertificateError):
        return
    # whatever survives is still a homotopy, so it cannot beat the optimum
    assert height >= optimum


@pytest.mark.parametrize('kind', ['face', 'far', 'truncate'])
def test_corrupted_certificates_are_rejected(kind, small_grid):
    cert = solve_exact(small_grid)
    moves = list(cert.moves)
    if kind == 'truncate':
        moves = moves[:-1]
    else:
        moves[0] = _corrupt(moves[0], kind, small_grid)
    with pytest.raises((InvalidMove, CertificateError)):
        verify_certificate(Certificate(small_grid, None, moves))
