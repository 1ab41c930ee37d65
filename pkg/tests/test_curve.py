import pytest

from score.homotopy.curve import (
    FaceFlip, InvalidMove, Spike, Unspike, apply_move, curve_from_walk,
    flip_moves, goal_curve, goal_key, initial_curve, is_simple, make_curve,
    resolve_move, reversed_curve, shortest_homotopic_cycle, unspike_moves,
    winding)


def test_boundary_curves(theta_surface):
    start = initial_curve(theta_surface)
    assert start.walk() == ['u', 'a', 'v', 'b', 'u']
    assert start.length == 3
    goal = goal_curve(theta_surface)
    assert goal.length == 4
    assert goal.walk_key == goal_key(theta_surface)
    assert goal_key(theta_surface) == (True, (('a', False), ('c', True)))


def test_face_flip(theta_surface):
    result, move = resolve_move(initial_curve(theta_surface),
                                FaceFlip('F0', 1, 1))
    assert result.walk_key == goal_key(theta_surface)
    assert move.forward is True
    assert move.offset == 0
    assert result.length == 4


def test_flip_moves_are_applicable(grid):
    start = initial_curve(grid)
    moves = list(flip_moves(start))
    assert moves
    for move, result in moves:
        assert apply_move(start, move) == result


def test_disk_flips(disk_surface):
    start = initial_curve(disk_surface)
    assert start.walk() == ['s', 'a', 't']
    middle = apply_move(start, FaceFlip('F0', 0, 1))
    assert middle.walk() == ['s', 'c', 't']
    end = apply_move(middle, FaceFlip('F1', 0, 1))
    assert end.walk_key == goal_key(disk_surface)


@pytest.mark.parametrize('move, reason', [
    (FaceFlip('F0', 5, 1), 'position out of range'),
    (FaceFlip('F9', 0, 1), 'unknown face F9'),
    (FaceFlip('F0', 0, 1), 'subpath not on boundary of F0'),
    (Unspike(0), 'crossings do not form a detour'),
    (Spike(0, 'x'), 'unknown edge x'),
])
def test_invalid_moves(theta_surface, move, reason):
    with pytest.raises(InvalidMove) as info:
        apply_move(initial_curve(theta_surface), move)
    assert info.value.reason == reason
    assert 'invalid move (' in str(info.value)


def test_invalid_move_step():
    error = InvalidMove('unknown face F9', 2).at_step(0)
    assert str(error) == \
        'invalid move at step 0 (unknown face F9, position 2)'


def test_spike_and_unspike(theta_surface):
    start = initial_curve(theta_surface)
    spiked = apply_move(start, Spike(0, 'c'))
    assert spiked.length == 9
    assert len(spiked) == 4
    assert is_simple(spiked)
    results = [r for _, r in unspike_moves(spiked)]
    assert any(r.walk_key == start.walk_key for r in results)


def test_simplicity(theta_surface):
    assert is_simple(initial_curve(theta_surface))
    assert is_simple(goal_curve(theta_surface))
    twice = curve_from_walk(theta_surface,
                            ['u', 'a', 'v', 'b', 'u', 'a', 'v', 'b', 'u'])
    assert not is_simple(twice)


def test_winding(theta_surface):
    start = initial_curve(theta_surface)
    assert winding(start) == 1
    assert winding(goal_curve(theta_surface)) == 1
    assert winding(reversed_curve(start)) == -1
    twice = curve_from_walk(theta_surface,
                            ['u', 'a', 'v', 'b', 'u', 'a', 'v', 'b', 'u'])
    assert winding(twice) == 2
    trivial = curve_from_walk(theta_surface, ['u', 'b', 'v', 'c', 'u'])
    assert winding(trivial) == 0


def test_shortest_homotopic_cycle(theta_surface, grid):
    assert shortest_homotopic_cycle(theta_surface, 'u') == 3
    assert shortest_homotopic_cycle(grid, '1.0') == 3


def test_walk_round_trip(grid):
    start = initial_curve(grid)
    again = curve_from_walk(grid, start.walk())
    assert again == start


def test_closed_curves_are_canonical(theta_surface):
    one = make_curve(theta_surface, [('a', False), ('b', True)], closed=True)
    other = make_curve(theta_surface, [('b', True), ('a', False)],
                       closed=True)
    assert one == other
    assert hash(one) == hash(other)
    assert other.start == 'u'
