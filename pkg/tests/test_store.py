import pytest
from score.init import ConfigurationError

from score.homotopy import init
from score.homotopy._session import RunsNotFound
from score.homotopy.base import cls2tbl, tbl2cls
from score.homotopy.solver import ResourceLimitExceeded
from score.homotopy.surface import content_hash


@pytest.fixture
def conf():
    conf = init({'store.url': 'sqlite://'})
    conf.create()
    return conf


def test_defaults():
    conf = init({})
    assert conf.limits == {'max_states': 200000, 'max_seconds': 0,
                           'max_moves': 0, 'max_edge_copies': 4,
                           'threads': 1}
    assert conf.oracle_caps == {'face_cap': 6, 'edge_cap': 14}
    assert conf.Session is None
    assert not conf.record_runs


def test_string_values():
    conf = init({'max_states': '50', 'threads': '2',
                 'store.record': 'false'})
    assert conf.limits['max_states'] == 50
    assert conf.limits['threads'] == 2
    assert not conf.record_runs


@pytest.mark.parametrize('key, value', [
    ('max_states', 'many'),
    ('max_states', '0'),
    ('max_seconds', '-1'),
    ('threads', '0'),
    ('max_edge_copies', None),
])
def test_invalid_configuration(key, value):
    with pytest.raises(ConfigurationError):
        init({key: value})


def test_runs_are_recorded(conf, theta_surface):
    conf.solve_exact(theta_surface)
    session = conf.Session()
    instance = next(session.by_hashes([content_hash(theta_surface)]))
    assert instance.kind == 'annulus'
    run, = instance.runs
    assert run.command == 'solve'
    assert run.status == 'ok'
    assert run.height == '4'
    assert run.moves == 1
    assert run.config['max_states'] == 200000
    assert run.certificate['surface'] == instance.hash
    session.close()


def test_instances_are_shared(conf, theta_surface):
    conf.solve_exact(theta_surface)
    conf.approx_solve(theta_surface)
    session = conf.Session()
    instance, = session.by_hashes([content_hash(theta_surface)])
    assert [r.command for r in instance.runs] == ['solve', 'approx']
    assert [r.height for r in instance.runs] == ['4', '4']
    session.close()


def test_limit_is_recorded(grid):
    conf = init({'store.url': 'sqlite://', 'max_states': 1})
    conf.create()
    with pytest.raises(ResourceLimitExceeded):
        conf.solve_exact(grid)
    session = conf.Session()
    instance, = session.by_hashes([content_hash(grid)])
    run, = instance.runs
    assert run.status == 'limit'
    assert run.height is None
    assert int(run.lower) >= 3
    assert int(run.upper) >= 5
    session.close()


def test_missing_hashes(conf, theta_surface):
    session = conf.Session()
    assert list(session.by_hashes(['nope'])) == []
    with pytest.raises(RunsNotFound):
        list(session.by_hashes(['nope'], ignore_missing=False))
    session.close()


def test_record_needs_store(theta_surface):
    with pytest.raises(Exception):
        init({}).record('solve', theta_surface)


def test_table_names():
    assert cls2tbl('InstanceRun') == '_instance_run'
    assert tbl2cls('_instance_run') == 'InstanceRun'


def test_layout_runs_are_recorded(conf, path3):
    result = conf.solve_layout(path3)
    session = conf.Session()
    instance, = session.by_hashes([content_hash(result.surface)])
    run, = instance.runs
    assert run.command == 'layout'
    assert run.height == '1'
    assert run.certificate['height'] == '1'
    session.close()
