import io
import json
import os

import pytest

from score.homotopy.cli import run
from score.homotopy.generators import (
    cylinder_grid, path_layout, square_frechet, theta)


def _write(directory, name, document):
    path = directory / name
    path.write_text(json.dumps(document))
    return str(path)


def _run(*argv):
    out = io.StringIO()
    code = run(list(argv), stdout=out)
    text = out.getvalue()
    return code, json.loads(text) if text else None


@pytest.fixture
def theta_file(tmp_path, theta_document):
    return _write(tmp_path, 'theta.json', theta_document)


@pytest.fixture
def certificate_file(tmp_path, theta_file):
    path = str(tmp_path / 'theta.cert.json')
    code, _ = _run('solve', '--in', theta_file, '--out', path)
    assert code == 0
    return path


def test_solve(theta_file):
    code, result = _run('solve', '--in', theta_file, '--trace')
    assert code == 0
    assert result['command'] == 'solve'
    assert result['height'] == '4'
    assert result['lower'] == '4'
    assert result['moves'] == 1
    assert result['certificate']['height'] == '4'
    assert [row['length'] for row in result['trace']] == ['3', '4']


def test_verify(theta_file, certificate_file):
    code, result = _run('verify', '--in', theta_file,
                        '--cert', certificate_file)
    assert code == 0
    assert result['height'] == '4'
    assert result['moves'] == 1


def test_tampered_certificate(theta_file, certificate_file, caplog):
    with open(certificate_file) as file:
        document = json.load(file)
    document['moves'] = [{'flip': {'face': 'F0', 'at': 7, 'len': 1}}]
    with open(certificate_file, 'w') as file:
        json.dump(document, file)
    code, result = _run('verify', '--in', theta_file,
                        '--cert', certificate_file)
    assert code == 1
    assert result is None
    assert 'invalid move at step 0' in caplog.text


def test_certificate_of_other_instance(tmp_path, certificate_file):
    other = _write(tmp_path, 'unit.json', theta(3))
    code, _ = _run('verify', '--in', other, '--cert', certificate_file)
    assert code == 1


def test_oracle(theta_file):
    code, result = _run('oracle', '--in', theta_file)
    assert code == 0
    assert result['height'] == '4'
    code, _ = _run('oracle', '--in', theta_file, '--cap', '3')
    assert code == 1


def test_oracle_too_large(tmp_path):
    grid = _write(tmp_path, 'grid.json', cylinder_grid(2, 3))
    code, _ = _run('oracle', '--in', grid)
    assert code == 2


def test_state_limit_from_config(tmp_path):
    grid = _write(tmp_path, 'grid.json', cylinder_grid(2, 3))
    conf = tmp_path / 'homotopy.conf'
    conf.write_text('[score.homotopy]\nmax_states = 1\n')
    code, _ = _run('solve', '--in', grid, '--conf', str(conf))
    assert code == 2
    code, result = _run('solve', '--in', grid, '--max-states', '1')
    assert code == 2
    assert result['status'] == 'limit'
    assert result['reason'] == 'state limit exceeded'
    assert result['lower'] == '3'
    assert int(result['upper']) >= 5
    assert result['certificate']['height'] == result['upper']


def test_invalid_configuration(theta_file):
    code, _ = _run('solve', '--in', theta_file, '--threads', '0')
    assert code == 3
    code, _ = _run('solve', '--in', theta_file, '--max-seconds', '-1')
    assert code == 3


def test_gen():
    code, document = _run('gen', 'theta', 'k=4')
    assert code == 0
    assert document['kind'] == 'annulus'
    assert len(document['edges']) == 4


def test_gen_is_reproducible():
    argv = ('gen', 'random-annulus', 'faces=5', '--seed', '7',
            '--weights', 'uniform:1:9')
    assert _run(*argv) == _run(*argv)


def test_gen_unknown_family():
    code, _ = _run('gen', 'klein-bottle')
    assert code == 1


def test_wrong_kind(tmp_path):
    layout = _write(tmp_path, 'path.json', path_layout(3))
    code, _ = _run('solve', '--in', layout)
    assert code == 1


def test_layout(tmp_path):
    layout = _write(tmp_path, 'path.json', path_layout(3))
    code, result = _run('layout', '--in', layout)
    assert code == 0
    assert result['height'] == '1'
    assert sorted(result['order']) == ['v0', 'v1', 'v2']


def test_frechet(tmp_path):
    square = _write(tmp_path, 'square.json', square_frechet())
    code, result = _run('frechet', '--in', square)
    assert code == 0
    assert result['height'] == '2'
    assert result['K'] == '5'
    assert len(result['leashes']) == \
        len(result['certificate']['moves']) + 1


def test_approx(theta_file):
    code, result = _run('approx', '--in', theta_file)
    assert code == 0
    assert result['height'] == '4'
    assert result['path_weight'] == '0'


def test_render(tmp_path, theta_file, certificate_file):
    frames = tmp_path / 'frames'
    code, result = _run('render', '--in', theta_file,
                        '--cert', certificate_file, '--out', str(frames))
    assert code == 0
    assert len(result['frames']) == 2
    assert all(os.path.exists(p) for p in result['frames'])
    with open(result['frames'][-1]) as file:
        assert 'max 4' in file.read()


def test_missing_input(tmp_path):
    code, _ = _run('solve', '--in', str(tmp_path / 'missing.json'))
    assert code == 3


def test_usage_error():
    assert run([]) == 1
