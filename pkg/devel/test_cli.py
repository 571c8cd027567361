import os

import pytest
import simplejson
from click.testing import CliRunner

import qbayes as qb
from qbayes.cli import cli


@pytest.fixture
def runner():
    return CliRunner()

@pytest.fixture
def model_file(tmp_path, idx_files, runner):
    out = str(tmp_path / 'm01.json')
    result = runner.invoke(cli, ['train', '--images', idx_files['train_images'], '--labels', idx_files['train_labels'], '--classes', '1,0', '--out', out])
    assert result.exit_code == 0, result.output
    return out

def test_version(runner):
    result = runner.invoke(cli, ['version'])
    assert result.exit_code == 0
    assert qb.__version__ in result.output

def test_help_lists_defaults(runner):
    result = runner.invoke(cli, ['train', '--help'])
    assert result.exit_code == 0
    assert '--network' in result.output
    assert '[default: naive]' in ' '.join(result.output.split())

def test_train_writes_model(model_file, runner):
    model = qb.load_model(model_file)
    assert model.class_pair == (0, 1)
    assert model.config.network_kind == 'naive'

def test_train_output(tmp_path, idx_files, runner):
    out = str(tmp_path / 'm.json')
    result = runner.invoke(cli, [
        'train', '--images', idx_files['train_images'], '--labels', idx_files['train_labels'],
        '--classes', '2,7', '--network', 'symmetric', '--symmetric-pairs', '1-9,2-8', '--elide-x-pairs', '--out', out
    ])
    assert result.exit_code == 0, result.output
    assert 'Trained symmetric classifier for classes 2 vs 7' in result.output
    model = qb.load_model(out)
    assert model.net.feature_edges() == [(1, 9), (2, 8)]
    assert model.config.elide_x_pairs

def test_train_flags_override_config(tmp_path, idx_files, runner):
    config_path = str(tmp_path / 'config.json')
    with open(config_path, 'w') as f:
        simplejson.dump({
            'network_kind': 'spode',
            'superparent': 3,
            'alpha': 2.0,
            'train_images': idx_files['train_images'],
            'train_labels': idx_files['train_labels']
        }, f)
    out = str(tmp_path / 'm.json')
    result = runner.invoke(cli, ['train', '--config', config_path, '--classes', '0,5', '--superparent', '4', '--out', out])
    assert result.exit_code == 0, result.output
    model = qb.load_model(out)
    assert model.config.network_kind == 'spode'
    assert model.config.superparent == 4
    assert model.config.alpha == 2.0

def test_train_usage_errors(tmp_path, idx_files, runner):
    out = str(tmp_path / 'm.json')
    base = ['train', '--images', idx_files['train_images'], '--labels', idx_files['train_labels'], '--out', out]
    result = runner.invoke(cli, base + ['--classes', '3,3'])
    assert result.exit_code == 2
    result = runner.invoke(cli, base + ['--classes', '3'])
    assert result.exit_code == 2
    result = runner.invoke(cli, base + ['--classes', '0,1', '--network', 'forest'])
    assert result.exit_code == 2
    config_path = str(tmp_path / 'config.json')
    with open(config_path, 'w') as f:
        simplejson.dump({'netwrk_kind': 'tan'}, f)
    result = runner.invoke(cli, base + ['--classes', '0,1', '--config', config_path])
    assert result.exit_code == 2
    assert not os.path.exists(out)

def test_train_data_errors(tmp_path, idx_files, runner):
    out = str(tmp_path / 'm.json')
    result = runner.invoke(cli, ['train', '--images', str(tmp_path / 'missing'), '--labels', idx_files['train_labels'], '--classes', '0,1', '--out', out])
    assert result.exit_code == 1
    result = runner.invoke(cli, ['train', '--images', idx_files['train_labels'], '--labels', idx_files['train_labels'], '--classes', '0,1', '--out', out])
    assert result.exit_code == 1
    assert 'magic' in result.output

def test_predict(model_file, idx_files, runner):
    result = runner.invoke(cli, ['predict', '--model', model_file, '--images', idx_files['test_images'], '--labels', idx_files['test_labels'], '--index', '15', '--limit', '3'])
    assert result.exit_code == 0, result.output
    lines = result.output.splitlines()
    assert len(lines) == 3
    assert lines[0].startswith('15: ')
    assert 'truth=1' in lines[0]

def test_predict_classical_and_loss(model_file, idx_files, runner):
    args = ['predict', '--model', model_file, '--images', idx_files['test_images'], '--limit', '2']
    quantum = runner.invoke(cli, args)
    classical = runner.invoke(cli, args + ['--classical'])
    assert quantum.exit_code == 0 and classical.exit_code == 0
    assert [line.split(' ')[1] for line in quantum.output.splitlines()] == [line.split(' ')[1] for line in classical.output.splitlines()]
    result = runner.invoke(cli, args + ['--loss', '1,0'])
    assert result.exit_code == 0
    result = runner.invoke(cli, args + ['--loss', 'x'])
    assert result.exit_code == 2
    result = runner.invoke(cli, args + ['--loss=-1,1'])
    assert result.exit_code == 2
    assert 'nonnegative' in result.output

def test_eval_pair(tmp_path, model_file, idx_files, runner):
    report = str(tmp_path / 'pair.json')
    result = runner.invoke(cli, ['eval-pair', '--model', model_file, '--images', idx_files['test_images'], '--labels', idx_files['test_labels'], '--report', report])
    assert result.exit_code == 0, result.output
    assert result.output.startswith('0 vs 1: accuracy ')
    rep = qb.read_report(report)
    assert rep.pairs() == [(0, 1)]

def test_eval_all(tmp_path, idx_files, runner):
    report = str(tmp_path / 'all.csv')
    result = runner.invoke(cli, [
        'eval-all', '--dataset', 'mnist',
        '--train-images', idx_files['train_images'], '--train-labels', idx_files['train_labels'],
        '--test-images', idx_files['test_images'], '--test-labels', idx_files['test_labels'],
        '--report', report, '--quiet'
    ])
    assert result.exit_code == 0, result.output
    assert 'mean_accuracy: ' in result.output
    assert '(published 0.8767)' in result.output
    rep = qb.read_report(report)
    assert len(rep.rows) == 45

def test_eval_all_finds_dataset_dir(tmp_path, idx_files, runner, monkeypatch):
    monkeypatch.setenv('QBC_DATA_DIR', os.path.dirname(idx_files['train_images']))
    report = str(tmp_path / 'all.json')
    result = runner.invoke(cli, ['eval-all', '--dataset', 'synthetic', '--report', report, '--quiet', '--jobs', '2'])
    assert result.exit_code == 0, result.output
    assert qb.read_report(report).dataset_id == 'synthetic'

def test_eval_all_rejects_bad_jobs_in_config(tmp_path, idx_files, runner):
    config_path = str(tmp_path / 'config.json')
    with open(config_path, 'w') as f:
        simplejson.dump({'jobs': 'many'}, f)
    result = runner.invoke(cli, [
        'eval-all', '--config', config_path,
        '--train-images', idx_files['train_images'], '--train-labels', idx_files['train_labels'],
        '--test-images', idx_files['test_images'], '--test-labels', idx_files['test_labels'],
        '--report', str(tmp_path / 'all.csv')
    ])
    assert result.exit_code == 2
    assert 'jobs must be an integer' in result.output
    assert not os.path.exists(str(tmp_path / 'all.csv'))

def test_eval_all_requires_report(runner):
    result = runner.invoke(cli, ['eval-all', '--dataset', 'mnist'])
    assert result.exit_code == 2

def test_export(tmp_path, model_file, runner):
    result = runner.invoke(cli, ['export', '--model', model_file])
    assert result.exit_code == 0
    assert result.output.startswith('OPENQASM 3.0;')
    out = str(tmp_path / 'circuit.json')
    result = runner.invoke(cli, ['export', '--model', model_file, '--format', 'json', '--out', out])
    assert result.exit_code == 0
    assert [name for name in os.listdir(str(tmp_path)) if name.startswith('.')] == []
    with open(out, 'r') as f:
        assert qb.parse_circuit(f.read(), format='json') == qb.load_model(model_file).circuit

def test_export_errors(tmp_path, model_file, runner):
    result = runner.invoke(cli, ['export', '--model', model_file, '--format', 'quil'])
    assert result.exit_code == 2
    result = runner.invoke(cli, ['export', '--model', str(tmp_path / 'missing.json')])
    assert result.exit_code == 1

def test_inspect(model_file, runner):
    result = runner.invoke(cli, ['inspect', '--model', model_file])
    assert result.exit_code == 0, result.output
    assert 'Classes: 0 (y=0) vs 1 (y=1)' in result.output
    assert 'y->x1' in result.output
    assert 'Binarizer:' in result.output
    assert 'theta=' in result.output

def test_inspect_corrupt_model(tmp_path, runner):
    path = str(tmp_path / 'corrupt.json')
    with open(path, 'w') as f:
        f.write('{"format_version": 1, "class_pair": [0, 1]}')
    result = runner.invoke(cli, ['inspect', '--model', path])
    assert result.exit_code == 1
    assert 'Missing field' in result.output

def test_every_command_has_help(runner):
    for name in ['train', 'predict', 'eval-pair', 'eval-all', 'export', 'inspect', 'version']:
        result = runner.invoke(cli, [name, '--help'])
        assert result.exit_code == 0, name
        assert 'Usage:' in result.output
