import functools
from typing import Any, Dict, List, Tuple, Union

import click

import qbayes as qb
from ._config import _dataset_paths
from ._exceptions import FormatError, QbcError
from ._misc import _read_json_file, _write_text_file
from .classifier.TrainConfig import NETWORK_KINDS, TRAIN_CONFIG_KEYS
from .bayesnet.BayesNet import _node_name
from .bayesnet._mutual_information import CMI_WEIGHTINGS
from .classifier._predict import _decide_with_loss
from .evalharness._reference import PUBLISHED_PAIR_0_1_ACCURACY, _published_aggregates
from .preprocess._idx import _load_idx_images
from .qcircuit._compile import _probability_from_angle

# keys a CLI config file may hold besides the training options
CLI_CONFIG_KEYS = ('dataset', 'data_dir', 'train_images', 'train_labels', 'test_images', 'test_labels', 'jobs')


def _handle_errors(f):
    # data and model problems exit with 1; click usage errors keep their exit code 2
    @functools.wraps(f)
    def wrapper(*args, **kwargs):
        try:
            return f(*args, **kwargs)
        except (QbcError, OSError) as e:
            raise click.ClickException(str(e))
    return wrapper

def _train_options(f):
    options = [
        click.option('--config', 'config_path', default=None, help='JSON config file; flags override its values'),
        click.option('--network', type=click.Choice(NETWORK_KINDS), default=None, help='Bayesian network kind [default: naive]'),
        click.option('--superparent', type=int, default=None, help='SPODE superparent feature [default: 5]'),
        click.option('--tan-root', type=int, default=None, help='Root feature of the TAN tree [default: 1]'),
        click.option('--symmetric-pairs', default=None, help='Symmetric feature pairs, e.g. 1-9,2-8 [default: point-symmetric blocks]'),
        click.option('--alpha', type=float, default=None, help='Laplace smoothing pseudocount [default: 1.0]'),
        click.option('--block-size', type=int, default=None, help='Sampling block size in pixels [default: 7]'),
        click.option('--offsets', default=None, help='Block offsets along each axis, e.g. 3,10,17 [default: 3,10,17]'),
        click.option('--shots', type=int, default=None, help='Measurement shots per prediction, 0 for exact amplitudes [default: 0]'),
        click.option('--seed', type=int, default=None, help='Seed for shot sampling [default: 0]'),
        click.option('--cmi-weighting', type=click.Choice(CMI_WEIGHTINGS), default=None, help='Weighting of conditional mutual information for TAN [default: joint]'),
        click.option('--elide-x-pairs/--keep-x-pairs', default=None, help='Remove adjacent cancelling X gates [default: keep]'),
        click.option('--sigma-floor', type=float, default=None, help='Lower bound on fitted standard deviations [default: 0.001]')
    ]
    for option in reversed(options):
        f = option(f)
    return f

def _parse_int_list(value: str, *, param: str) -> List[int]:
    try:
        return [int(v) for v in value.split(',') if v.strip() != '']
    except ValueError:
        raise click.BadParameter(f'Expected comma-separated integers: {value}', param_hint=param)

def _parse_classes(value: str) -> Tuple[int, int]:
    v = _parse_int_list(value, param='--classes')
    if len(v) != 2:
        raise click.BadParameter(f'Expected two class labels a,b: {value}', param_hint='--classes')
    if v[0] == v[1]:
        raise click.BadParameter(f'The two classes must differ: {value}', param_hint='--classes')
    return (v[0], v[1])

def _parse_pairs(value: str) -> List[Tuple[int, int]]:
    ret = []
    for item in value.split(','):
        if item.strip() == '':
            continue
        a, _, b = item.partition('-')
        try:
            ret.append((int(a), int(b)))
        except ValueError:
            raise click.BadParameter(f'Expected pairs like 1-9,2-8: {value}', param_hint='--symmetric-pairs')
    return ret

def _read_cli_config(config_path: Union[str, None]) -> Dict[str, Any]:
    if config_path is None:
        return {}
    try:
        x = _read_json_file(config_path, what='config')
    except (FormatError, OSError) as e:
        raise click.BadParameter(str(e), param_hint='--config')
    if not isinstance(x, dict):
        raise click.BadParameter('Config file must hold a JSON object', param_hint='--config')
    unknown = sorted(set(x.keys()) - set(TRAIN_CONFIG_KEYS) - set(CLI_CONFIG_KEYS))
    if len(unknown) > 0:
        raise click.BadParameter(f'Unknown config keys: {unknown}', param_hint='--config')
    return x

def _train_config(cfg: Dict[str, Any], *, network, superparent, tan_root, symmetric_pairs, alpha, block_size, offsets, shots, seed, cmi_weighting, elide_x_pairs, sigma_floor) -> qb.TrainConfig:
    # precedence: flags > config file > defaults
    d = {k: v for k, v in cfg.items() if k in TRAIN_CONFIG_KEYS}
    flags = {
        'network_kind': network,
        'superparent': superparent,
        'tan_root': tan_root,
        'symmetric_pairs': _parse_pairs(symmetric_pairs) if symmetric_pairs is not None else None,
        'alpha': alpha,
        'shots': shots,
        'seed': seed,
        'cmi_weighting': cmi_weighting,
        'elide_x_pairs': elide_x_pairs,
        'sigma_floor': sigma_floor
    }
    d.update({k: v for k, v in flags.items() if v is not None})
    o = _parse_int_list(offsets, param='--offsets') if offsets is not None else [3, 10, 17]
    try:
        if block_size is not None or offsets is not None:
            d['feature_spec'] = qb.FeatureSpec.grid(block_size=block_size if block_size is not None else 7, row_offsets=o, col_offsets=o).to_dict()
        return qb.TrainConfig.from_dict(d)
    except (QbcError, ValueError) as e:
        raise click.UsageError(str(e))

def _resolve_split(cfg: Dict[str, Any], split: str, images: Union[str, None], labels: Union[str, None], dataset: Union[str, None], data_dir: Union[str, None]) -> Tuple[str, str]:
    images = images or cfg.get(f'{split}_images', None)
    labels = labels or cfg.get(f'{split}_labels', None)
    dataset = dataset or cfg.get('dataset', None)
    if (images is None or labels is None) and dataset is not None:
        paths = _dataset_paths(dataset, data_dir or cfg.get('data_dir', None))
        images = images or paths[f'{split}_images']
        labels = labels or paths[f'{split}_labels']
    if images is None or labels is None:
        raise click.UsageError(f'No {split} data: pass --images and --labels, or a dataset')
    return images, labels


@click.group(help="Quantum Bayes classifiers for image datasets")
def cli():
    pass

@click.command(help="Train a classifier for two classes and write the model file.")
@click.option('--images', default=None, help='IDX training images (optionally gzip)')
@click.option('--labels', default=None, help='IDX training labels (optionally gzip)')
@click.option('--dataset', default=None, help='Dataset name under the data dir, used when --images/--labels are not given')
@click.option('--data-dir', default=None, help='Dataset root [default: $QBC_DATA_DIR]')
@click.option('--classes', required=True, help='The two class labels, e.g. 0,1')
@click.option('--out', required=True, help='Path of the model file to write')
@_train_options
@_handle_errors
def train(images, labels, dataset, data_dir, classes, out, config_path, **flags):
    class_pair = _parse_classes(classes)
    cfg = _read_cli_config(config_path)
    config = _train_config(cfg, **flags)
    images, labels = _resolve_split(cfg, 'train', images, labels, dataset, data_dir)
    ds = qb.load_idx(images, labels)
    model = qb.train(ds, class_pair, config)
    qb.save_model(model, out)
    print(f'Trained {config.network_kind} classifier for classes {model.class_pair[0]} vs {model.class_pair[1]} on {len(ds.filter(model.class_pair))} images')
    print(f'Network: {model.net}')
    print(f'P(y=0) = {model.cpts.prior0:.6f}')
    for node in model.net.encode_order:
        entries = ', '.join(f'{k}:{v:.4f}' for k, v in sorted(model.cpts.table(node).items()))
        print(f'  x{node} | {_parent_names(model.net.parents(node))}: P(x{node}=0) {entries}')
    summary = ', '.join(f'{k}={v}' for k, v in model.circuit.summary().items())
    print(f'Circuit: {model.circuit.n_qubits} qubits, {len(model.circuit.gates)} gates ({summary})')
    print(f'Wrote {out}')

@click.command(help="Classify images of an IDX file with a trained model.")
@click.option('--model', 'model_path', required=True, help='Model file written by train')
@click.option('--images', required=True, help='IDX images (optionally gzip)')
@click.option('--labels', default=None, help='Optional IDX labels, to mark each prediction as right or wrong')
@click.option('--index', type=int, default=0, help='Index of the first image [default: 0]')
@click.option('--limit', type=int, default=10, help='Number of images to classify [default: 10]')
@click.option('--classical', is_flag=True, help='Use the chain-rule oracle instead of the circuit')
@click.option('--loss', default=None, help='Misclassification losses l01,l10 for the risk-minimizing rule [default: 0-1 loss]')
@_handle_errors
def predict(model_path, images, labels, index, limit, classical, loss):
    model = qb.load_model(model_path)
    loss_matrix = None
    if loss is not None:
        try:
            l01, l10 = [float(v) for v in loss.split(',')]
        except ValueError:
            raise click.BadParameter(f'Expected two losses l01,l10: {loss}', param_hint='--loss')
        try:
            loss_matrix = qb.LossMatrix([[0, l01], [l10, 0]])
        except QbcError as e:
            raise click.BadParameter(str(e), param_hint='--loss')
    if labels is None:
        pixels = _load_idx_images(images)
        truth = None
    else:
        ds = qb.load_idx(images, labels)
        pixels = ds.images
        truth = ds.labels
    if index < 0 or index >= pixels.shape[0]:
        raise click.BadParameter(f'Index out of range 0..{pixels.shape[0] - 1}: {index}', param_hint='--index')
    batch = pixels[index:index + limit]
    if classical:
        predicted, scores = qb.classical_predict_many(model, batch)
    else:
        predicted, scores = qb.predict_many(model, batch)
    for k in range(batch.shape[0]):
        p0, p1 = float(scores[k, 0]), float(scores[k, 1])
        label = predicted[k] if loss_matrix is None else _decide_with_loss(model, (p0, p1), loss_matrix)
        line = f'{index + k}: {label} (p0={p0:.6g}, p1={p1:.6g})'
        if truth is not None:
            line += f' truth={int(truth[index + k])}'
        print(line)

@click.command(name='eval-pair', help="Evaluate one trained model on test images of its two classes.")
@click.option('--model', 'model_path', required=True, help='Model file written by train')
@click.option('--images', required=True, help='IDX test images (optionally gzip)')
@click.option('--labels', required=True, help='IDX test labels (optionally gzip)')
@click.option('--report', default=None, help='Optional report file (.csv or .json)')
@click.option('--format', 'format', type=click.Choice(['csv', 'json']), default=None, help='Report format [default: from the report file extension]')
@_handle_errors
def eval_pair(model_path, images, labels, report, format):
    model = qb.load_model(model_path)
    test = qb.load_idx(images, labels)
    acc, counts = qb.evaluate_pair(model, test)
    a, b = model.class_pair
    print(f'{a} vs {b}: accuracy {acc:.4f} (tp={counts.tp} fp={counts.fp} fn={counts.fn} tn={counts.tn})')
    if report is not None:
        row = qb.PairResult(class_i=a, class_j=b, accuracy=acc, counts=counts)
        rep = qb.EvalReport(
            dataset_id=model.metadata.get('dataset_digest', ''),
            network_kind=model.config.network_kind,
            rows=(row,),
            aggregates=qb.aggregate([row]),
            config=model.metadata
        )
        qb.write_report(rep, report, format=format)
        print(f'Wrote {report}')

@click.command(name='eval-all', help="Train and evaluate all 45 class pairs of a dataset.")
@click.option('--dataset', default=None, help='Dataset name, e.g. mnist or fashion-mnist [default: mnist]')
@click.option('--data-dir', default=None, help='Dataset root holding <dataset>/ with the standard IDX files [default: $QBC_DATA_DIR]')
@click.option('--train-images', default=None, help='IDX training images (overrides the dataset lookup)')
@click.option('--train-labels', default=None, help='IDX training labels (overrides the dataset lookup)')
@click.option('--test-images', default=None, help='IDX test images (overrides the dataset lookup)')
@click.option('--test-labels', default=None, help='IDX test labels (overrides the dataset lookup)')
@click.option('--report', required=True, help='Report file to write (.csv or .json)')
@click.option('--format', 'format', type=click.Choice(['csv', 'json']), default=None, help='Report format [default: from the report file extension]')
@click.option('--jobs', type=int, default=None, help='Parallel worker processes [default: 1]')
@click.option('--quiet', is_flag=True, help='Do not print per-pair progress')
@_train_options
@_handle_errors
def eval_all(dataset, data_dir, train_images, train_labels, test_images, test_labels, report, format, jobs, quiet, config_path, **flags):
    cfg = _read_cli_config(config_path)
    config = _train_config(cfg, **flags)
    dataset = dataset or cfg.get('dataset', None) or 'mnist'
    if jobs is None:
        try:
            jobs = int(cfg.get('jobs', 1))
        except (TypeError, ValueError):
            raise click.BadParameter(f'jobs must be an integer: {cfg.get("jobs")}', param_hint='--config')
    if jobs < 1:
        raise click.BadParameter(f'jobs must be at least 1: {jobs}', param_hint='--jobs')
    tri, trl = _resolve_split(cfg, 'train', train_images, train_labels, dataset, data_dir)
    tei, tel = _resolve_split(cfg, 'test', test_images, test_labels, dataset, data_dir)
    train_ds = qb.load_idx(tri, trl)
    test_ds = qb.load_idx(tei, tel)
    rep = qb.evaluate_all_pairs(train_ds, test_ds, config, dataset_id=dataset, jobs=jobs, verbose=not quiet)
    qb.write_report(rep, report, format=format)
    agg = rep.aggregates.to_dict()
    published = _published_aggregates(dataset, config.network_kind)
    for key, value in agg.items():
        line = f'{key}: {value:.4f}'
        if published is not None:
            line += f' (published {published[key]:.4f})'
        print(line)
    pair01 = PUBLISHED_PAIR_0_1_ACCURACY.get(dataset, {}).get(config.network_kind, None)
    if pair01 is not None and (0, 1) in rep.pairs():
        print(f'0 vs 1 accuracy: {rep.row(0, 1).accuracy:.4f} (published {pair01:.4f})')
    print(f'Wrote {report}')

@click.command(help="Write the circuit of a trained model as JSON or OpenQASM 3.")
@click.option('--model', 'model_path', required=True, help='Model file written by train')
@click.option('--format', 'format', type=click.Choice(['qasm3', 'json']), default='qasm3', show_default=True, help='Circuit format')
@click.option('--out', default=None, help='Output file [default: stdout]')
@_handle_errors
def export(model_path, format, out):
    model = qb.load_model(model_path)
    text = qb.export(model.circuit, format=format)
    if out is None:
        click.echo(text, nl=not text.endswith('\n'))
    else:
        _write_text_file(out, text)

@click.command(help="Print the network, CPTs, rotation angles and binarizer of a trained model.")
@click.option('--model', 'model_path', required=True, help='Model file written by train')
@_handle_errors
def inspect(model_path):
    model = qb.load_model(model_path)
    net = model.net
    a, b = model.class_pair
    print(f'Classes: {a} (y=0) vs {b} (y=1)')
    print(f'Network kind: {model.config.network_kind}')
    print('Edges: ' + ', '.join(f'{_node_name(p)}->{_node_name(c)}' for p, c in net.edges()))
    print(f'Encode order: {" ".join(_node_name(i) for i in net.encode_order)}')
    theta = qb.angle_from_probability(model.cpts.prior0)
    print(f'y: P(y=0)={model.cpts.prior0:.6f} theta={theta:.6f}')
    for node in net.encode_order:
        print(f'x{node} | {_parent_names(net.parents(node))}:')
        for key, p in sorted(model.cpts.table(node).items()):
            theta = qb.angle_from_probability(p)
            print(f'  {key}: P(x{node}=0)={p:.6f} theta={theta:.6f} cos^2(theta/2)={_probability_from_angle(theta):.6f}')
    print('Binarizer:')
    for i, f in enumerate(model.binarizer.features, start=1):
        ins = ', '.join(f'{v:.6f}' for v in f.intersections)
        block = model.feature_spec.blocks[i - 1]
        print(f'  x{i} block={list(block)} mu0={f.mu0:.6f} sigma0={f.sigma0:.6f} mu1={f.mu1:.6f} sigma1={f.sigma1:.6f} intersections=[{ins}]')
    summary = ', '.join(f'{k}={v}' for k, v in model.circuit.summary().items())
    print(f'Circuit: {model.circuit.n_qubits} qubits, {len(model.circuit.gates)} gates ({summary})')
    for w in model.metadata.get('warnings', []):
        print(f'WARNING: {w}')

@click.command(help="Display qbayes version and exit.")
def version():
    click.echo(f"This is qbayes version {qb.__version__}")

def _parent_names(parents) -> str:
    return ','.join(_node_name(p) for p in parents)

cli.add_command(train)
cli.add_command(predict)
cli.add_command(eval_pair)
cli.add_command(eval_all)
cli.add_command(export)
cli.add_command(inspect)
cli.add_command(version)
