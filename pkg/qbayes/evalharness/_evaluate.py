import multiprocessing
import sys
from typing import Dict, List, Sequence, Tuple, Union

import numpy as np

from .._exceptions import InvalidArgumentError
from .._misc import _json_dumps, _json_loads
from ..classifier.TrainConfig import TrainConfig
from ..classifier.TrainedQbc import TrainedQbc
from ..classifier._predict import _predict_many
from ..classifier._train import _train
from ..preprocess.ImageDataset import ImageDataset
from .EvalReport import Aggregates, ConfusionCounts, EvalReport, PairResult

ALL_CLASSES = tuple(range(10))


def _evaluate_pair(model: TrainedQbc, test: ImageDataset) -> Tuple[float, ConfusionCounts]:
    subset = test.filter(model.class_pair)
    if len(subset) == 0:
        raise InvalidArgumentError(f'No test images of classes {model.class_pair}')
    predicted, _ = _predict_many(model, subset.images)
    positive = model.label_of(1)
    pred_pos = np.array(predicted) == positive
    true_pos = subset.labels == positive
    counts = ConfusionCounts(
        tp=int(np.sum(pred_pos & true_pos)),
        fp=int(np.sum(pred_pos & ~true_pos)),
        fn=int(np.sum(~pred_pos & true_pos)),
        tn=int(np.sum(~pred_pos & ~true_pos))
    )
    return counts.accuracy(), counts

def _aggregate(rows: Sequence[PairResult]) -> Aggregates:
    if len(rows) == 0:
        raise InvalidArgumentError('Cannot aggregate an empty set of report rows')
    acc = np.array([r.accuracy for r in rows])
    mean_acc = float(np.mean(acc))
    # population variance, divided by the number of pairs
    variance = float(np.mean((mean_acc - acc) ** 2))
    prec = float(np.mean([r.counts.precision() for r in rows]))
    rec = float(np.mean([r.counts.recall() for r in rows]))
    f1 = 2 * prec * rec / (prec + rec) if prec + rec > 0 else 0.0
    return Aggregates(mean_accuracy=mean_acc, variance=variance, mean_precision=prec, mean_recall=rec, f1=f1)

def _all_pairs(classes: Sequence[int]=ALL_CLASSES) -> List[Tuple[int, int]]:
    return [(i, j) for i in classes for j in classes if i < j]

# datasets handed to worker processes once, at pool start
_worker_data: Dict[str, object] = {}

def _init_worker(train: ImageDataset, test: ImageDataset, config: TrainConfig):
    _worker_data['train'] = train
    _worker_data['test'] = test
    _worker_data['config'] = config

def _run_pair(pair: Tuple[int, int]) -> PairResult:
    train = _worker_data['train']
    test = _worker_data['test']
    config = _worker_data['config']
    model = _train(train, pair, config)  # type: ignore
    acc, counts = _evaluate_pair(model, test)  # type: ignore
    return PairResult(class_i=pair[0], class_j=pair[1], accuracy=acc, counts=counts)

def _evaluate_all_pairs(
    train: ImageDataset,
    test: ImageDataset,
    config: TrainConfig,
    *,
    dataset_id: str='custom',
    jobs: int=1,
    classes: Sequence[int]=ALL_CLASSES,
    verbose: bool=False
) -> EvalReport:
    for name, ds in [('training', train), ('test', test)]:
        missing = sorted(set(classes) - set(ds.classes()))
        if len(missing) > 0:
            raise InvalidArgumentError(f'The {name} data is missing classes {missing}')
    if jobs < 1:
        raise InvalidArgumentError(f'jobs must be at least 1: {jobs}')
    pairs = _all_pairs(classes)
    rows: List[PairResult] = []
    if jobs == 1:
        _init_worker(train, test, config)
        try:
            for pair in pairs:
                rows.append(_run_pair(pair))
                if verbose:
                    _print_progress(rows[-1], len(rows), len(pairs))
        finally:
            _worker_data.clear()
    else:
        with multiprocessing.Pool(processes=jobs, initializer=_init_worker, initargs=(train, test, config)) as pool:
            # imap keeps the (i, j) order of the pairs
            for r in pool.imap(_run_pair, pairs):
                rows.append(r)
                if verbose:
                    _print_progress(r, len(rows), len(pairs))
    return EvalReport(
        dataset_id=dataset_id,
        network_kind=config.network_kind,
        rows=tuple(rows),
        aggregates=_aggregate(rows),
        config=_json_loads(_json_dumps(config.to_dict()), what='config')
    )

def _print_progress(r: PairResult, k: int, total: int):
    print(f'[{k}/{total}] {r.class_i} vs {r.class_j}: accuracy {r.accuracy:.4f}', file=sys.stderr)
