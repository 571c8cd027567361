from dataclasses import dataclass, field
from typing import Any, Dict, List, Sequence

from .._exceptions import FormatError, InvalidArgumentError
from .._misc import _require


def _ratio(num: int, den: int) -> float:
    # an empty denominator with an empty numerator counts as vacuously perfect
    if den == 0:
        return 1.0 if num == 0 else 0.0
    return num / den


@dataclass(frozen=True)
class ConfusionCounts:
    """Binary confusion counts; the class encoded as bit 1 is positive"""
    tp: int
    fp: int
    fn: int
    tn: int

    def __post_init__(self):
        for name in ('tp', 'fp', 'fn', 'tn'):
            if getattr(self, name) < 0:
                raise InvalidArgumentError(f'Confusion count {name} is negative')

    @property
    def total(self) -> int:
        return self.tp + self.fp + self.fn + self.tn

    def accuracy(self) -> float:
        if self.total == 0:
            raise InvalidArgumentError('Accuracy of an empty test set is undefined')
        return (self.tp + self.tn) / self.total

    def precision(self) -> float:
        return _ratio(self.tp, self.tp + self.fp)

    def recall(self) -> float:
        return _ratio(self.tp, self.tp + self.fn)


@dataclass(frozen=True)
class PairResult:
    class_i: int
    class_j: int
    accuracy: float
    counts: ConfusionCounts

    def to_dict(self) -> dict:
        return {
            'class_i': self.class_i,
            'class_j': self.class_j,
            'accuracy': self.accuracy,
            'tp': self.counts.tp,
            'fp': self.counts.fp,
            'fn': self.counts.fn,
            'tn': self.counts.tn
        }

    @staticmethod
    def from_dict(x: dict) -> 'PairResult':
        try:
            counts = ConfusionCounts(*(int(_require(x, k, what='report row')) for k in ('tp', 'fp', 'fn', 'tn')))
            return PairResult(
                class_i=int(_require(x, 'class_i', what='report row')),
                class_j=int(_require(x, 'class_j', what='report row')),
                accuracy=float(_require(x, 'accuracy', what='report row')),
                counts=counts
            )
        except (TypeError, ValueError) as e:
            raise FormatError(f'Invalid report row: {e}')


@dataclass(frozen=True)
class Aggregates:
    mean_accuracy: float
    variance: float
    mean_precision: float
    mean_recall: float
    f1: float

    def to_dict(self) -> dict:
        return {
            'mean_accuracy': self.mean_accuracy,
            'variance': self.variance,
            'mean_precision': self.mean_precision,
            'mean_recall': self.mean_recall,
            'f1': self.f1
        }


@dataclass(frozen=True)
class EvalReport:
    dataset_id: str
    network_kind: str
    rows: Sequence[PairResult]
    aggregates: Aggregates
    config: Dict[str, Any] = field(default_factory=dict)

    def row(self, class_i: int, class_j: int) -> PairResult:
        for r in self.rows:
            if (r.class_i, r.class_j) == (class_i, class_j):
                return r
        raise InvalidArgumentError(f'No row for pair ({class_i}, {class_j})')

    def pairs(self) -> List[tuple]:
        return [(r.class_i, r.class_j) for r in self.rows]
