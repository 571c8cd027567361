from .EvalReport import Aggregates, ConfusionCounts, EvalReport, PairResult
from ._reference import PUBLISHED_AGGREGATES, PUBLISHED_PAIR_0_1_ACCURACY
from ._report import CSV_COLUMNS, REPORT_FORMATS
