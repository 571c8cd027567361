from .version import __version__
from .main import build_naive, build_spode, build_tan, build_symmetric
from .main import conditional_mutual_information, mutual_information_matrix, max_weight_spanning_tree
from .main import estimate_cpts, joint_probability
from .main import angle_from_probability, compile, simulate, probability_of, sample_shots, export, parse_circuit
from .main import load_idx, save_idx, pool_features, pool_many, fit_binarizer, gaussian_intersections, binarize, binarize_many
from .main import train, predict, predict_many, classical_predict, classical_predict_many, predict_with_loss
from .main import save_model, load_model
from .main import evaluate_pair, evaluate_all_pairs, aggregate, write_report, read_report

from .bayesnet import BayesNet, CptSet, SampleSet, WeightMatrix
from .qcircuit import Circuit, Gate, StateVector
from .preprocess import BinarizerModel, FeatureGaussians, FeatureSpec, ImageDataset
from .classifier import LossMatrix, TrainConfig, TrainedQbc
from .evalharness import Aggregates, ConfusionCounts, EvalReport, PairResult

from ._exceptions import QbcError, InvalidArgumentError, InvalidModelError, FormatError, ResourceLimitError, ReportIOError
