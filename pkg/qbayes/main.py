from typing import Dict, List, Sequence, Tuple, Union

import numpy as np

from .bayesnet.BayesNet import BayesNet
from .bayesnet.CptSet import CptSet
from .bayesnet.SampleSet import SampleSet
from .bayesnet.WeightMatrix import WeightMatrix
from .bayesnet._estimate import _estimate_cpts, _joint_probability
from .bayesnet._mutual_information import _conditional_mutual_information, _mutual_information_matrix
from .bayesnet._spanning_tree import _max_weight_spanning_tree
from .bayesnet._structure import _build_naive, _build_spode, _build_symmetric, _build_tan
from .classifier.LossMatrix import LossMatrix
from .classifier.TrainConfig import TrainConfig
from .classifier.TrainedQbc import TrainedQbc
from .classifier._model_file import _load_model, _save_model
from .classifier._predict import (_classical_predict, _classical_predict_many, _predict,
                                  _predict_many, _predict_with_loss)
from .classifier._train import _train
from .evalharness.EvalReport import Aggregates, ConfusionCounts, EvalReport, PairResult
from .evalharness._evaluate import _aggregate, _evaluate_all_pairs, _evaluate_pair
from .evalharness._report import _read_report, _write_report
from .preprocess.BinarizerModel import (BinarizerModel, _binarize, _binarize_many,
                                        _fit_binarizer, _gaussian_intersections)
from .preprocess.FeatureSpec import FeatureSpec, _pool_features, _pool_many
from .preprocess.ImageDataset import ImageDataset
from .preprocess._idx import _load_idx, _save_idx
from .qcircuit.Circuit import Circuit
from .qcircuit.StateVector import StateVector
from .qcircuit._compile import _angle_from_probability, _compile
from .qcircuit._export import _export, _parse_circuit
from .qcircuit._simulate import _probability_of, _sample_shots, _simulate

Scores = Tuple[float, float]

################################################
# Bayesian networks

def build_naive(n: int) -> BayesNet:
    """Naive network: every feature depends on the label only

    Args:
        n (int): Number of features (at least 1)

    Returns:
        BayesNet: The network, encoded in feature order 1..n
    """
    return _build_naive(n)

def build_spode(n: int, superparent: int) -> BayesNet:
    """Super-parent network: every other feature depends on the label and on the superparent

    Args:
        n (int): Number of features
        superparent (int): Feature index 1..n shared as parent by all other features

    Returns:
        BayesNet: The network, encoded superparent first
    """
    return _build_spode(n, superparent)

def conditional_mutual_information(samples: SampleSet, i: int, j: int, alpha: float=1.0, *, weighting: str='joint') -> float:
    """Conditional mutual information I(x_i; x_j | y) in nats

    Args:
        samples (SampleSet): Binarized training rows (non-empty)
        i (int): First feature index
        j (int): Second feature index, distinct from i
        alpha (float, optional): Pseudocount added to each cell of the (x_i, x_j, y) table. Defaults to 1.
        weighting (str, optional): 'joint' weights each term by P(x_i, x_j, y) (standard CMI);
            'class_conditional' weights by P(x_i, x_j | y). Defaults to 'joint'.

    Returns:
        float: The nonnegative CMI value
    """
    return _conditional_mutual_information(samples, i, j, alpha=alpha, weighting=weighting)

def mutual_information_matrix(samples: SampleSet, alpha: float=1.0, *, weighting: str='joint') -> WeightMatrix:
    """CMI between every pair of features"""
    return _mutual_information_matrix(samples, alpha=alpha, weighting=weighting)

def max_weight_spanning_tree(weights: WeightMatrix) -> List[Tuple[int, int]]:
    """Maximum-weight spanning tree over the features (Kruskal, ties broken by lexicographic edge)

    Args:
        weights (WeightMatrix): Symmetric weights over at least 2 features

    Returns:
        List[Tuple[int, int]]: The n-1 tree edges (i, j) with i < j, in the order they were accepted
    """
    return _max_weight_spanning_tree(weights)

def build_tan(samples: SampleSet, n: int, root: int=1, alpha: float=1.0, *, weighting: str='joint') -> BayesNet:
    """Tree-augmented naive network learned from samples

    Args:
        samples (SampleSet): Binarized training rows
        n (int): Number of features
        root (int, optional): Root of the feature tree. Defaults to 1.
        alpha (float, optional): Pseudocount for the CMI tables. Defaults to 1.
        weighting (str, optional): CMI weighting, see conditional_mutual_information. Defaults to 'joint'.

    Returns:
        BayesNet: Tree edges directed away from root, encoded root-first breadth-first.
        A single feature falls back to the naive network with a warning.
    """
    return _build_tan(samples, n, root=root, alpha=alpha, weighting=weighting)

def build_symmetric(n: int, pairs: Sequence[Tuple[int, int]]) -> BayesNet:
    """Naive network plus one edge per pair of symmetric features, lower index to higher

    Args:
        n (int): Number of features
        pairs (Sequence[Tuple[int, int]]): Disjoint feature pairs

    Returns:
        BayesNet: The network
    """
    return _build_symmetric(n, pairs)

def estimate_cpts(net: BayesNet, samples: SampleSet, alpha: float=1.0) -> CptSet:
    """Laplace-smoothed conditional probability tables

    Args:
        net (BayesNet): The network structure
        samples (SampleSet): Binarized training rows (non-empty)
        alpha (float, optional): Pseudocount; 0 disables smoothing. Defaults to 1.

    Returns:
        CptSet: P(y=0) and P(x_i=0 | parents) for every parent assignment
    """
    return _estimate_cpts(net, samples, alpha=alpha)

def joint_probability(net: BayesNet, cpts: CptSet, y: int, x: Sequence[int]) -> float:
    """Chain-rule probability P(y) * prod_i P(x_i | parents(x_i))"""
    return _joint_probability(net, cpts, y, x)

################################################
# Circuits

def angle_from_probability(p: float) -> float:
    """Rotation angle 2*arccos(sqrt(p)), so that Ry(angle)|0> measures 0 with probability p"""
    return _angle_from_probability(p)

def compile(net: BayesNet, cpts: CptSet, *, elide_x_pairs: bool=False) -> Circuit:
    """Compile a network and its CPTs into X / Ry / multi-controlled Ry gates

    Args:
        net (BayesNet): The network
        cpts (CptSet): Its conditional probability tables
        elide_x_pairs (bool, optional): Remove adjacent cancelling X gates. Defaults to False.

    Returns:
        Circuit: A circuit over n+1 qubits whose output amplitudes are the square roots of the joint probabilities
    """
    return _compile(net, cpts, elide_x_pairs=elide_x_pairs)

def simulate(circuit: Circuit, *, max_qubits: Union[int, None]=None) -> StateVector:
    """Run a circuit on |0...0> with an exact real statevector

    Args:
        circuit (Circuit): The circuit
        max_qubits (Union[int, None], optional): Qubit cap; defaults to QBC_MAX_QUBITS or 26.

    Returns:
        StateVector: The output state
    """
    return _simulate(circuit, max_qubits=max_qubits)

def probability_of(state: StateVector, y: int, x: Sequence[int]) -> float:
    """Probability of measuring the basis state |y x_1 ... x_n>"""
    return _probability_of(state, y, x)

def sample_shots(state: StateVector, shots: int, seed: int=0) -> Dict[int, int]:
    """Simulated measurement: counts per basis index over `shots` repetitions

    Returns:
        Dict[int, int]: Nonzero counts keyed by basis index
    """
    return _sample_shots(state, shots, seed=seed)

def export(circuit: Circuit, format: str='json') -> str:
    """Serialize a circuit as JSON or OpenQASM 3 text"""
    return _export(circuit, format=format)

def parse_circuit(text: str, format: str='json') -> Circuit:
    """Parse the output of export back into a Circuit"""
    return _parse_circuit(text, format=format)

################################################
# Preprocessing

def load_idx(images_path: str, labels_path: str) -> ImageDataset:
    """Load an IDX image file and label file (raw or gzip-compressed)

    Args:
        images_path (str): Path of the images file (magic 0x00000803)
        labels_path (str): Path of the labels file (magic 0x00000801)

    Returns:
        ImageDataset: Images scaled to [0, 1] with their labels
    """
    return _load_idx(images_path, labels_path)

def save_idx(dataset: ImageDataset, images_path: str, labels_path: str, *, compress: bool=False) -> None:
    """Write a dataset as an IDX image/label file pair, optionally gzip-compressed"""
    _save_idx(dataset, images_path, labels_path, compress=compress)

def pool_features(image: np.ndarray, spec: FeatureSpec) -> np.ndarray:
    """Average of each sampling block of one image"""
    return _pool_features(image, spec)

def pool_many(images: np.ndarray, spec: FeatureSpec) -> np.ndarray:
    """pool_features over a stack of images; returns shape (count, n_features)"""
    return _pool_many(images, spec)

def fit_binarizer(values0: np.ndarray, values1: np.ndarray, *, sigma_floor: float=1e-3) -> BinarizerModel:
    """Fit one normal distribution per class and feature, and the thresholds between them

    Args:
        values0 (np.ndarray): Pooled values of class 0, shape (count, n_features) or (count,)
        values1 (np.ndarray): Pooled values of class 1
        sigma_floor (float, optional): Lower bound on the fitted standard deviations. Defaults to 1e-3.

    Returns:
        BinarizerModel: The fitted thresholds
    """
    return _fit_binarizer(values0, values1, sigma_floor=sigma_floor)

def gaussian_intersections(mu0: float, sigma0: float, mu1: float, sigma1: float) -> Tuple[float, ...]:
    """Points where two normal densities are equal: one point, or two in ascending order"""
    ins, _ = _gaussian_intersections(mu0, sigma0, mu1, sigma1)
    return ins

def binarize(model: BinarizerModel, i: int, x: float) -> int:
    """Bit of feature i (1-based) for pooled value x"""
    return _binarize(model, i, x)

def binarize_many(model: BinarizerModel, pooled: np.ndarray) -> np.ndarray:
    """Bits for a (count, n_features) array of pooled values"""
    return _binarize_many(model, pooled)

################################################
# Classifier

def train(dataset: ImageDataset, class_pair: Tuple[int, int], config: Union[TrainConfig, None]=None) -> TrainedQbc:
    """Train a classifier for two classes of an image dataset

    Args:
        dataset (ImageDataset): Training images; other classes are ignored
        class_pair (Tuple[int, int]): The two labels; the smaller becomes y=0
        config (Union[TrainConfig, None], optional): Training options. Defaults to TrainConfig().

    Returns:
        TrainedQbc: The trained model, with its compiled circuit
    """
    return _train(dataset, class_pair, config if config is not None else TrainConfig())

def predict(model: TrainedQbc, image: np.ndarray) -> Tuple[int, Scores]:
    """Classify an image by reading P(y=0, X*) and P(y=1, X*) off the circuit

    Args:
        model (TrainedQbc): The trained model
        image (np.ndarray): One image scaled to [0, 1]

    Returns:
        Tuple[int, Tuple[float, float]]: The original label, and the two scores (ties go to the smaller label)
    """
    return _predict(model, image)

def predict_many(model: TrainedQbc, images: np.ndarray) -> Tuple[List[int], np.ndarray]:
    """predict over a stack of images; scores have shape (count, 2)"""
    return _predict_many(model, images)

def classical_predict(model: TrainedQbc, image: np.ndarray) -> Tuple[int, Scores]:
    """Same contract as predict, with scores computed by the chain rule instead of the circuit"""
    return _classical_predict(model, image)

def classical_predict_many(model: TrainedQbc, images: np.ndarray) -> Tuple[List[int], np.ndarray]:
    return _classical_predict_many(model, images)

def predict_with_loss(model: TrainedQbc, image: np.ndarray, loss: LossMatrix) -> int:
    """Label of the class with the smallest conditional risk under a loss matrix"""
    return _predict_with_loss(model, image, loss)

def save_model(model: TrainedQbc, path: str) -> None:
    """Write a model as a JSON document"""
    _save_model(model, path)

def load_model(path: str) -> TrainedQbc:
    """Read a model written by save_model, checking that its circuit matches its network and CPTs"""
    return _load_model(path)

################################################
# Evaluation

def evaluate_pair(model: TrainedQbc, test: ImageDataset) -> Tuple[float, ConfusionCounts]:
    """Accuracy and confusion counts of a model on the test images of its two classes"""
    return _evaluate_pair(model, test)

def evaluate_all_pairs(
    train: ImageDataset,
    test: ImageDataset,
    config: Union[TrainConfig, None]=None,
    *,
    dataset_id: str='custom',
    jobs: int=1,
    verbose: bool=False
) -> EvalReport:
    """Train and evaluate one classifier per pair of the classes 0..9

    Args:
        train (ImageDataset): Training images containing every class 0..9
        test (ImageDataset): Test images containing every class 0..9
        config (Union[TrainConfig, None], optional): Training options. Defaults to TrainConfig().
        dataset_id (str, optional): Name recorded in the report. Defaults to 'custom'.
        jobs (int, optional): Worker processes. Defaults to 1.
        verbose (bool, optional): Print one progress line per pair to stderr. Defaults to False.

    Returns:
        EvalReport: 45 rows ordered by (i, j), plus aggregates
    """
    return _evaluate_all_pairs(train, test, config if config is not None else TrainConfig(), dataset_id=dataset_id, jobs=jobs, verbose=verbose)

def aggregate(rows: Sequence[PairResult]) -> Aggregates:
    """Mean accuracy, population variance, mean precision, mean recall and their F1"""
    return _aggregate(rows)

def write_report(report: EvalReport, path: str, format: Union[str, None]=None) -> None:
    """Write a report as CSV or JSON (inferred from the file extension when format is None)"""
    _write_report(report, path, format=format)

def read_report(path: str, format: Union[str, None]=None) -> EvalReport:
    """Read a report written by write_report"""
    return _read_report(path, format=format)
