from .._exceptions import FormatError, InvalidModelError
from .._misc import _json_dumps, _read_json_file, _require, _write_text_file
from ..bayesnet.BayesNet import BayesNet
from ..bayesnet.CptSet import CptSet
from ..preprocess.BinarizerModel import BinarizerModel
from ..preprocess.FeatureSpec import FeatureSpec
from ..qcircuit._compile import _compile
from ..qcircuit._export import _circuit_from_dict, _circuit_to_dict
from .TrainConfig import TrainConfig
from .TrainedQbc import TrainedQbc

MODEL_FORMAT_VERSION = 1


def _model_to_dict(model: TrainedQbc) -> dict:
    return {
        'format_version': MODEL_FORMAT_VERSION,
        'class_pair': list(model.class_pair),
        'config': model.config.to_dict(),
        'feature_spec': model.feature_spec.to_dict(),
        'binarizer': model.binarizer.to_dict(),
        'net': model.net.to_dict(),
        'cpts': model.cpts.to_dict(),
        'circuit': _circuit_to_dict(model.circuit),
        'metadata': model.metadata
    }

def _model_from_dict(x: dict) -> TrainedQbc:
    version = _require(x, 'format_version', what='model')
    if version != MODEL_FORMAT_VERSION:
        raise FormatError(f'Unsupported model format version: {version}')
    class_pair = _require(x, 'class_pair', what='model')
    if not isinstance(class_pair, list) or len(class_pair) != 2:
        raise FormatError(f'class_pair must be a list of two labels: {class_pair}')
    config = TrainConfig.from_dict(_require(x, 'config', what='model'))
    feature_spec = FeatureSpec.from_dict(_require(x, 'feature_spec', what='model'))
    if feature_spec != config.feature_spec:
        raise InvalidModelError('Feature spec does not match the one in the training config')
    binarizer = BinarizerModel.from_dict(_require(x, 'binarizer', what='model'))
    net = BayesNet.from_dict(_require(x, 'net', what='model'))
    cpts = CptSet.from_dict(_require(x, 'cpts', what='model'))
    circuit = _circuit_from_dict(_require(x, 'circuit', what='model'))
    metadata = _require(x, 'metadata', what='model')
    if not isinstance(metadata, dict):
        raise FormatError('metadata must be an object')
    if binarizer.n_features != net.n_features or net.n_features != feature_spec.n_features:
        raise InvalidModelError(f'Inconsistent feature counts: spec {feature_spec.n_features}, binarizer {binarizer.n_features}, network {net.n_features}')
    if not cpts.matches(net):
        raise InvalidModelError('CPT tables do not match the network structure')
    expected = _compile(net, cpts, elide_x_pairs=config.elide_x_pairs)
    if expected != circuit:
        raise InvalidModelError('Stored circuit does not match the circuit compiled from the network and CPTs')
    return TrainedQbc(
        class_pair=(int(class_pair[0]), int(class_pair[1])),
        config=config,
        binarizer=binarizer,
        net=net,
        cpts=cpts,
        circuit=circuit,
        metadata=metadata
    )

def _save_model(model: TrainedQbc, path: str) -> None:
    _write_text_file(path, _json_dumps(_model_to_dict(model), indent=2))

def _load_model(path: str) -> TrainedQbc:
    return _model_from_dict(_read_json_file(path, what='model'))
