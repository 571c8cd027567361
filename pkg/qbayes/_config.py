import os
from typing import Union

from ._exceptions import InvalidArgumentError

_DEFAULT_MAX_QUBITS = 26

def _qbc_data_dir() -> Union[str, None]:
    return os.getenv('QBC_DATA_DIR', None)

def _max_qubits() -> int:
    v = os.getenv('QBC_MAX_QUBITS', None)
    if v is None:
        return _DEFAULT_MAX_QUBITS
    try:
        n = int(v)
    except ValueError:
        raise InvalidArgumentError(f'QBC_MAX_QUBITS must be an integer: {v}')
    if n < 1:
        raise InvalidArgumentError(f'QBC_MAX_QUBITS must be positive: {n}')
    return n

# Standard file names of the MNIST-family distributions
_DATASET_FILES = {
    'train_images': 'train-images-idx3-ubyte',
    'train_labels': 'train-labels-idx1-ubyte',
    'test_images': 't10k-images-idx3-ubyte',
    'test_labels': 't10k-labels-idx1-ubyte'
}

def _dataset_paths(dataset: str, data_dir: Union[str, None]=None) -> dict:
    if data_dir is None:
        data_dir = _qbc_data_dir()
    if data_dir is None:
        raise InvalidArgumentError(f'No data directory for dataset {dataset}: pass a data dir or set QBC_DATA_DIR')
    d = os.path.join(data_dir, dataset)
    if not os.path.isdir(d):
        d = data_dir
    ret = {}
    for key, basename in _DATASET_FILES.items():
        p = os.path.join(d, basename)
        if not os.path.exists(p) and os.path.exists(p + '.gz'):
            p = p + '.gz'
        ret[key] = p
    return ret
