import numpy as np

from .._exceptions import InvalidArgumentError


class SampleSet:
    """Binarized training rows: one label bit and n feature bits per row"""
    def __init__(self, labels: np.ndarray, features: np.ndarray):
        labels = np.asarray(labels)
        features = np.asarray(features)
        if features.ndim != 2:
            raise InvalidArgumentError(f'Features must be a 2-d bit array, got shape {features.shape}')
        if labels.shape != (features.shape[0],):
            raise InvalidArgumentError(f'Label count {labels.shape} does not match feature rows {features.shape[0]}')
        for a in [labels, features]:
            if a.size > 0 and not np.all((a == 0) | (a == 1)):
                raise InvalidArgumentError('Samples must contain only bits 0 and 1')
        self._labels = labels.astype(np.uint8)
        self._features = features.astype(np.uint8)
        self._labels.setflags(write=False)
        self._features.setflags(write=False)

    @property
    def labels(self) -> np.ndarray:
        return self._labels

    @property
    def features(self) -> np.ndarray:
        return self._features

    @property
    def n_features(self) -> int:
        return self._features.shape[1]

    def __len__(self) -> int:
        return self._labels.shape[0]

    def column(self, node: int) -> np.ndarray:
        """Bits of a node across all rows; node 0 is the label"""
        if node == 0:
            return self._labels
        if not (1 <= node <= self.n_features):
            raise InvalidArgumentError(f'Feature index out of range 1..{self.n_features}: {node}')
        return self._features[:, node - 1]

    def require_non_empty(self):
        if len(self) == 0:
            raise InvalidArgumentError('Sample set is empty')
