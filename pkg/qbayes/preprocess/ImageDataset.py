import hashlib
from typing import List, Sequence

import numpy as np

from .._exceptions import InvalidArgumentError


class ImageDataset:
    """Grayscale images scaled to [0, 1] with integer class labels"""
    def __init__(self, images: np.ndarray, labels: np.ndarray):
        images = np.asarray(images)
        labels = np.asarray(labels)
        if images.ndim != 3:
            raise InvalidArgumentError(f'Images must have shape (count, H, W), got {images.shape}')
        if labels.shape != (images.shape[0],):
            raise InvalidArgumentError(f'{images.shape[0]} images but labels have shape {labels.shape}')
        self._images = images.astype(np.float32, copy=False)
        self._labels = labels.astype(np.int64, copy=False)
        self._images.setflags(write=False)
        self._labels.setflags(write=False)

    @property
    def images(self) -> np.ndarray:
        return self._images

    @property
    def labels(self) -> np.ndarray:
        return self._labels

    @property
    def image_shape(self):
        return tuple(self._images.shape[1:])

    def __len__(self) -> int:
        return self._labels.shape[0]

    def classes(self) -> List[int]:
        return sorted(int(c) for c in np.unique(self._labels))

    def filter(self, classes: Sequence[int]) -> 'ImageDataset':
        mask = np.isin(self._labels, list(classes))
        return ImageDataset(self._images[mask], self._labels[mask])

    def digest(self) -> str:
        h = hashlib.sha1()
        h.update(np.ascontiguousarray(self._images).tobytes())
        h.update(np.ascontiguousarray(self._labels).tobytes())
        return h.hexdigest()
