from typing import List, Sequence, Tuple

import numpy as np

from .._exceptions import FormatError, InvalidArgumentError
from .._misc import _require

Block = Tuple[int, int, int, int]


class FeatureSpec:
    """Where to sample an image: one (row, col, height, width) block per feature, average-pooled"""
    def __init__(self, *, blocks: Sequence[Sequence[int]], image_shape: Tuple[int, int]=(28, 28), pooling: str='average'):
        if pooling != 'average':
            raise InvalidArgumentError(f'Unsupported pooling method: {pooling}')
        if len(blocks) < 1:
            raise InvalidArgumentError('A feature spec needs at least one block')
        self._blocks: Tuple[Block, ...] = tuple(tuple(int(v) for v in b) for b in blocks)  # type: ignore
        self._image_shape = (int(image_shape[0]), int(image_shape[1]))
        self._pooling = pooling
        for b in self._blocks:
            if len(b) != 4:
                raise InvalidArgumentError(f'A block is (row, col, height, width): {b}')
            _check_block(b, self._image_shape)

    @staticmethod
    def grid(block_size: int=7, row_offsets: Sequence[int]=(3, 10, 17), col_offsets: Sequence[int]=(3, 10, 17), image_shape: Tuple[int, int]=(28, 28)) -> 'FeatureSpec':
        """Square blocks at every (row, col) offset combination, row-major"""
        blocks = [(r, c, block_size, block_size) for r in row_offsets for c in col_offsets]
        return FeatureSpec(blocks=blocks, image_shape=image_shape)

    @staticmethod
    def default() -> 'FeatureSpec':
        return FeatureSpec.grid()

    @property
    def blocks(self) -> Tuple[Block, ...]:
        return self._blocks

    @property
    def image_shape(self) -> Tuple[int, int]:
        return self._image_shape

    @property
    def pooling(self) -> str:
        return self._pooling

    @property
    def n_features(self) -> int:
        return len(self._blocks)

    def point_symmetric_pairs(self) -> List[Tuple[int, int]]:
        """Feature pairs whose blocks map onto each other under a 180 degree rotation about the center of the sampled region"""
        top, left, bottom, right = self._extent()
        return self._pairs_under(lambda r, c, h, w: (top + bottom - r - h, left + right - c - w, h, w))

    def mirror_symmetric_pairs(self) -> List[Tuple[int, int]]:
        """Feature pairs whose blocks mirror each other left-to-right about the center of the sampled region"""
        _, left, _, right = self._extent()
        return self._pairs_under(lambda r, c, h, w: (r, left + right - c - w, h, w))

    def _extent(self) -> Tuple[int, int, int, int]:
        # bounding box of all blocks, bottom and right exclusive
        return (
            min(b[0] for b in self._blocks),
            min(b[1] for b in self._blocks),
            max(b[0] + b[2] for b in self._blocks),
            max(b[1] + b[3] for b in self._blocks)
        )

    def _pairs_under(self, transform) -> List[Tuple[int, int]]:
        index = {b: i + 1 for i, b in enumerate(self._blocks)}
        ret = []
        for i, b in enumerate(self._blocks):
            j = index.get(tuple(transform(*b)), None)
            if j is not None and i + 1 < j:
                ret.append((i + 1, j))
        return ret

    def to_dict(self) -> dict:
        return {
            'blocks': [list(b) for b in self._blocks],
            'image_shape': list(self._image_shape),
            'pooling': self._pooling
        }

    @staticmethod
    def from_dict(x: dict) -> 'FeatureSpec':
        try:
            return FeatureSpec(
                blocks=_require(x, 'blocks', what='feature spec'),
                image_shape=tuple(x.get('image_shape', (28, 28))),
                pooling=x.get('pooling', 'average')
            )
        except (TypeError, ValueError) as e:
            raise FormatError(f'Invalid feature spec: {e}')

    def __eq__(self, other) -> bool:
        if not isinstance(other, FeatureSpec):
            return NotImplemented
        return self.to_dict() == other.to_dict()

    def __repr__(self) -> str:
        return f'FeatureSpec(blocks={list(self._blocks)}, image_shape={self._image_shape})'


def _check_block(b: Block, image_shape: Tuple[int, int]):
    r, c, h, w = b
    H, W = image_shape
    if h < 1 or w < 1 or r < 0 or c < 0 or r + h > H or c + w > W:
        raise InvalidArgumentError(f'Block {b} does not lie within a {H}x{W} image')

def _pool_many(images: np.ndarray, spec: FeatureSpec) -> np.ndarray:
    images = np.asarray(images)
    if images.ndim != 3:
        raise InvalidArgumentError(f'Expected a stack of images (count, H, W), got shape {images.shape}')
    shape = (images.shape[1], images.shape[2])
    out = np.empty((images.shape[0], spec.n_features), dtype=np.float64)
    for k, b in enumerate(spec.blocks):
        _check_block(b, shape)
        r, c, h, w = b
        out[:, k] = images[:, r:r + h, c:c + w].mean(axis=(1, 2), dtype=np.float64)
    return out

def _pool_features(image: np.ndarray, spec: FeatureSpec) -> np.ndarray:
    image = np.asarray(image)
    if image.ndim != 2:
        raise InvalidArgumentError(f'Expected a single 2-d image, got shape {image.shape}')
    return _pool_many(image[np.newaxis], spec)[0]
