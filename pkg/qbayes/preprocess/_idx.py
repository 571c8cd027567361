import gzip
import struct
from typing import Tuple

import numpy as np

from .._exceptions import FormatError
from .ImageDataset import ImageDataset

IDX_IMAGES_MAGIC = 0x00000803
IDX_LABELS_MAGIC = 0x00000801
_GZIP_MAGIC = b'\x1f\x8b'


def _read_idx_bytes(path: str) -> bytes:
    with open(path, 'rb') as f:
        data = f.read()
    if data[:2] == _GZIP_MAGIC:
        try:
            data = gzip.decompress(data)
        except (OSError, EOFError) as e:
            raise FormatError(f'Unable to decompress {path}: {e}')
    return data

def _parse_idx(data: bytes, *, magic: int, ndim: int, path: str) -> np.ndarray:
    # Data format (big endian):
    # u32 | Magic (0x0000 08 ndim: unsigned bytes)
    # u32 | size of each dimension
    # u8[] | payload, row-major
    header_size = 4 * (1 + ndim)
    if len(data) < header_size:
        raise FormatError(f'Truncated IDX header in {path}')
    m = struct.unpack('>I', data[:4])[0]
    if m != magic:
        raise FormatError(f'Bad magic number in {path}: {m:#010x} (expected {magic:#010x})')
    dims: Tuple[int, ...] = struct.unpack(f'>{ndim}I', data[4:header_size])
    size = int(np.prod(dims))
    if len(data) - header_size < size:
        raise FormatError(f'Truncated IDX payload in {path}: expected {size} bytes, found {len(data) - header_size}')
    return np.frombuffer(data, dtype=np.uint8, count=size, offset=header_size).reshape(dims)

def _load_idx_images(images_path: str) -> np.ndarray:
    pixels = _parse_idx(_read_idx_bytes(images_path), magic=IDX_IMAGES_MAGIC, ndim=3, path=images_path)
    return pixels.astype(np.float32) / np.float32(255)

def _load_idx(images_path: str, labels_path: str) -> ImageDataset:
    pixels = _parse_idx(_read_idx_bytes(images_path), magic=IDX_IMAGES_MAGIC, ndim=3, path=images_path)
    labels = _parse_idx(_read_idx_bytes(labels_path), magic=IDX_LABELS_MAGIC, ndim=1, path=labels_path)
    if pixels.shape[0] != labels.shape[0]:
        raise FormatError(f'Image count {pixels.shape[0]} does not match label count {labels.shape[0]}')
    return ImageDataset(pixels.astype(np.float32) / np.float32(255), labels)

def _save_idx(dataset: ImageDataset, images_path: str, labels_path: str, *, compress: bool=False) -> None:
    pixels = np.rint(np.asarray(dataset.images, dtype=np.float64) * 255).clip(0, 255).astype(np.uint8)
    count, rows, cols = pixels.shape
    image_bytes = struct.pack('>4I', IDX_IMAGES_MAGIC, count, rows, cols) + pixels.tobytes()
    label_bytes = struct.pack('>2I', IDX_LABELS_MAGIC, count) + dataset.labels.astype(np.uint8).tobytes()
    for path, data in [(images_path, image_bytes), (labels_path, label_bytes)]:
        if compress:
            data = gzip.compress(data)
        with open(path, 'wb') as f:
            f.write(data)
