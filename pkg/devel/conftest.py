import os

import hypothesis
import numpy as np
import pytest

import qbayes as qb

hypothesis.settings.register_profile("fast", max_examples=10)
hypothesis.settings.register_profile("thorough", max_examples=200, deadline=None)
hypothesis.settings.load_profile(os.getenv('QBC_HYPOTHESIS_PROFILE', 'default'))


def synthetic_dataset(n_per_class: int, seed: int) -> qb.ImageDataset:
    """28x28 images of classes 0..9 whose default-grid blocks have class-dependent brightness"""
    rng = np.random.default_rng(seed)
    spec = qb.FeatureSpec.default()
    images = []
    labels = []
    for c in range(10):
        # block 0 alone separates every pair of classes
        brightness = [((k + 1) * (c + 1) % 11) / 11 for k in range(spec.n_features)]
        for _ in range(n_per_class):
            img = rng.uniform(0, 0.05, size=(28, 28))
            for k, (r, col, h, w) in enumerate(spec.blocks):
                img[r:r + h, col:col + w] += brightness[k] + rng.normal(0, 0.02)
            images.append(np.clip(img, 0, 1))
            labels.append(c)
    return qb.ImageDataset(np.array(images, dtype=np.float32), np.array(labels))

@pytest.fixture(scope='session')
def synthetic_train() -> qb.ImageDataset:
    return synthetic_dataset(30, seed=1)

@pytest.fixture(scope='session')
def synthetic_test() -> qb.ImageDataset:
    return synthetic_dataset(15, seed=2)

@pytest.fixture
def idx_files(tmp_path, synthetic_train, synthetic_test):
    """Synthetic train/test splits written as IDX files (test split gzipped)"""
    paths = {
        'train_images': str(tmp_path / 'train-images-idx3-ubyte'),
        'train_labels': str(tmp_path / 'train-labels-idx1-ubyte'),
        'test_images': str(tmp_path / 't10k-images-idx3-ubyte.gz'),
        'test_labels': str(tmp_path / 't10k-labels-idx1-ubyte.gz')
    }
    qb.save_idx(synthetic_train, paths['train_images'], paths['train_labels'])
    qb.save_idx(synthetic_test, paths['test_images'], paths['test_labels'], compress=True)
    return paths

def random_samples(rng: np.random.Generator, n_rows: int, n_features: int) -> qb.SampleSet:
    labels = rng.integers(0, 2, size=n_rows)
    features = rng.integers(0, 2, size=(n_rows, n_features))
    # correlate a few features with the label and with each other
    features[:, 0] = np.where(rng.uniform(size=n_rows) < 0.8, labels, features[:, 0])
    if n_features > 1:
        features[:, 1] = np.where(rng.uniform(size=n_rows) < 0.7, features[:, 0], features[:, 1])
    return qb.SampleSet(labels, features)

def random_network(kind: str, rng: np.random.Generator, n: int, samples: qb.SampleSet) -> qb.BayesNet:
    if kind == 'naive':
        return qb.build_naive(n)
    if kind == 'spode':
        return qb.build_spode(n, int(rng.integers(1, n + 1)))
    if kind == 'tan':
        return qb.build_tan(samples, n, root=int(rng.integers(1, n + 1)))
    perm = [int(v) + 1 for v in rng.permutation(n)]
    pairs = [(perm[2 * k], perm[2 * k + 1]) for k in range(n // 2)]
    return qb.build_symmetric(n, pairs)

def random_cpts(net: qb.BayesNet, rng: np.random.Generator) -> qb.CptSet:
    tables = {}
    for node in range(1, net.n_features + 1):
        k = len(net.parents(node))
        tables[node] = {format(a, f'0{k}b'): float(rng.uniform(0.05, 0.95)) for a in range(2 ** k)}
    return qb.CptSet(prior0=float(rng.uniform(0.05, 0.95)), tables=tables, alpha=1.0)

requires_mnist = pytest.mark.skipif(
    os.getenv('QBC_DATA_DIR', None) is None,
    reason='QBC_DATA_DIR is not set'
)
