import numpy as np

from .._exceptions import InvalidArgumentError
from .SampleSet import SampleSet
from .WeightMatrix import WeightMatrix

CMI_WEIGHTINGS = ('joint', 'class_conditional')


def _joint_table(samples: SampleSet, i: int, j: int, alpha: float) -> np.ndarray:
    # smoothed P(x_i=a, x_j=b, y=c), indexed [a, b, c]
    a = samples.column(i).astype(np.intp)
    b = samples.column(j).astype(np.intp)
    c = samples.labels.astype(np.intp)
    counts = np.bincount(a * 4 + b * 2 + c, minlength=8).astype(np.float64).reshape(2, 2, 2)
    counts += alpha
    return counts / counts.sum()

def _conditional_mutual_information(samples: SampleSet, i: int, j: int, *, alpha: float=1.0, weighting: str='joint') -> float:
    if weighting not in CMI_WEIGHTINGS:
        raise InvalidArgumentError(f'Unknown CMI weighting: {weighting} (expected one of {CMI_WEIGHTINGS})')
    if i == j:
        raise InvalidArgumentError(f'Conditional mutual information needs two distinct features: {i}')
    if i < 1 or j < 1:
        raise InvalidArgumentError(f'CMI is defined between features only: ({i}, {j})')
    if alpha < 0:
        raise InvalidArgumentError(f'alpha must be nonnegative: {alpha}')
    samples.require_non_empty()
    p_abc = _joint_table(samples, i, j, alpha)
    # all marginals come from the same joint table
    p_c = p_abc.sum(axis=(0, 1))
    p_ac = p_abc.sum(axis=1)
    p_bc = p_abc.sum(axis=0)
    total = 0.0
    for c in range(2):
        if p_c[c] == 0:
            continue
        for a in range(2):
            for b in range(2):
                p = p_abc[a, b, c]
                if p == 0:
                    continue
                ratio = p * p_c[c] / (p_ac[a, c] * p_bc[b, c])
                if weighting == 'joint':
                    total += p * np.log(ratio)
                else:
                    total += (p / p_c[c]) * np.log(ratio)
    return max(float(total), 0.0)

def _mutual_information_matrix(samples: SampleSet, *, alpha: float=1.0, weighting: str='joint') -> WeightMatrix:
    n = samples.n_features
    w = np.zeros((n, n))
    for i in range(1, n + 1):
        for j in range(i + 1, n + 1):
            v = _conditional_mutual_information(samples, i, j, alpha=alpha, weighting=weighting)
            w[i - 1, j - 1] = v
            w[j - 1, i - 1] = v
    return WeightMatrix(w)
