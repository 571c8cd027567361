from .LossMatrix import LossMatrix
from .TrainConfig import NETWORK_KINDS, TRAIN_CONFIG_KEYS, TrainConfig
from .TrainedQbc import TrainedQbc
