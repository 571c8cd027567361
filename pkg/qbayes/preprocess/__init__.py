from .BinarizerModel import DEFAULT_SIGMA_FLOOR, BinarizerModel, FeatureGaussians
from .FeatureSpec import FeatureSpec
from .ImageDataset import ImageDataset
from ._idx import IDX_IMAGES_MAGIC, IDX_LABELS_MAGIC
