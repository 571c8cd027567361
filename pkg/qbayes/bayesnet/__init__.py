from .BayesNet import LABEL_NODE, BayesNet
from .CptSet import CptSet
from .SampleSet import SampleSet
from .WeightMatrix import WeightMatrix
from ._mutual_information import CMI_WEIGHTINGS
