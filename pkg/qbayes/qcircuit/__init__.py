from .Circuit import GATE_KINDS, Circuit, Gate
from .StateVector import StateVector
from ._export import EXPORT_FORMATS
