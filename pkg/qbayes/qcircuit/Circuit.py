from dataclasses import dataclass, field
from typing import Dict, Sequence, Tuple, Union

from .._exceptions import InvalidArgumentError

GATE_KINDS = ('x', 'cry')


@dataclass(frozen=True)
class Gate:
    """X, or Ry controlled on all of `controls` being |1> (no controls: plain Ry)"""
    kind: str
    target: int
    controls: Tuple[int, ...] = ()
    theta: Union[float, None] = None

    def __post_init__(self):
        if self.kind not in GATE_KINDS:
            raise InvalidArgumentError(f'Unknown gate kind: {self.kind}')
        object.__setattr__(self, 'controls', tuple(int(c) for c in self.controls))
        if self.target in self.controls:
            raise InvalidArgumentError(f'Gate target {self.target} is also a control')
        if len(set(self.controls)) != len(self.controls):
            raise InvalidArgumentError(f'Gate controls are not distinct: {self.controls}')
        if self.kind == 'x':
            if len(self.controls) > 0 or self.theta is not None:
                raise InvalidArgumentError('X gates take no controls and no angle')
        elif self.theta is None:
            raise InvalidArgumentError('Rotation gates need an angle')
        else:
            object.__setattr__(self, 'theta', float(self.theta))

    @staticmethod
    def x(target: int) -> 'Gate':
        return Gate(kind='x', target=target)

    @staticmethod
    def ry(target: int, theta: float, controls: Sequence[int]=()) -> 'Gate':
        return Gate(kind='cry', target=target, controls=tuple(controls), theta=theta)

    def qubits(self) -> Tuple[int, ...]:
        return self.controls + (self.target,)

    def label(self) -> str:
        if self.kind == 'x':
            return 'X'
        k = len(self.controls)
        if k == 0:
            return 'Ry'
        return 'CRy' if k == 1 else f'C{k}Ry'


@dataclass(frozen=True)
class Circuit:
    """Gate sequence over n_qubits; qubit 0 holds the label y, qubit i the feature x_i"""
    n_qubits: int
    gates: Tuple[Gate, ...] = field(default_factory=tuple)

    def __post_init__(self):
        if self.n_qubits < 1:
            raise InvalidArgumentError(f'A circuit needs at least one qubit: {self.n_qubits}')
        object.__setattr__(self, 'gates', tuple(self.gates))
        for g in self.gates:
            for q in g.qubits():
                if not (0 <= q < self.n_qubits):
                    raise InvalidArgumentError(f'Gate {g} addresses qubit {q} outside 0..{self.n_qubits - 1}')

    def rotations(self) -> Tuple[Gate, ...]:
        return tuple(g for g in self.gates if g.kind == 'cry')

    def summary(self) -> Dict[str, int]:
        """Gate counts by label (X, Ry, CRy, C2Ry, ...)"""
        ret: Dict[str, int] = {}
        for g in self.gates:
            ret[g.label()] = ret.get(g.label(), 0) + 1
        return dict(sorted(ret.items()))
