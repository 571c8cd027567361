import re
from typing import List

from .._exceptions import FormatError, InvalidArgumentError
from .._misc import _exact_float, _json_dumps, _json_loads, _require
from .Circuit import Circuit, Gate

CIRCUIT_FORMAT_VERSION = 1
EXPORT_FORMATS = ('json', 'qasm3')


def _circuit_to_dict(circuit: Circuit) -> dict:
    gates = []
    for g in circuit.gates:
        if g.kind == 'x':
            gates.append({'kind': 'x', 'target': g.target})
        else:
            gates.append({'kind': 'cry', 'controls': list(g.controls), 'target': g.target, 'theta': _exact_float(g.theta)})
    return {'format_version': CIRCUIT_FORMAT_VERSION, 'qubits': circuit.n_qubits, 'gates': gates}

def _circuit_from_dict(x: dict) -> Circuit:
    version = x.get('format_version', CIRCUIT_FORMAT_VERSION) if isinstance(x, dict) else None
    if version != CIRCUIT_FORMAT_VERSION:
        raise FormatError(f'Unsupported circuit format version: {version}')
    try:
        gates = []
        for r in _require(x, 'gates', what='circuit'):
            kind = _require(r, 'kind', what='gate')
            target = int(_require(r, 'target', what='gate'))
            if kind == 'x':
                gates.append(Gate.x(target))
            elif kind == 'cry':
                gates.append(Gate.ry(target, float(_require(r, 'theta', what='gate')), controls=[int(c) for c in _require(r, 'controls', what='gate')]))
            else:
                raise FormatError(f'Unknown gate kind in circuit document: {kind}')
        return Circuit(n_qubits=int(_require(x, 'qubits', what='circuit')), gates=tuple(gates))
    except (TypeError, ValueError, InvalidArgumentError) as e:
        raise FormatError(f'Invalid circuit document: {e}')

def _circuit_to_qasm3(circuit: Circuit) -> str:
    lines = [
        'OPENQASM 3.0;',
        'include "stdgates.inc";',
        f'// format_version {CIRCUIT_FORMAT_VERSION}',
        f'qubit[{circuit.n_qubits}] q;'
    ]
    for g in circuit.gates:
        if g.kind == 'x':
            lines.append(f'x q[{g.target}];')
            continue
        theta = format(g.theta, '.17g')
        args = ', '.join(f'q[{c}]' for c in g.qubits())
        if len(g.controls) == 0:
            lines.append(f'ry({theta}) {args};')
        else:
            lines.append(f'ctrl({len(g.controls)}) @ ry({theta}) {args};')
    return '\n'.join(lines) + '\n'

_QUBIT_DECL = re.compile(r'^qubit\[(\d+)\]\s+q;$')
_X_STMT = re.compile(r'^x\s+q\[(\d+)\];$')
_RY_STMT = re.compile(r'^(?:ctrl\((\d+)\)\s*@\s*)?ry\(([^)]+)\)\s+(.+);$')
_QUBIT_REF = re.compile(r'^q\[(\d+)\]$')

def _circuit_from_qasm3(text: str) -> Circuit:
    n_qubits = None
    gates: List[Gate] = []
    for lineno, raw in enumerate(text.splitlines(), start=1):
        line = raw.strip()
        if line == '' or line.startswith('//') or line.startswith('OPENQASM') or line.startswith('include'):
            continue
        m = _QUBIT_DECL.match(line)
        if m:
            n_qubits = int(m.group(1))
            continue
        m = _X_STMT.match(line)
        if m:
            gates.append(Gate.x(int(m.group(1))))
            continue
        m = _RY_STMT.match(line)
        if m:
            qubits = []
            for ref in m.group(3).split(','):
                mm = _QUBIT_REF.match(ref.strip())
                if not mm:
                    raise FormatError(f'Line {lineno}: bad qubit reference: {ref}')
                qubits.append(int(mm.group(1)))
            k = int(m.group(1)) if m.group(1) else 0
            if len(qubits) != k + 1:
                raise FormatError(f'Line {lineno}: expected {k + 1} qubits, got {len(qubits)}')
            try:
                theta = float(m.group(2))
            except ValueError:
                raise FormatError(f'Line {lineno}: bad angle: {m.group(2)}')
            gates.append(Gate.ry(qubits[-1], theta, controls=qubits[:-1]))
            continue
        raise FormatError(f'Line {lineno}: unsupported statement: {line}')
    if n_qubits is None:
        raise FormatError('No qubit register declaration found')
    try:
        return Circuit(n_qubits=n_qubits, gates=tuple(gates))
    except InvalidArgumentError as e:
        raise FormatError(f'Invalid circuit: {e}')

def _export(circuit: Circuit, format: str='json') -> str:
    if format == 'json':
        return _json_dumps(_circuit_to_dict(circuit))
    elif format == 'qasm3':
        return _circuit_to_qasm3(circuit)
    else:
        raise InvalidArgumentError(f'Unknown export format: {format} (expected one of {EXPORT_FORMATS})')

def _parse_circuit(text: str, format: str='json') -> Circuit:
    if format == 'json':
        return _circuit_from_dict(_json_loads(text, what='circuit'))
    elif format == 'qasm3':
        return _circuit_from_qasm3(text)
    else:
        raise InvalidArgumentError(f'Unknown circuit format: {format} (expected one of {EXPORT_FORMATS})')
