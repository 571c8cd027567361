import itertools
import math

import numpy as np
import pytest
import simplejson
from hypothesis import given, settings
import hypothesis.strategies as st

import qbayes as qb
from conftest import random_cpts, random_network, random_samples


def _naive_example():
    net = qb.build_naive(1)
    cpts = qb.CptSet(prior0=0.5, tables={1: {'0': 0.8, '1': 0.3}}, alpha=1)
    return net, cpts

def test_angle_from_probability():
    assert qb.angle_from_probability(1) == 0
    assert qb.angle_from_probability(0) == pytest.approx(math.pi)
    assert qb.angle_from_probability(0.5) == pytest.approx(math.pi / 2)
    # rounding noise just outside [0, 1] is clamped
    assert qb.angle_from_probability(1 + 1e-13) == 0
    with pytest.raises(qb.InvalidArgumentError):
        qb.angle_from_probability(1.1)
    with pytest.raises(qb.InvalidArgumentError):
        qb.angle_from_probability(-0.01)

@given(st.floats(min_value=0, max_value=math.pi))
def test_angle_inverts_cos_squared(theta):
    assert qb.angle_from_probability(math.cos(theta / 2) ** 2) == pytest.approx(theta, abs=1e-6)

def test_compile_naive_gates():
    net, cpts = _naive_example()
    circuit = qb.compile(net, cpts)
    assert circuit.n_qubits == 2
    assert [g.label() for g in circuit.gates] == ['Ry', 'X', 'CRy', 'X', 'CRy']
    assert circuit.gates[2].controls == (0,)
    assert circuit.gates[2].theta == pytest.approx(qb.angle_from_probability(0.8))
    assert circuit.gates[4].theta == pytest.approx(qb.angle_from_probability(0.3))

def test_compile_spode_gate_counts():
    net = qb.build_spode(3, 2)
    cpts = random_cpts(net, np.random.default_rng(0))
    circuit = qb.compile(net, cpts)
    summary = circuit.summary()
    assert summary['Ry'] == 1
    assert summary['CRy'] == 2
    assert summary['C2Ry'] == 8
    assert len(circuit.rotations()) == 11

def test_naive_example_amplitudes():
    net, cpts = _naive_example()
    state = qb.simulate(qb.compile(net, cpts))
    assert np.allclose(state.probabilities(), [0.40, 0.10, 0.15, 0.35], atol=1e-12)
    assert qb.probability_of(state, 1, [1]) == pytest.approx(0.35, abs=1e-12)

def test_qubit_zero_is_most_significant():
    state = qb.simulate(qb.Circuit(n_qubits=2, gates=(qb.Gate.x(0),)))
    assert state.amplitudes.tolist() == [0, 0, 1, 0]

def test_ry_on_one_qubit():
    state = qb.simulate(qb.Circuit(n_qubits=1, gates=(qb.Gate.ry(0, math.pi),)))
    assert state.amplitudes[0] == pytest.approx(0, abs=1e-15)
    assert state.amplitudes[1] == pytest.approx(1)

def test_controlled_ry_needs_all_controls():
    gates = (qb.Gate.x(0), qb.Gate.ry(2, math.pi, controls=(0, 1)))
    state = qb.simulate(qb.Circuit(n_qubits=3, gates=gates))
    # control 1 is |0>, so the target is untouched
    assert state.amplitudes[4] == pytest.approx(1)
    gates = (qb.Gate.x(0), qb.Gate.x(1), qb.Gate.ry(2, math.pi, controls=(0, 1)))
    state = qb.simulate(qb.Circuit(n_qubits=3, gates=gates))
    assert state.amplitudes[7] == pytest.approx(1)

@pytest.mark.parametrize('kind', ['naive', 'spode', 'tan', 'symmetric'])
@settings(max_examples=200, deadline=None)
@given(st.integers(min_value=0, max_value=2 ** 32 - 1), st.integers(1, 5))
def test_amplitudes_match_chain_rule(kind, seed, n):
    rng = np.random.default_rng(seed)
    samples = random_samples(rng, 30, n)
    net = random_network(kind, rng, n, samples)
    cpts = random_cpts(net, rng)
    state = qb.simulate(qb.compile(net, cpts))
    assert state.norm_squared() == pytest.approx(1, abs=1e-9)
    for y in (0, 1):
        for x in itertools.product([0, 1], repeat=n):
            assert abs(qb.probability_of(state, y, x) - qb.joint_probability(net, cpts, y, x)) < 1e-9

def test_double_x_is_identity():
    net = qb.build_spode(3, 2)
    circuit = qb.compile(net, random_cpts(net, np.random.default_rng(8)))
    doubled = qb.Circuit(n_qubits=circuit.n_qubits, gates=tuple(circuit.gates) + (qb.Gate.x(1), qb.Gate.x(1)))
    assert np.array_equal(qb.simulate(doubled).amplitudes, qb.simulate(circuit).amplitudes)

def test_elided_circuit_has_same_state():
    net = qb.build_spode(4, 1)
    cpts = random_cpts(net, np.random.default_rng(3))
    full = qb.compile(net, cpts)
    short = qb.compile(net, cpts, elide_x_pairs=True)
    assert len(short.gates) < len(full.gates)
    assert short.rotations() == full.rotations()
    assert np.allclose(qb.simulate(full).amplitudes, qb.simulate(short).amplitudes, atol=1e-12)

def test_compile_missing_entry():
    net = qb.build_spode(2, 1)
    cpts = qb.CptSet(prior0=0.5, tables={1: {'0': 0.5, '1': 0.5}, 2: {'0': 0.5, '1': 0.5}}, alpha=1)
    with pytest.raises(qb.InvalidModelError):
        qb.compile(net, cpts)

def test_simulator_qubit_cap(monkeypatch):
    circuit = qb.Circuit(n_qubits=4)
    with pytest.raises(qb.ResourceLimitError):
        qb.simulate(circuit, max_qubits=3)
    monkeypatch.setenv('QBC_MAX_QUBITS', '3')
    with pytest.raises(qb.ResourceLimitError):
        qb.simulate(circuit)
    monkeypatch.setenv('QBC_MAX_QUBITS', '4')
    assert qb.simulate(circuit).amplitudes[0] == 1

def test_gate_validation():
    with pytest.raises(qb.InvalidArgumentError):
        qb.Gate.ry(1, 0.5, controls=(1,))
    with pytest.raises(qb.InvalidArgumentError):
        qb.Gate(kind='cry', target=0)
    with pytest.raises(qb.InvalidArgumentError):
        qb.Circuit(n_qubits=2, gates=(qb.Gate.x(2),))

def test_sample_shots_uniform():
    circuit = qb.Circuit(n_qubits=2, gates=(qb.Gate.ry(0, math.pi / 2), qb.Gate.ry(1, math.pi / 2)))
    state = qb.simulate(circuit)
    counts = qb.sample_shots(state, 100000, seed=7)
    assert sum(counts.values()) == 100000
    for i in range(4):
        assert counts[i] / 100000 == pytest.approx(0.25, abs=0.01)
    assert qb.sample_shots(state, 100000, seed=7) == counts

def test_sample_shots_skips_impossible_states():
    state = qb.simulate(qb.Circuit(n_qubits=2, gates=(qb.Gate.x(1),)))
    assert qb.sample_shots(state, 50, seed=0) == {1: 50}
    with pytest.raises(qb.InvalidArgumentError):
        qb.sample_shots(state, 0)

def test_export_json():
    net = qb.build_symmetric(4, [(1, 3)])
    circuit = qb.compile(net, random_cpts(net, np.random.default_rng(5)))
    assert qb.parse_circuit(qb.export(circuit, format='json'), format='json') == circuit

def test_export_empty_circuit():
    x = simplejson.loads(qb.export(qb.Circuit(n_qubits=3), format='json'))
    assert x.pop('format_version') == 1
    assert x == {'qubits': 3, 'gates': []}
    assert qb.simulate(qb.Circuit(n_qubits=3)).amplitudes.tolist() == [1, 0, 0, 0, 0, 0, 0, 0]

def test_export_qasm3():
    net, cpts = _naive_example()
    circuit = qb.compile(net, cpts)
    text = qb.export(circuit, format='qasm3')
    lines = text.splitlines()
    assert lines[0] == 'OPENQASM 3.0;'
    assert 'qubit[2] q;' in lines
    assert 'x q[0];' in lines
    assert any(line.startswith('ctrl(1) @ ry(') and line.endswith('q[0], q[1];') for line in lines)
    assert qb.parse_circuit(text, format='qasm3') == circuit

def test_parse_circuit_errors():
    with pytest.raises(qb.FormatError):
        qb.parse_circuit('OPENQASM 3.0;\nqubit[2] q;\nh q[0];\n', format='qasm3')
    with pytest.raises(qb.FormatError):
        qb.parse_circuit('{"format_version": 99, "n_qubits": 1, "gates": []}', format='json')
    with pytest.raises(qb.FormatError):
        qb.parse_circuit('not json', format='json')
    with pytest.raises(qb.InvalidArgumentError):
        qb.export(qb.Circuit(n_qubits=1), format='quil')
