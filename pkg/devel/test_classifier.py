import numpy as np
import pytest
import simplejson

import qbayes as qb
from qbayes.classifier._predict import _decide, _decide_with_loss
from conftest import random_cpts, random_network, random_samples

NETWORK_KINDS = ['naive', 'spode', 'tan', 'symmetric']


def test_train_config_defaults():
    config = qb.TrainConfig()
    assert config.network_kind == 'naive'
    assert config.superparent == 5
    assert config.tan_root == 1
    assert config.alpha == 1.0
    assert config.n_features == 9
    assert config.symmetric_pairs == [(1, 9), (2, 8), (3, 7), (4, 6)]
    assert qb.TrainConfig.from_dict(config.to_dict()) == config

def test_train_config_validation():
    with pytest.raises(qb.InvalidArgumentError):
        qb.TrainConfig(network_kind='bogus')
    with pytest.raises(qb.InvalidArgumentError):
        qb.TrainConfig(network_kind='spode', superparent=10)
    with pytest.raises(qb.InvalidArgumentError):
        qb.TrainConfig(alpha=-1)
    with pytest.raises(qb.FormatError):
        qb.TrainConfig.from_dict({'network': 'naive'})
    with pytest.raises(qb.InvalidArgumentError):
        qb.TrainConfig().replace(bogus=1)
    assert qb.TrainConfig().replace(shots=10).shots == 10

def test_train_orders_class_pair(synthetic_train):
    model = qb.train(synthetic_train, (3, 1))
    assert model.class_pair == (1, 3)
    assert model.label_of(0) == 1
    assert model.bit_of(3) == 1
    assert model.circuit.n_qubits == 10
    assert model.metadata['train_counts'] == [30, 30]

def test_train_rejects_bad_pairs(synthetic_train):
    with pytest.raises(qb.InvalidArgumentError):
        qb.train(synthetic_train, (2, 2))
    with pytest.raises(qb.InvalidArgumentError):
        qb.train(synthetic_train, (2, 11))

@pytest.mark.parametrize('kind', NETWORK_KINDS)
def test_quantum_matches_classical(kind, synthetic_train, synthetic_test):
    model = qb.train(synthetic_train, (0, 7), qb.TrainConfig(network_kind=kind))
    images = synthetic_test.filter([0, 7]).images
    labels, scores = qb.predict_many(model, images)
    classical_labels, classical_scores = qb.classical_predict_many(model, images)
    assert labels == classical_labels
    assert np.allclose(scores, classical_scores, atol=1e-9)
    label, (p0, p1) = qb.predict(model, images[0])
    assert label == labels[0]
    assert (p0, p1) == pytest.approx(tuple(scores[0]), abs=1e-12)

@pytest.mark.parametrize('kind', NETWORK_KINDS)
def test_synthetic_accuracy(kind, synthetic_train, synthetic_test):
    model = qb.train(synthetic_train, (2, 5), qb.TrainConfig(network_kind=kind))
    acc, counts = qb.evaluate_pair(model, synthetic_test)
    assert counts.total == 30
    assert acc >= 0.8

def test_tan_records_root(synthetic_train):
    model = qb.train(synthetic_train, (1, 4), qb.TrainConfig(network_kind='tan', tan_root=3))
    assert model.net.encode_order[0] == 3
    assert model.metadata['tan_root'] == 3
    assert len(model.net.feature_edges()) == 8

def test_shot_mode_is_reproducible(synthetic_train, synthetic_test):
    config = qb.TrainConfig(shots=20000, seed=11)
    a = qb.train(synthetic_train, (0, 1), config)
    b = qb.train(synthetic_train, (0, 1), config)
    images = synthetic_test.filter([0, 1]).images
    labels_a, scores_a = qb.predict_many(a, images)
    labels_b, scores_b = qb.predict_many(b, images)
    assert labels_a == labels_b
    assert np.array_equal(scores_a, scores_b)
    assert sum(a.shot_counts.values()) == 20000
    assert np.all(scores_a >= 0) and np.all(scores_a.sum(axis=1) <= 1)

def test_zero_one_loss_matches_predict(synthetic_train, synthetic_test):
    model = qb.train(synthetic_train, (3, 8))
    for image in synthetic_test.filter([3, 8]).images[:10]:
        assert qb.predict_with_loss(model, image, qb.LossMatrix.zero_one()) == qb.predict(model, image)[0]

def test_loss_can_force_a_decision(synthetic_train, synthetic_test):
    model = qb.train(synthetic_train, (3, 8))
    # deciding 0 is never worth it
    loss = qb.LossMatrix([[0, 1], [0, 0]])
    for image in synthetic_test.filter([3, 8]).images[:10]:
        assert qb.predict_with_loss(model, image, loss) == 8

def test_loss_matrix_validation():
    with pytest.raises(qb.InvalidArgumentError):
        qb.LossMatrix([[0, -1], [1, 0]])
    with pytest.raises(qb.InvalidArgumentError):
        qb.LossMatrix([[0, 1, 2], [1, 0, 2]])

def test_predict_rejects_wrong_image_shape(synthetic_train):
    model = qb.train(synthetic_train, (0, 1))
    with pytest.raises(qb.InvalidArgumentError):
        qb.predict(model, np.zeros((20, 20)))

@pytest.mark.parametrize('kind', NETWORK_KINDS)
def test_model_file_round_trip(kind, tmp_path, synthetic_train, synthetic_test):
    model = qb.train(synthetic_train, (4, 9), qb.TrainConfig(network_kind=kind, elide_x_pairs=True))
    path = str(tmp_path / 'model.json')
    qb.save_model(model, path)
    loaded = qb.load_model(path)
    assert loaded.class_pair == model.class_pair
    assert loaded.config == model.config
    assert loaded.net == model.net
    assert loaded.cpts == model.cpts
    assert loaded.circuit == model.circuit
    assert loaded.binarizer == model.binarizer
    images = synthetic_test.filter([4, 9]).images
    assert qb.predict_many(loaded, images)[0] == qb.predict_many(model, images)[0]

def _tamper(path, edit):
    with open(path, 'r') as f:
        x = simplejson.load(f)
    edit(x)
    with open(path, 'w') as f:
        simplejson.dump(x, f)

def test_model_file_errors(tmp_path, synthetic_train):
    model = qb.train(synthetic_train, (0, 1))
    path = str(tmp_path / 'model.json')

    qb.save_model(model, path)
    _tamper(path, lambda x: x['circuit']['gates'][0].update({'theta': 0.123}))
    with pytest.raises(qb.InvalidModelError):
        qb.load_model(path)

    qb.save_model(model, path)
    _tamper(path, lambda x: x.update({'format_version': 2}))
    with pytest.raises(qb.FormatError):
        qb.load_model(path)

    qb.save_model(model, path)
    _tamper(path, lambda x: x['cpts']['tables'].pop('3'))
    with pytest.raises(qb.InvalidModelError):
        qb.load_model(path)

    qb.save_model(model, path)
    _tamper(path, lambda x: x.pop('binarizer'))
    with pytest.raises(qb.FormatError):
        qb.load_model(path)

    # a changed CPT value no longer matches the stored rotation angles
    qb.save_model(model, path)
    _tamper(path, lambda x: x['cpts']['tables']['1'].update({'0': 0.4321}))
    with pytest.raises(qb.InvalidModelError):
        qb.load_model(path)

    with open(path, 'w') as f:
        f.write('{"format_version": 1')
    with pytest.raises(qb.FormatError):
        qb.load_model(path)

    with pytest.raises(OSError):
        qb.load_model(str(tmp_path / 'missing.json'))

def _handmade_model(net, cpts, *, spec=None, binarizer=None) -> qb.TrainedQbc:
    spec = spec if spec is not None else qb.FeatureSpec(blocks=[(0, 0, 28, 28)])
    if binarizer is None:
        binarizer = qb.BinarizerModel([qb.FeatureGaussians(mu0=0.2, sigma0=0.1, mu1=0.8, sigma1=0.1, intersections=(0.5,))])
    return qb.TrainedQbc(
        class_pair=(3, 8),
        config=qb.TrainConfig(feature_spec=spec),
        binarizer=binarizer,
        net=net,
        cpts=cpts,
        circuit=qb.compile(net, cpts),
        metadata={}
    )

def test_exact_ties_go_to_first_class():
    # P(y=0, x=0) = q(1-q) = P(y=1, x=0) for every q
    image = np.zeros((28, 28))
    net = qb.build_naive(1)
    for q in np.linspace(0.05, 0.95, 181):
        q = float(q)
        model = _handmade_model(net, qb.CptSet(prior0=q, tables={1: {'0': 1 - q, '1': q}}, alpha=1))
        label, (p0, p1) = qb.classical_predict(model, image)
        assert p0 == p1
        assert label == 3
        assert qb.predict(model, image)[0] == 3
        assert qb.predict_with_loss(model, image, qb.LossMatrix.zero_one()) == 3

def test_uniform_cpts_tie(synthetic_train, synthetic_test):
    trained = qb.train(synthetic_train, (3, 8))
    net = qb.build_naive(9)
    cpts = qb.CptSet(prior0=0.5, tables={i: {'0': 0.5, '1': 0.5} for i in range(1, 10)}, alpha=1)
    model = _handmade_model(net, cpts, spec=trained.feature_spec, binarizer=trained.binarizer)
    no_loss = qb.LossMatrix([[0, 0], [0, 0]])
    for image in synthetic_test.filter([3, 8]).images[:10]:
        assert qb.predict(model, image)[0] == 3
        assert qb.classical_predict(model, image)[0] == 3
        assert qb.predict_with_loss(model, image, qb.LossMatrix.zero_one()) == 3
        assert qb.predict_with_loss(model, image, no_loss) == 3

def _coarse_cpts(net, rng) -> qb.CptSet:
    # quarter steps make exact score ties common
    values = [0.25, 0.5, 0.75]
    tables = {}
    for node in range(1, net.n_features + 1):
        k = len(net.parents(node))
        tables[node] = {format(a, f'0{k}b'): float(rng.choice(values)) for a in range(2 ** k)}
    return qb.CptSet(prior0=float(rng.choice(values)), tables=tables, alpha=1.0)

def test_decisions_agree_on_random_models():
    label_model = _handmade_model(qb.build_naive(1), qb.CptSet(prior0=0.5, tables={1: {'0': 0.5, '1': 0.5}}, alpha=1))
    zero_one = qb.LossMatrix.zero_one()
    n_inputs = 0
    for seed in range(500):
        rng = np.random.default_rng(seed)
        kind = NETWORK_KINDS[seed % 4]
        n = int(rng.integers(1, 6))
        net = random_network(kind, rng, n, random_samples(rng, 30, n))
        cpts = random_cpts(net, rng) if seed % 2 == 0 else _coarse_cpts(net, rng)
        state = qb.simulate(qb.compile(net, cpts))
        for _ in range(20):
            x = [int(b) for b in rng.integers(0, 2, size=n)]
            quantum = (qb.probability_of(state, 0, x), qb.probability_of(state, 1, x))
            classical = (qb.joint_probability(net, cpts, 0, x), qb.joint_probability(net, cpts, 1, x))
            label = _decide(label_model, np.array([quantum]))[0]
            assert label == _decide(label_model, np.array([classical]))[0]
            assert label == _decide_with_loss(label_model, quantum, zero_one)
            n_inputs += 1
    assert n_inputs == 10000

def test_shot_mode_converges_to_exact(synthetic_train, synthetic_test):
    exact = qb.train(synthetic_train, (0, 1))
    sampled = qb.train(synthetic_train, (0, 1), qb.TrainConfig(shots=100000, seed=3))
    images = synthetic_test.filter([0, 1]).images
    exact_labels, _ = qb.predict_many(exact, images)
    sampled_labels, _ = qb.predict_many(sampled, images)
    disagreements = sum(a != b for a, b in zip(exact_labels, sampled_labels))
    assert disagreements <= 1
