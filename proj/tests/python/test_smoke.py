import math

import numpy as np
import pytest

import kacim


def test_estimate_on_dependent_data():
    x, y, _ = kacim.gen_additive(1024, 8, 8, noise_scale=0.2, seed=1)
    res = kacim.estimate(x, y, iterations=200, batch_size=512, seed=1)
    assert 0.0 <= res.kappa_hat <= 1.0
    assert res.kappa_hat > 0.2
    assert len(res.trace) == 200
    assert res.alpha.shape == (8,)
    assert abs(np.linalg.norm(res.alpha) - 1.0) < 1e-9


def test_estimate_is_deterministic():
    x, y = kacim.gen_independent(512, 4, 4, seed=2)
    a = kacim.estimate(x, y, iterations=100, batch_size=256, seed=7)
    b = kacim.estimate(x, y, iterations=100, batch_size=256, seed=7)
    assert a.kappa_hat == b.kappa_hat


def test_delta_n_bound_and_value():
    x, y = kacim.gen_independent(64, 3, 2, seed=3)
    d = kacim.delta_n(x, y, np.ones(3), np.ones(2))
    assert isinstance(d, complex)
    assert abs(d) <= 1.0 + 1e-12


def test_gaussian_oracle_closed_form():
    one = np.array([[1.0]])
    assert kacim.gaussian_kacim(one, one, np.array([[0.0]])) == 0.0
    v9 = kacim.gaussian_kacim(one, one, np.array([[0.9]]))
    assert v9 == pytest.approx(0.6968374, abs=1e-4)


def test_permutation_null_is_sorted():
    x, y = kacim.gen_independent(256, 2, 2, seed=4)
    nulls = kacim.permutation_null(x, y, n_perm=24, iterations=60, batch_size=128, seed=4)
    assert len(nulls) == 24
    assert nulls == sorted(nulls)


def test_baselines():
    x, y, _ = kacim.gen_additive(64, 2, 2, noise_scale=0.1, seed=5)
    assert kacim.dcor_biased(x, x) == pytest.approx(1.0, abs=1e-12)
    assert kacim.dcor_unbiased(x, y) > 0.0
    assert kacim.hsic_gaussian(x, y) >= 0.0


def test_wilcoxon():
    # distinct difference magnitudes keep us on the exact enumeration path
    p = kacim.wilcoxon_signed_rank([1, 2, 3, 4, 5], [0.1, 1.2, 2.3, 3.4, 4.5])
    assert p == pytest.approx(0.03125, abs=1e-12)
    with pytest.raises(ValueError):
        kacim.wilcoxon_signed_rank([1.0] * 5, [1.0] * 5)


def test_feature_extraction_roundtrip():
    x, labels = kacim.gen_classification(600, 12, 3, 3, seed=6)
    model = kacim.train_feature_extractor(x, labels, 3, k=4, iterations=100, batch_size=256,
                                          seed=6)
    assert model.k == 4
    assert model.w.shape == (4, 12)
    feats = kacim.extract_features(model, x)
    assert feats.shape == (600, 4)
    assert np.isfinite(feats).all()
    gram = model.w @ model.w.T
    assert math.isfinite(gram.sum())
