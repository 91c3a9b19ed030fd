import numpy as np
import pytest
from sklearn.base import clone
from sklearn.pipeline import make_pipeline
from sklearn.preprocessing import StandardScaler

from fourtangle._validation import ZeroStateError
from fourtangle.catalog import build_dicke, build_representative
from fourtangle.estimators import InvariantTransformer, TanglePatternClassifier
from fourtangle.invariants import INVARIANT_NAMES, invariant_array

from conftest import random_state


@pytest.fixture
def anchors():
    X = np.array([build_representative(n) for n in ("W4", "GHZ", "cluster", "X4")])
    return X, np.array(["W", "GHZ", "cluster", "X"], dtype=object)


def test_transformer_default_output(rng):
    X = np.array([random_state(rng) for _ in range(5)])
    out = InvariantTransformer().fit_transform(X)
    assert out.shape == (5, 10)
    assert np.max(np.abs(out - invariant_array(X))) == 0


def test_transformer_subset_and_real_imag(rng):
    X = np.array([random_state(rng) for _ in range(3)])
    t = InvariantTransformer(invariants=["A", "X"], output="real_imag").fit(X)
    out = t.transform(X)
    full = invariant_array(X)
    assert out.shape == (3, 4)
    assert np.array_equal(out[:, 0], full[:, 0].real)
    assert np.array_equal(out[:, 3], full[:, 9].imag)
    assert list(t.get_feature_names_out()) == ["A_re", "A_im", "X_re", "X_im"]


def test_transformer_magnitude_scale_free(rng):
    X = np.array([random_state(rng) for _ in range(3)])
    t = InvariantTransformer(output="magnitude").fit(X)
    assert np.max(np.abs(t.transform(X) - t.transform(7j * X))) < 1e-10
    assert list(t.get_feature_names_out()) == list(INVARIANT_NAMES)


def test_transformer_validation(rng):
    X = np.array([random_state(rng) for _ in range(2)])
    with pytest.raises(ValueError):
        InvariantTransformer(invariants=["Q"]).fit(X)
    with pytest.raises(ValueError):
        InvariantTransformer(output="polar").fit(X)
    with pytest.raises(ValueError):
        InvariantTransformer().fit(X[0])
    with pytest.raises(ZeroStateError):
        InvariantTransformer(normalize=True).fit(X).transform(np.zeros((1, 16)))


def test_transformer_in_pipeline(rng):
    X = np.array([random_state(rng) for _ in range(6)])
    pipe = make_pipeline(InvariantTransformer(output="magnitude"), StandardScaler())
    out = pipe.fit_transform(X)
    assert out.shape == (6, 10)
    assert np.all(np.isfinite(out))


def test_classifier_predicts_anchors(anchors):
    X, y = anchors
    clf = TanglePatternClassifier().fit(X, y)
    assert list(clf.classes_) == ["W", "GHZ", "cluster", "X"]
    assert list(clf.predict(X)) == list(y)
    assert clf.score(X, y) == 1.0


def test_classifier_symmetric_levels(anchors):
    X, _ = anchors
    X = np.vstack([X, build_dicke(2)])
    levels = TanglePatternClassifier().fit(X).predict_symmetric_level(X)
    assert list(levels) == ["AllZero", "Dnonzero", None, "Dnonzero", "AnonzeroDzero"]


def test_params_and_clone():
    clf = TanglePatternClassifier(tol=1e-7)
    assert clf.get_params() == {"tol": 1e-7}
    assert clone(clf).tol == 1e-7
    t = InvariantTransformer(invariants=("A",), normalize=True)
    assert clone(t).get_params() == {"invariants": ("A",), "normalize": True, "output": "complex"}


def test_classifier_validation(anchors):
    X, _ = anchors
    with pytest.raises(ValueError):
        TanglePatternClassifier(tol=0).fit(X)
    with pytest.raises(ZeroStateError):
        TanglePatternClassifier().fit(np.zeros((1, 16)))
    with pytest.raises(Exception):
        TanglePatternClassifier().predict(X)
