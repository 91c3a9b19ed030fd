"""scikit-learn compatible wrappers.

Rows of ``X`` are four-qubit states (16 complex amplitudes), so these
estimators drop into pipelines that featurize or label batches of states.
Neither needs training; ``fit`` only validates input and records metadata.
"""

import numpy as np
from sklearn.base import BaseEstimator, ClassifierMixin, TransformerMixin
from sklearn.utils.validation import check_is_fitted

from ._validation import check_states, check_tolerance
from .classify import DEFAULT_TOL, Family, classify, classify_symmetric
from .invariants import DEGREES, INVARIANT_NAMES, invariant_array
from .state import is_symmetric

__all__ = ["InvariantTransformer", "TanglePatternClassifier"]

_OUTPUTS = ("complex", "real_imag", "magnitude")


class InvariantTransformer(TransformerMixin, BaseEstimator):
    """Map states to their polynomial invariants.

    Parameters
    ----------
    invariants : sequence of str or None
        Subset of ``("A", "B1", "B2", "B3", "C", "D", "L", "M", "N", "X")``
        to compute, in order. ``None`` selects all ten.
    normalize : bool
        Scale each state to unit norm first.
    output : {"complex", "real_imag", "magnitude"}
        ``"complex"`` returns a complex array; ``"real_imag"`` splits each
        invariant into two real columns; ``"magnitude"`` returns
        ``|I|**(2/degree)`` of the normalized state (``normalize`` is
        implied).
    """

    def __init__(self, invariants=None, normalize=False, output="complex"):
        self.invariants = invariants
        self.normalize = normalize
        self.output = output

    def fit(self, X, y=None):
        check_states(X)
        names = INVARIANT_NAMES if self.invariants is None else tuple(self.invariants)
        unknown = [n for n in names if n not in INVARIANT_NAMES]
        if unknown or not names:
            raise ValueError(f"invalid invariant selection {self.invariants!r}")
        if self.output not in _OUTPUTS:
            raise ValueError(f"output must be one of {_OUTPUTS}, got {self.output!r}")
        self.invariants_ = names
        self.n_features_in_ = 16
        return self

    def transform(self, X):
        check_is_fitted(self, "invariants_")
        normalize = self.normalize or self.output == "magnitude"
        X = check_states(X, allow_zero=not normalize)
        if normalize:
            X = X / np.linalg.norm(X, axis=1, keepdims=True)
        cols = [INVARIANT_NAMES.index(n) for n in self.invariants_]
        values = invariant_array(X)[:, cols]
        if self.output == "magnitude":
            powers = np.array([2 / DEGREES[n] for n in self.invariants_])
            return np.abs(values) ** powers
        if self.output == "real_imag":
            return np.stack([values.real, values.imag], axis=-1).reshape(len(X), -1)
        return values

    def get_feature_names_out(self, input_features=None):
        check_is_fitted(self, "invariants_")
        if self.output == "real_imag":
            return np.array([f"{n}_{part}" for n in self.invariants_ for part in ("re", "im")])
        return np.array(self.invariants_)


class TanglePatternClassifier(ClassifierMixin, BaseEstimator):
    """Assign each state its tangle-pattern family: W, GHZ, cluster or X.

    The labels come from the invariants alone, so ``fit`` learns nothing;
    ``y`` is accepted (and ignored) so the estimator can be scored and
    cross-validated like any classifier.
    """

    def __init__(self, tol=DEFAULT_TOL):
        self.tol = tol

    def fit(self, X, y=None):
        check_states(X, allow_zero=False)
        check_tolerance(self.tol)
        self.classes_ = np.array([f.value for f in Family])
        self.n_features_in_ = 16
        return self

    def predict(self, X):
        check_is_fitted(self, "classes_")
        X = check_states(X, allow_zero=False)
        return np.array([classify(row, self.tol).family.value for row in X], dtype=object)

    def predict_symmetric_level(self, X):
        """(A, D) level for symmetric rows, ``None`` for the rest."""
        check_is_fitted(self, "classes_")
        X = check_states(X, allow_zero=False)
        return np.array(
            [
                classify_symmetric(row, self.tol).symmetric_level.value
                if is_symmetric(row, self.tol)
                else None
                for row in X
            ],
            dtype=object,
        )
