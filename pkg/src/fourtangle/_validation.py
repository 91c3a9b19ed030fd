"""Input checking shared by the functional API and the estimators."""

import numpy as np

N_AMPLITUDES = 16


class ZeroStateError(ValueError):
    """Raised when an operation needs a nonzero state vector."""


def check_state(state, *, allow_zero=True):
    """Return ``state`` as a fresh complex128 array of shape (16,).

    Accepts any array-like of 16 numbers. Raises ``ValueError`` for the
    wrong length or non-finite entries and ``ZeroStateError`` for the zero
    vector when ``allow_zero`` is false.
    """
    arr = np.asarray(state)
    if arr.dtype == object:
        raise ValueError("state amplitudes must be numeric")
    arr = np.array(arr, dtype=np.complex128)
    if arr.ndim != 1 or arr.shape[0] != N_AMPLITUDES:
        raise ValueError(
            f"a four-qubit state has {N_AMPLITUDES} amplitudes, got shape {np.shape(state)}"
        )
    if not np.all(np.isfinite(arr)):
        raise ValueError("state amplitudes must be finite")
    if not allow_zero and not np.any(arr):
        raise ZeroStateError("the zero vector is not a valid input here")
    return arr


def check_states(X, *, allow_zero=True):
    """Batch version of :func:`check_state`; returns shape (n_states, 16)."""
    arr = np.asarray(X)
    if arr.ndim == 1:
        raise ValueError(
            "expected a 2D array of states, got a 1D array; "
            "use X.reshape(1, -1) for a single state"
        )
    if arr.ndim != 2 or arr.shape[1] != N_AMPLITUDES:
        raise ValueError(f"expected shape (n_states, {N_AMPLITUDES}), got {arr.shape}")
    arr = np.array(arr, dtype=np.complex128)
    if not np.all(np.isfinite(arr)):
        raise ValueError("state amplitudes must be finite")
    if not allow_zero and not np.all(np.any(arr, axis=1)):
        bad = int(np.flatnonzero(~np.any(arr, axis=1))[0])
        raise ZeroStateError(f"row {bad} is the zero vector")
    return arr


def check_local_operator(op):
    arr = np.array(op, dtype=np.complex128)
    if arr.shape != (2, 2):
        raise ValueError(f"a local operator is a 2x2 matrix, got shape {arr.shape}")
    if not np.all(np.isfinite(arr)):
        raise ValueError("operator entries must be finite")
    return arr


def check_tolerance(tol):
    tol = float(tol)
    if not tol > 0:
        raise ValueError(f"tolerance must be positive, got {tol}")
    return tol
