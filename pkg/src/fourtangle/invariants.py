"""SL(2,C)^4-invariant polynomials of four-qubit states.

Everything is built from the bilinear forms

    f(m1, m2, m3, m4) = sum_xy psi_x (s_m1 x s_m2 x s_m3 x s_m4)_xy psi_y

with Pauli matrices ``s_0 = 1, s_1 = X, s_2 = Y, s_3 = Z`` and no complex
conjugation. Repeated Pauli indices are contracted with the metric weights
``g = (-1, 1, 0, 1)``; since ``g_2 = 0`` the contracted sums run over
indices 0, 1 and 3 only.

All functions accept a single state of shape (16,) or a batch of shape
(n, 16) and broadcast accordingly.
"""

from dataclasses import dataclass, fields

import numpy as np

from ._validation import check_state, check_states

__all__ = [
    "DEGREES",
    "INVARIANT_NAMES",
    "PAULI",
    "METRIC",
    "InvariantSet",
    "TangleMagnitudes",
    "bilinear_form",
    "bilinear_table",
    "inv_A",
    "inv_B1",
    "inv_B2",
    "inv_B3",
    "inv_B3_direct",
    "inv_C",
    "inv_D",
    "inv_LMNX",
    "invariant_set",
    "invariant_array",
    "tangle_magnitudes",
]

PAULI = np.array(
    [
        [[1, 0], [0, 1]],
        [[0, 1], [1, 0]],
        [[0, -1j], [1j, 0]],
        [[1, 0], [0, -1]],
    ],
    dtype=np.complex128,
)
METRIC = (-1.0, 1.0, 0.0, 1.0)

# indices with nonzero metric weight, paired with that weight
_CONTRACTED = tuple((m, METRIC[m]) for m in range(4) if METRIC[m] != 0)

INVARIANT_NAMES = ("A", "B1", "B2", "B3", "C", "D", "L", "M", "N", "X")
DEGREES = {"A": 2, "B1": 4, "B2": 4, "B3": 4, "C": 6, "D": 6, "L": 4, "M": 4, "N": 4, "X": 12}


_EINSUM_PATH = np.einsum_path(
    "nijkl,aip,bjq,ckr,dls,npqrs->nabcd",
    *([np.zeros((1, 2, 2, 2, 2), complex)] + [PAULI] * 4 + [np.zeros((1, 2, 2, 2, 2), complex)]),
    optimize="greedy",
)[0]


def _as_states(state):
    arr = np.asarray(state)
    if arr.ndim == 2:
        return check_states(arr), False
    return check_state(arr)[None, :], True


def bilinear_table(state):
    """All 256 bilinear forms ``f[..., m1, m2, m3, m4]`` of a state or batch."""
    psi, single = _as_states(state)
    t = psi.reshape(-1, 2, 2, 2, 2)
    table = np.einsum(
        "nijkl,aip,bjq,ckr,dls,npqrs->nabcd",
        t, PAULI, PAULI, PAULI, PAULI, t,
        optimize=_EINSUM_PATH,
    )
    return table[0] if single else table


def bilinear_form(state, mu):
    """``sum_xy psi_x (s_mu1 x ... x s_mu4)_xy psi_y`` for one index quadruple."""
    psi = check_state(state)
    ops = [PAULI[int(m)] for m in mu]
    if len(ops) != 4:
        raise ValueError("need four Pauli indices")
    t = psi.reshape(2, 2, 2, 2)
    for q, op in enumerate(ops):
        t = np.moveaxis(np.tensordot(op, t, axes=([1], [q])), 0, q)
    return complex(np.dot(psi, t.reshape(16)))


def _b_pair(f, slot):
    """sum_{mu,nu} g_mu g_nu f(...)^2 with mu on qubit 0 and nu on qubit ``slot``."""
    total = 0
    for m, gm in _CONTRACTED:
        for n, gn in _CONTRACTED:
            idx = [m, 2, 2, 2]
            idx[slot] = n
            total = total + gm * gn * f[(...,) + tuple(idx)] ** 2
    return total


def _generators(f):
    A = f[..., 2, 2, 2, 2]
    B1 = _b_pair(f, 1)
    B2 = _b_pair(f, 2)
    C = 0
    for m, gm in _CONTRACTED:
        for n, gn in _CONTRACTED:
            f1 = f[..., m, n, 2, 2]
            for lam, gl in _CONTRACTED:
                C = C + gm * gn * gl * f1 * f[..., m, 2, lam, 2] * f[..., 2, n, lam, 2]
    return A, B1, B2, C


def _derived(A, B1, B2, C):
    B3 = 3 * A**2 - B1 - B2
    D = C + (5 / 9) * A**3
    L = (B2 - B3) / 48
    M = (B3 - B1) / 48
    N = (B1 - B2) / 48
    X = (C + A**3) ** 2 - 128 * A**2 * (L**2 + M**2 + N**2)
    return B3, D, L, M, N, X


def _scalar(x):
    return complex(x) if np.ndim(x) == 0 else x


def inv_A(state):
    """Four-concurrence, degree 2: ``f(2, 2, 2, 2)``."""
    return _scalar(bilinear_table(state)[..., 2, 2, 2, 2])


def inv_B1(state):
    """Degree-4 generator with the contracted pair on qubits 1 and 2."""
    return _scalar(_b_pair(bilinear_table(state), 1))


def inv_B2(state):
    """Degree-4 generator with the contracted pair on qubits 1 and 3."""
    return _scalar(_b_pair(bilinear_table(state), 2))


def inv_B3(state):
    """Third degree-4 invariant, fixed by ``B1 + B2 + B3 = 3 A^2``."""
    A, B1, B2, _ = _generators(bilinear_table(state))
    return _scalar(3 * A**2 - B1 - B2)


def inv_B3_direct(state):
    """Contracted pair on qubits 1 and 4, evaluated directly.

    Independent of :func:`inv_B3`; the two agree, which pins down the
    qubit placement of the third degree-4 invariant.
    """
    return _scalar(_b_pair(bilinear_table(state), 3))


def inv_C(state):
    """Degree-6 generator: three copies contracted pairwise over qubits 1-3."""
    return _scalar(_generators(bilinear_table(state))[3])


def inv_D(state):
    """``C + 5/9 A^3``; vanishes on the D4(2)-type symmetric families."""
    A, _, _, C = _generators(bilinear_table(state))
    return _scalar(C + (5 / 9) * A**3)


def inv_LMNX(state):
    """Return ``(L, M, N, X)``: the B differences over 48 and the degree-12 invariant."""
    A, B1, B2, C = _generators(bilinear_table(state))
    _, _, L, M, N, X = _derived(A, B1, B2, C)
    return _scalar(L), _scalar(M), _scalar(N), _scalar(X)


@dataclass(frozen=True)
class InvariantSet:
    """Values of all invariants for one state."""

    A: complex
    B1: complex
    B2: complex
    B3: complex
    C: complex
    D: complex
    L: complex
    M: complex
    N: complex
    X: complex

    def __getitem__(self, name):
        if name not in INVARIANT_NAMES:
            raise KeyError(name)
        return getattr(self, name)

    def as_dict(self):
        return {f.name: getattr(self, f.name) for f in fields(self)}

    def as_array(self):
        return np.array([getattr(self, n) for n in INVARIANT_NAMES], dtype=np.complex128)

    def to_json(self):
        return {n: [float(z.real), float(z.imag)] for n, z in self.as_dict().items()}

    @classmethod
    def from_json(cls, obj):
        return cls(**{n: complex(obj[n][0], obj[n][1]) for n in INVARIANT_NAMES})


def invariant_array(states):
    """Invariants of a batch as an (n, 10) complex array, columns in ``INVARIANT_NAMES`` order."""
    f = bilinear_table(check_states(states))
    A, B1, B2, C = _generators(f)
    B3, D, L, M, N, X = _derived(A, B1, B2, C)
    return np.stack([A, B1, B2, B3, C, D, L, M, N, X], axis=-1)


def invariant_set(state):
    """Evaluate every invariant of a single state."""
    row = invariant_array(check_state(state)[None, :])[0]
    return InvariantSet(*(complex(z) for z in row))


@dataclass(frozen=True)
class TangleMagnitudes:
    """Moduli of the invariants of the normalized state, each taken to the
    power that makes it homogeneous of degree 2."""

    A: float
    B1: float
    B2: float
    B3: float
    C: float
    D: float
    L: float
    M: float
    N: float
    X: float

    def as_dict(self):
        return {f.name: getattr(self, f.name) for f in fields(self)}


def tangle_magnitudes(state):
    psi = check_state(state, allow_zero=False)
    inv = invariant_set(psi / np.linalg.norm(psi))
    return TangleMagnitudes(
        **{n: float(abs(inv[n]) ** (2 / DEGREES[n])) for n in INVARIANT_NAMES}
    )
