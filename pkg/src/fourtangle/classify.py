"""SLOCC discrimination and tangle-pattern classification of four-qubit states."""

import enum
import itertools
import math
from dataclasses import dataclass

import numpy as np

from ._validation import check_state, check_tolerance
from .invariants import DEGREES, invariant_set
from .state import apply_local, is_symmetric

__all__ = [
    "DEFAULT_TOL",
    "GENERATORS",
    "Family",
    "FamilyLabel",
    "NotSymmetricError",
    "Outcome",
    "SymmetricLevel",
    "Verdict",
    "Witness",
    "balance_state",
    "classify",
    "classify_symmetric",
    "discriminate",
    "orbit_samples",
    "random_sl2",
]

DEFAULT_TOL = 1e-9
GENERATORS = ("A", "B1", "B2", "B3", "C")

_MAX_REDRAWS = 1000


class NotSymmetricError(ValueError):
    """The symmetric-state hierarchy was requested for a non-symmetric state."""


class Outcome(str, enum.Enum):
    DISTINCT = "DistinctClasses"
    INCONCLUSIVE = "Inconclusive"


class Family(str, enum.Enum):
    W = "W"
    GHZ = "GHZ"
    CLUSTER = "cluster"
    X = "X"


class SymmetricLevel(str, enum.Enum):
    ALL_ZERO = "AllZero"
    A_NONZERO_D_ZERO = "AnonzeroDzero"
    D_NONZERO = "Dnonzero"


@dataclass(frozen=True)
class Witness:
    name: str
    lhs: complex
    rhs: complex

    def to_json(self):
        return {
            "name": self.name,
            "lhs": [float(self.lhs.real), float(self.lhs.imag)],
            "rhs": [float(self.rhs.real), float(self.rhs.imag)],
        }


@dataclass(frozen=True)
class Verdict:
    """Result of comparing two states. ``Inconclusive`` does not mean equivalent."""

    outcome: Outcome
    witnesses: tuple = ()

    def __post_init__(self):
        if (self.outcome is Outcome.DISTINCT) != bool(self.witnesses):
            raise ValueError("DistinctClasses requires witnesses and Inconclusive forbids them")

    @property
    def distinct(self):
        return self.outcome is Outcome.DISTINCT

    def to_json(self):
        return {"outcome": self.outcome.value, "witnesses": [w.to_json() for w in self.witnesses]}


@dataclass(frozen=True)
class FamilyLabel:
    family: Family
    symmetric_level: SymmetricLevel = None

    def to_json(self):
        level = self.symmetric_level
        return {"family": self.family.value, "symmetricLevel": level.value if level else None}


# --------------------------------------------------------------------------
# SL(2,C) sampling
# --------------------------------------------------------------------------

def _draw_sl2(rng):
    for _ in range(_MAX_REDRAWS):
        m = (rng.standard_normal((2, 2)) + 1j * rng.standard_normal((2, 2))) / math.sqrt(2)
        det = m[0, 0] * m[1, 1] - m[0, 1] * m[1, 0]
        if abs(det) >= 1e-6:
            return m / np.sqrt(det)
    raise RuntimeError(f"no invertible draw in {_MAX_REDRAWS} attempts; RNG is broken")


def random_sl2(seed=None):
    """A random 2x2 complex matrix with determinant 1.

    Entries are standard complex normal, redrawn while ``|det| < 1e-6``,
    then divided by the principal square root of the determinant.
    ``seed`` may be an int or a ``numpy.random.Generator``.
    """
    return _draw_sl2(np.random.default_rng(seed))


def orbit_samples(state, count, seed=None):
    """``count`` images of ``state`` under independent random SL(2,C)^4 operators."""
    psi = check_state(state, allow_zero=False)
    if int(count) < 1:
        raise ValueError(f"count must be at least 1, got {count}")
    rng = np.random.default_rng(seed)
    return [apply_local(psi, [_draw_sl2(rng) for _ in range(4)]) for _ in range(int(count))]


# --------------------------------------------------------------------------
# conditioning
# --------------------------------------------------------------------------

def balance_state(state, max_shrink=30.0, tol=1e-6, max_sweeps=50):
    """Move a state towards the smallest-norm point of its SL(2,C)^4 orbit, normalized.

    Each step applies ``det(rho)^(1/4) rho^(-1/2)`` to one qubit, where
    ``rho`` is that qubit's reduced density matrix; this never increases
    the norm and leaves ``rho`` proportional to the identity. Sweeps stop
    once every ``rho`` is within ``tol`` of that.

    States in the null cone (all invariants zero) have no smallest-norm
    point, and shrinking them only magnifies rounding noise. The total
    norm reduction is therefore capped at ``max_shrink``, which undoes the
    stretching typical SLOCC operators cause while keeping null-cone noise
    well below the classification threshold.

    Invariants of the result equal those of ``state`` up to a positive
    factor ``c**degree``, so zero/nonzero decisions are unaffected in
    exact arithmetic.
    """
    psi = check_state(state, allow_zero=False)
    psi = psi / np.linalg.norm(psi)
    budget = math.log(max_shrink)
    for _ in range(max_sweeps):
        worst = 0.0
        for q in range(4):
            t = np.moveaxis(psi.reshape(2, 2, 2, 2), q, 0)
            m = t.reshape(2, 8)
            w, v = np.linalg.eigh(m @ m.conj().T)
            w = np.maximum(w, 0.0)
            tr = w[0] + w[1]
            worst = max(worst, 1.0 - 4.0 * w[0] * w[1] / tr**2)
            if w[0] == 0.0:
                return psi
            # log of the factor by which this step shrinks the norm
            step = -0.5 * math.log(2.0 * math.sqrt(w[0] * w[1]) / tr)
            if step > budget:
                return psi
            budget -= step
            j = (v * (w[0] * w[1]) ** 0.25 / np.sqrt(w)) @ v.conj().T
            t = np.tensordot(j, t, axes=([1], [0]))
            psi = np.ascontiguousarray(np.moveaxis(t, 0, q)).reshape(16)
            psi = psi / np.linalg.norm(psi)
        if worst <= tol:
            break
    return psi


# --------------------------------------------------------------------------
# discrimination
# --------------------------------------------------------------------------

def discriminate(psi, phi, tol=DEFAULT_TOL):
    """Test whether two states can be told apart by ratios of invariants.

    For every pair ``(P, Q)`` of generators with degrees ``i, j`` the
    cross-multiplied equality ``P(psi)^m Q(phi)^n == P(phi)^m Q(psi)^n``
    with ``i*m == j*n`` must hold, and each generator must vanish on both
    states or on neither. Any failure proves the states SLOCC-inequivalent
    and is reported as a witness; passing every test is inconclusive.

    The tests run on orbit-balanced, normalized representatives (see
    :func:`balance_state`); both sides of each equality have the same
    degree in each state, so this changes no outcome in exact arithmetic
    and puts every value on a common O(1) scale for the tolerance.
    Witness values are reported for the states as given.
    """
    psi = check_state(psi, allow_zero=False)
    phi = check_state(phi, allow_zero=False)
    tol = check_tolerance(tol)

    raw_a, raw_b = invariant_set(psi), invariant_set(phi)
    bal_a, bal_b = invariant_set(balance_state(psi)), invariant_set(balance_state(phi))

    witnesses = []
    for name in GENERATORS:
        if (abs(bal_a[name]) > tol) != (abs(bal_b[name]) > tol):
            witnesses.append(Witness(name, raw_a[name], raw_b[name]))

    for p, q in itertools.combinations(GENERATORS, 2):
        i, j = DEGREES[p], DEGREES[q]
        lcm = i * j // math.gcd(i, j)
        m, n = lcm // i, lcm // j
        lhs = bal_a[p] ** m * bal_b[q] ** n
        rhs = bal_b[p] ** m * bal_a[q] ** n
        if abs(lhs - rhs) > tol * max(abs(lhs), abs(rhs), 1.0):
            name = f"{p}^{m}*{q}^{n}"
            witnesses.append(
                Witness(name, raw_a[p] ** m * raw_b[q] ** n, raw_b[p] ** m * raw_a[q] ** n)
            )

    if witnesses:
        return Verdict(Outcome.DISTINCT, tuple(witnesses))
    return Verdict(Outcome.INCONCLUSIVE)


# --------------------------------------------------------------------------
# classification
# --------------------------------------------------------------------------

def _family(inv, tol):
    if abs(inv.X) > tol:
        return Family.X
    if max(abs(inv.L), abs(inv.M), abs(inv.N)) > tol:
        return Family.CLUSTER
    if abs(inv.A) > tol:
        return Family.GHZ
    return Family.W


def classify(state, tol=DEFAULT_TOL):
    """Tangle-pattern family of a state: the highest-degree nonzero invariant among
    A (GHZ), L/M/N (cluster) and X (X) decides; all zero means W."""
    tol = check_tolerance(tol)
    inv = invariant_set(balance_state(state))
    return FamilyLabel(_family(inv, tol))


def classify_symmetric(state, tol=DEFAULT_TOL):
    """Family plus the (A, D) level of a permutation-symmetric state."""
    tol = check_tolerance(tol)
    psi = check_state(state, allow_zero=False)
    if not is_symmetric(psi, tol):
        raise NotSymmetricError("state is not permutation symmetric; use classify()")
    inv = invariant_set(balance_state(psi))
    if abs(inv.D) > tol:
        level = SymmetricLevel.D_NONZERO
    elif abs(inv.A) > tol:
        level = SymmetricLevel.A_NONZERO_D_ZERO
    else:
        level = SymmetricLevel.ALL_ZERO
    return FamilyLabel(_family(inv, tol), level)
