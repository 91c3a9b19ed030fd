import itertools
from functools import reduce

import numpy as np
import pytest

from fourtangle.catalog import build_dicke
from fourtangle.classify import random_sl2
from fourtangle.invariants import (
    DEGREES,
    INVARIANT_NAMES,
    InvariantSet,
    bilinear_form,
    bilinear_table,
    inv_A,
    inv_B1,
    inv_B2,
    inv_B3,
    inv_B3_direct,
    inv_C,
    inv_D,
    inv_LMNX,
    invariant_array,
    invariant_set,
    tangle_magnitudes,
)
from fourtangle.state import apply_local, parse_ket, permute_qubits, swap

from conftest import random_state, rel_err

# Brute-force oracle: explicit 16x16 Kronecker products and full metric sums
# over all four Pauli indices (the zero weight is multiplied, not skipped).
S = [
    np.eye(2),
    np.array([[0, 1], [1, 0]]),
    np.array([[0, -1j], [1j, 0]]),
    np.diag([1.0, -1.0]),
]
G = [-1, 1, 0, 1]


def oracle_f(psi, mu):
    return psi @ reduce(np.kron, [S[m] for m in mu]) @ psi


def oracle_generators(psi):
    f = {mu: oracle_f(psi, mu) for mu in itertools.product(range(4), repeat=4)}
    A = f[2, 2, 2, 2]
    B = []
    for slot in (1, 2, 3):
        total = 0
        for m, n in itertools.product(range(4), repeat=2):
            idx = [m, 2, 2, 2]
            idx[slot] = n
            total += G[m] * G[n] * f[tuple(idx)] ** 2
        B.append(total)
    C = 0
    for m, n, l in itertools.product(range(4), repeat=3):
        C += G[m] * G[n] * G[l] * f[m, n, 2, 2] * f[m, 2, l, 2] * f[2, n, l, 2]
    return A, B[0], B[1], B[2], C


def test_bilinear_form_matches_kron(rng):
    psi = random_state(rng)
    table = bilinear_table(psi)
    for mu in itertools.product(range(4), repeat=4):
        ref = oracle_f(psi, mu)
        assert abs(table[mu] - ref) < 1e-12 * max(1, abs(ref))
        assert abs(bilinear_form(psi, mu) - ref) < 1e-12 * max(1, abs(ref))


def test_bilinear_table_batch(rng):
    batch = np.array([random_state(rng) for _ in range(3)])
    table = bilinear_table(batch)
    assert table.shape == (3, 4, 4, 4, 4)
    for k in range(3):
        assert np.max(np.abs(table[k] - bilinear_table(batch[k]))) < 1e-12


def test_bilinear_form_rejects_bad_index():
    with pytest.raises(ValueError):
        bilinear_form(np.ones(16), (2, 2, 2))


def test_generators_match_oracle(rng):
    for _ in range(5):
        psi = random_state(rng)
        A, B1, B2, B3, C = oracle_generators(psi)
        assert rel_err(inv_A(psi), A) < 1e-12
        assert rel_err(inv_B1(psi), B1) < 1e-11
        assert rel_err(inv_B2(psi), B2) < 1e-11
        assert rel_err(inv_B3_direct(psi), B3) < 1e-11
        assert rel_err(inv_C(psi), C) < 1e-10


def test_ghz_values():
    inv = invariant_set(parse_ket("|0000> + |1111>"))
    for name, value in zip(("A", "B1", "B2", "B3", "C"), (2, 4, 4, 4, -8)):
        assert abs(inv[name] - value) < 1e-12


def test_w_values_vanish():
    inv = invariant_set(parse_ket("|0001> + |0010> + |0100> + |1000>"))
    assert np.max(np.abs(inv.as_array())) < 1e-12


def test_dicke_two():
    inv = invariant_set(build_dicke(2))
    assert abs(inv.A - 1) < 1e-10
    assert abs(inv.C + 5 / 9) < 1e-10
    assert abs(inv.D) < 1e-10


def test_single_functions_agree_with_set(rng):
    psi = random_state(rng)
    inv = invariant_set(psi)
    assert inv.A == inv_A(psi)
    assert inv.B1 == inv_B1(psi)
    assert inv.B2 == inv_B2(psi)
    assert rel_err(inv.B3, inv_B3(psi)) < 1e-14
    assert inv.C == inv_C(psi)
    assert rel_err(inv.D, inv_D(psi)) < 1e-14
    for got, name in zip(inv_LMNX(psi), "LMNX"):
        assert rel_err(got, inv[name]) < 1e-14


def test_batch_matches_single(rng):
    batch = np.array([random_state(rng) for _ in range(4)])
    arr = invariant_array(batch)
    assert arr.shape == (4, 10)
    for k in range(4):
        assert np.max(np.abs(arr[k] - invariant_set(batch[k]).as_array())) < 1e-9


def test_derived_identities(rng):
    psi = random_state(rng)
    inv = invariant_set(psi)
    assert abs(inv.L + inv.M + inv.N) < 1e-12 * abs(inv.B1)
    assert rel_err(inv.L, (inv.B2 - inv.B3) / 48) < 1e-14
    assert rel_err(inv.D, inv.C + 5 / 9 * inv.A**3) < 1e-14
    X = (inv.C + inv.A**3) ** 2 - 128 * inv.A**2 * (inv.L**2 + inv.M**2 + inv.N**2)
    assert rel_err(inv.X, X) < 1e-14


def test_sl_invariance(rng):
    for _ in range(20):
        psi = random_state(rng)
        ops = [random_sl2(rng) for _ in range(4)]
        before, after = invariant_set(psi), invariant_set(apply_local(psi, ops))
        for name in INVARIANT_NAMES:
            assert rel_err(after[name], before[name]) < 1e-8


def test_not_invariant_under_non_unit_determinant(rng):
    psi = random_state(rng)
    scaled = apply_local(psi, [2 * np.eye(2)] + [np.eye(2)] * 3)
    assert rel_err(inv_A(scaled), 4 * inv_A(psi)) < 1e-12


def test_homogeneity(rng):
    for _ in range(20):
        psi = random_state(rng)
        c = complex(*rng.standard_normal(2))
        before, after = invariant_set(psi), invariant_set(c * psi)
        for name in INVARIANT_NAMES:
            assert rel_err(after[name], c ** DEGREES[name] * before[name]) < 1e-10


def test_sum_rule_against_direct_b3(rng):
    for _ in range(20):
        psi = random_state(rng)
        inv = invariant_set(psi)
        direct = inv_B3_direct(psi)
        scale = max(abs(inv.B1), abs(inv.B2), abs(direct), abs(3 * inv.A**2))
        assert abs(inv.B1 + inv.B2 + direct - 3 * inv.A**2) < 1e-10 * scale


def test_pair_placement_follows_swaps(rng):
    for _ in range(20):
        psi = random_state(rng)
        inv = invariant_set(psi)
        assert rel_err(inv_B1(permute_qubits(psi, swap(1, 2))), inv.B2) < 1e-10
        assert rel_err(inv_B1(permute_qubits(psi, swap(1, 3))), inv.B3) < 1e-10


def test_a_and_c_permutation_invariant(rng):
    psi = random_state(rng)
    inv = invariant_set(psi)
    for p in itertools.permutations(range(4)):
        other = invariant_set(permute_qubits(psi, p))
        assert rel_err(other.A, inv.A) < 1e-12
        assert rel_err(other.C, inv.C) < 1e-10
        got = sorted([other.B1, other.B2, other.B3], key=lambda z: (z.real, z.imag))
        ref = sorted([inv.B1, inv.B2, inv.B3], key=lambda z: (z.real, z.imag))
        assert max(rel_err(a, b) for a, b in zip(got, ref)) < 1e-10


def test_symmetric_states_collapse_b(rng):
    # permutation-symmetric states from random Dicke superpositions
    for _ in range(10):
        coeffs = rng.standard_normal(5) + 1j * rng.standard_normal(5)
        psi = sum(c * build_dicke(k) for k, c in enumerate(coeffs))
        inv = invariant_set(psi)
        for b in (inv.B1, inv.B2, inv.B3):
            assert rel_err(b, inv.A**2) < 1e-10


def test_invariant_set_json_round_trip(rng):
    inv = invariant_set(random_state(rng))
    assert InvariantSet.from_json(inv.to_json()) == inv
    with pytest.raises(KeyError):
        inv["Q"]


def test_tangle_magnitudes():
    mags = tangle_magnitudes(parse_ket("|0000> + |1111>"))
    # normalized GHZ: A = 1, B = 1, C = -1
    assert abs(mags.A - 1) < 1e-12
    assert abs(mags.B1 - 1) < 1e-12
    assert abs(mags.C - 1) < 1e-12
    assert set(mags.as_dict()) == set(INVARIANT_NAMES)


def test_tangle_magnitudes_scale_free(rng):
    psi = random_state(rng)
    a, b = tangle_magnitudes(psi), tangle_magnitudes(3.5j * psi)
    for name in INVARIANT_NAMES:
        assert abs(getattr(a, name) - getattr(b, name)) < 1e-10
