"""Polynomial SL(2,C)^4 invariants and SLOCC classification of four-qubit states."""

from ._validation import ZeroStateError
from .catalog import CatalogError, build_dicke, build_representative, expected_pattern
from .classify import (
    Family,
    FamilyLabel,
    NotSymmetricError,
    Outcome,
    SymmetricLevel,
    Verdict,
    balance_state,
    classify,
    classify_symmetric,
    discriminate,
    orbit_samples,
    random_sl2,
)
from .estimators import InvariantTransformer, TanglePatternClassifier
from .invariants import (
    InvariantSet,
    bilinear_form,
    inv_A,
    inv_B1,
    inv_B2,
    inv_B3,
    inv_C,
    inv_D,
    inv_LMNX,
    invariant_set,
    tangle_magnitudes,
)
from .state import (
    KetSyntaxError,
    apply_local,
    format_ket,
    is_symmetric,
    parse_ket,
    permute_qubits,
)

__version__ = "0.1.0"
