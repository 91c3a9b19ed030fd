"""Named representative states and the invariant values expected for them.

Covers the five symmetric families (Dicke-state representatives and the
one-parameter X family), the eleven Lamata-Leon-Salgado-Solano (LLSS)
representatives, the X state, and the ``b = c = 0`` slice of ``G_abcd``.
Kets are written left to right as qubits 1..4.
"""

import math
from dataclasses import dataclass, field

import numpy as np

from .invariants import DEGREES, invariant_set
from .state import basis_index, parse_coefficient

__all__ = [
    "CatalogError",
    "Param",
    "Pattern",
    "Relation",
    "RepresentativeSpec",
    "build_dicke",
    "build_representative",
    "check_pattern",
    "expected_pattern",
    "fixture_document",
    "get_spec",
    "names",
    "parse_params",
]


class CatalogError(ValueError):
    """Unknown representative name or parameters violating a row's constraints."""


# --------------------------------------------------------------------------
# building blocks
# --------------------------------------------------------------------------

_E0 = np.array([1, 0], dtype=np.complex128)
_E1 = np.array([0, 1], dtype=np.complex128)


def _kron(*vectors):
    out = np.ones(1, dtype=np.complex128)
    for v in vectors:
        out = np.kron(out, v)
    return out


def _ket(**amps):
    """``_ket(b0000=1, b1111=1)`` style helper for fixed ket sums."""
    v = np.zeros(16, dtype=np.complex128)
    for label, c in amps.items():
        v[basis_index(label[1:])] += c
    return v


def build_dicke(k):
    """Normalized symmetric Dicke state with ``k`` excitations, ``0 <= k <= 4``."""
    if not isinstance(k, (int, np.integer)) or not 0 <= k <= 4:
        raise CatalogError(f"Dicke index must be an integer in 0..4, got {k!r}")
    v = np.zeros(16, dtype=np.complex128)
    idx = [i for i in range(16) if bin(i).count("1") == k]
    v[idx] = 1 / math.sqrt(len(idx))
    return v


@dataclass(frozen=True)
class Param:
    name: str
    kind: str  # "scalar" or "vector"
    default: object

    def coerce(self, value):
        if self.kind == "scalar":
            if isinstance(value, str):
                value = parse_coefficient(value)
            return complex(value)
        if isinstance(value, str):
            value = [parse_coefficient(part) for part in value.split(",")]
        arr = np.asarray(value, dtype=np.complex128)
        if arr.shape != (2,):
            raise CatalogError(f"parameter {self.name} must be a 2-component vector")
        return arr


@dataclass(frozen=True)
class Relation:
    """An expected equality (``kind='eq'``) or inequality (``'ne'``) between
    expressions in the invariants, both of degree ``degree``."""

    label: str
    kind: str
    lhs: object
    rhs: object
    degree: int


@dataclass(frozen=True)
class Pattern:
    values: dict = field(default_factory=dict)
    relations: tuple = ()
    note: str = ""

    def to_json(self):
        return {
            "values": {k: [float(v.real), float(v.imag)] for k, v in self.values.items()},
            "relations": [r.label for r in self.relations],
            "note": self.note,
        }


def _eq(label, lhs, rhs, degree):
    return Relation(label, "eq", lhs, rhs, degree)


def _ne(label, lhs, rhs, degree):
    return Relation(label, "ne", lhs, rhs, degree)


def _b_equals_a2():
    return tuple(
        _eq(f"{b} == A^2", lambda s, b=b: s[b], lambda s: s.A**2, 4) for b in ("B1", "B2", "B3")
    )


def _functional_pattern(a):
    """Rows whose values are A, A^2, A^2, A^2, -A^3."""
    return Pattern(
        values={"A": a, "B1": a**2, "B2": a**2, "B3": a**2, "C": -(a**3)},
        relations=_b_equals_a2() + (_eq("C == -A^3", lambda s: s.C, lambda s: -s.A**3, 6),),
    )


def _omitted_b_pattern(a=None):
    values = {} if a is None else {"A": a}
    return Pattern(
        values=values,
        relations=(
            _ne("B1 != B2", lambda s: s.B1, lambda s: s.B2, 4),
            _eq("B3 == B2", lambda s: s.B3, lambda s: s.B2, 4),
            _eq("C == -A*B2", lambda s: s.C, lambda s: -s.A * s.B2, 6),
        ),
        note=(
            "C == -A*B2 is the degree-consistent form; C (degree 6) cannot equal "
            "A^2*B2 (degree 8) identically. B values are snapshot-pinned."
        ),
    )


def _zero_pattern():
    return Pattern(values={n: 0j for n in ("A", "B1", "B2", "B3", "C")})


def _independent(u, v, what):
    if abs(u[0] * v[1] - u[1] * v[0]) <= 1e-9:
        raise CatalogError(f"{what} must be linearly independent")


# --------------------------------------------------------------------------
# registry
# --------------------------------------------------------------------------

@dataclass(frozen=True)
class RepresentativeSpec:
    name: str
    source: str
    family: str
    ket: str
    params: tuple
    build: object
    pattern: object
    check: object = None
    origin: str = "tabulated"

    def resolve(self, params=None, strict=True):
        params = dict(params or {})
        unknown = set(params) - {p.name for p in self.params}
        if unknown:
            raise CatalogError(f"{self.name} has no parameter(s) {sorted(unknown)}")
        resolved = {p.name: p.coerce(params.get(p.name, p.default)) for p in self.params}
        if strict and self.check is not None:
            self.check(resolved)
        return resolved


_SPECS = {}


def _register(*specs):
    for spec in specs:
        _SPECS[spec.name] = spec


_V = lambda *c: np.array(c, dtype=np.complex128)  # noqa: E731

# defaults for the vector-valued rows; generic enough that no accidental
# relation (A = 0, B1 = B2, ...) holds
_DEF = {
    "varphi": _V(1.0, 0.5 + 0.25j),
    "phi": _V(0.75 - 0.5j, 1.25),
    "psi": _V(-0.5 + 1j, 0.8),
    "varphibar": _V(0.3, -1.1 + 0.4j),
    "phibar": _V(1.2j, 0.35 - 0.7j),
    "psibar": _V(0.9, 0.45 + 0.6j),
}


def _dicke_pattern(k):
    if k == 2:
        return Pattern(
            values={"A": 1, "B1": 1, "B2": 1, "B3": 1, "C": -5 / 9, "D": 0},
            relations=_b_equals_a2(),
        )
    return Pattern(values={n: 0j for n in ("A", "B1", "B2", "B3", "C", "D")})


def _x_family_pattern(mu):
    a = 2 + mu**2
    return Pattern(
        values={
            "A": a,
            "B1": a**2,
            "B2": a**2,
            "B3": a**2,
            "C": -8 + 4 * mu**2 - (102 * mu**4 + 5 * mu**6) / 9,
            "D": -8 / 9 * (2 - 3 * mu**2) ** 2,
        },
        relations=_b_equals_a2(),
    )


def _check_mu(p):
    if abs(p["mu"] ** 2 - 2 / 3) <= 1e-12:
        raise CatalogError("the X family requires mu^2 != 2/3")


_register(
    RepresentativeSpec(
        "D4", "symmetric Dicke states", "Dicke state D4(k)", "D4(k)",
        (Param("k", "scalar", 2),),
        lambda p: build_dicke(_int_param(p["k"])),
        lambda p: _dicke_pattern(_int_param(p["k"])),
        check=lambda p: build_dicke(_int_param(p["k"])),
    ),
    RepresentativeSpec(
        "sym_D4", "symmetric family D_4", "D_4 (separable)", "D4(0)", (),
        lambda p: build_dicke(0), lambda p: _dicke_pattern(0),
    ),
    RepresentativeSpec(
        "sym_D31", "symmetric family D_{3,1}", "D_{3,1} (W)", "D4(1)", (),
        lambda p: build_dicke(1), lambda p: _dicke_pattern(1),
    ),
    RepresentativeSpec(
        "sym_D22", "symmetric family D_{2,2}", "D_{2,2}", "D4(2)", (),
        lambda p: build_dicke(2), lambda p: _dicke_pattern(2),
    ),
    RepresentativeSpec(
        "sym_D211", "symmetric family D_{2,1,1}", "D_{2,1,1}", "D4(0) + D4(2)", (),
        lambda p: build_dicke(0) + build_dicke(2), lambda p: _dicke_pattern(2),
    ),
    RepresentativeSpec(
        "sym_D1111", "symmetric family D_{1,1,1,1}", "D_{1,1,1,1} (X)", "|0000> + |1111> + mu D4(2)",
        (Param("mu", "scalar", 0.5),),
        lambda p: _ket(b0000=1, b1111=1) + p["mu"] * build_dicke(2),
        lambda p: _x_family_pattern(p["mu"]),
        check=_check_mu,
    ),
)


def _int_param(value):
    z = complex(value)
    if z.imag != 0 or z.real != int(z.real):
        raise CatalogError(f"expected an integer, got {value!r}")
    return int(z.real)


def _row5(p):
    return _kron(_E0, p["varphi"], p["phi"], p["psi"]) + _ket(b1000=1, b1111=1)


def _row6(p):
    return (
        _kron(_E0, p["phi"], _E0, _E0)
        + _kron(_E0, p["phi"], _E1, p["psi"])
        + _ket(b1000=1, b1101=1)
    )


def _row7(p):
    return (
        _kron(_E0, p["phi"], _E0, p["psi"])
        + _kron(_E0, p["phi"], _E1, _E0)
        + _ket(b1000=1, b1101=1)
    )


def _row10(p):
    pair = _kron(p["phi"], p["psi"]) + _kron(p["phibar"], p["psibar"])
    return _kron(_E0, p["varphi"], pair) + _ket(b1000=1, b1111=1)


def _check_row10(p):
    _independent(p["phi"], p["phibar"], "phi and phibar")
    _independent(p["psi"], p["psibar"], "psi and psibar")


def _row11(p):
    return (
        _ket(b0001=1, b0010=1, b0100=1)
        + _kron(_E1, p["varphi"], p["phi"], p["psi"])
        + _kron(_E1, p["varphibar"], p["phibar"], p["psibar"])
    )


def _check_row11(p):
    _independent(p["varphi"], p["varphibar"], "varphi and varphibar")
    _independent(p["phi"], p["phibar"], "phi and phibar")
    _independent(p["psi"], p["psibar"], "psi and psibar")


def _vec_params(*names):
    return tuple(Param(n, "vector", _DEF[n]) for n in names)


_GHZ_PATTERN = Pattern(values={"A": 2, "B1": 4, "B2": 4, "B3": 4, "C": -8})

_register(
    RepresentativeSpec(
        "W000_0kPsi_b", "LLSS representative 1", "W_{000,0_k Psi} b)", "|0000> + |1101> + |1110>", (),
        lambda p: _ket(b0000=1, b1101=1, b1110=1), lambda p: _zero_pattern(),
    ),
    RepresentativeSpec(
        "W000_W", "LLSS representative 2", "W_{000,W}", "|0001> + |0010> + |0100> + |1000>", (),
        lambda p: _ket(b0001=1, b0010=1, b0100=1, b1000=1), lambda p: _zero_pattern(),
    ),
    RepresentativeSpec(
        "W000_000", "LLSS representative 3", "W_{000,000}", "|0000> + |1111>", (),
        lambda p: _ket(b0000=1, b1111=1), lambda p: _GHZ_PATTERN,
    ),
    RepresentativeSpec(
        "W000_0kPsi_a", "LLSS representative 4", "W_{000,0_k Psi} a)", "|0000> + |1100> + |1111>", (),
        lambda p: _ket(b0000=1, b1100=1, b1111=1), lambda p: _GHZ_PATTERN,
    ),
    RepresentativeSpec(
        "W000_GHZ", "LLSS representative 5", "W_{000,GHZ}", "|0 varphi phi psi> + |1000> + |1111>",
        _vec_params("varphi", "phi", "psi"),
        _row5,
        lambda p: _functional_pattern(
            2 * (p["varphi"][0] * p["phi"][0] * p["psi"][0] - p["varphi"][1] * p["phi"][1] * p["psi"][1])
        ),
    ),
    RepresentativeSpec(
        "W0kPsi_0jPsi_a", "LLSS representative 6", "W_{0_k Psi,0_j Psi} a)",
        "|0 phi 00> + |0 phi 1 psi> + |1000> + |1101>",
        _vec_params("phi", "psi"),
        _row6,
        lambda p: _functional_pattern(
            -2 * (p["phi"][0] * p["psi"][0] + p["phi"][1] * p["psi"][1])
        ),
    ),
    RepresentativeSpec(
        "W0kPsi_0jPsi_b", "LLSS representative 7", "W_{0_k Psi,0_j Psi} b)",
        "|0 phi 0 psi> + |0 phi 10> + |1000> + |1101>",
        _vec_params("phi", "psi"),
        _row7,
        lambda p: _functional_pattern(-2 * p["phi"][0]),
    ),
    RepresentativeSpec(
        "W0kPsi_0kPsi_a", "LLSS representative 8", "W_{0_k Psi,0_k Psi} a)",
        "|0000> + |1100> + lam1 |0011> + lam2 |1111>",
        (Param("lam1", "scalar", 0.7 + 0.2j), Param("lam2", "scalar", 1.3 - 0.4j)),
        lambda p: _ket(b0000=1, b1100=1, b0011=p["lam1"], b1111=p["lam2"]),
        lambda p: _omitted_b_pattern(2 * (p["lam1"] + p["lam2"])),
    ),
    RepresentativeSpec(
        "W0kPsi_0kPsi_b", "LLSS representative 9", "W_{0_k Psi,0_k Psi} b)",
        "|0000> + |1100> + lam1 (|0001> + |0010>) + lam2 (|1101> + |1110>)",
        (Param("lam1", "scalar", 0.7 + 0.2j), Param("lam2", "scalar", 1.3 - 0.4j)),
        lambda p: _ket(
            b0000=1, b1100=1, b0001=p["lam1"], b0010=p["lam1"], b1101=p["lam2"], b1110=p["lam2"]
        ),
        lambda p: _row9_pattern(-4 * p["lam1"] * p["lam2"]),
    ),
    RepresentativeSpec(
        "W0kPsi_GHZ", "LLSS representative 10", "W_{0_k Psi,GHZ}",
        "|0 varphi> (|phi psi> + |phibar psibar>) + |1000> + |1111>",
        _vec_params("varphi", "phi", "psi", "phibar", "psibar"),
        _row10,
        lambda p: _omitted_b_pattern(),
        check=_check_row10,
    ),
    RepresentativeSpec(
        "WGHZ_W", "LLSS representative 11", "W_{GHZ,W}",
        "|0001> + |0010> + |0100> + |1 varphi phi psi> + |1 varphibar phibar psibar>",
        _vec_params("varphi", "phi", "psi", "varphibar", "phibar", "psibar"),
        _row11,
        lambda p: Pattern(note="no closed forms; values are snapshot-pinned"),
        check=_check_row11,
    ),
)


def _row9_pattern(a):
    return Pattern(
        values={"A": a, "B1": 3 * a**2, "B2": 0, "B3": 0, "C": 0},
        relations=(_eq("B1 == 3*A^2", lambda s: s.B1, lambda s: 3 * s.A**2, 4),),
    )


def _g_ab00(p):
    a, d = p["a"], p["d"]
    return _ket(b0000=(a + d) / 2, b1111=(a + d) / 2, b0011=(a - d) / 2, b1100=(a - d) / 2)


def _g_ab00_pattern(p):
    a, d = p["a"], p["d"]
    alpha = a**2 + d**2
    beta1 = 3 * a**4 - 2 * a**2 * d**2 + 3 * d**4
    beta2 = 4 * a**2 * d**2
    return Pattern(
        values={"A": alpha, "B1": beta1, "B2": beta2, "B3": 3 * alpha**2 - beta1 - beta2,
                "C": -4 * a**2 * d**2 * alpha},
        note="amplitude convention fixed by matching A = a^2 + d^2",
    )


def _check_g(p):
    if p["a"] == 0 or p["d"] == 0:
        raise CatalogError("G_ab00 requires a != 0 and d != 0")


_register(
    RepresentativeSpec(
        "GHZ", "LLSS representative 3", "GHZ", "|0000> + |1111>", (),
        lambda p: _ket(b0000=1, b1111=1), lambda p: _GHZ_PATTERN,
    ),
    RepresentativeSpec(
        "W4", "LLSS representative 2", "W", "|0001> + |0010> + |0100> + |1000>", (),
        lambda p: _ket(b0001=1, b0010=1, b0100=1, b1000=1), lambda p: _zero_pattern(),
    ),
    RepresentativeSpec(
        "cluster", "LLSS representative 8 at lam1 = 1, lam2 = -1", "cluster",
        "|0000> + |1100> + |0011> - |1111>", (),
        lambda p: _ket(b0000=1, b1100=1, b0011=1, b1111=-1),
        lambda p: _omitted_b_pattern(0j),
    ),
    RepresentativeSpec(
        "X4", "X state", "X", "|0001> + |0010> + |0100> + |1000> + sqrt(2)|1111>", (),
        lambda p: _ket(b0001=1, b0010=1, b0100=1, b1000=1, b1111=math.sqrt(2)),
        lambda p: Pattern(values={"A": 0, "B1": 0, "B2": 0, "B3": 0}),
    ),
    RepresentativeSpec(
        "G_ab00", "Verstraete G_abcd with b = c = 0", "G_abcd, b = c = 0",
        "(a+d)/2 (|0000> + |1111>) + (a-d)/2 (|0011> + |1100>)",
        (Param("a", "scalar", 1.0), Param("d", "scalar", math.sqrt(2))),
        _g_ab00,
        _g_ab00_pattern,
        check=_check_g,
        origin="derived",
    ),
)


# --------------------------------------------------------------------------
# public API
# --------------------------------------------------------------------------

def names():
    return list(_SPECS)


def get_spec(name):
    try:
        return _SPECS[name]
    except KeyError:
        raise CatalogError(f"unknown representative {name!r}") from None


def build_representative(name, params=None, strict=True):
    """State vector for a catalog entry; unnormalized exactly as tabulated.

    ``params`` maps parameter names to numbers, 2-vectors, or strings such
    as ``"sqrt(2)"`` / ``"1,0.5+2i"``. With ``strict=False`` the row's
    admissibility constraints are not enforced.
    """
    spec = get_spec(name)
    return spec.build(spec.resolve(params, strict))


def expected_pattern(name, params=None, strict=True):
    spec = get_spec(name)
    return spec.pattern(spec.resolve(params, strict))


def parse_params(items):
    """Turn ``["a=1", "d=sqrt(2)"]`` into a dict of raw string values."""
    out = {}
    for item in items:
        key, sep, value = item.partition("=")
        if not sep or not key.strip():
            raise CatalogError(f"parameter must look like name=value, got {item!r}")
        out[key.strip()] = value.strip()
    return out


def check_pattern(state, pattern, rtol=1e-9):
    """Compare a state's invariants against a pattern; returns a list of failure messages.

    Tolerances are relative to the larger of the two sides and the
    degree-matched power of the state norm, so exact zeros are tested
    against a sensible absolute floor.
    """
    inv = invariant_set(state)
    norm = float(np.linalg.norm(state))
    failures = []
    for name, expected in pattern.values.items():
        got = inv[name]
        scale = max(abs(got), abs(expected), norm ** DEGREES[name])
        if abs(got - expected) > rtol * scale:
            failures.append(f"{name}: got {got}, expected {expected}")
    for rel in pattern.relations:
        lhs, rhs = rel.lhs(inv), rel.rhs(inv)
        scale = max(abs(lhs), abs(rhs), norm**rel.degree)
        equal = abs(lhs - rhs) <= rtol * scale
        if equal != (rel.kind == "eq"):
            failures.append(f"{rel.label}: lhs {lhs}, rhs {rhs}")
    return failures


def _jsonable_params(resolved):
    out = {}
    for k, v in resolved.items():
        if isinstance(v, np.ndarray):
            out[k] = [[float(z.real), float(z.imag)] for z in v]
        else:
            out[k] = [float(complex(v).real), float(complex(v).imag)]
    return out


def fixture_document():
    """Every catalog entry at its default parameters, with expected and computed values."""
    entries = []
    for spec in _SPECS.values():
        resolved = spec.resolve()
        state = spec.build(resolved)
        inv = invariant_set(state)
        entries.append(
            {
                "name": spec.name,
                "source": spec.source,
                "family": spec.family,
                "ket": spec.ket,
                "origin": spec.origin,
                "params": _jsonable_params(resolved),
                "expected": spec.pattern(resolved).to_json(),
                "snapshot": {
                    "invariants": inv.to_json(),
                },
            }
        )
    return {"entries": entries}
