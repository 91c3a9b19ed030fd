"""Four-qubit state vectors: ket notation, local operators, qubit relabeling.

A state is a complex array of 16 amplitudes. Qubit 1 is the most
significant bit, so the amplitude of ``|b1 b2 b3 b4>`` sits at index
``8*b1 + 4*b2 + 2*b3 + b4``. States are kept unnormalized.
"""

import itertools
import json
import math
import re

import numpy as np

from ._validation import check_local_operator, check_state, check_tolerance

__all__ = [
    "KetSyntaxError",
    "apply_local",
    "basis_index",
    "basis_label",
    "dump_state",
    "format_ket",
    "is_symmetric",
    "load_state",
    "parse_coefficient",
    "parse_ket",
    "permute_qubits",
    "state_from_json",
    "state_to_json",
    "swap",
]

N_QUBITS = 4


def basis_index(label):
    """Index of a basis label such as ``"0110"``."""
    if len(label) != N_QUBITS or set(label) - {"0", "1"}:
        raise ValueError(f"basis label must be 4 characters over {{0,1}}, got {label!r}")
    return int(label, 2)


def basis_label(index):
    return format(index, "04b")


# --------------------------------------------------------------------------
# ket-expression parser
# --------------------------------------------------------------------------

class KetSyntaxError(ValueError):
    """Malformed ket expression; ``position`` is the 0-based character offset."""

    def __init__(self, message, position):
        super().__init__(f"{message} at position {position}")
        self.position = position


_TOKEN_RE = re.compile(
    r"""
    (?P<ws>\s+)
  | (?P<ket>\|[^|>]*>)
  | (?P<number>(?:\d+\.?\d*|\.\d+)(?:[eE][+-]?\d+)?)
  | (?P<sqrt>sqrt)
  | (?P<imag>[ij])
  | (?P<op>[-+*/()])
    """,
    re.VERBOSE,
)


def _tokenize(text):
    tokens = []
    pos = 0
    while pos < len(text):
        m = _TOKEN_RE.match(text, pos)
        if m is None:
            raise KetSyntaxError(f"unexpected character {text[pos]!r}", pos)
        kind = m.lastgroup
        if kind != "ws":
            value = m.group()
            # an identifier glued to 'i'/'j' (e.g. "ix") is not an imaginary unit
            if kind in ("imag", "sqrt") and m.end() < len(text) and text[m.end()].isalnum():
                raise KetSyntaxError(f"unexpected character {text[pos]!r}", pos)
            tokens.append((kind, value, pos))
        pos = m.end()
    tokens.append(("end", "", len(text)))
    return tokens


class _Parser:
    def __init__(self, text):
        self.text = text
        self.tokens = _tokenize(text)
        self.i = 0

    @property
    def tok(self):
        return self.tokens[self.i]

    def advance(self):
        tok = self.tokens[self.i]
        self.i += 1
        return tok

    def accept(self, kind, value=None):
        tok = self.tok
        if tok[0] == kind and (value is None or tok[1] == value):
            self.i += 1
            return tok
        return None

    def expect(self, kind, value=None, what=None):
        tok = self.accept(kind, value)
        if tok is None:
            found = self.tok[1] or "end of input"
            raise KetSyntaxError(f"expected {what or value or kind}, found {found!r}", self.tok[2])
        return tok

    # expr := [sign] term (sign term)*
    def expression(self):
        terms = []
        sign = self._sign(required=False)
        terms.append(self.term(sign))
        while self.tok[0] != "end":
            sign = self._sign(required=True)
            terms.append(self.term(sign))
        return terms

    def _sign(self, required):
        if self.accept("op", "+"):
            return 1
        if self.accept("op", "-"):
            return -1
        if required:
            found = self.tok[1] or "end of input"
            raise KetSyntaxError(f"expected '+' or '-' between terms, found {found!r}", self.tok[2])
        return 1

    # term := [coefficient] ket
    def term(self, sign):
        coeff = 1 + 0j
        if self.tok[0] != "ket":
            coeff = self.coefficient()
        kind, value, pos = self.expect("ket", what="ket |b1b2b3b4>")
        label = value[1:-1]
        if len(label) != N_QUBITS:
            raise KetSyntaxError(f"basis label {label!r} must have length 4", pos)
        if set(label) - {"0", "1"}:
            raise KetSyntaxError(f"basis label {label!r} may only contain 0 and 1", pos)
        return (-coeff if sign < 0 else coeff), label

    # coefficient := factor (['*' | '/'] factor)*
    def coefficient(self):
        value = self.factor()
        while True:
            if self.accept("op", "*"):
                value = value * self.factor()
            elif self.accept("op", "/"):
                pos = self.tok[2]
                divisor = self.factor()
                if divisor == 0:
                    raise KetSyntaxError("division by zero", pos)
                value = value / divisor
            elif self.tok[0] in ("number", "imag", "sqrt") or self.tok[:2] == ("op", "("):
                value = value * self.factor()
            else:
                return value

    # factor := number [i] | i | sqrt '(' number ')' | '(' complex ')'
    def factor(self):
        kind, value, pos = self.tok
        if kind == "number":
            self.advance()
            x = float(value)
            if self.accept("imag"):
                return complex(0.0, x)
            return complex(x, 0.0)
        if kind == "imag":
            self.advance()
            return 1j
        if kind == "sqrt":
            self.advance()
            self.expect("op", "(")
            num = self.expect("number", what="a number inside sqrt()")
            self.expect("op", ")")
            return complex(math.sqrt(float(num[1])), 0.0)
        if (kind, value) == ("op", "("):
            self.advance()
            z = self.complex_literal()
            self.expect("op", ")")
            return z
        found = value or "end of input"
        raise KetSyntaxError(f"expected a coefficient or ket, found {found!r}", pos)

    # complex := [sign] real [sign [real] i] | [sign] [real] i
    def complex_literal(self):
        s1 = 1.0
        if self.accept("op", "-"):
            s1 = -1.0
        else:
            self.accept("op", "+")
        first = self.accept("number")
        if self.accept("imag"):
            x = float(first[1]) if first else 1.0
            return complex(0.0, math.copysign(x, s1))
        if first is None:
            found = self.tok[1] or "end of input"
            raise KetSyntaxError(f"expected a number, found {found!r}", self.tok[2])
        re_part = math.copysign(float(first[1]), s1)
        if self.tok[:2] in (("op", "+"), ("op", "-")):
            s2 = -1.0 if self.advance()[1] == "-" else 1.0
            second = self.accept("number")
            self.expect("imag", what="imaginary unit 'i'")
            y = float(second[1]) if second else 1.0
            return complex(re_part, math.copysign(y, s2))
        return complex(re_part, 0.0)


def parse_coefficient(text):
    """Parse a single complex coefficient such as ``"sqrt(2)/2"`` or ``"1+2i"``."""
    p = _Parser(text)
    if p.tok[0] == "end":
        raise KetSyntaxError("empty coefficient", 0)
    try:
        z = p.complex_literal()
        if p.tok[0] == "end":
            return z
    except KetSyntaxError:
        pass
    p.i = 0
    sign = p._sign(required=False)
    value = p.coefficient()
    if p.tok[0] != "end":
        raise KetSyntaxError(f"unexpected {p.tok[1]!r}", p.tok[2])
    return -value if sign < 0 else value


def parse_ket(text):
    """Parse a sum of kets like ``"|0000> + sqrt(2)|1111>"`` into amplitudes.

    Coefficients may be integers, decimals, ``i``/``j``, ``sqrt(n)``,
    parenthesized complex literals ``(a+bi)``, and products or quotients
    of these. Repeated labels are summed.
    """
    terms = _Parser(text).expression()
    amps = np.zeros(16, dtype=np.complex128)
    for coeff, label in terms:
        amps[int(label, 2)] += coeff
    return amps


def _fmt_real(x, digits):
    return repr(float(x)) if digits is None else f"{x:.{digits}g}"


def format_ket(state, digits=None):
    """Render a state in ket notation.

    With ``digits=None`` every coefficient is written as ``(re+imi)`` using
    the shortest round-tripping float repr, so ``parse_ket`` reproduces the
    amplitudes exactly. Otherwise coefficients are rounded for display.
    """
    psi = check_state(state)
    parts = []
    for idx in np.flatnonzero(psi):
        z = psi[idx]
        sign = "-" if math.copysign(1.0, z.imag) < 0 else "+"
        coeff = f"({_fmt_real(z.real, digits)}{sign}{_fmt_real(abs(z.imag), digits)}i)"
        parts.append(f"{coeff}|{basis_label(idx)}>")
    if not parts:
        return "0|0000>"
    return " + ".join(parts)


# --------------------------------------------------------------------------
# JSON state files
# --------------------------------------------------------------------------

def state_to_json(state):
    psi = check_state(state)
    return {"amplitudes": [[float(z.real), float(z.imag)] for z in psi]}


def state_from_json(obj):
    try:
        amps = obj["amplitudes"]
    except (TypeError, KeyError):
        raise ValueError('state JSON must be an object with an "amplitudes" key') from None
    if not isinstance(amps, list) or len(amps) != 16:
        raise ValueError('"amplitudes" must be a list of 16 [re, im] pairs')
    out = np.zeros(16, dtype=np.complex128)
    for k, pair in enumerate(amps):
        if (
            not isinstance(pair, list)
            or len(pair) != 2
            or not all(isinstance(v, (int, float)) and not isinstance(v, bool) for v in pair)
        ):
            raise ValueError(f"amplitude {k} must be a [re, im] pair of numbers")
        out[k] = complex(float(pair[0]), float(pair[1]))
    return check_state(out)


def load_state(path):
    with open(path) as fh:
        return state_from_json(json.load(fh))


def dump_state(state, path):
    with open(path, "w") as fh:
        json.dump(state_to_json(state), fh)
        fh.write("\n")


# --------------------------------------------------------------------------
# local operators and permutations
# --------------------------------------------------------------------------

def apply_local(state, ops):
    """Return ``(J1 x J2 x J3 x J4) state`` for four 2x2 matrices ``ops``.

    Singular operators are allowed; callers that need SLOCC semantics check
    invertibility themselves.
    """
    psi = check_state(state)
    if len(ops) != N_QUBITS:
        raise ValueError(f"need one operator per qubit, got {len(ops)}")
    t = psi.reshape(2, 2, 2, 2)
    for q, op in enumerate(ops):
        op = check_local_operator(op)
        t = np.moveaxis(np.tensordot(op, t, axes=([1], [q])), 0, q)
    return np.ascontiguousarray(t).reshape(16)


def _check_perm(perm):
    try:
        p = tuple(int(k) for k in perm)
    except (TypeError, ValueError):
        raise ValueError(f"invalid permutation {perm!r}") from None
    if sorted(p) != list(range(N_QUBITS)):
        raise ValueError(f"permutation must be an ordering of 0..3, got {perm!r}")
    return p


def swap(i, j):
    """Permutation exchanging qubit positions ``i`` and ``j`` (0-based)."""
    p = list(range(N_QUBITS))
    p[i], p[j] = p[j], p[i]
    return tuple(p)


def permute_qubits(state, perm):
    """Relabel qubits: qubit ``k`` of the result is qubit ``perm[k]`` of the input.

    ``perm`` is 0-based. ``swap(2, 3)`` exchanges the last two qubits, so
    ``|0010>`` becomes ``|0001>``.
    """
    psi = check_state(state)
    p = _check_perm(perm)
    return np.ascontiguousarray(psi.reshape(2, 2, 2, 2).transpose(p)).reshape(16)


def is_symmetric(state, tol=1e-9):
    """True if the state is unchanged, to ``tol`` relative, by every qubit permutation."""
    psi = check_state(state, allow_zero=False)
    tol = check_tolerance(tol)
    bound = tol * np.linalg.norm(psi)
    t = psi.reshape(2, 2, 2, 2)
    for p in itertools.permutations(range(N_QUBITS)):
        if np.linalg.norm((t.transpose(p) - t).ravel()) > bound:
            return False
    return True
