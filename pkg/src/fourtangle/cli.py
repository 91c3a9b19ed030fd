"""Command line interface: ``fourtangle <command> ...``.

Exit codes: 0 success (or an inconclusive comparison), 1 a substantive
negative result (distinct classes, orbit-check failure), 2 usage or parse
errors, 3 degenerate input such as the zero vector.
"""

import argparse
import json
import sys

import numpy as np

from . import catalog
from ._validation import ZeroStateError, check_state
from .classify import (
    DEFAULT_TOL,
    classify,
    classify_symmetric,
    discriminate,
    orbit_samples,
)
from .invariants import DEGREES, INVARIANT_NAMES, invariant_set, tangle_magnitudes
from .state import format_ket, is_symmetric, load_state, parse_ket, state_from_json, state_to_json

EXIT_OK, EXIT_NEGATIVE, EXIT_USAGE, EXIT_DEGENERATE = 0, 1, 2, 3


class UsageError(Exception):
    pass


class _InputAction(argparse.Action):
    """Collects --ket/--file/--catalog in command-line order."""

    def __call__(self, parser, namespace, values, option_string=None):
        inputs = list(getattr(namespace, "inputs", None) or [])
        inputs.append((self.dest, values))
        namespace.inputs = inputs


def _positive_float(text):
    try:
        value = float(text)
    except ValueError:
        raise argparse.ArgumentTypeError(f"not a number: {text!r}") from None
    if not value > 0:
        raise argparse.ArgumentTypeError("tolerance must be positive")
    return value


def _add_common(p, n_inputs):
    g = p.add_argument_group("input" if n_inputs == 1 else "inputs (give two)")
    g.add_argument("--ket", action=_InputAction, dest="ket", metavar="EXPR",
                   help='ket expression, e.g. "|0000> + |1111>"')
    g.add_argument("--file", action=_InputAction, dest="file", metavar="PATH",
                   help="state file (JSON, or ket text with --input-format ket)")
    g.add_argument("--catalog", action=_InputAction, dest="catalog", metavar="NAME[:k=v;...]",
                   help='catalog entry, e.g. "G_ab00:a=1;d=sqrt(2)"')
    p.add_argument("--input-format", choices=("json", "ket"), default="json",
                   help="format of --file contents (default json)")
    p.add_argument("--tolerance", type=_positive_float, default=DEFAULT_TOL)
    p.add_argument("--format", choices=("json", "table"), default="table", dest="output_format")
    p.set_defaults(inputs=[], n_inputs=n_inputs)


def build_parser():
    parser = argparse.ArgumentParser(
        prog="fourtangle",
        description="Polynomial invariants, SLOCC discrimination and tangle-pattern "
        "classification of four-qubit states.",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("invariants", help="print all invariants and tangle magnitudes")
    _add_common(p, 1)

    p = sub.add_parser("classify", help="tangle-pattern family (and symmetric level)")
    _add_common(p, 1)

    p = sub.add_parser("discriminate", help="compare two states; exit 1 if provably distinct")
    _add_common(p, 2)

    p = sub.add_parser("orbit-check", help="self-test invariance on random SL(2,C)^4 images")
    _add_common(p, 1)
    p.add_argument("--samples", type=int, default=100)
    p.add_argument("--seed", type=int, default=0)
    p.add_argument("--max-deviation", type=_positive_float, default=1e-8)

    p = sub.add_parser("catalog", help="list, show or emit representative states")
    p.add_argument("action", choices=("list", "show", "emit"))
    p.add_argument("name", nargs="?")
    p.add_argument("--param", action="append", default=[], metavar="NAME=VALUE",
                   help="parameter value; vectors as v0,v1 (complex literals like 1+2i)")
    p.add_argument("--k", help="shorthand for --param k=K (Dicke states)")
    p.add_argument("--out", metavar="PATH", help="write the emitted state here instead of stdout")
    p.add_argument("--format", choices=("json", "table"), default="table", dest="output_format")
    return parser


# --------------------------------------------------------------------------
# input resolution
# --------------------------------------------------------------------------

def _catalog_ref(ref):
    name, _, rest = ref.partition(":")
    items = [item for item in rest.split(";") if item.strip()]
    return catalog.build_representative(name.strip(), catalog.parse_params(items))


def _read_input(kind, value, input_format):
    if kind == "ket":
        return parse_ket(value)
    if kind == "catalog":
        return _catalog_ref(value)
    with open(value) as fh:
        text = fh.read()
    if input_format == "ket":
        return parse_ket(text.strip())
    return state_from_json(json.loads(text))


def _states(args):
    if len(args.inputs) != args.n_inputs:
        raise UsageError(f"{args.command} needs exactly {args.n_inputs} input state(s), "
                         f"got {len(args.inputs)}")
    states = [_read_input(kind, value, args.input_format) for kind, value in args.inputs]
    return [check_state(s, allow_zero=False) for s in states]


# --------------------------------------------------------------------------
# output helpers
# --------------------------------------------------------------------------

def _c(z):
    return f"{z.real:.12g}{z.imag:+.12g}i"


def _emit_json(obj):
    print(json.dumps(obj, indent=2))


def _table(rows):
    width = max(len(k) for k, _ in rows)
    for key, value in rows:
        print(f"{key:<{width}}  {value}")


# --------------------------------------------------------------------------
# commands
# --------------------------------------------------------------------------

def cmd_invariants(args):
    (psi,) = _states(args)
    inv = invariant_set(psi)
    mags = tangle_magnitudes(psi)
    if args.output_format == "json":
        _emit_json({"invariants": inv.to_json(), "magnitudes": mags.as_dict()})
    else:
        rows = [(n, f"{_c(inv[n]):<40}|.|^(2/{DEGREES[n]}) = {getattr(mags, n):.12g}")
                for n in INVARIANT_NAMES]
        _table(rows)
    return EXIT_OK


def _label(psi, tol):
    if is_symmetric(psi, tol):
        return classify_symmetric(psi, tol)
    return classify(psi, tol)


def cmd_classify(args):
    (psi,) = _states(args)
    label = _label(psi, args.tolerance)
    if args.output_format == "json":
        _emit_json(label.to_json())
    else:
        rows = [("family", label.family.value)]
        if label.symmetric_level is not None:
            rows.append(("symmetricLevel", label.symmetric_level.value))
        _table(rows)
    return EXIT_OK


def cmd_discriminate(args):
    psi, phi = _states(args)
    verdict = discriminate(psi, phi, args.tolerance)
    if args.output_format == "json":
        _emit_json(verdict.to_json())
    else:
        print(verdict.outcome.value)
        for w in verdict.witnesses:
            print(f"  {w.name}: {_c(w.lhs)} != {_c(w.rhs)}")
    return EXIT_NEGATIVE if verdict.distinct else EXIT_OK


def _deviation(ref, sample, norm):
    """Largest relative change of any invariant, floored at the degree-matched norm."""
    worst, worst_name = 0.0, None
    for n in INVARIANT_NAMES:
        scale = max(abs(ref[n]), norm ** DEGREES[n])
        dev = abs(sample[n] - ref[n]) / scale
        if dev > worst:
            worst, worst_name = dev, n
    return worst, worst_name


def cmd_orbit_check(args):
    if args.samples < 1:
        raise UsageError("--samples must be at least 1")
    (psi,) = _states(args)
    ref = invariant_set(psi)
    norm = float(np.linalg.norm(psi))
    label = classify(psi, args.tolerance)
    worst = 0.0
    failures = []
    for i, s in enumerate(orbit_samples(psi, args.samples, args.seed)):
        dev, name = _deviation(ref, invariant_set(s), norm)
        worst = max(worst, dev)
        if dev > args.max_deviation:
            failures.append(f"sample {i}: invariant {name} deviates by {dev:.3g}")
        got = classify(s, args.tolerance)
        if got.family is not label.family:
            failures.append(f"sample {i}: classified {got.family.value}, expected {label.family.value}")
    report = {
        "samples": args.samples,
        "seed": args.seed,
        "family": label.family.value,
        "maxRelativeDeviation": worst,
        "passed": not failures,
        "failures": failures,
    }
    if args.output_format == "json":
        _emit_json(report)
    else:
        _table([
            ("samples", str(args.samples)),
            ("seed", str(args.seed)),
            ("family", label.family.value),
            ("max relative deviation", f"{worst:.3g}"),
            ("result", "pass" if not failures else "FAIL"),
        ])
    for line in failures:
        print(line, file=sys.stderr)
    return EXIT_OK if not failures else EXIT_NEGATIVE


def cmd_catalog(args):
    if args.action == "list":
        entries = [catalog.get_spec(n) for n in catalog.names()]
        if args.output_format == "json":
            _emit_json([
                {"name": s.name, "source": s.source, "family": s.family, "ket": s.ket,
                 "params": [p.name for p in s.params]}
                for s in entries
            ])
        else:
            _table([(s.name, f"{s.source}: {s.ket}") for s in entries])
        return EXIT_OK

    if not args.name:
        raise UsageError(f"catalog {args.action} needs a NAME")
    spec = catalog.get_spec(args.name)
    params = catalog.parse_params(args.param)
    if args.k is not None:
        params["k"] = args.k
    resolved = spec.resolve(params)
    state = spec.build(resolved)

    if args.action == "emit":
        if args.out:
            with open(args.out, "w") as fh:
                json.dump(state_to_json(state), fh)
                fh.write("\n")
        else:
            print(json.dumps(state_to_json(state)))
        return EXIT_OK

    pattern = spec.pattern(resolved)
    if args.output_format == "json":
        _emit_json({
            "name": spec.name,
            "source": spec.source,
            "family": spec.family,
            "ket": spec.ket,
            "origin": spec.origin,
            "state": format_ket(state),
            "expected": pattern.to_json(),
        })
    else:
        rows = [("name", spec.name), ("source", spec.source), ("family", spec.family),
                ("ket", spec.ket), ("state", format_ket(state, digits=12))]
        rows += [(f"expect {k}", _c(complex(v))) for k, v in pattern.values.items()]
        rows += [("expect", r.label) for r in pattern.relations]
        if pattern.note:
            rows.append(("note", pattern.note))
        _table(rows)
    return EXIT_OK


_COMMANDS = {
    "invariants": cmd_invariants,
    "classify": cmd_classify,
    "discriminate": cmd_discriminate,
    "orbit-check": cmd_orbit_check,
    "catalog": cmd_catalog,
}


def main(argv=None):
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        return _COMMANDS[args.command](args)
    except ZeroStateError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_DEGENERATE
    except (UsageError, ValueError, OSError) as exc:
        # KetSyntaxError, CatalogError and malformed JSON are all ValueErrors
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_USAGE


if __name__ == "__main__":  # pragma: no cover
    sys.exit(main())
