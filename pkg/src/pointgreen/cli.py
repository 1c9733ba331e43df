"""Batch evaluation front end.

Four subcommands: ``green`` sweeps the propagator over a (t, x, y) grid,
``evolve`` sweeps an evolved field over (t, x), ``spectrum`` reports the
bound states of an interaction as JSON, and ``verify`` runs the built-in
verification suites.  Output is deterministic: floats are printed with
17 significant digits in lowercase scientific notation, rows follow grid
order, and every stream begins with a '#' header carrying the resolved
run specification.

Exit codes: 0 on success, 2 on a specification problem (the message
names the offending field), 3 on numeric failure such as overflow, and
1 when ``verify`` finds a failing suite.
"""

from __future__ import annotations

import argparse
import json
import math
import os
import sys

from .errors import (
    BackendUnavailableError,
    DomainError,
    EvaluationOverflowError,
    NoDecayError,
    NonFiniteInputError,
    NonPositiveAError,
    NotUnitaryError,
    PoleCollisionError,
    ToleranceNotMetError,
    ZeroStrengthError,
)
from .evolution import EVOLUTION_CONFIG, plane_wave_datum, psi_plane_wave, psi_with_error
from .green import green
from .interaction import (
    UnitaryInteraction,
    delta,
    delta_prime,
    dirichlet,
    free,
    neumann,
    robin,
)
from .quadrature import QuadratureConfig
from .spectral import asymptotic_consistency, bound_states, determinant_residual, eigenfunction_residual
from .superoscillation import (
    SuperoscillatingSequence,
    evolve_superoscillation_with_error,
)
from .verification import run_all

__all__ = ["main", "build_parser"]

_EPS = sys.float_info.epsilon

_SPEC_ERRORS = (DomainError, NotUnitaryError, ZeroStrengthError, NonPositiveAError)
_NUMERIC_ERRORS = (
    EvaluationOverflowError,
    NonFiniteInputError,
    ToleranceNotMetError,
    NoDecayError,
    PoleCollisionError,
    BackendUnavailableError,
)


class _SpecError(Exception):
    """Validation failure tied to one named field of the run spec."""

    def __init__(self, field: str, message: str):
        self.field = field
        super().__init__(message)


def _fmt(value: float) -> str:
    return "%.16e" % value


def _parse_float(text: str, field: str) -> float:
    try:
        value = float(text)
    except ValueError:
        raise _SpecError(field, f"not a number: {text!r}") from None
    if not math.isfinite(value):
        raise _SpecError(field, f"must be finite, got {text!r}")
    return value


def _parse_params(body: str, names: tuple[str, ...], field: str) -> dict[str, float]:
    """Parse 'a=1,b=2' style parameter lists with a fixed name set."""
    out: dict[str, float] = {}
    for chunk in body.split(","):
        if "=" not in chunk:
            raise _SpecError(field, f"expected name=value, got {chunk!r}")
        name, _, raw = chunk.partition("=")
        name = name.strip()
        if name not in names:
            raise _SpecError(field, f"unknown parameter {name!r}")
        if name in out:
            raise _SpecError(field, f"duplicate parameter {name!r}")
        out[name] = _parse_float(raw.strip(), field)
    missing = [name for name in names if name not in out]
    if missing:
        raise _SpecError(field, f"missing parameter {missing[0]!r}")
    return out


def _interaction_from_json(path: str) -> UnitaryInteraction:
    try:
        with open(path, encoding="utf-8") as handle:
            data = json.load(handle)
    except OSError as exc:
        raise _SpecError("interaction", f"cannot read {path!r}: {exc}") from None
    except json.JSONDecodeError as exc:
        raise _SpecError("interaction", f"invalid JSON in {path!r}: {exc}") from None
    if not isinstance(data, dict):
        raise _SpecError("interaction", "JSON spec must be an object")

    if "named" in data:
        name = data["named"]
        builders = {
            "free": (free, ()),
            "dirichlet": (dirichlet, ()),
            "neumann": (neumann, ()),
            "delta": (delta, ("c",)),
            "deltaprime": (delta_prime, ("c",)),
            "robin": (robin, ("a", "b")),
        }
        if name not in builders:
            raise _SpecError("interaction", f"unknown named interaction {name!r}")
        builder, required = builders[name]
        args = []
        for key in required:
            if key not in data:
                raise _SpecError("interaction", f"named {name!r} requires field {key!r}")
            args.append(_parse_float(str(data[key]), "interaction"))
        return builder(*args)

    for key in ("phi", "alpha", "beta"):
        if key not in data:
            raise _SpecError("interaction", f"raw JSON spec requires field {key!r}")
    phi = _parse_float(str(data["phi"]), "interaction")

    def as_complex(key: str) -> complex:
        pair = data[key]
        if not isinstance(pair, (list, tuple)) or len(pair) != 2:
            raise _SpecError("interaction", f"field {key!r} must be [re, im]")
        return complex(
            _parse_float(str(pair[0]), "interaction"),
            _parse_float(str(pair[1]), "interaction"),
        )

    return UnitaryInteraction(phi=phi, alpha=as_complex("alpha"), beta=as_complex("beta"))


def _parse_interaction(text: str) -> UnitaryInteraction:
    if text == "free":
        return free()
    if text == "dirichlet":
        return dirichlet()
    if text == "neumann":
        return neumann()
    if text.startswith("delta:"):
        params = _parse_params(text[len("delta:"):], ("c",), "interaction")
        return delta(params["c"])
    if text.startswith("deltaprime:"):
        params = _parse_params(text[len("deltaprime:"):], ("c",), "interaction")
        return delta_prime(params["c"])
    if text.startswith("robin:"):
        params = _parse_params(text[len("robin:"):], ("a", "b"), "interaction")
        return robin(params["a"], params["b"])
    if text.startswith("json:"):
        return _interaction_from_json(text[len("json:"):])
    raise _SpecError("interaction", f"unrecognized interaction spec {text!r}")


def _parse_datum(text: str):
    """Return ('planewave', k) or ('superosc', (n, k)) from a datum spec."""
    if text == "constant":
        return "planewave", 0.0
    if text.startswith("planewave:"):
        params = _parse_params(text[len("planewave:"):], ("k",), "datum")
        return "planewave", params["k"]
    if text.startswith("superosc:"):
        body = text[len("superosc:"):]
        raw: dict[str, str] = {}
        for chunk in body.split(","):
            name, _, value = chunk.partition("=")
            raw[name.strip()] = value.strip()
        if set(raw) != {"n", "k"}:
            raise _SpecError("datum", "superosc requires exactly n=<int>,k=<float>")
        try:
            n = int(raw["n"])
        except ValueError:
            raise _SpecError("datum", f"n must be an integer, got {raw['n']!r}") from None
        k = _parse_float(raw["k"], "datum")
        return "superosc", (n, k)
    raise _SpecError("datum", f"unrecognized datum spec {text!r}")


def _parse_grid(text: str, field: str, positive: bool = False, nonzero: bool = False):
    values = []
    for chunk in text.split(","):
        chunk = chunk.strip()
        if not chunk:
            raise _SpecError(field, "empty grid entry")
        value = _parse_float(chunk, field)
        if positive and value <= 0.0:
            raise _SpecError(field, f"values must be positive, got {value!r}")
        if nonzero and value == 0.0:
            raise _SpecError(field, "values must be nonzero")
        values.append(value)
    return tuple(values)


def _env_tolerance(name: str):
    raw = os.environ.get(name)
    if raw is None:
        return None
    value = _parse_float(raw, name)
    if value <= 0.0:
        raise _SpecError(name, f"must be positive, got {raw!r}")
    return value


def _config_from_env() -> QuadratureConfig:
    kwargs = {
        "abs_tol": EVOLUTION_CONFIG.abs_tol,
        "rel_tol": EVOLUTION_CONFIG.rel_tol,
    }
    abs_tol = _env_tolerance("POINTGREEN_ABS_TOL")
    if abs_tol is not None:
        kwargs["abs_tol"] = abs_tol
    rel_tol = _env_tolerance("POINTGREEN_REL_TOL")
    if rel_tol is not None:
        kwargs["rel_tol"] = rel_tol
    return QuadratureConfig(**kwargs)


def _resolved_interaction(text: str, u: UnitaryInteraction) -> list[str]:
    return [
        f"interaction={text}",
        f"phi={_fmt(u.phi)}",
        f"alpha={_fmt(u.alpha.real)},{_fmt(u.alpha.imag)}",
        f"beta={_fmt(u.beta.real)},{_fmt(u.beta.imag)}",
    ]


def _grid_token(name: str, values) -> str:
    return f"{name}=" + ",".join(_fmt(v) for v in values)


def _header(command: str, tokens: list[str]) -> str:
    return "# pointgreen " + command + " " + " ".join(tokens)


def _emit_rows(out, command: str, tokens: list[str], columns: tuple[str, ...],
               rows: list[tuple[float, ...]], fmt: str) -> None:
    out.write(_header(command, tokens + [f"format={fmt}"]) + "\n")
    if fmt == "csv":
        out.write(",".join(columns) + "\n")
        for row in rows:
            out.write(",".join(_fmt(v) for v in row) + "\n")
        return
    encoded = [
        "{" + ",".join(f'"{c}":{_fmt(v)}' for c, v in zip(columns, row)) + "}"
        for row in rows
    ]
    out.write('{"command":"%s","rows":[%s]}\n' % (command, ",".join(encoded)))


def _cmd_green(args, out) -> int:
    u = _parse_interaction(args.interaction)
    ts = _parse_grid(args.t, "t", positive=True)
    xs = _parse_grid(args.x, "x", nonzero=True)
    ys = _parse_grid(args.y, "y", nonzero=True)
    tokens = _resolved_interaction(args.interaction, u) + [
        _grid_token("t", ts),
        _grid_token("x", xs),
        _grid_token("y", ys),
    ]
    rows = []
    for t in ts:
        for x in xs:
            for y in ys:
                value = complex(green(u, t, x, y))
                rows.append((t, x, y, value.real, value.imag))
    _emit_rows(out, "green", tokens, ("t", "x", "y", "re", "im"), rows, args.format)
    return 0


def _cmd_evolve(args, out) -> int:
    u = _parse_interaction(args.interaction)
    ts = _parse_grid(args.t, "t", positive=True)
    xs = _parse_grid(args.x, "x", nonzero=True)
    kind, params = _parse_datum(args.datum)
    cfg = _config_from_env()
    tokens = _resolved_interaction(args.interaction, u) + [
        f"datum={args.datum}",
        f"method={args.method}",
        _grid_token("t", ts),
        _grid_token("x", xs),
        f"abs_tol={_fmt(cfg.abs_tol)}",
        f"rel_tol={_fmt(cfg.rel_tol)}",
    ]

    if kind == "superosc":
        n, k = params
        sequence = SuperoscillatingSequence(n=n, k=k)
        tokens.append(f"conditioning={_fmt(sequence.conditioning)}")

        def closed(t: float, x: float):
            return evolve_superoscillation_with_error(u, t, x, n, k)

        datum = sequence.datum()
    else:
        k = params

        def closed(t: float, x: float):
            value = psi_plane_wave(u, t, x, k)
            return value, 4.0 * _EPS * max(1.0, abs(value))

        datum = plane_wave_datum(k)

    rows = []
    for t in ts:
        for x in xs:
            if args.method == "closed":
                value, err = closed(t, x)
            else:
                value, err = psi_with_error(u, t, x, datum, cfg)
            rows.append((t, x, value.real, value.imag, err))
    _emit_rows(out, "evolve", tokens, ("t", "x", "re", "im", "err_estimate"), rows, args.format)
    return 0


def _cmd_spectrum(args, out) -> int:
    u = _parse_interaction(args.interaction)
    tokens = _resolved_interaction(args.interaction, u)
    out.write(_header("spectrum", tokens) + "\n")
    states = bound_states(u)
    entries = []
    for state in states:
        pairs = ",".join(
            '{"even":[%s,%s],"odd":[%s,%s]}'
            % (_fmt(even.real), _fmt(even.imag), _fmt(odd.real), _fmt(odd.imag))
            for even, odd in state.eigenfunctions
        )
        entries.append(
            '{"energy":%s,"omega":%s,"multiplicity":%d,"eigenfunctions":[%s],'
            '"determinant_residual":%s,"eigenfunction_residual":%s}'
            % (
                _fmt(state.energy),
                _fmt(state.omega),
                state.multiplicity,
                pairs,
                _fmt(determinant_residual(u, state.energy)),
                _fmt(eigenfunction_residual(u, state)),
            )
        )
    consistency = asymptotic_consistency(u, 1.0, 1.0, 1.0)
    out.write(
        '{"command":"spectrum","bound_states":[%s],"asymptotic_consistency":%d}\n'
        % (",".join(entries), consistency)
    )
    return 0


def _cmd_verify(args, out) -> int:
    out.write(_header("verify", [f"level={args.level}"]) + "\n")
    results = run_all(args.level)
    for result in results:
        verdict = "PASS" if result.passed else "FAIL"
        out.write(f"{result.name}: {verdict} ({result.detail})\n")
    passed = sum(1 for r in results if r.passed)
    out.write(f"{passed}/{len(results)} suites passed\n")
    return 0 if passed == len(results) else 1


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="pointgreen",
        description="Evaluate point-interaction propagators, evolved fields, "
        "and spectra on grids, or run the verification suites.",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    interaction_help = (
        "free|dirichlet|neumann|delta:c=<v>|deltaprime:c=<v>|"
        "robin:a=<v>,b=<v>|json:<path>"
    )

    cmd = sub.add_parser("green", help="sweep the propagator over a t,x,y grid")
    cmd.add_argument("--interaction", required=True, help=interaction_help)
    cmd.add_argument("--t", required=True, help="comma-separated times, all > 0")
    cmd.add_argument("--x", required=True, help="comma-separated positions, nonzero")
    cmd.add_argument("--y", required=True, help="comma-separated sources, nonzero")
    cmd.add_argument("--format", choices=("csv", "json"), default="csv")

    cmd = sub.add_parser("evolve", help="sweep an evolved field over a t,x grid")
    cmd.add_argument("--interaction", required=True, help=interaction_help)
    cmd.add_argument("--t", required=True, help="comma-separated times, all > 0")
    cmd.add_argument("--x", required=True, help="comma-separated positions, nonzero")
    cmd.add_argument(
        "--datum",
        required=True,
        help="planewave:k=<v>|superosc:n=<int>,k=<v>|constant",
    )
    cmd.add_argument("--method", choices=("closed", "quadrature"), default="closed")
    cmd.add_argument("--format", choices=("csv", "json"), default="csv")

    cmd = sub.add_parser("spectrum", help="report bound states as JSON")
    cmd.add_argument("--interaction", required=True, help=interaction_help)

    cmd = sub.add_parser("verify", help="run the verification suites")
    cmd.add_argument("--level", choices=("quick", "full"), default="quick")

    return parser


def main(argv=None) -> int:
    args = build_parser().parse_args(argv)
    handlers = {
        "green": _cmd_green,
        "evolve": _cmd_evolve,
        "spectrum": _cmd_spectrum,
        "verify": _cmd_verify,
    }
    try:
        return handlers[args.command](args, sys.stdout)
    except _SpecError as exc:
        print(f"error: field '{exc.field}': {exc}", file=sys.stderr)
        return 2
    except _SPEC_ERRORS as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2
    except _NUMERIC_ERRORS as exc:
        print(f"numeric failure: {exc}", file=sys.stderr)
        return 3


if __name__ == "__main__":
    sys.exit(main())
