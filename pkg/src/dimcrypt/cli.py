"""Command-line entry point: ``dimcrypt {border,curves,figure1,simulate,rates}``.

Single results are printed as JSON on stdout, tables are written as CSV to
``--out``.  Exit status: 0 success, 1 usage/validation, 2 solver/numeric
failure, 3 I/O.
"""

from __future__ import annotations

import argparse
import csv
import json
import sys
from dataclasses import asdict, dataclass, field
from typing import Any

import numpy as np

from . import __version__
from .errors import DomainError, SolverError, ValidationError
from .qubit_attack import params_from_beta, string_information
from .qudit_attack import qudit_disturbances, qudit_information, qudit_params_from_beta
from .quantum_sim import Attack, AttackKind, SessionConfig, analytic_predictions, run_session, z_scores
from .security_solver import Protocol, border, border_beta, figure1_table, sifting_rates

EXIT_OK, EXIT_USAGE, EXIT_SOLVER, EXIT_IO = 0, 1, 2, 3
MAX_ROUNDS = 10**9

CURVES_HEADER = ["disturbance", "info_bob", "info_eve"]
FIGURE1_HEADER = ["n", "d", "border_qubit_string", "border_qudit_mub"]


class UsageError(Exception):
    pass


@dataclass
class RunReport:
    command: str
    parameters: dict[str, Any]
    results: dict[str, Any]
    tool_version: str = __version__
    seed: int | None = None

    def to_json(self) -> str:
        return json.dumps(asdict(self), indent=2, sort_keys=True, allow_nan=False)

    @classmethod
    def from_json(cls, text: str) -> "RunReport":
        return cls(**json.loads(text))


class _Parser(argparse.ArgumentParser):
    def error(self, message: str):  # argparse defaults to exit status 2
        self.print_usage(sys.stderr)
        self.exit(EXIT_USAGE, f"{self.prog}: error: {message}\n")


def _int_arg(text: str) -> int:
    """Integer flag that also accepts scientific notation such as ``1e6``."""
    try:
        value = float(text)
    except ValueError:
        raise argparse.ArgumentTypeError(f"not a number: {text!r}") from None
    if not value.is_integer():
        raise argparse.ArgumentTypeError(f"not an integer: {text!r}")
    return int(value)


def _beta_arg(text: str) -> float | str:
    if text == "border":
        return text
    try:
        return float(text)
    except ValueError:
        raise argparse.ArgumentTypeError(f"beta must be a number or 'border', got {text!r}") from None


def _jsonable(value):
    if isinstance(value, dict):
        return {k: _jsonable(v) for k, v in value.items()}
    if isinstance(value, (list, tuple)):
        return [_jsonable(v) for v in value]
    if isinstance(value, (Protocol, AttackKind)):
        return value.value
    if isinstance(value, np.generic):
        return value.item()
    return value


def _fmt(x) -> str:
    # repr of a Python float is the shortest string that round-trips
    return repr(float(x)) if isinstance(x, (float, np.floating)) else str(x)


def _write_csv(path: str, header: list[str], rows) -> None:
    try:
        with open(path, "w", newline="", encoding="utf-8") as fh:
            writer = csv.writer(fh, lineterminator="\n")
            writer.writerow(header)
            for row in rows:
                writer.writerow([_fmt(v) for v in row])
    except OSError as exc:
        raise OSError(f"cannot write {path}: {exc}") from exc


def cmd_border(args) -> RunReport:
    res = border(args.protocol, args.n)
    results = {
        "protocol": res.protocol.value,
        "n": res.n,
        "d": res.d,
        "border_disturbance": res.border_disturbance,
        "residual": res.residual,
    }
    if res.per_qubit_pb is not None:
        results["per_qubit_pb"] = res.per_qubit_pb
    return RunReport("border", {"protocol": args.protocol, "n": args.n}, results)


def curve_rows(protocol: Protocol | str, n: int, samples: int) -> list[tuple[float, float, float]]:
    """Rows ``(disturbance, info_bob, info_eve)`` at evenly spaced cloner betas in [0, 1]."""
    protocol = Protocol(protocol)
    if samples < 2:
        raise ValidationError(f"samples must be >= 2, got {samples}")
    rows = []
    for beta in np.linspace(0.0, 1.0, samples):
        if protocol is Protocol.QUBIT_STRING:
            point = string_information(n, params_from_beta(beta))
            rows.append((point.disturbance, point.info_bob, point.info_eve))
        else:
            params = qudit_params_from_beta(n, beta)
            rows.append((qudit_disturbances(params)[0], *qudit_information(params)))
    return rows


def cmd_curves(args) -> RunReport:
    rows = curve_rows(args.protocol, args.n, args.samples)
    _write_csv(args.out, CURVES_HEADER, rows)
    params = {"protocol": args.protocol, "n": args.n, "samples": args.samples, "out": args.out}
    return RunReport("curves", params, {"rows": len(rows)})


def cmd_figure1(args) -> RunReport:
    rows = figure1_table(args.max_n)
    _write_csv(args.out, FIGURE1_HEADER, rows)
    return RunReport("figure1", {"max_n": args.max_n, "out": args.out}, {"rows": len(rows)})


def cmd_simulate(args) -> RunReport:
    if args.rounds > MAX_ROUNDS and not args.allow_large:
        raise UsageError(f"--rounds above {MAX_ROUNDS:.0e} needs --allow-large")
    kind = AttackKind(args.attack)
    beta = args.beta
    if kind is AttackKind.CLONER:
        if beta is None or beta == "border":
            beta = border_beta(args.protocol, args.n)
    elif beta is not None:
        raise UsageError("--beta only applies to --attack cloner")
    config = SessionConfig(
        protocol=Protocol(args.protocol),
        n=args.n,
        rounds=args.rounds,
        attack=Attack(kind, beta),
        seed=args.seed,
    )
    stats = run_session(config, shards=args.shards, max_workers=args.workers)
    predictions = analytic_predictions(config)
    params = {
        "protocol": config.protocol.value,
        "n": config.n,
        "rounds": config.rounds,
        "attack": kind.value,
        "beta": beta,
        "shards": args.shards,
    }
    results = {
        "stats": _jsonable(asdict(stats)),
        "analytic": predictions,
        "z_scores": z_scores(stats, predictions),
        "info_deviation": {
            "bob": None if stats.bob_info_empirical is None else stats.bob_info_empirical - predictions["bob_info"],
            "eve": None if stats.eve_info_empirical is None else stats.eve_info_empirical - predictions["eve_info"],
        },
    }
    return RunReport("simulate", params, _jsonable(results), seed=config.seed)


def cmd_rates(args) -> RunReport:
    rates = sifting_rates(args.n)
    results = {
        "n": rates.n,
        "qubit_sift_fraction": float(rates.qubit_sift_fraction),
        "qudit_sift_fraction": float(rates.qudit_sift_fraction),
        "qubit_sift_fraction_exact": str(rates.qubit_sift_fraction),
        "qudit_sift_fraction_exact": str(rates.qudit_sift_fraction),
        "qubits_per_sifted_dit": rates.qubits_per_sifted_dit,
    }
    return RunReport("rates", {"n": args.n}, results)


def build_parser() -> argparse.ArgumentParser:
    parser = _Parser(prog="dimcrypt", description=__doc__.splitlines()[0])
    parser.add_argument("--version", action="version", version=__version__)
    sub = parser.add_subparsers(dest="command", required=True, parser_class=_Parser)
    protocols = [p.value for p in Protocol]

    p = sub.add_parser("border", help="solve I_B = I_E and print the border disturbance")
    p.add_argument("--protocol", choices=protocols, required=True)
    p.add_argument("--n", type=_int_arg, required=True)
    p.set_defaults(func=cmd_border)

    p = sub.add_parser("curves", help="write Bob/Eve information curves as CSV")
    p.add_argument("--protocol", choices=protocols, required=True)
    p.add_argument("--n", type=_int_arg, required=True)
    p.add_argument("--samples", type=_int_arg, default=101)
    p.add_argument("--out", required=True)
    p.set_defaults(func=cmd_curves)

    p = sub.add_parser("figure1", help="write border disturbances for n = 1..max-n as CSV")
    p.add_argument("--max-n", dest="max_n", type=_int_arg, default=12)
    p.add_argument("--out", required=True)
    p.set_defaults(func=cmd_figure1)

    p = sub.add_parser("simulate", help="Monte Carlo session with analytic comparison")
    p.add_argument("--protocol", choices=protocols, required=True)
    p.add_argument("--n", type=_int_arg, required=True)
    p.add_argument("--rounds", type=_int_arg, default=10**6)
    p.add_argument("--attack", choices=[a.value for a in AttackKind], default="none")
    p.add_argument("--beta", type=_beta_arg, default=None, help="cloner amplitude, or 'border' (default)")
    p.add_argument("--seed", type=_int_arg, default=0)
    p.add_argument("--shards", type=_int_arg, default=1)
    p.add_argument("--workers", type=_int_arg, default=None)
    p.add_argument("--allow-large", action="store_true", help=f"permit more than {MAX_ROUNDS:.0e} rounds")
    p.set_defaults(func=cmd_simulate)

    p = sub.add_parser("rates", help="compare sifting fractions of both protocols")
    p.add_argument("--n", type=_int_arg, required=True)
    p.set_defaults(func=cmd_rates)
    return parser


def main(argv: list[str] | None = None) -> int:
    args = build_parser().parse_args(argv)
    try:
        report = args.func(args)
    except (UsageError, ValidationError) as exc:
        print(f"dimcrypt {args.command}: {exc}", file=sys.stderr)
        return EXIT_USAGE
    except (SolverError, DomainError, FloatingPointError) as exc:
        print(f"dimcrypt {args.command}: numeric failure: {exc}", file=sys.stderr)
        return EXIT_SOLVER
    except OSError as exc:
        print(f"dimcrypt {args.command}: {exc}", file=sys.stderr)
        return EXIT_IO
    if args.command in ("border", "simulate", "rates"):
        sys.stdout.write(report.to_json() + "\n")
    return EXIT_OK


if __name__ == "__main__":
    sys.exit(main())
