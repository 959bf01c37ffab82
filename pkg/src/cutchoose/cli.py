"""Command-line front end: analyses, simulations, sweeps, JSON/CSV reports.

Commands: diet, classify, solve, feasible, simulate, sweep,
verify-uniqueness, election. Strategy inputs accept exact fractions ("1/3")
as well as decimals; fractions are parsed as rationals and converted to float
once, so the central value 1/3 is represented faithfully. Reports are JSON
(canonical) or CSV (sweep), with the schema documented in the README.

Exit codes: 0 success (an infeasible verdict is a successful answer),
2 invalid configuration, 3 failed check (verify-uniqueness), 4 I/O error.
"""

from __future__ import annotations

import argparse
import csv
import io
import json
import os
import sys
from dataclasses import dataclass, fields
from fractions import Fraction
from typing import Any, Sequence

import numpy as np

from . import __version__
from .diet import diet_profile, fairness_residual
from .election import to_election_report
from .errors import CutChooseError
from .simulate import GENERATOR_NAME, simulate
from .solver import (
    GridSearchConfig,
    residual_system,
    solve_chooser_given_cutter,
    solve_joint,
    verify_uniqueness,
)
from .strategies import (
    ChooserStrategy,
    CutterStrategy,
    PreferenceClass,
    PreferenceRelation,
    TParams,
    classify_preferences,
    from_t_params,
    make_chooser,
    make_cutter,
    symmetric_chooser,
)

SEED_ENV_VAR = "CUT_CHOOSE_SEED"

_NEAR_UNIFORM_WARN = 1e-9

EXIT_OK = 0
EXIT_CONFIG = 2
EXIT_CHECK = 3
EXIT_IO = 4


class ConfigInvalid(CutChooseError):
    """The run configuration cannot be executed."""


class CheckFailed(CutChooseError):
    """A verification command found a violation."""


@dataclass
class RunConfig:
    """One command invocation; field names mirror the CLI flags and config file keys."""

    command: str
    cutter: tuple[float, float, float] | None = None
    chooser: tuple[float, float, float] | None = None  # (c10, c01, c12)
    t: tuple[float, float, float] | None = None
    labels: tuple[str, str, str] | None = None
    n_rounds: int | None = None
    seed: int = 0
    eps: float = 0.0
    tolerance: float = 1e-9
    tol: float = 1e-9
    simplex_step: float = 1.0 / 24.0
    t_step: float = 0.1
    residual_tol: float = 1e-9
    family_tol: float = 1e-9
    t_range: tuple[float, float, float] | None = None
    format: str | None = None
    out: str | None = None


def _parse_number(token: str) -> float:
    text = str(token).strip()
    try:
        if "/" in text:
            return float(Fraction(text))
        return float(text)
    except (ValueError, ZeroDivisionError) as exc:
        raise ConfigInvalid(f"cannot parse number {token!r}") from exc


def _parse_triple(text: str, what: str) -> tuple[float, float, float]:
    parts = [p for p in str(text).split(",")]
    if len(parts) != 3:
        raise ConfigInvalid(f"{what} needs three comma-separated values, got {text!r}")
    a, b, c = (_parse_number(p) for p in parts)
    return (a, b, c)


def _parse_t_range(text: str) -> tuple[float, float, float]:
    parts = str(text).split(":")
    if len(parts) != 3:
        raise ConfigInvalid(f"t range must look like lo:hi:step, got {text!r}")
    lo, hi, step = (_parse_number(p) for p in parts)
    if step <= 0 or hi < lo:
        raise ConfigInvalid(f"t range must satisfy lo <= hi and step > 0, got {text!r}")
    return (lo, hi, step)


def _build_cutter(config: RunConfig) -> CutterStrategy:
    if config.cutter is None:
        raise ConfigInvalid(f"command {config.command!r} requires --cutter")
    cutter = make_cutter(*config.cutter)
    deviation = max(abs(x - 1.0 / 3.0) for x in cutter.p)
    if 0.0 < deviation < _NEAR_UNIFORM_WARN:
        print(
            f"warning: cutter is within {deviation:.3g} of uniform but not exactly "
            "uniform; fairness is infeasible by less than 1e-9. Pass --cutter "
            "1/3,1/3,1/3 for the exact point.",
            file=sys.stderr,
        )
    return cutter


def _build_chooser(config: RunConfig) -> ChooserStrategy:
    if (config.chooser is None) == (config.t is None):
        raise ConfigInvalid(
            f"command {config.command!r} requires exactly one chooser "
            "specification: --chooser c10,c01,c12 or --t t0,t1,t2"
        )
    if config.chooser is not None:
        return make_chooser(*config.chooser)
    return from_t_params(TParams(*config.t))  # type: ignore[misc]


def _relation_dict(relation: PreferenceRelation) -> dict[str, Any]:
    return {
        "eps": relation.eps,
        "verdicts": [
            {
                "pair": [a, b],
                "verdict": relation.verdicts[i].value,
                "winner": relation.winner(i),
            }
            for i, (a, b) in enumerate(((0, 1), (1, 2), (0, 2)))
        ],
    }


def _class_dict(preference_class: PreferenceClass) -> dict[str, Any]:
    return {
        "kind": preference_class.kind.value,
        "order": list(preference_class.order) if preference_class.order else None,
    }


def _class_label(preference_class: PreferenceClass) -> str:
    if preference_class.order is not None:
        return preference_class.kind.value + ":" + ">".join(
            str(f) for f in preference_class.order
        )
    return preference_class.kind.value


def _chooser_dict(chooser: ChooserStrategy) -> dict[str, float]:
    return {f"c{k}{j}": v for (k, j), v in sorted(chooser.as_table().items())}


def _run_diet(config: RunConfig) -> tuple[int, dict[str, Any]]:
    cutter = _build_cutter(config)
    chooser = _build_chooser(config)
    profile = diet_profile(cutter, chooser)
    report = fairness_residual(profile, config.tolerance)
    return EXIT_OK, {
        "lambda": list(profile.lam),
        "omega": list(profile.omega),
        "lambda_residuals": list(report.lambda_residuals),
        "omega_residuals": list(report.omega_residuals),
        "max_abs_residual": report.max_abs_residual,
        "tolerance": report.tolerance,
        "is_fair": report.is_fair,
    }


def _run_classify(config: RunConfig) -> tuple[int, dict[str, Any]]:
    chooser = _build_chooser(config)
    relation, preference_class = classify_preferences(chooser, config.eps)
    return EXIT_OK, {
        "chooser": _chooser_dict(chooser),
        "relation": _relation_dict(relation),
        "classification": _class_dict(preference_class),
    }


def _run_solve(config: RunConfig) -> tuple[int, dict[str, Any]]:
    family = solve_joint()
    worst = max(
        residual_system(family.cutter, TParams(t, t, t)).max_abs
        for t in np.linspace(-1.0, 1.0, 21)
    )
    return EXIT_OK, {
        "cutter": list(family.cutter.p),
        "t_range": list(family.t_range),
        "description": family.description,
        "self_check": {"n_samples": 21, "max_abs_residual": worst},
    }


def _run_feasible(config: RunConfig) -> tuple[int, dict[str, Any]]:
    cutter = _build_cutter(config)
    result = solve_chooser_given_cutter(cutter, config.tol)
    payload: dict[str, Any] = {"feasible": result.feasible, "tol": config.tol}
    if result.feasible:
        assert result.family is not None
        payload["family"] = {
            "cutter": list(result.family.cutter.p),
            "t_range": list(result.family.t_range),
            "description": result.family.description,
        }
    else:
        payload["certificate"] = result.certificate
        payload["witness_food"] = result.witness_food
        payload["witness_pair_sum"] = result.witness_pair_sum
    return EXIT_OK, payload


def _run_simulate(config: RunConfig) -> tuple[int, dict[str, Any]]:
    cutter = _build_cutter(config)
    chooser = _build_chooser(config)
    if config.n_rounds is None:
        raise ConfigInvalid("command 'simulate' requires --rounds")
    result = simulate(cutter, chooser, config.n_rounds, config.seed)
    return EXIT_OK, {
        "n_rounds": result.n_rounds,
        "seed": result.seed,
        "generator": result.generator,
        "counts_lambda": list(result.counts_lambda),
        "counts_omega": list(result.counts_omega),
        "counts_rejected": list(result.counts_rejected),
        "empirical_lambda": list(result.empirical_lambda),
        "empirical_omega": list(result.empirical_omega),
    }


def _sweep_values(config: RunConfig) -> list[float]:
    if config.t_range is None:
        raise ConfigInvalid("command 'sweep' requires --t-range lo:hi:step")
    lo, hi, step = config.t_range
    count = int(np.floor((hi - lo) / step + 1e-9)) + 1
    values = [lo + i * step for i in range(count)]
    return [min(max(v, -1.0), 1.0) for v in values]


def _sweep_rows(config: RunConfig) -> list[dict[str, Any]]:
    cutter = make_cutter(*config.cutter) if config.cutter else make_cutter(
        1.0 / 3.0, 1.0 / 3.0, 1.0 / 3.0
    )
    rows = []
    for t in _sweep_values(config):
        chooser = symmetric_chooser(t)
        _, preference_class = classify_preferences(chooser, config.eps)
        report = fairness_residual(diet_profile(cutter, chooser), config.tolerance)
        rows.append(
            {
                "t": t,
                "preference_class": _class_label(preference_class),
                "lambda_residuals": list(report.lambda_residuals),
                "omega_residuals": list(report.omega_residuals),
            }
        )
    return rows


SWEEP_CSV_COLUMNS = [
    "t",
    "preference_class",
    "lambda_residual_0",
    "lambda_residual_1",
    "lambda_residual_2",
    "omega_residual_0",
    "omega_residual_1",
    "omega_residual_2",
]


def _sweep_csv(rows: list[dict[str, Any]]) -> str:
    buffer = io.StringIO()
    writer = csv.writer(buffer, lineterminator="\n")
    writer.writerow(SWEEP_CSV_COLUMNS)
    for row in rows:
        writer.writerow(
            [f"{row['t']:.17g}", row["preference_class"]]
            + [f"{x:.17g}" for x in row["lambda_residuals"]]
            + [f"{x:.17g}" for x in row["omega_residuals"]]
        )
    return buffer.getvalue()


def _run_verify_uniqueness(config: RunConfig) -> tuple[int, dict[str, Any]]:
    grid = GridSearchConfig(
        simplex_step=config.simplex_step,
        t_step=config.t_step,
        residual_tol=config.residual_tol,
    )
    report = verify_uniqueness(grid, config.family_tol)
    worst = None
    if report.worst_offender is not None:
        worst = {
            "cutter": list(report.worst_offender.cutter.p),
            "t": list(report.worst_offender.t_params.t),
            "max_abs_residual": report.worst_offender.max_abs_residual,
        }
    payload = {
        "passed": report.passed,
        "no_hits": report.no_hits,
        "n_hits": report.n_hits,
        "n_offenders": report.n_offenders,
        "worst_distance": report.worst_distance,
        "worst_offender": worst,
        "family_tol": report.family_tol,
        "grid": {
            "simplex_step": grid.simplex_step,
            "t_step": grid.t_step,
            "residual_tol": grid.residual_tol,
        },
    }
    return (EXIT_OK if report.passed else EXIT_CHECK), payload


def _run_election(config: RunConfig) -> tuple[int, dict[str, Any]]:
    cutter = _build_cutter(config)
    chooser = _build_chooser(config)
    labels = config.labels if config.labels is not None else ("A", "B", "C")
    report = to_election_report(cutter, chooser, labels)
    return EXIT_OK, {
        "labels": list(report.labels),
        "phase1_elimination_dist": list(report.phase1_elimination_dist),
        "phase2_winner_dist": list(report.phase2_winner_dist),
        "phase2_loser_dist": list(report.phase2_loser_dist),
        "preference_class": _class_dict(report.preference_class),
    }


_RUNNERS = {
    "diet": _run_diet,
    "classify": _run_classify,
    "solve": _run_solve,
    "feasible": _run_feasible,
    "simulate": _run_simulate,
    "verify-uniqueness": _run_verify_uniqueness,
    "election": _run_election,
}


_RELEVANT_FIELDS = {
    "diet": ("cutter", "chooser", "t", "tolerance"),
    "classify": ("chooser", "t", "eps"),
    "solve": (),
    "feasible": ("cutter", "tol"),
    "simulate": ("cutter", "chooser", "t", "n_rounds", "seed"),
    "sweep": ("cutter", "t_range", "eps", "tolerance"),
    "verify-uniqueness": ("simplex_step", "t_step", "residual_tol", "family_tol"),
    "election": ("cutter", "chooser", "t", "labels"),
}


def _inputs_dict(config: RunConfig) -> dict[str, Any]:
    payload = {}
    for name in _RELEVANT_FIELDS.get(config.command, ()):
        value = getattr(config, name)
        if value is None:
            continue
        payload[name] = list(value) if isinstance(value, tuple) else value
    return payload


def run(config: RunConfig) -> tuple[int, str]:
    """Execute one command and return (exit status, serialized report)."""
    if config.command not in _RUNNERS and config.command != "sweep":
        raise ConfigInvalid(f"unknown command {config.command!r}")
    fmt = config.format or ("csv" if config.command == "sweep" else "json")
    if fmt not in ("json", "csv"):
        raise ConfigInvalid(f"unknown format {config.format!r}")
    if fmt == "csv" and config.command != "sweep":
        raise ConfigInvalid("csv output is only available for the sweep command")

    try:
        if config.command == "sweep":
            rows = _sweep_rows(config)
            if fmt == "csv":
                return EXIT_OK, _sweep_csv(rows)
            status, results = EXIT_OK, {"rows": rows}
        else:
            status, results = _RUNNERS[config.command](config)
    except ConfigInvalid:
        raise
    except CutChooseError as exc:
        raise ConfigInvalid(str(exc)) from exc

    report = {
        "command": config.command,
        "inputs": _inputs_dict(config),
        "results": results,
        "versions": {
            "artifact": __version__,
            "generator": f"{GENERATOR_NAME} (numpy {np.__version__})",
        },
    }
    return status, json.dumps(report, indent=2) + "\n"


def _add_cutter_flag(parser: argparse.ArgumentParser) -> None:
    parser.add_argument(
        "--cutter",
        metavar="P0,P1,P2",
        help="cutter rejection probabilities; fractions like 1/3 allowed",
    )


def _add_chooser_flags(parser: argparse.ArgumentParser) -> None:
    parser.add_argument(
        "--chooser",
        metavar="C10,C01,C12",
        help="chooser conditionals c[1|0],c[0|1],c[1|2] (complements derived)",
    )
    parser.add_argument(
        "--t",
        metavar="T0,T1,T2",
        help="chooser t-parameters in [-1,1]; exclusive with --chooser",
    )


def _add_common_flags(parser: argparse.ArgumentParser) -> None:
    parser.add_argument("--config", metavar="PATH", help="JSON file with RunConfig fields")
    parser.add_argument("--format", choices=("json", "csv"), help="report format")
    parser.add_argument("--out", metavar="PATH", help="write the report to a file")


def _build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="cutchoose",
        description="Analyze and simulate the three-goods cut-and-choose game.",
    )
    parser.add_argument("--version", action="version", version=f"%(prog)s {__version__}")
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("diet", help="exact diet frequencies and fairness residuals")
    _add_cutter_flag(p)
    _add_chooser_flags(p)
    p.add_argument("--tolerance", help="fairness tolerance (default 1e-9)")
    _add_common_flags(p)

    p = sub.add_parser("classify", help="preference relation and cycle classification")
    _add_chooser_flags(p)
    p.add_argument("--eps", help="tie tolerance in [0,1) (default 0)")
    _add_common_flags(p)

    p = sub.add_parser("solve", help="closed-form joint fairness solution family")
    _add_common_flags(p)

    p = sub.add_parser("feasible", help="fairness feasibility for a fixed cutter")
    _add_cutter_flag(p)
    p.add_argument("--tol", help="allowed cutter distance from uniform (default 1e-9)")
    _add_common_flags(p)

    p = sub.add_parser("simulate", help="seeded Monte Carlo play")
    _add_cutter_flag(p)
    _add_chooser_flags(p)
    p.add_argument("-n", "--rounds", dest="n_rounds", help="number of rounds")
    p.add_argument("--seed", help=f"64-bit seed (default: ${SEED_ENV_VAR} or 0)")
    _add_common_flags(p)

    p = sub.add_parser("sweep", help="sweep the symmetric chooser family over t")
    _add_cutter_flag(p)
    p.add_argument("--t-range", dest="t_range", metavar="LO:HI:STEP", help="sweep grid")
    p.add_argument("--eps", help="tie tolerance for classification (default 0)")
    p.add_argument("--tolerance", help="fairness tolerance (default 1e-9)")
    _add_common_flags(p)

    p = sub.add_parser(
        "verify-uniqueness", help="brute-force check that only the family is fair"
    )
    p.add_argument("--simplex-step", dest="simplex_step", help="cutter grid spacing")
    p.add_argument("--t-step", dest="t_step", help="t grid spacing per axis")
    p.add_argument("--residual-tol", dest="residual_tol", help="hit tolerance")
    p.add_argument("--family-tol", dest="family_tol", help="distance-to-family tolerance")
    _add_common_flags(p)

    p = sub.add_parser("election", help="two-phase election view of a strategy pair")
    _add_cutter_flag(p)
    _add_chooser_flags(p)
    p.add_argument("--labels", metavar="A,B,C", help="three distinct candidate labels")
    _add_common_flags(p)

    return parser


_TRIPLE_FIELDS = {"cutter", "chooser", "t"}
_NUMBER_FIELDS = {
    "eps",
    "tolerance",
    "tol",
    "simplex_step",
    "t_step",
    "residual_tol",
    "family_tol",
}


def _coerce_field(name: str, value: Any) -> Any:
    if value is None:
        return None
    if name in _TRIPLE_FIELDS:
        if isinstance(value, str):
            return _parse_triple(value, name)
        triple = tuple(float(x) for x in value)
        if len(triple) != 3:
            raise ConfigInvalid(f"{name} needs three values, got {value!r}")
        return triple
    if name == "t_range":
        if isinstance(value, str):
            return _parse_t_range(value)
        lo, hi, step = (float(x) for x in value)
        return (lo, hi, step)
    if name == "labels":
        parts = value.split(",") if isinstance(value, str) else list(value)
        if len(parts) != 3:
            raise ConfigInvalid(f"labels need three values, got {value!r}")
        return tuple(str(x) for x in parts)
    if name in _NUMBER_FIELDS:
        return _parse_number(value) if isinstance(value, str) else float(value)
    if name == "n_rounds":
        try:
            return int(value)
        except (TypeError, ValueError) as exc:
            raise ConfigInvalid(f"n_rounds must be an integer, got {value!r}") from exc
    if name == "seed":
        try:
            return int(value)
        except (TypeError, ValueError) as exc:
            raise ConfigInvalid(f"seed must be an integer, got {value!r}") from exc
    return value


def _load_config_file(path: str) -> dict[str, Any]:
    try:
        with open(path, encoding="utf-8") as handle:
            data = json.load(handle)
    except OSError as exc:
        raise ConfigInvalid(f"cannot read config file {path!r}: {exc}") from exc
    except json.JSONDecodeError as exc:
        raise ConfigInvalid(f"config file {path!r} is not valid JSON: {exc}") from exc
    if not isinstance(data, dict):
        raise ConfigInvalid(f"config file {path!r} must hold a JSON object")
    known = {f.name for f in fields(RunConfig)}
    unknown = set(data) - known
    if unknown:
        raise ConfigInvalid(f"unknown config fields: {sorted(unknown)}")
    return data


def build_config(args: argparse.Namespace) -> RunConfig:
    """Merge CLI flags, config file, environment, and defaults into a RunConfig."""
    file_values: dict[str, Any] = {}
    if getattr(args, "config", None):
        file_values = _load_config_file(args.config)
        if "command" in file_values and file_values["command"] != args.command:
            raise ConfigInvalid(
                f"config file names command {file_values['command']!r} but "
                f"{args.command!r} was invoked"
            )
        file_values.pop("command", None)

    merged: dict[str, Any] = dict(file_values)
    # The env var stands in for an absent --seed flag, beating config files.
    if getattr(args, "seed", None) is None and os.environ.get(SEED_ENV_VAR):
        merged["seed"] = os.environ[SEED_ENV_VAR]
    for key, value in vars(args).items():
        if key in ("config", "command") or value is None:
            continue
        merged[key] = value

    config_kwargs: dict[str, Any] = {"command": args.command}
    known = {f.name for f in fields(RunConfig)}
    for key, value in merged.items():
        if key not in known:
            raise ConfigInvalid(f"unknown config field {key!r}")
        config_kwargs[key] = _coerce_field(key, value)
    return RunConfig(**config_kwargs)


# Flags whose values may start with a minus sign; argparse would otherwise
# read "--t-range -1:1:0.1" as a flag followed by an unknown option.
_MERGE_FLAGS = ("--t-range", "--t")


def _merge_dash_values(argv: list[str]) -> list[str]:
    merged = []
    i = 0
    while i < len(argv):
        token = argv[i]
        nxt = argv[i + 1] if i + 1 < len(argv) else None
        if token in _MERGE_FLAGS and nxt is not None and nxt.startswith("-"):
            merged.append(f"{token}={nxt}")
            i += 2
        else:
            merged.append(token)
            i += 1
    return merged


def main(argv: Sequence[str] | None = None) -> int:
    parser = _build_parser()
    args = parser.parse_args(_merge_dash_values(list(argv if argv is not None else sys.argv[1:])))
    try:
        config = build_config(args)
        status, text = run(config)
    except ConfigInvalid as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_CONFIG
    except CheckFailed as exc:
        print(f"check failed: {exc}", file=sys.stderr)
        return EXIT_CHECK

    try:
        if config.out:
            with open(config.out, "w", encoding="utf-8", newline="") as handle:
                handle.write(text)
        else:
            sys.stdout.write(text)
    except OSError as exc:
        print(f"i/o error: {exc}", file=sys.stderr)
        return EXIT_IO
    return status


if __name__ == "__main__":
    sys.exit(main())
