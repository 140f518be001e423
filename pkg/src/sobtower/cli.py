"""Config-driven command line front end.

Subcommands: ``norm`` (level norms as CSV), ``eval`` (orbit coordinates as
CSV), ``membership`` (tower location as key=value), ``check`` (invariant
suite).  Exit codes: 0 success / certified verdict, 1 failed checks,
2 configuration or usage errors, 3 inconclusive results.

Numbers are printed with 17 significant digits so every value round-trips
to the same double.
"""

from __future__ import annotations

import argparse
import re
import sys
from dataclasses import dataclass
from pathlib import Path

try:
    import tomllib
except ModuleNotFoundError:  # Python 3.10
    import tomli as tomllib

from .errors import (
    ConfigError,
    NotRepresentable,
    SobtowerError,
)
from .semigroup import DiagonalSemigroup
from .spaces import (
    ExplicitSpectrum,
    FiniteSupport,
    NormStatus,
    PowerLawSpectrum,
    Sequence,
    Spectrum,
    geom_decay,
    power_law,
    unit_vector,
)
from .tower import MembershipStatus, membership_level, tower_norm
from .limits import extrapolation_embed
from .verify import CheckSpec, default_check_spec, run_suite

EXIT_OK = 0
EXIT_FAIL = 1
EXIT_CONFIG = 2
EXIT_INCONCLUSIVE = 3


@dataclass(frozen=True)
class RunConfig:
    spectrum: Spectrum
    truncation: int = 100_000
    tolerance: float = 1e-12
    n_min: int = -5
    n_max: int = 5
    t_grid: tuple[float, ...] = (0.0, 0.1, 1.0, 10.0)
    h_grid: tuple[float, ...] = (1e-2, 5e-3, 2.5e-3, 1.25e-3, 6.25e-4)
    seed: int = 42


_KNOWN_KEYS = {
    "spectrum": {"kind", "a", "p", "b", "re", "im"},
    "numerics": {"truncation", "tolerance", "n_min", "n_max", "seed"},
    "grids": {"t_grid", "h_grid"},
}


def _reject_unknown(section: str, table: dict) -> None:
    for key in table:
        if key not in _KNOWN_KEYS[section]:
            raise ConfigError(f"unknown key '{key}' in section [{section}]")


def _build_spectrum(table: dict) -> Spectrum:
    _reject_unknown("spectrum", table)
    kind = table.get("kind")
    if kind is None:
        raise ConfigError("missing key 'kind' in section [spectrum]")
    if kind == "power_law":
        for required in ("a", "p"):
            if required not in table:
                raise ConfigError(f"missing key '{required}' in section [spectrum]")
        for forbidden in ("re", "im"):
            if forbidden in table:
                raise ConfigError(f"key '{forbidden}' is not valid for kind=power_law")
        return PowerLawSpectrum(
            float(table["a"]), float(table["p"]), float(table.get("b", 0.0))
        )
    if kind == "explicit":
        if "re" not in table:
            raise ConfigError("missing key 're' in section [spectrum]")
        for forbidden in ("a", "p", "b"):
            if forbidden in table:
                raise ConfigError(f"key '{forbidden}' is not valid for kind=explicit")
        res = [float(v) for v in table["re"]]
        ims = [float(v) for v in table.get("im", [0.0] * len(res))]
        if len(ims) != len(res):
            raise ConfigError("'re' and 'im' must have equal length in [spectrum]")
        return ExplicitSpectrum(tuple(complex(r, i) for r, i in zip(res, ims)))
    raise ConfigError(f"unknown spectrum kind '{kind}' (expected power_law or explicit)")


def parse_config(path: str | Path) -> RunConfig:
    """Load and validate a TOML run configuration (strict: unknown keys are
    rejected)."""
    path = Path(path)
    if not path.is_file():
        raise ConfigError(f"config file not found: {path}")
    try:
        with path.open("rb") as fh:
            data = tomllib.load(fh)
    except tomllib.TOMLDecodeError as exc:
        raise ConfigError(f"malformed config: {exc}") from exc
    for section in data:
        if section not in _KNOWN_KEYS:
            raise ConfigError(f"unknown section [{section}]")
    if "spectrum" not in data:
        raise ConfigError("missing required section [spectrum]")

    spectrum = _build_spectrum(data["spectrum"])

    numerics = data.get("numerics", {})
    _reject_unknown("numerics", numerics)
    truncation = int(numerics.get("truncation", 100_000))
    tolerance = float(numerics.get("tolerance", 1e-12))
    n_min = int(numerics.get("n_min", -5))
    n_max = int(numerics.get("n_max", 5))
    seed = int(numerics.get("seed", 42))
    if truncation < 1:
        raise ConfigError("'truncation' must be a positive integer")
    if not tolerance > 0:
        raise ConfigError("'tolerance' must be positive")
    if n_min > 0 or n_max < 0 or n_min > n_max:
        raise ConfigError("level range must satisfy n_min <= 0 <= n_max")
    if seed < 0:
        raise ConfigError("'seed' must be nonnegative")

    grids = data.get("grids", {})
    _reject_unknown("grids", grids)
    t_grid = tuple(float(t) for t in grids.get("t_grid", (0.0, 0.1, 1.0, 10.0)))
    h_grid = tuple(
        float(h) for h in grids.get("h_grid", (1e-2, 5e-3, 2.5e-3, 1.25e-3, 6.25e-4))
    )
    if not t_grid or any(t < 0 for t in t_grid):
        raise ConfigError("'t_grid' must be nonempty with nonnegative entries")
    if not h_grid or any(h <= 0 for h in h_grid):
        raise ConfigError("'h_grid' must be nonempty with positive entries")

    return RunConfig(
        spectrum=spectrum,
        truncation=truncation,
        tolerance=tolerance,
        n_min=n_min,
        n_max=n_max,
        t_grid=t_grid,
        h_grid=h_grid,
        seed=seed,
    )


# ---------------------------------------------------------------------------
# Vector literals
# ---------------------------------------------------------------------------

_NUMBER = r"[+-]?(?:\d+(?:\.\d*)?|\.\d+)(?:[eE][+-]?\d+)?"
_COMPLEX_RE = re.compile(
    rf"^(?P<re>{_NUMBER})(?:(?P<im>[+-](?:\d+(?:\.\d*)?|\.\d+)(?:[eE][+-]?\d+)?)i)?$"
)


def _parse_complex(text: str) -> complex:
    m = _COMPLEX_RE.match(text)
    if not m:
        raise ConfigError(f"bad complex literal '{text}' (expected <re>[+<im>i])")
    return complex(float(m.group("re")), float(m.group("im") or 0.0))


def parse_vector(literal: str) -> Sequence:
    """Grammar: e<j> | fin:<j>=<re>[+<im>i][,...] | pow:c=<re>,s=<re> |
    geom:c=<re>,r=<re>."""
    try:
        if re.fullmatch(r"e\d+", literal):
            return unit_vector(int(literal[1:]))
        if literal.startswith("fin:"):
            body = literal[4:]
            values: dict[int, complex] = {}
            if body:
                for item in body.split(","):
                    if "=" not in item:
                        raise ConfigError(f"bad finite-support entry '{item}'")
                    j_text, v_text = item.split("=", 1)
                    j = int(j_text)
                    if j in values:
                        raise ConfigError(f"duplicate index {j} in vector literal")
                    values[j] = _parse_complex(v_text)
            return FiniteSupport.from_mapping(values)
        if literal.startswith("pow:"):
            params = _parse_params(literal[4:], {"c", "s"})
            return power_law(params["c"], params["s"].real)
        if literal.startswith("geom:"):
            params = _parse_params(literal[5:], {"c", "r"})
            return geom_decay(params["c"], params["r"].real)
    except (ValueError, SobtowerError) as exc:
        raise ConfigError(f"bad vector literal '{literal}': {exc}") from exc
    raise ConfigError(f"bad vector literal '{literal}'")


def _parse_params(body: str, expected: set[str]) -> dict[str, complex]:
    params: dict[str, complex] = {}
    for item in body.split(","):
        if "=" not in item:
            raise ConfigError(f"bad parameter '{item}'")
        key, value = item.split("=", 1)
        if key not in expected or key in params:
            raise ConfigError(f"unexpected parameter '{key}'")
        params[key] = _parse_complex(value)
    missing = expected - params.keys()
    if missing:
        raise ConfigError(f"missing parameter(s) {sorted(missing)}")
    return params


def _parse_levels(text: str) -> tuple[int, int]:
    m = re.fullmatch(r"(-?\d+)\.\.(-?\d+)", text)
    if not m:
        raise ConfigError(f"bad level range '{text}' (expected <a>..<b>)")
    a, b = int(m.group(1)), int(m.group(2))
    if a > b:
        raise ConfigError(f"empty level range '{text}'")
    return a, b


def _fmt(value: float) -> str:
    return format(value, ".17g")


# ---------------------------------------------------------------------------
# Subcommands
# ---------------------------------------------------------------------------


def _cmd_norm(config: RunConfig, args) -> int:
    sg = DiagonalSemigroup(config.spectrum)
    x = parse_vector(args.vector)
    lo, hi = (
        _parse_levels(args.levels)
        if args.levels
        else (config.n_min, config.n_max)
    )
    print("level,norm,status")
    for n in range(lo, hi + 1):
        res = tower_norm(sg, n, x, trunc=config.truncation, tol=config.tolerance)
        value = _fmt(res.value) if res.status is NormStatus.OK else ""
        print(f"{n},{value},{res.status.value}")
    return EXIT_OK


def _cmd_eval(config: RunConfig, args) -> int:
    if args.t < 0:
        raise ConfigError(f"t = {args.t} must be nonnegative")
    sg = DiagonalSemigroup(config.spectrum)
    x = parse_vector(args.vector)
    y = sg.apply(args.t, x)
    print("j,re,im")
    if isinstance(y, FiniteSupport):
        indices = list(y.support)
    else:
        size = config.spectrum.size
        top = config.truncation if size is None else min(config.truncation, size)
        indices = list(range(1, top + 1))
    for j in indices:
        v = y.coefficient(j)
        print(f"{j},{_fmt(v.real)},{_fmt(v.imag)}")
    return EXIT_OK


def _cmd_membership(config: RunConfig, args) -> int:
    sg = DiagonalSemigroup(config.spectrum)
    x = parse_vector(args.vector)
    verdict = membership_level(sg, x, n_min=config.n_min, n_max=config.n_max)
    method = verdict.evidence.method
    if verdict.status is MembershipStatus.MEMBER_ALL_LEVELS:
        print(f"status=member_all_levels max_level=all method={method}")
        return EXIT_OK
    if verdict.status is MembershipStatus.MEMBER_UP_TO:
        print(f"status=member_up_to max_level={verdict.max_level} method={method}")
        return EXIT_OK
    if verdict.status is MembershipStatus.NOT_MEMBER:
        try:
            extrapolation_embed(sg, x, n_min=config.n_min, n_max=config.n_max)
        except NotRepresentable:
            print(f"status=not_representable max_level=none method={method}")
            return EXIT_OK
        print(f"status=not_member max_level=none method={method}")
        return EXIT_OK
    print(f"status=inconclusive max_level=none method={method}")
    return EXIT_INCONCLUSIVE


def _cmd_check(config: RunConfig, args) -> int:
    sg = DiagonalSemigroup(config.spectrum)
    seed = config.seed if args.seed is None else args.seed
    base = default_check_spec(seed=seed)
    spec = CheckSpec(
        name="sobtower-invariants",
        levels=(config.n_min, config.n_max),
        t_grid=config.t_grid,
        h_grid=config.h_grid,
        vector_family=base.vector_family,
        tol=config.tolerance,
        seed=seed,
    )
    report = run_suite(sg, spec)
    text = report.to_text()
    sys.stdout.write(text)
    if args.out:
        Path(args.out).write_text(text, encoding="utf-8", newline="\n")
    if report.any_fail:
        return EXIT_FAIL
    if not report.overall_pass:
        return EXIT_INCONCLUSIVE
    return EXIT_OK


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="sobtower",
        description="Sobolev towers for diagonal semigroups on weighted l2 spaces",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    def add_common(p: argparse.ArgumentParser) -> None:
        p.add_argument("--config", required=True, help="path to the TOML run config")

    p_norm = sub.add_parser("norm", help="level norms of a vector as CSV")
    add_common(p_norm)
    p_norm.add_argument("--vector", required=True)
    p_norm.add_argument("--levels", help="level range a..b (default: config window)")

    p_eval = sub.add_parser("eval", help="orbit coordinates T(t)x as CSV")
    add_common(p_eval)
    p_eval.add_argument("--vector", required=True)
    p_eval.add_argument("--t", type=float, required=True)

    p_mem = sub.add_parser("membership", help="locate a vector in the tower")
    add_common(p_mem)
    p_mem.add_argument("--vector", required=True)

    p_check = sub.add_parser("check", help="run the invariant suite")
    add_common(p_check)
    p_check.add_argument("--out", help="write the machine-readable report here")
    p_check.add_argument("--seed", type=int, help="override the config seed")

    return parser


_DISPATCH = {
    "norm": _cmd_norm,
    "eval": _cmd_eval,
    "membership": _cmd_membership,
    "check": _cmd_check,
}


def main(argv: list[str] | None = None) -> int:
    if argv is None:
        argv = sys.argv[1:]
    # Join "--levels -2..2" so argparse does not read the value as a flag.
    joined: list[str] = []
    skip = False
    for i, arg in enumerate(argv):
        if skip:
            skip = False
            continue
        if arg == "--levels" and i + 1 < len(argv):
            joined.append(f"--levels={argv[i + 1]}")
            skip = True
        else:
            joined.append(arg)
    parser = build_parser()
    args = parser.parse_args(joined)
    try:
        config = parse_config(args.config)
        return _DISPATCH[args.command](config, args)
    except SobtowerError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_CONFIG


if __name__ == "__main__":
    sys.exit(main())
