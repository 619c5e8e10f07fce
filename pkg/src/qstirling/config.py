"""Run configuration: TOML schema, validation, bundled presets.

A run is described by a single TOML file with a schema_version field.
Unknown keys are rejected so a typo in a physics parameter cannot silently
fall back to a default.  Temperatures may be given either as inverse
temperatures (beta_hot / beta_cold) or as plain temperatures (temp_hot /
temp_cold); internally everything is beta.

Presets matching the bundled study parameters ship inside the package and
are addressed by name (see list_presets()).
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from importlib import resources

try:
    import tomllib
except ModuleNotFoundError:  # python < 3.11
    import tomli as tomllib

from .convergence import CutoffPolicy
from .hamiltonians import Model, ModelParams

SCHEMA_VERSION = 1

COMMANDS = ("spectrum", "cycle", "sweep", "meanfield", "toy", "converge-cutoff")


class ConfigError(ValueError):
    """Malformed or self-inconsistent run configuration."""


@dataclass(frozen=True)
class GridSpec:
    """Inclusive arithmetic grid start, start+step, ..., up to stop."""

    start: float
    stop: float
    step: float

    def __post_init__(self) -> None:
        if self.step <= 0:
            raise ConfigError(f"grid step must be positive, got {self.step!r}")
        if self.stop < self.start:
            raise ConfigError(f"grid stop {self.stop!r} below start {self.start!r}")

    def values(self) -> list[float]:
        count = int(math.floor((self.stop - self.start) / self.step + 1e-9)) + 1
        return [self.start + self.step * i for i in range(count)]


@dataclass(frozen=True)
class RunConfig:
    """Validated content of one configuration file."""

    command: str
    model: str  # "lmg" | "dicke" | "toy"
    omega0: float | None = None
    omega: float | None = None
    gamma: float | None = None
    gamma_grid: GridSpec | None = None
    n_list: tuple[int, ...] = ()
    lambda1: float | None = None
    lambda2: float | None = None
    lambda2_grid: GridSpec | None = None
    lambda_grid: GridSpec | None = None
    beta_hot: float | None = None
    beta_cold: float | None = None
    cutoff_fixed: int | None = None
    cutoff_policy: CutoffPolicy | None = None
    workers: int | None = None
    output: str | None = None
    format: str | None = None

    def model_enum(self) -> Model:
        if self.model == "lmg":
            return Model.LMG
        if self.model == "dicke":
            return Model.DICKE
        raise ConfigError(f"model {self.model!r} has no Hamiltonian")

    def gammas(self) -> list[float]:
        if self.gamma_grid is not None:
            return self.gamma_grid.values()
        return [self.gamma]

    def base_params(self, n_particles: int, gamma: float, cutoff: int | None = None) -> ModelParams:
        """ModelParams at coupling zero; sweeps fill the coupling in."""
        model = self.model_enum()
        return ModelParams(
            model=model,
            n_particles=n_particles,
            omega0=self.omega0,
            gamma=gamma,
            coupling=0.0,
            omega=self.omega if model is Model.DICKE else None,
            boson_cutoff=cutoff if model is Model.DICKE else None,
        )


_TOP_LEVEL_KEYS = {
    "schema_version",
    "command",
    "model",
    "omega0",
    "omega",
    "gamma",
    "n_list",
    "lambda1",
    "lambda2",
    "beta_hot",
    "beta_cold",
    "temp_hot",
    "temp_cold",
    "workers",
    "output",
    "format",
    "lambda2_grid",
    "gamma_grid",
    "lambda_grid",
    "cutoff",
}

_GRID_KEYS = {"min", "max", "step"}
_CUTOFF_KEYS = {"fixed", "initial", "growth", "tolerance", "max"}


def _require_number(data: dict, key: str) -> float:
    value = data[key]
    if isinstance(value, bool) or not isinstance(value, (int, float)):
        raise ConfigError(f"{key} must be a number, got {value!r}")
    return float(value)


def _parse_grid(data: object, name: str) -> GridSpec:
    if not isinstance(data, dict):
        raise ConfigError(f"{name} must be a table with min/max/step")
    unknown = set(data) - _GRID_KEYS
    if unknown:
        raise ConfigError(f"unknown keys in {name}: {sorted(unknown)}")
    missing = _GRID_KEYS - set(data)
    if missing:
        raise ConfigError(f"{name} is missing keys: {sorted(missing)}")
    return GridSpec(
        start=_require_number(data, "min"),
        stop=_require_number(data, "max"),
        step=_require_number(data, "step"),
    )


def _parse_cutoff(data: object) -> tuple[int | None, CutoffPolicy | None]:
    if not isinstance(data, dict):
        raise ConfigError("cutoff must be a table")
    unknown = set(data) - _CUTOFF_KEYS
    if unknown:
        raise ConfigError(f"unknown keys in cutoff: {sorted(unknown)}")
    if "fixed" in data:
        if set(data) != {"fixed"}:
            raise ConfigError("cutoff.fixed cannot be combined with schedule keys")
        fixed = data["fixed"]
        if not isinstance(fixed, int) or isinstance(fixed, bool) or fixed < 1:
            raise ConfigError(f"cutoff.fixed must be a positive integer, got {fixed!r}")
        return fixed, None
    defaults = CutoffPolicy()
    try:
        policy = CutoffPolicy(
            initial=int(data.get("initial", defaults.initial)),
            growth=float(data.get("growth", defaults.growth)),
            eta_tol=float(data.get("tolerance", defaults.eta_tol)),
            max_cutoff=int(data.get("max", defaults.max_cutoff)),
        )
    except ValueError as exc:
        raise ConfigError(f"invalid cutoff policy: {exc}") from exc
    return None, policy


def _parse_baths(raw: dict) -> tuple[float | None, float | None]:
    has_beta = "beta_hot" in raw or "beta_cold" in raw
    has_temp = "temp_hot" in raw or "temp_cold" in raw
    if has_beta and has_temp:
        raise ConfigError("give bath temperatures either as beta_* or temp_*, not both")
    if has_beta:
        if not ("beta_hot" in raw and "beta_cold" in raw):
            raise ConfigError("beta_hot and beta_cold must be given together")
        return _require_number(raw, "beta_hot"), _require_number(raw, "beta_cold")
    if has_temp:
        if not ("temp_hot" in raw and "temp_cold" in raw):
            raise ConfigError("temp_hot and temp_cold must be given together")
        temp_hot = _require_number(raw, "temp_hot")
        temp_cold = _require_number(raw, "temp_cold")
        if temp_hot <= 0 or temp_cold <= 0:
            raise ConfigError("temperatures must be positive")
        return 1.0 / temp_hot, 1.0 / temp_cold
    return None, None


def parse_config(raw: dict) -> RunConfig:
    """Validate a parsed TOML document into a RunConfig."""
    if not isinstance(raw, dict):
        raise ConfigError("configuration root must be a table")
    unknown = set(raw) - _TOP_LEVEL_KEYS
    if unknown:
        raise ConfigError(f"unknown configuration keys: {sorted(unknown)}")
    if raw.get("schema_version") != SCHEMA_VERSION:
        raise ConfigError(
            f"schema_version must be {SCHEMA_VERSION}, got {raw.get('schema_version')!r}"
        )
    command = raw.get("command")
    if command not in COMMANDS:
        raise ConfigError(f"command must be one of {COMMANDS}, got {command!r}")
    model = raw.get("model")
    if model not in ("lmg", "dicke", "toy"):
        raise ConfigError(f"model must be 'lmg', 'dicke' or 'toy', got {model!r}")

    if "gamma" in raw and "gamma_grid" in raw:
        raise ConfigError("give either gamma or gamma_grid, not both")

    n_list: tuple[int, ...] = ()
    if "n_list" in raw:
        values = raw["n_list"]
        if (
            not isinstance(values, list)
            or not values
            or any(not isinstance(n, int) or isinstance(n, bool) or n < 1 for n in values)
        ):
            raise ConfigError("n_list must be a non-empty list of positive integers")
        n_list = tuple(values)

    beta_hot, beta_cold = _parse_baths(raw)

    cutoff_fixed = cutoff_policy = None
    if "cutoff" in raw:
        cutoff_fixed, cutoff_policy = _parse_cutoff(raw["cutoff"])

    workers = raw.get("workers")
    if workers is not None and (not isinstance(workers, int) or isinstance(workers, bool) or workers < 1):
        raise ConfigError(f"workers must be a positive integer, got {workers!r}")
    fmt = raw.get("format")
    if fmt is not None and fmt not in ("csv", "json"):
        raise ConfigError(f"format must be 'csv' or 'json', got {fmt!r}")

    return RunConfig(
        command=command,
        model=model,
        omega0=_require_number(raw, "omega0") if "omega0" in raw else None,
        omega=_require_number(raw, "omega") if "omega" in raw else None,
        gamma=_require_number(raw, "gamma") if "gamma" in raw else None,
        gamma_grid=_parse_grid(raw["gamma_grid"], "gamma_grid") if "gamma_grid" in raw else None,
        n_list=n_list,
        lambda1=_require_number(raw, "lambda1") if "lambda1" in raw else None,
        lambda2=_require_number(raw, "lambda2") if "lambda2" in raw else None,
        lambda2_grid=_parse_grid(raw["lambda2_grid"], "lambda2_grid") if "lambda2_grid" in raw else None,
        lambda_grid=_parse_grid(raw["lambda_grid"], "lambda_grid") if "lambda_grid" in raw else None,
        beta_hot=beta_hot,
        beta_cold=beta_cold,
        cutoff_fixed=cutoff_fixed,
        cutoff_policy=cutoff_policy,
        workers=workers,
        output=raw.get("output"),
        format=fmt,
    )


def _check(condition: bool, message: str) -> None:
    if not condition:
        raise ConfigError(message)


def validate_for_command(config: RunConfig, command: str) -> None:
    """Check that the config carries exactly what the subcommand needs."""
    _check(
        config.command == command,
        f"configuration is for command {config.command!r}, invoked as {command!r}",
    )
    needs_model = command not in ("toy",)
    if command == "toy":
        _check(config.model == "toy", "the toy command requires model = 'toy'")
        _check(config.lambda1 is not None, "toy requires lambda1")
        _check(config.lambda2_grid is not None, "toy requires a lambda2_grid")
        _check(config.beta_hot is not None, "toy requires bath temperatures")
        for key in ("omega0", "omega", "gamma", "gamma_grid", "cutoff_fixed", "cutoff_policy"):
            _check(getattr(config, key) is None, f"toy config cannot set {key}")
        _check(not config.n_list, "toy config cannot set n_list")
        return

    _check(config.model in ("lmg", "dicke"), f"{command} requires model 'lmg' or 'dicke'")
    _check(config.omega0 is not None, f"{command} requires omega0")
    is_dicke = config.model == "dicke"
    if is_dicke:
        _check(config.omega is not None, "the Dicke model requires omega")
    else:
        _check(config.omega is None, "omega only applies to the Dicke model")
        _check(
            config.cutoff_fixed is None and config.cutoff_policy is None,
            "cutoff only applies to the Dicke model",
        )

    if command == "meanfield":
        _check(config.lambda_grid is not None, "meanfield requires a lambda_grid")
        for key in ("gamma", "gamma_grid", "lambda1", "lambda2", "lambda2_grid", "beta_hot"):
            _check(getattr(config, key) is None, f"meanfield config cannot set {key}")
        _check(not config.n_list, "meanfield is a thermodynamic-limit result; drop n_list")
        return

    _check(bool(config.n_list), f"{command} requires n_list")

    if command == "spectrum":
        _check(len(config.n_list) == 1, "spectrum runs at a single N; n_list must have one entry")
        _check(config.gamma is not None, "spectrum requires a scalar gamma")
        _check(config.lambda_grid is not None, "spectrum requires a lambda_grid")
        if is_dicke:
            _check(
                config.cutoff_fixed is not None,
                "Dicke spectra need cutoff.fixed (convergence targets cycle observables)",
            )
        for key in ("lambda1", "lambda2", "lambda2_grid", "beta_hot"):
            _check(getattr(config, key) is None, f"spectrum config cannot set {key}")
        return

    # cycle, sweep and converge-cutoff all describe Stirling cycles
    _check(config.beta_hot is not None, f"{command} requires bath temperatures")
    _check(config.lambda1 is not None, f"{command} requires lambda1")
    _check(config.lambda_grid is None, f"{command} does not take lambda_grid")

    if command == "sweep":
        _check(config.lambda2_grid is not None, "sweep requires a lambda2_grid")
        _check(config.lambda2 is None, "sweep takes lambda2_grid, not a scalar lambda2")
        _check(
            config.gamma is not None or config.gamma_grid is not None,
            "sweep requires gamma or gamma_grid",
        )
    else:  # cycle, converge-cutoff
        _check(config.lambda2 is not None, f"{command} requires a scalar lambda2")
        _check(config.lambda2_grid is None, f"{command} takes a scalar lambda2, not a grid")
        _check(config.gamma is not None, f"{command} requires a scalar gamma")
        if command == "converge-cutoff":
            _check(is_dicke, "converge-cutoff applies to the Dicke model only")
            _check(
                config.cutoff_fixed is None,
                "converge-cutoff searches the cutoff; drop cutoff.fixed",
            )
            _check(len(config.n_list) == 1, "converge-cutoff runs at a single N")


def load_config(path: str) -> RunConfig:
    """Parse and validate a TOML configuration file."""
    try:
        with open(path, "rb") as handle:
            raw = tomllib.load(handle)
    except tomllib.TOMLDecodeError as exc:
        raise ConfigError(f"{path}: invalid TOML: {exc}") from exc
    return parse_config(raw)


def list_presets() -> list[str]:
    """Names of the bundled preset configurations."""
    folder = resources.files("qstirling") / "presets"
    return sorted(
        entry.name.removesuffix(".toml")
        for entry in folder.iterdir()
        if entry.name.endswith(".toml")
    )


def load_preset(name: str) -> RunConfig:
    """Load a bundled preset by name."""
    folder = resources.files("qstirling") / "presets"
    candidate = folder / f"{name}.toml"
    if not candidate.is_file():
        raise ConfigError(f"unknown preset {name!r}; available: {', '.join(list_presets())}")
    raw = tomllib.loads(candidate.read_text(encoding="utf-8"))
    config = parse_config(raw)
    validate_for_command(config, config.command)
    return config
