"""
Experiment configuration.

A dotenv-format file of SECTION__FIELD=VALUE lines. Every key is checked
against the section dataclasses below; missing keys keep the defaults, which
reproduce the published figure parameters.
"""

import hashlib
import json
from dataclasses import asdict, dataclass, field, fields
from pathlib import Path
from typing import Optional

from dotenv import dotenv_values

from config import GKP_FOCK_DIM, GKP_FOCK_ORACLE_TOL, GKP_ORACLE_TOL
from src.utils.exceptions import ConfigError

OVERRIDE_LINE = 0


def expand_grid(text: str) -> tuple:
    """'start:stop:step' (inclusive, by integer index) or a comma list."""
    text = text.strip()
    if ":" in text:
        start, stop, step = (float(part) for part in text.split(":"))
        if step <= 0:
            raise ValueError("grid step must be positive")
        count = round((stop - start) / step)
        if count < 0 or abs(start + count * step - stop) > 1e-9 * max(1.0, abs(stop)):
            raise ValueError(f"{text!r} does not land on its stop value")
        return tuple(round(start + i * step, 12) + 0.0 for i in range(count + 1))
    return tuple(float(part) for part in text.split(",") if part.strip())


def _parse_ints(text: str) -> tuple:
    return tuple(int(part) for part in text.split(",") if part.strip())


def _parse_bool(text: str) -> bool:
    lowered = text.strip().lower()
    if lowered not in ("true", "false", "1", "0", "yes", "no"):
        raise ValueError(f"expected a boolean, got {text!r}")
    return lowered in ("true", "1", "yes")


def _grid(default: str, increasing: bool = True, nonnegative: bool = False):
    return field(
        default=expand_grid(default),
        metadata={"parse": expand_grid, "increasing": increasing, "nonnegative": nonnegative},
    )


def _value(default, parse, positive: bool = False, nonnegative: bool = False,
           below: Optional[float] = None, choices: Optional[tuple] = None):
    return field(default=default, metadata={
        "parse": parse, "positive": positive, "nonnegative": nonnegative, "below": below, "choices": choices,
    })


@dataclass(frozen=True)
class Fig3Config:
    levels_db: tuple = _grid("7,8,9,10,11")
    m: int = _value(2, int, nonnegative=True)
    x_grid: tuple = _grid("-0.3:0.3:0.01")
    beta: float = _value(315.0, float, positive=True)
    target: str = _value("reference", str, choices=("reference", "finite"))


@dataclass(frozen=True)
class Fig4Config:
    levels_db: tuple = _grid("7,8,9,10,11")
    m: int = _value(2, int, nonnegative=True)
    delta_grid: tuple = _grid("0:0.05:0.005", nonnegative=True)
    x: float = _value(0.0, float)


@dataclass(frozen=True)
class MeanFidConfig:
    levels_db: tuple = _grid("10,11,12")
    m: int = _value(3, int, nonnegative=True)
    v_grid: tuple = _grid("0:0.3:0.01", nonnegative=True)
    p_target: float = _value(0.05, float, nonnegative=True, below=1.0)


@dataclass(frozen=True)
class OracleConfig:
    m_values: tuple = field(
        default=(1, 2, 3), metadata={"parse": _parse_ints, "increasing": True, "nonnegative": True}
    )
    deltas: tuple = _grid("0,0.02,0.05", nonnegative=True)
    levels_db: tuple = _grid("7,10,12")
    x_values: tuple = _grid("-0.15,-0.05,0,0.05,0.15")
    tolerance: float = _value(GKP_ORACLE_TOL, float, positive=True)
    hermite_order: str = _value("doubled", str, choices=("doubled", "literal"))
    fock_m: int = _value(1, int, nonnegative=True)
    fock_db: float = _value(7.0, float)
    fock_beta: float = _value(3.0, float, positive=True)
    fock_gamma: float = _value(1.5, float)
    fock_dim: int = _value(GKP_FOCK_DIM, int, positive=True)
    fock_x_values: tuple = _grid("-0.2,0,0.1")
    fock_tolerance: float = _value(GKP_FOCK_ORACLE_TOL, float, positive=True)
    kerr_theta: float = _value(0.3, float)


@dataclass(frozen=True)
class BaselineConfig:
    taus: tuple = _grid("0,2")
    alphas: tuple = _grid("2")
    x_values: tuple = _grid("0")
    q_grid: tuple = _grid("-4:4:0.005")
    p_grid: tuple = _grid("-10:40:0.01")
    weights: str = _value("printed", str, choices=("printed", "coherent"))


@dataclass(frozen=True)
class OutputConfig:
    digits: int = _value(12, int, positive=True)
    dir: str = _value("results", str)
    profiles: bool = _value(True, _parse_bool)


@dataclass(frozen=True)
class ExperimentConfig:
    fig3: Fig3Config = field(default_factory=Fig3Config)
    fig4: Fig4Config = field(default_factory=Fig4Config)
    meanfid: MeanFidConfig = field(default_factory=MeanFidConfig)
    oracle: OracleConfig = field(default_factory=OracleConfig)
    baseline: BaselineConfig = field(default_factory=BaselineConfig)
    output: OutputConfig = field(default_factory=OutputConfig)

    def digest(self) -> str:
        canonical = json.dumps(asdict(self), sort_keys=True)
        return hashlib.sha256(canonical.encode("utf-8")).hexdigest()


SECTIONS = {f.name.upper(): f for f in fields(ExperimentConfig)}


def _line_numbers(path: Path) -> dict:
    numbers = {}
    for number, line in enumerate(path.read_text(encoding="utf-8").splitlines(), start=1):
        stripped = line.strip()
        if stripped.startswith("export "):
            stripped = stripped[len("export "):]
        if "=" in stripped and not stripped.startswith("#"):
            numbers.setdefault(stripped.split("=", 1)[0].strip(), number)
    return numbers


def _convert(key: str, line: int, spec, raw: str):
    meta = spec.metadata
    try:
        value = meta["parse"](raw)
    except ValueError as e:
        raise ConfigError(key, line, str(e)) from e
    if isinstance(value, tuple):
        if not value:
            raise ConfigError(key, line, "grid is empty")
        if meta.get("increasing") and any(b <= a for a, b in zip(value, value[1:])):
            raise ConfigError(key, line, "grid must be strictly increasing")
        if meta.get("nonnegative") and min(value) < 0:
            raise ConfigError(key, line, "grid values must be non-negative")
    elif meta.get("nonnegative") and value < 0:
        raise ConfigError(key, line, "value must be non-negative")
    if meta.get("below") is not None and value >= meta["below"]:
        raise ConfigError(key, line, f"value must be below {meta['below']:g}")
    if meta.get("positive") and value <= 0:
        raise ConfigError(key, line, "value must be positive")
    if meta.get("choices") and value not in meta["choices"]:
        raise ConfigError(key, line, f"expected one of {', '.join(meta['choices'])}")
    return value


def load_experiment_config(path: Optional[Path] = None, overrides: Optional[list] = None) -> ExperimentConfig:
    entries = {}
    if path is not None:
        path = Path(path)
        if not path.is_file():
            raise ConfigError(str(path), OVERRIDE_LINE, "config file not found")
        lines = _line_numbers(path)
        for key, raw in dotenv_values(path).items():
            entries[key] = (lines.get(key, OVERRIDE_LINE), raw)
    for item in overrides or []:
        if "=" not in item:
            raise ConfigError(item, OVERRIDE_LINE, "override must look like KEY=VALUE")
        key, raw = item.split("=", 1)
        entries[key.strip()] = (OVERRIDE_LINE, raw)

    updates = {name: {} for name in SECTIONS}
    for key, (line, raw) in entries.items():
        section, _, name = key.partition("__")
        if section not in SECTIONS or not name:
            raise ConfigError(key, line, "unknown key")
        section_fields = {f.name.upper(): f for f in fields(SECTIONS[section].default_factory)}
        if name not in section_fields:
            raise ConfigError(key, line, "unknown key")
        if raw is None:
            raise ConfigError(key, line, "missing value")
        spec = section_fields[name]
        updates[section][spec.name] = _convert(key, line, spec, raw)

    return ExperimentConfig(**{
        SECTIONS[section].name: SECTIONS[section].default_factory(**values)
        for section, values in updates.items()
    })
