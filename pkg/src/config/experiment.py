"""Experiment configuration: built-in defaults, then a `key = value` file, then flags."""
import logging
import os
from dataclasses import asdict, dataclass, field, fields
from typing import Any, Dict, Mapping, Optional

from dotenv import dotenv_values

from src.config.settings import CONFIG
from src.errors import ConfigError

logger = logging.getLogger(__name__)

FAMILIES = ("uniform", "partition", "graphic", "laminar", "transversal")
WEIGHT_SCHEMES = ("uniform-random", "exponential-spread", "adversarial-geometric", "from-file")
ALGORITHMS = ("full", "bucketing-fixed", "aided-wrapped", "classical-baseline")
ORDERS = ("random", "increasing", "decreasing", "worst-of-k")


def _parse_bool(value: str) -> bool:
    lowered = value.strip().lower()
    if lowered in ("1", "true", "yes", "on"):
        return True
    if lowered in ("0", "false", "no", "off", ""):
        return False
    raise ValueError(f"not a boolean: {value!r}")


def _optional(parse):
    def convert(value: str):
        return None if value.strip().lower() in ("", "none") else parse(value)
    return convert


_PARSERS = {
    "family": str, "n": int, "k": _optional(int), "weight_scheme": str, "base": float,
    "weights_path": _optional(str), "instance_path": _optional(str), "algorithm": str,
    "tau": _optional(int), "delta": _optional(int), "order": str, "order_k": int, "trials": int,
    "seed": _optional(int), "output": _optional(str), "p_s": float, "workers": int,
    "monte_carlo": _parse_bool, "mc_trials": int, "axioms": _parse_bool, "orders": int,
}

_ALIASES = {"weights": "weights_path", "instance": "instance_path", "weight-scheme": "weight_scheme"}


@dataclass
class ExperimentConfig:
    family: str = "uniform"
    n: int = 10
    k: Optional[int] = None
    weight_scheme: str = "uniform-random"
    base: float = 2.0
    weights_path: Optional[str] = None
    instance_path: Optional[str] = None
    algorithm: str = "full"
    tau: Optional[int] = None
    delta: Optional[int] = None
    order: str = "random"
    order_k: int = 8
    trials: int = 100
    seed: Optional[int] = None
    output: Optional[str] = None
    p_s: float = 0.5
    workers: int = field(default_factory=lambda: CONFIG['WORKERS'])
    monte_carlo: bool = False
    mc_trials: int = 2000
    axioms: bool = False
    orders: int = 6

    @classmethod
    def from_sources(cls, path: Optional[str] = None, overrides: Optional[Mapping[str, Any]] = None,
                     validate: bool = True) -> "ExperimentConfig":
        values: Dict[str, Any] = {}
        if path is not None:
            values.update(load_config_file(path))
        for key, value in (overrides or {}).items():
            if value is not None:
                values[key] = value
        try:
            config = cls(**values)
        except TypeError as e:
            raise ConfigError(str(e)) from e
        if config.seed is None:
            config.seed = CONFIG['DEFAULT_SEED']
        config.normalise_order()
        if validate:
            config.validate()
        return config

    def normalise_order(self) -> None:
        """Accept `worst-of-<k>` as shorthand for order=worst-of-k, order_k=<k>"""
        if self.order.startswith("worst-of-") and self.order != "worst-of-k":
            suffix = self.order[len("worst-of-"):]
            if not suffix.isdigit():
                raise ConfigError(f"malformed order {self.order!r}")
            self.order, self.order_k = "worst-of-k", int(suffix)

    def validate(self) -> None:
        problems = []
        if self.seed is None:
            problems.append("seed is mandatory (set seed = ... or --seed)")
        if self.instance_path is None and self.family not in FAMILIES:
            problems.append(f"family must be one of {', '.join(FAMILIES)}")
        if self.weight_scheme not in WEIGHT_SCHEMES:
            problems.append(f"weight_scheme must be one of {', '.join(WEIGHT_SCHEMES)}")
        if self.algorithm not in ALGORITHMS:
            problems.append(f"algorithm must be one of {', '.join(ALGORITHMS)}")
        if self.order not in ORDERS:
            problems.append(f"order must be one of {', '.join(ORDERS)} or worst-of-<k>")
        for name in ("n", "order_k", "workers", "mc_trials", "orders"):
            if getattr(self, name) < 1:
                problems.append(f"{name} must be positive")
        if self.trials < 0:
            problems.append("trials must be non-negative")
        if self.k is not None and self.k < 0:
            problems.append("k must be non-negative")
        if self.base <= 1:
            problems.append("base must exceed 1")
        if not 0 < self.p_s < 1:
            problems.append("p_s must lie strictly between 0 and 1")
        if self.weight_scheme == "from-file" and not self.weights_path:
            problems.append("weight_scheme from-file needs weights_path")
        if self.algorithm == "bucketing-fixed" and (self.tau is None or self.delta is None):
            problems.append("algorithm bucketing-fixed needs tau and delta")
        for path in (self.instance_path, self.weights_path):
            if path is not None and not os.path.exists(path):
                problems.append(f"file not found: {path}")
        if problems:
            raise ConfigError("; ".join(problems))

    def as_dict(self) -> Dict[str, Any]:
        return asdict(self)


def load_config_file(path: str) -> Dict[str, Any]:
    """Parse a `key = value` file into typed ExperimentConfig fields"""
    if not os.path.exists(path):
        raise ConfigError(f"config file not found: {path}")
    known = {f.name for f in fields(ExperimentConfig)}
    parsed: Dict[str, Any] = {}
    for raw_key, raw_value in dotenv_values(path).items():
        key = _ALIASES.get(raw_key.strip().lower(), raw_key.strip().lower().replace("-", "_"))
        if key not in known:
            raise ConfigError(f"{path}: unknown key {raw_key!r}")
        try:
            parsed[key] = _PARSERS[key](raw_value or "")
        except ValueError as e:
            raise ConfigError(f"{path}: bad value for {key}: {e}") from e
    logger.info("loaded %d settings from %s", len(parsed), path)
    return parsed


if __name__ == "__main__":
    print("Default experiment configuration:")
    for key, value in ExperimentConfig().as_dict().items():
        print(f"{key}: {value}")
