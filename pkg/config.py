"""
Configuration module for Coxeter element enumeration and verification runs.
"""
import os
import json
from typing import Dict, List, Optional, Tuple
from dataclasses import dataclass, field
from pathlib import Path

import yaml
from dotenv import load_dotenv


OUTPUT_FORMATS = ("text", "json")

# Degrees accepted by the listing subcommand (no factorial work is done there)
ENUM_RANGE: Tuple[int, int] = (3, 20)


@dataclass(frozen=True)
class OracleConfig:
    """Knobs for the brute-force verification sweeps."""
    workers: int = 1
    budget_secs: Optional[float] = 120.0
    census_max_n: int = 11
    max_witnesses: int = 5
    paranoid: bool = False

    def __post_init__(self):
        if self.workers < 1:
            raise ValueError(f"workers must be at least 1, got {self.workers}")
        if self.budget_secs is not None and self.budget_secs < 0:
            raise ValueError(f"budget_secs must be non-negative, got {self.budget_secs}")

    @classmethod
    def from_env(cls, env_file: Optional[str] = None) -> 'OracleConfig':
        """Create OracleConfig from environment variables (and a .env file if present)."""
        load_dotenv(env_file)
        workers = os.environ.get("COXETER_WORKERS")
        budget = os.environ.get("COXETER_BUDGET_SECS")
        census_max_n = os.environ.get("COXETER_CENSUS_MAX_N")
        paranoid = os.environ.get("COXETER_PARANOID", "")

        return cls(
            workers=int(workers) if workers else cls.workers,
            budget_secs=float(budget) if budget else cls.budget_secs,
            census_max_n=int(census_max_n) if census_max_n else cls.census_max_n,
            paranoid=paranoid.lower() in ("1", "true", "yes"),
        )


@dataclass
class RunConfig:
    """Configuration for one CLI run."""
    subcommand: str
    n_values: List[int] = field(default_factory=list)
    claims: List[str] = field(default_factory=list)
    output_format: str = "text"
    output_path: Optional[str] = None
    workers: int = 1
    budget_secs: Optional[float] = 120.0
    explicit_n: bool = False

    def __post_init__(self):
        if self.output_format not in OUTPUT_FORMATS:
            raise ValueError(f"Unknown output format: {self.output_format}")

    def oracle_config(self, base: Optional[OracleConfig] = None) -> OracleConfig:
        """Oracle settings with this run's worker count and budget applied."""
        base = base or OracleConfig()
        return OracleConfig(
            workers=self.workers,
            budget_secs=self.budget_secs,
            census_max_n=base.census_max_n,
            max_witnesses=base.max_witnesses,
            paranoid=base.paranoid,
        )


def _read_config_data(config_path: str) -> Dict:
    path = Path(config_path)
    with open(path, 'r') as f:
        if path.suffix.lower() in (".yaml", ".yml"):
            return yaml.safe_load(f) or {}
        return json.load(f)


def load_config_from_file(config_path: str) -> RunConfig:
    """Load a run configuration from a JSON or YAML file."""
    config_data = _read_config_data(config_path)

    # n may be a single value, a list, or a {"min": a, "max": b} range
    n_data = config_data.get('n', [])
    explicit_n = isinstance(n_data, int)
    if isinstance(n_data, int):
        n_values = [n_data]
    elif isinstance(n_data, dict):
        n_values = list(range(n_data.get('min', 3), n_data['max'] + 1))
    else:
        n_values = [int(x) for x in n_data]

    # claim ids are resolved against the registry when the run is planned
    claims = config_data.get('claims', [])
    if isinstance(claims, str):
        claims = [part.strip() for part in claims.split(',') if part.strip()]

    return RunConfig(
        subcommand=config_data.get('subcommand', 'check'),
        n_values=n_values,
        claims=list(claims),
        output_format=config_data.get('format', 'text'),
        output_path=config_data.get('out'),
        workers=int(config_data.get('workers', 1)),
        budget_secs=config_data.get('budget_secs', 120.0),
        explicit_n=explicit_n,
    )
