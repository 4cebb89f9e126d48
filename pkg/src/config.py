from __future__ import annotations

import logging
import os
from dataclasses import dataclass, field
from pathlib import Path

import yaml
from dotenv import load_dotenv


@dataclass
class LoggingConfig:
    level: str = "INFO"


@dataclass
class SearchConfig:
    budget: int = 40        # max C(n,k) vertices for enumerate-mlcif
    threads: int = 1        # 1 = serial scanner
    seed: int = 0
    mask_chunk: int = 1024  # rows per block in vectorised disjointness scans


@dataclass
class OutputConfig:
    trace: bool = True      # print per-level witness records with check-generators


@dataclass
class Config:
    logging: LoggingConfig = field(default_factory=LoggingConfig)
    search: SearchConfig = field(default_factory=SearchConfig)
    output: OutputConfig = field(default_factory=OutputConfig)

    @classmethod
    def load(cls, path: str = "config.yaml") -> Config:
        load_dotenv()

        data: dict = {}
        config_path = Path(path)
        if config_path.exists():
            with open(config_path) as f:
                data = yaml.safe_load(f) or {}

        try:
            config = cls(
                logging=LoggingConfig(**data.get("logging", {})),
                search=SearchConfig(**data.get("search", {})),
                output=OutputConfig(**data.get("output", {})),
            )
        except TypeError as e:
            raise ValueError(f"Invalid config file {path}: {e}") from e

        level = os.getenv("LCIF_LOG_LEVEL", "")
        if level:
            config.logging.level = level
        config.search.budget = _env_int("LCIF_BUDGET", config.search.budget)
        config.search.threads = _env_int("LCIF_THREADS", config.search.threads)
        config.search.seed = _env_int("LCIF_SEED", config.search.seed)

        config._validate()
        return config

    def _validate(self):
        if not isinstance(logging.getLevelName(self.logging.level.upper()), int):
            raise ValueError(f"Unknown log level '{self.logging.level}'.")
        if self.search.budget < 1:
            raise ValueError(f"search.budget must be positive, got {self.search.budget}.")
        if self.search.threads < 1:
            raise ValueError(f"search.threads must be positive, got {self.search.threads}.")
        if self.search.seed < 0:
            raise ValueError(f"search.seed must be non-negative, got {self.search.seed}.")
        if self.search.mask_chunk < 1:
            raise ValueError(f"search.mask_chunk must be positive, got {self.search.mask_chunk}.")


def _env_int(name: str, default: int) -> int:
    raw = os.getenv(name, "")
    if not raw:
        return default
    try:
        return int(raw)
    except ValueError as e:
        raise ValueError(f"{name} must be an integer, got '{raw}'.") from e
