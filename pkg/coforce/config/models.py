"""Configuration models for coforce."""

from __future__ import annotations

from enum import Enum
from pathlib import Path

import yaml
from pydantic import BaseModel, Field

from coforce.errors import ArgumentError


class OutputFormat(str, Enum):
    JSON = "json"
    CSV = "csv"


class SolverConfig(BaseModel):
    """Limits for the exact solver."""

    max_subsets: int | None = Field(None, ge=1, description="Candidate sets per graph")
    timeout: float | None = Field(None, gt=0, description="Seconds per graph")
    max_n: int = Field(default=16, ge=1, le=64, description="Largest n for exact commands")


class RunConfig(BaseModel):
    """Batch execution settings."""

    jobs: int | None = Field(None, ge=1, description="Worker processes (None = cpu count)")
    format: OutputFormat = Field(default=OutputFormat.JSON, description="Report format")
    seed: int = Field(default=0, ge=0, description="Base seed for generated inputs")
    timings: bool = Field(default=False, description="Record elapsed_ms in reports")


class GenConfig(BaseModel):
    """Defaults for random generators."""

    cycle_bias: float = Field(default=0.5, ge=0, le=1, description="Cactus cycle probability")
    edge_probability: float = Field(default=0.5, ge=0, le=1, description="G(n, p) edge chance")
    max_attempts: int = Field(default=1000, ge=1, description="Rejection sampling bound")


class LoggingConfig(BaseModel):
    """Logging configuration."""

    level: str = Field(default="warning", description="Log level")
    file: str | None = Field(None, description="Log file path")


class Config(BaseModel):
    """Main coforce configuration."""

    solver: SolverConfig = Field(default_factory=SolverConfig)
    run: RunConfig = Field(default_factory=RunConfig)
    gen: GenConfig = Field(default_factory=GenConfig)
    logging: LoggingConfig = Field(default_factory=LoggingConfig)

    def save(self, path: Path) -> None:
        """Save configuration to a YAML file."""
        path.parent.mkdir(parents=True, exist_ok=True)
        with open(path, "w") as f:
            yaml.safe_dump(self.model_dump(mode="json"), f, default_flow_style=False)


def load_config(path: Path | None = None) -> Config:
    """Load configuration from an explicit YAML file, or return defaults."""
    if path is None:
        return Config()
    if not path.exists():
        raise ArgumentError(f"config file {path} does not exist")
    with open(path) as f:
        data = yaml.safe_load(f) or {}
    if not isinstance(data, dict):
        raise ArgumentError(f"config file {path} must hold a mapping")
    return Config(**data)
