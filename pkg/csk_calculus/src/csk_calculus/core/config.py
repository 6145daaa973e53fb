from __future__ import annotations

import os
from pathlib import Path
from typing import Any, Literal

import yaml
from dotenv import load_dotenv
from pydantic import BaseModel, Field, ValidationError, field_validator

from csk_calculus.core.constants import (
    DEFAULT_ORDER,
    ENV_DEFAULT_ORDER,
    ENV_LOG_LEVEL,
    ORACLE_CAP_DEFAULT,
    ORACLE_CAP_MAX,
)
from csk_calculus.core.exceptions import ConfigError


class SeriesConfig(BaseModel):
    default_order: int = DEFAULT_ORDER

    @field_validator("default_order")
    @classmethod
    def _order_floor(cls, v: int) -> int:
        if v < 2:
            raise ValueError("default_order must be >= 2")
        return v


class OracleConfig(BaseModel):
    max_n: int = ORACLE_CAP_DEFAULT

    @field_validator("max_n")
    @classmethod
    def _cap_bounds(cls, v: int) -> int:
        if v < 1 or v > ORACLE_CAP_MAX:
            raise ValueError(f"max_n must be in 1..{ORACLE_CAP_MAX}")
        return v


class OutputConfig(BaseModel):
    format: Literal["json", "text"] = "json"
    indent: int | None = 2


class LoggingConfig(BaseModel):
    level: str = "WARNING"
    log_dir: str | None = None

    @field_validator("level")
    @classmethod
    def _known_level(cls, v: str) -> str:
        up = v.upper()
        if up not in {"DEBUG", "INFO", "WARNING", "ERROR", "CRITICAL"}:
            raise ValueError(f"unknown log level: {v}")
        return up


class AppConfig(BaseModel):
    series: SeriesConfig = Field(default_factory=SeriesConfig)
    oracle: OracleConfig = Field(default_factory=OracleConfig)
    output: OutputConfig = Field(default_factory=OutputConfig)
    logging: LoggingConfig = Field(default_factory=LoggingConfig)


def load_yaml(path: Path) -> dict[str, Any]:
    try:
        with path.open("r", encoding="utf-8") as f:
            return yaml.safe_load(f) or {}
    except FileNotFoundError as exc:
        raise ConfigError(f"Config file not found: {path}") from exc
    except Exception as exc:
        raise ConfigError(f"Failed reading config yaml: {path}") from exc


def load_config(
    config_path: str | Path | None = None,
    overrides: dict[str, Any] | None = None,
) -> AppConfig:
    load_dotenv(override=False)
    raw: dict[str, Any] = load_yaml(Path(config_path)) if config_path else {}
    if not isinstance(raw, dict):
        raise ConfigError(f"Config root must be a mapping: {config_path}")

    raw = _deep_merge_dicts(raw, _env_overrides())
    if overrides:
        raw = _deep_merge_dicts(raw, overrides)

    try:
        return AppConfig.model_validate(raw)
    except ValidationError as exc:
        raise ConfigError(str(exc)) from exc


def _env_overrides() -> dict[str, Any]:
    out: dict[str, Any] = {}
    level = os.getenv(ENV_LOG_LEVEL)
    if level:
        out["logging"] = {"level": level}
    order = os.getenv(ENV_DEFAULT_ORDER)
    if order:
        out["series"] = {"default_order": order}
    return out


def _deep_merge_dicts(base: dict[str, Any], override: dict[str, Any]) -> dict[str, Any]:
    out: dict[str, Any] = dict(base)
    for k, v in override.items():
        if k in out and isinstance(out[k], dict) and isinstance(v, dict):
            out[k] = _deep_merge_dicts(out[k], v)
        else:
            out[k] = v
    return out
