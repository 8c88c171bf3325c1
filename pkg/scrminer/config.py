import os
from dataclasses import dataclass
from typing import Any, Dict, Optional

import yaml

from scrminer.errors import ConfigError


ITEM_STYLES = ("keyed", "compact")
LOG_LEVELS = ("DEBUG", "INFO", "WARNING", "ERROR")


def _expand_env(value: Any) -> Any:
    if isinstance(value, str) and value.startswith("${") and value.endswith("}"):
        key = value[2:-1]
        return os.environ.get(key, "")
    if isinstance(value, dict):
        return {k: _expand_env(v) for k, v in value.items()}
    if isinstance(value, list):
        return [_expand_env(v) for v in value]
    return value


@dataclass(frozen=True)
class SystemConfig:
    log_level: str
    threads: int


@dataclass(frozen=True)
class MiningConfig:
    min_supp: Optional[float]
    min_supp_count: Optional[int]
    min_conf: float
    oracle_cap: int
    item_style: str


@dataclass(frozen=True)
class OutputConfig:
    decimals: int


@dataclass(frozen=True)
class AppConfig:
    raw: Dict[str, Any]
    system: SystemConfig
    mining: MiningConfig
    output: OutputConfig


def _opt_float(v: Any) -> Optional[float]:
    if v is None or v == "":
        return None
    return float(v)


def _opt_int(v: Any) -> Optional[int]:
    if v is None or v == "":
        return None
    return int(v)


def validate_config(cfg: AppConfig) -> AppConfig:
    m = cfg.mining
    if m.min_supp is not None and m.min_supp_count is not None:
        raise ConfigError("min_supp and min_supp_count are mutually exclusive")
    if m.min_supp is not None and not (0.0 < m.min_supp <= 1.0):
        raise ConfigError(f"min_supp must be in (0, 1], got {m.min_supp}")
    if m.min_supp_count is not None and m.min_supp_count < 1:
        raise ConfigError(f"min_supp_count must be >= 1, got {m.min_supp_count}")
    if not (0.0 <= m.min_conf <= 1.0):
        raise ConfigError(f"min_conf must be in [0, 1], got {m.min_conf}")
    if m.oracle_cap < 1:
        raise ConfigError(f"oracle_cap must be >= 1, got {m.oracle_cap}")
    if m.item_style not in ITEM_STYLES:
        raise ConfigError(f"item_style must be one of {list(ITEM_STYLES)}, got {m.item_style!r}")
    if cfg.system.threads < 1:
        raise ConfigError(f"threads must be >= 1, got {cfg.system.threads}")
    if cfg.system.log_level.upper() not in LOG_LEVELS:
        raise ConfigError(f"log_level must be one of {list(LOG_LEVELS)}, got {cfg.system.log_level!r}")
    if cfg.output.decimals < 0:
        raise ConfigError(f"decimals must be >= 0, got {cfg.output.decimals}")
    return cfg


def load_config(path: Optional[str] = None) -> AppConfig:
    data: Dict[str, Any] = {}
    if path:
        with open(path, "r", encoding="utf-8") as f:
            data = yaml.safe_load(f) or {}
        if not isinstance(data, dict):
            raise ConfigError(f"config {path} must be a mapping")

    data = _expand_env(data)

    try:
        sys_cfg = data.get("system") or {}
        system = SystemConfig(
            log_level=str(sys_cfg.get("log_level", "INFO")).upper(),
            threads=int(sys_cfg.get("threads", 1)),
        )

        min_cfg = data.get("mining") or {}
        min_supp = _opt_float(min_cfg.get("min_supp"))
        min_supp_count = _opt_int(min_cfg.get("min_supp_count"))
        if min_supp is None and min_supp_count is None:
            min_supp = 0.07
        mining = MiningConfig(
            min_supp=min_supp,
            min_supp_count=min_supp_count,
            min_conf=float(min_cfg.get("min_conf", 0.5)),
            oracle_cap=int(min_cfg.get("oracle_cap", 2_000_000)),
            item_style=str(min_cfg.get("item_style", "keyed")),
        )

        out_cfg = data.get("output") or {}
        output = OutputConfig(decimals=int(out_cfg.get("decimals", 4)))
    except (TypeError, ValueError) as e:
        raise ConfigError(f"invalid config value: {e}") from e

    return validate_config(AppConfig(raw=data, system=system, mining=mining, output=output))
