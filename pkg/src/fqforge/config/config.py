import importlib.resources
from dataclasses import dataclass, fields
from pathlib import Path
from typing import Any, Dict, Tuple

import tomlkit
from rich.console import Console

from ..errors import FqForgeError


def _deep_merge(base: Dict, override: Dict) -> Dict:
    merged = dict(base)
    for key, value in override.items():
        if isinstance(value, dict) and isinstance(merged.get(key), dict):
            merged[key] = _deep_merge(merged[key], value)
        else:
            merged[key] = value
    return merged


class FqForgeConfig:
    """FqForge配置管理器"""

    def __init__(self, config_file: str | None = None):
        self.console = Console(stderr=True)

        if config_file:
            self.config_file = Path(config_file)
            self.config = self._load_from_file()
        else:
            self.config_file = None
            self.config = self.get_builtin_default_config()

    @classmethod
    def from_dict(cls, config_dict: Dict) -> "FqForgeConfig":
        """从字典创建配置实例（覆盖在内置默认值之上）"""
        instance = cls()
        instance.config = _deep_merge(instance.config, config_dict)
        return instance

    def _load_from_file(self) -> Dict:
        """从文件加载配置"""
        config = self.get_builtin_default_config()

        if not self.config_file.exists():
            self.console.print(
                f"[yellow]Configuration file not found: {self.config_file}, using defaults[/yellow]"
            )
            return config

        try:
            with open(self.config_file, "r", encoding="utf-8") as f:
                file_config = tomlkit.load(f).unwrap()
        except Exception as e:
            self.console.print(f"[red]Failed to load configuration: {str(e)}[/red]")
            return config
        return _deep_merge(config, file_config)

    @staticmethod
    def get_builtin_default_config() -> Dict:
        """获取内置默认配置"""
        if not hasattr(FqForgeConfig, "_cached_default_config"):
            with (
                importlib.resources.files("fqforge.config")
                .joinpath("default.toml")
                .open(mode="r", encoding="utf-8") as f
            ):
                FqForgeConfig._cached_default_config = tomlkit.load(f).unwrap()

        return _deep_merge(FqForgeConfig._cached_default_config, {})

    def get(self, key: str, default=None):
        """获取配置值"""
        return self.config.get(key, default)

    def update(self, new_config: Dict):
        """更新配置"""
        self.config = _deep_merge(self.config, new_config)

    def save_to_file(self, file_path: str):
        """保存配置到文件"""
        with open(file_path, "w", encoding="utf-8") as f:
            tomlkit.dump(self.config, f)

    def get_verify_config(self) -> Dict[str, Any]:
        """获取验证器配置"""
        return self.config.get("verify", {})

    def get_output_config(self) -> Dict[str, Any]:
        """获取输出配置"""
        return self.config.get("output", {})

    def get_verify_settings(self, **overrides) -> "VerifySettings":
        values = dict(self.get_verify_config())
        values.update({k: v for k, v in overrides.items() if v is not None})
        return VerifySettings.from_mapping(values)


@dataclass(frozen=True)
class VerifySettings:
    """验证器参数，由配置构造后显式传入每个验证器"""

    seed: int = 0
    trials: int = 100
    fields: Tuple[int, ...] = (2, 3, 4)
    nvars: Tuple[int, ...] = (1, 2)
    random_subsets: int = 5
    max_failures_reported: int = 10
    exhaustive_pair_cap: int = 1024
    oracle_combination_cap: int = 65536
    function_enumeration_cap: int = 65536
    rabinowitsch_max_points: int = 64
    correspondence_max_points: int = 10
    subset_pair_cap: int = 4096
    radical_samples: int = 500
    product_sum_samples: int = 200
    rabinowitsch_samples: int = 200
    zero_function_samples: int = 500
    zero_function_max_points: int = 4096

    def __post_init__(self):
        object.__setattr__(self, "fields", tuple(int(q) for q in self.fields))
        object.__setattr__(self, "nvars", tuple(int(n) for n in self.nvars))
        for f in fields(self):
            if f.name in ("fields", "nvars", "seed"):
                continue
            value = getattr(self, f.name)
            if not isinstance(value, int) or value < 0:
                raise FqForgeError(f"verify.{f.name} must be a non-negative integer, got {value!r}")
        if self.max_failures_reported < 1:
            raise FqForgeError("verify.max_failures_reported must be at least 1")

    @classmethod
    def from_mapping(cls, values: Dict[str, Any]) -> "VerifySettings":
        known = {f.name for f in fields(cls)}
        unknown = sorted(set(values) - known)
        if unknown:
            raise FqForgeError(f"unknown verify settings: {', '.join(unknown)}")
        return cls(**values)

    def replace(self, **changes) -> "VerifySettings":
        values = {f.name: getattr(self, f.name) for f in fields(self)}
        values.update({k: v for k, v in changes.items() if v is not None})
        return VerifySettings(**values)
