"""
配置管理器

默认值 < TOML 文件中的 [PDeLP] 表 < 环境变量 < 命令行参数。
"""

import copy
import os
from typing import Any, Dict, Mapping, Optional

try:
    import tomllib
except ModuleNotFoundError:  # Python 3.10
    import tomli as tomllib  # type: ignore[no-redef]

from .utils import get_logger


class PDeLPConfig:
    """基础配置管理器"""

    SECTION = "PDeLP"
    ENV_CONFIG = "PDELP_CONFIG"
    ENV_NODE_CAP = "PDELP_NODE_CAP"

    ATTACK_SCOPES = ("complement", "closure")

    def __init__(
        self,
        path: Optional[str] = None,
        environ: Optional[Mapping[str, str]] = None,
        logger=None,
    ):
        self.logger = (logger or get_logger()).getChild("Config")
        self._environ = os.environ if environ is None else environ
        self.config = self._load_config(path)

    def _load_config(self, path: Optional[str]) -> Dict[str, Any]:
        config = self._get_default_config()
        path = path or self._environ.get(self.ENV_CONFIG)
        if path:
            _merge(config, self._read_file(path))
        self._apply_environment(config)
        return config

    def _get_default_config(self) -> Dict[str, Any]:
        return {
            "dialectics": {
                "node_cap": 100000,
                "pruning": True,
                "attack_scope": "complement",  # complement | closure
            },
            "arguments": {
                "support_cap": None,  # None => |Δ|
            },
            "parser": {
                "unicode": False,
            },
            "logging": {
                "level": "WARNING",
            },
        }

    def _read_file(self, path: str) -> Dict[str, Any]:
        with open(path, "rb") as f:
            data = tomllib.load(f)
        section = data.get(self.SECTION, {})
        if not isinstance(section, dict):
            self.logger.warning(f"配置文件 {path} 中的 [{self.SECTION}] 不是表，已忽略")
            return {}
        self.logger.debug(f"已加载配置文件: {path}")
        return section

    def _apply_environment(self, config: Dict[str, Any]) -> None:
        raw = self._environ.get(self.ENV_NODE_CAP)
        if raw is None or raw == "":
            return
        try:
            cap = int(raw)
        except ValueError:
            cap = 0
        if cap < 1:
            self.logger.warning(f"{self.ENV_NODE_CAP}={raw!r} 不是正整数，已忽略")
            return
        config["dialectics"]["node_cap"] = cap

    def get(self, key: str, default: Any = None) -> Any:
        node: Any = self.config
        for part in key.split("."):
            if not isinstance(node, dict) or part not in node:
                return default
            node = node[part]
        return default if node is None else node

    def set(self, key: str, value: Any) -> None:
        parts = key.split(".")
        node = self.config
        for part in parts[:-1]:
            node = node.setdefault(part, {})
        node[parts[-1]] = value

    # ==================== 常用配置项 ====================

    @property
    def node_cap(self) -> int:
        return int(self.get("dialectics.node_cap", 100000))

    @property
    def pruning(self) -> bool:
        return bool(self.get("dialectics.pruning", True))

    @property
    def attack_scope(self) -> str:
        scope = self.get("dialectics.attack_scope", "complement")
        if scope not in self.ATTACK_SCOPES:
            self.logger.warning(f"未知的攻击范围 {scope!r}，使用 complement")
            return "complement"
        return scope


def _merge(base: Dict[str, Any], override: Mapping[str, Any]) -> None:
    for key, value in override.items():
        if isinstance(value, Mapping) and isinstance(base.get(key), dict):
            _merge(base[key], value)
        else:
            base[key] = copy.deepcopy(value)
