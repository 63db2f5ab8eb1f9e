"""Configuration loader for superhc"""

import copy
import os
import yaml
import logging
from pathlib import Path
from typing import Any, Dict, Optional

logger = logging.getLogger(__name__)

DEFAULTS: Dict[str, Any] = {
    'app': {'name': 'superhc', 'version': '0.1.0'},
    'logging': {
        'level': 'INFO',
        'format': '%(asctime)s - %(name)s - %(levelname)s - %(message)s',
    },
    'interp': {'slack': 3, 'enlarge_slack': 3},
    'shimura': {'max_degree': 3, 'pairing': 'monomial-factorial'},
    'kac': {'max_a': 5, 'max_b': 4, 'word_length': 2},
    'fd': {'max_size': 6, 'max_p': 3, 'max_q': 3, 'oddref_bound': 5},
    'verification': {
        'enabled': [
            'brackets', 'roots', 'lambda0', 'interpolation', 'triangularity',
            'finite_dim', 'sphericity', 'shimura', 'eigenvalue',
        ],
        'lambda0_degree': 3,
        'triangularity': {
            'degree': 3,
            'params': [{'k': '-3', 'h': '1/3'}, {'k': '-5/7', 'h': '2'}],
            # h = 2 makes the normalization at μ = (2) vanish when k = -3
            'degenerate': [{'k': '-3', 'h': '2', 'hooks': ['2']}],
        },
        'shimura_partitions': ['', '1', '2', '1,1', '3', '2,1', '1,1,1'],
        'eigenvalue_weights': [[2, 0], [3, 0], [3, 1]],
    },
    'output': {'format': 'json'},
}

# (environment variable, dotted key, converter)
ENV_OVERRIDES = (
    ('SUPERHC_SLACK', 'interp.slack', int),
    ('SUPERHC_LOG_LEVEL', 'logging.level', str.upper),
    ('SUPERHC_FORMAT', 'output.format', str.lower),
)


class Config:
    """Load and manage superhc configuration"""

    def __init__(self, config_path: Optional[str] = "config.yaml", data: Optional[Dict[str, Any]] = None):
        """
        Initialize config from YAML file

        Args:
            config_path: Path to config.yaml, absolute or relative to the repository root
            data: Already parsed configuration; skips the file search
        """
        self.path: Optional[Path] = None
        if data is not None:
            self.data = copy.deepcopy(data)
            self._apply_env()
            return

        paths_to_try = []
        if Path(config_path).is_absolute():
            paths_to_try.append(Path(config_path))
        else:
            # src/core/ -> repository root
            repo_root = Path(__file__).parent.parent.parent
            paths_to_try.append(repo_root / config_path)
            paths_to_try.append(Path(config_path))

        for path in paths_to_try:
            if path.exists():
                self.path = path
                break

        if self.path is None:
            raise FileNotFoundError(
                f"Config file not found. Tried:\n" +
                "\n".join(f"  - {p}" for p in paths_to_try)
            )

        self.data: Dict[str, Any] = {}
        self.load()

    @classmethod
    def defaults(cls) -> 'Config':
        """Built-in configuration, environment overrides applied"""
        return cls(data=DEFAULTS)

    @classmethod
    def locate(cls, config_path: Optional[str] = None) -> 'Config':
        """Explicit path must exist; otherwise config.yaml if found, else the defaults"""
        if config_path:
            return cls(config_path)
        try:
            return cls("config.yaml")
        except FileNotFoundError:
            logger.info("No config.yaml found, using built-in defaults")
            return cls.defaults()

    def load(self):
        """Load configuration from file"""
        if not self.path.exists():
            raise FileNotFoundError(f"Config file not found: {self.path}")

        with open(self.path, 'r') as f:
            loaded = yaml.safe_load(f) or {}

        self.data = _merge(DEFAULTS, loaded)
        self._apply_env()
        logger.info(f"Configuration loaded from {self.path}")

    def _apply_env(self):
        for var, key, convert in ENV_OVERRIDES:
            raw = os.getenv(var)
            if not raw:
                continue
            try:
                self.set(key, convert(raw))
            except ValueError:
                raise ValueError(f"Invalid value for {var}: {raw!r}")

    def get(self, path: str, default: Any = None) -> Any:
        """
        Get config value by dot-notation path

        Example:
            config.get('interp.slack')  # Returns 3
            config.get('interp.missing', 'default_value')
        """
        value = self.data
        for key in path.split('.'):
            if isinstance(value, dict):
                value = value.get(key)
                if value is None:
                    return default
            else:
                return default
        return value

    def set(self, path: str, value: Any):
        keys = path.split('.')
        node = self.data
        for key in keys[:-1]:
            node = node.setdefault(key, {})
        node[keys[-1]] = value

    def __getitem__(self, key: str) -> Any:
        """Dictionary-style access"""
        return self.data[key]


def _merge(base: Dict[str, Any], override: Dict[str, Any]) -> Dict[str, Any]:
    merged = copy.deepcopy(base)
    for key, value in override.items():
        if isinstance(value, dict) and isinstance(merged.get(key), dict):
            merged[key] = _merge(merged[key], value)
        else:
            merged[key] = value
    return merged
