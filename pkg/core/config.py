"""Configuration management for the k-defect toolkit."""

import os
from pathlib import Path
from typing import Any, Dict, List, Optional

import yaml
from dotenv import load_dotenv
from pydantic import BaseModel, Field

from .exceptions import ValidationError
from .logger import get_logger

logger = get_logger(__name__)

ENGINE_NAMES = ("dc", "subset", "flats", "oracle")


class EngineConfig(BaseModel):
    """Engine size guards and memoization settings."""

    cache_enabled: bool = True
    max_vertices: int = Field(default=14, gt=0)
    max_edges: int = Field(default=25, gt=0)
    max_subset_edges: int = Field(default=22, gt=0)
    max_colorings: int = Field(default=10_000_000, gt=0)
    max_flat_subsets: int = Field(default=1_000_000, gt=0)
    canonical_max_vertices: int = Field(default=10, ge=0)
    max_partition_vertices: int = Field(default=10, gt=0)
    oracle_lambdas: List[int] = Field(default_factory=lambda: [1, 2, 3, 4])
    default_engines: List[str] = Field(default_factory=lambda: list(ENGINE_NAMES))


class VerifierConfig(BaseModel):
    """Claim verifier settings."""

    workers: int = Field(default=1, ge=1)
    stop_at_first: bool = False
    show_progress: bool = False


class OutputConfig(BaseModel):
    """CLI output settings."""

    default_format: str = Field(default="json")
    strict_input: bool = False


class Config:
    """Main configuration class for the toolkit."""

    def __init__(self, env_file: Optional[str] = None, settings_file: Optional[str] = None):
        """
        Initialize configuration.

        Args:
            env_file: Path to .env file (default: config/.env)
            settings_file: Path to settings.yaml file (default: config/settings.yaml)
        """
        self.project_root = Path(__file__).parent.parent

        if env_file is None:
            env_file = str(self.project_root / "config" / ".env")

        if Path(env_file).exists():
            load_dotenv(env_file)
            logger.info("Loaded environment variables", file=str(env_file))
        else:
            logger.debug("Environment file not found", file=str(env_file))

        if settings_file is None:
            settings_file = str(self.project_root / "config" / "settings.yaml")

        self.settings = self._load_settings(Path(settings_file))

        self._init_logging_config()
        self._init_engine_config()
        self._init_verifier_config()
        self._init_output_config()

        logger.debug("Configuration initialized", cache=self.engine.cache_enabled)

    def _load_settings(self, settings_file: Path) -> Dict[str, Any]:
        """Load settings from YAML file."""
        if not settings_file.exists():
            logger.warning("Settings file not found, using defaults", file=str(settings_file))
            return {}

        try:
            with open(settings_file, "r") as f:
                settings = yaml.safe_load(f)
                logger.info("Loaded settings from YAML", file=str(settings_file))
                return settings or {}
        except Exception as e:
            logger.error("Failed to load settings file", file=str(settings_file), error=str(e))
            raise ValidationError(f"Failed to load settings: {e}")

    def _init_logging_config(self):
        """Initialize logging configuration."""
        logging_settings = self.settings.get("logging", {})
        self.log_level = os.getenv("KDEFECT_LOG_LEVEL", logging_settings.get("level", "WARNING"))
        self.log_file = os.getenv("KDEFECT_LOG_FILE", logging_settings.get("file")) or None
        self.log_max_bytes = int(logging_settings.get("max_bytes", 10485760))
        self.log_backup_count = int(logging_settings.get("backup_count", 3))
        self.human_readable_logs = bool(logging_settings.get("human_readable", True))

    def _init_engine_config(self):
        """Initialize engine configuration."""
        engine_settings = dict(self.settings.get("engine", {}))
        if "KDEFECT_CACHE" in os.environ:
            engine_settings["cache_enabled"] = os.getenv("KDEFECT_CACHE", "true").lower() == "true"
        if "KDEFECT_MAX_COLORINGS" in os.environ:
            engine_settings["max_colorings"] = int(os.getenv("KDEFECT_MAX_COLORINGS", "10000000"))
        self.engine = EngineConfig(**engine_settings)

        unknown = [name for name in self.engine.default_engines if name not in ENGINE_NAMES]
        if unknown:
            raise ValidationError(f"Unknown engines in settings: {unknown}")

    def _init_verifier_config(self):
        """Initialize verifier configuration."""
        verifier_settings = dict(self.settings.get("verifier", {}))
        if "KDEFECT_WORKERS" in os.environ:
            verifier_settings["workers"] = int(os.getenv("KDEFECT_WORKERS", "1"))
        self.verifier = VerifierConfig(**verifier_settings)

    def _init_output_config(self):
        """Initialize output configuration."""
        self.output = OutputConfig(**self.settings.get("output", {}))

    def __repr__(self) -> str:
        """Return string representation of configuration."""
        return (
            f"Config(cache={self.engine.cache_enabled}, "
            f"workers={self.verifier.workers}, "
            f"engines={self.engine.default_engines})"
        )


# Global configuration instance
_config: Optional[Config] = None


def get_config(env_file: Optional[str] = None, settings_file: Optional[str] = None) -> Config:
    """
    Get or create global configuration instance.

    Args:
        env_file: Path to .env file
        settings_file: Path to settings.yaml file

    Returns:
        Configuration instance
    """
    global _config
    if _config is None:
        _config = Config(env_file=env_file, settings_file=settings_file)
    return _config


def reset_config() -> None:
    """Drop the global configuration so the next get_config() reloads it."""
    global _config
    _config = None
