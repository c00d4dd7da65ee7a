"""Configuration loader for YAML files and environment overrides."""

import logging
import os
from dataclasses import dataclass, field, replace
from pathlib import Path
from typing import Any, Dict, Optional, Union

import yaml
from dotenv import load_dotenv

from src.errors import ConfigError
from src.numeric.tolerance import ToleranceConfig

logger = logging.getLogger("jbtriple.config")

PROJECT_ROOT = Path(__file__).parent.parent.parent
DEFAULT_SETTINGS_PATH = "config/workbench.yaml"
DEFAULT_CLAIMS_PATH = "config/claims.yaml"

ENV_PREFIX = "JBTRIPLE_"


def load_yaml(filepath: Path) -> Dict[str, Any]:
    """Load YAML file and return as dictionary.

    Args:
        filepath: Path to YAML file.

    Returns:
        Dictionary with YAML contents.

    Raises:
        FileNotFoundError: If file doesn't exist.
        yaml.YAMLError: If YAML is malformed.
    """
    if not filepath.exists():
        raise FileNotFoundError(f"Config file not found: {filepath}")

    try:
        with open(filepath, "r", encoding="utf-8") as f:
            config = yaml.safe_load(f)
    except yaml.YAMLError as e:
        logger.error(f"Error parsing YAML file {filepath}: {e}")
        raise

    if config is None:
        logger.warning(f"YAML file is empty: {filepath}")
        return {}

    return config


def load_yaml_config(filepath: Union[str, Path]) -> Dict[str, Any]:
    """Load YAML file from string path or Path object.

    Relative paths are resolved against the project root, so callers can
    pass ``"config/workbench.yaml"`` from any working directory.
    """
    path = Path(filepath)
    if not path.is_absolute():
        path = PROJECT_ROOT / path
    return load_yaml(path)


@dataclass(frozen=True)
class SamplingConfig:
    """Budgets for sampled verdicts and tripotent search."""

    abelian_samples: int = 64
    range_max_iter: int = 60
    extend_max_attempts: int = 5
    finiteness_trials: int = 100


@dataclass(frozen=True)
class CampaignConfig:
    """Defaults for ``campaign run``."""

    seed: int = 20240601
    trials: int = 200
    workers: int = 1
    record_timing: bool = False


@dataclass(frozen=True)
class WorkbenchSettings:
    """Parsed contents of ``config/workbench.yaml`` plus overrides.

    Attributes:
        tolerance: Equality, rank and eigenvalue-cluster tolerances.
        sampling: Sample counts and iteration budgets.
        campaign: Campaign seed, trial count, worker count, timing switch.
        log_level: Level name for ``setup_logger``.
        log_file: Optional log file path.
        claims_path: Location of the suite manifest.
    """

    tolerance: ToleranceConfig = field(default_factory=ToleranceConfig)
    sampling: SamplingConfig = field(default_factory=SamplingConfig)
    campaign: CampaignConfig = field(default_factory=CampaignConfig)
    log_level: str = "INFO"
    log_file: Optional[str] = None
    claims_path: str = DEFAULT_CLAIMS_PATH


def _parse_config(raw: Dict[str, Any]) -> WorkbenchSettings:
    """Parse a raw YAML mapping into ``WorkbenchSettings``."""
    tol_raw = raw.get("tolerance", {}) or {}
    sampling_raw = raw.get("sampling", {}) or {}
    campaign_raw = raw.get("campaign", {}) or {}
    logging_raw = raw.get("logging", {}) or {}

    try:
        tolerance = ToleranceConfig(
            eq_tol=float(tol_raw.get("eq_tol", 1e-9)),
            rank_tol=float(tol_raw.get("rank_tol", 1e-8)),
            eig_cluster_tol=float(tol_raw.get("eig_cluster_tol", 1e-6)),
        )
        sampling = SamplingConfig(
            abelian_samples=int(sampling_raw.get("abelian_samples", 64)),
            range_max_iter=int(sampling_raw.get("range_max_iter", 60)),
            extend_max_attempts=int(sampling_raw.get("extend_max_attempts", 5)),
            finiteness_trials=int(sampling_raw.get("finiteness_trials", 100)),
        )
        campaign = CampaignConfig(
            seed=int(campaign_raw.get("seed", 20240601)),
            trials=int(campaign_raw.get("trials", 200)),
            workers=int(campaign_raw.get("workers", 1)),
            record_timing=bool(campaign_raw.get("record_timing", False)),
        )
    except (TypeError, ValueError) as e:
        if isinstance(e, ConfigError):
            raise
        raise ConfigError(f"Invalid configuration value: {e}") from e

    if campaign.trials < 1 or campaign.workers < 1:
        raise ConfigError("campaign.trials and campaign.workers must be positive")
    if min(vars(sampling).values()) < 1:
        raise ConfigError(f"sampling budgets must be positive, got {vars(sampling)}")

    return WorkbenchSettings(
        tolerance=tolerance,
        sampling=sampling,
        campaign=campaign,
        log_level=str(logging_raw.get("level", "INFO")),
        log_file=logging_raw.get("file"),
        claims_path=str(raw.get("claims", DEFAULT_CLAIMS_PATH)),
    )


def _apply_env(settings: WorkbenchSettings) -> WorkbenchSettings:
    """Apply ``JBTRIPLE_*`` environment overrides."""
    overrides: Dict[str, str] = {
        key[len(ENV_PREFIX):].lower(): value
        for key, value in os.environ.items()
        if key.startswith(ENV_PREFIX) and value != ""
    }
    if not overrides:
        return settings

    logger.debug(f"Environment overrides: {sorted(overrides)}")
    try:
        tolerance = settings.tolerance.with_overrides(
            eq_tol=_float_or_none(overrides.get("eq_tol")),
            rank_tol=_float_or_none(overrides.get("rank_tol")),
            eig_cluster_tol=_float_or_none(overrides.get("eig_cluster_tol")),
        )
        campaign = settings.campaign
        if "seed" in overrides:
            campaign = replace(campaign, seed=int(overrides["seed"]))
        if "trials" in overrides:
            campaign = replace(campaign, trials=int(overrides["trials"]))
    except ValueError as e:
        if isinstance(e, ConfigError):
            raise
        raise ConfigError(f"Invalid environment override: {e}") from e

    return replace(
        settings,
        tolerance=tolerance,
        campaign=campaign,
        log_level=overrides.get("log_level", settings.log_level),
    )


def _float_or_none(value: Optional[str]) -> Optional[float]:
    return None if value is None else float(value)


def load_settings(
    filepath: Union[str, Path, None] = None,
    use_env: bool = True,
) -> WorkbenchSettings:
    """Load workbench settings.

    Precedence is environment (after ``load_dotenv``) over YAML over the
    dataclass defaults; CLI flags are applied on top by the caller.

    Args:
        filepath: YAML file; defaults to ``config/workbench.yaml``.
        use_env: Read ``.env`` and ``JBTRIPLE_*`` variables.

    Returns:
        Parsed settings.

    Raises:
        ConfigError: On invalid values.
    """
    raw = load_yaml_config(filepath or DEFAULT_SETTINGS_PATH)
    settings = _parse_config(raw)
    if use_env:
        load_dotenv()
        settings = _apply_env(settings)
    return settings
