"""Tests for settings, logging and the reseeding retry."""

import sys
from pathlib import Path

# Add project root to Python path
sys.path.insert(0, str(Path(__file__).parent.parent))

import logging

import numpy as np
import pytest

from src.errors import ConfigError, NoConvergence
from src.utils.config_loader import load_settings, load_yaml_config
from src.utils.logger import get_logger, log_event, setup_logger
from src.utils.retry import with_retry


class TestSettings:
    """Tests for load_settings."""

    def test_shipped_settings(self):
        """Test the defaults in config/workbench.yaml."""
        settings = load_settings(use_env=False)
        assert settings.tolerance.eq_tol == 1e-9
        assert settings.campaign.seed == 20240601
        assert settings.campaign.trials == 200
        assert settings.campaign.record_timing is False
        assert settings.claims_path == "config/claims.yaml"

    def test_environment_overrides(self, monkeypatch):
        """Test that JBTRIPLE_* variables override the file."""
        monkeypatch.setenv("JBTRIPLE_EQ_TOL", "1e-7")
        monkeypatch.setenv("JBTRIPLE_SEED", "11")
        monkeypatch.setenv("JBTRIPLE_LOG_LEVEL", "DEBUG")
        settings = load_settings()
        assert settings.tolerance.eq_tol == 1e-7
        assert settings.campaign.seed == 11
        assert settings.log_level == "DEBUG"

    def test_bad_environment_value(self, monkeypatch):
        """Test that an unparsable override raises ConfigError."""
        monkeypatch.setenv("JBTRIPLE_TRIALS", "many")
        with pytest.raises(ConfigError):
            load_settings()

    @pytest.mark.parametrize(
        "text",
        [
            "tolerance:\n  rank_tol: -1\n",
            "campaign:\n  trials: 0\n",
            "sampling:\n  abelian_samples: lots\n",
            "sampling:\n  extend_max_attempts: 0\n",
        ],
    )
    def test_invalid_files(self, tmp_path, text):
        """Test that invalid values in the file raise ConfigError."""
        path = tmp_path / "workbench.yaml"
        path.write_text(text, encoding="utf-8")
        with pytest.raises(ConfigError):
            load_settings(path, use_env=False)

    def test_empty_file_gives_defaults(self, tmp_path):
        """Test that an empty YAML file falls back to the dataclass defaults."""
        path = tmp_path / "empty.yaml"
        path.write_text("", encoding="utf-8")
        assert load_settings(path, use_env=False).sampling.abelian_samples == 64

    def test_missing_file(self, tmp_path):
        """Test that a missing file raises FileNotFoundError."""
        with pytest.raises(FileNotFoundError):
            load_yaml_config(tmp_path / "nope.yaml")


class TestLogging:
    """Tests for the logger helpers."""

    def test_children_share_the_root(self):
        """Test that module loggers live under jbtriple."""
        assert get_logger("campaign").name == "jbtriple.campaign"
        assert get_logger("jbtriple.cli").name == "jbtriple.cli"

    def test_log_event_appends_extra(self, caplog):
        """Test that structured context is appended to the message."""
        logger = get_logger("test")
        with caplog.at_level(logging.INFO, logger="jbtriple"):
            log_event(logger, logging.INFO, "Suite met", extra={"suite": "x"})
        assert "Suite met | extra={'suite': 'x'}" in caplog.text

    def test_setup_logger_file(self, tmp_path):
        """Test that a log file is created and handlers are not duplicated."""
        log_file = tmp_path / "logs" / "run.log"
        setup_logger(log_level="DEBUG", log_file=log_file)
        logger = setup_logger(log_level="DEBUG", log_file=log_file)
        assert len(logger.handlers) == 2
        get_logger("test").debug("hello")
        assert "hello" in log_file.read_text(encoding="utf-8")
        setup_logger(log_level="WARNING")


class TestRetry:
    """Tests for with_retry."""

    def test_reseeds_until_success(self):
        """Test that each retry draws from a spawned generator."""
        seen = []

        @with_retry((NoConvergence,), max_attempts=3)
        def sampler(*, rng):
            seen.append(rng)
            if len(seen) < 3:
                raise NoConvergence("stalled")
            return rng.random()

        first = sampler(rng=np.random.default_rng(0))
        assert len(seen) == 3
        assert seen[0] is not seen[1]

        seen.clear()
        assert sampler(rng=np.random.default_rng(0)) == first

    def test_gives_up(self):
        """Test that the last failure propagates."""

        @with_retry((NoConvergence,), max_attempts=2)
        def sampler(*, rng):
            raise NoConvergence("stalled")

        with pytest.raises(NoConvergence):
            sampler(rng=np.random.default_rng(0))

    def test_other_errors_are_not_retried(self):
        """Test that unlisted exceptions propagate at once."""
        calls = []

        @with_retry((NoConvergence,))
        def sampler(*, rng):
            calls.append(1)
            raise KeyError("x")

        with pytest.raises(KeyError):
            sampler(rng=np.random.default_rng(0))
        assert len(calls) == 1
