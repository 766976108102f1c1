"""
Tests for Logging Utilities
"""

import json

import pytest

from src.utils.logger import LOG_LEVEL_ENV, LoggerMixin, get_logger, setup_logger


@pytest.fixture
def log_file(tmp_path, monkeypatch):
    monkeypatch.delenv(LOG_LEVEL_ENV, raising=False)
    path = tmp_path / "logs" / "run.log"
    yield path
    setup_logger(log_level="WARNING", force=True)


class TestLogger:
    """Tests for sinks and component binding"""

    def test_component_in_file(self, log_file):
        """Test module loggers are tagged without the package prefix"""
        setup_logger(log_level="INFO", log_file=str(log_file), force=True)
        get_logger("src.maxwell.spectral").info("curl evaluated")

        text = log_file.read_text()
        assert "| maxwell.spectral |" in text
        assert "curl evaluated" in text

    def test_json_lines(self, log_file):
        """Test serialized records keep the component"""
        setup_logger(log_level="INFO", log_file=str(log_file), serialize=True, force=True)
        get_logger("Pipeline").info("suite done")

        records = [json.loads(line) for line in log_file.read_text().splitlines()]
        done = [r for r in records if r["record"]["message"] == "suite done"]
        assert done[0]["record"]["extra"]["component"] == "Pipeline"

    def test_environment_overrides_level(self, log_file, monkeypatch):
        """Test FIELDLAB_LOG_LEVEL beats the configured level"""
        monkeypatch.setenv(LOG_LEVEL_ENV, "error")
        setup_logger(log_level="DEBUG", log_file=str(log_file), force=True)
        log = get_logger("test")
        log.info("quiet")
        log.error("loud")

        text = log_file.read_text()
        assert "quiet" not in text
        assert "loud" in text

    def test_mixin_uses_class_name(self, log_file):
        """Test LoggerMixin binds the class name"""

        class Probe(LoggerMixin):
            pass

        setup_logger(log_level="INFO", log_file=str(log_file), force=True)
        Probe().logger.info("probing")
        assert "| Probe |" in log_file.read_text()


if __name__ == "__main__":
    pytest.main([__file__, "-v"])
