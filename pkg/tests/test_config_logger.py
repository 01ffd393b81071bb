"""Tests for settings persistence, the run logger and time limits."""

import time

import pytest

import core
from core.logger import Logger


@pytest.mark.unit
def test_defaults_without_config_file(isolated_settings):
    settings = core.load_settings()
    assert settings["max_k"] == core.DEFAULT_MAX_K
    assert settings["jobs"] == 1
    assert settings["debug"] is False


@pytest.mark.unit
def test_saved_values_are_coerced(isolated_settings):
    data_root, _ = isolated_settings
    core.save_setting("timeout_ms", "2500")
    core.save_setting("debug", "yes")
    settings = core.load_settings()
    assert settings["timeout_ms"] == 2500
    assert settings["debug"] is True
    assert (data_root / "config.json").exists()


@pytest.mark.unit
def test_unknown_setting_is_rejected(isolated_settings):
    with pytest.raises(KeyError):
        core.save_setting("colour", "blue")
    with pytest.raises(ValueError):
        core.save_setting("jobs", "many")


@pytest.mark.unit
def test_corrupt_config_falls_back_to_defaults(isolated_settings):
    data_root, _ = isolated_settings
    data_root.mkdir(parents=True)
    (data_root / "config.json").write_text("{not json")
    assert core.load_settings()["max_k"] == core.DEFAULT_MAX_K

    (data_root / "config.json").write_text('{"max_k": 4, "stray": 1}')
    settings = core.load_settings()
    assert settings["max_k"] == 4
    assert "stray" not in settings


@pytest.mark.unit
def test_logger_keeps_recent_entries():
    log = Logger()
    log.max_logs = 3
    for i in range(5):
        log.info(f"message {i}")
    assert len(log.logs) == 3
    recent = log.get_recent_logs(2)
    assert recent[0].endswith("INFO: message 3")
    assert recent[1].endswith("INFO: message 4")


@pytest.mark.unit
def test_debug_entries_need_debug_mode(tmp_path):
    log = Logger()
    log.debug("hidden")
    assert log.logs == []
    log.configure(None, debug=True)
    log.debug("shown")
    assert log.get_recent_logs()[-1].endswith("DEBUG: shown")


@pytest.mark.unit
def test_log_file_tail(tmp_path):
    log = Logger()
    log_file = tmp_path / "logs" / "run.log"
    log.configure(log_file)
    log.success("first")
    log.error("second")
    assert log_file.exists()
    assert log.tail(1) == [log.tail(5)[-1]]
    assert log.tail(5)[-1].endswith("ERROR: second")

    log.clear()
    assert log.get_recent_logs() == []
    assert len(log.tail(5)) == 2


@pytest.mark.unit
def test_deadline_nesting_keeps_the_tighter_limit():
    with core.time_limit(60000):
        with core.time_limit(1):
            time.sleep(0.01)
            with pytest.raises(core.SearchTimeout):
                core.check_deadline()
        core.check_deadline()
    core.check_deadline()


@pytest.mark.unit
@pytest.mark.parametrize("ms", [None, 0, -5])
def test_non_positive_limit_disables_the_check(ms):
    with core.time_limit(ms):
        time.sleep(0.002)
        core.check_deadline()


@pytest.mark.unit
def test_context_fields_are_attached(tmp_path):
    log = Logger()
    log_file = tmp_path / "run.log"
    log.configure(log_file)
    with log.context(graph="abc123"):
        with log.context(command="reduce"):
            log.warning("no contractible edge")
        log.info("inside")
    log.info("outside")
    lines = log_file.read_text().splitlines()
    assert lines[0].endswith("WARNING: no contractible edge graph=abc123 command=reduce")
    assert lines[1].endswith("INFO: inside graph=abc123")
    assert lines[2].endswith("INFO: outside")


@pytest.mark.unit
def test_remaining_time_is_handed_on():
    assert core.remaining_ms() is None
    with core.time_limit(60000):
        assert 0 < core.remaining_ms() <= 60000
        with core.time_limit(1):
            time.sleep(0.01)
            assert core.remaining_ms() == 1
