import pytest

from gamevolt.logging import LoggingSettings, get_logger


def test_records_go_to_stderr_with_long_level_names(capsys):
    logger = get_logger(LoggingSettings(minimum_level="INFO"), name="two-stream-logging-a")

    logger.info("hello")

    captured = capsys.readouterr()
    assert captured.out == ""
    assert "[INFORMATION] two-stream-logging-a" in captured.err
    assert captured.err.rstrip().endswith("hello")


def test_levels_below_the_minimum_are_dropped(capsys):
    logger = get_logger(LoggingSettings(minimum_level="WARNING"), name="two-stream-logging-b")

    logger.info("quiet")
    logger.trace("quieter")
    logger.warning("loud")

    err = capsys.readouterr().err
    assert "quiet" not in err
    assert "loud" in err


def test_trace_and_verbose_are_emitted_at_trace(capsys):
    logger = get_logger(LoggingSettings(minimum_level="TRACE"), name="two-stream-logging-c")

    logger.trace("batch 1")
    logger.verbose("clip a")

    err = capsys.readouterr().err
    assert "[TRACE]" in err and "batch 1" in err
    assert "[VERBOSE]" in err and "clip a" in err


def test_verbose_flag_lowers_the_minimum_to_debug(capsys):
    logger = get_logger(LoggingSettings(minimum_level="ERROR"), name="two-stream-logging-d", verbose=True)

    logger.debug("details")

    assert "details" in capsys.readouterr().err


def test_records_carry_the_calling_module(capsys):
    logger = get_logger(LoggingSettings(minimum_level="TRACE"), name="two-stream-logging-e")

    logger.trace("where")

    assert "(test_logging)" in capsys.readouterr().err


def test_log_file_is_written(tmp_path):
    path = tmp_path / "logs" / "run.log"
    logger = get_logger(LoggingSettings(file_path=str(path)), name="two-stream-logging-f")

    logger.info("to file")
    for handler in logger.handlers:
        handler.flush()

    assert "to file" in path.read_text(encoding="utf-8")


def test_unknown_level_is_rejected():
    with pytest.raises(ValueError, match="Invalid minimum log level 'LOUD'"):
        get_logger(LoggingSettings(minimum_level="LOUD"), name="two-stream-logging-g")
