import logging

from threearc.utils.logger import CONSOLE_FORMAT, VERBOSE_CONSOLE_FORMAT, setup_logging


def test_verbose_logging_writes_the_file(tmp_path):
    log_file = tmp_path / "logs" / "run.log"
    setup_logging(verbose=True, log_file=str(log_file))
    root = logging.getLogger()
    assert root.level == logging.DEBUG
    assert root.handlers[0].formatter._fmt == VERBOSE_CONSOLE_FORMAT

    logging.info("Twin-visit repair finished after 2 rounds")
    for handler in root.handlers:
        handler.flush()
    text = log_file.read_text(encoding="utf-8")
    assert "INFO" in text
    assert "Twin-visit repair finished after 2 rounds" in text
    setup_logging()


def test_quiet_logging_replaces_handlers():
    setup_logging(verbose=True)
    setup_logging()
    root = logging.getLogger()
    assert root.level == logging.INFO
    assert len(root.handlers) == 1
    assert root.handlers[0].formatter._fmt == CONSOLE_FORMAT
