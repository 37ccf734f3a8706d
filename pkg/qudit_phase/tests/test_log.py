import logging

import pytest

from qudit_phase.fileio import add_check, new_report
from qudit_phase.log import CHECK_FAILED, INVARIANT_VIOLATED, OK, log_outcome, outcome_status


@pytest.fixture
def report():
    report = new_report('harper', {'seed': 42, 'd': 3})
    add_check(report, 'eigen_residual', 1e-15, 1e-10, True, d=3)
    return report


def test_outcome_ok(report, caplog):
    logger = logging.getLogger('qudit_phase.test')
    with caplog.at_level(logging.DEBUG, logger='qudit_phase.test'):
        assert log_outcome(logger, report, ['harper.json'], elapsed=0.5) == OK
    record, = caplog.records
    assert record.levelno == logging.INFO
    assert record.getMessage() == "harper d=3 seed=42: 1 checks, 0 failed, 1 files (500.00ms)"


def test_outcome_nothing_written_is_debug(report, caplog):
    logger = logging.getLogger('qudit_phase.test')
    with caplog.at_level(logging.DEBUG, logger='qudit_phase.test'):
        log_outcome(logger, report, [])
    assert caplog.records[0].levelno == logging.DEBUG


def test_informational_failure(report, caplog):
    add_check(report, 'zero_set', 1.0, 0.0, False, d=3, informational=True)
    assert outcome_status(report) == CHECK_FAILED
    logger = logging.getLogger('qudit_phase.test')
    with caplog.at_level(logging.DEBUG, logger='qudit_phase.test'):
        log_outcome(logger, report, ['harper.json'])
    record, = caplog.records
    assert record.levelno == logging.WARNING
    assert record.getMessage().endswith("failing=zero_set")


def test_violated_invariant(report, caplog):
    add_check(report, 'zero_set', 1.0, 0.0, False, d=3, informational=True)
    add_check(report, 'traceless', 1.0, 1e-12, False, d=3)
    assert outcome_status(report) == INVARIANT_VIOLATED
    logger = logging.getLogger('qudit_phase.test')
    with caplog.at_level(logging.DEBUG, logger='qudit_phase.test'):
        log_outcome(logger, report, [])
    record, = caplog.records
    assert record.levelno == logging.CRITICAL
    assert "failing=traceless, zero_set" in record.getMessage()
