# shared fixtures for the test suite
import logging

import numpy as np
import pytest

from cv_uncertainty.common.logging.logger import CustomLogger

@pytest.fixture
def rng() -> np.random.Generator:
    return np.random.default_rng(20240617)

class _ListHandler(logging.Handler):
    def __init__(self):
        super().__init__(level=logging.DEBUG)
        self.records: list[logging.LogRecord] = []

    def emit(self, record):
        self.records.append(record)

@pytest.fixture
def log_records():
    """
    Records emitted by the package logger during the test.
    NOTE: the package logger does not propagate, so pytest's caplog never sees its records.
    """
    logger = CustomLogger.get_logger()
    handler = _ListHandler()
    logger.addHandler(handler)
    try:
        yield handler.records
    finally:
        logger.removeHandler(handler)
