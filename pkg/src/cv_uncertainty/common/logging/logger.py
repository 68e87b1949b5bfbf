import logging
from contextvars import ContextVar
from typing import Dict

# The context variable that will store the unique ID of the scenario run / CLI invocation.
# NOTE: the CLI sets run_id_var at the start of each command; library calls outside the CLI log "N/A"
run_id_var: ContextVar[str] = ContextVar("run_id", default="")

class RunIdFilter(logging.Filter):
    """
    A logging filter that injects the current run id from the context variable
    into the log record.
    """
    def filter(self, record):
        record.run_id = run_id_var.get() or "N/A"
        return True

def get_run_id() -> str:
    """
    Retrieves the current run ID from the context variable.
    """
    return run_id_var.get()

class CustomLogger:
    """A factory class for creating and configuring loggers."""
    _loggers: Dict[str, logging.Logger] = {}

    @classmethod
    def get_logger(cls, name: str = "cv_uncertainty", log_level: int = logging.INFO) -> logging.Logger:
        if name in cls._loggers:
            return cls._loggers[name]

        logger = logging.getLogger(name)
        logger.setLevel(log_level)

        if logger.handlers:
            logger.handlers.clear()

        logger.addFilter(RunIdFilter())

        log_format = logging.Formatter(
            '%(asctime)s - [%(run_id)s] - [%(filename)s:%(lineno)d] - %(name)s - %(levelname)s - %(message)s',
            '%Y-%m-%d %H:%M:%S'
        )

        # NOTE: stderr, so CSV / JSON-lines written to stdout by the CLI stay clean
        console_handler = logging.StreamHandler()
        console_handler.setLevel(log_level)
        console_handler.setFormatter(log_format)

        logger.addHandler(console_handler)
        # NOTE: no propagation to the root logger; tests that inspect records attach their own handler
        logger.propagate = False

        cls._loggers[name] = logger
        return logger

    @classmethod
    def set_level(cls, log_level: int | str) -> None:
        """Re-levels every logger created by the factory, e.g. from the CLI --log-level flag."""
        for cached in cls._loggers.values():
            cached.setLevel(log_level)
            for handler in cached.handlers:
                handler.setLevel(log_level)

# NOTE: import this logger to log with logger.info("message"), .warning("message"), .error("message")
logger = CustomLogger.get_logger()
