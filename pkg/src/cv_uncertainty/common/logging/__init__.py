from .logger import logger, CustomLogger, run_id_var, get_run_id

__all__ = ["logger", "CustomLogger", "run_id_var", "get_run_id"]
