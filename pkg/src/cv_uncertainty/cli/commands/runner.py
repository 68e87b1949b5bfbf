# dispatch of a scenario to its command and writing of the artifacts
import csv
import io
import uuid
from pathlib import Path
from typing import Optional, TextIO
from pydantic import BaseModel, ConfigDict

from cv_uncertainty.cli.commands.entangle import run_entangle
from cv_uncertainty.cli.commands.mub_check import run_mub_check
from cv_uncertainty.cli.commands.records import ScenarioOutput
from cv_uncertainty.cli.commands.tables import run_bound_curves, run_r00_table
from cv_uncertainty.cli.commands.ur_scan import run_ur_scan
from cv_uncertainty.cli.request_models.scenario_config import ScenarioConfig, ScenarioTask
from cv_uncertainty.common.logging.logger import logger, run_id_var

TASKS = {
    ScenarioTask.UR_SCAN: run_ur_scan,
    ScenarioTask.MUB_CHECK: run_mub_check,
    ScenarioTask.ENTANGLE: run_entangle,
    ScenarioTask.R00_TABLE: run_r00_table,
    ScenarioTask.BOUND_CURVES: run_bound_curves,
}

class ScenarioResult(BaseModel):
    model_config = ConfigDict(arbitrary_types_allowed=True)

    name: str
    output: ScenarioOutput
    artifacts: list[str] = []
    violations: int = 0

def table_text(output: ScenarioOutput) -> str:
    buffer = io.StringIO()
    writer = csv.writer(buffer, lineterminator="\n")
    writer.writerow(output.header)
    writer.writerows(output.rows)
    return buffer.getvalue()

def write_output(name: str, output: ScenarioOutput, config_outputs, out_dir: Optional[Path], stream: TextIO) -> list[str]:
    """Writes JSON lines (and the CSV table) under out_dir, or the JSON lines to `stream` when out_dir is None."""
    lines = output.lines()
    if out_dir is None:
        for line in lines:
            stream.write(line + "\n")
        return []
    target = out_dir / name
    target.mkdir(parents=True, exist_ok=True)
    artifacts = []
    reports_path = target / config_outputs.reports
    reports_path.write_text("".join(line + "\n" for line in lines), encoding="utf-8")
    artifacts.append(str(reports_path))
    if config_outputs.table and output.header:
        table_path = target / config_outputs.table
        table_path.write_text(table_text(output), encoding="utf-8")
        artifacts.append(str(table_path))
    return artifacts

def run_scenario(config: ScenarioConfig, out_dir: Optional[Path] = None, stream: Optional[TextIO] = None) -> ScenarioResult:
    """
    Runs one scenario under its own run id. UR violations are reported as data; only
    configuration or numerical failures raise.
    """
    # NOTE: tag every log line of this run, like a request id in a server middleware
    token = run_id_var.set(f"scenario:{config.name}:{uuid.uuid4().hex[:8]}")
    try:
        logger.info(f"running scenario '{config.name}' ({config.task.value}, seed={config.seed})")
        output = TASKS[config.task](config)
        artifacts = write_output(config.name, output, config.outputs, out_dir, stream or io.StringIO())
        result = ScenarioResult(name=config.name, output=output, artifacts=artifacts, violations=output.violations())
        logger.info(f"scenario '{config.name}': {len(output.records)} records, {result.violations} violated")
        return result
    finally:
        run_id_var.reset(token)
