# command-line entry point: cv-uncertainty <command> [options]
import argparse
import json
import sys
from pathlib import Path
from typing import Optional, Sequence

from cv_uncertainty.cli.commands.runner import run_scenario, write_output
from cv_uncertainty.cli.commands.validate import failed_checks, run_validate
from cv_uncertainty.cli.fixtures.scenarios import SCENARIOS, ScenarioName
from cv_uncertainty.cli.request_models.scenario_config import (
    CGSpec,
    EntangleCriterion,
    EntangleSpec,
    MubSpec,
    OutputSpec,
    ScenarioConfig,
    ScenarioTask,
    SweepSpec,
)
from cv_uncertainty.common.errors import CVUncertaintyError, ScenarioConfigError
from cv_uncertainty.common.logging.logger import CustomLogger, logger, run_id_var
from cv_uncertainty.config.app_config import get_service_settings

EXIT_OK = 0
EXIT_INTERNAL_ERROR = 1
EXIT_CONFIG_ERROR = 2

def _common_flags() -> argparse.ArgumentParser:
    parent = argparse.ArgumentParser(add_help=False)
    parent.add_argument("--config", type=Path, help="scenario JSON document")
    parent.add_argument("--scenario", choices=[name.value for name in ScenarioName], help="bundled scenario")
    parent.add_argument("--seed", type=int, help="overrides the scenario seed")
    parent.add_argument("--out", type=Path, help="artifact directory (JSON lines to stdout when omitted)")
    parent.add_argument("--log-level", default=None, help="DEBUG, INFO, WARNING, ...")
    return parent

def build_parser() -> argparse.ArgumentParser:
    parent = _common_flags()
    parser = argparse.ArgumentParser(prog="cv-uncertainty", description="Coarse-grained uncertainty relations for CV states")
    sub = parser.add_subparsers(dest="command", required=True)

    sub.add_parser("run", parents=[parent], help="run a scenario config or a bundled scenario")

    scan = sub.add_parser("ur-scan", parents=[parent], help="evaluate uncertainty relations over bin widths")
    scan.add_argument("--delta", type=float)
    scan.add_argument("--small-delta", type=float)

    mub = sub.add_parser("mub-check", parents=[parent], help="periodic coarse-graining unbiasedness")
    mub.add_argument("--d", type=int)
    mub.add_argument("--Tu", type=float)
    mub.add_argument("--Tv", type=float)
    mub.add_argument("--numeric", action="store_true")
    mub.add_argument("--trials", type=int, default=4)

    ent = sub.add_parser("entangle", parents=[parent], help="PPT witnesses on a two-mode state")
    ent.add_argument("--state", help="state spec as JSON text or a path to a JSON file")
    ent.add_argument("--criterion", choices=[c.value for c in EntangleCriterion], action="append")
    ent.add_argument("--delta", type=float)
    ent.add_argument("--small-delta", type=float)

    r00 = sub.add_parser("r00-table", parents=[parent], help="R_00(x, 1) with its oracle and envelopes")
    r00.add_argument("--start", "--min", type=float, default=0.05)
    r00.add_argument("--stop", "--max", type=float, default=20.0)
    r00.add_argument("--num", "--steps", type=int, default=32)

    sub.add_parser("validate", parents=[parent], help="run the smoke set of identities and examples")
    return parser

# =====================================================================
# Building configs from flags
# =====================================================================

def _base_config(args: argparse.Namespace) -> Optional[ScenarioConfig]:
    if args.config is not None:
        return ScenarioConfig.from_file(args.config)
    if args.scenario is not None:
        return SCENARIOS[ScenarioName(args.scenario)]()
    return None

def _state_spec(text: str) -> dict:
    path = Path(text)
    raw = path.read_text(encoding="utf-8") if path.is_file() else text
    try:
        return json.loads(raw)
    except json.JSONDecodeError as e:
        raise ScenarioConfigError(f"--state:{e.lineno}:{e.colno}: invalid JSON ({e.msg})") from e

def _with_widths(config: ScenarioConfig, delta: Optional[float], small_delta: Optional[float]) -> ScenarioConfig:
    if delta is None and small_delta is None:
        return config
    base = config.cg.widths if config.cg is not None else (delta or small_delta, None)
    cg = CGSpec(delta=delta or base[0], small_delta=small_delta or base[1])
    return config.model_copy(update={"cg": cg})

def config_from_args(args: argparse.Namespace) -> ScenarioConfig:
    config = _base_config(args)
    command = args.command
    if command == "ur-scan":
        config = config or SCENARIOS[ScenarioName.VACUUM_SATURATION]()
        config = _with_widths(config, args.delta, args.small_delta)
    elif command == "mub-check" and config is None:
        if args.d is None or args.Tu is None or args.Tv is None:
            raise ScenarioConfigError("mub-check needs --d, --Tu and --Tv (or --config / --scenario)")
        config = ScenarioConfig(
            name="mub-check",
            task=ScenarioTask.MUB_CHECK,
            mub=MubSpec(d=args.d, Tu=args.Tu, Tv=args.Tv, numeric=args.numeric, trials=args.trials),
        )
    elif command == "entangle" and config is None:
        if args.state is None or args.delta is None:
            raise ScenarioConfigError("entangle needs --state and --delta (or --config / --scenario)")
        raw = {
            "name": "entangle",
            "task": ScenarioTask.ENTANGLE.value,
            "state": _state_spec(args.state),
            "cg": {"delta": args.delta, "small_delta": args.small_delta or args.delta},
            "entangle": EntangleSpec(criteria=args.criterion or ["variance", "entropy"]).model_dump(mode="json"),
        }
        config = ScenarioConfig.from_json(json.dumps(raw), source="<flags>")
    elif command == "r00-table" and config is None:
        config = ScenarioConfig(
            name="r00-table",
            task=ScenarioTask.R00_TABLE,
            sweep=SweepSpec(start=args.start, stop=args.stop, num=args.num),
            outputs=OutputSpec(table="r00.csv"),
        )
    if config is None:
        raise ScenarioConfigError(f"'{command}' needs --config or --scenario")
    if args.seed is not None:
        config = config.model_copy(update={"seed": args.seed})
    return config

# =====================================================================
# Entry point
# =====================================================================

def _validate(args: argparse.Namespace) -> int:
    token = run_id_var.set("validate")
    try:
        output = run_validate()
        write_output("validate", output, OutputSpec(reports="checks.jsonl", table="checks.csv"), args.out, sys.stdout)
    finally:
        run_id_var.reset(token)
    failed = failed_checks(output)
    logger.info(f"validate: {len(output.records) - failed}/{len(output.records)} checks passed")
    return EXIT_OK if failed == 0 else EXIT_INTERNAL_ERROR

def main(argv: Optional[Sequence[str]] = None) -> int:
    args = build_parser().parse_args(argv)
    CustomLogger.set_level((args.log_level or get_service_settings().LOG_LEVEL).upper())
    try:
        if args.command == "validate":
            return _validate(args)
        config = config_from_args(args)
        result = run_scenario(config, args.out, sys.stdout)
    except ScenarioConfigError as e:
        logger.error(f"configuration error: {e}")
        return EXIT_CONFIG_ERROR
    except CVUncertaintyError as e:
        logger.error(f"{type(e).__name__}: {e}")
        return EXIT_INTERNAL_ERROR
    for artifact in result.artifacts:
        logger.info(f"wrote {artifact}")
    return EXIT_OK

if __name__ == "__main__":
    sys.exit(main())
