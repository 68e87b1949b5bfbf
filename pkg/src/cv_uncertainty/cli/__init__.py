from .request_models.scenario_config import ScenarioConfig, ScenarioTask
from .fixtures.scenarios import SCENARIOS, ScenarioName
from .commands.runner import run_scenario, ScenarioResult
