# r00-table and bound-curves: special-function and bound tables for plotting
import math
from concurrent.futures import ThreadPoolExecutor
from pydantic import BaseModel, ConfigDict

from cv_uncertainty.cli.commands.records import ScenarioOutput
from cv_uncertainty.cli.request_models.scenario_config import ScenarioConfig
from cv_uncertainty.config.app_config import get_service_settings
from cv_uncertainty.special_fn.envelopes import eps_alpha, schurmann_eps
from cv_uncertainty.special_fn.prolate import half_r00_squared, r00, r00_from_eigenvalue
from cv_uncertainty.ur_bounds.curves import BoundCurveRow, bound_curves

class R00Row(BaseModel):
    model_config = ConfigDict(frozen=True)

    x: float
    r00: float
    half_r00_sq: float
    # (2x / pi) R00^2, tends to 1 from below
    asymptote_ratio: float
    r00_oracle: float
    eps_1: float
    schurmann_eps: float

    @classmethod
    def header(cls) -> list[str]:
        return list(cls.model_fields)

def _r00_row(x: float) -> R00Row:
    value = r00(x)
    return R00Row(
        x=x,
        r00=value,
        half_r00_sq=half_r00_squared(x),
        asymptote_ratio=2.0 * x / math.pi * value ** 2,
        r00_oracle=r00_from_eigenvalue(x),
        eps_1=eps_alpha(1.0, x),
        schurmann_eps=schurmann_eps(x),
    )

def run_r00_table(config: ScenarioConfig) -> ScenarioOutput:
    xs = config.sweep.points()
    with ThreadPoolExecutor(max_workers=get_service_settings().SWEEP_WORKERS) as pool:
        rows = list(pool.map(_r00_row, xs))
    return ScenarioOutput(
        records=rows,
        header=R00Row.header(),
        rows=[[getattr(row, name) for name in R00Row.header()] for row in rows],
    )

def run_bound_curves(config: ScenarioConfig) -> ScenarioOutput:
    rows = bound_curves(config.sweep.points(), config.alpha)
    header = BoundCurveRow.header()
    return ScenarioOutput(
        records=rows,
        header=header,
        rows=[["" if getattr(row, name) is None else getattr(row, name) for name in header] for row in rows],
    )
