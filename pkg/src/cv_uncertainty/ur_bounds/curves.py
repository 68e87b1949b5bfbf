# bound-versus-Gamma curves for plotting and tabulation
from concurrent.futures import ThreadPoolExecutor
from typing import Iterable, Optional
from pydantic import BaseModel, ConfigDict

from cv_uncertainty.common.logging.logger import logger
from cv_uncertainty.config.app_config import get_service_settings
from cv_uncertainty.ur_bounds.coarse_grained import (
    bialynicki_bound,
    cg_variance_factor,
    cgrur_bound,
    k_bound,
    schurmann_bound,
)

class BoundCurveRow(BaseModel):
    """All coarse-grained lower bounds at one Gamma (variance bound in units of hbar^2 gamma^2 / 4)."""
    model_config = ConfigDict(frozen=True)

    gamma_capital: float
    cgrur: float
    bialynicki: float
    k_bound: float
    cg_variance: float
    schurmann: Optional[float] = None

    @classmethod
    def header(cls) -> list[str]:
        return list(cls.model_fields)

def bound_row(gamma_capital: float, alpha: float = 1.0) -> BoundCurveRow:
    return BoundCurveRow(
        gamma_capital=gamma_capital,
        cgrur=cgrur_bound(gamma_capital, alpha),
        bialynicki=bialynicki_bound(gamma_capital, alpha),
        k_bound=k_bound(gamma_capital),
        cg_variance=cg_variance_factor(gamma_capital),
        # the Schurmann envelope only exists for the Shannon case
        schurmann=schurmann_bound(gamma_capital) if alpha == 1.0 else None,
    )

def bound_curves(gammas: Iterable[float], alpha: float = 1.0, workers: Optional[int] = None) -> list[BoundCurveRow]:
    """
    One row per Gamma, in input order. Rows are evaluated on a thread pool; the output is
    identical to a sequential evaluation.
    """
    gammas = [float(g) for g in gammas]
    workers = workers or get_service_settings().SWEEP_WORKERS
    logger.info(f"bound_curves: {len(gammas)} points, alpha={alpha}, workers={workers}")
    if workers <= 1:
        return [bound_row(g, alpha) for g in gammas]
    with ThreadPoolExecutor(max_workers=workers) as pool:
        return list(pool.map(lambda g: bound_row(g, alpha), gammas))
