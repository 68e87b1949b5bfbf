# localized probe states and the numerical unbiasedness test of PCG pairs
from concurrent.futures import ThreadPoolExecutor
import math
from typing import Optional, Sequence
import numpy as np

from cv_uncertainty.coarse_grain.binning import pcg_probabilities
from cv_uncertainty.coarse_grain.types.cg_types import PeriodicCG
from cv_uncertainty.common.errors import ContractViolationError, DimensionMismatchError
from cv_uncertainty.common.logging.logger import logger
from cv_uncertainty.config.app_config import get_service_settings
from cv_uncertainty.states.fourier import conjugate_wavefunction, frft
from cv_uncertainty.states.types.state_types import GridWavefunction

DEFAULT_WIDTH_RATIO = 0.1
DEFAULT_COPIES = 3
# the numerical test localizes harder: Gaussian tails past 8 widths carry < 1e-15
TEST_WIDTH_RATIO = 1.0 / 16.0
MAX_WIDTH_RATIO = 0.25
LOCALIZATION = 1.0 - 1e-6
# grid sizing: cells per probe width, and target cells per bin of the conjugate variable
CELLS_PER_WIDTH = 4
CELLS_PER_CONJUGATE_BIN = 256
MIN_CELLS_PER_CONJUGATE_BIN = 128
MAX_GRID_EXPONENT = 18

def probe_centers(pcg: PeriodicCG, outcome: int, copies: int) -> np.ndarray:
    """Centers u_cen + (k0 + 1/2) s + n T of `copies` consecutive bins of outcome k0, around the origin."""
    ns = np.arange(copies) - copies // 2
    return pcg.u_cen + (outcome + 0.5) * pcg.s + ns * pcg.T

def probe_grid(
    pcg: PeriodicCG,
    conjugate_bin: float,
    inner_width: float,
    copies: int,
    hbar: float = 1.0,
) -> tuple[float, float, int]:
    """
    (x0, dx, N) with dx <= inner_width / 4, the probe comb inside the window, and
    momentum cells dp = 2 pi hbar / (N dx) small enough to put >= 128 cells in a bin of width conjugate_bin.
    N is a power of two, at most 2^18.
    """
    dx = inner_width / CELLS_PER_WIDTH
    span = 2.0 * (np.abs(probe_centers(pcg, 0, copies)).max() + pcg.T + 20.0 * inner_width)
    needed = max(2.0 * math.pi * hbar * CELLS_PER_CONJUGATE_BIN / (dx * conjugate_bin), span / dx)
    exponent = min(max(int(math.ceil(math.log2(needed))), 10), MAX_GRID_EXPONENT)
    n = 1 << exponent
    cells = conjugate_bin * n * dx / (2.0 * math.pi * hbar)
    if cells < MIN_CELLS_PER_CONJUGATE_BIN:
        logger.warning(f"probe_grid: only {cells:.1f} cells per conjugate bin at N=2^{exponent}")
    return -(n // 2) * dx, dx, n

def localized_probe_state(
    pcg: PeriodicCG,
    outcome: int,
    inner_width: Optional[float] = None,
    copies: int = DEFAULT_COPIES,
    hbar: float = 1.0,
    amplitudes: Optional[Sequence[float]] = None,
    phases: Optional[Sequence[float]] = None,
    window: Optional[tuple[float, float, int]] = None,
) -> GridWavefunction:
    """
    Normalized superposition of Gaussians (density std inner_width) centered in `copies` bins of outcome k0.
    With the default width s/10 the PCG distribution has p_k0 >= 1 - 1e-6.
    `window` = (x0, dx, N) overrides the grid.
    """
    if not 0 <= outcome < pcg.d:
        raise ContractViolationError(f"outcome {outcome} outside 0..{pcg.d - 1}")
    if copies < 1:
        raise ContractViolationError(f"need at least one copy, got {copies}")
    inner_width = DEFAULT_WIDTH_RATIO * pcg.s if inner_width is None else inner_width
    if not 0 < inner_width <= MAX_WIDTH_RATIO * pcg.s:
        logger.error(f"localized_probe_state: width {inner_width} vs bin {pcg.s}")
        raise ContractViolationError(f"probe width {inner_width} must lie in (0, s/4] with s = {pcg.s}")
    amplitudes = np.ones(copies) if amplitudes is None else np.asarray(amplitudes, dtype=float)
    phases = np.zeros(copies) if phases is None else np.asarray(phases, dtype=float)
    if amplitudes.shape != (copies,) or phases.shape != (copies,):
        raise DimensionMismatchError(f"amplitudes/phases must have {copies} entries")

    x0, dx, n = window or probe_grid(pcg, pcg.s, inner_width, copies, hbar)
    x = x0 + dx * np.arange(n)
    psi = np.zeros(n, dtype=complex)
    for center, amp, phase in zip(probe_centers(pcg, outcome, copies), amplitudes, phases):
        psi += amp * np.exp(1j * phase) * np.exp(-((x - center) ** 2) / (4.0 * inner_width ** 2))
    return GridWavefunction.normalized(psi, x0=x0, dx=dx, hbar=hbar)

# =====================================================================
# Numerical unbiasedness test
# =====================================================================

def _deviation(probs: np.ndarray, d: int) -> float:
    return float(np.abs(probs - 1.0 / d).max())

def _one_probe(
    pcg_prep: PeriodicCG,
    pcg_meas: PeriodicCG,
    outcome: int,
    amplitudes: np.ndarray,
    phases: np.ndarray,
    window: tuple[float, float, int],
    inner_width: float,
    to_conjugate,
    hbar: float,
) -> float:
    psi = localized_probe_state(
        pcg_prep, outcome, inner_width, len(amplitudes), hbar, amplitudes, phases, window
    )
    prep = pcg_probabilities(psi.density(), pcg_prep)
    if prep.normalized_probs[outcome] < LOCALIZATION:
        logger.warning(f"unbiasedness_test: probe holds only {prep.normalized_probs[outcome]:.9f} in outcome {outcome}")
    measured = pcg_probabilities(to_conjugate(psi).density(), pcg_meas)
    if not measured.faithful:
        logger.error(f"unbiasedness_test: conjugate coverage {measured.coverage:.9f}")
        raise ContractViolationError(
            f"conjugate-side coverage {measured.coverage:.9f} is unfaithful; enlarge the grid"
        )
    return _deviation(measured.normalized_probs, pcg_meas.d)

def unbiasedness_test(
    pcg_u: PeriodicCG,
    pcg_v: PeriodicCG,
    trials: int = 4,
    seed: Optional[int] = None,
    hbar: float = 1.0,
    copies: int = DEFAULT_COPIES,
    width_ratio: float = TEST_WIDTH_RATIO,
    workers: Optional[int] = None,
) -> float:
    """
    max_{k, l} |p_l - 1/d| over probes localized in each outcome of one variable and measured in the other,
    in both directions. Trial 0 is the equal-phase comb; further trials draw random phases and
    amplitudes from a seeded generator. Deterministic for a fixed seed.
    """
    if pcg_u.d != pcg_v.d:
        raise DimensionMismatchError(f"PCG pair needs equal outcome counts, got {pcg_u.d} and {pcg_v.d}")
    if trials < 1:
        raise ContractViolationError("at least one trial is needed")
    settings = get_service_settings()
    rng = np.random.default_rng(settings.DEFAULT_SEED if seed is None else seed)
    d = pcg_u.d

    def inverse(phi: GridWavefunction) -> GridWavefunction:
        return frft(phi, -0.5 * math.pi)

    jobs = []
    for pcg_prep, pcg_meas, to_conjugate in ((pcg_u, pcg_v, conjugate_wavefunction), (pcg_v, pcg_u, inverse)):
        width = width_ratio * pcg_prep.s
        window = probe_grid(pcg_prep, pcg_meas.s, width, copies, hbar)
        for outcome in range(d):
            for trial in range(trials):
                if trial == 0:
                    amplitudes, phases = np.ones(copies), np.zeros(copies)
                else:
                    amplitudes = rng.uniform(0.5, 1.5, copies)
                    phases = rng.uniform(0.0, 2.0 * math.pi, copies)
                jobs.append((pcg_prep, pcg_meas, outcome, amplitudes, phases, window, width, to_conjugate, hbar))

    workers = workers or settings.SWEEP_WORKERS
    logger.info(f"unbiasedness_test: d={d}, {len(jobs)} probes, N={jobs[0][5][2]}/{jobs[-1][5][2]}")
    with ThreadPoolExecutor(max_workers=workers) as pool:
        deviations = list(pool.map(lambda job: _one_probe(*job), jobs))
    return max(deviations)
