# exact-arithmetic test of the periodic coarse-graining unbiasedness condition
from fractions import Fraction
import math

from cv_uncertainty.common.errors import ContractViolationError
from cv_uncertainty.common.logging.logger import logger
from cv_uncertainty.mub.types.mub_types import MubStatus, MubVerdict

MAX_DENOMINATOR = 10 ** 6
MATCH_TOLERANCE = 1e-12

def _as_rational(value: float) -> Fraction | None:
    """Continued-fraction approximation with denominator <= 1e6, or None if it misses by more than 1e-12 relative."""
    approx = Fraction(value).limit_denominator(MAX_DENOMINATOR)
    if abs(float(approx) - value) > MATCH_TOLERANCE * abs(value):
        return None
    return approx

def _integer_m(product: float, d: int) -> int | None:
    """m with product = d/m, if it is a positive integer."""
    rational = _as_rational(product)
    if rational is None or rational == 0:
        return None
    m = Fraction(d) / rational
    return m.numerator if m.denominator == 1 else None

def mub_condition(Tu: float, Tv: float, d: int, hbar: float = 1.0) -> MubVerdict:
    """
    PCG measurements with d outcomes and periods Tu, Tv are unbiased iff
    Tu Tv / (2 pi hbar) = d/m with m n / d not an integer for n = 1..d-1 (gcd(m, d) = 1).
    m = 0 mod d makes every pair of PCG projectors commute.
    """
    if d < 2:
        raise ContractViolationError(f"periodic coarse graining needs d >= 2, got {d}")
    if not (Tu > 0 and Tv > 0 and hbar > 0):
        raise ContractViolationError(f"periods and hbar must be positive, got Tu={Tu}, Tv={Tv}, hbar={hbar}")
    product = Tu * Tv / (2.0 * math.pi * hbar)
    m = _integer_m(product, d)
    if m is None:
        logger.debug(f"mub_condition: product {product:.15g} is not d/m for integer m (d={d})")
        return MubVerdict(status=MubStatus.BIASED, d=d, product=product)
    if m % d == 0:
        status = MubStatus.COMMUTING
    elif math.gcd(m, d) == 1:
        status = MubStatus.UNBIASED
    else:
        status = MubStatus.BIASED
    return MubVerdict(status=status, d=d, product=product, m=m)

def _close(a: float, b: float) -> bool:
    return abs(a - b) <= MATCH_TOLERANCE * max(abs(a), abs(b))

def alternative_forms_check(su: float, Tu: float, sv: float, Tv: float, d: int, hbar: float = 1.0) -> bool:
    """
    True iff T = d s on both sides and the four equivalent forms
      Tu Tv = 2 pi hbar d / m,  Tu sv = 2 pi hbar / m,  su Tv = 2 pi hbar / m,  su sv = 2 pi hbar / (m d)
    yield one and the same positive integer m.
    """
    if d < 2 or min(su, Tu, sv, Tv, hbar) <= 0:
        return False
    if not (_close(Tu, d * su) and _close(Tv, d * sv)):
        return False
    two_pi_hbar = 2.0 * math.pi * hbar
    ms = [
        two_pi_hbar * d / (Tu * Tv),
        two_pi_hbar / (Tu * sv),
        two_pi_hbar / (su * Tv),
        two_pi_hbar / (d * su * sv),
    ]
    m = round(ms[0])
    return m >= 1 and all(_close(value, float(m)) for value in ms)
