# memoization keyed on inputs quantized to 13 significant digits
from functools import lru_cache, wraps
import math

def _quantize(value):
    if isinstance(value, float) and math.isfinite(value):
        return float(f"{value:.12e}")
    return value

def quantized_cache(maxsize: int = 4096):
    """
    lru_cache over quantized positional args, so 0.1 + 0.2 and 0.3 share an entry.
    lru_cache is thread-safe; concurrent misses may compute twice, with identical results.
    """
    def decorator(fn):
        cached = lru_cache(maxsize=maxsize)(fn)

        @wraps(fn)
        def wrapper(*args):
            return cached(*(_quantize(float(a)) if isinstance(a, (int, float)) and not isinstance(a, bool) else a for a in args))

        wrapper.cache_info = cached.cache_info
        wrapper.cache_clear = cached.cache_clear
        return wrapper
    return decorator
