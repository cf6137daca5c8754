"""Backend selection for the hot kernels.

Kernels ship in two flavors: numba @njit loops and pure-numpy fallbacks.
The flavor is fixed at import time by the WIZNET_NUMBA environment variable:

    WIZNET_NUMBA=0  -> force the pure-numpy path
    anything else   -> use numba when it is importable

Both flavors are required to produce bit-identical results; the benchmark
script and the backend test suite compare them through subprocesses.
"""
import os

_ENV_VAR = "WIZNET_NUMBA"


def _numba_available() -> bool:
    try:
        import numba  # noqa: F401
    except ImportError:
        return False
    return True


NUMBA_ENABLED: bool = os.environ.get(_ENV_VAR, "1") != "0" and _numba_available()


def backend_name() -> str:
    return "numba" if NUMBA_ENABLED else "numpy"


def jit(fn):
    """Compile fn with numba when the numba backend is active, else return it unchanged."""
    if NUMBA_ENABLED:
        from numba import njit

        return njit(cache=True)(fn)
    return fn
