"""Deterministic random number generation for the growth simulator.

splitmix64, carried as a 1-element uint64 array so the same source compiles
under numba and runs as plain Python. Output streams are bit-identical on
both backends, which is what makes generated wordnets reproducible across
the WIZNET_NUMBA settings. The algorithm identifier recorded in generator
metadata is "splitmix64".

Plain-Python execution wraps uint64 scalars, which numpy flags as overflow;
callers on the numpy backend run under np.errstate(over="ignore").
"""
import numpy as np

from ._backend import jit

RNG_ALGORITHM = "splitmix64"

_GAMMA = np.uint64(0x9E3779B97F4A7C15)
_MIX1 = np.uint64(0xBF58476D1CE4E5B9)
_MIX2 = np.uint64(0x94D049BB133111EB)
_R30 = np.uint64(30)
_R27 = np.uint64(27)
_R31 = np.uint64(31)
_R11 = np.uint64(11)
_DOUBLE_SCALE = 1.0 / 9007199254740992.0  # 2**-53


def _next_impl(state):
    state[0] += _GAMMA
    z = state[0]
    z = (z ^ (z >> _R30)) * _MIX1
    z = (z ^ (z >> _R27)) * _MIX2
    return z ^ (z >> _R31)


rng_next = jit(_next_impl)


def _double_impl(state):
    # uniform in [0, 1): top 53 bits scaled, exact in float64 on either backend
    return np.float64(rng_next(state) >> _R11) * _DOUBLE_SCALE


rng_double = jit(_double_impl)


def _below_impl(state, n):
    # modulo bias is ~n/2**64, irrelevant at wordnet scales
    return np.int64(rng_next(state) % np.uint64(n))


rng_below = jit(_below_impl)


def new_state(seed: int) -> np.ndarray:
    state = np.empty(1, dtype=np.uint64)
    state[0] = np.uint64(seed)
    return state
