"""Hot inner loops: inverse-CDF sampling and dense rank-1 accumulation.

The compiled ``_core`` extension is used when it was built; otherwise the
numpy implementations in ``_fallback`` are used. ``use_backend`` switches
explicitly (tests and the benchmark run both).
"""
from . import _fallback

try:
    from . import _core
except ImportError:  # extension not built
    _core = None

_BACKENDS = {"python": _fallback}
if _core is not None:
    _BACKENDS["compiled"] = _core

_active = _core if _core is not None else _fallback


def available_backends():
    return sorted(_BACKENDS)


def backend_name():
    return "compiled" if _active is _core and _core is not None else "python"


def use_backend(name):
    """Select ``"compiled"`` or ``"python"``; returns the previous name."""
    global _active
    if name not in _BACKENDS:
        raise ValueError(f"backend {name!r} unavailable; have {available_backends()}")
    previous = backend_name()
    _active = _BACKENDS[name]
    return previous


def sample_inverse_cdf(cdf, u):
    return _active.sample_inverse_cdf(cdf, u)


def count_draws(draws, size):
    return _active.count_draws(draws, size)


def accumulate_laplacian(n, u, v, w):
    return _active.accumulate_laplacian(n, u, v, w)


def outer_accumulate(At, B, idx, scale):
    return _active.outer_accumulate(At, B, idx, scale)
