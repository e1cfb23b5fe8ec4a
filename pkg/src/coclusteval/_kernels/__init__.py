"""Kernel backend selection.

The hot inner loops (contingency tabulation, exact pair-count sums, the
exhaustive permutation scan) exist twice: a Cython extension (``_native``)
and a pure-Python module (``pure``).  The native backend is used when the
extension imported successfully; set ``COCLUSTEVAL_BACKEND=pure`` or
``=native`` to force one.  Both produce identical exact values, so the
choice only ever affects speed.
"""

import os

from . import pure

try:
    from . import _native as native
except ImportError:  # extension not built on this install
    native = None

_BACKENDS = {"pure": pure}
if native is not None:
    _BACKENDS["native"] = native


def _select_default():
    forced = os.environ.get("COCLUSTEVAL_BACKEND", "").strip()
    if forced:
        if forced not in ("pure", "native"):
            raise ValueError(f"COCLUSTEVAL_BACKEND must be 'pure' or 'native', got {forced!r}")
        if forced == "native" and native is None:
            raise ImportError("COCLUSTEVAL_BACKEND=native but the compiled extension is unavailable")
        return _BACKENDS[forced]
    return native if native is not None else pure


_active = _select_default()


def active():
    """The currently selected backend module."""
    return _active


def backend_name():
    return _active.NAME


def available_backends():
    return tuple(sorted(_BACKENDS))


def get_backend(name):
    try:
        return _BACKENDS[name]
    except KeyError:
        raise ValueError(f"unknown backend {name!r}; available: {available_backends()}") from None


def use_backend(name):
    """Switch the process-wide backend; returns the previous backend's name."""
    global _active
    prev = _active.NAME
    _active = get_backend(name)
    return prev


def contingency_counts(p, q, nrow, ncol):
    return _active.contingency_counts(p, q, nrow, ncol)


def sum_comb2(values):
    return _active.sum_comb2(values)


def sum_comb2_outer(xs, ys):
    return _active.sum_comb2_outer(xs, ys)


def best_diagonal_exhaustive(square):
    return _active.best_diagonal_exhaustive(square)
