"""Kernel backend selection: compiled extension when available, else pure.

Set NONBOND_BACKEND=pure or =compiled to force one; `use_backend` does the
same programmatically (the benchmark uses it to compare the two).
"""

from __future__ import annotations

import os

from . import _pure

try:
    from . import _speedups
except ImportError:
    _speedups = None

_BACKENDS = {"pure": _pure}
if _speedups is not None:
    _BACKENDS["compiled"] = _speedups


def _initial():
    name = os.environ.get("NONBOND_BACKEND", "")
    if name:
        if name not in _BACKENDS:
            raise ImportError("NONBOND_BACKEND=%s unavailable (have: %s)"
                              % (name, ", ".join(sorted(_BACKENDS))))
        return _BACKENDS[name]
    return _BACKENDS.get("compiled", _pure)


_impl = _initial()


def use_backend(name):
    """Select a kernel backend by name ('pure' or 'compiled')."""
    global _impl
    if name not in _BACKENDS:
        raise ValueError("backend %r unavailable (have: %s)"
                         % (name, ", ".join(sorted(_BACKENDS))))
    _impl = _BACKENDS[name]


def get_backend(name):
    if name not in _BACKENDS:
        raise ValueError("backend %r unavailable" % name)
    return _BACKENDS[name]


def available_backends():
    return tuple(sorted(_BACKENDS))


def backend_name():
    return _impl.BACKEND


def dp_rows(*args, **kwargs):
    return _impl.dp_rows(*args, **kwargs)


def enumerate_boards(*args, **kwargs):
    return _impl.enumerate_boards(*args, **kwargs)
