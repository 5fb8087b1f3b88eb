"""Kernel backend selection.

The hot inner loops (free reduction, cyclic canonicalization, Whitehead
substitution) exist twice: a Cython extension ``_core`` and a pure-Python
mirror ``pyops``. The compiled core is picked at import time when present;
set ``DISKSURGERY_KERNEL=pure`` or ``=compiled`` to force a backend
(forcing ``compiled`` raises if the extension was not built).
"""

import os

from . import pyops

_ENV_VAR = "DISKSURGERY_KERNEL"
_PURE_NAMES = ("pure", "py", "python")
_COMPILED_NAMES = ("compiled", "c", "ext")


def _load_compiled():
    from . import _core

    return _core


def _select():
    choice = os.environ.get(_ENV_VAR, "").strip().lower()
    if choice in _PURE_NAMES:
        return pyops
    if choice in _COMPILED_NAMES:
        return _load_compiled()
    if choice == "":
        try:
            return _load_compiled()
        except ImportError:
            return pyops
    raise ValueError(
        f"{_ENV_VAR}={choice!r}: expected one of {_PURE_NAMES + _COMPILED_NAMES}"
    )


def load_backend(name):
    """Return the named kernel module (``pure`` or ``compiled``)."""
    if name in _PURE_NAMES:
        return pyops
    if name in _COMPILED_NAMES:
        return _load_compiled()
    raise ValueError(f"unknown kernel backend {name!r}")


def available_backends():
    names = ["pure"]
    try:
        _load_compiled()
        names.append("compiled")
    except ImportError:
        pass
    return names


_impl = _select()

BACKEND = _impl.BACKEND
letter_key = pyops.letter_key
free_reduce = _impl.free_reduce
cyclic_reduce = _impl.cyclic_reduce
least_rotation = _impl.least_rotation
canonical_cyclic = _impl.canonical_cyclic
apply_images = _impl.apply_images
apply_images_canonical = _impl.apply_images_canonical
