"""Runtime selection of the modular-arithmetic kernels.

At import time the compiled GMP extension is preferred and the pure-Python
kernels are the fallback. ``FEDSCORE_BACKEND=pure|compiled`` forces a choice
(``compiled`` raises if the extension is unavailable). ``use()`` switches the
active kernels in-process; it exists for tests and the backend benchmark and
must not be called while a protocol run is in flight.
"""

from __future__ import annotations

import os
from types import ModuleType

from fedscore import _modmath_py

try:
    from fedscore import _modmath  # type: ignore[attr-defined]
except ImportError:
    _modmath = None

_IMPLS: dict[str, ModuleType] = {"pure": _modmath_py}
if _modmath is not None:
    _IMPLS["compiled"] = _modmath

name = ""
kernel_name = ""
powmod = None
invert = None
mulmod = None


def available() -> tuple[str, ...]:
    """Names of the backends importable in this environment."""
    return tuple(sorted(_IMPLS))


def use(which: str) -> str:
    """Activate a backend by name ('pure' or 'compiled'); returns the name."""
    global name, kernel_name, powmod, invert, mulmod
    if which not in _IMPLS:
        raise ValueError(
            f"backend {which!r} not available (have: {', '.join(available())})"
        )
    impl = _IMPLS[which]
    name = which
    kernel_name = impl.NAME
    powmod = impl.powmod
    invert = impl.invert
    mulmod = impl.mulmod
    return name


def _initial_choice() -> str:
    forced = os.environ.get("FEDSCORE_BACKEND", "").strip().lower()
    if forced:
        if forced not in ("pure", "compiled"):
            raise ValueError(
                f"FEDSCORE_BACKEND={forced!r} is not one of 'pure', 'compiled'"
            )
        if forced not in _IMPLS:
            raise ImportError(
                "FEDSCORE_BACKEND=compiled but the fedscore._modmath extension "
                "is not built; install with the GMP toolchain available"
            )
        return forced
    return "compiled" if "compiled" in _IMPLS else "pure"


use(_initial_choice())
