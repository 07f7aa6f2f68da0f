"""Selection between the compiled kernel extension and the pure-Python twin.

Both backends implement the same two hot kernels with identical RNG streams
and identical floating-point evaluation order, so results are bit-identical;
the compiled one is just fast. Selection happens at import, overridable via
the COEXSIM_BACKEND environment variable ("compiled" or "python") or use().
"""

from __future__ import annotations

import os

from . import _engine_py

try:
    from . import _kernels  # type: ignore[attr-defined]
except ImportError:
    _kernels = None

_names = {"python": _engine_py}
if _kernels is not None:
    _names["compiled"] = _kernels

_env = os.environ.get("COEXSIM_BACKEND")
if _env is not None and _env not in _names:
    raise ImportError(
        f"COEXSIM_BACKEND={_env!r} not available; choices: {sorted(_names)}"
    )

_active = _env or ("compiled" if _kernels is not None else "python")


def available() -> tuple[str, ...]:
    return tuple(sorted(_names))


def active() -> str:
    return _active


def use(name: str) -> None:
    global _active
    if name not in _names:
        raise ValueError(f"unknown backend {name!r}; choices: {sorted(_names)}")
    _active = name


def module(name: str | None = None):
    return _names[name or _active]
