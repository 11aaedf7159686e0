"""Backend selection for the search kernel.

The compiled Cython kernel is used when it imports; otherwise the pure-Python
twin. ``WSATCC_BACKEND=python`` (or ``compiled``) forces a choice.
"""

from __future__ import annotations

import os

from . import _pycore

try:
    from . import _core  # type: ignore[attr-defined]
except ImportError:  # pragma: no cover - depends on the build
    _core = None

BACKENDS = {"python": _pycore.Kernel}
if _core is not None:
    BACKENDS["compiled"] = _core.Kernel


def default_backend() -> str:
    forced = os.environ.get("WSATCC_BACKEND", "").strip().lower()
    if forced:
        if forced not in BACKENDS:
            raise RuntimeError(f"WSATCC_BACKEND={forced!r} is not available (have {sorted(BACKENDS)})")
        return forced
    return "compiled" if "compiled" in BACKENDS else "python"


def kernel_class(backend: str | None = None):
    return BACKENDS[backend or default_backend()]
