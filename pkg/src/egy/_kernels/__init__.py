"""Kernel backend selection.

The compiled core is preferred when the extension was built; set
EGY_PURE_PYTHON=1 to force the pure fallback (used by the benchmark and the
differential tests).
"""

from __future__ import annotations

import os

from . import _core_py

if os.environ.get("EGY_PURE_PYTHON") == "1":
    _impl = _core_py
else:
    try:
        from . import _core_cy as _impl  # type: ignore[no-redef]
    except ImportError:
        _impl = _core_py

BACKEND = _impl.BACKEND

two_term_max_below = _impl.two_term_max_below
two_term_min_competitors = _impl.two_term_min_competitors
direct_mode_terms = _impl.direct_mode_terms
