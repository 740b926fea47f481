"""Kernel backend selection.

The compiled extension is preferred when present; set GRAPHSPLICE_PURE=1
to force the pure-Python backend.  Both expose the same functions with
identical output, so callers import `active` and never care which one won.
"""

import os

from . import pure

if os.environ.get("GRAPHSPLICE_PURE"):
    active = pure
else:
    try:
        from . import _speed as active  # type: ignore[no-redef]
    except ImportError:
        active = pure

BACKEND = active.IMPLEMENTATION
