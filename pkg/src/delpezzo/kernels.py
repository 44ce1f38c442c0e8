"""Backend selection for the hot kernels.

The compiled extension is used when it imports; otherwise the pure-Python
module takes over.  Both expose ``solve_classes``, ``clique_counts`` and
``list_cliques`` with identical results.
"""
from __future__ import annotations

import logging

from . import _pykernels as python_backend

log = logging.getLogger(__name__)

try:
    from . import _ckernels as compiled_backend
except ImportError:  # extension not built
    compiled_backend = None
    log.debug("compiled kernels unavailable, using pure Python")

backend = compiled_backend if compiled_backend is not None else python_backend
BACKEND = backend.NAME

solve_classes = backend.solve_classes
clique_counts = backend.clique_counts
list_cliques = backend.list_cliques


def available_backends() -> dict:
    out = {"python": python_backend}
    if compiled_backend is not None:
        out["cython"] = compiled_backend
    return out
