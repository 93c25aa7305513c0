import os
import sys

import pytest

sys.path.insert(0, os.path.dirname(__file__))

from gn3kit import kernels  # noqa: E402

_NAMES = ("occurrence_indices", "reduce_involutions", "gn3_successors", "gn3_bfs")


@pytest.fixture(params=[m.BACKEND for m in kernels.backends()])
def backend(request, monkeypatch):
    """Run a test once per importable kernel backend."""
    mod = {m.BACKEND: m for m in kernels.backends()}[request.param]
    for name in _NAMES:
        monkeypatch.setattr(kernels, name, getattr(mod, name))
    return request.param
