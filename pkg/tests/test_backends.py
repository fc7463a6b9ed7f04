"""Cross-checks between the compiled kernel core and the NumPy fallback."""

import os
import subprocess
import sys

import numpy as np
import pytest

from wigbarrier import _backend, _core_py
from wigbarrier.profile import QuadratureConfig

try:
    from wigbarrier import _core
except ImportError:
    _core = None

needs_ext = pytest.mark.skipif(_core is None, reason="compiled core not built")

CFG = QuadratureConfig.for_point(eps=-0.4, eta=5.0)
ETAS = np.linspace(-5.0, 5.0, 41)


def test_selected_backend_reports_name():
    assert _backend.backend_name() in ("cython", "python")


@needs_ext
def test_backends_agree():
    py = _core_py.profile_sums(-0.4, ETAS, CFG.xi_max, CFG.step, 2)
    cy = _core.profile_sums(-0.4, ETAS, CFG.xi_max, CFG.step, 2)
    # summation order differs (pairwise vs sequential), so agreement is to
    # rounding, far below the quadrature tolerance
    assert np.max(np.abs(py - cy)) < 1e-13


@needs_ext
def test_node_counts_agree():
    assert _core.node_counts(CFG.xi_max, CFG.step) == _core_py.node_counts(
        CFG.xi_max, CFG.step
    )


@pytest.mark.parametrize("impl_name", ["python", "cython"])
def test_partition_invariance(impl_name):
    # evaluating the batch in pieces must reproduce the whole bit-for-bit:
    # this is what makes worker partitioning semantically invisible
    impl = _core_py if impl_name == "python" else _core
    if impl is None:
        pytest.skip("compiled core not built")
    whole = impl.profile_sums(0.3, ETAS, CFG.xi_max, CFG.step, 1)
    parts = [
        impl.profile_sums(0.3, piece, CFG.xi_max, CFG.step, 1)
        for piece in np.array_split(ETAS, 5)
    ]
    assert np.array_equal(whole, np.concatenate(parts))


def test_fallback_chunking_is_bit_identical():
    a = _core_py.profile_sums(0.3, ETAS, CFG.xi_max, CFG.step, 2, chunk=3)
    b = _core_py.profile_sums(0.3, ETAS, CFG.xi_max, CFG.step, 2, chunk=1000)
    assert np.array_equal(a, b)


def test_env_var_forces_fallback():
    env = dict(os.environ, WIGBARRIER_PURE_PYTHON="1")
    out = subprocess.run(
        [sys.executable, "-c", "import wigbarrier; print(wigbarrier.backend_name())"],
        env=env,
        capture_output=True,
        text=True,
        check=True,
    )
    assert out.stdout.strip() == "python"
