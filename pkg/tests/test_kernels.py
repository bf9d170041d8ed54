"""The compiled and NumPy kernel backends must agree bit-for-bit in spirit
(same algorithm, same order of operations where it matters)."""

import numpy as np
import pytest

from schlicht import _kernels


def _pairs():
    b = _kernels.backends()
    if len(b) < 2:
        pytest.skip("compiled backend not built; nothing to compare")
    return b


def test_backend_mul_div_compose_agree():
    impls = _pairs()
    rng = np.random.default_rng(7)
    a = rng.normal(size=24) + 1j * rng.normal(size=24)
    b = rng.normal(size=24) + 1j * rng.normal(size=24)
    b[0] = 1.5
    inner = a.copy()
    inner[0] = 0.0
    results = []
    for impl in impls:
        results.append(
            (impl.cauchy_mul(a, b), impl.cauchy_div(a, b), impl.compose(b, inner))
        )
    for got in results[1:]:
        for x, y in zip(results[0], got):
            scale = max(float(np.max(np.abs(x))), 1.0)
            assert np.max(np.abs(x - y)) < 1e-13 * scale


def test_backend_rk4_agree():
    impls = _pairs()
    z0 = np.array([0.3, 0.5, 0.2 + 0.4j])
    kappa = np.full(200, -1.0 + 0j)
    outs = [impl.rk4_loewner(z0, kappa, 1e-2, 100, True) for impl in impls]
    for traj, dtraj in outs[1:]:
        assert np.max(np.abs(traj - outs[0][0])) < 1e-13
        assert np.max(np.abs(dtraj - outs[0][1])) < 1e-13


def test_backend_guards():
    for impl in _kernels.backends():
        with pytest.raises(ValueError, match="escaped|singular"):
            impl.rk4_loewner(
                np.array([0.999999 + 0j]), np.full(50, 1.0 + 0j), 1e-2, 50, False
            )
