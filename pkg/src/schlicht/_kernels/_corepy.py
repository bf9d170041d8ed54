"""NumPy fallback for the hot kernels.

Same contracts as the compiled extension in _core.pyx; selected at import
time when the extension is unavailable (see __init__.py).
"""

import numpy as np

BACKEND = "numpy"


def cauchy_mul(a, b):
    # truncated Cauchy product, equal-length inputs
    n = a.shape[0]
    return np.convolve(a, b)[:n]


def cauchy_div(a, b):
    # long division, b[0] != 0 guaranteed by the caller
    n = a.shape[0]
    q = np.empty(n, dtype=complex)
    b0 = b[0]
    q[0] = a[0] / b0
    for i in range(1, n):
        q[i] = (a[i] - np.dot(q[:i], b[i:0:-1])) / b0
    return q


def compose(outer, inner):
    # Horner scheme in series arithmetic; inner[0] == 0 guaranteed
    n = outer.shape[0]
    h = np.zeros(n, dtype=complex)
    h[0] = outer[n - 1]
    for j in range(n - 2, -1, -1):
        h = np.convolve(h, inner)[:n]
        h[0] += outer[j]
    return h


def _rhs(y, kap):
    return -y * (1.0 + kap * y) / (1.0 - kap * y)


def _drhs(y, kap):
    # d/dy of the radial Loewner right-hand side
    return (kap * kap * y * y - 2.0 * kap * y - 1.0) / (1.0 - kap * y) ** 2


def rk4_loewner(z0, kappa, h, store_stride, with_deriv):
    """Classical fixed-step RK4 for the radial Loewner equation.

    z0:     initial states, shape (nz,)
    kappa:  driving value per step (piecewise constant), shape (nsteps,)
    Stores every store_stride-th state (nsteps must be a multiple).
    Returns (traj, dtraj) where traj has shape (nsteps//stride + 1, nz);
    dtraj carries d(state)/d(z0) when with_deriv, else None.
    Status: raises ValueError("escaped") / ValueError("singular") on the
    guard conditions; callers translate to the library error types.
    """
    nsteps = kappa.shape[0]
    nstored = nsteps // store_stride + 1
    y = np.array(z0, dtype=complex)
    traj = np.empty((nstored, y.shape[0]), dtype=complex)
    traj[0] = y
    v = np.ones_like(y) if with_deriv else None
    dtraj = None
    if with_deriv:
        dtraj = np.empty_like(traj)
        dtraj[0] = v
    row = 1
    for s in range(nsteps):
        kap = kappa[s]
        k1 = _rhs(y, kap)
        y2 = y + 0.5 * h * k1
        k2 = _rhs(y2, kap)
        y3 = y + 0.5 * h * k2
        k3 = _rhs(y3, kap)
        y4 = y + h * k3
        k4 = _rhs(y4, kap)
        if with_deriv:
            d1 = _drhs(y, kap) * v
            d2 = _drhs(y2, kap) * (v + 0.5 * h * d1)
            d3 = _drhs(y3, kap) * (v + 0.5 * h * d2)
            d4 = _drhs(y4, kap) * (v + h * d3)
            v = v + (h / 6.0) * (d1 + 2.0 * d2 + 2.0 * d3 + d4)
        y = y + (h / 6.0) * (k1 + 2.0 * k2 + 2.0 * k3 + k4)
        if np.any(np.abs(1.0 - kap * y) < 1e-6):
            raise ValueError("singular")
        if np.any(np.abs(y) >= 1.0):
            raise ValueError("escaped")
        if (s + 1) % store_stride == 0:
            traj[row] = y
            if with_deriv:
                dtraj[row] = v
            row += 1
    return traj, dtraj
