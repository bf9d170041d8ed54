"""Radial Loewner evolution.

Three chain representations share one interface:

* ``KoebeChain``   -- f_t(z) = e^t z/(1-z)^2 in closed form, with the
  transition flow w_t(z) solving z/(1-z)^2 = e^t w/(1-w)^2.
* ``TrivialChain`` -- f_t(z) = e^t z (p identically 1, all c_k = 0).
* ``NumericChain`` -- driven by a unit-circle-valued control kappa(t);
  trajectories come from fixed-step RK4 on
  df/dt = -f (1 + kappa f)/(1 - kappa f).

Time-infinity statements are never extrapolated: they are evaluated at
finite horizons with the discarded tail reported alongside.
"""

from __future__ import annotations

import cmath
import functools
import math
from dataclasses import dataclass, field

import numpy as np

from . import _kernels
from . import series as ps
from .errors import (
    BranchSelectionFailure,
    BranchTrackingFailure,
    ChainUnavailable,
    DerivativeUnderflow,
    ParamOutOfRange,
    PoleAtMinusOne,
    StepRejected,
    TrajectoryEscaped,
)
from .series import PowerSeries


def koebe_map(z):
    return z / (1.0 - z) ** 2


def koebe_deriv(z):
    return (1.0 + z) / (1.0 - z) ** 3


# -- the closed-form transition flow ---------------------------------------

def koebe_transition(z, t):
    """w_t(z) defined by z/(1-z)^2 = e^t w/(1-w)^2, the root inside the disk.

    Written as w = 2u / (1 + 2u + sqrt(4u + 1)) with u = e^{-t} k(z); this
    form has no cancellation as u -> 0 and picks the branch with w -> 0.
    """
    if abs(z) >= 1:
        raise ParamOutOfRange(f"|z| = {abs(z)} must be < 1")
    if t < 0:
        raise ParamOutOfRange("t must be >= 0")
    u = cmath.exp(-t) * koebe_map(z)
    root = cmath.sqrt(4.0 * u + 1.0)
    w = 2.0 * u / (1.0 + 2.0 * u + root)
    if abs(w) >= 1.0:
        w_alt = (2.0 * u + 1.0 + root) / (2.0 * u) if u != 0 else complex("inf")
        if abs(w_alt) < 1.0:
            w = w_alt
        else:
            raise BranchSelectionFailure(f"no root in the disk at z={z}, t={t}")
    return w


def koebe_transition_series(t, order):
    """The transition flow as a series in z, leading coefficient e^{-t}.

    Solves w = u (1 - w)^2 with u = e^{-t} z/(1-z)^2 by fixed-point
    iteration in series arithmetic (one truncation order gained per pass).
    Equivalent to composing the reverted Koebe series with e^{-t} times the
    Koebe series, but free of the large cancellations that route incurs.
    """
    if t < 0:
        raise ParamOutOfRange("t must be >= 0")
    return _transition_series_cached(float(t), int(order))


@functools.lru_cache(maxsize=1024)
def _transition_series_cached(t, order):
    n = order
    u = math.exp(-t) * np.arange(n + 1, dtype=complex)
    w = u.copy()
    one = np.zeros(n + 1, dtype=complex)
    one[0] = 1.0
    for _ in range(n):
        g = one - 2.0 * w + _kernels.cauchy_mul(w, w)
        w = _kernels.cauchy_mul(u, g)
    return PowerSeries(w)


def transition_velocity(w):
    """dw/dt along the flow: (w^2 - w)/(1 + w)."""
    if abs(1.0 + w) < 1e-12:
        raise PoleAtMinusOne("velocity has a pole at w = -1")
    return (w * w - w) / (1.0 + w)


# -- driving functions ------------------------------------------------------

@dataclass(frozen=True)
class DrivingFunction:
    """Unit-circle-valued control, constant or piecewise constant."""

    kind: str
    value: complex = -1.0
    times: tuple = ()
    values: tuple = ()

    def __post_init__(self):
        if self.kind == "constant":
            vals = [self.value]
        elif self.kind == "sampled":
            if len(self.times) != len(self.values) or not self.times:
                raise ParamOutOfRange("sampled driving needs matching times/values")
            if any(b <= a for a, b in zip(self.times, self.times[1:])):
                raise ParamOutOfRange("sample times must increase strictly")
            vals = list(self.values)
        else:
            raise ParamOutOfRange(f"unknown driving kind {self.kind!r}")
        for v in vals:
            if abs(abs(v) - 1.0) > 1e-12:
                raise ParamOutOfRange(f"driving value {v} is off the unit circle")

    @classmethod
    def constant(cls, value):
        return cls(kind="constant", value=complex(value))

    @classmethod
    def sampled(cls, times, values):
        return cls(
            kind="sampled",
            times=tuple(float(t) for t in times),
            values=tuple(complex(v) for v in values),
        )

    def __call__(self, t):
        if self.kind == "constant":
            return self.value
        idx = np.searchsorted(np.asarray(self.times), t, side="right") - 1
        idx = int(np.clip(idx, 0, len(self.values) - 1))
        return self.values[idx]

    def per_step(self, t0, h, nsteps):
        """Left-endpoint sample per step (discontinuities sit on step edges)."""
        if self.kind == "constant":
            return np.full(nsteps, self.value, dtype=complex)
        ts = t0 + h * np.arange(nsteps)
        idx = np.clip(
            np.searchsorted(np.asarray(self.times), ts, side="right") - 1,
            0,
            len(self.values) - 1,
        )
        return np.asarray(self.values, dtype=complex)[idx]

    def describe(self):
        if self.kind == "constant":
            return f"const:{self.value}"
        return f"sampled[{len(self.values)}]"


# -- the solver -------------------------------------------------------------

@dataclass
class Evolution:
    """Sampled trajectories of the radial Loewner equation."""

    times: np.ndarray           # (nstored,)
    z_grid: np.ndarray          # (nz,)
    states: np.ndarray          # (nstored, nz)
    dstates: np.ndarray | None  # d(state)/dz0, same shape, optional
    meta: dict = field(default_factory=dict)

    @property
    def scaled(self):
        """e^t f_t along the trajectories (tends to the hull map)."""
        return np.exp(self.times)[:, None] * self.states

    def state_at(self, t):
        i = int(np.argmin(np.abs(self.times - t)))
        return self.times[i], self.states[i]


def loewner_solve(kappa, z_grid, T, h, store_stride=1, with_deriv=False, t0=0.0):
    """Integrate the radial Loewner equation for each grid point.

    Classical fixed-step RK4; kappa is sampled once per step (piecewise-
    constant driving with jumps aligned to step boundaries).  Trajectories
    must stay inside the unit disk and away from the kappa f = 1
    singularity, else TrajectoryEscaped / StepRejected is raised.
    """
    if h > 1e-2 + 1e-15:
        raise ParamOutOfRange("step size must be <= 1e-2")
    if not 0 <= T - t0 <= 20:
        raise ParamOutOfRange("horizon must satisfy 0 <= T - t0 <= 20")
    z0 = np.asarray(z_grid, dtype=complex).ravel()
    if np.any(np.abs(z0) >= 1):
        raise ParamOutOfRange("grid points must satisfy |z| < 1")
    span = T - t0
    nsteps = max(int(round(span / h)), 0)
    if abs(nsteps * h - span) > 1e-9:
        raise ParamOutOfRange(f"span {span} is not a multiple of h = {h}")
    if nsteps == 0:
        states = z0[None, :].copy()
        return Evolution(
            times=np.array([t0]),
            z_grid=z0,
            states=states,
            dstates=np.ones_like(states) if with_deriv else None,
            meta={"h": h, "T": T, "kappa": kappa.describe()},
        )
    if nsteps % store_stride:
        raise ParamOutOfRange("step count must be a multiple of store_stride")
    kap = kappa.per_step(t0, h, nsteps)
    try:
        traj, dtraj = _kernels.rk4_loewner(z0, kap, h, store_stride, with_deriv)
    except ValueError as exc:
        if "singular" in str(exc):
            raise StepRejected("trajectory approached the kappa f = 1 singularity") from exc
        raise TrajectoryEscaped("trajectory left the unit disk") from exc
    times = t0 + h * store_stride * np.arange(traj.shape[0])
    return Evolution(
        times=times,
        z_grid=z0,
        states=traj,
        dstates=dtraj,
        meta={"h": h, "T": T, "kappa": kappa.describe()},
    )


# -- chain representations --------------------------------------------------

class KoebeChain:
    """f_t(z) = e^t z/(1-z)^2; the chain generated by constant driving -1."""

    label = "koebe"
    kind = "koebe_closed_form"

    def series_at(self, t, order):
        return PowerSeries(math.exp(t) * np.arange(order + 1, dtype=complex))

    def dt_series_at(self, t, order):
        return self.series_at(t, order)

    def eval_at(self, z, t):
        return math.exp(t) * koebe_map(z)

    def boundary_values(self, t, r, Q):
        z1 = r * np.exp(2j * np.pi * np.arange(Q) / Q)
        return math.exp(t) * koebe_map(z1), z1

    def p_values(self, z, t=0.0):
        z = np.asarray(z, dtype=complex)
        # p(0) = 1 by the chain normalization; the origin is removable
        denom = np.abs(z * koebe_deriv(z))
        if np.any((denom * math.exp(t) < 1e-14) & (z != 0)):
            raise DerivativeUnderflow("z f'(z) vanished")
        return np.where(z == 0, 1.0, (1.0 - z) / (1.0 + z))

    def log_coeff(self, t, k):
        return 2.0 / k

    def transition(self, z, s, t):
        """phi(z, s, t) with f_s = f_t o phi; equals w_{t-s} here."""
        return koebe_transition(z, t - s)


class TrivialChain:
    """f_t(z) = e^t z, the chain of the identity map."""

    label = "identity"
    kind = "trivial_closed_form"

    def series_at(self, t, order):
        c = np.zeros(order + 1, dtype=complex)
        c[1] = math.exp(t)
        return PowerSeries(c)

    def dt_series_at(self, t, order):
        return self.series_at(t, order)

    def eval_at(self, z, t):
        return math.exp(t) * z

    def boundary_values(self, t, r, Q):
        z1 = r * np.exp(2j * np.pi * np.arange(Q) / Q)
        return math.exp(t) * z1, z1

    def p_values(self, z, t=0.0):
        return np.ones_like(np.asarray(z, dtype=complex))

    def log_coeff(self, t, k):
        return 0.0

    def transition(self, z, s, t):
        return math.exp(s - t) * z


class NumericChain:
    """Chain reconstructed from Loewner trajectories under a driving kappa.

    f_t(z) is approximated by e^T w(T; z, t) where w(.; z, t) solves the
    Loewner equation from state z at time t and T is the chain horizon.
    Boundary data comes from circle grids of trajectories; z-derivatives
    are spectral (differentiate the circle Fourier series), t-derivatives
    are central differences with spacing dt_fd.
    """

    kind = "numeric"

    def __init__(self, kappa, T=8.0, h=1e-3, dt_fd=0.01, label="numeric"):
        self.kappa = kappa
        self.T = float(T)
        self.h = float(h)
        self.dt_fd = float(dt_fd)
        self.label = label
        self._circle_cache = {}

    def _snap(self, t):
        return round(t / self.h) * self.h

    def _flow_from(self, z0, t0):
        """e^T w(T; z0, t0) for an array of start states."""
        t0 = self._snap(t0)
        if not 0 <= t0 <= self.T:
            raise ChainUnavailable(f"t = {t0} outside the chain horizon [0, {self.T}]")
        ev = loewner_solve(self.kappa, z0, self.T, self.h, store_stride=max(
            int(round((self.T - t0) / self.h)), 1), t0=t0)
        return math.exp(self.T) * ev.states[-1]

    def _circle(self, t, r, Q):
        key = (self._snap(t), float(r), int(Q))
        if key not in self._circle_cache:
            z1 = r * np.exp(2j * np.pi * np.arange(Q) / Q)
            self._circle_cache[key] = (self._flow_from(z1, key[0]), z1)
        return self._circle_cache[key]

    def boundary_values(self, t, r, Q):
        return self._circle(t, r, Q)

    def series_at(self, t, order, fit_radius=0.4, fit_points=None):
        """Circle-sampled Fourier fit of f_t (least squares on the circle).

        The 1/fit_radius^k amplification makes high modes meaningless, so
        the fitted order is capped; use eval_at for pointwise values.
        """
        if order > 16:
            raise ChainUnavailable(
                f"numeric-chain series fits are only trusted to order 16, got {order}"
            )
        Q = fit_points or max(4 * (order + 1), 64)
        vals, _ = self._circle(t, fit_radius, Q)
        modes = np.fft.fft(vals) / Q
        k = np.arange(order + 1)
        return PowerSeries(modes[: order + 1] / fit_radius**k)

    def eval_at(self, z, t):
        return complex(self._flow_from(np.array([z], dtype=complex), t)[0])

    def p_values(self, z, t, r=None, Q=None):
        """p = (df/dt)/(z df/dz) on a circle grid containing the points.

        z must be a full uniform circle (the spectral derivative needs it);
        use p_on_circle for convenience.
        """
        raise ChainUnavailable("use p_on_circle for numeric chains")

    def p_on_circle(self, t, r, Q):
        t = self._snap(t)
        dt = self.dt_fd
        # shift the stencil, not the scheme, near the horizon edges
        t = min(max(t, dt), self.T - dt)
        # oversample until the aliased Fourier tail (modes beyond Qe at
        # radius r) is negligible, else the spectral derivative is polluted
        # exactly where z df/dz is smallest
        Qe = Q
        need = 30.0 / max(1.0 - r, 1e-3)
        while Qe < need:
            Qe *= 2
        f_mid, z1 = self._circle(t, r, Qe)
        f_plus, _ = self._circle(t + dt, r, Qe)
        f_minus, _ = self._circle(t - dt, r, Qe)
        dft = (f_plus - f_minus) / (2.0 * dt)
        modes = np.fft.fft(f_mid)
        # one-sided spectrum: f is analytic, every bin is a true mode m >= 0
        zdfz = np.fft.ifft(modes * np.arange(Qe))
        if np.any(np.abs(zdfz) < 1e-14):
            raise DerivativeUnderflow("z df/dz vanished on the circle")
        step = Qe // Q
        return (dft / zdfz)[::step], z1[::step]

    def log_coeff(self, t, k, order=None):
        order = max(k + 2, 12) if order is None else order
        c = chain_log_coeffs(self, t, order, cross_check=False)
        return c[k - 1]


def make_chain(name, **kwargs):
    if name == "koebe":
        return KoebeChain()
    if name == "identity":
        return TrivialChain()
    if name.startswith("const:"):
        return NumericChain(DrivingFunction.constant(complex(name.split(":", 1)[1])), **kwargs)
    raise ChainUnavailable(f"no chain construction for {name!r}")


# -- chain functionals -------------------------------------------------------

def herglotz_p(chain, z, t):
    """p(z, t) = (df_t/dt) / (z df_t/dz) for closed-form chains."""
    if hasattr(chain, "p_values") and chain.kind != "numeric":
        return complex(chain.p_values(np.asarray([z]), t)[0])
    raise ChainUnavailable("pointwise p needs a closed-form chain; use p_on_circle")


def chain_log_coeffs(chain, t, N, cross_check=True, quad_radius=0.5, Q=256, tol=1e-8):
    """c_k(t) of log(f_t(z)/(e^t z)), k = 1..N.

    Series route: log of the chain series with the e^t z factor removed.
    Cross-check route: circle quadrature of log(f_t(z)/(e^t z)) z^{-k-1}
    with branch continuity enforced along the contour.
    """
    s = chain.series_at(t, N + 1)
    F = PowerSeries(s.coeffs[1:] * math.exp(-t))
    F0 = F[0]
    if abs(F0 - 1.0) > 1e-6:
        raise BranchTrackingFailure(f"chain normalization drifted: {F0}")
    L = ps.log(PowerSeries(F.coeffs / F0))
    ck = L.coeffs[1 : N + 1].copy()
    if cross_check:
        cq = _log_coeffs_quadrature(chain, t, N, quad_radius, Q)
        err = float(np.max(np.abs(ck - cq)))
        if err > tol:
            raise BranchTrackingFailure(
                f"series and quadrature log-coefficients disagree by {err:.2e}"
            )
    return ck


def _log_coeffs_quadrature(chain, t, N, r, Q):
    vals, z1 = chain.boundary_values(t, r, Q)
    W = vals / (math.exp(t) * z1)
    ang = np.angle(W)
    un = np.unwrap(ang)
    closure = un[-1] + _wrap(ang[0] - ang[-1]) - un[0]
    if abs(closure) > 1e-6:
        raise BranchTrackingFailure("log branch winds around the contour")
    L = np.log(np.abs(W)) + 1j * un
    modes = np.fft.fft(L) / Q
    k = np.arange(1, N + 1)
    return modes[1 : N + 1] / r**k


def _wrap(a):
    return (a + np.pi) % (2.0 * np.pi) - np.pi


def lipschitz_bound_check(chain, z, s, t, tolerance=1e-12):
    """Time-regularity bounds for the chain and its transition functions.

    Chain bound:      |f(z,t) - f(z,s)|     <= 8|z| (e^t - e^s)/(1-|z|)^4
    Transition bound: |phi(z,t,u)-phi(z,s,u)| <= 2|z| (1-e^{s-t})/(1-|z|)^2
    evaluated at u = t, where available.  Failures land in the report.
    """
    from .report import BoundReport

    if not 0 <= s <= t:
        raise ParamOutOfRange("need 0 <= s <= t")
    if abs(z) > 0.9:
        raise ParamOutOfRange("|z| <= 0.9 for the bound checks")
    rep = BoundReport("lipschitz", tolerance)
    az = abs(z)
    fs = chain.eval_at(z, s)
    ft = chain.eval_at(z, t)
    rep.add(
        f"chain(z={z:.3g},s={s:.3g},t={t:.3g})",
        abs(ft - fs),
        8.0 * az * (math.exp(t) - math.exp(s)) / (1.0 - az) ** 4,
    )
    if hasattr(chain, "transition"):
        phi_t = chain.transition(z, t, t)
        phi_s = chain.transition(z, s, t)
        rep.add(
            f"transition(z={z:.3g},s={s:.3g},t={t:.3g})",
            abs(phi_t - phi_s),
            2.0 * az * (1.0 - math.exp(s - t)) / (1.0 - az) ** 2,
        )
    return rep
