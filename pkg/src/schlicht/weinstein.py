"""The nonnegative-kernel decomposition behind the Milin inequality chain.

The central objects are the coefficients L[k][n](t) of z^{n+1} in
e^t w^{k+1} / (1 - w^2), with w the Koebe transition flow.  They admit
three independent computations that must agree:

* series route    -- series arithmetic on the flow;
* Fourier route   -- with cos(delta) = 1 - e^{-t} + e^{-t} cos(phi), the
  degree-n coefficient family U_n of 1/(1 - 2 x z + z^2) satisfies
  U_n(cos delta) = L[0][n] + 2 sum_k L[k][n] cos(k phi), so a cosine
  transform in phi extracts each entry;
* Legendre route  -- expanding U_n = sum_{i+j=n} P_i P_j through the
  equal-angle addition theorem writes each entry as a sum of squares times
  positive weights, which also certifies nonnegativity term by term.

On top of these sit the boundary integrals a_k_integral (nonnegative
because Re p > 0 multiplies a squared modulus) and the end-to-end check
that sum_k (4/k - k |c_k(0)|^2)(n-k+1) equals the time integral of
g_n(t) = sum_k L[k][n](t) A_k(t).
"""

from __future__ import annotations

import math
from dataclasses import dataclass, field

import numpy as np

from . import functionals as fn
from . import legendre as lg
from . import loewner as lw
from . import series as ps
from .report import BoundReport
from .series import PowerSeries


def lambda_series(t, k, N):
    """Coefficients of z^1..z^{N+1} in e^t w^{k+1}/(1 - w^2), reindexed 0..N.

    Real by construction; the imaginary residue is checked below 1e-12.
    """
    if k > N:
        return np.zeros(N + 1)
    order = N + 1
    w = lw.koebe_transition_series(t, order)
    num = math.exp(t) * _power(w, k + 1)
    den = PowerSeries.one(order) - w * w
    S = ps.div(num, den)
    vals = S.coeffs[1:]
    resid = float(np.max(np.abs(vals.imag)))
    if resid > 1e-12:
        raise ArithmeticError(f"imaginary residue {resid:.2e} in a real quantity")
    return vals.real.copy()


def _power(w, m):
    out = PowerSeries.one(w.order)
    base = w
    while m:
        if m & 1:
            out = out * base
        base = base * base
        m >>= 1
    return out


def cos_delta(t, phi):
    """1 - e^{-t} + e^{-t} cos(phi); stays in [1 - 2e^{-t}, 1] subset [-1, 1]."""
    x = 1.0 - math.exp(-t) * (1.0 - np.cos(phi))
    if np.any(x < -1 - 1e-12) or np.any(x > 1 + 1e-12):
        raise ArithmeticError("cos(delta) left [-1, 1]")
    return x


def lambda_fourier(t, k, n, Q=1024):
    """Fourier-in-phi extraction of the degree-(n+1) coefficient.

    Evaluates U_n (the 1/(1-2xz+z^2) coefficient family) by its three-term
    recurrence U_{m+1} = 2x U_m - U_{m-1} on the phi grid and averages
    against cos(k phi).
    """
    if Q < 2 * (n + k) + 2:
        raise ValueError("quadrature grid too coarse for the harmonic content")
    phi = 2.0 * np.pi * np.arange(Q) / Q
    x = cos_delta(t, phi)
    um1 = np.ones_like(x)
    if n == 0:
        u = um1
    else:
        u = 2.0 * x
        for _ in range(n - 1):
            um1, u = u, 2.0 * x * u - um1
    return float(np.mean(u * np.cos(k * phi)))


def lambda_legendre_route(t, n, k):
    """Assembles the coefficient from squared Legendre data.

    U_n(cos delta) = sum_{i+j=n} P_i(cos delta) P_j(cos delta) with each
    factor expanded at the equal angle cos theta = sqrt(1 - e^{-t}); the
    product-to-sum rule turns squared-weight cosine series into the cos(k
    phi) coefficient.  Returns (value, min_summand); every summand is a
    product of squares and positive weights, so min_summand >= 0 certifies
    nonnegativity structurally.
    """
    if k > n:
        return 0.0, 0.0
    ct = math.sqrt(1.0 - math.exp(-t))
    expansions = [lg.equal_angle_expansion(i, ct) for i in range(n + 1)]
    target = np.zeros(n + 1)
    min_summand = math.inf
    for i in range(n + 1):
        ai = expansions[i]
        aj = expansions[n - i]
        for ka in range(i + 1):
            if ai[ka] == 0.0:
                continue
            for lb in range(n - i + 1):
                s = 0.5 * ai[ka] * aj[lb]
                for m in (ka + lb, abs(ka - lb)):
                    if m <= n:
                        target[m] += s
                        if m == k:
                            min_summand = min(min_summand, s)
    value = target[k] if k == 0 else 0.5 * target[k]
    if min_summand is math.inf:
        min_summand = 0.0
    return value, min_summand


@dataclass(frozen=True)
class LambdaTable:
    """Matrix of the kernel coefficients at one time, rows k, columns n."""

    t: float
    values: np.ndarray  # shape (maxK+1, maxN+1)

    @property
    def max_k(self):
        return self.values.shape[0] - 1

    @property
    def max_n(self):
        return self.values.shape[1] - 1

    def check_invariants(self, tol=1e-12):
        ok_nonneg = bool(self.values.min() >= -tol)
        tri = all(
            abs(self.values[k, n]) <= tol
            for k in range(self.max_k + 1)
            for n in range(min(k, self.max_n + 1))
        )
        return ok_nonneg, tri


def lambda_table(t, max_n, max_k=None):
    max_k = max_n if max_k is None else max_k
    rows = [lambda_series(t, k, max_n) for k in range(max_k + 1)]
    return LambdaTable(t=float(t), values=np.vstack(rows))


def oracle_triangle(t_values, n_max, Q=1024, legendre_n_max=None):
    """Max pairwise discrepancy of the three routes over a (t, n, k) grid."""
    legendre_n_max = n_max if legendre_n_max is None else legendre_n_max
    worst = 0.0
    min_summand = math.inf
    for t in t_values:
        series_vals = [lambda_series(t, kk, n_max) for kk in range(n_max + 1)]
        for n in range(n_max + 1):
            for k in range(n + 1):
                sv = series_vals[k][n]
                fv = lambda_fourier(t, k, n, Q)
                worst = max(worst, abs(sv - fv))
                if n <= legendre_n_max:
                    lv, ms = lambda_legendre_route(t, n, k)
                    worst = max(worst, abs(sv - lv), abs(fv - lv))
                    min_summand = min(min_summand, ms)
    return worst, min_summand


# -- the order-of-summation identity ----------------------------------------

def milin_generating_identity(f, N, z_samples, tolerance=1e-10):
    """Both sides of the summation-order identity, evaluated at samples.

    Left: sum_n [sum_{k<=n} (4/k - k|c_k(0)|^2)(n-k+1)] z^{n+1};
    right: z/(1-z)^2 times sum_k (4/k - k|c_k(0)|^2) z^k.  Truncated at
    degree N+1 on both sides; sample points must satisfy |z| <= 0.5.
    """
    logc = fn.log_coefficients(f, N)
    kk = np.arange(1, N + 1)
    ck = 2.0 * np.asarray(logc.gamma[:N])
    weights = 4.0 / kk - kk * np.abs(ck) ** 2
    lhs_coeffs = np.zeros(N + 2, dtype=complex)
    for n in range(1, N + 1):
        k = kk[:n]
        lhs_coeffs[n + 1] = np.sum(weights[:n] * (n - k + 1))
    lhs = PowerSeries(lhs_coeffs)
    kser = PowerSeries(np.arange(N + 2, dtype=complex))
    wser = np.zeros(N + 2, dtype=complex)
    wser[1 : N + 1] = weights
    rhs = kser * PowerSeries(wser)
    rep = BoundReport("generating-identity", tolerance)
    # identical through degree N+1, so the tail bound is only the roundoff floor
    scale = max(float(np.max(np.abs(lhs_coeffs))), 1.0)
    for z in z_samples:
        if abs(z) > 0.5:
            raise ValueError("sample points must satisfy |z| <= 0.5")
        dv = abs(ps.evaluate(lhs, z) - ps.evaluate(rhs, z))
        rep.add(f"z={z}", dv, tolerance * scale)
    rep.meta["coeff_scale"] = scale
    return rep


# -- boundary integrals and the decomposition --------------------------------

def a_k_integral(chain, k, t, r, Q=1024):
    """(1/2pi) Int Re{p(z1,t)} |2 C0k - k c_k(t) z1^k|^2 dtheta at |z1| = r.

    C0k = 1 + sum_{l<=k} l c_l(t) z1^l.  Nonnegative up to quadrature noise
    since Re p > 0 and the weight is a squared modulus.
    """
    if hasattr(chain, "p_on_circle"):
        p, z1 = chain.p_on_circle(t, r, Q)
    else:
        _, z1 = chain.boundary_values(t, r, Q)
        p = chain.p_values(z1, t)
    X = np.full(Q, 2.0, dtype=complex)
    for l in range(1, k + 1):
        X += 2.0 * l * chain.log_coeff(t, l) * z1**l
    if k >= 1:
        X -= k * chain.log_coeff(t, k) * z1**k
    return float(np.mean(p.real * np.abs(X) ** 2))


def _a_k_row(chain, t, r, Q, kmax):
    """A_k for k = 1..kmax sharing one set of boundary data."""
    if hasattr(chain, "p_on_circle"):
        p, z1 = chain.p_on_circle(t, r, Q)
    else:
        _, z1 = chain.boundary_values(t, r, Q)
        p = chain.p_values(z1, t)
    rep = p.real
    out = np.empty(kmax)
    C2 = np.full(Q, 2.0, dtype=complex)  # 2 * C0k, grown incrementally
    for k in range(1, kmax + 1):
        lc = chain.log_coeff(t, k)
        C2 += 2.0 * k * lc * z1**k
        X = C2 - k * lc * z1**k
        out[k - 1] = np.mean(rep * np.abs(X) ** 2)
    return out


def a_k_ladder(chain, k, t, r_ladder=(0.9, 0.99, 0.999), Q=1024):
    """Values along the r-ladder plus the linear-in-(1-r) extrapolant.

    The integral is defined as an r -> 1 limit; the ladder replaces the
    limit and the extrapolation from the two largest radii estimates it.
    """
    vals = [a_k_integral(chain, k, t, r, Q) for r in r_ladder]
    e1, e2 = 1.0 - r_ladder[-2], 1.0 - r_ladder[-1]
    extrap = (vals[-1] * e1 - vals[-2] * e2) / (e1 - e2)
    return np.asarray(vals), float(extrap)


@dataclass
class DecompositionResult:
    n: int
    lhs: float
    rhs_raw: float
    rhs_extrapolated: float
    r_raw: float
    rhs_by_radius: dict
    t_tail_estimate: float
    min_g: float
    times: np.ndarray = field(repr=False, default=None)
    g_raw: np.ndarray = field(repr=False, default=None)

    @property
    def residual_raw(self):
        return abs(self.rhs_raw - self.lhs)

    @property
    def residual_extrapolated(self):
        return abs(self.rhs_extrapolated - self.lhs)

    def to_dict(self):
        return {
            "n": self.n,
            "lhs": self.lhs,
            "rhs_raw": self.rhs_raw,
            "rhs_extrapolated": self.rhs_extrapolated,
            "r_raw": self.r_raw,
            "rhs_by_radius": {f"{r}": v for r, v in sorted(self.rhs_by_radius.items())},
            "t_tail_estimate": self.t_tail_estimate,
            "min_g": self.min_g,
        }


def milin_decomposition_check(
    f,
    chain,
    n,
    T=8.0,
    dt=0.02,
    r_raw=0.99,
    r_ladder=(0.9, 0.99, 0.999),
    Q=2048,
):
    """Compare sum_k (4/k - k|c_k(0)|^2)(n-k+1) with Int_0^T g_n(t) dt.

    g_n(t) = sum_{k=1}^n L[k][n](t) A_k(t).  A_k carries an r -> 1 limit;
    the result reports the integral both at the raw radius and with the
    ladder extrapolation, plus a T-truncation estimate from the e^{-kt}
    decay of the kernel coefficients.
    """
    lhs = fn.milin_weighted_form(f, n)
    nt = int(round(T / dt)) + 1
    times = np.linspace(0.0, T, nt)
    lam = np.empty((nt, n))
    for i, t in enumerate(times):
        lam[i] = [lambda_series(t, k, n)[n] for k in range(1, n + 1)]
    radii = tuple(sorted(set(r_ladder) | {r_raw}))
    a_vals = {r: np.empty((nt, n)) for r in radii}
    for i, t in enumerate(times):
        for r in radii:
            a_vals[r][i] = _a_k_row(chain, t, r, Q, n)
    g_by_r = {r: np.sum(lam * a_vals[r], axis=1) for r in radii}
    rhs_by_r = {r: float(np.trapezoid(g_by_r[r], times)) for r in radii}
    e1, e2 = 1.0 - r_ladder[-2], 1.0 - r_ladder[-1]
    v1, v2 = rhs_by_r[r_ladder[-2]], rhs_by_r[r_ladder[-1]]
    rhs_extrap = (v2 * e1 - v1 * e2) / (e1 - e2)
    # discarded mass beyond T: lambda decays at least like e^{-max(1,k) t}
    tail = float(
        sum(
            lam[-1, j] * a_vals[radii[-1]][-1, j] / max(1, k)
            for j, k in enumerate(range(1, n + 1))
        )
    )
    min_g = float(min(g_by_r[r].min() for r in radii))
    return DecompositionResult(
        n=n,
        lhs=lhs,
        rhs_raw=rhs_by_r[r_raw],
        rhs_extrapolated=float(rhs_extrap),
        r_raw=r_raw,
        rhs_by_radius=rhs_by_r,
        t_tail_estimate=tail,
        min_g=min_g,
        times=times,
        g_raw=g_by_r[r_raw],
    )
