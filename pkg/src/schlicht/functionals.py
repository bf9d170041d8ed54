"""Coefficient functionals and inequalities for normalized univalent maps.

Covers the classical chain: the exterior area sum, coefficient bounds
(sharp and Littlewood's e*n), integral means, growth/distortion envelopes,
the odd-transform partial sums, logarithmic coefficients, the Milin
functional in both its double-sum and weighted forms, and the
exponentiation inequality bounding |beta_k|^2 sums.
"""

from __future__ import annotations

import math
from dataclasses import dataclass

import numpy as np

from . import series as ps
from . import univalent as uv
from .errors import RadiusExceeded
from .report import BoundReport
from .series import PowerSeries


@dataclass(frozen=True)
class LogCoefficients:
    """gamma_1..gamma_N with log(f(z)/z) = 2 sum gamma_k z^k."""

    gamma: tuple
    source: str = ""

    def __len__(self):
        return len(self.gamma)

    def c(self, k):
        """Chain-normalized coefficient c_k = 2 gamma_k."""
        return 2.0 * self.gamma[k - 1]


def area_sum(g, N):
    """sum_{n<=N} n |b_n|^2 for an exterior map; bounded by 1."""
    if N > len(g.tail):
        raise ValueError(f"only {len(g.tail)} tail coefficients available")
    b = np.asarray(g.tail[:N])
    return float(np.sum(np.arange(1, N + 1) * np.abs(b) ** 2))


def coefficient_report(f, N, tolerance=1e-9):
    """|a_n| against the sharp bound n and Littlewood's e*n, for 2 <= n <= N."""
    rep = BoundReport("coefficients", tolerance)
    a = np.abs(f.coeffs)
    for n in range(2, N + 1):
        rep.add(f"n={n:02d}:sharp", a[n], n)
        rep.add(f"n={n:02d}:littlewood", a[n], math.e * n)
    return rep


def integral_mean(f, p, r, Q=1024, r_max=None):
    """M_p(r, f) by trapezoid quadrature over the circle |z| = r."""
    if p <= 0:
        raise ValueError("p must be positive")
    if r_max is not None and r > r_max:
        raise RadiusExceeded(f"r = {r} beyond allowed {r_max}")
    theta = 2.0 * np.pi * np.arange(Q) / Q
    vals = ps.evaluate_many(f.series, r * np.exp(1j * theta))
    return float(np.mean(np.abs(vals) ** p) ** (1.0 / p))


def littlewood_radius(n):
    """The radius 1 - 1/n at which the coefficient bound chain is evaluated."""
    return 1.0 - 1.0 / n


def littlewood_factor(n):
    """n (1 + 1/(n-1))^{n-1}, the bound that sits below e*n."""
    return n * (1.0 + 1.0 / (n - 1.0)) ** (n - 1.0)


def pointwise_bounds_check(f, grid, tolerance=1e-9):
    """Growth, distortion, |z f'/f| and the pre-Schwarzian envelope.

    grid: iterable of complex points with |z| < 1.  Failures are recorded
    in the report, never raised.
    """
    rep = BoundReport("pointwise-bounds", tolerance)
    fp = f.series.derivative()
    fpp = fp.derivative()
    for i, z in enumerate(grid):
        r = abs(z)
        cid = f"z{i:03d}(r={r:.4f})"
        val = ps.evaluate(f.series, z)
        dval = ps.evaluate(fp, z)
        ddval = ps.evaluate(fpp, z)
        rep.add(f"{cid}:growth-lo", r / (1 + r) ** 2, abs(val))
        rep.add(f"{cid}:growth-hi", abs(val), r / (1 - r) ** 2)
        rep.add(f"{cid}:distortion-lo", (1 - r) / (1 + r) ** 3, abs(dval))
        rep.add(f"{cid}:distortion-hi", abs(dval), (1 + r) / (1 - r) ** 3)
        if abs(val) > 0:
            q = abs(z * dval / val)
            rep.add(f"{cid}:zf'/f-lo", (1 - r) / (1 + r), q)
            rep.add(f"{cid}:zf'/f-hi", q, (1 + r) / (1 - r))
        if abs(dval) > 0:
            w = z * ddval / dval - 2 * r**2 / (1 - r**2)
            rep.add(f"{cid}:pre-schwarzian", abs(w), 4 * r / (1 - r**2))
    return rep


def robertson_sums(f, n):
    """Partial sums S_1..S_n of |c_{2k-1}|^2 for the odd transform of f."""
    if 2 * n - 1 > f.order:
        raise ValueError(f"need order >= {2 * n - 1}")
    h = uv.odd_sqrt_transform(f)
    odd = h.coeffs[1 : 2 * n : 2]
    return np.cumsum(np.abs(odd) ** 2)


def log_coefficients(f, N=None):
    """Logarithmic coefficients from log(f(z)/z) = 2 sum gamma_k z^k."""
    N = f.order - 1 if N is None else N
    F = PowerSeries(f.coeffs[1 : N + 2])  # f(z)/z up to degree N
    L = ps.log(F)
    return LogCoefficients(tuple(0.5 * L.coeffs[1:]), source=f.label)


def milin_functional(f, n, logc=None):
    """The double sum M_n = sum_{m<=n} sum_{k<=m} (k |gamma_k|^2 - 1/k)."""
    logc = log_coefficients(f) if logc is None else logc
    if n > len(logc):
        raise ValueError(f"only {len(logc)} logarithmic coefficients available")
    g = np.asarray(logc.gamma[:n])
    k = np.arange(1, n + 1)
    terms = k * np.abs(g) ** 2 - 1.0 / k
    return float(np.sum(np.cumsum(terms)))


def milin_weighted_form(f, n, logc=None):
    """sum_k (4/k - k |c_k|^2)(n - k + 1) with c_k = 2 gamma_k.

    Equals -4 times the double-sum form; nonnegative exactly when the
    Milin functional is nonpositive.
    """
    logc = log_coefficients(f) if logc is None else logc
    g = np.asarray(logc.gamma[:n])
    k = np.arange(1, n + 1)
    c = 2.0 * g
    return float(np.sum((4.0 / k - k * np.abs(c) ** 2) * (n - k + 1)))


def lebedev_milin_check(alpha, n):
    """Both sides of the exponentiated-coefficient inequality.

    beta = exp-transform of sum alpha_k z^k; returns (lhs, rhs) with
    lhs = sum_{k<=n} |beta_k|^2 and
    rhs = (n+1) exp{ (1/(n+1)) sum_{m<=n} sum_{k<=m} (k|alpha_k|^2 - 1/k) }.
    """
    alpha = list(alpha)
    if n > len(alpha):
        raise ValueError("need at least n alpha coefficients")
    a = PowerSeries([0.0] + alpha[:n])
    beta = ps.exp(a)
    lhs = float(np.sum(np.abs(beta.coeffs) ** 2))
    k = np.arange(1, n + 1)
    terms = k * np.abs(np.asarray(alpha[:n])) ** 2 - 1.0 / k
    expo = float(np.sum(np.cumsum(terms))) / (n + 1)
    rhs = (n + 1) * math.exp(expo)
    return lhs, rhs
