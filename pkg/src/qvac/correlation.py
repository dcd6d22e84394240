"""Correlation length, the Gaussian mode spectrum, and the
spectrum-to-correlation cosine transform.

Thermal suppression of short modes gives the vacuum density noise a
Gaussian spatial spectrum S(k) = exp[-(k*lambda_c/2)^2] with correlation
length lambda_c = 2*hbar/sqrt(2*m*k_B*T); its cosine transform is again a
Gaussian, G(xi) = exp[-(xi/lambda_c)^2], which provides an analytic target
for the numerical transform.  Correlations are normalized to G(0) = 1
(only the shape is physical here), and all transform arithmetic involves
k and xi exclusively through their products, so one code path covers any
correlation-length scale.
"""

from __future__ import annotations

import math
from dataclasses import dataclass

import numpy as np

from .constants import CONSTANTS
from .errors import DomainError, InsufficientTail

#: The transform refuses spectra whose weight at the largest tabulated
#: wavenumber exceeds this fraction of the spectrum maximum.
TAIL_FRACTION = 1e-12

#: Minimum number of spectrum samples for the transform.
MIN_SPECTRUM_POINTS = 256

#: Default wavenumber cutoff, in units of 1/lambda_c, used when building a
#: Gaussian spectrum: exp[-(12/2)^2] ~ 2.3e-16 satisfies the tail bound.
DEFAULT_KMAX_LC = 12.0

#: Default number of samples of a generated Gaussian spectrum.
DEFAULT_SPECTRUM_POINTS = 4096


@dataclass(frozen=True)
class ModeSpectrum:
    """Tabulated spectral weights S(k) >= 0 on a uniform ascending k grid.

    Only k >= 0 is stored; S is implicitly even, S(-k) = S(k).
    """

    k_grid: np.ndarray
    s_values: np.ndarray

    def __post_init__(self):
        k = np.asarray(self.k_grid, dtype=float)
        s = np.asarray(self.s_values, dtype=float)
        object.__setattr__(self, "k_grid", k)
        object.__setattr__(self, "s_values", s)
        if k.ndim != 1 or s.shape != k.shape:
            raise DomainError("k_grid and s_values must be 1-D arrays of equal length")
        if k.size < 2:
            raise DomainError("spectrum needs at least 2 samples")
        diffs = np.diff(k)
        if np.any(diffs <= 0.0):
            raise DomainError("k_grid must be strictly ascending")
        step = float(diffs.mean())
        if np.max(np.abs(diffs - step)) > 1e-9 * step:
            raise DomainError("k_grid must be uniform within 1e-9 relative")
        if np.any(~np.isfinite(s)) or np.any(s < 0.0):
            raise DomainError("s_values must be finite and >= 0")


@dataclass(frozen=True)
class CorrelationFunction:
    """Normalized spatial correlation G(xi) on lags xi >= 0, with the
    correlation length recovered as the lag where G first crosses 1/e."""

    xi_grid: np.ndarray
    g_values: np.ndarray
    lambda_c: float


def correlation_length(mass: float, temperature: float) -> float:
    """Vacuum-noise correlation length 2*hbar/sqrt(2*m*k_B*T), in m."""
    if not mass > 0.0:
        raise DomainError("mass must be > 0")
    if not temperature > 0.0:
        raise DomainError("temperature must be > 0")
    return 2.0 * CONSTANTS.hbar / math.sqrt(2.0 * mass * CONSTANTS.k_boltzmann * temperature)


def gaussian_spectrum(k, lambda_c: float):
    """Gaussian spectral weight exp[-(k*lambda_c/2)^2]; accepts scalars or
    arrays, any real k (even in k by construction)."""
    if not lambda_c > 0.0:
        raise DomainError("lambda_c must be > 0")
    k = np.asarray(k, dtype=float)
    out = np.exp(-((k * lambda_c / 2.0) ** 2))
    return out if out.ndim else float(out)


def analytic_correlation(xi, lambda_c: float):
    """Closed-form correlation exp[-(xi/lambda_c)^2] of the Gaussian
    spectrum (its own cosine-transform pair)."""
    if not lambda_c > 0.0:
        raise DomainError("lambda_c must be > 0")
    xi = np.asarray(xi, dtype=float)
    out = np.exp(-((xi / lambda_c) ** 2))
    return out if out.ndim else float(out)


def gaussian_mode_spectrum(
    lambda_c: float,
    points: int = DEFAULT_SPECTRUM_POINTS,
    k_max: float | None = None,
) -> ModeSpectrum:
    """Tabulate the Gaussian spectrum on [0, k_max] (default 12/lambda_c,
    where the weight is ~2e-16 and the transform tail bound holds)."""
    if not lambda_c > 0.0:
        raise DomainError("lambda_c must be > 0")
    if k_max is None:
        k_max = DEFAULT_KMAX_LC / lambda_c
    k = np.linspace(0.0, k_max, points)
    return ModeSpectrum(k, gaussian_spectrum(k, lambda_c))


def e_folding_lag(xi_grid: np.ndarray, g_values: np.ndarray) -> float:
    """Lag where a correlation first decays through 1/e, by linear
    interpolation; NaN if it never does within the grid."""
    target = 1.0 / math.e
    below = np.nonzero(g_values < target)[0]
    if below.size == 0 or below[0] == 0:
        return math.nan
    j = int(below[0])
    g0, g1 = float(g_values[j - 1]), float(g_values[j])
    x0, x1 = float(xi_grid[j - 1]), float(xi_grid[j])
    return x0 + (g0 - target) / (g0 - g1) * (x1 - x0)


def correlation_from_spectrum(spectrum: ModeSpectrum, xi_grid) -> CorrelationFunction:
    """Cosine-transform a spectrum into its spatial correlation function.

    G(xi) is proportional to the integral of cos(k*xi) S(k) dk over the
    tabulated grid (trapezoid rule) and is normalized so G(0) = 1.  The
    spectrum must have decayed below TAIL_FRACTION of its maximum at the
    last grid point, otherwise the truncated transform would ring.
    """
    k = spectrum.k_grid
    s = spectrum.s_values
    if k.size < MIN_SPECTRUM_POINTS:
        raise DomainError(f"spectrum needs at least {MIN_SPECTRUM_POINTS} points for the transform")
    s_max = float(s.max())
    if not s_max > 0.0:
        raise DomainError("spectrum is identically zero")
    if float(s[-1]) > TAIL_FRACTION * s_max:
        raise InsufficientTail(
            f"S(k_max)/max(S) = {float(s[-1]) / s_max:.3e} exceeds {TAIL_FRACTION:g}; "
            "extend the k grid"
        )
    xi = np.asarray(xi_grid, dtype=float)
    if xi.ndim != 1 or xi.size == 0 or np.any(xi < 0.0):
        raise DomainError("xi_grid must be a 1-D array of non-negative lags")
    phase = np.outer(xi, k)
    g_raw = np.trapezoid(np.cos(phase) * s, k, axis=1)
    norm = np.trapezoid(s, k)
    g = g_raw / norm
    return CorrelationFunction(xi_grid=xi, g_values=g, lambda_c=e_folding_lag(xi, g))
