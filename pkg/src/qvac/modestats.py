"""Thermal statistics of density-fluctuation modes.

A mode of wavelength lambda carries energy

    E(lambda) = m*gamma*c^2 * sqrt(1 - (hbar/(m*c))^2 (2*pi/lambda)^2)

valid for (hbar/(m*c))(2*pi/lambda) < 1; Boltzmann weighting of the
n-particle occupations then gives the usual Bose mean energy
E/(exp(E/kT) - 1) and, multiplied by the scalar mode density k^2/(2*pi^2),
the spectral density of the thermal vacuum fluctuations of a massive
field.  The photon branch (m = 0, one factor 2 for polarization) is a
separate code path that reproduces the classical black-body law; it is not
obtained as a limit of the massive formula, whose square root turns
imaginary for any wavelength as m -> 0.

All exponentials are evaluated through the dimensionless groups
x = hbar*omega/kT and mu = m*c^2/kT; Boltzmann weights with exponents
below -700 return exactly 0.0 instead of underflowing noisily.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from enum import Enum

from .constants import CONSTANTS, ThermalState
from .errors import DomainError, ImaginaryEnergy, WrongBranch
from .numerics import golden_section_max

#: Boltzmann exponents beyond this magnitude give an exact zero weight.
EXP_CUTOFF = 700.0

#: hbar*omega/(k_B*T) at the maximum of the photon spectral density,
#: the root of 3*(1 - exp(-x)) = x.  Located numerically by wien_peak.
WIEN_X = 2.8214393721220787


class Branch(Enum):
    MASSIVE = "Massive"
    PHOTON = "Photon"


@dataclass(frozen=True)
class ModeEnergy:
    """Energy of one fluctuation mode, tagged with its branch."""

    wavelength: float
    energy: float
    branch: Branch

    def __post_init__(self):
        if not (math.isfinite(self.energy) and self.energy >= 0.0):
            raise DomainError("mode energy must be finite and >= 0")


@dataclass(frozen=True)
class SpectralPoint:
    """One point of a massive-branch spectrum: density of modes, mean
    thermal energy per mode, and their product (one polarization)."""

    k: float
    mode_density: float
    mean_energy: float
    spectral_density: float

    def __post_init__(self):
        expected = self.k**2 / (2.0 * math.pi**2)
        if not math.isclose(self.mode_density, expected, rel_tol=1e-12):
            raise DomainError("mode_density must equal k^2/(2*pi^2)")
        prod = self.mode_density * self.mean_energy
        if not (prod == self.spectral_density or math.isclose(self.spectral_density, prod, rel_tol=1e-12)):
            raise DomainError("spectral_density must equal mode_density * mean_energy")


def _sqrt_factor(wavelength: float, state: ThermalState) -> float:
    """sqrt(1 - (lambda_crit/lambda)^2) with the domain guard."""
    if state.mass == 0.0:
        raise WrongBranch("mass is zero; use the photon operations")
    if not wavelength > 0.0:
        raise DomainError("wavelength must be > 0")
    lambda_crit = 2.0 * math.pi * CONSTANTS.hbar / (state.mass * CONSTANTS.c)
    ratio = lambda_crit / wavelength
    if ratio >= 1.0:
        raise ImaginaryEnergy(lambda_crit, wavelength)
    return math.sqrt((1.0 - ratio) * (1.0 + ratio))


def mode_energy_massive(wavelength: float, state: ThermalState) -> float:
    """Relativistic mode energy m*gamma*c^2*sqrt(1 - (hbar k/(m c))^2) in J.

    Raises ImaginaryEnergy (carrying the critical wavelength
    2*pi*hbar/(m*c)) once the square root would turn imaginary, and
    WrongBranch for massless states.
    """
    return state.mass * state.gamma * CONSTANTS.c**2 * _sqrt_factor(wavelength, state)


def _energy_over_kt(wavelength: float, state: ThermalState) -> float:
    """E(lambda)/(k_B*T) computed in dimensionless groups (no overflow)."""
    mu = state.mass * CONSTANTS.c**2 / (CONSTANTS.k_boltzmann * state.temperature)
    return mu * state.gamma * _sqrt_factor(wavelength, state)


def mode_probability_nonrel(wavelength: float, state: ThermalState) -> float:
    """Boltzmann weight exp[-(hbar^2/(2 m k_B T)) (2*pi/lambda)^2].

    This is the Gaussian-in-wavenumber suppression of short modes; it
    equals gaussian_spectrum(k, correlation_length(m, T)) at k = 2*pi/lambda.
    """
    if not wavelength > 0.0:
        raise DomainError("wavelength must be > 0")
    if not state.mass > 0.0:
        raise DomainError("mode_probability_nonrel requires mass > 0")
    k = 2.0 * math.pi / wavelength
    exponent = (CONSTANTS.hbar * k) ** 2 / (
        2.0 * state.mass * CONSTANTS.k_boltzmann * state.temperature
    )
    if exponent > EXP_CUTOFF:
        return 0.0
    return math.exp(-exponent)


def mode_probability_rel(wavelength: float, state: ThermalState) -> float:
    """Boltzmann weight exp[-E(lambda)/k_B T] of the relativistic mode."""
    x = _energy_over_kt(wavelength, state)
    if x > EXP_CUTOFF:
        return 0.0
    return math.exp(-x)


def n_particle_weight(wavelength: float, n: int, state: ThermalState) -> float:
    """Weight exp[-n E(lambda)/k_B T] of the n-particle occupation."""
    if n != int(n) or n < 0:
        raise DomainError("n must be a non-negative integer")
    x = n * _energy_over_kt(wavelength, state)
    if x > EXP_CUTOFF:
        return 0.0
    return math.exp(-x)


def mean_energy(wavelength: float, state: ThermalState) -> float:
    """Bose mean energy E/(exp(E/kT) - 1) of the massive mode, in J.

    Summing the geometric occupation series gives exactly this closed
    form; expm1 keeps it accurate in the equipartition limit E << kT.
    """
    x = _energy_over_kt(wavelength, state)
    e = mode_energy_massive(wavelength, state)
    if x > EXP_CUTOFF:
        return e * math.exp(-x)
    return e / math.expm1(x)


def mode_density(k: float) -> float:
    """Independent modes per volume per wavenumber of a scalar field:
    k^2/(2*pi^2)."""
    if not k > 0.0:
        raise DomainError("wavenumber must be > 0")
    return k**2 / (2.0 * math.pi**2)


def spectral_density_massive(k: float, state: ThermalState) -> SpectralPoint:
    """Spectral density of massive-field vacuum fluctuations at wavenumber k.

    The product mode_density(k) * mean_energy(2*pi/k), with exactly one
    polarization for the scalar density field.
    """
    wavelength = 2.0 * math.pi / k
    nk = mode_density(k)
    me = mean_energy(wavelength, state)
    return SpectralPoint(k=k, mode_density=nk, mean_energy=me, spectral_density=nk * me)


def photon_mean_energy(omega: float, temperature: float) -> float:
    """Planck mean energy hbar*omega/(exp(hbar*omega/kT) - 1), in J."""
    if not omega > 0.0:
        raise DomainError("omega must be > 0")
    if not temperature > 0.0:
        raise DomainError("temperature must be > 0")
    x = CONSTANTS.hbar * omega / (CONSTANTS.k_boltzmann * temperature)
    e = CONSTANTS.hbar * omega
    if x > EXP_CUTOFF:
        return e * math.exp(-x)
    return e / math.expm1(x)


def planck_spectral_density(omega: float, temperature: float) -> float:
    """Black-body energy density per angular frequency, J*s/m^3.

    (omega^2/(pi^2 c^3)) * hbar*omega/(exp(hbar*omega/kT) - 1); the factor
    2 for the photon polarizations is already included relative to the
    single-polarization scalar mode density.
    """
    return (omega**2 / (math.pi**2 * CONSTANTS.c**3)) * photon_mean_energy(omega, temperature)


def wien_peak(temperature: float) -> float:
    """Angular frequency maximizing planck_spectral_density, rad/s.

    The search runs by golden section in the dimensionless variable
    x = hbar*omega/kT, so hbar*omega_max/(k_B T) is bit-identical for
    every temperature; the bracket [0.05, 25] safely contains the single
    interior maximum near x = 2.8214.
    """
    if not temperature > 0.0:
        raise DomainError("temperature must be > 0")

    def neg_shape(x: float) -> float:
        return x**3 / math.expm1(x)

    x_peak = golden_section_max(neg_shape, 0.05, 25.0, rel_tol=1e-12)
    return x_peak * CONSTANTS.k_boltzmann * temperature / CONSTANTS.hbar
