"""Exception types shared across the package.

All of these derive from ValueError so that callers who do not care about
the fine-grained taxonomy can catch a single built-in type.
"""

from __future__ import annotations


class DomainError(ValueError):
    """An input lies outside the mathematical domain of an operation."""


class SingularDensity(ValueError):
    """The density vanishes (or nearly vanishes) at an evaluation point.

    The quantum potential diverges at density nodes; rather than returning
    huge finite numbers that would poison downstream integrals, the grid
    operators raise this error.  ``index`` identifies the offending grid
    point (a tuple of axis indices).
    """

    def __init__(self, index: tuple[int, ...], message: str | None = None):
        self.index = tuple(int(i) for i in index)
        if message is None:
            message = f"density is singular (below threshold) at grid point {self.index}"
        super().__init__(message)


class ImaginaryEnergy(ValueError):
    """A massive mode was requested beyond the wavelength where its energy
    formula turns imaginary.  ``lambda_crit`` is the critical wavelength
    2*pi*hbar/(m*c); only wavelengths strictly above it are valid.
    """

    def __init__(self, lambda_crit: float, wavelength: float | None = None):
        self.lambda_crit = float(lambda_crit)
        self.wavelength = None if wavelength is None else float(wavelength)
        detail = f"critical wavelength {self.lambda_crit:.9e} m"
        if self.wavelength is not None:
            detail = f"wavelength {self.wavelength:.9e} m <= " + detail
        super().__init__(f"mode energy is imaginary: {detail}")


class WrongBranch(ValueError):
    """A massive-branch operation was called with zero mass; the photon
    operations handle that case."""


class InsufficientTail(ValueError):
    """A tabulated spectrum has not decayed enough at its largest wavenumber
    for the correlation transform to be trustworthy."""


class ConfigError(ValueError):
    """A sampler configuration violates one of its invariants; the message
    names the violated invariant."""
