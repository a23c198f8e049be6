"""Core descriptors: particle, environment, frequency grids and PSD containers.

All quantities are SI. Spectral densities are one-sided throughout the
package (variance = integral of the PSD over f >= 0). Every type here is an
immutable value; all operations on them are pure functions.
"""

from __future__ import annotations

import math
from dataclasses import dataclass, field, replace

import numpy as np

from .constants import AMU_TO_KG
from .errors import DomainError

# Bulk densities in kg/m^3 for the material presets.
MATERIAL_DENSITIES = {
    "silica": 2200.0,
    "osmium": 22590.0,
    "gold": 19300.0,
    "platinum": 21450.0,
}

# Molecular masses of common residual gases, kg.
GAS_MASSES = {
    "helium": 4.002602 * AMU_TO_KG,
    "hydrogen": 2.01588 * AMU_TO_KG,
    "nitrogen": 28.0134 * AMU_TO_KG,
}

# Silica optical permittivity at the two laser wavelengths used by the
# readout models. The imaginary parts are calibration values: they set the
# absorbed optical power and are chosen so the thermal model reproduces the
# expected internal-temperature ranges (see README, "Calibrated defaults").
SILICA_EPS_OPT = {
    1064e-9: 2.1 + 1.34e-7j,
    1550e-9: 2.1 + 5.13e-7j,
}


def silica_optical_permittivity(wavelength):
    """Silica permittivity preset closest to ``wavelength`` (m)."""
    key = min(SILICA_EPS_OPT, key=lambda w: abs(w - wavelength))
    return SILICA_EPS_OPT[key]


def absorption_coefficient(eps_bb):
    """Im[(eps-1)/(eps+2)] of a complex permittivity."""
    return ((eps_bb - 1.0) / (eps_bb + 2.0)).imag


@dataclass(frozen=True)
class ParticleSpec:
    """Geometry, material and charge of the levitated sphere.

    Parameters
    ----------
    radius : float
        Sphere radius in m.
    density : float
        Bulk density in kg/m^3.
    material : str
        One of the preset tags or "custom".
    charge : float
        Net charge in C (>= 0).
    eps_opt : complex
        Relative permittivity in the optical band of the readout laser.
    eps_bb : complex
        Relative permittivity averaged over the blackbody band.
    """

    radius: float
    density: float
    material: str = "custom"
    charge: float = 0.0
    eps_opt: complex = 2.1 + 1.34e-7j
    eps_bb: complex = 2.1 + 0.56j

    def __post_init__(self):
        if self.radius <= 0:
            raise DomainError("radius must be > 0", operation="ParticleSpec")
        if self.density <= 0:
            raise DomainError("density must be > 0", operation="ParticleSpec")
        if self.charge < 0:
            raise DomainError("charge must be >= 0", operation="ParticleSpec")
        if self.eps_opt.imag < 0 or self.eps_bb.imag < 0:
            raise DomainError("Im(eps) must be >= 0", operation="ParticleSpec")

    @property
    def mass(self):
        return particle_mass(self)

    @property
    def volume(self):
        return (4.0 / 3.0) * math.pi * self.radius**3


def make_particle(material, radius, charge=0.0, density=None, wavelength=None):
    """Build a ParticleSpec from a material preset.

    ``density`` overrides the preset (the reference mass convention used in
    parts of the literature corresponds to a lower effective silica density).
    ``wavelength`` selects the optical permittivity preset for silica.
    """
    if density is None:
        try:
            density = MATERIAL_DENSITIES[material]
        except KeyError:
            raise DomainError(
                f"unknown material {material!r} and no density given",
                operation="make_particle",
            ) from None
    eps_opt = 2.1 + 0.0j
    if material == "silica":
        eps_opt = silica_optical_permittivity(wavelength or 1064e-9)
    return ParticleSpec(
        radius=radius, density=density, material=material, charge=charge,
        eps_opt=eps_opt,
    )


def particle_mass(p: ParticleSpec):
    """Sphere mass (4/3) pi R^3 rho in kg."""
    return (4.0 / 3.0) * math.pi * p.radius**3 * p.density


@dataclass(frozen=True)
class EnvironmentSpec:
    """Residual gas and radiation environment of the trap.

    ``alpha`` is the thermal accommodation factor entering the gas heat
    flow; ``momentum_accommodation`` sets the temperature of re-emitted
    molecules, T_e = T_i + a (T - T_i). The two are independent parameters.
    ``eps_abs`` = Im[(eps_bb - 1)/(eps_bb + 2)] controls blackbody exchange.
    """

    pressure: float                 # Pa
    temperature: float              # K (gas = trap environment)
    molecular_mass: float = GAS_MASSES["helium"]  # kg
    alpha: float = 0.4
    momentum_accommodation: float = 0.4
    heat_capacity_ratio: float = 5.0 / 3.0
    eps_abs: float = 0.1

    def __post_init__(self):
        if self.pressure < 0:
            raise DomainError("pressure must be >= 0", operation="EnvironmentSpec")
        if self.temperature <= 0:
            raise DomainError("temperature must be > 0", operation="EnvironmentSpec")
        if self.molecular_mass <= 0:
            raise DomainError("molecular mass must be > 0", operation="EnvironmentSpec")
        if not 0 < self.alpha <= 1:
            raise DomainError("alpha must be in (0, 1]", operation="EnvironmentSpec")
        if not 0 <= self.momentum_accommodation <= 1:
            raise DomainError("momentum accommodation must be in [0, 1]",
                              operation="EnvironmentSpec")
        if self.heat_capacity_ratio <= 1:
            raise DomainError("heat capacity ratio must be > 1",
                              operation="EnvironmentSpec")
        if self.eps_abs < 0:
            raise DomainError("eps_abs must be >= 0", operation="EnvironmentSpec")

    def with_pressure(self, pressure):
        return replace(self, pressure=pressure)


@dataclass(frozen=True)
class FrequencyGrid:
    """Strictly increasing grid of positive frequencies in Hz."""

    frequencies: np.ndarray
    spacing: str = "log"  # "linear" or "log"

    def __post_init__(self):
        f = np.asarray(self.frequencies, dtype=float)
        object.__setattr__(self, "frequencies", f)
        if f.ndim != 1 or f.size < 1:
            raise DomainError("grid must be a 1-d array", operation="FrequencyGrid")
        if f[0] <= 0 or np.any(np.diff(f) <= 0):
            raise DomainError("grid must be strictly increasing and > 0",
                              operation="FrequencyGrid")

    def __len__(self):
        return self.frequencies.size

    @property
    def omega(self):
        return 2.0 * math.pi * self.frequencies


def make_log_grid(f_min, f_max, n):
    """n log-spaced frequencies from f_min to f_max inclusive."""
    if not (0 < f_min < f_max) or n < 2:
        raise DomainError("need 0 < f_min < f_max and n >= 2",
                          operation="make_log_grid")
    return FrequencyGrid(np.geomspace(f_min, f_max, int(n)), spacing="log")


def make_linear_grid(f_min, f_max, n):
    """n linearly spaced frequencies from f_min to f_max inclusive."""
    if not (0 < f_min < f_max) or n < 2:
        raise DomainError("need 0 < f_min < f_max and n >= 2",
                          operation="make_linear_grid")
    return FrequencyGrid(np.linspace(f_min, f_max, int(n)), spacing="linear")


@dataclass(frozen=True)
class NoiseSpectrum:
    """One-sided PSD channels on a common frequency grid.

    ``channels`` maps a source label to its PSD array; the "total" channel
    is always the pointwise sum of the listed sources (uncorrelated noise).
    ``units`` tags the physical unit of the PSD values.
    """

    grid: FrequencyGrid
    channels: dict
    units: str = "N^2/Hz"
    convention: str = "one-sided"
    meta: dict = field(default_factory=dict)

    def __post_init__(self):
        n = len(self.grid)
        clean = {}
        for label, values in self.channels.items():
            v = np.broadcast_to(np.asarray(values, dtype=float), (n,)).copy()
            if np.any(v < 0):
                raise DomainError(f"channel {label!r} has negative PSD values",
                                  operation="NoiseSpectrum")
            clean[label] = v
        if "total" not in clean:
            clean["total"] = sum(
                (v for k, v in clean.items()), np.zeros(n)
            )
        object.__setattr__(self, "channels", clean)

    @property
    def sources(self):
        return [k for k in self.channels if k != "total"]

    @property
    def total(self):
        return self.channels["total"]

    def __getitem__(self, label):
        return self.channels[label]

    def dominant_source(self, frequency):
        """Label of the largest source channel at the grid point nearest
        ``frequency``."""
        i = int(np.argmin(np.abs(self.grid.frequencies - frequency)))
        return max(self.sources, key=lambda k: self.channels[k][i])


@dataclass(frozen=True)
class SweepPoint:
    """One row of a sensitivity sweep.

    ``lambda_min`` is the collapse rate giving SNR = 1 against the total
    force noise at correlation length ``r_c``; ``delta_f`` the measurement
    bandwidth; ``s_xx`` the displacement imprecision used for it.
    """

    parameter: str
    value: float
    lambda_min: float
    delta_f: float
    s_xx: float
    s_ff_total: float
    r_c: float
    dominant: str
    flags: tuple = ()
