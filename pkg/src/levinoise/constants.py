"""Physical constants (CODATA 2018) used throughout the package.

Values are frozen at build time and are not user-overridable: every formula
in the package assumes this one consistent set.
"""

from __future__ import annotations

from dataclasses import dataclass


@dataclass(frozen=True)
class PhysicalConstants:
    hbar: float = 1.054571817e-34    # J s
    k_B: float = 1.380649e-23        # J/K
    c: float = 299792458.0           # m/s
    m0: float = 1.67262192369e-27    # nucleon (proton) mass, kg
    e: float = 1.602176634e-19       # C
    epsilon0: float = 8.8541878128e-12  # F/m
    zeta5: float = 1.0369277551033989   # Riemann zeta(5)


CONST = PhysicalConstants()

# Unit conversions accepted at the configuration layer (SI internally).
MBAR_TO_PA = 100.0
AMU_TO_KG = 1.66053906660e-27
