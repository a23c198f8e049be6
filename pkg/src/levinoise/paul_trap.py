"""Paul trap descriptor, bias-voltage force noise and electrode transduction.

The trap is treated as an ideal harmonic trap at its secular frequency plus
a white force-noise floor from voltage noise on the bias electrodes;
micromotion and stability analysis are out of scope.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from typing import Optional

from .errors import DomainError


@dataclass(frozen=True)
class TrapSpec:
    """Secular frequency, effective electrode distance and bias noise.

    ``voltage_noise`` is the amplitude spectral density of the bias voltage
    at the secular frequency, V/sqrt(Hz), modeled as white. ``gamma`` is
    the mechanical damping of the trapped mode (from gas coupling) when the
    caller wants to carry it alongside the trap parameters.
    """

    frequency: float                  # Hz
    electrode_distance: float         # m
    voltage_noise: float = 0.0        # V/sqrt(Hz)
    gamma: Optional[float] = None     # 1/s

    def __post_init__(self):
        if self.frequency <= 0:
            raise DomainError("frequency must be > 0", operation="TrapSpec")
        if self.electrode_distance <= 0:
            raise DomainError("electrode distance must be > 0",
                              operation="TrapSpec")
        if self.voltage_noise < 0:
            raise DomainError("voltage noise must be >= 0", operation="TrapSpec")

    @property
    def omega0(self):
        return 2.0 * math.pi * self.frequency


def bias_noise_force_psd(trap: TrapSpec, charge):
    """White force PSD (N^2/Hz) from bias voltage noise: (S_v q / d)^2."""
    if charge < 0:
        raise DomainError("charge must be >= 0", operation="bias_noise_force_psd")
    amplitude = trap.voltage_noise * charge / trap.electrode_distance
    return amplitude**2


def transduction_factor(trap: TrapSpec, charge):
    """Displacement-to-charge coupling beta = q/d in C/m.

    The motion of the charge induces the current I = beta * dx/dt in an
    attached circuit; conversely a voltage V across the electrodes exerts
    the force beta * V on the particle.
    """
    if charge < 0:
        raise DomainError("charge must be >= 0", operation="transduction_factor")
    return charge / trap.electrode_distance


__all__ = ["TrapSpec", "bias_noise_force_psd", "transduction_factor"]
