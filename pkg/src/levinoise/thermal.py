"""Heat flows, internal-temperature equilibrium and thermal force noise.

Gas exchange uses the molecular-flow (free molecular) regime. Gas force
noise follows the two-bath picture: impinging molecules at the gas
temperature T_i and re-emitted molecules at T_e = T_i + a (T - T_i), each
bath contributing its own damping rate.
"""

from __future__ import annotations

import math
from dataclasses import dataclass

from .constants import CONST
from .errors import DomainError, NumericError
from .model import EnvironmentSpec, NoiseSpectrum, ParticleSpec, particle_mass

# Root bracketing interval for the equilibrium solver. Silica sublimates
# far below the upper bound; both heat flows are monotone in T, so
# bisection on this interval is unconditionally safe.
T_MAX = 5000.0
_REL_TOL = 1e-12
_MAX_ITER = 200


def thermal_velocity(env: EnvironmentSpec):
    """Mean thermal speed sqrt(8 k_B T_g / (pi m)) of the gas molecules."""
    return math.sqrt(8.0 * CONST.k_B * env.temperature
                     / (math.pi * env.molecular_mass))


def gas_heat_flow(p: ParticleSpec, env: EnvironmentSpec, T):
    """Heat flow (W) from the particle at internal temperature T to the gas.

    Negative when T > T_g: heat leaves the particle.
    """
    if T <= 0:
        raise DomainError("T must be > 0", operation="gas_heat_flow")
    g = env.heat_capacity_ratio
    v_t = thermal_velocity(env)
    return (-env.alpha * math.pi * p.radius**2 * env.pressure * v_t
            / (2.0 * env.temperature) * (g + 1.0) / (g - 1.0)
            * (T - env.temperature))


def _bb_flow_coefficient(p: ParticleSpec, env: EnvironmentSpec):
    return (72.0 * CONST.zeta5 / math.pi**2 * p.volume * CONST.k_B**5
            / (CONST.c**3 * CONST.hbar**4) * env.eps_abs)


def blackbody_heat_flow(p: ParticleSpec, env: EnvironmentSpec, T):
    """Net blackbody heat flow (W), proportional to T^5 - T_g^5.

    The T^5 law is the subwavelength-particle limit.
    """
    if T <= 0:
        raise DomainError("T must be > 0", operation="blackbody_heat_flow")
    return -_bb_flow_coefficient(p, env) * (T**5 - env.temperature**5)


def equilibrium_temperature(p: ParticleSpec, env: EnvironmentSpec, w_abs):
    """Internal temperature T >= T_g balancing absorption against cooling.

    Solves gas_heat_flow(T) + blackbody_heat_flow(T) + w_abs = 0 by
    bisection on [T_g, 5000 K].
    """
    if w_abs < 0:
        raise DomainError("absorbed power must be >= 0",
                          operation="equilibrium_temperature")
    if w_abs == 0.0:
        return env.temperature

    def residual(T):
        return gas_heat_flow(p, env, T) + blackbody_heat_flow(p, env, T) + w_abs

    lo, hi = env.temperature, T_MAX
    if residual(hi) > 0:
        raise NumericError(
            f"equilibrium temperature exceeds {T_MAX} K for w_abs={w_abs!r}")
    for _ in range(_MAX_ITER):
        mid = 0.5 * (lo + hi)
        if residual(mid) > 0:
            lo = mid
        else:
            hi = mid
        if hi - lo <= _REL_TOL * hi:
            return 0.5 * (lo + hi)
    raise NumericError("equilibrium temperature bisection did not converge")


@dataclass(frozen=True)
class ThermalState:
    """Equilibrium bookkeeping: the three flows sum to ~0 at temperature T."""

    temperature: float
    w_abs: float
    q_gas: float
    q_blackbody: float


def thermal_state(p: ParticleSpec, env: EnvironmentSpec, w_abs):
    T = equilibrium_temperature(p, env, w_abs)
    return ThermalState(
        temperature=T,
        w_abs=w_abs,
        q_gas=gas_heat_flow(p, env, T),
        q_blackbody=blackbody_heat_flow(p, env, T),
    )


@dataclass(frozen=True)
class GasCoupling:
    """Two-bath gas damping rates and bath temperatures."""

    gamma_i: float   # impinging-molecule damping, 1/s
    gamma_e: float   # re-emitted-molecule damping, 1/s
    t_i: float       # K, equals the gas temperature
    t_e: float       # K
    v_t: float       # mean thermal speed, m/s

    @property
    def gamma_total(self):
        return self.gamma_i + self.gamma_e


def gas_coupling(p: ParticleSpec, env: EnvironmentSpec, T):
    """Damping rates of the impinging/re-emitted molecule baths.

    gamma_i = (4 pi / 3) m R^2 v_t P_g / (k_B T_i m_s) and
    gamma_e = (pi/8) sqrt(T_e/T_i) gamma_i, with T_e set by the momentum
    accommodation factor.
    """
    if T < env.temperature:
        raise DomainError("internal temperature below gas temperature",
                          operation="gas_coupling")
    t_i = env.temperature
    t_e = t_i + env.momentum_accommodation * (T - t_i)
    v_t = thermal_velocity(env)
    m_s = particle_mass(p)
    gamma_i = (4.0 * math.pi / 3.0 * env.molecular_mass * p.radius**2
               * v_t * env.pressure / (CONST.k_B * t_i * m_s))
    gamma_e = math.pi / 8.0 * math.sqrt(t_e / t_i) * gamma_i
    return GasCoupling(gamma_i=gamma_i, gamma_e=gamma_e, t_i=t_i, t_e=t_e,
                       v_t=v_t)


def gas_force_psd(coupling: GasCoupling, m_s):
    """One-sided white force noise 4 k_B m_s (G_i T_i + G_e T_e), N^2/Hz."""
    return 4.0 * CONST.k_B * m_s * (coupling.gamma_i * coupling.t_i
                                    + coupling.gamma_e * coupling.t_e)


def blackbody_recoil_psd(p: ParticleSpec, env: EnvironmentSpec, T):
    """White force noise from recoil of emitted blackbody photons, N^2/Hz.

    (160/pi) R^3 k_B^6 / (c^5 hbar^4) * eps_abs * T^6. Photons remove heat
    efficiently but carry little momentum, so this is small against the gas
    channel except at extremely low pressure and high absorbed power.
    """
    if T <= 0:
        raise DomainError("T must be > 0", operation="blackbody_recoil_psd")
    return (160.0 / math.pi * p.radius**3 * CONST.k_B**6
            / (CONST.c**5 * CONST.hbar**4) * env.eps_abs * T**6)


def thermal_force_budget(p: ParticleSpec, env: EnvironmentSpec, w_abs):
    """Scalar thermal force noise decomposition at equilibrium.

    Returns (temperature, gas PSD, blackbody recoil PSD, coupling).
    """
    T = equilibrium_temperature(p, env, w_abs)
    coupling = gas_coupling(p, env, T)
    s_gas = gas_force_psd(coupling, particle_mass(p))
    s_bb = blackbody_recoil_psd(p, env, T)
    return T, s_gas, s_bb, coupling


def thermal_force_psd(p: ParticleSpec, env: EnvironmentSpec, w_abs, grid):
    """Thermal force NoiseSpectrum (channels: gas, blackbody_recoil) on grid."""
    T, s_gas, s_bb, coupling = thermal_force_budget(p, env, w_abs)
    return NoiseSpectrum(
        grid=grid,
        channels={"gas": s_gas, "blackbody_recoil": s_bb},
        units="N^2/Hz",
        meta={"temperature": T, "gamma_total": coupling.gamma_total},
    )


__all__ = [
    "T_MAX", "ThermalState", "GasCoupling",
    "thermal_velocity", "gas_heat_flow", "blackbody_heat_flow",
    "equilibrium_temperature", "thermal_state", "gas_coupling",
    "gas_force_psd", "blackbody_recoil_psd", "thermal_force_budget",
    "thermal_force_psd",
]
