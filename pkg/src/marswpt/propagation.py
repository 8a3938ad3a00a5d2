"""Large-scale channel losses for a Mars surface link.

Three effects are modeled:

* log-distance path loss with exponent ``alpha`` over the free-space factor
  ``K = 4*pi*d/lambda``,
* log-normal shadowing, a zero-mean Gaussian term in dB,
* dust-storm extinction, linear in particle density, particle volume, and
  path length.

Terrain presets carry the fitted (alpha, sigma) pairs for two Gale Crater
areas; Area 2 is the rougher of the two.
"""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from .quantities import RfCarrier


@dataclass(frozen=True, slots=True)
class TerrainProfile:
    """Path-loss exponent and shadowing spread for one terrain class."""

    name: str
    alpha: float
    sigma_db: float

    def __post_init__(self) -> None:
        if not self.alpha > 0.0:
            raise ValueError(f"alpha must be positive, got {self.alpha}")
        if self.sigma_db < 0.0:
            raise ValueError(f"sigma_db must be non-negative, got {self.sigma_db}")


AREA1 = TerrainProfile("area1", alpha=2.12, sigma_db=11.41)
AREA2 = TerrainProfile("area2", alpha=2.37, sigma_db=13.26)

TERRAIN_PRESETS = {"area1": AREA1, "area2": AREA2}


def terrain_preset(name: str) -> TerrainProfile:
    """Look up a built-in terrain by name ("area1" or "area2"), case-insensitively."""
    try:
        return TERRAIN_PRESETS[name.lower()]
    except KeyError:
        valid = ", ".join(sorted(TERRAIN_PRESETS))
        raise ValueError(f"unknown terrain {name!r}; valid names: {valid}") from None


@dataclass(frozen=True, slots=True)
class DustStorm:
    """Suspended-dust population: density, mean particle radius, permittivity.

    The default permittivity 4.56 + i0.251 is the 2.45 GHz value for Martian
    dust; attenuation grows with the cube of the particle radius.
    """

    n_t_per_m3: float
    rho_p_m: float = 1e-4
    eps_re: float = 4.56
    eps_im: float = 0.251

    def __post_init__(self) -> None:
        if self.n_t_per_m3 < 0.0:
            raise ValueError(f"n_t_per_m3 must be non-negative, got {self.n_t_per_m3}")
        if not self.rho_p_m > 0.0:
            raise ValueError(f"rho_p_m must be positive, got {self.rho_p_m}")
        if not self.eps_im > 0.0:
            raise ValueError(f"eps_im must be positive, got {self.eps_im}")


def free_space_factor(distance_m: float, carrier: RfCarrier) -> float:
    """Dimensionless free-space factor K = 4*pi*d/lambda."""
    if not distance_m > 0.0:
        raise ValueError(f"distance_m must be positive, got {distance_m}")
    return 4.0 * np.pi * distance_m / carrier.wavelength_m


def path_loss_db(
    distance_m: float,
    carrier: RfCarrier,
    terrain: TerrainProfile,
    shadow_db: float = 0.0,
) -> float:
    """Log-distance path loss in dB; shadow_db = 0 gives the median loss."""
    k = free_space_factor(distance_m, carrier)
    return 10.0 * terrain.alpha * np.log10(k) + shadow_db


def sample_shadowing(terrain: TerrainProfile, rng: np.random.Generator, n: int | None = None):
    """Draw shadowing in dB from Normal(0, sigma_db^2).

    Returns a scalar when ``n`` is None, else an array of ``n`` draws.
    """
    if n is None:
        return terrain.sigma_db * rng.standard_normal()
    return terrain.sigma_db * rng.standard_normal(n)


def dust_extinction_coefficient(storm: DustStorm, carrier: RfCarrier) -> float:
    """Extinction coefficient in dB per (particles/m^3 * m^3 * m).

    For the default permittivity at 2.45 GHz this evaluates to about 48.98.
    """
    eps_re, eps_im = storm.eps_re, storm.eps_im
    return 1.029e3 * eps_im / (carrier.wavelength_m * ((eps_re + 2.0) ** 2 + eps_im**2))


def dust_attenuation_db(storm: DustStorm, distance_m: float, carrier: RfCarrier) -> float:
    """Dust-storm attenuation in dB over a path of ``distance_m`` meters."""
    if not distance_m > 0.0:
        raise ValueError(f"distance_m must be positive, got {distance_m}")
    coef = dust_extinction_coefficient(storm, carrier)
    return coef * storm.n_t_per_m3 * storm.rho_p_m**3 * distance_m
