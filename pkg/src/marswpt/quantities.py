"""Unit-safe power conversions and RF carrier constants shared by every module.

All link arithmetic happens in dB/dBm; the single dB-to-mW conversion sits at
the harvester boundary, where the efficiency model wants milliwatts.
"""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np

SPEED_OF_LIGHT_M_S = 299_792_458.0


def wavelength_of(frequency_hz: float) -> float:
    """Free-space wavelength in meters for a carrier frequency in hertz."""
    if not frequency_hz > 0.0:
        raise ValueError(f"frequency_hz must be positive, got {frequency_hz}")
    return SPEED_OF_LIGHT_M_S / frequency_hz


@dataclass(frozen=True, slots=True)
class RfCarrier:
    """Continuous-wave carrier pinned by its frequency."""

    frequency_hz: float = 2.45e9

    def __post_init__(self) -> None:
        if not self.frequency_hz > 0.0:
            raise ValueError(f"frequency_hz must be positive, got {self.frequency_hz}")

    @property
    def wavelength_m(self) -> float:
        return wavelength_of(self.frequency_hz)


def dbm_to_mw(p_dbm):
    """Power in mW for a level in dBm. Accepts scalars or arrays."""
    return 10.0 ** (np.asarray(p_dbm, dtype=float) / 10.0) if isinstance(p_dbm, np.ndarray) else 10.0 ** (p_dbm / 10.0)


def mw_to_dbm(p_mw):
    """Level in dBm for a power in mW. Positive powers only."""
    if np.any(np.asarray(p_mw) <= 0.0):
        raise ValueError("power must be positive to express in dBm")
    return 10.0 * np.log10(p_mw)


def watts_to_dbm(p_w: float) -> float:
    """Level in dBm for a power in watts."""
    return mw_to_dbm(p_w * 1e3)
