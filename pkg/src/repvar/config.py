"""Numerical tolerances used across the package.

Every threshold lives here so reports can echo the exact configuration they
ran with. Defaults sit roughly one order of magnitude above f64 accumulation
error for 2x2 products and powers up to exponent ~64.
"""

from __future__ import annotations

from dataclasses import asdict, dataclass


@dataclass(frozen=True)
class Tolerances:
    unit_det: float = 1e-10
    residual: float = 1e-8
    eigen_band: float = 1e-8
    # |tr -/+ 2| below this (relative to max(1, |A|_F)) counts as exactly parabolic
    parabolic: float = 1e-10
    # ||A -/+ I||_F below this counts as central
    central: float = 1e-8
    # lower bound on |det| of the unit-column eigenbasis
    degeneracy: float = 1e-8
    # solutions closer than this are treated as duplicates
    duplicate: float = 1e-6

    def as_dict(self) -> dict[str, float]:
        return asdict(self)


@dataclass(frozen=True)
class ProbeConfig:
    rank_tol: float = 1e-8
    gap_min: float = 1e4
    retries: int = 3
    fd_step: float = 1e-6
    # off-S draws with |tr(m1^p) -/+ 2| <= reject_band are discarded
    reject_band: float = 1e-6
    min_conclusive_rate: float = 0.8
    sample_scale: float = 1.0

    def as_dict(self) -> dict[str, float]:
        return asdict(self)


DEFAULT_TOLERANCES = Tolerances()
DEFAULT_PROBE = ProbeConfig()
