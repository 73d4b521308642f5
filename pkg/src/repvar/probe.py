"""Numerical local-dimension estimates on R(G_pt).

A point (m1, m2) of (C^{2x2})^2 lies on R(G_pt) when it solves the six
complex equations

    det m1 - 1 = 0,  det m2 - 1 = 0,  m1^p - m2^t = 0 (four entries).

At a smooth point the local dimension is 8 minus the complex rank of the
Jacobian of this system. The rank is read off the singular values of the
standard real embedding (12 x 16) of the complex Jacobian, where every complex
singular value shows up twice.
"""

from __future__ import annotations

import enum
import math
from dataclasses import dataclass, field

import numpy as np

from repvar.config import DEFAULT_PROBE, DEFAULT_TOLERANCES, ProbeConfig, Tolerances
from repvar.counting import GroupParams, four_dim_components
from repvar.omega import sample_point, solve_power
from repvar.sl2 import Mat2C, power, power_naive, random_sl2


class OffVariety(ValueError):
    pass


@dataclass(frozen=True)
class RepPoint:
    m1: Mat2C
    m2: Mat2C

    def coords(self) -> np.ndarray:
        return np.array(self.m1.entries() + self.m2.entries(), dtype=complex)

    @classmethod
    def from_coords(cls, z: np.ndarray) -> RepPoint:
        return cls(Mat2C(*z[:4]), Mat2C(*z[4:]))


class Classification(enum.Enum):
    ON_FOUR_DIM = "OnFourDimComponent"
    OFF_S_GENERIC = "OffSGeneric"
    INCONCLUSIVE = "Inconclusive"
    # clean spectrum but an estimate that is neither 3 nor 4
    UNEXPECTED = "Unexpected"


@dataclass(frozen=True)
class ProbeReport:
    point: RepPoint
    relator_residual: float
    det_residuals: tuple[float, float]
    jacobian_rank: int
    local_dim_estimate: int
    singular_values: tuple[float, ...]
    gap_ratio: float | None
    classification: Classification

    @property
    def conclusive(self) -> bool:
        return self.classification is not Classification.INCONCLUSIVE

    def as_dict(self) -> dict:
        return {
            "relator_residual": self.relator_residual,
            "det_residuals": list(self.det_residuals),
            "jacobian_rank": self.jacobian_rank,
            "local_dim_estimate": self.local_dim_estimate,
            "singular_values": list(self.singular_values),
            "gap_ratio": self.gap_ratio,
            "classification": self.classification.value,
        }


def defining_system(point: RepPoint, params: GroupParams) -> np.ndarray:
    """The six complex equations; uses plain products so det m_i need not be 1."""
    rel = power_naive(point.m1, params.p) - power_naive(point.m2, params.t)
    return np.array([point.m1.det - 1, point.m2.det - 1, *rel.entries()], dtype=complex)


def residual(point: RepPoint, params: GroupParams) -> tuple[float, float, float]:
    rel = power_naive(point.m1, params.p) - power_naive(point.m2, params.t)
    return rel.norm(), abs(point.m1.det - 1), abs(point.m2.det - 1)


def power_differential(A: np.ndarray, n: int, H: np.ndarray) -> np.ndarray:
    """d(A^n)[H] = sum_{i<n} A^i H A^(n-1-i)."""
    powers = [np.eye(2, dtype=complex)]
    for _ in range(n - 1):
        powers.append(powers[-1] @ A)
    out = np.zeros((2, 2), dtype=complex)
    for i in range(n):
        out += powers[i] @ H @ powers[n - 1 - i]
    return out


def _units() -> list[np.ndarray]:
    out = []
    for k in range(4):
        E = np.zeros((2, 2), dtype=complex)
        E[divmod(k, 2)] = 1
        out.append(E)
    return out


def jacobian(point: RepPoint, params: GroupParams) -> np.ndarray:
    """Complex 6 x 8 Jacobian; columns are (m1 entries, m2 entries) row-major."""
    J = np.zeros((6, 8), dtype=complex)
    for block, (M, n, sgn) in enumerate(((point.m1, params.p, 1), (point.m2, params.t, -1))):
        A = M.to_array()
        adj = M.adjugate().to_array()
        for k, E in enumerate(_units()):
            col = 4 * block + k
            J[block, col] = np.trace(adj @ E)
            J[2:, col] = sgn * power_differential(A, n, E).reshape(4)
    return J


def realify(J: np.ndarray) -> np.ndarray:
    """Real embedding for coordinates ordered (Re z, Im z) and outputs (Re F, Im F)."""
    return np.block([[J.real, -J.imag], [J.imag, J.real]])


def finite_difference_jacobian(point: RepPoint, params: GroupParams, step: float = 1e-6) -> np.ndarray:
    """Central differences of the realified system over all 16 real coordinates."""
    z0 = point.coords()
    x0 = np.concatenate([z0.real, z0.imag])

    def f(x: np.ndarray) -> np.ndarray:
        F = defining_system(RepPoint.from_coords(x[:8] + 1j * x[8:]), params)
        return np.concatenate([F.real, F.imag])

    cols = []
    for k in range(16):
        e = np.zeros(16)
        e[k] = step
        cols.append((f(x0 + e) - f(x0 - e)) / (2 * step))
    return np.stack(cols, axis=1)


def jacobian_fd_error(point: RepPoint, params: GroupParams, step: float = 1e-6) -> float:
    Jr = realify(jacobian(point, params))
    fd = finite_difference_jacobian(point, params, step)
    return float(np.linalg.norm(fd - Jr) / np.linalg.norm(Jr))


def on_variety(point: RepPoint, params: GroupParams, tol: Tolerances = DEFAULT_TOLERANCES) -> bool:
    rel, d1, d2 = residual(point, params)
    scale = max(1.0, power(point.m1, params.p).norm())
    return rel <= tol.residual * scale and max(d1, d2) <= tol.unit_det


def local_dimension(
    point: RepPoint,
    params: GroupParams,
    tol: float | None = None,
    config: ProbeConfig = DEFAULT_PROBE,
    tolerances: Tolerances = DEFAULT_TOLERANCES,
) -> ProbeReport:
    """Estimate the local complex dimension of R(G_pt) at ``point``.

    ``tol`` is the relative singular-value cutoff (defaults to
    ``config.rank_tol``). Spectra whose gap between the smallest kept and the
    largest dropped singular value is under ``config.gap_min``, or whose real
    rank is odd, are reported as inconclusive.
    """
    rank_tol = config.rank_tol if tol is None else tol
    rel, d1, d2 = residual(point, params)
    if not on_variety(point, params, tolerances):
        raise OffVariety(f"relator residual {rel:.3g}, det residuals {d1:.3g}, {d2:.3g}")

    sv = np.linalg.svd(realify(jacobian(point, params)), compute_uv=False)
    smax = float(sv[0])
    kept = sv[sv >= rank_tol * smax]
    dropped = sv[sv < rank_tol * smax]
    real_rank = int(kept.size)
    gap = float(kept[-1] / dropped[0]) if kept.size and dropped.size and dropped[0] > 0 else None
    rank = real_rank // 2
    dim = 8 - rank

    if real_rank % 2 or (gap is not None and gap < config.gap_min):
        cls = Classification.INCONCLUSIVE
    elif dim == 4:
        cls = Classification.ON_FOUR_DIM
    elif dim == 3:
        cls = Classification.OFF_S_GENERIC
    else:
        cls = Classification.UNEXPECTED
    return ProbeReport(
        point=point,
        relator_residual=rel,
        det_residuals=(d1, d2),
        jacobian_rank=rank,
        local_dim_estimate=dim,
        singular_values=tuple(float(s) for s in sv),
        gap_ratio=gap,
        classification=cls,
    )


def derive_seed(seed: int, *keys: int) -> int:
    """Independent integer seed for a (seed, keys...) stream."""
    return int(np.random.SeedSequence([seed, *keys]).generate_state(1, dtype=np.uint64)[0])


@dataclass
class ProbeRecord:
    group: int
    index: int
    attempts: int
    report: ProbeReport

    def as_dict(self) -> dict:
        return {"group": self.group, "index": self.index, "attempts": self.attempts, **self.report.as_dict()}


@dataclass
class VerificationSummary:
    theorem: str
    params: GroupParams
    expected_dim: int
    min_conclusive_rate: float
    groups: list[dict] = field(default_factory=list)
    records: list[ProbeRecord] = field(default_factory=list)
    rejected_draws: int = 0
    fibers_finite: bool = True

    @property
    def n_conclusive(self) -> int:
        return sum(r.report.conclusive for r in self.records)

    @property
    def conclusive_rate(self) -> float:
        return self.n_conclusive / len(self.records) if self.records else 0.0

    @property
    def mismatches(self) -> list[ProbeRecord]:
        return [
            r for r in self.records
            if r.report.conclusive and r.report.local_dim_estimate != self.expected_dim
        ]

    @property
    def observed_dims(self) -> list[int]:
        return sorted({r.report.local_dim_estimate for r in self.records if r.report.conclusive})

    @property
    def passed(self) -> bool:
        return (
            bool(self.records)
            and not self.mismatches
            and self.conclusive_rate >= self.min_conclusive_rate
            and self.fibers_finite
        )

    def as_dict(self, include_records: bool = True) -> dict:
        out = {
            "theorem": self.theorem,
            "expected_dim": self.expected_dim,
            "groups": self.groups,
            "n_probes": len(self.records),
            "n_conclusive": self.n_conclusive,
            "conclusive_rate": self.conclusive_rate,
            "observed_dims": self.observed_dims,
            "n_mismatches": len(self.mismatches),
            "rejected_draws": self.rejected_draws,
            "fibers_finite": self.fibers_finite,
            "passed": self.passed,
        }
        if include_records:
            out["records"] = [r.as_dict() for r in self.records]
        return out


_STREAM_A = 0xA
_STREAM_B = 0xB


def verify_theorem_a(
    params: GroupParams,
    samples_per_component: int,
    seed: int,
    tol: float | None = None,
    config: ProbeConfig = DEFAULT_PROBE,
    tolerances: Tolerances = DEFAULT_TOLERANCES,
) -> VerificationSummary:
    """Probe sample points on every asserted 4-dimensional product component."""
    summary = VerificationSummary("A", params, 4, config.min_conclusive_rate)
    for ci, comp in enumerate(four_dim_components(params)):
        summary.groups.append({
            "component": ci,
            "sign": comp.sign,
            "left": str(comp.left.trace_class),
            "right": str(comp.right.trace_class),
        })
        for si in range(samples_per_component):
            for attempt in range(config.retries + 1):
                m1 = sample_point(comp.left, derive_seed(seed, _STREAM_A, ci, si, attempt, 0), config.sample_scale)
                m2 = sample_point(comp.right, derive_seed(seed, _STREAM_A, ci, si, attempt, 1), config.sample_scale)
                report = local_dimension(RepPoint(m1, m2), params, tol, config, tolerances)
                if report.conclusive:
                    break
            summary.records.append(ProbeRecord(ci, si, attempt + 1, report))
    return summary


def draw_off_s(params: GroupParams, seed: int, config: ProbeConfig = DEFAULT_PROBE) -> tuple[Mat2C, int]:
    """First m1 from the seed stream with tr(m1^p) at least ``reject_band`` away from +/-2.

    Returns the matrix and the number of rejected draws. Rejection also covers
    the parabolic trace -2 base that has an empty fiber for even t.
    """
    for r in range(10_000):
        m1 = random_sl2(derive_seed(seed, r), config.sample_scale)
        tau = power(m1, params.p).trace
        if min(abs(tau - 2), abs(tau + 2)) > config.reject_band:
            return m1, r
    raise RuntimeError("no off-S draw found")


def verify_theorem_b(
    params: GroupParams,
    samples: int,
    seed: int,
    tol: float | None = None,
    config: ProbeConfig = DEFAULT_PROBE,
    tolerances: Tolerances = DEFAULT_TOLERANCES,
) -> VerificationSummary:
    """Probe every point of the fiber over generic m1 off S; expects dimension 3."""
    summary = VerificationSummary("B", params, 3, config.min_conclusive_rate)
    for si in range(samples):
        for attempt in range(config.retries + 1):
            m1, rejected = draw_off_s(params, derive_seed(seed, _STREAM_B, si, attempt), config)
            summary.rejected_draws += rejected
            fiber = solve_power(power(m1, params.p), params.t, tolerances)
            if fiber.solutions is None or len(fiber.solutions) > params.t + 1:
                summary.fibers_finite = False
                reports = []
                break
            reports = [
                local_dimension(RepPoint(m1, x), params, tol, config, tolerances)
                for x in fiber.solutions
            ]
            if all(r.conclusive for r in reports):
                break
        summary.groups.append({"sample": si, "fiber_size": len(reports), "attempts": attempt + 1})
        for j, rep in enumerate(reports):
            summary.records.append(ProbeRecord(si, j, attempt + 1, rep))
    return summary
