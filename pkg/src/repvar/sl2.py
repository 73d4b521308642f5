"""Complex 2x2 matrix algebra specialised to SL2(C).

Matrices are small immutable value objects (:class:`Mat2C`) holding four
Python complex numbers. Powers use the trace recursion that the
Cayley-Hamilton theorem gives on SL2::

    A^n = s_{n-1}(tau) * A - s_{n-2}(tau) * I,
    s_{-1} = 0, s_0 = 1, s_{k+1} = tau * s_k - s_{k-1},

with tau = tr(A). Plain repeated multiplication (:func:`power_naive`) is kept
as an oracle.
"""

from __future__ import annotations

import cmath
import math
from dataclasses import dataclass
from typing import Union

import numpy as np

from repvar.config import DEFAULT_TOLERANCES, Tolerances


class DegenerateEigenbasis(ValueError):
    """Trace is within the ambiguity band of +/-2 but the matrix is not clearly
    central or parabolic."""


class TraceMismatch(ValueError):
    pass


class ParabolicTrace(ValueError):
    pass


@dataclass(frozen=True, slots=True)
class Mat2C:
    """Row-major complex 2x2 matrix ``[[a, b], [c, d]]``."""

    a: complex
    b: complex
    c: complex
    d: complex

    def __post_init__(self) -> None:
        for name in ("a", "b", "c", "d"):
            z = complex(getattr(self, name))
            if not cmath.isfinite(z):
                raise ValueError(f"non-finite entry {name}={z!r}")
            object.__setattr__(self, name, z)

    @classmethod
    def identity(cls) -> Mat2C:
        return cls(1, 0, 0, 1)

    @classmethod
    def scalar(cls, s: complex) -> Mat2C:
        return cls(s, 0, 0, s)

    @classmethod
    def diag(cls, x: complex, y: complex) -> Mat2C:
        return cls(x, 0, 0, y)

    @classmethod
    def from_rows(cls, rows) -> Mat2C:
        (a, b), (c, d) = rows
        return cls(a, b, c, d)

    @classmethod
    def from_array(cls, arr: np.ndarray) -> Mat2C:
        return cls(arr[0, 0], arr[0, 1], arr[1, 0], arr[1, 1])

    @classmethod
    def from_columns(cls, u: tuple[complex, complex], v: tuple[complex, complex]) -> Mat2C:
        return cls(u[0], v[0], u[1], v[1])

    def rows(self) -> tuple[tuple[complex, complex], tuple[complex, complex]]:
        return ((self.a, self.b), (self.c, self.d))

    def entries(self) -> tuple[complex, complex, complex, complex]:
        return (self.a, self.b, self.c, self.d)

    def to_array(self) -> np.ndarray:
        return np.array([[self.a, self.b], [self.c, self.d]], dtype=complex)

    @property
    def trace(self) -> complex:
        return self.a + self.d

    @property
    def det(self) -> complex:
        return self.a * self.d - self.b * self.c

    def adjugate(self) -> Mat2C:
        return Mat2C(self.d, -self.b, -self.c, self.a)

    def inverse(self) -> Mat2C:
        det = self.det
        if det == 0:
            raise ZeroDivisionError("singular matrix")
        return self.adjugate() * (1 / det)

    def norm(self) -> float:
        """Frobenius norm."""
        return math.sqrt(sum(abs(z) ** 2 for z in self.entries()))

    def is_sl2(self, tol: float = DEFAULT_TOLERANCES.unit_det) -> bool:
        return abs(self.det - 1) <= tol

    def dist(self, other: Mat2C) -> float:
        return (self - other).norm()

    def column(self, j: int) -> tuple[complex, complex]:
        return (self.a, self.c) if j == 0 else (self.b, self.d)

    def __matmul__(self, other: Mat2C) -> Mat2C:
        return Mat2C(
            self.a * other.a + self.b * other.c,
            self.a * other.b + self.b * other.d,
            self.c * other.a + self.d * other.c,
            self.c * other.b + self.d * other.d,
        )

    def __add__(self, other: Mat2C) -> Mat2C:
        return Mat2C(self.a + other.a, self.b + other.b, self.c + other.c, self.d + other.d)

    def __sub__(self, other: Mat2C) -> Mat2C:
        return Mat2C(self.a - other.a, self.b - other.b, self.c - other.c, self.d - other.d)

    def __neg__(self) -> Mat2C:
        return Mat2C(-self.a, -self.b, -self.c, -self.d)

    def __mul__(self, s: complex) -> Mat2C:
        return Mat2C(s * self.a, s * self.b, s * self.c, s * self.d)

    __rmul__ = __mul__


I = Mat2C.identity()


def mul(A: Mat2C, B: Mat2C) -> Mat2C:
    return A @ B


def conjugate(g: Mat2C, A: Mat2C) -> Mat2C:
    """Return ``g A g^-1``."""
    return g @ A @ g.inverse()


def trace_sequence(tau: complex, n: int) -> tuple[complex, complex]:
    """Return ``(s_{n-1}(tau), s_{n-2}(tau))`` for n >= 0."""
    # s_{-2} = -1 follows from s_0 = tau * s_{-1} - s_{-2}
    prev, cur = -1 + 0j, 0j  # s_{-2}, s_{-1}
    for _ in range(n):
        prev, cur = cur, tau * cur - prev
    return cur, prev


def power(A: Mat2C, n: int) -> Mat2C:
    """``A^n`` for A in SL2 via the trace recursion."""
    if n < 0:
        raise ValueError("exponent must be non-negative")
    s1, s2 = trace_sequence(A.trace, n)
    return Mat2C(s1 * A.a - s2, s1 * A.b, s1 * A.c, s1 * A.d - s2)


def power_naive(A: Mat2C, n: int) -> Mat2C:
    """``A^n`` by repeated multiplication; valid for any 2x2 matrix."""
    out = I
    for _ in range(n):
        out = out @ A
    return out


@dataclass(frozen=True)
class Central:
    sign: int


@dataclass(frozen=True)
class Diagonalizable:
    """``A = basis @ diag(eigenvalue, 1/eigenvalue) @ basis^-1`` with det(basis) = 1."""

    eigenvalue: complex
    basis: Mat2C

    def reconstruct(self, mu: complex | None = None) -> Mat2C:
        """Rebuild the matrix, optionally swapping in a different eigenvalue."""
        lam = self.eigenvalue if mu is None else mu
        return conjugate(self.basis, Mat2C.diag(lam, 1 / lam))


@dataclass(frozen=True)
class Parabolic:
    sign: int
    nilpart: Mat2C


EigenStructure = Union[Central, Diagonalizable, Parabolic]


def _eigenvector(A: Mat2C, mu: complex) -> tuple[complex, complex]:
    # kernel of A - mu I: pick the better conditioned of the two row-derived candidates
    cand1 = (A.b, mu - A.a)
    cand2 = (mu - A.d, A.c)
    n1 = math.hypot(abs(cand1[0]), abs(cand1[1]))
    n2 = math.hypot(abs(cand2[0]), abs(cand2[1]))
    v, nv = (cand1, n1) if n1 >= n2 else (cand2, n2)
    if nv == 0:
        raise DegenerateEigenbasis("zero eigenvector candidate")
    return (v[0] / nv, v[1] / nv)


def eigen(A: Mat2C, tol: Tolerances = DEFAULT_TOLERANCES) -> EigenStructure:
    """Classify A as central, diagonalizable or parabolic."""
    tau = A.trace
    near = None
    for sign in (1, -1):
        if abs(tau - 2 * sign) <= tol.eigen_band:
            near = sign
    if near is not None:
        nil = A - Mat2C.scalar(near)
        if nil.norm() <= tol.central:
            return Central(near)
        if abs(tau - 2 * near) <= tol.parabolic * max(1.0, A.norm()):
            return Parabolic(near, nil)
        raise DegenerateEigenbasis(
            f"trace {tau} within {tol.eigen_band} of {2 * near} but matrix is neither central nor parabolic"
        )

    root = cmath.sqrt(tau * tau - 4)
    lam = (tau + root) / 2
    if abs(lam) < 1:
        lam = 1 / lam
    u = _eigenvector(A, lam)
    v = _eigenvector(A, 1 / lam)
    basis = Mat2C.from_columns(u, v)
    det = basis.det
    if abs(det) < tol.degeneracy:
        raise DegenerateEigenbasis(f"eigenbasis determinant {abs(det):.3g} below {tol.degeneracy}")
    basis = Mat2C.from_columns(u, (v[0] / det, v[1] / det))
    return Diagonalizable(lam, basis)


def _cyclic_frame(A: Mat2C) -> Mat2C:
    # P = [v | A v] satisfies A = P C P^-1 for C the companion matrix of A
    best = None
    s = 1 / math.sqrt(2)
    for v in ((1, 0), (0, 1), (s, s)):
        Av = (A.a * v[0] + A.b * v[1], A.c * v[0] + A.d * v[1])
        P = Mat2C.from_columns(v, Av)
        if best is None or abs(P.det) > abs(best.det):
            best = P
    return best


def companion(tau: complex) -> Mat2C:
    return Mat2C(0, -1, 1, tau)


def similarity_witness(A: Mat2C, B: Mat2C, tol: Tolerances = DEFAULT_TOLERANCES) -> Mat2C:
    """Return g in SL2 with ``g A g^-1 = B``.

    Both matrices are conjugated to the companion form ``[[0, -1], [1, tr]]``;
    traces must agree and stay away from +/-2.
    """
    ta, tb = A.trace, B.trace
    if abs(ta - tb) > tol.residual * max(1.0, abs(ta)):
        raise TraceMismatch(f"traces differ: {ta} vs {tb}")
    if min(abs(ta - 2), abs(ta + 2)) <= tol.eigen_band:
        raise ParabolicTrace(f"trace {ta} is +/-2")
    PA = _cyclic_frame(A)
    PB = _cyclic_frame(B)
    g = PB @ PA.inverse()
    return g * (1 / cmath.sqrt(g.det))


def random_sl2(seed: int, scale: float = 1.0) -> Mat2C:
    """Deterministic SL2 sample ``L(x) U(y) D(c)``.

    x, y are uniform on the complex box [-scale, scale]^2 and ``c = exp(z)``
    with z uniform on [-scale/2, scale/2]^2. The spectral condition number is
    at most ``cond_bound(scale) = (1 + sqrt(2) * scale)^4 * exp(scale)``
    (about 92.3 at scale 1; the largest observed over seeds 1..1000 is 14.6).
    """
    if scale <= 0:
        raise ValueError("scale must be positive")
    rng = np.random.default_rng(seed)
    x, y = rng.uniform(-scale, scale, size=(2, 2)) @ np.array([1, 1j])
    zr, zi = rng.uniform(-scale / 2, scale / 2, size=2)
    c = cmath.exp(complex(zr, zi))
    L = Mat2C(1, 0, complex(x), 1)
    U = Mat2C(1, complex(y), 0, 1)
    return L @ U @ Mat2C.diag(c, 1 / c)


def cond_bound(scale: float) -> float:
    return (1 + math.sqrt(2) * scale) ** 4 * math.exp(scale)


def condition_number(A: Mat2C) -> float:
    return float(np.linalg.cond(A.to_array()))
