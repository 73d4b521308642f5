"""Components of Omega(n, +/-I) = {A in SL2(C) : A^n = +/-I} and the x^t = m solver.

A non-central A with A^n = +/-I is diagonalizable with eigenvalues
zeta, 1/zeta on the unit circle, so its conjugacy class is fixed by the exact
angle q in zeta = exp(i*pi*q). Components are therefore indexed by reduced
fractions q in (0, 1); q = 0 and q = 1 are the isolated points I and -I.
"""

from __future__ import annotations

import cmath
import enum
import math
from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache

from repvar.config import DEFAULT_TOLERANCES, Tolerances
from repvar.sl2 import (
    Central,
    Diagonalizable,
    Mat2C,
    Parabolic,
    conjugate,
    eigen,
    power,
    random_sl2,
)


@dataclass(frozen=True)
class TraceClass:
    """Exact angle q = num/den in [0, 1]; eigenvalue exp(i*pi*q), trace 2cos(pi*q)."""

    num: int
    den: int

    def __post_init__(self) -> None:
        if self.den <= 0 or not 0 <= self.num <= self.den:
            raise ValueError(f"angle {self.num}/{self.den} outside [0, 1]")
        if math.gcd(self.num, self.den) != 1:
            raise ValueError(f"{self.num}/{self.den} is not reduced")

    @classmethod
    def from_fraction(cls, q: Fraction) -> TraceClass:
        return cls(q.numerator, q.denominator)

    @property
    def fraction(self) -> Fraction:
        return Fraction(self.num, self.den)

    @property
    def eigenvalue(self) -> complex:
        return cmath.exp(1j * math.pi * self.num / self.den)

    @property
    def trace(self) -> float:
        return 2 * math.cos(math.pi * self.num / self.den)

    def __lt__(self, other: TraceClass) -> bool:
        return self.fraction < other.fraction

    def __str__(self) -> str:
        return f"{self.num}/{self.den}"


class Kind(enum.Enum):
    ISOLATED_PLUS_I = "IsolatedPlusI"
    ISOLATED_MINUS_I = "IsolatedMinusI"
    ORBIT = "Orbit"


@dataclass(frozen=True)
class OmegaComponent:
    """One piece of Omega(order, sign*I): an isolated point or a 2-dim orbit."""

    order: int
    sign: int
    kind: Kind
    trace_class: TraceClass

    def __post_init__(self) -> None:
        q = self.trace_class.fraction
        if self.kind is Kind.ISOLATED_PLUS_I and q != 0:
            raise ValueError("IsolatedPlusI must carry angle 0")
        if self.kind is Kind.ISOLATED_MINUS_I and q != 1:
            raise ValueError("IsolatedMinusI must carry angle 1")
        if self.kind is Kind.ORBIT:
            if q in (0, 1):
                raise ValueError("orbit trace class must avoid +/-2")
            # zeta^order = sign  <=>  q * order has parity of (sign == -1)
            e = q * self.order
            if e.denominator != 1 or e.numerator % 2 != (0 if self.sign == 1 else 1):
                raise ValueError(f"angle {q} does not solve A^{self.order} = {self.sign}I")

    @property
    def dim(self) -> int:
        return 2 if self.kind is Kind.ORBIT else 0

    @property
    def is_orbit(self) -> bool:
        return self.kind is Kind.ORBIT

    def label(self) -> str:
        if self.kind is Kind.ORBIT:
            return f"Orbit({self.trace_class})"
        return self.kind.value


_PLUS = TraceClass(0, 1)
_MINUS = TraceClass(1, 1)


@lru_cache(maxsize=4096)
def enumerate_omega(n: int, sign: int) -> tuple[OmegaComponent, ...]:
    """All components of Omega(n, sign*I): isolated points first, then orbits by angle."""
    if n < 2:
        raise ValueError("order must be >= 2")
    if sign not in (1, -1):
        raise ValueError("sign must be +1 or -1")
    isolated: list[OmegaComponent] = []
    angles: set[Fraction] = set()
    for k in range(n):
        # eigenvalue exp(i*pi*e/n); fold e <-> 2n - e before reducing
        e = 2 * k if sign == 1 else 2 * k + 1
        e = min(e, 2 * n - e)
        if e == 0:
            isolated.append(OmegaComponent(n, sign, Kind.ISOLATED_PLUS_I, _PLUS))
        elif e == n:
            isolated.append(OmegaComponent(n, sign, Kind.ISOLATED_MINUS_I, _MINUS))
        else:
            angles.add(Fraction(e, n))
    isolated.sort(key=lambda c: c.trace_class.fraction)
    orbits = [
        OmegaComponent(n, sign, Kind.ORBIT, TraceClass.from_fraction(q)) for q in sorted(angles)
    ]
    return tuple(isolated + orbits)


def count_orbit_components(n: int, sign: int) -> int:
    """Closed-form number of 2-dimensional components of Omega(n, sign*I)."""
    if n < 2:
        raise ValueError("order must be >= 2")
    if sign == 1:
        return (n - 1) // 2 if n % 2 else (n - 2) // 2
    if sign == -1:
        return (n - 1) // 2 if n % 2 else n // 2
    raise ValueError("sign must be +1 or -1")


def sample_point(c: OmegaComponent, seed: int, scale: float = 1.0) -> Mat2C:
    if c.kind is Kind.ISOLATED_PLUS_I:
        return Mat2C.identity()
    if c.kind is Kind.ISOLATED_MINUS_I:
        return Mat2C.scalar(-1)
    zeta = c.trace_class.eigenvalue
    g = random_sl2(seed, scale)
    return conjugate(g, Mat2C.diag(zeta, 1 / zeta))


@dataclass(frozen=True)
class PowerFiber:
    """Solutions of x^exponent = base; ``solutions is None`` marks a positive-dimensional fiber."""

    base: Mat2C
    exponent: int
    solutions: tuple[Mat2C, ...] | None

    @property
    def infinite(self) -> bool:
        return self.solutions is None

    def __len__(self) -> int:
        if self.solutions is None:
            raise TypeError("fiber is positive-dimensional")
        return len(self.solutions)


def _dedupe(xs: list[Mat2C], threshold: float) -> tuple[Mat2C, ...]:
    out: list[Mat2C] = []
    for x in xs:
        if all(x.dist(y) > threshold for y in out):
            out.append(x)
    return tuple(out)


def solve_power(m: Mat2C, t: int, tol: Tolerances = DEFAULT_TOLERANCES) -> PowerFiber:
    """Every x in SL2 with ``x^t = m``.

    Anything commuting with a non-central m is a polynomial in m, which pins
    down all the finite cases below.
    """
    if t < 1:
        raise ValueError("exponent must be >= 1")
    es = eigen(m, tol)
    if isinstance(es, Central):
        return PowerFiber(m, t, None)
    if isinstance(es, Diagonalizable):
        root = es.eigenvalue ** (1 / t)
        sols = []
        for j in range(t):
            mu = root * cmath.exp(2j * math.pi * j / t)
            sols.append(es.reconstruct(mu))
        return PowerFiber(m, t, _dedupe(sols, tol.duplicate))
    assert isinstance(es, Parabolic)
    # x = a*I + b*N with a = +/-1 gives x^t = a^t I + t a^(t-1) b N
    if es.sign == 1:
        # m = I + N: x = I + N/t always; -(I + N/t) as well when t is even
        x = Mat2C.identity() + es.nilpart * (1 / t)
        sols = [x] if t % 2 else [x, -x]
    else:
        # m = -(I + N) with N = -m - I: needs a^t = -1, so only odd t, x = -(I + N/t)
        nil = -m - Mat2C.identity()
        sols = [-(Mat2C.identity() + nil * (1 / t))] if t % 2 else []
    return PowerFiber(m, t, tuple(sols))


def fiber_residuals(fiber: PowerFiber) -> list[float]:
    if fiber.solutions is None:
        return []
    return [power(x, fiber.exponent).dist(fiber.base) for x in fiber.solutions]
