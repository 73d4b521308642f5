"""Counting 4-dimensional components of R(G_pt) for G_pt = <a, b | a^p = b^t>.

Three independent routes to the same number are kept on purpose:

* :func:`c4` -- the simplified closed form,
* :func:`c4_case_expressions` -- the unsimplified per-parity sums of orbit counts,
* :func:`c4_oracle` -- products of orbit counts read off :func:`enumerate_omega`.

All arithmetic is on Python integers.
"""

from __future__ import annotations

import enum
import itertools
import math
from dataclasses import dataclass

from repvar.omega import OmegaComponent, enumerate_omega


class NotCoprime(ValueError):
    pass


@dataclass(frozen=True)
class GroupParams:
    p: int
    t: int

    def __post_init__(self) -> None:
        if not (isinstance(self.p, int) and isinstance(self.t, int)):
            raise TypeError("p and t must be integers")
        if self.p < 2 or self.t < 2:
            raise ValueError(f"need p, t >= 2, got p={self.p}, t={self.t}")

    @property
    def both_even(self) -> bool:
        return self.p % 2 == 0 and self.t % 2 == 0

    @property
    def case(self) -> str:
        return "both-even" if self.both_even else "odd-case"


def _half(n: int) -> int:
    q, r = divmod(n, 2)
    assert r == 0, f"{n} is odd"
    return q


def c4(params: GroupParams) -> int:
    p, t = params.p, params.t
    if params.both_even:
        num = (p - 2) * (t - 2) + p * t
        q, r = divmod(num, 4)
        assert r == 0, f"({p}-2)({t}-2)+{p}*{t} = {num} not divisible by 4"
        return q
    num = (p - 1) * (t - 1)
    return _half(num)


def c4_case_expressions(params: GroupParams) -> int:
    p, t = params.p, params.t
    if params.both_even:
        return _half(p - 2) * _half(t - 2) + _half(p) * _half(t)
    if p % 2 and t % 2:
        return _half(p - 1) * _half(t - 1) + _half(p - 1) * _half(t - 1)
    # mixed parity: the odd exponent contributes (n-1)/2 on both signs
    odd, even = (p, t) if p % 2 else (t, p)
    return _half(odd - 1) * _half(even - 2) + _half(odd - 1) * _half(even)


def _orbits(n: int, sign: int) -> int:
    return sum(1 for c in enumerate_omega(n, sign) if c.is_orbit)


def c4_oracle(params: GroupParams) -> int:
    p, t = params.p, params.t
    return _orbits(p, 1) * _orbits(t, 1) + _orbits(p, -1) * _orbits(t, -1)


class Maximality(enum.Enum):
    ASSERTED_4DIM = "Asserted4Dim"
    UNKNOWN = "Unknown"


@dataclass(frozen=True)
class SComponent:
    """Product piece Omega(p, sign*I) x Omega(t, sign*I) of S."""

    sign: int
    left: OmegaComponent
    right: OmegaComponent

    @property
    def dim(self) -> int:
        return self.left.dim + self.right.dim

    @property
    def maximality(self) -> Maximality:
        return Maximality.ASSERTED_4DIM if self.dim == 4 else Maximality.UNKNOWN


@dataclass(frozen=True)
class FourDimComponent:
    sign: int
    left: OmegaComponent
    right: OmegaComponent

    def __post_init__(self) -> None:
        for side in (self.left, self.right):
            if side.sign != self.sign or not side.is_orbit:
                raise ValueError("both factors must be orbits of the shared sign")

    @property
    def dim(self) -> int:
        return 4


def decompose_s(params: GroupParams) -> list[SComponent]:
    """Every product of components of S = S_+ u S_-; the +1 block comes first."""
    out = []
    for sign in (1, -1):
        for left, right in itertools.product(
            enumerate_omega(params.p, sign), enumerate_omega(params.t, sign)
        ):
            out.append(SComponent(sign, left, right))
    return out


def four_dim_components(params: GroupParams) -> list[FourDimComponent]:
    return [FourDimComponent(c.sign, c.left, c.right) for c in decompose_s(params) if c.dim == 4]


def genus(params: GroupParams) -> int:
    """Genus of the (p, t) torus knot."""
    if math.gcd(params.p, params.t) != 1:
        raise NotCoprime(f"gcd({params.p}, {params.t}) != 1; not a torus knot group")
    return _half((params.p - 1) * (params.t - 1))
