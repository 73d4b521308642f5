import math

import pytest
from hypothesis import given, strategies as st

from repvar.counting import (
    FourDimComponent,
    GroupParams,
    Maximality,
    NotCoprime,
    c4,
    c4_case_expressions,
    c4_oracle,
    decompose_s,
    four_dim_components,
    genus,
)
from repvar.omega import enumerate_omega

exps = st.integers(min_value=2, max_value=200)


def brute_c4(p: int, t: int) -> int:
    """Count orbit pairs directly from the root-of-unity exponents, no enumeration code."""
    total = 0
    for sign in (1, -1):
        def orbit_angles(n):
            odd = sign == -1
            return {min(e, 2 * n - e) for e in range(2 * n) if e % 2 == odd} - {0, n}
        total += len(orbit_angles(p)) * len(orbit_angles(t))
    return total


@pytest.mark.parametrize("p, t, expected", [(2, 2, 1), (2, 3, 1), (4, 6, 8), (3, 5, 4), (3, 3, 2), (3, 4, 3)])
def test_c4_examples(p, t, expected):
    assert c4(GroupParams(p, t)) == expected


@pytest.mark.parametrize("p, t, expected", [(4, 6, 8), (3, 3, 2), (3, 4, 3), (4, 3, 3)])
def test_case_expression_examples(p, t, expected):
    assert c4_case_expressions(GroupParams(p, t)) == expected


@pytest.mark.parametrize("p, t, expected", [(2, 3, 1), (2, 2, 1), (5, 5, 8)])
def test_oracle_examples(p, t, expected):
    assert c4_oracle(GroupParams(p, t)) == expected


@given(exps, exps)
def test_three_routes_and_brute_force_agree(p, t):
    P = GroupParams(p, t)
    assert c4(P) == c4_case_expressions(P) == c4_oracle(P) == brute_c4(p, t)


@given(exps, exps)
def test_symmetry(p, t):
    assert c4(GroupParams(p, t)) == c4(GroupParams(t, p))


@given(st.integers(1, 100), st.integers(1, 100))
def test_even_divisibility(a, b):
    p, t = 2 * a, 2 * b
    assert ((p - 2) * (t - 2) + p * t) % 4 == 0


def test_params_validation():
    with pytest.raises(ValueError):
        GroupParams(1, 3)
    with pytest.raises(ValueError):
        GroupParams(3, 0)
    with pytest.raises(TypeError):
        GroupParams(2.0, 3)


def test_decompose_22():
    comps = decompose_s(GroupParams(2, 2))
    plus = [c for c in comps if c.sign == 1]
    minus = [c for c in comps if c.sign == -1]
    assert len(plus) == 4 and all(c.dim == 0 for c in plus)
    assert len(minus) == 1 and minus[0].dim == 4
    assert minus[0].maximality is Maximality.ASSERTED_4DIM


def test_decompose_23():
    comps = decompose_s(GroupParams(2, 3))
    plus = [(c.left.label(), c.right.label(), c.dim) for c in comps if c.sign == 1]
    minus = [(c.left.label(), c.right.label(), c.dim) for c in comps if c.sign == -1]
    assert plus == [
        ("IsolatedPlusI", "IsolatedPlusI", 0),
        ("IsolatedPlusI", "Orbit(2/3)", 2),
        ("IsolatedMinusI", "IsolatedPlusI", 0),
        ("IsolatedMinusI", "Orbit(2/3)", 2),
    ]
    assert minus == [("Orbit(1/2)", "IsolatedMinusI", 2), ("Orbit(1/2)", "Orbit(1/3)", 4)]


@given(st.integers(2, 30), st.integers(2, 30))
def test_decompose_structure(p, t):
    P = GroupParams(p, t)
    comps = decompose_s(P)
    sizes = {s: len(enumerate_omega(p, s)) * len(enumerate_omega(t, s)) for s in (1, -1)}
    assert len(comps) == sizes[1] + sizes[-1]
    signs = [c.sign for c in comps]
    assert signs == sorted(signs, reverse=True)
    for c in comps:
        assert c.dim == c.left.dim + c.right.dim
        assert (c.maximality is Maximality.ASSERTED_4DIM) == (c.dim == 4)
    n4 = sum(c.dim == 4 for c in comps)
    assert n4 == c4(P) >= 1
    assert len(four_dim_components(P)) == n4


def test_four_dim_component_rejects_isolated():
    iso = enumerate_omega(3, 1)[0]
    orb = enumerate_omega(3, 1)[1]
    with pytest.raises(ValueError):
        FourDimComponent(1, iso, orb)


@pytest.mark.parametrize("p, t, expected", [(2, 3, 1), (3, 5, 4)])
def test_genus_examples(p, t, expected):
    P = GroupParams(p, t)
    assert genus(P) == expected == c4(P)


def test_genus_not_coprime():
    with pytest.raises(NotCoprime):
        genus(GroupParams(2, 4))


@given(st.integers(2, 60), st.integers(2, 60))
def test_genus_equals_c4_when_coprime(p, t):
    if math.gcd(p, t) == 1:
        P = GroupParams(p, t)
        assert genus(P) == c4(P)
