"""Exit criteria for the package. One test per criterion; a summary line per
criterion is printed at the end of the pytest run."""

import itertools
import math
import subprocess
import sys
import time

from repvar.counting import GroupParams, c4, c4_case_expressions, c4_oracle, four_dim_components, genus
from repvar.omega import count_orbit_components, enumerate_omega, fiber_residuals, sample_point, solve_power
from repvar.probe import RepPoint, draw_off_s, jacobian_fd_error, verify_theorem_a, verify_theorem_b
from repvar.sl2 import Mat2C, companion, conjugate, power, random_sl2, similarity_witness

PROBE_SET = [(2, 3), (3, 3), (3, 4), (4, 6), (5, 4)]


def test_ac01_closed_form():
    """C4 closed form on the six reference pairs"""
    expected = {(2, 2): 1, (2, 3): 1, (3, 3): 2, (3, 5): 4, (4, 6): 8, (3, 4): 3}
    got = {pt: c4(GroupParams(*pt)) for pt in expected}
    print(f"AC1 {got}")
    assert got == expected


def test_ac02_three_way_sweep():
    """closed form = case expressions = enumeration oracle, symmetric, 2<=p,t<=50 in < 1 s"""
    enumerate_omega.cache_clear()
    start = time.perf_counter()
    bad = []
    for p, t in itertools.product(range(2, 51), repeat=2):
        P = GroupParams(p, t)
        a, b, c = c4(P), c4_case_expressions(P), c4_oracle(P)
        if not (a == b == c == c4(GroupParams(t, p))):
            bad.append((p, t, a, b, c))
    elapsed = time.perf_counter() - start
    print(f"AC2 2401 pairs, {len(bad)} disagreements, {elapsed:.3f}s")
    assert not bad
    assert elapsed < 1.0


def test_ac03_omega_counting():
    """orbit counts: closed form vs enumeration for 2<=n<=100, both signs, plus spot values"""
    for n, sign in itertools.product(range(2, 101), (1, -1)):
        assert count_orbit_components(n, sign) == sum(c.is_orbit for c in enumerate_omega(n, sign))
    spots = {(5, 1): 2, (4, 1): 1, (7, -1): 3, (6, -1): 3}
    got = {k: count_orbit_components(*k) for k in spots}
    print(f"AC3 spot values {got}")
    assert got == spots


def test_ac04_genus_correspondence():
    """genus = C4 for all coprime 2<=p<t<=30"""
    pairs = [(p, t) for p in range(2, 31) for t in range(p + 1, 31) if math.gcd(p, t) == 1]
    bad = [(p, t) for p, t in pairs if genus(GroupParams(p, t)) != c4(GroupParams(p, t))]
    print(f"AC4 {len(pairs)} coprime pairs, {len(bad)} mismatches")
    assert not bad


def test_ac05_off_s_dimension_three():
    """25 off-S samples per pair: all conclusive dims 3, conclusive rate >= 80%, < 30 s"""
    start = time.perf_counter()
    summaries = [verify_theorem_b(GroupParams(*pt), 25, 11) for pt in PROBE_SET]
    elapsed = time.perf_counter() - start
    for pt, s in zip(PROBE_SET, summaries):
        print(f"AC5 {pt}: probes={len(s.records)} rate={s.conclusive_rate:.3f} dims={s.observed_dims}")
        assert s.fibers_finite
        assert not s.mismatches
        assert s.observed_dims == [3]
        assert s.conclusive_rate >= 0.8
    print(f"AC5 elapsed {elapsed:.2f}s")
    assert elapsed < 30


def test_ac06_component_dimension_four():
    """10 samples on each asserted 4-dim component: all conclusive dims 4, rate >= 80%, < 60 s"""
    start = time.perf_counter()
    summaries = [verify_theorem_a(GroupParams(*pt), 10, 7) for pt in PROBE_SET]
    elapsed = time.perf_counter() - start
    for pt, s in zip(PROBE_SET, summaries):
        print(f"AC6 {pt}: components={len(s.groups)} rate={s.conclusive_rate:.3f} dims={s.observed_dims}")
        assert len(s.groups) == c4(GroupParams(*pt))
        assert len(s.records) == 10 * len(s.groups)
        assert not s.mismatches
        assert s.observed_dims == [4]
        assert s.conclusive_rate >= 0.8
    print(f"AC6 elapsed {elapsed:.2f}s")
    assert elapsed < 60


def test_ac07_fiber_facts():
    """x^t = m fibers: t solutions on diagonalizable bases; parabolic size table; empty trace -2 / even t"""
    worst = 0.0
    for seed in range(100):
        m = random_sl2(seed)
        for t in range(1, 13):
            fiber = solve_power(m, t)
            assert len(fiber) == t
            worst = max(worst, max(fiber_residuals(fiber)))
    assert worst <= 1e-8
    table = {(1, 1): 1, (1, 0): 2, (-1, 1): 1, (-1, 0): 0}
    for sign, t, seed in itertools.product((1, -1), range(1, 21), range(100)):
        m = conjugate(random_sl2(seed), Mat2C(sign, 1, 0, sign))
        fiber = solve_power(m, t)
        assert len(fiber) == table[sign, t % 2]
        assert all(r <= 1e-8 for r in fiber_residuals(fiber))
    assert solve_power(Mat2C(-1, 1, 0, -1), 2).solutions == ()
    print(f"AC7 worst diagonalizable residual {worst:.3g}")


def test_ac08_lemma_properties():
    """similarity witness on 200 equal-trace pairs; Omega dim/reducibility flags for n<=100"""
    worst = 0.0
    for k in range(200):
        tau = complex(-3 + 6 * ((k * 0.618) % 1), 2 * ((k * 0.414) % 1) - 1)
        if min(abs(tau - 2), abs(tau + 2)) < 1e-2:
            tau += 0.5
        A = conjugate(random_sl2(2 * k), companion(tau))
        B = conjugate(random_sl2(2 * k + 1), companion(tau))
        g = similarity_witness(A, B)
        worst = max(worst, conjugate(g, A).dist(B))
    print(f"AC8 worst similarity residual {worst:.3g}")
    assert worst <= 1e-8
    for n in range(2, 101):
        plus, minus = enumerate_omega(n, 1), enumerate_omega(n, -1)
        # Omega(n, I): dim 0 iff n = 2, dim 2 otherwise; always reducible
        assert max(c.dim for c in plus) == (0 if n == 2 else 2)
        assert len(plus) >= 2
        # Omega(n, -I): dim 2 for all n; reducible for n > 2
        assert max(c.dim for c in minus) == 2
        if n > 2:
            assert len(minus) >= 2


def test_ac09_jacobian_finite_differences():
    """analytic Jacobian vs central differences, relative error <= 1e-5 on 100 on-variety points"""
    worst = 0.0
    pts = [(2, 3), (3, 3), (4, 6), (3, 4)]
    for i in range(100):
        P = GroupParams(*pts[i % 4])
        if i % 2:
            m1, _ = draw_off_s(P, i)
            x = solve_power(power(m1, P.p), P.t).solutions[i % P.t]
            point = RepPoint(m1, x)
        else:
            comps = four_dim_components(P)
            comp = comps[i % len(comps)]
            point = RepPoint(sample_point(comp.left, i), sample_point(comp.right, i + 1000))
        worst = max(worst, jacobian_fd_error(point, P))
    print(f"AC9 worst relative error {worst:.3g}")
    assert worst <= 1e-5


def test_ac10_verify_deterministic(tmp_path):
    """verify with fixed seed gives byte-identical JSON across two runs"""
    outs = []
    for k in range(2):
        path = tmp_path / f"run{k}.json"
        res = subprocess.run(
            [sys.executable, "-m", "repvar", "verify", "-p", "3", "-t", "4",
             "--samples", "10", "--seed", "7", "-o", str(path)],
            capture_output=True,
        )
        assert res.returncode == 0, res.stderr
        outs.append(path.read_bytes())
    print(f"AC10 {len(outs[0])} bytes, identical={outs[0] == outs[1]}")
    assert outs[0] == outs[1]
