"""Acceptance gate: ten pinned criteria, one test and one printed
pass/fail line each.

Every criterion re-derives its expectation from an independent mechanism
(brute-force oracle, exact integer arithmetic, extended precision, or an
exhaustive grid) and carries its own runtime budget.
"""

from __future__ import annotations

import json
import math
import subprocess
import sys
import time

import pytest

from intnorm import (
    RetrySignal,
    asymptotic_profile,
    best_ratio_search,
    collar_constants_check,
    count_crossings,
    hyperbolic_bounds,
    intersection_number,
    k_real,
    norm_comparison_report,
    parse_grid,
    rewind_suite_check,
    segment_bound_check,
    systole,
)
from intnorm.flat_torus import RealClass
from intnorm.seeding import named_stream
from intnorm.suites import _random_primitive_class, lemma_sweep, random_lattice

SEED = 1


def _report(num: int, title: str, failures: list, elapsed: float,
            budget: float | None) -> None:
    if budget is not None and elapsed >= budget:
        failures.append(f"runtime {elapsed:.2f}s exceeded budget {budget}s")
    verdict = "PASS" if not failures else "FAIL"
    line = f"criterion {num:02d} [{verdict}] {title} ({elapsed:.2f}s)"
    if failures:
        line += f" :: {failures[0]}" + (
            f" (+{len(failures) - 1} more)" if len(failures) > 1 else "")
    print(line)
    assert not failures, "\n".join(str(f) for f in failures)


def test_c01_flat_torus_equality():
    t0 = time.monotonic()
    failures = []
    rng = named_stream(SEED, "acceptance.c1")
    from intnorm import Lattice
    square = Lattice((1.0, 0.0), (0.0, 1.0))
    hexagonal = Lattice((1.0, 0.0), (0.5, math.sqrt(3.0) / 2.0))
    for i in range(20):
        lat = random_lattice(rng)
        k = k_real(lat)
        if abs(k * lat.covolume - 1.0) > 1e-12:
            failures.append(f"lattice {i}: k*covolume != 1")
        res = best_ratio_search(lat, 30.0 * systole(lat))
        if res.ratio > k * (1.0 + 1e-12):
            failures.append(f"lattice {i}: search ratio {res.ratio!r} "
                            f"exceeds {k!r}")
    for name, lat in (("square", square), ("hexagonal", hexagonal)):
        res = best_ratio_search(lat, 30.0 * systole(lat))
        if abs(res.ratio - k_real(lat)) > 1e-12 * k_real(lat):
            failures.append(f"{name}: ratio {res.ratio!r} misses "
                            f"{k_real(lat)!r}")
    _report(1, "flat-torus ratio equals 1/covolume (20 random + square "
            "+ hexagonal)", failures, time.monotonic() - t0, 10.0)


def test_c02_torus_oracle_equivalence():
    t0 = time.monotonic()
    failures = []
    rng_lat = named_stream(SEED, "acceptance.c2.lat")
    rng = named_stream(SEED, "acceptance.c2.pairs")
    lats = [random_lattice(rng_lat) for _ in range(20)]
    checked = 0
    while checked < 500:
        lat = lats[checked % len(lats)]
        u = _random_primitive_class(lat, rng)
        v = _random_primitive_class(lat, rng)
        n = intersection_number(u, v)
        if n == 0:
            continue
        checked += 1
        try:
            rep = count_crossings(lat, u, v, rng)
        except RetrySignal as exc:
            failures.append(f"{tuple(u)} x {tuple(v)}: oracle stuck: {exc}")
            continue
        if rep.count != abs(n):
            failures.append(f"{tuple(u)} x {tuple(v)}: count {rep.count} "
                            f"!= |Int| = {abs(n)}")
        elif rep.count and rep.uniform_sign() != (1 if n > 0 else -1):
            failures.append(f"{tuple(u)} x {tuple(v)}: signs {rep.signs} "
                            f"do not match sign({n})")
    _report(2, "crossing oracle reproduces a*d - b*c on 500 primitive "
            "pairs", failures, time.monotonic() - t0, 10.0)


def test_c03_segment_bound():
    t0 = time.monotonic()
    failures = []
    rng = named_stream(SEED, "acceptance.c3")
    for i in range(20):
        lat = random_lattice(rng)
        rep = segment_bound_check(lat, 30.0 * systole(lat))
        if not rep.nine_bound_ok:
            failures.append(f"lattice {i}: normalized max "
                            f"{rep.max_normalized!r} exceeds 9")
        if not rep.sine_bound_ok:
            failures.append(f"lattice {i}: normalized max "
                            f"{rep.max_normalized!r} exceeds the angle "
                            f"bound {rep.sine_bound!r}")
    _report(3, "normalized intersection stays under 9 and under "
            "systole^2/covolume (20 lattices)", failures,
            time.monotonic() - t0, 20.0)


def test_c04_cylinder_window_sign_and_length():
    t0 = time.monotonic()
    failures = []
    rng = named_stream(SEED, "acceptance.c4")
    total = 10_000
    shares = (total // 3, total // 3, total - 2 * (total // 3))
    for core_length, n in zip((0.05, 0.1, 0.2), shares):
        res = lemma_sweep(core_length, n, rng, mode="shrunk")
        failures.extend(f"[core {core_length}] {v}" for v in res.violations)
    _report(4, "10^4 arc pairs: oracle count in the winding window, "
            "uniform predicted signs, arc-length floors", failures,
            time.monotonic() - t0, 60.0)


def _winding_family(rng, m: int, count: int = 2) -> tuple[float, ...]:
    # windings with floor(min |v|) = m, pairwise gaps < 1, one orientation
    # as soon as m >= 1; mixed signs are exercised at m = 0
    if m == 0:
        center = rng.uniform(-0.5, 0.5)
        return tuple(center + rng.uniform(-0.49, 0.49) for _ in range(count))
    sigma = 1.0 if rng.random() < 0.5 else -1.0
    base = rng.uniform(0.0, 0.01)
    return tuple(sigma * (m + base + rng.uniform(0.0, 0.98))
                 for _ in range(count))


def test_c05_rewind_grid():
    t0 = time.monotonic()
    failures = []
    rng = named_stream(SEED, "acceptance.c5")
    cells = 0
    for m_g in range(13):
        for m_d in range(13):
            for same_side in (True, False):
                for _ in range(50):
                    g = _winding_family(rng, m_g)
                    d = _winding_family(rng, m_d)
                    cells += 1
                    rep = rewind_suite_check(g, d, same_side)
                    if rep.m_gamma != m_g or rep.m_delta != m_d:
                        failures.append(
                            f"sampler missed cell ({m_g}, {m_d}): got "
                            f"({rep.m_gamma}, {rep.m_delta})")
                    failures.extend(
                        f"cell ({m_g}, {m_d}, same={same_side}): {v}"
                        for v in rep.violations)
    if cells != 13 * 13 * 2 * 50:
        failures.append(f"expected {13 * 13 * 2 * 50} rewind cases, "
                        f"ran {cells}")
    _report(5, "rewind move: leading windings land below 3, trailing "
            "below 5, signs preserved, lengths shrink (16900 cases)",
            failures, time.monotonic() - t0, 60.0)


def test_c06_collar_constants():
    t0 = time.monotonic()
    failures = []
    rep = collar_constants_check()
    if rep.points_checked != 1000 or rep.mono_points_checked != 1000:
        failures.append(f"expected 1000-point grids, got "
                        f"{rep.points_checked}/{rep.mono_points_checked}")
    failures.extend(rep.violations)
    _report(6, "collar-width inequalities on (0, 0.25] and 1/(x*cl(x)) "
            "strictly decreasing on (0, 2*arsinh(1)]", failures,
            time.monotonic() - t0, 1.0)


def test_c07_hyperbolic_bound_formulas():
    t0 = time.monotonic()
    failures = []
    hb = hyperbolic_bounds(2, 0.1)
    ex = hyperbolic_bounds(2, 0.1, extended=True)
    if abs(hb.lower - 0.043950) > 1e-6:
        failures.append(f"lower {hb.lower!r} is not 0.043950 (+-1e-6)")
    if abs(hb.upper - 192.79) > 5e-3:
        failures.append(f"upper {hb.upper!r} is not 192.79 (+-5e-3)")
    for field in ("lower", "upper", "collar_rate"):
        d, e = getattr(hb, field), getattr(ex, field)
        if abs(d - e) > 1e-6 * abs(e):
            failures.append(f"{field} drifts from extended precision: "
                            f"{d!r} vs {e!r}")
    for s in range(2, 21):
        for l1 in parse_grid("1e-4:0.25:50", geometric=True):
            b = hyperbolic_bounds(s, l1)
            if not b.lower < b.upper:
                failures.append(f"lower >= upper at (s={s}, l1={l1})")
    _report(7, "hyperbolic bounds at (2, 0.1) match extended precision; "
            "lower < upper over s in [2,20] x l1 in [1e-4, 0.25]",
            failures, time.monotonic() - t0, 1.0)


def test_c08_small_systole_asymptotics():
    t0 = time.monotonic()
    failures = []
    grid = parse_grid("1e-2:1e-12:51", geometric=True)
    rows = asymptotic_profile(2, grid)
    last = rows[-1]
    if abs(last.lower_profile_tail - 0.25) > 0.10 * 0.25:
        failures.append(f"tail-normalized lower profile "
                        f"{last.lower_profile_tail!r} at l1=1e-12 is not "
                        "within 10% of 0.25")
    if abs(last.upper_profile_tail - 18.0) > 0.05 * 18.0:
        failures.append(f"tail-normalized upper profile "
                        f"{last.upper_profile_tail!r} at l1=1e-12 is not "
                        "within 5% of 18")
    for a, b in zip(rows, rows[1:]):
        if not a.lower_profile_tail < b.lower_profile_tail:
            failures.append(f"lower tail profile not monotone at "
                            f"l1={b.l1!r}")
        if not a.upper_profile_tail < b.upper_profile_tail:
            failures.append(f"upper tail profile not monotone at "
                            f"l1={b.l1!r}")
    _report(8, "tail-normalized profiles approach 1/(4(s-1)) and 18(s-1) "
            "monotonically along 1e-2 -> 1e-12", failures,
            time.monotonic() - t0, 1.0)


def test_c09_norm_comparison():
    t0 = time.monotonic()
    failures = []
    rng = named_stream(SEED, "acceptance.c9")
    checked = 0
    while checked < 100:
        lat = random_lattice(rng)
        h = RealClass(rng.uniform(-5.0, 5.0), rng.uniform(-5.0, 5.0))
        if abs(h.x) + abs(h.y) < 1e-3:
            continue
        checked += 1
        rep = norm_comparison_report(lat, h)
        if not rep.two_sided_ok:
            failures.append(f"two-sided comparison failed on {tuple(h)}")
        if abs(rep.l2 * math.sqrt(lat.covolume) - rep.stable) \
                > 1e-12 * rep.stable:
            failures.append(f"l2*sqrt(V) != stable on {tuple(h)}: "
                            f"{rep.l2!r} vs {rep.stable!r}")
    _report(9, "stable norm vs harmonic L2 norm tight on both sides "
            "(100 random classes)", failures, time.monotonic() - t0, 1.0)


def test_c10_verify_is_byte_deterministic(tmp_path):
    t0 = time.monotonic()
    failures = []
    outputs = []
    for name in ("first.json", "second.json"):
        target = tmp_path / name
        proc = subprocess.run(
            [sys.executable, "-m", "intnorm", "verify", "--suite", "all",
             "--seed", "1", "--output", str(target)],
            capture_output=True, text=True)
        if proc.returncode != 0:
            failures.append(f"verify run exited {proc.returncode}: "
                            f"{proc.stderr.strip()[:300]}")
            continue
        outputs.append(target.read_bytes())
    if len(outputs) == 2 and outputs[0] != outputs[1]:
        failures.append("the two verify reports differ byte-for-byte")
    if outputs:
        doc = json.loads(outputs[0])
        if doc["violations"]:
            failures.append(f"verify reported violations: "
                            f"{doc['violations'][:3]}")
        if doc["timing_ms"] is not None:
            failures.append("timing_ms leaked into the report body")
    _report(10, "verify --suite all --seed 1 twice: byte-identical "
            "reports, zero violations", failures,
            time.monotonic() - t0, None)


if __name__ == "__main__":
    sys.exit(pytest.main([__file__, "-v", "-s"]))
