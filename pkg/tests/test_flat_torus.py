"""Flat-torus lattice machinery: exact intersection algebra, certified
enumeration, extremal-ratio searches, and the geodesic crossing oracle.
"""

from __future__ import annotations

import math
from fractions import Fraction

import numpy as np
import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from intnorm import (
    CrossingReport,
    CutoffTooSmallError,
    DegenerateInputError,
    DomainError,
    EmptySearchError,
    IntegerClass,
    Lattice,
    best_ratio_search,
    class_length,
    count_crossings,
    crossing_count_oracle,
    enumerate_classes,
    intersection_number,
    k_real,
    min_length_product,
    norm_comparison_report,
    reduced_basis,
    segment_bound_check,
    systole,
    torus_diameter,
)

SQUARE = Lattice(e1=(1.0, 0.0), e2=(0.0, 1.0))
HEX = Lattice.from_string("1,0,1/2,0.8660254037844386")

SMALL_INTS = st.integers(min_value=-50, max_value=50)
CLASS_PAIRS = st.tuples(SMALL_INTS, SMALL_INTS)


# ---------------------------------------------------------------- lattices

def test_lattice_determinant_and_orientation():
    assert SQUARE.det == 1.0
    assert SQUARE.covolume == 1.0
    assert SQUARE.orientation == 1
    flipped = Lattice(e1=(0.0, 1.0), e2=(1.0, 0.0))
    assert flipped.det == -1.0
    assert flipped.covolume == 1.0
    assert flipped.orientation == -1


def test_lattice_rejects_degenerate_basis():
    with pytest.raises(DegenerateInputError):
        Lattice(e1=(1.0, 2.0), e2=(2.0, 4.0))
    with pytest.raises(DomainError):
        Lattice(e1=(math.nan, 0.0), e2=(0.0, 1.0))


def test_from_string_decimal_and_rational():
    lat = Lattice.from_string("1, 0, 1/2, 4/5")
    assert lat.e1 == (1.0, 0.0)
    assert lat.e2 == (0.5, 0.8)
    assert lat.exact == (Fraction(1), Fraction(0), Fraction(1, 2),
                         Fraction(4, 5))


@pytest.mark.parametrize("text", ["1,0,2", "1,0,x,1", "", "1;0;0;1"])
def test_from_string_rejects_malformed_input(text):
    with pytest.raises(DomainError):
        Lattice.from_string(text)


def test_from_string_rejects_dependent_columns():
    with pytest.raises(DegenerateInputError):
        Lattice.from_string("1,0,2,0")


def test_length_sq_exact_rational_gram():
    lat = Lattice.from_string("1,0,1/2,1/3")
    assert lat.length_sq_exact((1, 2)) == Fraction(40, 9)
    assert SQUARE.length_sq_exact((1, 2)) is None


# ------------------------------------------------------ intersection algebra

def test_intersection_number_examples():
    assert intersection_number((1, 0), (0, 1)) == 1
    assert intersection_number((3, 1), (1, 2)) == 5
    assert intersection_number((1, 2), (3, 1)) == -5
    assert intersection_number((2, 4), (1, 2)) == 0


def test_intersection_number_is_exact_at_large_magnitude():
    big = 10 ** 9
    assert intersection_number((big, 1), (1, big)) == big * big - 1
    assert intersection_number((big, big - 1), (big - 1, big)) == 2 * big - 1


def test_intersection_number_rejects_non_integers():
    with pytest.raises(TypeError):
        intersection_number((1.5, 0), (0, 1))


@given(u=CLASS_PAIRS, v=CLASS_PAIRS)
@settings(max_examples=150, deadline=None)
def test_intersection_antisymmetry(u, v):
    assert intersection_number(u, v) == -intersection_number(v, u)
    assert intersection_number(u, u) == 0


@given(u=CLASS_PAIRS, v=CLASS_PAIRS, w=CLASS_PAIRS, m=SMALL_INTS)
@settings(max_examples=150, deadline=None)
def test_intersection_bilinearity(u, v, w, m):
    uw = (u[0] + m * w[0], u[1] + m * w[1])
    assert intersection_number(uw, v) == (
        intersection_number(u, v) + m * intersection_number(w, v))


# ------------------------------------------------------- reduction, lengths

def test_reduced_basis_unskews():
    lat = Lattice(e1=(1.0, 0.0), e2=(10.3, 1.0))
    c1, c2 = reduced_basis(lat)
    v1 = lat.embed(c1)
    v2 = lat.embed(c2)
    assert math.hypot(*v1) <= math.hypot(*v2)
    assert v1[0] * v2[0] + v1[1] * v2[1] <= 0.0
    assert math.hypot(*v1) == pytest.approx(systole(lat), rel=1e-12)
    assert abs(intersection_number(c1, c2)) == 1  # still a basis
    assert math.hypot(*v2) == pytest.approx(math.hypot(0.3, 1.0), rel=1e-12)


def test_systole_examples():
    assert systole(SQUARE) == pytest.approx(1.0, rel=1e-15)
    assert systole(Lattice(e1=(1.0, 0.0), e2=(0.5, 2.0))) == pytest.approx(
        1.0, rel=1e-15)
    assert systole(HEX) == pytest.approx(1.0, rel=1e-12)


def test_torus_diameter_square_and_hex():
    assert torus_diameter(SQUARE) == pytest.approx(math.sqrt(2) / 2,
                                                   rel=1e-12)
    assert torus_diameter(HEX) == pytest.approx(1 / math.sqrt(3), rel=1e-7)


def test_class_length_accepts_real_classes():
    assert class_length(SQUARE, (3, 4)) == pytest.approx(5.0)
    assert class_length(SQUARE, (0.5, 0.5)) == pytest.approx(
        math.sqrt(0.5), rel=1e-15)


# ------------------------------------------------------------- enumeration

def test_enumerate_classes_square_counts():
    classes, lengths = enumerate_classes(SQUARE, 2.5)
    assert classes.shape[0] == 20
    assert np.all(lengths <= 2.5 + 1e-9)
    assert np.all(lengths > 0)

    canon, _ = enumerate_classes(SQUARE, 2.5, canonical=True)
    assert canon.shape[0] == 10
    prim, _ = enumerate_classes(SQUARE, 2.5, canonical=True,
                                primitive_only=True)
    assert prim.shape[0] == 8
    as_set = {tuple(row) for row in prim}
    assert (0, 2) not in as_set and (2, 0) not in as_set
    assert (1, 0) in as_set and (2, 1) in as_set


def test_enumerate_classes_monotone_in_cutoff():
    small, _ = enumerate_classes(SQUARE, 2.0)
    large, _ = enumerate_classes(SQUARE, 3.0)
    small_set = {tuple(r) for r in small}
    large_set = {tuple(r) for r in large}
    assert small_set < large_set


def test_enumerate_classes_lengths_match_embedding():
    classes, lengths = enumerate_classes(HEX, 3.0)
    for row, length in zip(classes, lengths):
        assert class_length(HEX, tuple(row)) == pytest.approx(
            float(length), rel=1e-12)


def test_enumerate_classes_rejects_bad_cutoff():
    with pytest.raises(DomainError):
        enumerate_classes(SQUARE, 0.0)
    with pytest.raises(DomainError):
        enumerate_classes(SQUARE, math.inf)


def test_enumerate_classes_refuses_pathological_boxes():
    thin = Lattice(e1=(1.0, 0.0), e2=(0.0, 1e-7))
    with pytest.raises(DomainError, match="too large"):
        enumerate_classes(thin, 10.0)


# ----------------------------------------------------------------- searches

def test_best_ratio_square_reaches_real_supremum():
    res = best_ratio_search(SQUARE, 5.0)
    assert res.ratio == pytest.approx(k_real(SQUARE), rel=1e-15)
    u, v = res.pair
    assert abs(intersection_number(u, v)) >= 1


def test_best_ratio_hexagonal():
    res = best_ratio_search(HEX, 10.0)
    assert res.ratio == pytest.approx(2 / math.sqrt(3), rel=1e-9)
    assert res.ratio <= k_real(HEX) * (1 + 1e-12)


def test_best_ratio_never_exceeds_real_supremum():
    rng = np.random.default_rng(7)
    checked = 0
    while checked < 10:
        m = rng.uniform(-1.5, 1.5, size=4)
        if abs(m[0] * m[3] - m[1] * m[2]) < 0.3:
            continue
        lat = Lattice(e1=(m[0], m[1]), e2=(m[2], m[3]))
        res = best_ratio_search(lat, 10.0 * systole(lat))
        assert res.ratio <= k_real(lat) * (1 + 1e-12)
        checked += 1


def test_best_ratio_scale_equivariance():
    doubled = Lattice(e1=(2.0, 0.0), e2=(0.0, 2.0))
    res = best_ratio_search(doubled, 10.0)
    assert res.ratio == pytest.approx(0.25, rel=1e-15)
    assert k_real(doubled) == pytest.approx(0.25, rel=1e-15)


def test_best_ratio_empty_cutoff():
    with pytest.raises(EmptySearchError):
        best_ratio_search(SQUARE, 0.5)


def test_min_length_product_square():
    res = min_length_product(SQUARE, 2, 10.0)
    assert res.product == pytest.approx(2.0, rel=1e-12)
    u, v = res.pair
    assert abs(intersection_number(u, v)) == 2


def test_min_length_product_matches_exhaustive_recount():
    lat = Lattice(e1=(1.0, 0.2), e2=(-0.3, 1.4))
    res = min_length_product(lat, 3, 8.0)
    classes, lengths = enumerate_classes(lat, 8.0, canonical=True)
    best = math.inf
    for i in range(classes.shape[0]):
        for j in range(classes.shape[0]):
            if abs(intersection_number(classes[i], classes[j])) == 3:
                best = min(best, float(lengths[i] * lengths[j]))
    assert res.product == pytest.approx(best, rel=1e-12)


def test_min_length_product_input_validation():
    with pytest.raises(DegenerateInputError):
        min_length_product(SQUARE, 0, 10.0)
    with pytest.raises(DomainError):
        min_length_product(SQUARE, -1, 10.0)
    with pytest.raises(CutoffTooSmallError):
        min_length_product(SQUARE, 50, 2.0)
    with pytest.raises(EmptySearchError):
        min_length_product(SQUARE, 1, 0.5)


# ------------------------------------------------------------ segment bound

def test_segment_bound_square():
    rep = segment_bound_check(SQUARE, 3.0)
    assert rep.systole == pytest.approx(1.0)
    assert rep.nine_bound_ok
    assert rep.sine_bound == pytest.approx(1.0)
    assert rep.sine_bound_ok
    assert rep.max_normalized == pytest.approx(1.0, rel=1e-12)
    assert rep.pairs_checked > 0


def test_segment_bound_consistent_with_ratio_search():
    lat = Lattice(e1=(1.1, 0.3), e2=(-0.2, 0.9))
    cutoff = 10.0 * systole(lat)
    rep = segment_bound_check(lat, cutoff)
    best = best_ratio_search(lat, cutoff)
    l1 = systole(lat)
    assert rep.max_normalized == pytest.approx(l1 * l1 * best.ratio,
                                               rel=1e-12)


# --------------------------------------------------------- norm comparison

def test_norm_comparison_square_is_tight():
    rep = norm_comparison_report(SQUARE, (3.0, 4.0))
    assert rep.stable == pytest.approx(5.0)
    assert rep.l2 == pytest.approx(5.0)
    assert rep.two_sided_ok


def test_norm_comparison_scales_with_covolume():
    lat = Lattice(e1=(2.0, 0.0), e2=(0.0, 2.0))
    rep = norm_comparison_report(lat, (1.0, 0.0))
    assert rep.stable == pytest.approx(2.0)
    assert rep.l2 == pytest.approx(1.0)
    assert rep.two_sided_ok


# ----------------------------------------------------------- crossing oracle

def test_crossing_oracle_square_example():
    rep = crossing_count_oracle(SQUARE, (3, 1), (1, 2), (0.37, 0.41))
    assert rep.count == 5
    assert rep.signs == (1,) * 5
    assert rep.uniform_sign() == 1
    assert len(rep.positions) == 5


def test_crossing_oracle_sign_flips_with_order():
    rep = crossing_count_oracle(SQUARE, (1, 2), (3, 1), (0.37, 0.41))
    assert rep.count == 5
    assert rep.uniform_sign() == -1


def test_crossing_oracle_positions_lie_in_fundamental_domain():
    rep = crossing_count_oracle(SQUARE, (2, 3), (1, -1), (0.13, 0.29))
    assert rep.count == abs(intersection_number((2, 3), (1, -1)))
    for x, y in rep.positions:
        assert -1e-9 <= x <= 1.0 + 1e-9
        assert -1e-9 <= y <= 1.0 + 1e-9


def test_crossing_oracle_rejects_degenerate_classes():
    with pytest.raises(DegenerateInputError):
        crossing_count_oracle(SQUARE, (0, 0), (1, 0), (0.1, 0.1))
    with pytest.raises(DegenerateInputError):
        crossing_count_oracle(SQUARE, (2, 4), (1, 2), (0.1, 0.1))


def test_count_crossings_matches_formula_on_random_classes():
    rng = np.random.default_rng(11)
    lat = Lattice(e1=(1.0, 0.1), e2=(0.2, 1.3))
    checked = 0
    while checked < 25:
        a, b, c, d = rng.integers(-4, 5, size=4)
        u, v = (int(a), int(b)), (int(c), int(d))
        n = (0 if u == (0, 0) or v == (0, 0)
             else intersection_number(u, v))
        if n == 0:
            continue
        rep = count_crossings(lat, u, v, rng)
        assert rep.count == abs(n)
        assert rep.uniform_sign() == (1 if n > 0 else -1)
        checked += 1


def test_count_crossings_orientation_reversal():
    flipped = Lattice(e1=(0.0, 1.0), e2=(1.0, 0.0))
    rng = np.random.default_rng(3)
    rep = count_crossings(flipped, (1, 0), (0, 1), rng)
    assert rep.count == 1
    # intersection is a basis-level invariant, independent of how the
    # basis sits in the plane
    assert rep.uniform_sign() == 1


def test_crossing_report_uniform_sign_rejects_mixed():
    rep = CrossingReport(count=2, signs=(1, -1), positions=((0, 0), (1, 1)))
    with pytest.raises(ValueError, match="mixed"):
        rep.uniform_sign()
    empty = CrossingReport(count=0, signs=(), positions=())
    assert empty.uniform_sign() == 0
