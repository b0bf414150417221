"""Tests for the Frobenius-piece counts and the Drinfeld curve."""

import pytest

from lietype.errors import LieTypeError, TooLarge, UnsupportedFamily
from lietype.dl import (
    DLCountReport,
    coxeter_condition_check,
    dl_piece_counts,
    drinfeld_count,
    drinfeld_points,
    mu_orbit_check,
    sl2_invariance_check,
)
from lietype.flags import gl_flag_count, sp_flag_count


def by_images(report):
    return {w.images: c for w, c in report.counts.items()}


def test_gl2_q2_m1_all_mass_on_identity():
    report = dl_piece_counts("GL", 2, 2, 1)
    assert by_images(report) == {(1, 2): 3, (2, 1): 0}


def test_gl2_q2_m2_frozen_split():
    report = dl_piece_counts("GL", 2, 2, 2)
    assert by_images(report) == {(1, 2): 3, (2, 1): 2}


def test_gl2_q3_m2_split():
    report = dl_piece_counts("GL", 2, 3, 2)
    assert by_images(report) == {(1, 2): 4, (2, 1): 6}
    assert report.total == gl_flag_count(2, 9)


def test_gl3_partition_identity():
    for m in (1, 2):
        report = dl_piece_counts("GL", 3, 2, m)
        assert report.total == gl_flag_count(3, 2**m)
        assert all(c >= 0 for c in report.counts.values())
        assert len(report.counts) == 6
    m1 = dl_piece_counts("GL", 3, 2, 1)
    assert by_images(m1)[(1, 2, 3)] == gl_flag_count(3, 2)


def test_sp4_partition_identity():
    for m in (1, 2):
        report = dl_piece_counts("Sp", 4, 2, m)
        assert report.total == sp_flag_count(4, 2**m)
        assert len(report.counts) == 8
        for w in report.counts:
            assert w.commutes_with_iota()
    m1 = dl_piece_counts("Sp", 4, 2, 1)
    assert by_images(m1)[(1, 2, 3, 4)] == sp_flag_count(4, 2)


def test_report_json_is_deterministic():
    a = dl_piece_counts("GL", 2, 2, 2).to_json()
    b = dl_piece_counts("GL", 2, 2, 2).to_json()
    assert a == b
    assert a["counts"][0] == {"images": [1, 2], "count": 3}


def test_bad_group_types():
    with pytest.raises(UnsupportedFamily):
        dl_piece_counts("SO", 3, 2, 1)
    with pytest.raises(UnsupportedFamily):
        dl_piece_counts("GL", 1, 2, 1)
    with pytest.raises(UnsupportedFamily):
        dl_piece_counts("Sp", 3, 2, 1)


def test_piece_counts_too_large():
    with pytest.raises(TooLarge):
        dl_piece_counts("GL", 5, 13, 2)


def test_coxeter_condition():
    assert coxeter_condition_check(2, 2, 1)
    assert coxeter_condition_check(2, 2, 2)
    assert coxeter_condition_check(3, 2, 2)
    assert coxeter_condition_check(2, 3, 2)


def test_coxeter_piece_size():
    report = dl_piece_counts("GL", 2, 2, 2)
    assert by_images(report)[(2, 1)] == 2


def test_drinfeld_zero_over_prime_base():
    for q in (2, 3, 4):
        assert drinfeld_count(q, 1) == 0
        assert drinfeld_points(q, 1) == []


def test_drinfeld_six_points_over_gf4():
    assert drinfeld_count(2, 2) == 6
    points = drinfeld_points(2, 2)
    assert len(points) == 6
    field_size = 4
    assert all(0 < x < field_size and 0 < y < field_size for x, y in points)


def test_drinfeld_formula_matches_brute_force():
    for q, m in [(2, 2), (2, 3), (2, 4), (3, 2), (4, 2), (5, 2), (3, 3)]:
        assert drinfeld_count(q, m) == len(drinfeld_points(q, m))


def test_drinfeld_divisibility():
    for q, m in [(2, 2), (3, 2), (4, 2), (2, 4), (5, 2)]:
        if (q**m - 1) % (q + 1) == 0:
            assert drinfeld_count(q, m) % (q + 1) == 0


def test_mu_orbits_free():
    assert mu_orbit_check(2, 2)
    assert mu_orbit_check(3, 2)
    assert mu_orbit_check(4, 2)
    with pytest.raises(LieTypeError):
        mu_orbit_check(2, 3)


def test_sl2_action_preserves_curve():
    assert sl2_invariance_check(2, 2, samples=10, seed=0)
    assert sl2_invariance_check(3, 2, samples=10, seed=1)
    assert sl2_invariance_check(2, 4, samples=5, seed=2)


def test_drinfeld_points_too_large():
    with pytest.raises(TooLarge):
        drinfeld_points(2, 11)


def test_report_fields():
    report = dl_piece_counts("Sp", 4, 2, 1)
    assert isinstance(report, DLCountReport)
    assert (report.group_type, report.n, report.q, report.m) == ("Sp", 4, 2, 1)
