import json
from fractions import Fraction as F

import pytest
from hypothesis import given, settings, strategies as st

from diopiped.families import (
    DegenerateError,
    FamilyPoint,
    general_int,
    general_rat,
    pattern1_abc,
    pattern1_four_sets,
    pattern1_int,
    pattern1_rat,
    pattern2_d,
    pattern2_int,
    pattern2_rat,
    point,
    points,
    sum2squares_param,
    t_general,
    t_general_int,
)
from diopiped.fixtures import table1
from diopiped.geometry import geometric_valid_s
from diopiped.sspace import SParams, equivalent, normalize, sharipov_feasible

from conftest import direct_residual, rationals

Q = SParams.parse
small = st.integers(-25, 25)


@pytest.mark.parametrize("mn, abg", [((2, 1), (7, 1, 5)), ((1, 1), (2, 2, 2)), ((3, 2), (17, 7, 13))])
def test_sum2squares_examples(mn, abg):
    assert sum2squares_param(*mn) == abg


@given(small, small)
def test_sum2squares_identity(m, n):
    if m == n == 0:
        with pytest.raises(ValueError):
            sum2squares_param(m, n)
        return
    a, b, g = sum2squares_param(m, n)
    assert a * a + b * b == 2 * g * g


def test_pattern1_four_sets_exact():
    got = pattern1_four_sets(2, 1)
    assert got == [Q("1/2,1/7,1/10,7/10"), Q("1/2,7,7/10,1/10"), Q("1/2,7,10,10/7"), Q("1/2,1/7,10/7,10")]
    assert len({normalize(s) for s in got}) == 1


def test_pattern1_abc_builds_each_set():
    for m, n in [(2, 1), (3, 2), (5, 2), (7, 3)]:
        for (a, b, c), s in zip(pattern1_abc(m, n), pattern1_four_sets(m, n)):
            assert s == SParams(F(1, 2), F(c, a), F(c, b), F(a, b))


@pytest.mark.parametrize("mn", [(1, 1), (2, 2), (3, -3), (0, 4), (4, 0)])
def test_pattern1_degenerate_pairs(mn):
    with pytest.raises(DegenerateError, match="degenerate parameter pair"):
        pattern1_four_sets(*mn)


@settings(max_examples=200)
@given(small, small)
def test_pattern1_sets_are_solutions_and_permutations(m, n):
    try:
        sets = pattern1_four_sets(m, n)
    except DegenerateError:
        return
    assert all(direct_residual(s) == 0 for s in sets)
    assert all(equivalent(s, sets[0]) for s in sets)


def test_pattern1_rat_examples():
    assert pattern1_rat(2) == Q("1/2,1/7,1/10,7/10")
    assert pattern1_rat(F(3, 2)) == Q("1/2,7/17,7/26,17/26")
    # q = 1 gives s2 = 1: returned but flagged
    fp = point("P1_RAT", F(1))
    assert fp.s.s2 == 1 and fp.degenerate


@given(st.integers(1, 40), st.integers(1, 40))
def test_pattern1_homogeneity(m, n):
    try:
        first = pattern1_int(m, n)
    except DegenerateError:
        return
    assert pattern1_rat(F(m, n)) == first


def test_pattern2_examples():
    assert pattern2_rat(F(1, 3)) == Q("1/2,7/16,5/16,35/16")
    assert equivalent(pattern2_rat(F(1, 3)), Q("1/2,16/7,16/5,16/35"))
    assert equivalent(pattern2_rat(F(1, 5)), Q("1/2,80/119,80/91,80/221"))
    with pytest.raises(DegenerateError):
        pattern2_int(1, 1)
    with pytest.raises(DegenerateError):
        pattern2_rat(-1)


def test_pattern2_matches_every_table_row():
    for row in table1():
        assert equivalent(pattern2_rat(row["q"]), row["s"])


def test_table_rows_have_common_numerator():
    for row in table1():
        b, a, c = row["bac"]
        d = row["d"]
        assert row["s"] == SParams(F(1, 2), F(d, b), F(d, a), F(d, c))


def test_d_divisible_by_16():
    bad = [(m, n) for m in range(2, 51) for n in range(1, m) if pattern2_d(m, n) % 16]
    assert bad == []


@given(st.integers(1, 30), st.integers(1, 30))
def test_pattern2_integer_and_rational_agree(m, n):
    if m == n:
        return
    s = pattern2_int(m, n)
    assert s == pattern2_rat(F(m, n))
    assert pattern2_int(3 * m, 3 * n) == s
    d = pattern2_d(m, n)
    assert all((v * d).denominator == 1 for v in s[1:])


def test_general_examples():
    assert general_rat(F(1, 2), F(1, 3)) == Q("1/2,7/16,5/16,35/16")
    with pytest.raises(DegenerateError, match="degenerate parameter"):
        general_rat(F(3, 7), 1)
    with pytest.raises(DegenerateError):
        general_rat(0, F(2, 3))
    s = general_int(1, 2, 2, 1)
    assert s.s1 == F(1, 2) and direct_residual(s) == 0


@given(rationals(40).filter(lambda r: abs(r) != 1))
def test_general_specializes_to_pattern2(r):
    assert general_rat(F(1, 2), r) == pattern2_rat(r)


@settings(max_examples=300)
@given(rationals(30), rationals(30).filter(lambda r: abs(r) != 1))
def test_general_rat_solves_and_measures_t(s, r):
    try:
        v = general_rat(s, r)
    except DegenerateError:
        return
    assert direct_residual(v) == 0
    assert t_general(s, r) == v.s3 - v.s4


@settings(max_examples=200)
@given(small, small, small, small)
def test_general_int_is_general_rat(r, s, m, n):
    try:
        v = general_int(r, s, m, n)
    except DegenerateError:
        return
    assert v == general_rat(F(r, s), F(m, n))
    assert t_general_int(r, s, m, n) == t_general(F(r, s), F(m, n))


def test_t_general_examples():
    assert t_general(F(1, 2), F(1, 3)) == F(-15, 8)
    assert t_general(F(1, 2), 3) == F(15, 8)
    assert t_general(1, F(2, 5)) == 0


def test_feasibility_is_reported_not_assumed():
    bad = point("P1_SET1", 2, 1)
    good = point("P1_SET1", 3, 2)
    assert not bad.feasible and not bad.geometric_valid
    assert good.feasible and good.geometric_valid
    assert sharipov_feasible(normalize(good.s)) and geometric_valid_s(good.s)


def test_family_point_json_round_trip():
    fp = point("GEN_RAT", F(2, 3), F(1, 4))
    obj = json.loads(fp.to_line())
    assert obj["family"] == "GEN_RAT"
    assert obj["params"] == ["2/3", "1/4"]
    assert obj["s"] == fp.s.to_strings()
    assert obj["canonical"] == normalize(fp.s).to_strings()
    assert {"feasible", "geometric_valid", "degenerate"} <= obj.keys()
    assert FamilyPoint.from_json(obj) == fp


def test_family_point_rejects_non_solutions():
    with pytest.raises(ValueError, match="governing equation"):
        FamilyPoint("GEN_RAT", (), Q("1/2,1/2,1/2,1/2"))
    with pytest.raises(ValueError, match="unknown family"):
        FamilyPoint("NOPE", (), Q("1/2,1/7,1/10,7/10"))


def test_points_skips_undefined_parameters():
    got = points("P2_INT", [(1, 1), (2, 1), (0, 3), (3, 1)])
    assert [p.params for p in got] == [(2, 1), (3, 1)]


@pytest.mark.parametrize(
    "family, params",
    [("P1_SET3", (5, 2)), ("P1_INT", (4, 1)), ("P2_RAT", (F(2, 7),)), ("GEN_INT", (3, 5, 2, 7)), ("OBTUSE", (4,)), ("ACUTE", (3, 5))],
)
def test_every_family_yields_solutions(family, params):
    assert direct_residual(point(family, *params).s) == 0
