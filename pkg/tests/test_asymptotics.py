from fractions import Fraction as F

import pytest

from diopiped.asymptotics import acute, acute_coefficient, acute_t, obtuse, obtuse_t
from diopiped.families import DegenerateError
from diopiped.fixtures import ACUTE18, ACUTE18_T, acute18, table1
from diopiped.geometry import cos_angle, reconstruct
from diopiped.sspace import SParams, equivalent, normalize

from conftest import direct_residual


def test_obtuse_examples():
    assert obtuse(2) == SParams.parse("1/2,7/16,5/16,16/35")
    assert obtuse_t(2) == F(-81, 560) == F(5, 16) - F(16, 35)
    assert equivalent(obtuse(2), table1()[0]["s"])


@pytest.mark.parametrize("n", range(2, 51))
def test_obtuse_sequence(n):
    s = obtuse(n)
    assert direct_residual(s) == 0
    assert obtuse_t(n) == s.s3 - s.s4 < 0


def test_acute_prefactors():
    assert {d: acute_coefficient(d) for d in range(2, 20)} == acute18()
    assert len(ACUTE18) == 18
    # the t prefactors are four times the s prefactors
    assert all(F(ACUTE18_T[d]) == 4 * F(ACUTE18[d]) for d in ACUTE18)


@pytest.mark.parametrize("d", range(2, 20))
def test_acute_sequences(d):
    for n in range(2, 31):
        s = acute(d, n)
        assert s.s1 == F(1, d)
        assert direct_residual(s) == 0
        assert acute_t(d, n) == s.s3 - s.s4 > 0
        t_ref = F(ACUTE18_T[d]) * n * (n + 1) ** 2 * (n + 2) / ((n * n - 2) * (n * n + 2 * n + 2) * (n * n + 4 * n + 2))
        assert acute_t(d, n) == t_ref


def test_acute_and_obtuse_meet_at_two():
    assert equivalent(acute(2, 2), obtuse(2))


@pytest.mark.parametrize("bad", [(obtuse, (1,)), (obtuse, (0,)), (acute, (1, 5)), (acute, (3, 1)), (acute_coefficient, (1,))])
def test_degenerate_inputs(bad):
    fn, args = bad
    with pytest.raises(DegenerateError):
        fn(*args)


def test_angles_approach_their_limits():
    obt = [abs(cos_angle(reconstruct(normalize(obtuse(n))))) for n in range(3, 31)]
    assert all(a > b for a, b in zip(obt, obt[1:]))
    assert obt[-1] < F(1, 100)
    assert obtuse_t(10) < obtuse_t(100) < 0
    for d in range(2, 20):
        seq = [abs(cos_angle(reconstruct(normalize(acute(d, n))))) for n in range(3, 31)]
        assert all(a > b for a, b in zip(seq, seq[1:]))
        ts = [acute_t(d, n) for n in range(3, 31)]
        assert all(a > b > 0 for a, b in zip(ts, ts[1:]))
