from fractions import Fraction

import pytest
from hypothesis import given, strategies as st

from brownian_areas import reference as ref, sequences as seq

INTEGER_AFTER = {"gamma": 0, "omegaStar": 1, "Dstar": 0, "eBarStar": 0, "Lstar": 0, "Qstar": 0,
                 "Wstar": 0, "DplusStar": 0, "LplusStar": 0}


@pytest.mark.parametrize("name", sorted(ref.SEQUENCES))
def test_reference_values(name):
    for n, v in ref.SEQUENCES[name].items():
        assert seq.sequence(name, n) == Fraction(v)


@pytest.mark.parametrize("name", sorted(ref.JOINT))
def test_joint_reference_values(name):
    t = ref.JOINT[name]
    for k in range(4):
        for l in range(4):
            assert seq.joint_table(name, k, l) == Fraction(t[k][l])


@pytest.mark.parametrize("name,start", sorted(INTEGER_AFTER.items()))
@given(n=st.integers(0, 60))
def test_starred_sequences_are_integers(name, start, n):
    if n >= max(start, seq.start_index(name)):
        assert Fraction(seq.sequence(name, n)).denominator == 1


def test_starred_scaling():
    for n in range(30):
        assert seq.sequence("Dstar", n) == 2 ** (3 * n) * seq.sequence("D", n)


@pytest.mark.parametrize("iid", seq.identity_ids())
def test_identity_catalogue(iid):
    res = seq.verify_identity(iid, 30)
    assert res and all(r.ok for r in res), [r for r in res if not r.ok][:3]


def test_index_errors():
    with pytest.raises(IndexError):
        seq.sequence("K", -1)
    with pytest.raises(IndexError):
        seq.sequence("K", seq.DEFAULT_CAP + 1)
    with pytest.raises(ValueError):
        seq.sequence("nope", 1)


def test_continued_fraction_depth():
    with pytest.raises(seq.InsufficientDepth):
        seq.continued_fraction_coefficients(2, 10)


@given(st.integers(0, 25), st.integers(0, 25))
def test_joint_tables_symmetric(k, l):
    for name in ("DplusMinus", "LplusMinus"):
        assert seq.joint_table(name, k, l) == seq.joint_table(name, l, k)
