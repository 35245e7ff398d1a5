import pytest

from obrsk.arrays import (
    EMPTY_PAIR,
    L_involution,
    SkewPair,
    TwoRowArray,
    is_negative_pair,
    is_positive_pair,
    psi,
    psi_inv,
    split_parts,
    validate_skew_pair,
)
from obrsk.enumeration import enumerate_negative_pairs, enumerate_nonvanishing_pairs
from obrsk.errors import LengthMismatch, VanishingColumn


def test_width_mismatch():
    with pytest.raises(LengthMismatch):
        TwoRowArray((1, 2), (3,))
    with pytest.raises(LengthMismatch):
        SkewPair(TwoRowArray((5,), (1,)), TwoRowArray((), ()))


def test_fixture_is_valid_negative(worked_pair):
    assert validate_skew_pair(worked_pair) == []
    assert is_negative_pair(worked_pair)
    assert worked_pair.degree == 10


def test_fixture_perturbations_are_invalid(worked_pair):
    # a_1 raised to 13 breaks a_i < d_{t+1-i} at i = 1 (13 >= 12)
    bad = SkewPair(
        TwoRowArray(worked_pair.b, (13,) + worked_pair.a[1:]),
        worked_pair.pi2,
    )
    assert any("a_1" in v for v in validate_skew_pair(bad))
    # swapping the first two columns of pi1 breaks lexicographic order
    bad = SkewPair(
        TwoRowArray((17, 17, 14, 10, 9), (3, 4, 3, 7, 4)),
        worked_pair.pi2,
    )
    assert any("lexicographic" in v for v in validate_skew_pair(bad))


def test_psi_fixture(worked_pair):
    u1, u2 = psi(worked_pair)
    assert u1 == ((3, 14), (3, 17), (4, 9), (4, 17), (7, 10))
    assert u2 == ((12, 25), (12, 26), (15, 26), (19, 22), (20, 25))
    assert psi_inv(u1, u2) == worked_pair


def test_psi_roundtrip_small():
    for p in enumerate_nonvanishing_pairs(4, 2):
        assert psi_inv(*psi(p)) == p


def test_L_fixture(worked_pair):
    flipped = L_involution(worked_pair)
    assert is_positive_pair(flipped)
    assert flipped.pi1.top == (7, 4, 4, 3, 3)
    assert flipped.pi1.bottom == (10, 17, 9, 17, 14)
    assert L_involution(flipped) == worked_pair


def test_L_is_involution_and_sign_swapping():
    negatives = enumerate_negative_pairs(5, 2)
    images = set()
    for p in negatives:
        q = L_involution(p)
        assert is_positive_pair(q), p
        assert L_involution(q) == p
        images.add(q)
    assert len(images) == len(negatives)


def test_split_parts_fixture(worked_pair):
    neg, pos = split_parts(worked_pair)
    assert neg == worked_pair
    assert pos == EMPTY_PAIR


def test_split_parts_mixed():
    # one negative and one positive column; duals pair up across the mirror
    p = SkewPair(TwoRowArray((4, 1), (1, 4)), TwoRowArray((5, 6), (6, 5)))
    assert validate_skew_pair(p) == []
    neg, pos = split_parts(p)
    assert neg == SkewPair(TwoRowArray((4,), (1,)), TwoRowArray((6,), (5,)))
    assert pos == SkewPair(TwoRowArray((1,), (4,)), TwoRowArray((5,), (6,)))


def test_split_parts_vanishing_column():
    with pytest.raises(VanishingColumn):
        split_parts(SkewPair(TwoRowArray((2,), (2,)), TwoRowArray((5,), (5,))))
