from collections import Counter

import pytest

from obrsk.arrays import SkewPair, TwoRowArray, psi
from obrsk.correspondence import (
    bounded_insert,
    dual_insert,
    forward_step,
    obrsk,
    obrsk_inverse,
    obrsk_negative,
    obrsk_negative_steps,
    reverse_step,
    robrsk,
)
from obrsk.enumeration import enumerate_negative_pairs, enumerate_nonvanishing_pairs
from obrsk.errors import BoundViolation, EmptyBitableau, NotNegative
from obrsk.tableaux import (
    EMPTY_BITABLEAU,
    NotchedBitableau,
    NotchedTableau,
    SignKind,
    classify_sign,
    validate_skew_symmetric,
)


def bt(p_rows, q_rows):
    return NotchedBitableau(NotchedTableau(p_rows), NotchedTableau(q_rows))


def test_bounded_insert_bump():
    # inserting 3 bounded by 14 into (4, 12): 4 is the smallest entry >= 3
    # among those below the bound, so it is bumped into a new row
    t, path = bounded_insert(NotchedTableau([[4, 12]]), 3, 14)
    assert t.rows == ((3, 12), (4,))
    assert path.steps == ((1, 1), (2, 1))


def test_bounded_insert_respects_bound():
    # entries >= the bound are immovable: with bound 10, the 12 stays and the
    # new entry lands at the end of the prefix of entries below 10
    t, path = bounded_insert(NotchedTableau([[3, 12]]), 7, 10)
    assert t.rows == ((3, 7, 12),)
    assert path.steps == ((1, 2),)


def test_bounded_insert_cascade():
    # the bump travels downward row by row
    t, path = bounded_insert(NotchedTableau([[3, 12], [3, 12]]), 3, 14)
    assert t.rows == ((3, 12), (3, 12), (3,))
    assert path.steps == ((1, 1), (2, 1), (3, 1))


def test_bounded_insert_requires_entry_below_bound():
    with pytest.raises(BoundViolation):
        bounded_insert(NotchedTableau(()), 5, 5)


def test_dual_insert_mirror():
    # forward positions are replayed backward (from the right) on Q
    q = dual_insert(
        NotchedTableau([[17, 25]]),
        26,
        bounded_insert(NotchedTableau([[4, 12]]), 3, 14)[1],
    )
    assert q.rows == ((17, 26), (25,))


def test_forward_step_matches_fixture(worked_pair, worked_steps):
    state = EMPTY_BITABLEAU
    t = worked_pair.width
    for i in range(t):
        state = forward_step(
            state,
            worked_pair.a[i],
            worked_pair.b[i],
            worked_pair.c[t - 1 - i],
            worked_pair.d[t - 1 - i],
        )
        assert state == worked_steps[i], f"step {i + 1}"


def test_obrsk_negative_fixture(worked_pair, worked_bitableau):
    assert obrsk_negative(worked_pair) == worked_bitableau


def test_obrsk_negative_steps_fixture(worked_pair, worked_steps):
    assert tuple(obrsk_negative_steps(worked_pair)) == worked_steps


def test_obrsk_negative_rejects_positive(worked_pair):
    from obrsk.arrays import L_involution

    with pytest.raises(NotNegative):
        obrsk_negative(L_involution(worked_pair))


def test_reverse_step_fixture(worked_steps):
    smaller, a, b, c, d = reverse_step(worked_steps[4])
    assert smaller == worked_steps[3]
    assert (a, b, c, d) == (4, 9, 25, 20)
    smaller, a, b, c, d = reverse_step(worked_steps[2])
    assert smaller == worked_steps[1]
    assert (a, b, c, d) == (3, 14, 26, 15)


def test_reverse_step_empty():
    with pytest.raises(EmptyBitableau):
        reverse_step(EMPTY_BITABLEAU)


def test_robrsk_fixture(worked_pair, worked_bitableau):
    assert robrsk(worked_bitableau) == worked_pair


def test_robrsk_rejects_positive(worked_bitableau):
    from obrsk.tableaux import iota

    with pytest.raises(NotNegative):
        robrsk(iota(worked_bitableau))


def test_obrsk_general_restricts_to_negative(worked_pair, worked_bitableau):
    assert obrsk(worked_pair) == worked_bitableau


def test_obrsk_positive_pair(worked_pair, worked_bitableau):
    from obrsk.arrays import L_involution
    from obrsk.tableaux import iota

    assert obrsk(L_involution(worked_pair)) == iota(worked_bitableau)


def test_obrsk_single_positive_column():
    p = SkewPair(TwoRowArray((1,), (4,)), TwoRowArray((3,), (6,)))
    image = obrsk(p)
    assert classify_sign(image).kind is SignKind.POSITIVE
    assert obrsk_inverse(image) == p


def test_negative_bijection_exhaustive():
    # entries <= 5, width <= 2: outputs validate, round-trip, and the
    # per-degree counts of the two independently enumerated sides agree
    from obrsk.enumeration import enumerate_negative_bitableaux

    pairs = enumerate_negative_pairs(5, 2)
    bitableaux = enumerate_negative_bitableaux(5, 4)
    images = set()
    for p in pairs:
        image = obrsk(p)
        assert validate_skew_symmetric(image)
        assert classify_sign(image).kind is SignKind.NEGATIVE
        assert robrsk(image) == p
        images.add(image)
    assert Counter(p.degree for p in pairs) == Counter(b.degree for b in bitableaux)
    assert images == set(bitableaux)


def test_nonvanishing_roundtrip_exhaustive():
    for p in enumerate_nonvanishing_pairs(4, 2):
        image = obrsk(p)
        assert image.degree == p.degree
        assert obrsk_inverse(image) == p


def test_degree_preserved(worked_pair):
    assert obrsk(worked_pair).degree == worked_pair.degree == 10
