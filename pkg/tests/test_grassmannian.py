import itertools

import pytest

from obrsk.errors import BoundsNotComparable, MixedSigns, NotInId
from obrsk.grassmannian import (
    ChainSign,
    IdElement,
    Region,
    chain_image,
    chain_in_chains_set,
    chain_pair,
    enumerate_extended_chains,
    enumerate_id,
    hash_reflect,
    id_leq,
    is_quotient_monomial,
    region_of,
    roots_of,
    split_chain,
    t_w_bounds,
    w_of_chain,
)
from obrsk.multisets import FormalDiff, Cmp, diff_compare


def ide(entries, d):
    return IdElement(tuple(entries), d)


def test_id_membership():
    ide((3, 4), 2)
    ide((1, 2), 2)
    with pytest.raises(NotInId):
        ide((1, 4), 2)  # 1 and 4 are partners
    with pytest.raises(NotInId):
        ide((1, 3), 2)  # odd number of entries above d
    with pytest.raises(NotInId):
        ide((2, 2), 2)


def test_enumerate_id_small():
    assert [v.entries for v in enumerate_id(2)] == [(1, 2), (3, 4)]
    assert [v.entries for v in enumerate_id(3)] == [(1, 2, 3), (1, 4, 5), (2, 4, 6), (3, 5, 6)]
    assert len(enumerate_id(4)) == 8
    assert len(enumerate_id(5)) == 16


def test_id_leq():
    assert id_leq(ide((1, 2, 3), 3), ide((1, 4, 5), 3))
    assert not id_leq(ide((1, 4, 5), 3), ide((1, 2, 3), 3))


def test_id3_is_totally_ordered():
    for v, w in itertools.combinations(enumerate_id(3), 2):
        assert id_leq(v, w) or id_leq(w, v)


def test_id4_has_incomparable_elements():
    v, w = ide((1, 4, 6, 7), 4), ide((2, 3, 5, 8), 4)
    assert not id_leq(v, w) and not id_leq(w, v)


def test_order_matches_counting_order_on_differences():
    # theta <-> (theta - beta, beta - theta); entrywise order on I(d) is the
    # counting order on the corresponding formal differences
    for d in (2, 3, 4):
        for beta in enumerate_id(d):
            bset = set(beta.entries)
            for v, w in itertools.product(enumerate_id(d), repeat=2):
                dv = FormalDiff(tuple(set(v.entries) - bset), tuple(bset - set(v.entries)))
                dw = FormalDiff(tuple(set(w.entries) - bset), tuple(bset - set(w.entries)))
                assert id_leq(v, w) == (diff_compare(dv, dw) in (Cmp.LESS, Cmp.EQUAL))


def test_region_of_matches_patch_matrix():
    # d = 5, v = (1,3,4,6,9): classifications agree with the explicit matrix
    v = ide((1, 3, 4, 6, 9), 5)
    assert region_of(v, 2, 1) is Region.ROOT_POS
    assert region_of(v, 2, 3) is Region.ROOT_NEG
    assert region_of(v, 5, 6) is Region.DIAG  # 5 = 11 - 6
    assert region_of(v, 7, 6) is Region.BELOW
    assert region_of(v, 3, 3) is Region.NOT_GRID  # row inside v
    assert region_of(v, 2, 2) is Region.NOT_GRID  # column outside v


def test_roots_d2():
    assert roots_of(ide((3, 4), 2)) == ((1, 3),)
    assert roots_of(ide((1, 2), 2)) == ((3, 1),)


def test_hash_reflect():
    assert hash_reflect((1, 3), 2) == (2, 4)
    v = ide((1, 3, 4, 6, 9), 5)
    for p in roots_of(v):
        q = hash_reflect(p, 5)
        assert region_of(v, *q) is Region.BELOW
        assert hash_reflect(q, 5) == p


def test_enumerate_extended_chains():
    support = ((1, 6), (2, 5), (2, 3), (4, 3))
    chains = enumerate_extended_chains(support)
    assert ((1, 6),) in chains
    assert ((1, 6), (2, 5), (4, 3)) in chains
    assert ((2, 5), (2, 3)) not in chains  # same row
    assert all(len(set(c)) == len(c) for c in chains)
    # each chain strictly increases in rows and decreases in columns
    for c in chains:
        assert all(r1 < r2 and c1 > c2 for (r1, c1), (r2, c2) in zip(c, c[1:]))


def test_split_chain():
    beta = ide((1, 3, 4, 6, 9), 5)
    neg, pos = split_chain(((2, 3), (5, 1)), beta)
    assert neg == ((2, 3),)
    assert pos == ((5, 1),)
    with pytest.raises(MixedSigns):
        split_chain(((5, 6),), beta)  # diagonal point is not a root


def test_chain_pair_d2():
    u1, u2 = chain_pair(((1, 3),), 2)
    assert u1 == ((1, 3),)
    assert u2 == ((2, 4),)
    with pytest.raises(MixedSigns):
        chain_pair(((1, 3), (3, 1)), 2)  # not a chain (mixed, not monotone)


def test_chain_image_d2():
    image = chain_image(((1, 3),), 2)
    assert image.P.rows == ((1, 2),)
    assert image.Q.rows == ((3, 4),)


def test_w_of_chain_d2():
    beta = ide((3, 4), 2)
    w = w_of_chain(((1, 3),), beta, ChainSign.MINUS)
    assert w.entries == (1, 2)


def test_w_of_chain_d3_positive():
    beta = ide((1, 2, 3), 3)
    w = w_of_chain(((4, 1),), beta, ChainSign.PLUS)
    assert w.entries == (2, 4, 6)
    assert id_leq(beta, w)


def test_t_w_bounds():
    d = 3
    alpha, beta, gamma = ide((1, 2, 3), 3), ide((1, 4, 5), 3), ide((3, 5, 6), 3)
    t, w = t_w_bounds(alpha, beta, gamma)
    assert t == ((2, 4), (3, 5))
    assert w == ((3, 1), (6, 4))
    with pytest.raises(BoundsNotComparable):
        t_w_bounds(beta, alpha, gamma)


def test_chain_in_chains_set_d2():
    alpha = beta = gamma = ide((3, 4), 2)
    assert chain_in_chains_set(((1, 3),), alpha, beta, gamma)
    alpha = ide((1, 2), 2)
    assert not chain_in_chains_set(((1, 3),), alpha, beta, gamma)


def test_is_quotient_monomial_d2():
    beta = gamma = ide((3, 4), 2)
    alpha = ide((1, 2), 2)
    assert is_quotient_monomial(((1, 3), (1, 3)), alpha, beta, gamma)
    assert is_quotient_monomial((), alpha, beta, gamma)
    assert not is_quotient_monomial(((1, 3),), beta, beta, gamma)


def test_quotient_routes_agree_d3():
    # both computation routes inside is_quotient_monomial must agree; the
    # call itself raises if they ever disagree
    for beta in enumerate_id(3):
        roots = roots_of(beta)
        elements = enumerate_id(3)
        for alpha in elements:
            if not id_leq(alpha, beta):
                continue
            for gamma in elements:
                if not id_leq(beta, gamma):
                    continue
                for k in range(0, 3):
                    for u in itertools.combinations_with_replacement(roots, k):
                        is_quotient_monomial(u, alpha, beta, gamma)
