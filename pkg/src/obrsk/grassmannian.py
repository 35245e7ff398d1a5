"""Admissible d-subsets, the grid attached to one, and chain combinatorics.

I(d) is the set of d-subsets of {1, ..., 2d} containing exactly one of each
pair {k, 2d+1-k} and an even number of entries above d; it is ordered
entrywise on sorted entry lists.

Fixing beta in I(d), the grid consists of the positions (r, c) with r outside
beta and c inside beta.  Writing x* = 2d+1-x, a grid position is on the
diagonal when r = c*, below it when r > c*, and otherwise it is a root:
positive when r > c and negative when r < c.  The reflection
(r, c) -> (c*, r*) exchanges roots and below-diagonal positions.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass
from enum import Enum
from functools import lru_cache

from .arrays import psi_inv
from .correspondence import obrsk
from .errors import (
    BoundsNotComparable,
    EmptyChain,
    MixedSigns,
    NotInId,
    SignAssertionFailure,
    VerificationError,
)
from .multisets import Cmp, is_chain, plane_compare, plane_multiset
from .tableaux import bitableau_bounded_by, down_of, up_of


@dataclass(frozen=True)
class IdElement:
    entries: tuple
    d: int

    def __post_init__(self):
        object.__setattr__(self, "entries", tuple(sorted(self.entries)))
        e, d = self.entries, self.d
        if len(e) != d or len(set(e)) != d:
            raise NotInId(f"{e} is not a d-subset for d = {d}")
        if any(x < 1 or x > 2 * d for x in e):
            raise NotInId(f"{e} has entries outside 1..{2 * d}")
        full = 2 * d + 1
        if any(full - x in e for x in e):
            raise NotInId(f"{e} contains a pair summing to {full}")
        if sum(1 for x in e if x > d) % 2:
            raise NotInId(f"{e} has an odd number of entries above {d}")

    @property
    def complement(self):
        mine = set(self.entries)
        return tuple(x for x in range(1, 2 * self.d + 1) if x not in mine)

    def __str__(self):
        return ",".join(str(x) for x in self.entries)


@lru_cache(maxsize=None)
def enumerate_id(d):
    """All elements of I(d) in lexicographic order of their entry lists."""
    out = []
    for picks in itertools.product(*([k, 2 * d + 1 - k] for k in range(1, d + 1))):
        if sum(1 for x in picks if x > d) % 2 == 0:
            out.append(IdElement(tuple(sorted(picks)), d))
    return tuple(sorted(out, key=lambda v: v.entries))


def id_leq(v, w):
    """Entrywise order on sorted entry lists."""
    return all(x <= y for x, y in zip(v.entries, w.entries))


class Region(Enum):
    NOT_GRID = "not-grid"
    DIAG = "diag"
    BELOW = "below"
    ROOT_NEG = "root-negative"
    ROOT_POS = "root-positive"


def region_of(v, r, c):
    """Classify the position (r, c) relative to the grid of v."""
    full = 2 * v.d + 1
    if r in v.entries or c not in v.entries or not (1 <= r <= 2 * v.d):
        return Region.NOT_GRID
    c_star = full - c
    if r == c_star:
        return Region.DIAG
    if r > c_star:
        return Region.BELOW
    return Region.ROOT_POS if r > c else Region.ROOT_NEG


def hash_reflect(point, d):
    """The reflection (r, c) -> (c*, r*); an involution exchanging roots and
    below-diagonal positions."""
    r, c = point
    full = 2 * d + 1
    return (full - c, full - r)


def roots_of(v):
    """All roots of the grid of v, sorted by (row, column)."""
    out = []
    for r in v.complement:
        for c in v.entries:
            if region_of(v, r, c) in (Region.ROOT_NEG, Region.ROOT_POS):
                out.append((r, c))
    return tuple(sorted(out))


def enumerate_extended_chains(support):
    """All nonempty chains inside a set of grid points.

    A chain is strictly increasing in rows and strictly decreasing in columns.
    """
    pts = sorted(set(support), key=lambda p: (p[0], -p[1]))
    chains = []

    def extend(prefix, start):
        for i in range(start, len(pts)):
            r, c = pts[i]
            if prefix and not (r > prefix[-1][0] and c < prefix[-1][1]):
                continue
            chains.append(tuple(prefix + [pts[i]]))
            extend(prefix + [pts[i]], i + 1)

    extend([], 0)
    return chains


class ChainSign(Enum):
    MINUS = "minus"
    PLUS = "plus"


def split_chain(chain, v):
    """Partition a chain of roots into its negative and positive parts."""
    neg, pos = [], []
    for p in chain:
        reg = region_of(v, *p)
        if reg is Region.ROOT_NEG:
            neg.append(p)
        elif reg is Region.ROOT_POS:
            pos.append(p)
        else:
            raise MixedSigns(f"{p} is not a root of the grid of {v}")
    return tuple(neg), tuple(pos)


def chain_pair(chain, d):
    """The pair of plane multisets (C, C^#) built from a sign-pure chain."""
    if not chain:
        raise EmptyChain("a chain pair needs at least one point")
    if not is_chain(chain):
        raise MixedSigns(f"{chain} is not a chain")
    signs = {r < c for r, c in chain}
    if len(signs) != 1:
        raise MixedSigns(f"{chain} mixes positive and negative points")
    u1 = plane_multiset(chain)
    u2 = plane_multiset(hash_reflect(p, d) for p in chain)
    return u1, u2


def chain_image(chain, d):
    """The bitableau image of the canonical skew pair of (C, C^#)."""
    u1, u2 = chain_pair(chain, d)
    return obrsk(psi_inv(u1, u2))


@lru_cache(maxsize=None)
def _w_of_chain_cached(chain, beta, sign):
    bit = chain_image(chain, beta.d)
    pairs = up_of(bit) if sign is ChainSign.MINUS else down_of(bit)
    firsts = [x for x, _ in pairs]
    seconds = [y for _, y in pairs]
    entries = set(beta.entries)
    for y in seconds:
        if y not in entries:
            raise VerificationError(f"second coordinate {y} not in beta = {beta.entries}")
        entries.remove(y)
    entries.update(firsts)
    w = IdElement(tuple(sorted(entries)), beta.d)
    if sign is ChainSign.MINUS and not id_leq(w, beta):
        raise SignAssertionFailure(f"w = {w.entries} not <= beta = {beta.entries}")
    if sign is ChainSign.PLUS and not id_leq(beta, w):
        raise SignAssertionFailure(f"w = {w.entries} not >= beta = {beta.entries}")
    return w


def w_of_chain(chain, beta, sign):
    """The element of I(d) attached to a sign-pure chain on the grid of beta.

    For a negative chain the up set of the chain image is used, for a
    positive one the down set; the second coordinates are removed from beta
    and the first coordinates put in.
    """
    return _w_of_chain_cached(tuple(sorted(chain)), beta, sign)


def t_w_bounds(alpha, beta, gamma):
    """The bound pair (T, W) of the triple alpha <= beta <= gamma.

    T pairs the i-th smallest element of alpha - beta with the i-th smallest
    of beta - alpha (a negative plane set); W does the same with gamma and is
    positive.
    """
    if not (id_leq(alpha, beta) and id_leq(beta, gamma)):
        raise BoundsNotComparable(
            f"need alpha <= beta <= gamma, got {alpha.entries}, {beta.entries}, {gamma.entries}"
        )
    aset, bset, gset = set(alpha.entries), set(beta.entries), set(gamma.entries)
    t = plane_multiset(zip(sorted(aset - bset), sorted(bset - aset)))
    w = plane_multiset(zip(sorted(gset - bset), sorted(bset - gset)))
    if any(x >= y for x, y in t):
        raise SignAssertionFailure(f"T = {t} is not negative")
    if any(x <= y for x, y in w):
        raise SignAssertionFailure(f"W = {w} is not positive")
    return t, w


def chain_in_chains_set(chain, alpha, beta, gamma):
    """Membership of a chain in the defining set of the chain ideal: the
    negative part fails alpha <= w, or the positive part fails w <= gamma."""
    neg, pos = split_chain(chain, beta)
    if neg and not id_leq(alpha, w_of_chain(neg, beta, ChainSign.MINUS)):
        return True
    if pos and not id_leq(w_of_chain(pos, beta, ChainSign.PLUS), gamma):
        return True
    return False


def _quotient_by_chains(u, alpha, beta, gamma):
    for chain in enumerate_extended_chains(u):
        if chain_in_chains_set(chain, alpha, beta, gamma):
            return False
    return True


def _quotient_by_bounds(u, alpha, beta, gamma):
    t, w = t_w_bounds(alpha, beta, gamma)
    for chain in enumerate_extended_chains(u):
        neg, pos = split_chain(chain, beta)
        if neg:
            up = up_of(chain_image(neg, beta.d))
            if plane_compare(t, up) not in (Cmp.LESS, Cmp.EQUAL):
                return False
        if pos:
            down = down_of(chain_image(pos, beta.d))
            if plane_compare(down, w) not in (Cmp.LESS, Cmp.EQUAL):
                return False
    return True


def is_quotient_monomial(u, alpha, beta, gamma):
    """True iff the root multiset u supports no chain of the defining set.

    Computed twice: directly through w_of_chain comparisons, and through the
    boundedness test against (T, W).  The two routes must agree.
    """
    via_chains = _quotient_by_chains(set(u), alpha, beta, gamma)
    via_bounds = _quotient_by_bounds(set(u), alpha, beta, gamma)
    if via_chains != via_bounds:
        raise VerificationError(
            f"quotient-monomial routes disagree on {sorted(set(u))} for "
            f"({alpha.entries}, {beta.entries}, {gamma.entries})"
        )
    return via_chains


__all__ = [
    "ChainSign",
    "IdElement",
    "Region",
    "bitableau_bounded_by",
    "chain_image",
    "chain_in_chains_set",
    "chain_pair",
    "enumerate_extended_chains",
    "enumerate_id",
    "hash_reflect",
    "id_leq",
    "is_quotient_monomial",
    "region_of",
    "roots_of",
    "split_chain",
    "t_w_bounds",
    "w_of_chain",
]
