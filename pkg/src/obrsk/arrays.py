"""Two-row arrays and skew lexicographic pairs.

A skew pair is a pair of two-row arrays of equal width t:

    pi1 = (b_1 ... b_t)        pi2 = (c_1 ... c_t)
          (a_1 ... a_t)              (d_1 ... d_t)

subject to six conditions:

  (i)   pi1 is lexicographic: b weakly decreasing, ties broken by a weakly
        decreasing;
  (ii)  the transpose of pi2 is lexicographic: d weakly decreasing, ties
        broken by c weakly decreasing;
  (iii) a_i < d_{t+1-i};
  (iv)  b_i < c_{t+1-i};
  (v)   the pairing a_i ~ c_{t+1-i}, b_i ~ d_{t+1-i} (and back) is a
        well-defined strictly decreasing map on values;
  (vi)  columns and their duals have coherent signs: a_i < b_i forces
        d_{t+1-i} < c_{t+1-i} and a_i > b_i forces d_{t+1-i} > c_{t+1-i}.

The pair is negative when a_i < b_i for every i, positive when a_i > b_i.
"""

from __future__ import annotations

from dataclasses import dataclass

from .errors import InvalidPair, LengthMismatch, VanishingColumn
from .multisets import plane_multiset


@dataclass(frozen=True)
class TwoRowArray:
    top: tuple
    bottom: tuple

    def __post_init__(self):
        object.__setattr__(self, "top", tuple(self.top))
        object.__setattr__(self, "bottom", tuple(self.bottom))
        if len(self.top) != len(self.bottom):
            raise LengthMismatch(f"rows of length {len(self.top)} and {len(self.bottom)}")

    @property
    def width(self):
        return len(self.top)

    def columns(self):
        return list(zip(self.top, self.bottom))


@dataclass(frozen=True)
class SkewPair:
    pi1: TwoRowArray  # b over a
    pi2: TwoRowArray  # c over d

    def __post_init__(self):
        if not isinstance(self.pi1, TwoRowArray):
            object.__setattr__(self, "pi1", TwoRowArray(*self.pi1))
        if not isinstance(self.pi2, TwoRowArray):
            object.__setattr__(self, "pi2", TwoRowArray(*self.pi2))
        if self.pi1.width != self.pi2.width:
            raise LengthMismatch(f"pi1 width {self.pi1.width} != pi2 width {self.pi2.width}")

    @property
    def width(self):
        return self.pi1.width

    @property
    def degree(self):
        return 2 * self.width

    @property
    def b(self):
        return self.pi1.top

    @property
    def a(self):
        return self.pi1.bottom

    @property
    def c(self):
        return self.pi2.top

    @property
    def d(self):
        return self.pi2.bottom


EMPTY_PAIR = SkewPair(TwoRowArray((), ()), TwoRowArray((), ()))


def _is_lexicographic(arr):
    cols = list(zip(arr.top, arr.bottom))
    return all(x >= y for x, y in zip(cols, cols[1:]))


def validate_skew_pair(p):
    """Return a list of human-readable violations; empty means valid."""
    t = p.width
    a, b, c, d = p.a, p.b, p.c, p.d
    violations = []
    if not _is_lexicographic(p.pi1):
        violations.append("pi1 is not lexicographic")
    if not _is_lexicographic(TwoRowArray(d, c)):
        violations.append("transpose of pi2 is not lexicographic")
    for i in range(t):
        j = t - 1 - i
        if not a[i] < d[j]:
            violations.append(f"a_{i + 1} = {a[i]} not < d_{j + 1} = {d[j]}")
        if not b[i] < c[j]:
            violations.append(f"b_{i + 1} = {b[i]} not < c_{j + 1} = {c[j]}")
    # (v): value -> dual value must be a strictly decreasing map
    pairs = []
    for i in range(t):
        j = t - 1 - i
        pairs.append((a[i], c[j]))
        pairs.append((b[i], d[j]))
        pairs.append((c[i], a[j]))
        pairs.append((d[i], b[j]))
    pairs.sort()
    for (v1, d1), (v2, d2) in zip(pairs, pairs[1:]):
        if v1 == v2:
            if d1 != d2:
                violations.append(f"duality maps value {v1} to both {d1} and {d2}")
                break
        elif d1 <= d2:
            violations.append(f"duality not decreasing: {v1} -> {d1}, {v2} -> {d2}")
            break
    for i in range(t):
        j = t - 1 - i
        if a[i] < b[i] and not d[j] < c[j]:
            violations.append(f"column {i + 1} negative but dual column {j + 1} not")
        if a[i] > b[i] and not d[j] > c[j]:
            violations.append(f"column {i + 1} positive but dual column {j + 1} not")
    return violations


def is_valid_pair(p):
    return not validate_skew_pair(p)


def is_negative_pair(p):
    return all(x < y for x, y in zip(p.a, p.b)) and is_valid_pair(p)


def is_positive_pair(p):
    return all(x > y for x, y in zip(p.a, p.b)) and is_valid_pair(p)


def psi(p):
    """Forget column order: pi1 columns become points (a_i, b_i), pi2 columns
    points (d_i, c_i).  Returns the pair of plane multisets (U1, U2)."""
    u1 = plane_multiset(zip(p.a, p.b))
    u2 = plane_multiset(zip(p.d, p.c))
    return u1, u2


def psi_inv(u1, u2):
    """Rebuild the canonical skew pair: pi1 columns (b, a) sorted by b then a
    descending; pi2 columns (c, d) sorted by d then c descending."""
    if len(u1) != len(u2):
        raise LengthMismatch(f"|U1| = {len(u1)} != |U2| = {len(u2)}")
    cols1 = sorted(((b, a) for a, b in u1), key=lambda col: (-col[0], -col[1]))
    cols2 = sorted(((c, d) for d, c in u2), key=lambda col: (-col[1], -col[0]))
    return SkewPair(
        TwoRowArray(tuple(b for b, _ in cols1), tuple(a for _, a in cols1)),
        TwoRowArray(tuple(c for c, _ in cols2), tuple(d for _, d in cols2)),
    )


def L_involution(p):
    """Swap the rows of each array, then restore the canonical column orders
    (pi1 lexicographic, transpose of pi2 lexicographic).  Exchanges negative
    and positive pairs and is an involution."""
    cols1 = sorted(zip(p.a, p.b), key=lambda col: (-col[0], -col[1]))
    cols2 = sorted(zip(p.d, p.c), key=lambda col: (-col[1], -col[0]))
    return SkewPair(
        TwoRowArray(tuple(x for x, _ in cols1), tuple(y for _, y in cols1)),
        TwoRowArray(tuple(x for x, _ in cols2), tuple(y for _, y in cols2)),
    )


def split_parts(p):
    """Split a valid pair into its negative and positive parts.

    Columns of pi1 with a_i < b_i go to the negative part together with their
    dual pi2 columns (index t+1-i), order preserved; the rest, with a_i > b_i,
    form the positive part.  A column with a_i == b_i has no sign.
    """
    t = p.width
    if any(p.a[i] == p.b[i] for i in range(t)):
        raise VanishingColumn("a column with equal entries has no sign")
    if any(p.d[i] == p.c[i] for i in range(t)):
        raise VanishingColumn("a dual column with equal entries has no sign")
    neg1 = [i for i in range(t) if p.a[i] < p.b[i]]
    pos1 = [i for i in range(t) if p.a[i] > p.b[i]]
    neg2 = [j for j in range(t) if p.d[j] < p.c[j]]
    pos2 = [j for j in range(t) if p.d[j] > p.c[j]]
    if len(neg1) != len(neg2):
        raise InvalidPair("negative columns of pi1 and pi2 do not match up")

    def take(indices1, indices2):
        return SkewPair(
            TwoRowArray(tuple(p.b[i] for i in indices1), tuple(p.a[i] for i in indices1)),
            TwoRowArray(tuple(p.c[j] for j in indices2), tuple(p.d[j] for j in indices2)),
        )

    return take(neg1, neg2), take(pos1, pos2)
