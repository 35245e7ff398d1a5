"""The bounded insertion correspondence between skew pairs and bitableaux.

One forward step consumes a column (a, b) of pi1 together with its dual
column (c, d) of pi2.  The entry a is inserted into P bounded by b: within a
row only the entries below b may be bumped, and the bumped entry is the
smallest one >= a among them; if none exists, a lands at the end of that
prefix and the chain stops.  The mirror image of the bumping path is replayed
on Q from the right with c.  Finally d is appended to the terminal row of P
and b is prefixed to the terminal row of Q.

Positions inside a row are recorded as forward positions (1-based from the
left); on Q they are used backward (1-based from the right).
"""

from __future__ import annotations

import bisect
from dataclasses import dataclass

from .arrays import (
    EMPTY_PAIR,
    SkewPair,
    TwoRowArray,
    is_negative_pair,
    psi,
    psi_inv,
    split_parts,
    validate_skew_pair,
    L_involution,
)
from .errors import BoundViolation, EmptyBitableau, InvalidPair, NotNegative, PathShapeMismatch
from .multisets import Cmp, is_chain, plane_compare
from .tableaux import (
    EMPTY_BITABLEAU,
    NotchedBitableau,
    NotchedTableau,
    SignKind,
    classify_sign,
    down_of,
    iota,
    up_of,
)


@dataclass(frozen=True)
class InsertionPath:
    """Forward positions (row, position), one per visited row, top to bottom.
    The last step is the row where the bumping chain terminated."""

    steps: tuple

    @property
    def terminal_row(self):
        return self.steps[-1][0]

    @property
    def terminal_position(self):
        return self.steps[-1][1]


def bounded_insert(p, a, b):
    """Insert a into P bounded by b.  Returns (new tableau, InsertionPath)."""
    if a >= b:
        raise BoundViolation(f"entry {a} must be below its bound {b}")
    rows = [list(r) for r in p.rows]
    x = a
    steps = []
    r = 0
    while True:
        if r == len(rows):
            rows.append([])
        row = rows[r]
        prefix = bisect.bisect_left(row, b)  # entries < b form a prefix
        i = bisect.bisect_left(row, x)
        if i < prefix:
            steps.append((r + 1, i + 1))
            x, row[i] = row[i], x
            r += 1
        else:
            row.insert(prefix, x)
            steps.append((r + 1, prefix + 1))
            return NotchedTableau(rows), InsertionPath(tuple(steps))


def dual_insert(q, c, path):
    """Replay an insertion path on Q from the right with the entry c.

    At each non-terminal step (r, j) the backward j-th entry of row r is
    swapped out and carried downward; at the terminal step the carried entry
    is inserted at the backward terminal position, shifting the entries to
    its right one place.
    """
    rows = [list(r) for r in q.rows]
    x = c
    for r, j in path.steps[:-1]:
        if r > len(rows) or j > len(rows[r - 1]):
            raise PathShapeMismatch(f"step ({r}, {j}) does not fit shape {q.shape}")
        row = rows[r - 1]
        idx = len(row) - j
        x, row[idx] = row[idx], x
    r, j = path.steps[-1]
    if r > len(rows) + 1:
        raise PathShapeMismatch(f"terminal row {r} does not fit shape {q.shape}")
    if r == len(rows) + 1:
        rows.append([])
    row = rows[r - 1]
    if j > len(row) + 1:
        raise PathShapeMismatch(f"terminal position {j} does not fit row of length {len(row)}")
    row.insert(len(row) - j + 1, x)
    return NotchedTableau(rows)


def forward_step(bit, a, b, c, d):
    """One step of the correspondence: insert (a, b) into P, mirror with c on
    Q, then append d to the terminal row of P and prefix b to that row of Q."""
    new_p, path = bounded_insert(bit.P, a, b)
    new_q = dual_insert(bit.Q, c, path)
    k = path.terminal_row
    prows = [list(r) for r in new_p.rows]
    qrows = [list(r) for r in new_q.rows]
    prows[k - 1].append(d)
    qrows[k - 1].insert(0, b)
    return NotchedBitableau(NotchedTableau(prows), NotchedTableau(qrows))


def obrsk_negative(p, check=True):
    """Apply the correspondence to a negative skew pair."""
    if check and not is_negative_pair(p):
        raise NotNegative(f"not a negative skew pair: {validate_skew_pair(p) or 'has a non-negative column'}")
    bit = EMPTY_BITABLEAU
    for bit in obrsk_negative_steps(p):
        pass
    return bit


def obrsk_negative_steps(p):
    """Yield the intermediate bitableaux of obrsk_negative, one per column."""
    t = p.width
    bit = EMPTY_BITABLEAU
    for i in range(t):
        bit = forward_step(bit, p.a[i], p.b[i], p.c[t - 1 - i], p.d[t - 1 - i])
        yield bit


def reverse_step(bit):
    """Undo one forward step.  Returns (smaller bitableau, a, b, c, d)."""
    if bit.is_empty:
        raise EmptyBitableau("nothing to reverse")
    prows = [list(r) for r in bit.P.rows]
    qrows = [list(r) for r in bit.Q.rows]
    b = min(e for row in qrows for e in row)
    s = max(i for i, row in enumerate(qrows) if b in row)
    d = prows[s].pop()
    qrows[s].remove(b)
    # the newest box of row s holds the greatest entry below b; it rises
    row = prows[s]
    idx = bisect.bisect_left(row, b) - 1
    if idx < 0:
        raise PathShapeMismatch(f"row {s + 1} has no entry below the bound {b}")
    x = row.pop(idx)
    positions = [idx + 1]
    for r in range(s - 1, -1, -1):
        row = prows[r]
        i = bisect.bisect_right(row, x) - 1
        if i < 0 or row[i] >= b:
            raise PathShapeMismatch(f"no entry <= {x} below the bound {b} in row {r + 1}")
        x, row[i] = row[i], x
        positions.append(i + 1)
    a = x
    # mirror on Q, bottom-up: extract at the backward terminal position, then
    # swap upward at the recorded backward positions
    positions.reverse()  # now indexed top row first, like the forward path
    row = qrows[s]
    y = row.pop(len(row) - positions[-1])
    for r in range(s - 1, -1, -1):
        row = qrows[r]
        idx = len(row) - positions[r]
        y, row[idx] = row[idx], y
    c = y
    while prows and not prows[-1]:
        prows.pop()
        qrows.pop()
    return NotchedBitableau(NotchedTableau(prows), NotchedTableau(qrows)), a, b, c, d


def robrsk(bit, check=True):
    """Invert the correspondence on a negative skew-symmetric bitableau."""
    if check:
        cls = classify_sign(bit)
        if not bit.is_empty and cls.kind is not SignKind.NEGATIVE:
            raise NotNegative(f"bitableau is {cls.kind.value}, not negative")
    cols1 = []  # (b, a), collected last column first
    cols2 = []  # (c, d), collected first column first
    while not bit.is_empty:
        bit, a, b, c, d = reverse_step(bit)
        cols1.append((b, a))
        cols2.append((c, d))
    cols1.reverse()
    return SkewPair(
        TwoRowArray(tuple(b for b, _ in cols1), tuple(a for _, a in cols1)),
        TwoRowArray(tuple(c for c, _ in cols2), tuple(d for _, d in cols2)),
    )


def obrsk(p, check=True):
    """The correspondence on an arbitrary valid skew pair.

    The negative part maps directly; the positive part maps through the two
    involutions (iota after the correspondence after L); the image stacks the
    negative block on top of the positive block.
    """
    if check:
        violations = validate_skew_pair(p)
        if violations:
            raise InvalidPair("; ".join(violations))
    neg, pos = split_parts(p)
    neg_bit = obrsk_negative(neg, check=False)
    if pos.width:
        pos_bit = iota(obrsk_negative(L_involution(pos), check=False))
    else:
        pos_bit = EMPTY_BITABLEAU
    return NotchedBitableau(
        NotchedTableau(neg_bit.P.rows + pos_bit.P.rows),
        NotchedTableau(neg_bit.Q.rows + pos_bit.Q.rows),
    )


def obrsk_inverse(bit):
    """Invert the correspondence on a nonvanishing skew-symmetric bitableau."""
    cls = classify_sign(bit)
    if cls.kind is SignKind.VANISHING:
        raise NotNegative("only nonvanishing bitableaux are in the image")
    neg_pair = robrsk(cls.negative_part, check=False)
    if cls.positive_part.is_empty:
        pos_pair = EMPTY_PAIR
    else:
        pos_pair = L_involution(robrsk(iota(cls.positive_part), check=False))
    u1 = psi(neg_pair)[0] + psi(pos_pair)[0]
    u2 = psi(neg_pair)[1] + psi(pos_pair)[1]
    return psi_inv(tuple(sorted(u1)), tuple(sorted(u2)))


# -- boundedness of pairs ----------------------------------------------------


def dual_chain_pairs(u1, u2):
    """All dual pairs of chains inside the pair of plane multisets (U1, U2).

    A chain C1 in the underlying set of U1 determines its partner: the i-th
    column of the canonical array of C1 matches the first identical column of
    the canonical array of U1, and the dual column of U2 (mirror index) is
    placed at the mirror position of the partner array.  The pair qualifies
    when the two arrays form a valid skew pair.
    """
    full = psi_inv(u1, u2)
    t = full.width
    cols1 = full.pi1.columns()  # (b, a)
    cols2 = full.pi2.columns()  # (c, d)
    support = sorted(set(u1))
    out = []
    for mask in range(1, 1 << len(support)):
        c1 = [support[i] for i in range(len(support)) if mask >> i & 1]
        if not is_chain(c1):
            continue
        sub1 = sorted(((b, a) for a, b in c1), key=lambda col: (-col[0], -col[1]))
        m = len(sub1)
        sub2 = [None] * m
        ok = True
        for i, col in enumerate(sub1):
            try:
                i_min = cols1.index(col)
            except ValueError:
                ok = False
                break
            sub2[m - 1 - i] = cols2[t - 1 - i_min]
        if not ok:
            continue
        cand = SkewPair(
            TwoRowArray(tuple(b for b, _ in sub1), tuple(a for _, a in sub1)),
            TwoRowArray(tuple(c for c, _ in sub2), tuple(d for _, d in sub2)),
        )
        if not validate_skew_pair(cand):
            out.append(cand)
    return out


def pair_up_down_sets(u1, u2):
    """For each dual pair of chains in (U1, U2): the up set of the image of
    its negative part and the down set of the image of its positive part."""
    ups, downs = [], []
    for cand in dual_chain_pairs(u1, u2):
        neg, pos = split_parts(cand)
        if neg.width:
            ups.append(up_of(obrsk_negative(neg, check=False)))
        if pos.width:
            downs.append(down_of(iota(obrsk_negative(L_involution(pos), check=False))))
    return ups, downs


def pair_bounded_by(p, t, w):
    """True iff every dual pair of chains inside psi(p) satisfies
    T <= up(image of negative part) and down(image of positive part) <= W."""
    u1, u2 = psi(p)
    ups, downs = pair_up_down_sets(u1, u2)
    for up in ups:
        if plane_compare(t, up) not in (Cmp.LESS, Cmp.EQUAL):
            return False
    for down in downs:
        if plane_compare(down, w) not in (Cmp.LESS, Cmp.EQUAL):
            return False
    return True
