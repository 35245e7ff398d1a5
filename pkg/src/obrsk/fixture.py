"""A frozen worked example of the correspondence, with every intermediate.

The pair below is negative of width 5; applying the correspondence column by
column produces the five recorded intermediate bitableaux, the last of which
is the image.  `replay` re-runs the computation and reports any mismatch, and
also checks that the inverse map recovers the pair exactly.
"""

from __future__ import annotations

from .arrays import SkewPair, TwoRowArray
from .correspondence import obrsk_negative_steps, robrsk
from .tableaux import NotchedBitableau, NotchedTableau

FIXTURE_PAIR = SkewPair(
    TwoRowArray((17, 17, 14, 10, 9), (4, 3, 3, 7, 4)),
    TwoRowArray((25, 22, 26, 26, 25), (20, 19, 15, 12, 12)),
)

FIXTURE_STEPS = (
    NotchedBitableau(NotchedTableau(((4, 12),)), NotchedTableau(((17, 25),))),
    NotchedBitableau(
        NotchedTableau(((3, 12), (4, 12))),
        NotchedTableau(((17, 26), (17, 25))),
    ),
    NotchedBitableau(
        NotchedTableau(((3, 12), (3, 12), (4, 15))),
        NotchedTableau(((17, 26), (17, 26), (14, 25))),
    ),
    NotchedBitableau(
        NotchedTableau(((3, 7, 12, 19), (3, 12), (4, 15))),
        NotchedTableau(((10, 17, 22, 26), (17, 26), (14, 25))),
    ),
    NotchedBitableau(
        NotchedTableau(((3, 4, 12, 19), (3, 7, 12, 20), (4, 15))),
        NotchedTableau(((10, 17, 25, 26), (9, 17, 22, 26), (14, 25))),
    ),
)

FIXTURE_BITABLEAU = FIXTURE_STEPS[-1]


def replay(verbose=False, report=print):
    """Re-run the worked example.  Returns True iff every intermediate and the
    round trip through the inverse map match the frozen values exactly."""
    ok = True
    for i, bit in enumerate(obrsk_negative_steps(FIXTURE_PAIR), start=1):
        expected = FIXTURE_STEPS[i - 1]
        match = bit == expected
        ok = ok and match
        if verbose or not match:
            status = "ok" if match else "MISMATCH"
            report(f"step {i}: {status}")
            report(f"  P^({i}) = {list(bit.P.rows)}")
            report(f"  Q^({i}) = {list(bit.Q.rows)}")
            if not match:
                report(f"  expected P^({i}) = {list(expected.P.rows)}")
                report(f"  expected Q^({i}) = {list(expected.Q.rows)}")
    back = robrsk(FIXTURE_BITABLEAU)
    match = back == FIXTURE_PAIR
    ok = ok and match
    if verbose or not match:
        report(f"inverse round trip: {'ok' if match else 'MISMATCH'}")
        if not match:
            report(f"  recovered {back}")
    return ok
