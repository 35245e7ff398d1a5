"""Pfaffian generators, degreewise initial monomials, and the main check.

Fix a triple alpha <= beta <= gamma in I(d).  The ideal is generated by the
Pfaffians f(theta) over all theta in I(d) failing alpha <= theta or
theta <= gamma.  The main check confirms, degree by degree, that the leading
monomials of the ideal are exactly the root monomials covering a chain of the
defining set, and that the standard monomials (products of Pfaffians indexed
by multichains through the interval) complement the ideal slice exactly.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass, field
from enum import Enum
from fractions import Fraction
from math import comb

from .errors import ColumnNotInBeta, DimensionMismatch, OddSize, VerificationError
from .grassmannian import Region, enumerate_id, id_leq, is_quotient_monomial, region_of
from .polynomials import SparsePoly, TermOrder


class EntryKind(Enum):
    UNIT = "unit"
    OFFUNIT = "offunit"
    ZERO = "zero"
    VAR = "var"
    NEGVAR = "negvar"


@dataclass(frozen=True)
class PatchEntry:
    kind: EntryKind
    root: tuple | None = None  # the variable, for VAR / NEGVAR


def patch_entry(beta, r, c):
    """Entry (r, c) of the patch matrix of beta.

    Rows indexed by 1..2d; columns only by beta.  Rows inside beta carry the
    identity; a row r outside beta carries the variable X(r, c) left of the
    antidiagonal, 0 on it, and minus the reflected variable below it.
    """
    if c not in beta.entries:
        raise ColumnNotInBeta(f"column {c} is not in beta = {beta.entries}")
    if not (1 <= r <= 2 * beta.d):
        raise DimensionMismatch(f"row {r} outside 1..{2 * beta.d}")
    if r in beta.entries:
        return PatchEntry(EntryKind.UNIT if r == c else EntryKind.OFFUNIT)
    reg = region_of(beta, r, c)
    if reg is Region.DIAG:
        return PatchEntry(EntryKind.ZERO)
    if reg is Region.BELOW:
        full = 2 * beta.d + 1
        return PatchEntry(EntryKind.NEGVAR, (full - c, full - r))
    return PatchEntry(EntryKind.VAR, (r, c))


def _entry_poly(order, r, c):
    beta = order.beta
    e = patch_entry(beta, r, c)
    if e.kind is EntryKind.UNIT:
        return SparsePoly.constant(order, 1)
    if e.kind in (EntryKind.OFFUNIT, EntryKind.ZERO):
        return SparsePoly.zero(order)
    sign = 1 if e.kind is EntryKind.VAR else -1
    return SparsePoly.variable(order, e.root, sign)


def pfaffian(a):
    """Combinatorial Pfaffian of a skew-symmetric matrix of polynomials,
    expanded along the first row."""
    n = len(a)
    if n == 0:
        raise OddSize("empty matrix: use the constant 1 directly")
    order = a[0][0].order
    if n % 2:
        raise OddSize(f"Pfaffian of odd size {n}")

    def rec(indices):
        if not indices:
            return SparsePoly.constant(order, 1)
        i0 = indices[0]
        total = SparsePoly.zero(order)
        for pos in range(1, len(indices)):
            j = indices[pos]
            entry = a[i0][j]
            if entry.is_zero:
                continue
            rest = indices[1:pos] + indices[pos + 1:]
            sign = 1 if pos % 2 else -1
            total = total + sign * (entry * rec(rest))
        return total

    return rec(tuple(range(n)))


def determinant(a, order):
    """Leibniz determinant of a square matrix of polynomials (small sizes)."""
    n = len(a)
    total = SparsePoly.zero(order)
    for perm in itertools.permutations(range(n)):
        sign = 1
        seen = [False] * n
        for i in range(n):
            if seen[i]:
                continue
            j, length = i, 0
            while not seen[j]:
                seen[j] = True
                j = perm[j]
                length += 1
            if length % 2 == 0:
                sign = -sign
        prod = SparsePoly.constant(order, sign)
        for i in range(n):
            prod = prod * a[i][perm[i]]
            if prod.is_zero:
                break
        total = total + prod
    return total


def pfaffian_matrix(theta, beta, order):
    """The skew-symmetric matrix of the pair (theta, beta): rows theta - beta
    ascending, columns beta - theta ascending reversed, read off the patch."""
    rows = sorted(set(theta.entries) - set(beta.entries))
    cols = sorted(set(beta.entries) - set(theta.entries))
    n = len(rows)
    if n != len(cols):
        raise DimensionMismatch(f"{len(rows)} rows vs {len(cols)} columns")
    if n % 2:
        raise OddSize(f"odd difference size {n} for theta, beta in I(d)")
    a = [[_entry_poly(order, rows[i], cols[n - 1 - j]) for j in range(n)] for i in range(n)]
    for i in range(n):
        if not a[i][i].is_zero:
            raise VerificationError(f"diagonal entry ({rows[i]}, {cols[n - 1 - i]}) not zero")
        for j in range(i + 1, n):
            if not (a[i][j] + a[j][i]).is_zero:
                raise VerificationError(f"matrix not skew-symmetric at ({i}, {j})")
    return a


def pfaffian_generator(theta, beta, order=None):
    """The Pfaffian polynomial f(theta) attached to theta relative to beta."""
    if order is None:
        order = TermOrder(beta)
    if theta.entries == beta.entries:
        return SparsePoly.constant(order, 1)
    a = pfaffian_matrix(theta, beta, order)
    return pfaffian(a)


def beta_degree(theta, beta):
    """Half the size of beta - theta; the degree of f(theta)."""
    return len(set(beta.entries) - set(theta.entries)) // 2


def generators(alpha, beta, gamma, order=None):
    """The Pfaffians f(theta) over theta in I(d) with alpha not <= theta or
    theta not <= gamma; returned as (theta, polynomial) pairs."""
    if order is None:
        order = TermOrder(beta)
    out = []
    for theta in enumerate_id(beta.d):
        if not (id_leq(alpha, theta) and id_leq(theta, gamma)):
            out.append((theta, pfaffian_generator(theta, beta, order)))
    return out


# -- exact linear algebra on degree slices -----------------------------------


def monomials_of_degree(nvars, m):
    """All exponent tuples of total degree m."""
    if nvars == 0:
        return [()] if m == 0 else []
    out = []
    for cuts in itertools.combinations(range(m + nvars - 1), nvars - 1):
        prev = -1
        exps = []
        for cut in cuts:
            exps.append(cut - prev - 1)
            prev = cut
        exps.append(m + nvars - 2 - prev)
        out.append(tuple(exps))
    return out


def _rref(rows):
    """In-place reduced row echelon form over the rationals.
    Returns the list of pivot column indices."""
    pivots = []
    r = 0
    ncols = len(rows[0]) if rows else 0
    for col in range(ncols):
        pivot_row = next((i for i in range(r, len(rows)) if rows[i][col] != 0), None)
        if pivot_row is None:
            continue
        rows[r], rows[pivot_row] = rows[pivot_row], rows[r]
        inv = Fraction(1) / rows[r][col]
        rows[r] = [x * inv for x in rows[r]]
        for i in range(len(rows)):
            if i != r and rows[i][col] != 0:
                factor = rows[i][col]
                rows[i] = [x - factor * y for x, y in zip(rows[i], rows[r])]
        pivots.append(col)
        r += 1
        if r == len(rows):
            break
    del rows[r:]
    return pivots


class DegreeSlice:
    """The degree-m piece of the ideal, row reduced against the monomial
    basis sorted greatest first."""

    def __init__(self, gens, m, order):
        self.order = order
        self.m = m
        self.monos = sorted(monomials_of_degree(order.nvars, m), key=order.mono_key, reverse=True)
        self.col = {mono: i for i, mono in enumerate(self.monos)}
        rows = []
        for _, g in gens:
            if g.is_zero:
                continue
            dg = g.degree()
            if dg > m:
                continue
            for mult in monomials_of_degree(order.nvars, m - dg):
                vec = [Fraction(0)] * len(self.monos)
                for mono, coeff in g.terms:
                    vec[self.col[tuple(x + y for x, y in zip(mono, mult))]] += coeff
                rows.append(vec)
        self.rows = rows
        self.pivots = _rref(self.rows)

    @property
    def dim(self):
        return len(self.pivots)

    @property
    def total(self):
        return comb(self.order.nvars + self.m - 1, self.m) if self.order.nvars else (1 if self.m == 0 else 0)

    def initial_monomials(self):
        return {self.monos[j] for j in self.pivots}

    def vector_of(self, poly):
        vec = [Fraction(0)] * len(self.monos)
        for mono, coeff in poly.terms:
            if sum(mono) != self.m:
                raise DimensionMismatch(f"monomial of degree {sum(mono)} in a degree-{self.m} slice")
            vec[self.col[mono]] += coeff
        return vec

    def rank_with(self, polys):
        """Rank of the slice extended by the given degree-m polynomials."""
        rows = [list(r) for r in self.rows] + [self.vector_of(p) for p in polys]
        return len(_rref(rows))


def initial_monomials_degree(gens, m, order):
    """Leading monomials of the degree-m slice of the ideal."""
    return DegreeSlice(gens, m, order).initial_monomials()


def chains_monomials_degree(alpha, beta, gamma, m, order=None):
    """Degree-m root monomials whose support contains a chain of the defining
    set; the combinatorial prediction for the initial monomials."""
    if order is None:
        order = TermOrder(beta)
    out = set()
    for mono in monomials_of_degree(order.nvars, m):
        u = order.vars_of_mono(mono)
        if not is_quotient_monomial(u, alpha, beta, gamma):
            out.add(mono)
    return out


def standard_monomials(alpha, beta, gamma, m):
    """Multichains theta_1 <= ... <= theta_r through the interval: every
    theta_i comparable to and distinct from beta, alpha <= theta_1,
    theta_r <= gamma, with beta-degrees summing to m."""
    if m == 0:
        return [()]
    candidates = [
        theta
        for theta in enumerate_id(beta.d)
        if theta.entries != beta.entries
        and (id_leq(theta, beta) or id_leq(beta, theta))
        and id_leq(theta, gamma)
    ]
    out = []

    def extend(prefix, remaining):
        last = prefix[-1] if prefix else None
        for theta in candidates:
            if last is not None and not id_leq(last, theta):
                continue
            if last is None and not id_leq(alpha, theta):
                continue
            deg = beta_degree(theta, beta)
            if deg == 0 or deg > remaining:
                continue
            chain = prefix + [theta]
            if deg == remaining:
                out.append(tuple(chain))
            else:
                extend(chain, remaining - deg)

    extend([], m)
    return out


def standard_poly(thetas, beta, order):
    prod = SparsePoly.constant(order, 1)
    for theta in thetas:
        prod = prod * pfaffian_generator(theta, beta, order)
    return prod


# -- the main check ----------------------------------------------------------


@dataclass
class DegreeReport:
    m: int
    total: int
    n_initial: int
    n_chains: int
    n_standard: int
    initial_matches_chains: bool
    counts_match: bool
    standard_independent: bool

    @property
    def passed(self):
        return self.initial_matches_chains and self.counts_match and self.standard_independent


@dataclass
class VerifyReport:
    alpha: object
    beta: object
    gamma: object
    degrees: list = field(default_factory=list)

    @property
    def passed(self):
        return all(r.passed for r in self.degrees)


def verify_main_theorem(alpha, beta, gamma, max_degree, order=None):
    """Check, for each degree up to max_degree, that the initial monomials of
    the Pfaffian ideal are exactly the chain monomials, and that the standard
    monomials span a complement of the ideal slice."""
    if order is None:
        order = TermOrder(beta)
    gens = generators(alpha, beta, gamma, order)
    report = VerifyReport(alpha, beta, gamma)
    for m in range(1, max_degree + 1):
        slice_m = DegreeSlice(gens, m, order)
        initial = slice_m.initial_monomials()
        chains = chains_monomials_degree(alpha, beta, gamma, m, order)
        std = standard_monomials(alpha, beta, gamma, m)
        std_polys = [standard_poly(thetas, beta, order) for thetas in std]
        counts = len(std) == slice_m.total - slice_m.dim and len(initial) == slice_m.dim
        independent = slice_m.rank_with(std_polys) == slice_m.dim + len(std)
        report.degrees.append(
            DegreeReport(
                m=m,
                total=slice_m.total,
                n_initial=len(initial),
                n_chains=len(chains),
                n_standard=len(std),
                initial_matches_chains=initial == chains,
                counts_match=counts,
                standard_independent=independent,
            )
        )
    return report


def hilbert_counts(alpha, beta, gamma, max_degree, order=None):
    """Quotient dimensions by degree: (total, ideal dim, quotient dim)."""
    if order is None:
        order = TermOrder(beta)
    gens = generators(alpha, beta, gamma, order)
    out = []
    for m in range(max_degree + 1):
        slice_m = DegreeSlice(gens, m, order)
        out.append((m, slice_m.total, slice_m.dim, slice_m.total - slice_m.dim))
    return out
