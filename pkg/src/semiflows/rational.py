"""Exact linear algebra over Q: bases, span membership, cone membership.

Everything is exact: Gaussian elimination over :class:`fractions.Fraction`,
and cone membership by a phase-1 simplex on an integer tableau with Bland's rule.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from math import gcd
from typing import Sequence

from .net import DimensionError
from .vectors import Support, Vector, support

Coeffs = tuple[Fraction, ...]


class InconsistencyError(RuntimeError):
    """An internal contract was violated (a theorem-backed result failed)."""


def _check_dims(f: Sequence[int], gens: Sequence[Sequence[int]]) -> int:
    d = len(f)
    for g in gens:
        if len(g) != d:
            raise DimensionError(f"generator of length {len(g)} against vector of length {d}")
    return d


class _Echelon:
    """Incrementally maintained row-echelon form of a set of vectors."""

    def __init__(self):
        self.rows: list[list[Fraction]] = []
        self.pivots: list[int] = []

    def reduce(self, v: Sequence) -> list[Fraction]:
        v = [Fraction(x) for x in v]
        for row, p in zip(self.rows, self.pivots):
            if v[p]:
                k = v[p] / row[p]
                v = [a - k * b for a, b in zip(v, row)]
        return v

    def add(self, v: Sequence) -> bool:
        r = self.reduce(v)
        for p, x in enumerate(r):
            if x:
                self.rows.append(r)
                self.pivots.append(p)
                return True
        return False


def extract_q_basis(gens: Sequence[Sequence[int]]) -> list[Vector]:
    """Greedy left-to-right maximal linearly independent sublist."""
    ech = _Echelon()
    return [tuple(g) for g in gens if ech.add(g)]


def rank(gens: Sequence[Sequence[int]]) -> int:
    return len(extract_q_basis(gens))


def solve_q(f: Sequence[int], gens: Sequence[Sequence[int]]) -> Coeffs | None:
    """Some rational alpha with f = sum(alpha_i gens_i), or None if f is not in the span."""
    d = _check_dims(f, gens)
    q = len(gens)
    # augmented system, one row per coordinate
    m = [[Fraction(g[i]) for g in gens] + [Fraction(f[i])] for i in range(d)]
    pivots = []
    r = 0
    for c in range(q):
        piv = next((i for i in range(r, d) if m[i][c]), None)
        if piv is None:
            continue
        m[r], m[piv] = m[piv], m[r]
        inv = 1 / m[r][c]
        m[r] = [x * inv for x in m[r]]
        for i in range(d):
            if i != r and m[i][c]:
                k = m[i][c]
                m[i] = [a - k * b for a, b in zip(m[i], m[r])]
        pivots.append(c)
        r += 1
        if r == d:
            break
    if any(m[i][q] for i in range(r, d)):
        return None
    alpha = [Fraction(0)] * q
    for i, c in enumerate(pivots):
        alpha[c] = m[i][q]
    return tuple(alpha)


def _reduce_row(row: list[int]) -> list[int]:
    g = 0
    for x in row:
        if x:
            g = gcd(g, x)
            if g == 1:
                return row
    return [x // g for x in row] if g > 1 else row


def in_cone(f: Sequence[int], gens: Sequence[Sequence[int]]) -> Coeffs | None:
    """Some alpha >= 0 with f = sum(alpha_i gens_i), or None when infeasible.

    Phase-1 simplex on a fraction-free integer tableau: every row is kept
    primitive and its basic variable has a positive coefficient, so values
    are rhs / coefficient and ratios compare by cross-multiplication.
    Bland's rule prevents cycling.
    """
    d = _check_dims(f, gens)
    q = len(gens)
    if q == 1:
        # f must be a non-negative multiple of the single generator
        g = gens[0]
        p = next((i for i in range(d) if g[i]), None)
        if p is None:
            return (Fraction(0),) if not any(f) else None
        a = Fraction(f[p], g[p])
        return (a,) if a >= 0 and all(a * g[i] == f[i] for i in range(d)) else None
    width = q + d  # structural columns, then one artificial per row
    tab = []
    for i in range(d):
        row = [int(g[i]) for g in gens] + [int(k == i) for k in range(d)] + [int(f[i])]
        if row[-1] < 0:
            row = [-x for x in row[:q]] + row[q:width] + [-row[-1]]
        tab.append(row)
    basis = [q + i for i in range(d)]
    # phase-1 objective row: minimize the sum of artificials
    cost = [-sum(tab[i][j] for i in range(d)) for j in range(q)] + [0] * d + [-sum(r[-1] for r in tab)]

    while True:
        enter = next((j for j in range(q) if cost[j] < 0 and j not in basis), None)
        if enter is None:
            break
        best = None
        for i in range(d):
            a = tab[i][enter]
            if a > 0:
                if best is None:
                    best = i
                    continue
                lhs, rhs = tab[i][-1] * tab[best][enter], tab[best][-1] * a
                if lhs < rhs or (lhs == rhs and basis[i] < basis[best]):
                    best = i
        if best is None:
            raise InconsistencyError("phase-1 simplex reported an unbounded ray")
        i = best
        piv_row = tab[i]
        p = piv_row[enter]
        for k in range(d):
            m = tab[k][enter]
            if k != i and m:
                tab[k] = _reduce_row([p * a - m * b for a, b in zip(tab[k], piv_row)])
        m = cost[enter]
        cost = _reduce_row([p * a - m * b for a, b in zip(cost, piv_row)])
        if basis[i] >= q:
            # artificials never re-enter once nonbasic
            for row in tab:
                row[basis[i]] = 0
            cost[basis[i]] = 0
        basis[i] = enter

    alpha = [Fraction(0)] * q
    for i, b in enumerate(basis):
        if b < q:
            alpha[b] = Fraction(tab[i][-1], tab[i][b])
        elif tab[i][-1] != 0:
            return None
    return tuple(alpha)


@dataclass(frozen=True)
class CoverDecomposition:
    """Non-negative combination of the fundamental members below ``support(f)``."""

    indices: tuple[int, ...]
    members: tuple[Vector, ...]
    coeffs: Coeffs
    covers: bool


def support_cover_decompose(f: Sequence[int], fs) -> CoverDecomposition:
    f = tuple(f)
    sf = support(f)
    chosen = [i for i, s in enumerate(fs.supports) if s <= sf]
    members = tuple(fs.members[i] for i in chosen)
    union: Support = frozenset().union(*(fs.supports[i] for i in chosen))
    # coordinates outside the support are zero in f and in every chosen member
    rows = sorted(sf)
    coeffs = in_cone([f[p] for p in rows], [[g[p] for p in rows] for g in members])
    if coeffs is None:
        raise InconsistencyError(
            f"{list(f)} is not a non-negative combination of the fundamental members below its support")
    return CoverDecomposition(tuple(chosen), members, coeffs, union == sf)
