"""Fundamental set by Farkas / Fourier-Motzkin column elimination.

Rows of ``[B | A]`` start as ``[I_d | C]`` with ``C = Post - Pre``. Each
column of A is annulled in turn by keeping the rows that are already zero
there and adding positive combinations of every pair of rows with opposite
signs. After each column the rows are gcd-reduced, deduplicated, and any
row whose B-support strictly contains another row's B-support is dropped.
The surviving B-parts are the canonical semiflows of minimal support.
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import lru_cache

from .net import PetriNet
from .vectors import Support, Vector, canonicalize, support


@dataclass(frozen=True)
class FundamentalSet:
    members: tuple[Vector, ...]
    supports: tuple[Support, ...]

    def __iter__(self):
        return iter(self.members)

    def __len__(self):
        return len(self.members)

    def __contains__(self, v):
        return tuple(v) in self.members


def _prune(rows: list[tuple[Vector, Vector]], d: int) -> list[tuple[Vector, Vector]]:
    reduced = {}
    for b, a in rows:
        full, _ = canonicalize(b + a)
        reduced.setdefault(full, None)
    unique = [(r[:d], r[d:]) for r in reduced]
    supports = [support(b) for b, _ in unique]
    keep = []
    for i, (row, s) in enumerate(zip(unique, supports)):
        if not any(o < s for o in supports):
            keep.append(row)
    return keep


def _sign_pairs(rows, j: int) -> int:
    pos = sum(1 for _, a in rows if a[j] > 0)
    neg = sum(1 for _, a in rows if a[j] < 0)
    return pos * neg


def eliminate(net: PetriNet, order: str = "declared") -> list[Vector]:
    """Run the elimination and return the B-parts, unsorted.

    ``order="heuristic"`` picks, at each step, the remaining column with the
    fewest sign pairs. The result set does not depend on the order.
    """
    if order not in ("declared", "heuristic"):
        raise ValueError(f"unknown column order {order!r}")
    d, nt = net.d, len(net.transitions)
    c = net.incidence
    rows = [(tuple(int(i == p) for i in range(d)), c[p]) for p in range(d)]
    remaining = list(range(nt))
    while remaining:
        if order == "heuristic":
            j = min(remaining, key=lambda col: (_sign_pairs(rows, col), col))
        else:
            j = remaining[0]
        remaining.remove(j)
        zero = [r for r in rows if r[1][j] == 0]
        pos = [r for r in rows if r[1][j] > 0]
        neg = [r for r in rows if r[1][j] < 0]
        for bp, ap in pos:
            for bn, an in neg:
                kp, kn = -an[j], ap[j]
                zero.append((tuple(kp * x + kn * y for x, y in zip(bp, bn)),
                             tuple(kp * x + kn * y for x, y in zip(ap, an))))
        rows = _prune(zero, d)
    return [b for b, _ in rows]


@lru_cache(maxsize=512)
def _fundamental(net: PetriNet, order: str) -> FundamentalSet:
    members = tuple(sorted(eliminate(net, order)))
    return FundamentalSet(members, tuple(support(v) for v in members))


def fundamental_set(net: PetriNet, order: str = "declared") -> FundamentalSet:
    """Canonical semiflows of minimal support, sorted lexicographically."""
    return _fundamental(net, order)


def minimal_supports(net: PetriNet) -> list[Support]:
    return sorted(fundamental_set(net).supports, key=sorted)
