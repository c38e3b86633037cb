"""Minimal semiflows (the Hilbert basis of the semiflow monoid).

Completion procedure in the style of Contejean and Devie for the homogeneous
system ``C^T x = 0``. The frontier is processed one total-degree level at a
time, starting from the unit vectors. A non-solution ``x`` with defect
``a(x) = C^T x`` is extended by ``e_i`` only if ``a(x) . a(e_i) < 0``, i.e.
the step moves the defect back toward zero. Anything dominating a recorded
solution is discarded.
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import lru_cache

from .net import PetriNet
from .vectors import Vector, dot

DEFAULT_FRONTIER_CAP = 10**6


class ResourceLimitError(RuntimeError):
    pass


@dataclass(frozen=True)
class HilbertBasis:
    members: tuple[Vector, ...]

    def __iter__(self):
        return iter(self.members)

    def __len__(self):
        return len(self.members)

    def __contains__(self, v):
        return tuple(v) in self.members


def _dominates_any(x: Vector, basis: list[Vector]) -> bool:
    return any(all(a >= b for a, b in zip(x, s)) for s in basis)


def completion(net: PetriNet, frontier_cap: int = DEFAULT_FRONTIER_CAP) -> list[Vector]:
    d = net.d
    rows = net.incidence  # a(e_i) is row i of C
    zero = (0,) * len(net.transitions)
    basis: list[Vector] = []
    frontier: dict[Vector, tuple[int, ...]] = {}
    for i in range(d):
        frontier[tuple(int(k == i) for k in range(d))] = rows[i]

    while frontier:
        if len(frontier) > frontier_cap:
            raise ResourceLimitError(
                f"frontier reached {len(frontier)} vectors (cap {frontier_cap})")
        level_solutions = [x for x, a in frontier.items() if a == zero]
        basis.extend(level_solutions)
        nxt: dict[Vector, tuple[int, ...]] = {}
        for x, a in frontier.items():
            if a == zero:
                continue
            for i in range(d):
                if dot(a, rows[i]) >= 0:
                    continue
                y = x[:i] + (x[i] + 1,) + x[i + 1:]
                if y in nxt or _dominates_any(y, basis):
                    continue
                nxt[y] = tuple(u + v for u, v in zip(a, rows[i]))
        frontier = nxt
    return basis


@lru_cache(maxsize=512)
def _minimal(net: PetriNet, frontier_cap: int) -> HilbertBasis:
    return HilbertBasis(tuple(sorted(completion(net, frontier_cap))))


def minimal_semiflows(net: PetriNet, frontier_cap: int = DEFAULT_FRONTIER_CAP) -> HilbertBasis:
    """All minimal nonzero semiflows, sorted lexicographically.

    Raises ResourceLimitError when the frontier outgrows ``frontier_cap``.
    """
    return _minimal(net, frontier_cap)
