"""Decomposition over the natural numbers."""

from __future__ import annotations

from typing import Sequence

from .hilbert import ResourceLimitError
from .net import DimensionError
from .vectors import Vector, support

DEFAULT_NODE_CAP = 10**7


def _max_multiple(r: Sequence[int], g: Sequence[int]) -> int:
    return min(r[p] // g[p] for p in range(len(g)) if g[p])


def greedy_decompose(f: Sequence[int], e: Sequence[Sequence[int]]) -> tuple[tuple[int, ...], Vector]:
    """Subtract each e_j as many times as possible, in the given order.

    Returns the multiplicities and the remainder. Any difference of two
    semiflows that stays non-negative is again a semiflow, so plain
    componentwise non-negativity is the test at each step.
    """
    f = tuple(f)
    for g in e:
        if len(g) != len(f):
            raise DimensionError("generator length differs from vector length")
        if not any(g):
            raise ValueError("zero vector in generator list")
    r = list(f)
    ks = []
    for g in e:
        k = _max_multiple(r, g)
        if k:
            r = [a - k * b for a, b in zip(r, g)]
        ks.append(k)
    return tuple(ks), tuple(r)


def nat_decomposable(f: Sequence[int], gens: Sequence[Sequence[int]],
                     node_cap: int = DEFAULT_NODE_CAP) -> tuple[int, ...] | None:
    """Exact search for natural coefficients with f = sum(k_i gens_i).

    Returns a witness aligned with ``gens`` or None. Generators are tried by
    descending support size, then lexicographically; larger multiplicities
    first. Raises ResourceLimitError after ``node_cap`` search nodes.
    """
    f = tuple(f)
    for g in gens:
        if len(g) != len(f):
            raise DimensionError("generator length differs from vector length")
    order = sorted((i for i, g in enumerate(gens) if any(g)),
                   key=lambda i: (-len(support(gens[i])), tuple(gens[i])))
    # places still coverable by generators at position >= k in the order
    reach = [frozenset()] * (len(order) + 1)
    for k in range(len(order) - 1, -1, -1):
        reach[k] = reach[k + 1] | support(gens[order[k]])

    coeffs = [0] * len(gens)
    nodes = 0

    def search(k: int, r: tuple[int, ...]) -> bool:
        nonlocal nodes
        nodes += 1
        if nodes > node_cap:
            raise ResourceLimitError(f"decomposition search exceeded {node_cap} nodes")
        if not any(r):
            return True
        if k == len(order) or not support(r) <= reach[k]:
            return False
        g = gens[order[k]]
        for c in range(_max_multiple(r, g), -1, -1):
            coeffs[order[k]] = c
            if search(k + 1, tuple(a - c * b for a, b in zip(r, g))):
                return True
        coeffs[order[k]] = 0
        return False

    return tuple(coeffs) if search(0, f) else None
