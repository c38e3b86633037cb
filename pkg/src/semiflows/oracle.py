"""Brute-force reference answers over a finite box {0..bound}^d.

A box may also carry a separate bound per place; it stays downward closed,
which is all the minimality arguments below rely on.

Everything here is deliberately naive: enumerate the box, test the semiflow
equations directly, filter by componentwise order or support inclusion.
Used to freeze expected values and for equivalence tests.
"""

from __future__ import annotations

import itertools
from typing import Sequence

import numpy as np

from .net import PetriNet
from .vectors import Support, Vector, support

BOX_LIMIT = 10**8
_CHUNK = 1 << 18


class BoxTooLargeError(ValueError):
    pass


def _bounds(net: PetriNet, bound) -> tuple[int, ...]:
    """One bound per place; an int applies to every place."""
    if isinstance(bound, int):
        bounds = (bound,) * net.d
    else:
        bounds = tuple(int(b) for b in bound)
        if len(bounds) != net.d:
            raise ValueError(f"{len(bounds)} bounds for {net.d} places")
    if any(b < 1 for b in bounds):
        raise ValueError("bound must be >= 1")
    points = 1
    for b in bounds:
        points *= b + 1
    if points > BOX_LIMIT:
        raise BoxTooLargeError(f"box of {points} points exceeds {BOX_LIMIT}")
    cmax = max((abs(c) for row in net.incidence for c in row), default=0)
    if max(bounds, default=0) * cmax * net.d >= 2**62:
        raise BoxTooLargeError("products would overflow int64")
    return bounds


def _box_semiflow_array(net: PetriNet, bound) -> np.ndarray:
    bounds = _bounds(net, bound)
    d, nt = net.d, len(net.transitions)
    c = np.array(net.incidence, dtype=np.int64).reshape(d, nt)
    # split coordinates: the tail block is vectorized, the head is iterated
    tail, size = 0, 1
    while tail < d and size * (bounds[d - tail - 1] + 1) <= _CHUNK:
        tail += 1
        size *= bounds[d - tail] + 1
    head = d - tail
    axes = [np.arange(b + 1, dtype=np.int64) for b in bounds[head:]]
    if tail:
        grid = np.stack(np.meshgrid(*axes, indexing="ij"), axis=-1).reshape(-1, tail)
    else:
        grid = np.zeros((1, 0), dtype=np.int64)
    tail_defect = grid @ c[head:]
    found = []
    for prefix in itertools.product(*(range(b + 1) for b in bounds[:head])):
        offset = np.array(prefix, dtype=np.int64) @ c[:head] if head else 0
        ok = np.all(tail_defect + offset == 0, axis=1)
        if ok.any():
            rows = grid[ok]
            found.append(np.hstack([np.tile(np.array(prefix, dtype=np.int64), (len(rows), 1)), rows]))
    if not found:
        return np.zeros((0, d), dtype=np.int64)
    out = np.vstack(found)
    return out[out.any(axis=1)]


def _to_vectors(arr: np.ndarray) -> list[Vector]:
    return sorted(tuple(int(x) for x in row) for row in arr)


def brute_semiflows(net: PetriNet, bound: int | Sequence[int]) -> list[Vector]:
    """All nonzero semiflows inside the box, lexicographic.

    ``bound`` is an int (the same for every place) or one bound per place.
    """
    return _to_vectors(_box_semiflow_array(net, bound))


def _minimal_rows(arr: np.ndarray) -> np.ndarray:
    if len(arr) == 0:
        return arr
    order = np.argsort(arr.sum(axis=1), kind="stable")
    arr = arr[order]
    dominated = np.zeros(len(arr), dtype=bool)
    keep = []
    for i in range(len(arr)):
        if dominated[i]:
            continue
        keep.append(i)
        dominated |= np.all(arr >= arr[i], axis=1)
    return arr[keep]


def brute_minimal_semiflows(net: PetriNet, bound: int | Sequence[int]) -> list[Vector]:
    """Minimal elements (componentwise) of the box semiflows.

    Any semiflow below a box member is itself in the box, so every vector
    returned is a genuinely minimal semiflow. Minimal semiflows with a
    coordinate above ``bound`` are missed; see :func:`touches_bound`.
    """
    return _to_vectors(_minimal_rows(_box_semiflow_array(net, bound)))


def brute_minimal_supports(net: PetriNet, bound: int | Sequence[int]) -> list[Support]:
    """Inclusion-minimal supports among the box semiflows, sorted."""
    supports = {support(v) for v in brute_semiflows(net, bound)}
    minimal = [s for s in supports if not any(o < s for o in supports)]
    return sorted(minimal, key=sorted)


def touches_bound(vectors, bound: int) -> list[Vector]:
    """Members with a coordinate equal to ``bound``: the box may be clipping them."""
    return [v for v in vectors if max(v, default=0) >= bound]
