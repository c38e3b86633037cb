"""Exact non-negative integer vectors: supports, componentwise order, gcd scaling."""

from __future__ import annotations

from math import gcd
from typing import Iterable, Sequence

from .net import DimensionError, PetriNet

Vector = tuple[int, ...]
Support = frozenset[int]


class NotASemiflowError(ValueError):
    pass


def as_vector(v: Iterable[int]) -> Vector:
    v = tuple(v)
    if any(not isinstance(x, int) or isinstance(x, bool) for x in v):
        raise TypeError("vector entries must be integers")
    return v


def is_semiflow(net: PetriNet, v: Sequence[int]) -> bool:
    """True iff v . Post(., t) == v . Pre(., t) for every transition t."""
    v = as_vector(v)
    if len(v) != net.d:
        raise DimensionError(f"vector has length {len(v)}, net has {net.d} places")
    if any(x < 0 for x in v):
        raise ValueError("semiflow candidates must be non-negative")
    c = net.incidence
    return all(sum(v[p] * c[p][t] for p in range(net.d)) == 0
               for t in range(len(net.transitions)))


def check_semiflow(net: PetriNet, v: Sequence[int]) -> Vector:
    """Return v as a tuple, raising NotASemiflowError if it is not one."""
    v = as_vector(v)
    if not is_semiflow(net, v):
        raise NotASemiflowError(f"{list(v)} is not a semiflow of this net")
    return v


def support(v: Sequence[int]) -> Support:
    return frozenset(i for i, x in enumerate(v) if x != 0)


def content(v: Sequence[int]) -> int:
    """gcd of the entries; 0 for the zero vector."""
    g = 0
    for x in v:
        g = gcd(g, x)
    return g


def canonicalize(v: Sequence[int]) -> tuple[Vector, int]:
    """Split v into (v / g, g) where g is the gcd of its nonzero entries."""
    g = content(v)
    if g == 0:
        raise ValueError("the zero vector has no canonical form")
    return tuple(x // g for x in v), g


def leq(u: Sequence[int], v: Sequence[int]) -> bool:
    if len(u) != len(v):
        raise DimensionError("vectors differ in length")
    return all(a <= b for a, b in zip(u, v))


def add(u: Sequence[int], v: Sequence[int]) -> Vector:
    return tuple(a + b for a, b in zip(u, v))


def scale(k: int, v: Sequence[int]) -> Vector:
    return tuple(k * x for x in v)


def combine(coeffs: Sequence, gens: Sequence[Sequence[int]], d: int) -> tuple:
    """sum(coeffs[i] * gens[i]); works for ints and Fractions alike."""
    out = [0] * d
    for a, g in zip(coeffs, gens):
        if a:
            for i, x in enumerate(g):
                out[i] += a * x
    return tuple(out)


def dot(u: Sequence[int], v: Sequence[int]) -> int:
    return sum(a * b for a, b in zip(u, v))


def support_names(net: PetriNet, s: Iterable[int]) -> list[str]:
    return [net.places[i] for i in sorted(s)]
