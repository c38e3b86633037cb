"""Upper bounds on the number of minimal supports."""

from __future__ import annotations

from math import comb

from .net import PetriNet


def sperner_bound(d: int) -> int:
    """Size of the largest antichain of subsets of a d-set: C(d, floor(d/2))."""
    if d < 1:
        raise ValueError("d must be >= 1")
    return comb(d, d // 2)


def place_classes(net: PetriNet) -> list[list[int]]:
    """Places that every semiflow either covers together or avoids together.

    A transition with exactly one input place p and one output place q
    forces f(p) * Pre(p, t) == f(q) * Post(q, t), so p and q are merged
    whatever the weights.
    """
    parent = list(range(net.d))

    def find(x: int) -> int:
        while parent[x] != x:
            parent[x] = parent[parent[x]]
            x = parent[x]
        return x

    for t in range(len(net.transitions)):
        ins, outs = net.inputs(t), net.outputs(t)
        if len(ins) == 1 and len(outs) == 1:
            a, b = find(ins[0]), find(outs[0])
            if a != b:
                parent[max(a, b)] = min(a, b)
    classes: dict[int, list[int]] = {}
    for p in range(net.d):
        classes.setdefault(find(p), []).append(p)
    return sorted(classes.values())


def refined_bound(net: PetriNet) -> tuple[list[list[int]], int]:
    classes = place_classes(net)
    return classes, sperner_bound(len(classes))
