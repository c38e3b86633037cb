"""Marking invariants and reachability-based home-state / liveness verdicts."""

from __future__ import annotations

from collections import deque
from dataclasses import dataclass, field
from typing import Sequence

import networkx as nx

from .farkas import fundamental_set
from .net import DimensionError, Marking, PetriNet, check_marking
from .rational import InconsistencyError
from .vectors import Vector, check_semiflow, dot, support

DEFAULT_STATE_CAP = 10**6


class UnboundedEnumerationError(ValueError):
    pass


@dataclass(frozen=True)
class InvariantSystem:
    """Equations gens[i] . M == rhs[i] holding in every reachable marking."""

    generators: tuple[Vector, ...]
    rhs: tuple[int, ...]

    def holds(self, m: Sequence[int]) -> bool:
        return all(dot(g, m) == r for g, r in zip(self.generators, self.rhs))


def invariant_report(net: PetriNet, m0: Sequence[int], gens) -> InvariantSystem:
    m0 = check_marking(net, m0)
    gens = tuple(check_semiflow(net, g) for g in gens)
    return InvariantSystem(gens, tuple(dot(g, m0) for g in gens))


def consistent_markings(net: PetriNet, system: InvariantSystem) -> list[Marking]:
    """Every non-negative integer marking satisfying all equations of ``system``."""
    d = net.d
    for g in system.generators:
        if len(g) != d:
            raise DimensionError("generator length differs from place count")
    covered = frozenset().union(*(support(g) for g in system.generators))
    uncovered = [net.places[p] for p in range(d) if p not in covered]
    if uncovered:
        raise UnboundedEnumerationError(
            f"enumeration unbounded: places {', '.join(uncovered)} are not covered by any invariant")

    caps = [min(r // g[p] for g, r in zip(system.generators, system.rhs) if g[p]) for p in range(d)]
    gens, rhs = system.generators, system.rhs
    out: list[Marking] = []
    m = [0] * d
    partial = [0] * len(gens)

    def walk(p: int) -> None:
        if p == d:
            if all(s == r for s, r in zip(partial, rhs)):
                out.append(tuple(m))
            return
        for k in range(caps[p] + 1):
            if any(partial[i] + k * gens[i][p] > rhs[i] for i in range(len(gens))):
                break
            m[p] = k
            for i in range(len(gens)):
                partial[i] += k * gens[i][p]
            walk(p + 1)
            for i in range(len(gens)):
                partial[i] -= k * gens[i][p]
        m[p] = 0

    walk(0)
    return sorted(out)


@dataclass(frozen=True)
class ReachabilityReport:
    states: int
    edges: int
    is_home_state: bool | None
    is_live: bool | None
    dead_transitions: tuple[str, ...]
    bound_hit: bool
    markings: tuple[Marking, ...] = field(default=(), repr=False)

    def as_dict(self) -> dict:
        def verdict(v):
            return "unknown" if v is None else v

        return {
            "states": self.states,
            "edges": self.edges,
            "is_home_state": verdict(self.is_home_state),
            "is_live": verdict(self.is_live),
            "dead_transitions": list(self.dead_transitions),
            "bound_hit": self.bound_hit,
        }


def explore(net: PetriNet, m0: Marking, state_cap: int, on_new=None):
    """Breadth-first reachability graph; returns (markings, edges, bound_hit)."""
    index = {m0: 0}
    order = [m0]
    edges: list[tuple[int, int, int]] = []
    queue = deque([m0])
    nt = len(net.transitions)
    pre, post, d = net.pre, net.post, net.d
    while queue:
        m = queue.popleft()
        u = index[m]
        for t in range(nt):
            if any(m[p] < pre[p][t] for p in range(d)):
                continue
            n = tuple(m[p] - pre[p][t] + post[p][t] for p in range(d))
            v = index.get(n)
            if v is None:
                if len(order) >= state_cap:
                    return order, edges, True
                if on_new is not None:
                    on_new(n)
                v = index[n] = len(order)
                order.append(n)
                queue.append(n)
            edges.append((u, v, t))
    return order, edges, False


def reach_report(net: PetriNet, m0: Sequence[int], state_cap: int = DEFAULT_STATE_CAP,
                 check_invariants: bool = True) -> ReachabilityReport:
    """Explore from ``m0`` and decide home-state and liveness exactly.

    ``m0`` is a home state iff the reachability graph has a single bottom
    SCC and it contains ``m0``. The net is live iff every bottom SCC fires
    every transition. If exploration stops at ``state_cap`` both verdicts
    are None (unknown).
    """
    if state_cap < 1:
        raise ValueError("state_cap must be >= 1")
    m0 = check_marking(net, m0)
    on_new = None
    if check_invariants:
        inv = invariant_report(net, m0, fundamental_set(net).members)

        def on_new(m):
            if not inv.holds(m):
                raise InconsistencyError(f"reachable marking {list(m)} breaks a semiflow invariant")

    markings, edges, bound_hit = explore(net, m0, state_cap, on_new)
    if bound_hit:
        return ReachabilityReport(len(markings), len(edges), None, None, (), True, tuple(markings))

    g = nx.DiGraph()
    g.add_nodes_from(range(len(markings)))
    fired: dict[tuple[int, int], set[int]] = {}
    for u, v, t in edges:
        g.add_edge(u, v)
        fired.setdefault((u, v), set()).add(t)
    dag = nx.condensation(g)
    scc_of = dag.graph["mapping"]
    bottoms = [c for c in dag.nodes if dag.out_degree(c) == 0]
    missing: set[int] = set()
    all_t = set(range(len(net.transitions)))
    for c in bottoms:
        inside = set()
        for u in dag.nodes[c]["members"]:
            for v in g.successors(u):
                inside |= fired[(u, v)]
        missing |= all_t - inside
    home = len(bottoms) == 1 and scc_of[0] == bottoms[0]
    dead = tuple(net.transitions[t] for t in sorted(missing))
    return ReachabilityReport(len(markings), len(edges), home, not missing, dead, False, tuple(markings))
