"""Place/transition nets: data model, text format, token game.

File format (UTF-8, one declaration per line, ``#`` starts a comment)::

    place <id> [<initial-tokens>]
    trans <id> [in <pid>[:<w>] ...] [out <pid>[:<w>] ...]

Places are numbered in declaration order; that order fixes the coordinates
of every marking and semiflow vector.
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import cached_property
from typing import Iterable, Sequence

Marking = tuple[int, ...]

_KEYWORDS = frozenset({"in", "out"})


class NetParseError(ValueError):
    def __init__(self, lineno: int, message: str):
        super().__init__(f"line {lineno}: {message}")
        self.lineno = lineno


class DimensionError(ValueError):
    pass


class NotEnabledError(ValueError):
    pass


@dataclass(frozen=True)
class PetriNet:
    """Immutable P/T net.

    ``pre[p][t]`` is the weight of the arc place p -> transition t and
    ``post[p][t]`` the weight of transition t -> place p.
    """

    places: tuple[str, ...]
    transitions: tuple[str, ...]
    pre: tuple[tuple[int, ...], ...]
    post: tuple[tuple[int, ...], ...]

    def __post_init__(self):
        names = list(self.places) + list(self.transitions)
        if any(not n for n in names):
            raise ValueError("identifiers must be non-empty")
        if len(set(names)) != len(names):
            raise ValueError("place and transition identifiers must be unique and disjoint")
        nt = len(self.transitions)
        for mat in (self.pre, self.post):
            if len(mat) != len(self.places) or any(len(row) != nt for row in mat):
                raise DimensionError("weight matrices must be |P| x |T|")
            if any(w < 0 for row in mat for w in row):
                raise ValueError("arc weights must be non-negative")

    @classmethod
    def from_arcs(cls, places: Sequence[str], transitions: dict[str, tuple[dict, dict]]) -> PetriNet:
        """Build a net from ``{tid: ({pid: w, ...}, {pid: w, ...})}``."""
        index = {p: i for i, p in enumerate(places)}
        tids = list(transitions)
        pre = [[0] * len(tids) for _ in places]
        post = [[0] * len(tids) for _ in places]
        for j, tid in enumerate(tids):
            ins, outs = transitions[tid]
            for p, w in ins.items():
                pre[index[p]][j] = w
            for p, w in outs.items():
                post[index[p]][j] = w
        return cls(tuple(places), tuple(tids),
                   tuple(map(tuple, pre)), tuple(map(tuple, post)))

    @property
    def d(self) -> int:
        return len(self.places)

    @cached_property
    def place_index(self) -> dict[str, int]:
        return {p: i for i, p in enumerate(self.places)}

    @cached_property
    def transition_index(self) -> dict[str, int]:
        return {t: i for i, t in enumerate(self.transitions)}

    @cached_property
    def incidence(self) -> tuple[tuple[int, ...], ...]:
        """C = Post - Pre, one row per place."""
        return tuple(tuple(b - a for a, b in zip(rp, rq)) for rp, rq in zip(self.pre, self.post))

    def pre_column(self, t: int) -> tuple[int, ...]:
        return tuple(row[t] for row in self.pre)

    def post_column(self, t: int) -> tuple[int, ...]:
        return tuple(row[t] for row in self.post)

    def inputs(self, t: int) -> list[int]:
        return [p for p in range(self.d) if self.pre[p][t] > 0]

    def outputs(self, t: int) -> list[int]:
        return [p for p in range(self.d) if self.post[p][t] > 0]

    def marking(self, tokens: dict[str, int] | None = None) -> Marking:
        """Marking with the given tokens per place name, zero elsewhere."""
        m = [0] * self.d
        for p, k in (tokens or {}).items():
            m[self.place_index[p]] = k
        return check_marking(self, m)


def check_marking(net: PetriNet, m: Iterable[int]) -> Marking:
    m = tuple(m)
    if len(m) != net.d:
        raise DimensionError(f"marking has length {len(m)}, net has {net.d} places")
    if any(x < 0 for x in m):
        raise ValueError("marking entries must be non-negative")
    return m


def _parse_int(token: str, lineno: int, what: str) -> int:
    try:
        value = int(token, 10)
    except ValueError:
        raise NetParseError(lineno, f"{what} {token!r} is not an integer") from None
    if value < 0:
        raise NetParseError(lineno, f"{what} {token!r} is negative")
    return value


def parse_net(text: str) -> tuple[PetriNet, Marking]:
    """Parse the line format into a net and its initial marking."""
    lines = text.splitlines()
    places: list[str] = []
    tokens: list[int] = []
    trans: dict[str, tuple[dict, dict]] = {}
    seen: set[str] = set()

    for lineno, raw in enumerate(lines, start=1):
        words = raw.split("#", 1)[0].split()
        if not words:
            continue
        kind, rest = words[0], words[1:]
        if kind == "place":
            if not 1 <= len(rest) <= 2:
                raise NetParseError(lineno, "expected 'place <id> [<tokens>]'")
            pid = rest[0]
            if pid in _KEYWORDS or ":" in pid:
                raise NetParseError(lineno, f"invalid place identifier {pid!r}")
            if pid in seen:
                raise NetParseError(lineno, f"duplicate identifier {pid!r}")
            seen.add(pid)
            places.append(pid)
            tokens.append(_parse_int(rest[1], lineno, "token count") if len(rest) == 2 else 0)
        elif kind == "trans":
            if not rest:
                raise NetParseError(lineno, "expected 'trans <id> ...'")
            tid = rest[0]
            if tid in _KEYWORDS or ":" in tid:
                raise NetParseError(lineno, f"invalid transition identifier {tid!r}")
            if tid in seen:
                raise NetParseError(lineno, f"duplicate identifier {tid!r}")
            seen.add(tid)
            arcs: tuple[dict, dict] = ({}, {})
            side = None
            for word in rest[1:]:
                if word == "in":
                    side = 0
                    continue
                if word == "out":
                    side = 1
                    continue
                if side is None:
                    raise NetParseError(lineno, f"arc {word!r} outside an 'in'/'out' list")
                pid, _, w = word.partition(":")
                if pid not in places:
                    raise NetParseError(lineno, f"unknown place {pid!r}")
                if pid in arcs[side]:
                    raise NetParseError(lineno, f"duplicate arc for place {pid!r}")
                arcs[side][pid] = _parse_int(w, lineno, "weight") if w else 1
            trans[tid] = arcs
        else:
            raise NetParseError(lineno, f"unknown declaration {kind!r}")

    if not places:
        raise NetParseError(max(len(lines), 1), "net declares no places")
    net = PetriNet.from_arcs(places, trans)
    return net, tuple(tokens)


def render_net(net: PetriNet, marking: Sequence[int] | None = None) -> str:
    """Canonical text form: places first, then transitions, explicit weights."""
    m = check_marking(net, marking) if marking is not None else (0,) * net.d
    lines = [f"place {p} {k}" for p, k in zip(net.places, m)]
    for j, tid in enumerate(net.transitions):
        parts = [f"trans {tid}"]
        ins = [f"{net.places[p]}:{net.pre[p][j]}" for p in net.inputs(j)]
        outs = [f"{net.places[p]}:{net.post[p][j]}" for p in net.outputs(j)]
        if ins:
            parts += ["in", *ins]
        if outs:
            parts += ["out", *outs]
        lines.append(" ".join(parts))
    return "\n".join(lines) + "\n"


def enabled(net: PetriNet, m: Sequence[int]) -> set[int]:
    m = check_marking(net, m)
    return {t for t in range(len(net.transitions))
            if all(m[p] >= net.pre[p][t] for p in range(net.d))}


def fire(net: PetriNet, m: Sequence[int], t: int) -> Marking:
    m = check_marking(net, m)
    if not 0 <= t < len(net.transitions):
        raise IndexError(f"no transition with index {t}")
    if any(m[p] < net.pre[p][t] for p in range(net.d)):
        raise NotEnabledError(f"transition {net.transitions[t]} is not enabled")
    return tuple(m[p] - net.pre[p][t] + net.post[p][t] for p in range(net.d))
