"""Per-semiflow predicates and generating-set verdicts over N, Q+ and Q."""

from __future__ import annotations

import enum
from dataclasses import dataclass
from typing import Sequence

from .farkas import fundamental_set, minimal_supports
from .hilbert import minimal_semiflows
from .natdecomp import nat_decomposable
from .net import PetriNet
from .rational import InconsistencyError, extract_q_basis, in_cone, rank, solve_q
from .vectors import Vector, add, canonicalize, check_semiflow, content, scale, support


class Domain(enum.Enum):
    NAT = "nat"
    QPOS = "qplus"
    Q = "q"


@dataclass(frozen=True)
class GeneratingSetReport:
    domain: Domain
    is_generating: bool
    is_minimal_gs: bool
    is_least_gs: bool
    witness: Vector | None = None
    reason: str = ""

    def as_dict(self) -> dict:
        return {
            "over": self.domain.value,
            "generating": self.is_generating,
            "minimal": self.is_minimal_gs,
            "least": self.is_least_gs,
            "witness": list(self.witness) if self.witness is not None else None,
            "reason": self.reason,
        }


def _nonzero_semiflow(net: PetriNet, v) -> Vector:
    v = check_semiflow(net, v)
    if not any(v):
        raise ValueError("the zero vector is excluded here")
    return v


def is_canonical(v: Sequence[int]) -> bool:
    g = content(v)
    if g == 0:
        raise ValueError("the zero vector has no canonical form")
    return g == 1


def is_minimal(net: PetriNet, v: Sequence[int]) -> bool:
    return _nonzero_semiflow(net, v) in minimal_semiflows(net)


def has_minimal_support(net: PetriNet, v: Sequence[int]) -> bool:
    return support(_nonzero_semiflow(net, v)) in set(minimal_supports(net))


def _dedupe(net: PetriNet, gens) -> list[Vector]:
    out = {}
    for g in gens:
        out.setdefault(check_semiflow(net, g), None)
    return list(out)


def generates(net: PetriNet, gens: Sequence[Vector], domain: Domain) -> tuple[bool, Vector | None]:
    """(is_generating, first semiflow that fails to be generated)."""
    if domain is Domain.NAT:
        for h in minimal_semiflows(net):
            if nat_decomposable(h, gens) is None:
                return False, h
        return True, None
    fs = fundamental_set(net)
    if domain is Domain.QPOS:
        for g in fs:
            if in_cone(g, gens) is None:
                return False, g
        return True, None
    for g in fs:
        if solve_q(g, gens) is None:
            return False, g
    if rank(gens) != rank(fs.members):
        raise InconsistencyError("span check passed but ranks differ")
    return True, None


def _minimality(net: PetriNet, gens: list[Vector], domain: Domain) -> tuple[bool, Vector | None]:
    """Inclusion-minimality of a generating set, by structure rather than search."""
    if domain is Domain.NAT:
        hilbert = set(minimal_semiflows(net))
        extra = [g for g in gens if g not in hilbert]
        return (not extra), (extra[0] if extra else None)
    if domain is Domain.QPOS:
        ms = set(minimal_supports(net))
        seen = set()
        for g in gens:
            s = support(g)
            if s not in ms or s in seen:
                return False, g
            seen.add(s)
        return True, None
    basis = set(extract_q_basis(gens))
    dependent = [g for g in gens if g not in basis]
    return (not dependent), (dependent[0] if dependent else None)


def least_size(net: PetriNet, domain: Domain) -> int:
    """Cardinality of every least generating set over ``domain``."""
    if domain is Domain.NAT:
        return len(minimal_semiflows(net))
    if domain is Domain.QPOS:
        return len(minimal_supports(net))
    return rank(fundamental_set(net).members)


def classify_generating_set(net: PetriNet, gens, domain: Domain | str,
                            paranoid: bool = False) -> GeneratingSetReport:
    """Decide whether ``gens`` generates every semiflow over ``domain``.

    Minimality is decided structurally (Hilbert basis over N, one member per
    minimal support over Q+, linear independence over Q) and leastness by
    cardinality; the two verdicts are computed separately and must agree.
    ``paranoid=True`` also runs the direct remove-one test.
    """
    domain = Domain(domain)
    gens = _dedupe(net, gens)
    ok, missing = generates(net, gens, domain)
    if not ok:
        return GeneratingSetReport(domain, False, False, False, missing,
                                   "semiflow not generated")
    minimal, removable = _minimality(net, gens, domain)
    least = len(gens) == least_size(net, domain)
    if minimal != least:
        raise InconsistencyError(
            f"minimal={minimal} but least={least} for a generating set over {domain.value}")
    if paranoid:
        direct = not any(generates(net, gens[:i] + gens[i + 1:], domain)[0]
                         for i in range(len(gens)))
        if direct != minimal:
            raise InconsistencyError(f"remove-one test says minimal={direct}, structure says {minimal}")
    if minimal:
        return GeneratingSetReport(domain, True, True, True, None, "")
    return GeneratingSetReport(domain, True, False, False, removable, "element removable")


def canonical_witnesses(net: PetriNet, f: Sequence[int], k: int) -> list[Vector]:
    """Up to ``k`` distinct canonical semiflows with the same support as ``f``.

    On a minimal support there is exactly one. Otherwise the sequence
    canon(f + j*e), j = 0, 1, 2, ..., with ``e`` a fundamental member whose
    support is strictly inside, never repeats.
    """
    f = _nonzero_semiflow(net, f)
    if k < 0:
        raise ValueError("k must be non-negative")
    if k == 0:
        return []
    s = support(f)
    fs = fundamental_set(net)
    if s in fs.supports:
        return [fs.members[fs.supports.index(s)]]
    e = next((g for g, gs in zip(fs.members, fs.supports) if gs < s), None)
    if e is None:
        raise InconsistencyError(f"no minimal support strictly inside the support of {list(f)}")
    out: dict[Vector, None] = {}
    j = 0
    while len(out) < k:
        v, _ = canonicalize(add(f, scale(j, e)))
        if v in out:
            raise InconsistencyError(f"canonical witness repeated at step {j}")
        out[v] = None
        j += 1
    return list(out)
