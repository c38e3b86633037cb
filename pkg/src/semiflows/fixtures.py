"""Bundled example nets and the semiflow vectors published alongside them."""

from __future__ import annotations

from importlib import resources

from .net import Marking, PetriNet, parse_net

# Fig. 2 net: p1 + p2 = p3 + p4
FIG2_G1 = (0, 1, 1, 0)
FIG2_G2 = (0, 1, 0, 1)
FIG2_G3 = (1, 0, 1, 0)
FIG2_G4 = (1, 0, 0, 1)
FIG2_F = (1, 1, 1, 1)

# Fig. 1 net: p1 = p2, 3 p1 = 2 p3 + 3 p4 + 5 p5
FIG1_F1 = (3, 3, 2, 0, 1)
FIG1_F2 = (4, 4, 1, 0, 2)
FIG1_G1 = (2, 2, 3, 0, 0)
FIG1_G2 = (1, 1, 0, 1, 0)
FIG1_G3 = (5, 5, 0, 0, 3)

TELEPHONE_PLACES = ("LA", "CLA", "W", "PU", "S", "F", "CA", "R", "A")


def _indicator(*names: str) -> tuple[int, ...]:
    return tuple(int(p in names) for p in TELEPHONE_PLACES)


TELEPHONE_F1 = _indicator("LA", "CLA", "W", "PU", "S")
TELEPHONE_F2 = _indicator("LA", "PU", "F", "CA")
TELEPHONE_F3 = _indicator("CLA", "S", "R", "A")


def net_path(name: str):
    return resources.files(__package__).joinpath("nets", f"{name}.pn")


def load(name: str) -> tuple[PetriNet, Marking]:
    """Load a bundled net: ``fig1``, ``fig2`` or ``telephone``."""
    return parse_net(net_path(name).read_text(encoding="utf-8"))
