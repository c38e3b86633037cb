"""Random small nets for property suites and experiments."""

from __future__ import annotations

import random
from dataclasses import dataclass

from .net import PetriNet


@dataclass(frozen=True)
class RandomNetConfig:
    max_places: int = 6
    max_transitions: int = 5
    max_weight: int = 2
    arc_probability: float = 0.35
    min_places: int = 1
    min_transitions: int = 1


def random_net(rng: random.Random, cfg: RandomNetConfig = RandomNetConfig()) -> PetriNet:
    d = rng.randint(cfg.min_places, cfg.max_places)
    nt = rng.randint(cfg.min_transitions, cfg.max_transitions)
    places = [f"p{i + 1}" for i in range(d)]
    trans = {}
    for j in range(nt):
        ins, outs = {}, {}
        for p in places:
            if rng.random() < cfg.arc_probability:
                ins[p] = rng.randint(1, cfg.max_weight)
            if rng.random() < cfg.arc_probability:
                outs[p] = rng.randint(1, cfg.max_weight)
        trans[f"t{j + 1}"] = (ins, outs)
    return PetriNet.from_arcs(places, trans)


def random_nets(count: int, seed: int = 0, cfg: RandomNetConfig = RandomNetConfig()) -> list[PetriNet]:
    rng = random.Random(seed)
    return [random_net(rng, cfg) for _ in range(count)]
