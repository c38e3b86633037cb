"""How tight are the support-count bounds on random nets?

Compares the number of minimal supports m with the Sperner bound and the
refined (place-class) bound, and checks the degenerate nets made only of
isolated places, where every place is its own minimal support.
"""

import argparse
from collections import Counter

from semiflows.bounds import refined_bound, sperner_bound
from semiflows.farkas import minimal_supports
from semiflows.net import PetriNet
from semiflows.randnets import RandomNetConfig, random_nets


def isolated_places(d: int, transitions: int) -> PetriNet:
    return PetriNet.from_arcs([f"p{i + 1}" for i in range(d)],
                              {f"t{j + 1}": ({}, {}) for j in range(transitions)})


def main() -> None:
    ap = argparse.ArgumentParser(description=__doc__)
    ap.add_argument("--count", type=int, default=500)
    ap.add_argument("--seed", type=int, default=7)
    ap.add_argument("--max-places", type=int, default=8)
    args = ap.parse_args()

    cfg = RandomNetConfig(max_places=args.max_places, arc_probability=0.3)
    ratio = Counter()
    reached = []
    for net in random_nets(args.count, args.seed, cfg):
        m = len(minimal_supports(net))
        _, refined = refined_bound(net)
        sperner = sperner_bound(net.d)
        if m > refined:
            raise AssertionError(f"refined bound {refined} below m={m}")
        ratio[net.d, "m"] += m
        ratio[net.d, "refined"] += refined
        ratio[net.d, "sperner"] += sperner
        ratio[net.d, "nets"] += 1
        if m == sperner:
            reached.append(net.d)
    print(" d  nets  mean m  mean refined  sperner")
    for d in range(1, args.max_places + 1):
        n = ratio[d, "nets"]
        if n:
            print(f"{d:2}  {n:4}  {ratio[d, 'm'] / n:6.2f}  {ratio[d, 'refined'] / n:12.2f}  "
                  f"{sperner_bound(d):7}")
    print(f"random nets reaching the Sperner bound, by d: {dict(sorted(Counter(reached).items()))}")
    for d in (1, 2, 3, 4):
        net = isolated_places(d, 2)
        print(f"isolated places d={d}: m={len(minimal_supports(net))}, sperner={sperner_bound(d)}")


if __name__ == "__main__":
    main()
