"""Invariant-based analysis of the bundled telephone net.

Prints the fundamental set, the support-count bounds, the reachability
verdicts, and compares the markings allowed by the invariants with the
reachable ones.
"""

import argparse

from semiflows.behavior import consistent_markings, invariant_report, reach_report
from semiflows.bounds import refined_bound, sperner_bound
from semiflows.farkas import fundamental_set
from semiflows.fixtures import load
from semiflows.hilbert import minimal_semiflows
from semiflows.vectors import support, support_names


def main() -> None:
    ap = argparse.ArgumentParser(description=__doc__)
    ap.add_argument("--net", default="telephone", help="bundled net name")
    args = ap.parse_args()

    net, m0 = load(args.net)
    fs = fundamental_set(net)
    print(f"{net.d} places, {len(net.transitions)} transitions, M0 = {dict(zip(net.places, m0))}")
    print(f"fundamental set ({len(fs)} members):")
    for g in fs:
        print(f"  {g}  support {{{', '.join(support_names(net, support(g)))}}}")
    print(f"Hilbert basis size: {len(minimal_semiflows(net))}")

    classes, bound = refined_bound(net)
    names = [" ".join(net.places[p] for p in c) for c in classes]
    print(f"Sperner bound C({net.d},{net.d // 2}) = {sperner_bound(net.d)}")
    print(f"refined bound over {len(classes)} place classes [{' | '.join(names)}] = {bound}")

    rep = reach_report(net, m0)
    print(f"reachable: {rep.states} states, {rep.edges} edges")
    print(f"M0 home state: {rep.is_home_state}, live: {rep.is_live}")

    system = invariant_report(net, m0, fs.members)
    allowed = set(consistent_markings(net, system))
    reached = set(rep.markings)
    print(f"markings satisfying the invariants: {len(allowed)}; reachable among them: "
          f"{len(allowed & reached)}; spurious: {len(allowed - reached)}")


if __name__ == "__main__":
    main()
