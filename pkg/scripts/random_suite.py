"""Random-net experiment: generators against the brute-force oracle.

For each random net, computes the fundamental set and Hilbert basis,
compares them with the oracle box, and records sizes and timings.
Writes one CSV row per net when --csv is given.
"""

import argparse
import csv
import time
from collections import Counter
from dataclasses import asdict, dataclass, field

from semiflows.farkas import fundamental_set
from semiflows.hilbert import minimal_semiflows
from semiflows.oracle import brute_minimal_semiflows, brute_semiflows
from semiflows.randnets import RandomNetConfig, random_nets
from semiflows.rational import rank, support_cover_decompose
from semiflows.vectors import support


@dataclass(frozen=True)
class SuiteConfig:
    count: int = 200
    seed: int = 2024
    bound: int = 6
    nets: RandomNetConfig = field(default_factory=RandomNetConfig)


def run_net(net, bound: int) -> dict:
    t0 = time.perf_counter()
    fs = fundamental_set(net)
    t1 = time.perf_counter()
    hb = minimal_semiflows(net)
    t2 = time.perf_counter()
    bounds = tuple(max([bound] + [h[p] for h in hb]) for p in range(net.d))
    box = brute_semiflows(net, bounds)
    supports = {support(v) for v in box}
    oracle_ms = {s for s in supports if not any(o < s for o in supports)}
    t3 = time.perf_counter()
    covered = sum(support_cover_decompose(f, fs).covers for f in box)
    t4 = time.perf_counter()
    return {
        "places": net.d,
        "transitions": len(net.transitions),
        "m": len(fs),
        "hilbert": len(hb),
        "rank": rank(fs.members),
        "max_coord": max((max(h) for h in hb), default=0),
        "box_semiflows": len(box),
        "fs_ok": set(fs.supports) == oracle_ms,
        "hb_ok": set(hb) == set(brute_minimal_semiflows(net, bounds)),
        "cover_ok": covered == len(box),
        "farkas_s": t1 - t0,
        "hilbert_s": t2 - t1,
        "oracle_s": t3 - t2,
        "decompose_s": t4 - t3,
    }


def main() -> None:
    ap = argparse.ArgumentParser(description=__doc__)
    ap.add_argument("--count", type=int, default=SuiteConfig.count)
    ap.add_argument("--seed", type=int, default=SuiteConfig.seed)
    ap.add_argument("--bound", type=int, default=SuiteConfig.bound)
    ap.add_argument("--arc-probability", type=float, default=RandomNetConfig.arc_probability)
    ap.add_argument("--csv", help="write per-net rows here")
    args = ap.parse_args()
    cfg = SuiteConfig(args.count, args.seed, args.bound,
                      RandomNetConfig(arc_probability=args.arc_probability))

    rows = [run_net(net, cfg.bound) for net in random_nets(cfg.count, cfg.seed, cfg.nets)]
    if args.csv:
        with open(args.csv, "w", newline="") as fh:
            w = csv.DictWriter(fh, fieldnames=list(rows[0]))
            w.writeheader()
            w.writerows(rows)

    print(f"config: {asdict(cfg)}")
    agree = Counter()
    for r in rows:
        for k in ("fs_ok", "hb_ok", "cover_ok"):
            agree[k] += r[k]
    print(f"nets: {len(rows)}, without semiflows: {sum(r['m'] == 0 for r in rows)}")
    print(f"agreement with oracle: fs {agree['fs_ok']}, hilbert {agree['hb_ok']}, "
          f"cover {agree['cover_ok']} (of {len(rows)})")
    print(f"nets with |HB| > m: {sum(r['hilbert'] > r['m'] for r in rows)}, "
          f"with rank < m: {sum(r['rank'] < r['m'] for r in rows)}")
    print(f"largest Hilbert coordinate: {max(r['max_coord'] for r in rows)}")
    print(f"oracle semiflows decomposed: {sum(r['box_semiflows'] for r in rows)}")
    for k in ("farkas_s", "hilbert_s", "oracle_s", "decompose_s"):
        print(f"{k[:-2]:>10}: total {sum(r[k] for r in rows):.2f}s, max {max(r[k] for r in rows):.3f}s")


if __name__ == "__main__":
    main()
