"""Acceptance criteria, one test per criterion.

Each test records a PASS/FAIL line that pytest prints in a final
"acceptance criteria" section. Fixture expectations are the published
vectors and verdicts; the random-net suite compares against the
brute-force oracle. Every comparison is exact.
"""

import math
import random
from collections import Counter
from fractions import Fraction as Fr

import pytest

from semiflows.bounds import refined_bound, sperner_bound
from semiflows.behavior import reach_report
from semiflows.classify import Domain, canonical_witnesses, classify_generating_set
from semiflows.farkas import fundamental_set, minimal_supports
from semiflows.fixtures import (FIG1_F1, FIG1_F2, FIG1_G1, FIG1_G2, FIG1_G3, FIG2_F, FIG2_G1,
                                FIG2_G2, FIG2_G3, FIG2_G4, TELEPHONE_F1, TELEPHONE_F2,
                                TELEPHONE_F3)
from semiflows.hilbert import minimal_semiflows
from semiflows.natdecomp import greedy_decompose
from semiflows.oracle import brute_minimal_semiflows, brute_semiflows
from semiflows.randnets import RandomNetConfig, random_nets
from semiflows.rational import extract_q_basis, in_cone, rank, solve_q, support_cover_decompose
from semiflows.vectors import canonicalize, combine, content, is_semiflow, scale, support

NAT, QPOS, Q = Domain.NAT, Domain.QPOS, Domain.Q

RANDOM_SEED = 2024
RANDOM_COUNT = 200
ORACLE_BOUND = 6
COMBINATIONS_PER_NET = 50


def test_criterion_1_fig2(fig2, acceptance):
    gens = [FIG2_G1, FIG2_G2, FIG2_G3, FIG2_G4]
    expected = sorted(gens)
    checks = {
        "fs": list(fundamental_set(fig2).members) == expected,
        "hilbert": list(minimal_semiflows(fig2)) == expected,
        "greedy g1+g4": greedy_decompose(FIG2_F, gens) == ((1, 0, 0, 1), (0, 0, 0, 0)),
        "greedy g2+g3": greedy_decompose(FIG2_F, [FIG2_G2, FIG2_G3, FIG2_G1, FIG2_G4])
        == ((1, 1, 0, 0), (0, 0, 0, 0)),
        "g1 = g2+g3-g4": solve_q(FIG2_G1, [FIG2_G2, FIG2_G3, FIG2_G4]) == (1, 1, -1),
    }
    failed = [k for k, ok in checks.items() if not ok]
    acceptance("1 Fig-2 reproduction", not failed, ", ".join(failed) or "FS = HB = {g1..g4}")
    assert not failed


def test_criterion_2_fig1(fig1, acceptance):
    g = [FIG1_G1, FIG1_G2, FIG1_G3]
    hb = set(minimal_semiflows(fig1))
    nat = classify_generating_set(fig1, g, NAT)
    qpos = classify_generating_set(fig1, g, QPOS)
    checks = {
        "fs": set(fundamental_set(fig1).members) == set(g),
        "f1 cone": in_cone(FIG1_F1, g) == (Fr(2, 3), 0, Fr(1, 3)),
        "f2 cone": in_cone(FIG1_F2, [FIG1_G1, FIG1_G3]) == (Fr(1, 3), Fr(2, 3)),
        "G1 qplus": qpos.is_generating and qpos.is_minimal_gs,
        "G1 nat": not nat.is_generating and nat.witness == FIG1_F1,
        "hilbert superset": {FIG1_F1, FIG1_F2, FIG1_G1, FIG1_G2, FIG1_G3} <= hb,
        "hilbert = oracle@6": hb == set(brute_minimal_semiflows(fig1, ORACLE_BOUND)),
    }
    failed = [k for k, ok in checks.items() if not ok]
    acceptance("2 Fig-1 reproduction", not failed, ", ".join(failed) or f"|HB| = {len(hb)}")
    assert not failed


def test_criterion_3_telephone(telephone, acceptance):
    net, m0 = telephone
    _, bound = refined_bound(net)
    rep = reach_report(net, m0)
    checks = {
        "sperner(9) = 126": sperner_bound(9) == 126,
        "refined = 10": bound == 10,
        "fs = {f1,f2,f3}": set(fundamental_set(net).members) == {TELEPHONE_F1, TELEPHONE_F2,
                                                                  TELEPHONE_F3},
        "home state": rep.is_home_state is True,
        "live": rep.is_live is True,
        "states < 100": rep.states < 100,
    }
    failed = [k for k, ok in checks.items() if not ok]
    acceptance("3 telephone reproduction", not failed,
               ", ".join(failed) or f"{rep.states} states, home and live")
    assert not failed


# criterion 4: property suite over random nets

def _oracle_view(net, hb):
    """Box semiflows and box-minimal semiflows, in a box that holds ``hb``.

    The box bounds each place by ORACLE_BOUND, raised to the largest Hilbert
    coordinate there. It stays downward closed, so box-minimal vectors are
    truly minimal and must coincide with ``hb`` exactly.
    """
    bounds = tuple(max([ORACLE_BOUND] + [h[p] for h in hb]) for p in range(net.d))
    return bounds, brute_semiflows(net, bounds), brute_minimal_semiflows(net, bounds)


def _certifies(coeffs, members, f):
    """Non-negative coefficients reproducing f, checked in integers."""
    if any(c < 0 for c in coeffs):
        return False
    den = math.lcm(*(c.denominator for c in coeffs)) if coeffs else 1
    ints = [c.numerator * (den // c.denominator) for c in coeffs]
    return combine(ints, members, len(f)) == tuple(den * x for x in f)


def _candidate_sets(rng, hb, fs, semiflows):
    """Candidate generating sets: the canonical ones, padded, scaled and random."""
    fsm = list(fs.members)
    out = [list(hb), fsm, extract_q_basis(fsm), [scale(rng.randint(1, 3), g) for g in fsm]]
    extras = rng.sample(semiflows, min(3, len(semiflows)))
    out += [list(hb) + extras, fsm + extras]
    for _ in range(4):
        pool = list(hb) + extras
        out.append(rng.sample(pool, rng.randint(0, len(pool))))
    return out


@pytest.fixture(scope="module")
def random_suite():
    nets = random_nets(RANDOM_COUNT, RANDOM_SEED, RandomNetConfig())
    rng = random.Random(RANDOM_SEED)
    fails: Counter = Counter()
    stats: Counter = Counter()
    for net in nets:
        hb = minimal_semiflows(net)
        fs = fundamental_set(net)
        m = len(fs)
        bounds, box, box_min = _oracle_view(net, hb)
        stats["nets"] += 1
        stats["box enlarged"] += max(bounds) > ORACLE_BOUND
        stats["box semiflows"] += len(box)

        # fundamental set vs oracle minimal supports, one canonical member each
        box_supports = {support(v) for v in box}
        oracle_ms = {s for s in box_supports if not any(o < s for o in box_supports)}
        if set(fs.supports) != oracle_ms or set(minimal_supports(net)) != oracle_ms:
            fails["fs supports"] += 1
        for s, g in zip(fs.supports, fs.members):
            canon = {canonicalize(v)[0] for v in box if support(v) == s}
            if canon != {g}:
                fails["fs unique canonical"] += 1

        if set(hb) != set(box_min):
            fails["hilbert"] += 1

        for _ in range(COMBINATIONS_PER_NET if hb else 0):
            ks = [rng.randint(0, 3) for _ in hb]
            f = combine(ks, hb, net.d)
            if not any(f):
                continue
            mult, rem = greedy_decompose(f, hb)
            if any(rem) or combine(mult, hb, net.d) != f:
                fails["greedy"] += 1

        for f in box:
            dec = support_cover_decompose(f, fs)
            if not dec.covers or not _certifies(dec.coeffs, dec.members, f):
                fails["cover decompose"] += 1

        box_min_set = set(box_min)
        if any(content(h) != 1 for h in hb):
            fails["minimal => canonical"] += 1
        for v in box:
            if content(v) == 1 and support(v) in oracle_ms and v not in box_min_set:
                fails["canonical + minimal support => minimal"] += 1

        for gens in _candidate_sets(rng, hb, fs, box):
            for dom in (NAT, QPOS, Q):
                rep = classify_generating_set(net, gens, dom)
                stats["reports"] += 1
                if rep.is_least_gs != rep.is_minimal_gs:
                    fails["least = minimal"] += 1
                if rep.is_generating and dom is not Q:
                    stats["generating sets"] += 1
                    if not all(any(support(g) == s for g in gens) for s in oracle_ms):
                        fails["gs covers each minimal support"] += 1

        nat = classify_generating_set(net, hb, NAT)
        qpos = classify_generating_set(net, fs.members, QPOS)
        basis = extract_q_basis(fs.members)
        qrep = classify_generating_set(net, basis, Q)
        r = rank(fs.members)
        if not (nat.is_minimal_gs and len(hb) >= m and qpos.is_minimal_gs
                and qrep.is_minimal_gs and len(basis) == r <= m):
            fails["cardinalities"] += 1
    return fails, stats


SUITE_CHECKS = ["fs supports", "fs unique canonical", "hilbert",
                "greedy", "cover decompose", "minimal => canonical",
                "canonical + minimal support => minimal", "gs covers each minimal support",
                "least = minimal", "cardinalities"]


def test_criterion_4_random_suite(random_suite, acceptance):
    fails, stats = random_suite
    for name in SUITE_CHECKS:
        acceptance(f"4 {name}", fails[name] == 0, f"{fails[name]} failures")
    acceptance("4 random-net suite", not fails and stats["nets"] >= 200,
               f"{stats['nets']} nets, {stats['box semiflows']} oracle semiflows, "
               f"{stats['box enlarged']} with an enlarged box, "
               f"{stats['reports']} reports ({stats['generating sets']} generating over N/Q+), "
               f"{sum(fails.values())} failures")
    assert stats["nets"] >= 200
    assert not fails, dict(fails)


def test_criterion_5_witnesses(fig1, fig2, acceptance):
    k = 25
    many = canonical_witnesses(fig1, FIG1_F1, k)
    one = canonical_witnesses(fig1, FIG1_G1, k)
    also_one = canonical_witnesses(fig2, scale(3, FIG2_G4), k)
    ok = (len(many) == k == len(set(many))
          and all(support(v) == support(FIG1_F1) and content(v) == 1 for v in many)
          and all(is_semiflow(fig1, v) for v in many)
          and one == [FIG1_G1] and also_one == [FIG2_G4])
    acceptance("5 canonical witnesses", ok, f"{len(set(many))} distinct on a non-minimal support")
    assert ok


def _verdict(net, gens, dom):
    rep = classify_generating_set(net, gens, dom, paranoid=True)
    assert rep.is_least_gs == rep.is_minimal_gs
    return rep.is_generating, rep.is_minimal_gs


# (fixture, description, generating set, domain, expected (gs, mgs)), published verdicts
FIG4_CELLS = [
    # fs row: generating over Q+ and Q, not necessarily over N
    ("fig1", "fs gs over Q+", [FIG1_G1, FIG1_G2, FIG1_G3], QPOS, (True, True)),
    ("fig1", "fs gs over Q", [FIG1_G1, FIG1_G2, FIG1_G3], Q, (True, True)),
    ("fig1", "fs not gs over N", [FIG1_G1, FIG1_G2, FIG1_G3], NAT, (False, False)),
    ("fig2", "fs mgs over Q+", [FIG2_G1, FIG2_G2, FIG2_G3, FIG2_G4], QPOS, (True, True)),
    ("fig2", "fs not mgs over Q", [FIG2_G1, FIG2_G2, FIG2_G3, FIG2_G4], Q, (True, False)),
    # mgs over N is the Hilbert basis, unique
    ("fig2", "HB mgs over N", [FIG2_G1, FIG2_G2, FIG2_G3, FIG2_G4], NAT, (True, True)),
    ("fig1", "HB mgs over N", [FIG1_F1, FIG1_F2, FIG1_G1, FIG1_G2, FIG1_G3], NAT, (True, True)),
    ("fig2", "HB + f gs not mgs over N", [FIG2_G1, FIG2_G2, FIG2_G3, FIG2_G4, FIG2_F], NAT,
     (True, False)),
    # mgs over Q+ not unique: scaled fundamental members
    ("fig2", "k_i g_i mgs over Q+", [scale(2, FIG2_G1), FIG2_G2, scale(3, FIG2_G3), FIG2_G4],
     QPOS, (True, True)),
    ("fig2", "k_i g_i not gs over N", [scale(2, FIG2_G1), FIG2_G2, scale(3, FIG2_G3), FIG2_G4],
     NAT, (False, False)),
    # mgs over Q not unique, and need not generate over Q+
    ("fig2", "G3 mgs over Q", [FIG2_G1, FIG2_G2, FIG2_G3], Q, (True, True)),
    ("fig2", "{g2,g3,g4} mgs over Q", [FIG2_G2, FIG2_G3, FIG2_G4], Q, (True, True)),
    ("fig2", "G3 not gs over Q+", [FIG2_G1, FIG2_G2, FIG2_G3], QPOS, (False, False)),
    # lgs over Q members need not be minimal, canonical or of minimal support
    ("fig2", "{f,g1,g2} mgs over Q", [FIG2_F, FIG2_G1, FIG2_G2], Q, (True, True)),
    ("fig2", "{2f,g1,g2} mgs over Q", [scale(2, FIG2_F), FIG2_G1, FIG2_G2], Q, (True, True)),
    ("fig2", "{f,g1,g2} not gs over Q+", [FIG2_F, FIG2_G1, FIG2_G2], QPOS, (False, False)),
]


def test_criterion_6_summary_table(fig1, fig2, acceptance):
    nets = {"fig1": fig1, "fig2": fig2}
    wrong = [desc for name, desc, gens, dom, want in FIG4_CELLS
             if _verdict(nets[name], gens, dom) != want]
    # lgs over Q+: minimal supports, members need not be canonical or minimal
    scaled = scale(2, FIG2_G1)
    if not (scaled not in minimal_semiflows(fig2) and content(scaled) == 2):
        wrong.append("scaled lgs member over Q+")
    # lgs over N members are minimal, hence canonical
    if any(content(h) != 1 for h in list(minimal_semiflows(fig1)) + list(minimal_semiflows(fig2))):
        wrong.append("lgs over N canonical")
    # f in G_{Q} above has a non-minimal support and is not minimal
    if support(FIG2_F) in minimal_supports(fig2) or FIG2_F in minimal_semiflows(fig2):
        wrong.append("lgs over Q member f")
    acceptance("6 summary table", not wrong,
               ", ".join(wrong) or f"{len(FIG4_CELLS) + 3} cells agree")
    assert not wrong
