"""Command-line front end.

Exit status: 0 success, 1 negative verdict from a checking subcommand
(check-gs, decompose, verify), 2 usage or input error.
"""

from __future__ import annotations

import argparse
import json
import re
import sys
from fractions import Fraction
from pathlib import Path

from . import behavior, bounds, classify, farkas, hilbert, natdecomp, oracle, rational
from .net import NetParseError, PetriNet, parse_net, render_net
from .vectors import NotASemiflowError, check_semiflow, is_semiflow, support, support_names


class InputError(Exception):
    pass


def _frac(x: Fraction) -> str:
    return f"{x.numerator}/{x.denominator}"


def _load_net(path: str) -> tuple[PetriNet, tuple[int, ...]]:
    try:
        text = Path(path).read_text(encoding="utf-8")
    except OSError as exc:
        raise InputError(f"cannot read {path}: {exc.strerror}") from None
    try:
        return parse_net(text)
    except NetParseError as exc:
        raise InputError(f"{path}: {exc}") from None


def _parse_vector(net: PetriNet, text: str) -> tuple[int, ...]:
    try:
        v = tuple(int(x) for x in text.split(","))
    except ValueError:
        raise InputError(f"bad vector {text!r}: expected comma-separated integers") from None
    if len(v) != net.d:
        raise InputError(f"vector {text!r} has {len(v)} entries, net has {net.d} places")
    return v


def _load_gens(net: PetriNet, path: str) -> tuple[list[str], list[tuple[int, ...]]]:
    """A JSON list of coordinate arrays, or an object mapping ids to arrays."""
    try:
        data = json.loads(Path(path).read_text(encoding="utf-8"))
    except OSError as exc:
        raise InputError(f"cannot read {path}: {exc.strerror}") from None
    except json.JSONDecodeError as exc:
        raise InputError(f"{path}: invalid JSON: {exc}") from None
    if isinstance(data, dict):
        ids, rows = list(data), list(data.values())
    elif isinstance(data, list):
        ids, rows = [str(i) for i in range(len(data))], data
    else:
        raise InputError(f"{path}: expected a list or an object of coordinate arrays")
    gens = []
    for i, row in zip(ids, rows):
        if (not isinstance(row, list) or len(row) != net.d
                or not all(isinstance(x, int) and not isinstance(x, bool) for x in row)):
            raise InputError(f"{path}: entry {i!r} is not an integer array of length {net.d}")
        gens.append(tuple(row))
    return ids, gens


def _semiflows(net: PetriNet, vecs) -> list[tuple[int, ...]]:
    try:
        return [check_semiflow(net, v) for v in vecs]
    except (NotASemiflowError, ValueError) as exc:
        raise InputError(str(exc)) from None


def _vector_block(net: PetriNet, vecs) -> dict:
    return {"semiflows": [list(v) for v in vecs],
            "supports": [support_names(net, support(v)) for v in vecs]}


def cmd_parse(args, net, m0):
    if args.format == "text":
        return 0, render_net(net, m0)
    return 0, {"places": list(net.places), "transitions": list(net.transitions),
               "pre": [list(r) for r in net.pre], "post": [list(r) for r in net.post],
               "marking": list(m0)}


def _generated(net: PetriNet, over: str, frontier_cap: int = hilbert.DEFAULT_FRONTIER_CAP):
    if over == "nat":
        return list(hilbert.minimal_semiflows(net, frontier_cap))
    fs = farkas.fundamental_set(net)
    if over == "qplus":
        return list(fs.members)
    return rational.extract_q_basis(fs.members)


def cmd_generate(args, net, m0):
    vecs = _generated(net, args.over, args.frontier_cap)
    return 0, {"over": args.over, **_vector_block(net, vecs)}


def cmd_classify(args, net, m0):
    rows = []
    vecs = [_parse_vector(net, v) for v in args.vectors]
    if args.vectors_file:
        vecs += _load_gens(net, args.vectors_file)[1]
    if not vecs:
        raise InputError("no vectors given")
    for v in vecs:
        if any(x < 0 for x in v):
            raise InputError(f"{list(v)} has negative entries")
        entry = {"vector": list(v), "semiflow": is_semiflow(net, v)}
        if entry["semiflow"] and any(v):
            entry.update(canonical=classify.is_canonical(v),
                         minimal=classify.is_minimal(net, v),
                         minimal_support=classify.has_minimal_support(net, v),
                         support=support_names(net, support(v)))
        rows.append(entry)
    return 0, {"vectors": rows}


def cmd_check_gs(args, net, m0):
    _, gens = _load_gens(net, args.set)
    gens = _semiflows(net, gens)
    report = classify.classify_generating_set(net, gens, args.over, paranoid=args.paranoid)
    out = report.as_dict()
    if report.witness is not None:
        out["witness_support"] = support_names(net, support(report.witness))
    return (0 if report.is_generating else 1), out


def cmd_decompose(args, net, m0):
    f = _semiflows(net, [_parse_vector(net, args.vector)])[0]
    if args.gens:
        ids, gens = _load_gens(net, args.gens)
        gens = _semiflows(net, gens)
    else:
        gens = _generated(net, args.over)
        ids = [str(i) for i in range(len(gens))]
    out = {"over": args.over, "vector": list(f), "ids": ids,
           "generators": [list(g) for g in gens]}
    if args.over == "nat":
        order = list(range(len(gens)))
        if args.order:
            wanted = args.order.split(",")
            unknown = [w for w in wanted if w not in ids]
            if unknown:
                raise InputError(f"unknown generator ids in --order: {', '.join(unknown)}")
            order = [ids.index(w) for w in wanted]
        seq = [gens[i] for i in order]
        if any(not any(g) for g in seq):
            raise InputError("zero vector in generator list")
        ks, rem = natdecomp.greedy_decompose(f, seq)
        witness = natdecomp.nat_decomposable(f, gens)
        out["greedy"] = {"order": [ids[i] for i in order], "coeffs": list(ks),
                         "remainder": list(rem)}
        out["coeffs"] = list(witness) if witness is not None else None
        return (0 if witness is not None else 1), out
    if args.over == "qplus":
        if args.gens:
            coeffs = rational.in_cone(f, gens)
        else:
            cover = rational.support_cover_decompose(f, farkas.fundamental_set(net))
            coeffs = [Fraction(0)] * len(gens)
            for i, c in zip(cover.indices, cover.coeffs):
                coeffs[i] = c
            out["covers_support"] = cover.covers
    else:
        coeffs = rational.solve_q(f, gens)
    out["coeffs"] = [_frac(c) for c in coeffs] if coeffs is not None else None
    return (0 if coeffs is not None else 1), out


def cmd_bound(args, net, m0):
    classes, refined = bounds.refined_bound(net)
    return 0, {"d": net.d, "sperner": bounds.sperner_bound(net.d), "refined": refined,
               "classes": [[net.places[p] for p in c] for c in classes]}


def cmd_verify(args, net, m0):
    if args.m0 is not None:
        m0 = _parse_vector(net, args.m0)
        if any(x < 0 for x in m0):
            raise InputError("initial marking must be non-negative")
    report = behavior.reach_report(net, m0, state_cap=args.state_cap)
    fs = farkas.fundamental_set(net)
    inv = behavior.invariant_report(net, m0, fs.members)
    out = {"m0": list(m0), **report.as_dict(),
           "invariants": [{"semiflow": list(g), "value": r} for g, r in zip(inv.generators, inv.rhs)]}
    ok = report.is_home_state is True and report.is_live is True
    return (0 if ok else 1), out


def cmd_oracle(args, net, m0):
    try:
        sf = oracle.brute_semiflows(net, args.bound)
        mins = oracle.brute_minimal_semiflows(net, args.bound)
        sups = oracle.brute_minimal_supports(net, args.bound)
    except oracle.BoxTooLargeError as exc:
        raise InputError(str(exc)) from None
    return 0, {"bound": args.bound, "semiflows": [list(v) for v in sf],
               "minimal": [list(v) for v in mins],
               "minimal_supports": [support_names(net, s) for s in sups],
               "touches_bound": [list(v) for v in oracle.touches_bound(mins, args.bound)]}


_FLAT_LIST = re.compile(r"\[\s*([^\[\]{}]*?)\s*\]")


def _dumps(payload) -> str:
    """Indented JSON with innermost arrays kept on one line."""
    return _FLAT_LIST.sub(lambda m: "[" + re.sub(r",\s+", ", ", m.group(1)) + "]",
                          json.dumps(payload, indent=2))


def _text(obj, indent: str = "") -> str:
    if isinstance(obj, str):
        return obj
    lines = []
    for k, v in obj.items():
        if isinstance(v, list) and v and isinstance(v[0], (list, dict)):
            lines.append(f"{indent}{k}:")
            for item in v:
                if isinstance(item, dict):
                    lines.append(f"{indent}  - " + ", ".join(f"{a}={_flat(b)}" for a, b in item.items()))
                else:
                    lines.append(f"{indent}  {_flat(item)}")
        elif isinstance(v, dict):
            lines.append(f"{indent}{k}:")
            lines.append(_text(v, indent + "  "))
        else:
            lines.append(f"{indent}{k}: {_flat(v)}")
    return "\n".join(lines) + ("\n" if not indent else "")


def _flat(v) -> str:
    if isinstance(v, list):
        return "(" + ",".join(_flat(x) for x in v) + ")"
    if v is None:
        return "-"
    if isinstance(v, bool):
        return "yes" if v else "no"
    return str(v)


def build_parser(dev: bool = False) -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="semiflows", description=__doc__.splitlines()[0])
    parser.add_argument("--format", choices=["json", "text"], default="json")
    parser.add_argument("--dev", action="store_true", help=argparse.SUPPRESS)
    sub = parser.add_subparsers(dest="command", required=True, metavar="COMMAND")

    def add(name, func, help_text, **kw):
        p = sub.add_parser(name, help=help_text, **kw)
        p.add_argument("net", help="net file")
        p.set_defaults(func=func)
        return p

    add("parse", cmd_parse, "parse a net file and echo it")

    p = add("generate", cmd_generate, "compute a generating set of semiflows")
    p.add_argument("--over", choices=["nat", "qplus", "q"], default="qplus")
    p.add_argument("--frontier-cap", type=int, default=hilbert.DEFAULT_FRONTIER_CAP)

    p = add("classify", cmd_classify, "canonical / minimal / minimal-support verdicts per vector")
    p.add_argument("vectors", nargs="*", help="comma-separated coordinates")
    p.add_argument("--vectors-file", help="JSON list of coordinate arrays")

    p = add("check-gs", cmd_check_gs, "classify a candidate generating set")
    p.add_argument("--over", choices=["nat", "qplus", "q"], required=True)
    p.add_argument("--set", required=True, help="JSON list (or id -> array object) of semiflows")
    p.add_argument("--paranoid", action="store_true", help="also run the remove-one minimality test")

    p = add("decompose", cmd_decompose, "decompose a semiflow over a generating set")
    p.add_argument("--over", choices=["nat", "qplus", "q"], required=True)
    p.add_argument("--vector", required=True, help="comma-separated coordinates")
    p.add_argument("--gens", help="JSON generators; default: the generated set for --over")
    p.add_argument("--order", help="comma-separated generator ids for the greedy pass (nat)")

    add("bound", cmd_bound, "Sperner bound and its refinement")

    p = add("verify", cmd_verify, "home-state and liveness by reachability")
    p.add_argument("--m0-from-file", action="store_true", default=True,
                   help="take the initial marking from the net file (default)")
    p.add_argument("--m0", help="override the initial marking, comma-separated")
    p.add_argument("--state-cap", type=int, default=behavior.DEFAULT_STATE_CAP)

    if dev:
        p = add("oracle", cmd_oracle, "brute-force reference enumeration")
        p.add_argument("--bound", type=int, required=True)
    return parser


def run(argv=None, stdout=None, stderr=None) -> int:
    stdout = stdout or sys.stdout
    stderr = stderr or sys.stderr
    argv = list(sys.argv[1:] if argv is None else argv)
    parser = build_parser(dev="--dev" in argv)
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return int(exc.code or 0)
    try:
        net, m0 = _load_net(args.net)
        code, payload = args.func(args, net, m0)
    except InputError as exc:
        print(f"semiflows: error: {exc}", file=stderr)
        return 2
    except hilbert.ResourceLimitError as exc:
        print(f"semiflows: resource limit: {exc}", file=stderr)
        return 2
    if args.format == "json":
        stdout.write(_dumps(payload) + "\n")
    else:
        stdout.write(_text(payload))
    return code


def main() -> None:
    sys.exit(run())
