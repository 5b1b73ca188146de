"""``kf`` command line: compute, graph, verify, sweep.

Exit status is 0 on success, 1 on a usage error and 2 when a check turns up
a counterexample (or a formula disagreement).
"""
from __future__ import annotations

import argparse
import json
import random
import sys

from .charge import enumerate_ssyt, kf_charge
from .errors import DomainError, Falsification, RankError
from .kostant import kf_alternating
from .phi_graph import build_graph, kf_admissible, kf_positive, to_dot, to_json
from .roots import WeightVector
from .verify import (
    check_stembridge,
    method_table,
    sweep_graph_checks,
    sweep_instances,
)

EXIT_OK, EXIT_USAGE, EXIT_FALSIFIED = 0, 1, 2

METHODS = {
    "alternating": lambda lam, mu, n: kf_alternating(lam, mu, n),
    "involution": lambda lam, mu, n: kf_positive(lam, mu, n, check=False),
    "admissible": lambda lam, mu, n: kf_admissible(lam, mu, n, check=False),
    "charge": lambda lam, mu, n: kf_charge(lam, mu),
}

VERIFY_TARGETS = {
    "braid": ["braid"],
    "conjectures": ["conj_hexagon_bd", "conj_propagation"],
    "cayley": ["cayley"],
    "psi": ["psi"],
}


class UsageError(Exception):
    pass


class _Parser(argparse.ArgumentParser):
    def error(self, message):
        raise UsageError(message)


def _weights(args, need_partition_mu=False):
    try:
        lam = WeightVector.parse(args.lam)
        mu = WeightVector.parse(args.mu)
    except DomainError as exc:
        raise UsageError(str(exc)) from None
    for name, v in (("--lambda", lam), ("--mu", mu)):
        if len(v) != args.n:
            raise UsageError(f"{name} has {len(v)} entries, expected --n {args.n}")
    if not lam.is_dominant():
        raise UsageError(f"--lambda {lam} is not dominant")
    if sum(lam.coords) != sum(mu.coords):
        raise UsageError(f"size mismatch: |lambda|={sum(lam.coords)} but |mu|={sum(mu.coords)}")
    if need_partition_mu and (not mu.is_dominant() or min(mu.coords) < 0):
        raise UsageError(f"the charge method needs mu to be a partition, got {mu}")
    return lam.coords, mu.coords


def cmd_compute(args, out):
    lam, mu = _weights(args, need_partition_mu=args.method == "charge")
    if min(lam) < 0 and args.method == "charge":
        raise UsageError("the charge method needs lambda to be a partition")
    poly = METHODS[args.method](lam, mu, args.n)
    if args.format == "json":
        out.write(json.dumps({"lambda": list(lam), "mu": list(mu), "n": args.n,
                              "method": args.method, "coeffs": poly.to_json()}) + "\n")
    else:
        out.write(f"{poly}\n")
    return EXIT_OK


def cmd_graph(args, out):
    lam, mu = _weights(args)
    g = build_graph(lam, mu, args.n)
    out.write(to_json(g) + "\n" if args.format == "json" else to_dot(g))
    return EXIT_OK


def _instances(args):
    insts = sweep_instances(range(2, args.n + 1), args.max_size)
    if args.sample is not None:
        rng = random.Random(args.seed)
        keep = sorted(rng.sample(range(len(insts)), min(args.sample, len(insts))))
        insts = [insts[k] for k in keep]
    return insts


def cmd_verify(args, out):
    reports = []
    if args.target in ("stembridge", "all"):
        for n in range(2, args.n + 1):
            reports.append(check_stembridge(n, args.max_parts))
    names = [c for t, cs in VERIFY_TARGETS.items() if args.target in (t, "all") for c in cs]
    if names:
        merged = sweep_graph_checks(names, tuple(range(2, args.n + 1)), args.max_size,
                                    instances=_instances(args) if args.sample is not None else None)
        reports.extend(merged[name] for name in names)
    for rep in reports:
        out.write(rep.to_json() + "\n")
    out.write("\n")
    for rep in reports:
        out.write(rep.summary() + "\n")
    return EXIT_OK if all(rep.ok for rep in reports) else EXIT_FALSIFIED


def cmd_sweep(args, out):
    """Consistency matrix: one row per instance, one column per method."""
    rows, bad = [], 0
    for lam, mu, n in _instances(args):
        table = method_table(lam, mu, n)
        kostka = len(enumerate_ssyt(lam, mu))
        agree = len(set(table.values())) == 1 and table["alternating"](1) == kostka
        bad += not agree
        rows.append((lam, mu, n, table, kostka, agree))
    if args.format == "json":
        for lam, mu, n, table, kostka, agree in rows:
            out.write(json.dumps({"lambda": list(lam), "mu": list(mu), "n": n,
                                  "methods": {k: p.to_json() for k, p in table.items()},
                                  "kostka": kostka, "agree": agree}) + "\n")
    else:
        out.write(f"{'n':<3}{'lambda':<16}{'mu':<16}{'kostka':<8}{'agree':<7}K(t)\n")
        for lam, mu, n, table, kostka, agree in rows:
            out.write(f"{n:<3}{','.join(map(str, lam)):<16}{','.join(map(str, mu)):<16}"
                      f"{kostka:<8}{'yes' if agree else 'NO':<7}{table['alternating']}\n")
            if not agree:
                for k, p in table.items():
                    out.write(f"    {k}: {p}\n")
        out.write(f"{len(rows)} instances, {bad} disagreements\n")
    return EXIT_OK if bad == 0 else EXIT_FALSIFIED


def build_parser():
    parser = _Parser(prog="kf", description="Kostka-Foulkes polynomials in type A.")
    sub = parser.add_subparsers(dest="command", required=True, parser_class=_Parser)

    def instance_args(p, fmt_choices, fmt_default):
        p.add_argument("--n", type=int, required=True, help="rank parameter (S_n acts)")
        p.add_argument("--lambda", dest="lam", required=True, help="comma separated, e.g. 2,2,0,0")
        p.add_argument("--mu", required=True, help="comma separated, same length as lambda")
        p.add_argument("--format", choices=fmt_choices, default=fmt_default)

    def range_args(p):
        p.add_argument("--n", type=int, default=4, help="largest n to sweep (from 2)")
        p.add_argument("--max-size", type=int, default=6, help="bound on |lambda|")
        p.add_argument("--sample", type=int, help="check only this many random instances")
        p.add_argument("--seed", type=int, default=0, help="seed for --sample")

    p = sub.add_parser("compute", help="compute K_{lambda,mu}(t)")
    instance_args(p, ["text", "json"], "text")
    p.add_argument("--method", choices=sorted(METHODS), default="alternating")
    p.set_defaults(func=cmd_compute)

    p = sub.add_parser("graph", help="export the phi-graph")
    instance_args(p, ["dot", "json"], "dot")
    p.set_defaults(func=cmd_graph)

    p = sub.add_parser("verify", help="run verification checks")
    p.add_argument("target", choices=["stembridge", *VERIFY_TARGETS, "all"])
    range_args(p)
    p.add_argument("--max-parts", type=int, default=5, help="partition size bound for stembridge")
    p.set_defaults(func=cmd_verify)

    p = sub.add_parser("sweep", help="compare all methods over a range")
    range_args(p)
    p.add_argument("--format", choices=["text", "json"], default="text")
    p.set_defaults(func=cmd_sweep)
    return parser


def run(argv, out=None, err=None):
    """Run one invocation; returns the exit status."""
    out = out or sys.stdout
    err = err or sys.stderr
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
        if getattr(args, "n", 2) < 2:
            raise UsageError("--n must be at least 2")
        return args.func(args, out)
    except UsageError as exc:
        err.write(f"kf: error: {exc}\n")
        return EXIT_USAGE
    except (DomainError, RankError) as exc:
        err.write(f"kf: error: {exc}\n")
        return EXIT_USAGE
    except Falsification as exc:
        out.write(json.dumps(exc.report, sort_keys=True, default=str) + "\n")
        err.write(f"kf: falsification: {exc.report['kind']}\n")
        return EXIT_FALSIFIED


def main(argv=None):
    status = run(sys.argv[1:] if argv is None else argv)
    sys.exit(status)
