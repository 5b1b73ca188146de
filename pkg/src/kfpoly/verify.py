"""Exhaustive small-rank checks of the crystal axioms, braid relations,
graph structure and the agreement of the four Kostka-Foulkes formulas.

Every check returns a :class:`CheckReport`.  Deviations that match a known
exception shape are counted as classified; anything else is recorded as a
counterexample with a witness that :func:`replay` can re-run.
"""
from __future__ import annotations

import json
from collections import Counter
from dataclasses import dataclass, field
from itertools import combinations_with_replacement

from .charge import enumerate_ssyt, kf_charge
from .crystal import (
    Zero,
    e_op,
    e_plain,
    epsilon,
    epsilon_hat,
    f_op,
    varphi,
)
from .errors import Falsification
from .kostant import KostantPartition, kf_alternating
from .phi_graph import (
    build_graph,
    fixed_points,
    is_broken_by_after,
    kf_admissible,
    psi_map,
)
from .poly import Poly
from .roots import positive_roots

PASS, CLASSIFIED, COUNTEREXAMPLE = "pass", "exception-classified", "counterexample"


@dataclass
class CheckReport:
    check: str
    params: dict
    counts: Counter = field(default_factory=Counter)
    witnesses: list = field(default_factory=list)
    classified: Counter = field(default_factory=Counter)

    @property
    def status(self):
        if any(w["status"] == COUNTEREXAMPLE for w in self.witnesses):
            return COUNTEREXAMPLE
        return CLASSIFIED if self.classified else PASS

    @property
    def ok(self):
        return self.status != COUNTEREXAMPLE

    @property
    def counterexamples(self):
        return [w for w in self.witnesses if w["status"] == COUNTEREXAMPLE]

    def add(self, status, **witness):
        self.witnesses.append({"status": status, **witness})

    def merge(self, other):
        self.counts.update(other.counts)
        self.classified.update(other.classified)
        self.witnesses.extend(other.witnesses)
        return self

    def to_dict(self):
        return {"check": self.check, "params": self.params, "status": self.status,
                "counts": dict(sorted(self.counts.items())),
                "classified": dict(sorted(self.classified.items())),
                "witnesses": self.witnesses}

    def to_json(self):
        return json.dumps(self.to_dict(), sort_keys=True)

    def summary(self):
        return (f"{self.check:<24} {json.dumps(self.params, sort_keys=True):<40} "
                f"{self.status:<20} classified={sum(self.classified.values()):<5} "
                f"counterexamples={len(self.counterexamples)}")


def _part_json(a):
    return [[list(r), m] for r, m in a.items]


def _part_from_json(data):
    return KostantPartition({tuple(r): m for r, m in data})


def all_partitions(n, max_parts):
    roots = positive_roots(n)
    for k in range(max_parts + 1):
        for combo in combinations_with_replacement(roots, k):
            yield KostantPartition.from_roots(combo)


# --- crystal axioms ------------------------------------------------------

def _apply(op, x, word):
    """Apply ``op`` for the letters of ``word`` right to left; None on zero."""
    for i in reversed(word):
        if x is None:
            return None
        x = op(x, i)
    return x


def _simple_zero(x, word):
    """``e_word(x) ~ 0``: the tail is nonzero and the last step hits a simple root."""
    beta = _apply(e_plain, x, word[1:])
    return beta is not None and e_op(beta, word[0]) is Zero.SIMPLE


def _exception_shapes(x, i, j, di, dj):
    """Exception shapes present at x, each with whether its signature holds."""
    found = []
    if _simple_zero(x, (i, j)) and _simple_zero(x, (j, i)):
        found.append(("BD", di == 0 and dj == 0))
    for p, q, dp, dq in ((i, j, di, dj), (j, i, dj, di)):
        if _simple_zero(x, (p, q)) and _simple_zero(x, (p, q, q, p)):
            found.append(("BO1", dq == 1))
        if _simple_zero(x, (p, p, q)) and _simple_zero(x, (p, q, q, p)):
            found.append(("BO2", dp == 1 and dq == 1))
    return found


def stembridge_events(x, i, j):
    """Outcomes of every axiom instance at ``(x, i, j)`` as ``(axiom, outcome, detail)``.

    ``outcome`` is ``"ok"``, an exception name, or ``"violation"``.
    """
    events = []
    orth = abs(i - j) > 1

    def record(axiom, holds, detail=None):
        events.append((axiom, "ok" if holds else "violation", detail))

    # f side: S1'-S2' always, S3' when adjacent; e-side strings there use epsilon_hat
    y = f_op(x, i)
    if y is not None:
        d = varphi(y, j) - varphi(x, j)
        record("S1'", d in ((0,) if orth else (0, 1)), {"delta_varphi_j": d})
    if y is not None and varphi(y, j) == varphi(x, j) > 0:
        z = f_op(x, j)
        a, b = _apply(f_op, x, (i, j)), _apply(f_op, x, (j, i))
        record("S2'", a is not None and a == b and epsilon_hat(z, i) == epsilon_hat(x, i))
    if not orth:
        z = f_op(x, j)
        if (y is not None and z is not None and varphi(y, j) == varphi(x, j) + 1 > 1
                and varphi(z, i) == varphi(x, i) + 1 > 1):
            a, b = _apply(f_op, x, (j, i, i, j)), _apply(f_op, x, (i, j, j, i))
            holds = (a is not None and a == b
                     and epsilon_hat(z, i) == epsilon_hat(_apply(f_op, x, (j, j, i)), i)
                     and epsilon_hat(y, j) == epsilon_hat(_apply(f_op, x, (i, i, j)), j))
            record("S3'", holds)

    yi, yj = e_plain(x, i), e_plain(x, j)
    if orth:
        for name, eps in (("eps", epsilon), ("eps_hat", epsilon_hat)):
            if yi is not None:
                record(f"S1[{name}]", eps(yi, j) == eps(x, j))
            if yi is not None and yj is not None and eps(yi, j) == eps(x, j) > 0:
                a, b = _apply(e_plain, x, (i, j)), _apply(e_plain, x, (j, i))
                record(f"S2[{name}]", a is not None and a == b and varphi(yj, i) == varphi(x, i))
        return events

    if yi is not None:
        d = epsilon_hat(yi, j) - epsilon_hat(x, j)
        record("S1[eps_hat]", d in (0, 1), {"delta_eps_hat_j": d})
    if yi is None or yj is None:
        return events
    dj = epsilon_hat(yi, j) - epsilon_hat(x, j)
    di = epsilon_hat(yj, i) - epsilon_hat(x, i)
    if dj not in (0, 1) or di not in (0, 1):
        return events  # already reported as an S1 violation
    if dj == 0 or di == 0:
        a, b = _apply(e_plain, x, (i, j)), _apply(e_plain, x, (j, i))
        holds = a is not None and a == b
        if dj == 0:
            holds = holds and varphi(yj, i) == varphi(x, i)
        if di == 0:
            holds = holds and varphi(yi, j) == varphi(x, j)
        axiom = "S2"
    elif dj == 1 and di == 1:
        a, b = _apply(e_plain, x, (j, i, i, j)), _apply(e_plain, x, (i, j, j, i))
        top_j, top_i = _apply(e_plain, x, (j, j, i)), _apply(e_plain, x, (i, i, j))
        holds = (a is not None and a == b and top_i is not None and top_j is not None
                 and varphi(yj, i) == varphi(top_j, i) and varphi(yi, j) == varphi(top_i, j))
        axiom = "S3"
    if holds:
        events.append((axiom, "ok", None))
        return events
    shapes = _exception_shapes(x, i, j, di, dj)
    matched = [name for name, sig in shapes if sig]
    detail = {"delta_eps_hat": [di, dj], "shapes": [list(s) for s in shapes],
              "simple_zero": [list(w) for w in ((i, j), (j, i), (i, i, j), (j, j, i), (i, j, j, i), (j, i, i, j))
                              if _simple_zero(x, w)]}
    events.append((axiom, matched[0] if matched else "violation", detail))
    return events


def _stembridge_pairs(n):
    return [(i, j) for i in range(1, n) for j in range(1, n) if i != j]


def check_stembridge(n, max_parts):
    """All Stembridge axiom instances over partitions with at most ``max_parts`` parts."""
    rep = CheckReport("stembridge", {"n": n, "max_parts": max_parts})
    for x in all_partitions(n, max_parts):
        for i in range(1, n):
            rep.counts["S0"] += 1
            if e_plain(x, i) is None and epsilon(x, i) != 0:
                rep.add(COUNTEREXAMPLE, axiom="S0", partition=_part_json(x), indices=[i])
            if f_op(x, i) is None and varphi(x, i) != 0:
                rep.add(COUNTEREXAMPLE, axiom="S0'", partition=_part_json(x), indices=[i])
        for i, j in _stembridge_pairs(n):
            for axiom, outcome, detail in stembridge_events(x, i, j):
                rep.counts[axiom] += 1
                if outcome == "ok":
                    continue
                witness = {"axiom": axiom, "partition": _part_json(x), "indices": [i, j],
                           "observed": detail}
                if outcome == "violation":
                    rep.add(COUNTEREXAMPLE, **witness)
                else:
                    rep.classified[outcome] += 1
                    rep.add(CLASSIFIED, exception=outcome, **witness)
    return rep


# --- phi graph checks ----------------------------------------------------

def _instance(g):
    return g.instance()


def braid_events(g, v):
    """Braid-relation outcomes at one vertex: ``(kind, i, j, holds)``."""
    out = []
    ks = g.k(v)

    def ph(u, *word):
        for i in reversed(word):
            if u is None:
                return None
            u = g.phi(u, i)
        return u

    for i in range(1, g.n):
        for j in range(1, g.n):
            if i == j or ks[i - 1] * ks[j - 1] < 0:
                continue
            if g.phi(v, i) is None or g.phi(v, j) is None:
                continue
            if abs(i - j) > 1:
                if i < j:
                    a, b = ph(v, i, j), ph(v, j, i)
                    out.append(("square", i, j, a is not None and a == b))
                continue
            hexagon_ok = ph(v, j, i, j) is not None and ph(v, j, i, j) == ph(v, i, j, i)
            if ks[i - 1] < 0:
                if i < j:
                    out.append(("hexagon-f", i, j, hexagon_ok))
            elif is_broken_by_after(v.part, i, j, ks):
                holds = (ph(v, j, i, j) is None and ph(v, i, j, i) is None
                         and ph(v, i, j) is None and ph(v, j, i) is not None)
                out.append(("broken-hexagon", i, j, holds))
            elif not is_broken_by_after(v.part, j, i, ks):
                out.append(("hexagon-e", i, j, hexagon_ok))
    return out


def check_braid(lam, mu, n, graph=None):
    g = graph or build_graph(lam, mu, n)
    rep = CheckReport("braid", _instance(g))
    for v in g.vertices:
        for kind, i, j, holds in braid_events(g, v):
            rep.counts[kind] += 1
            if kind == "broken-hexagon" and holds:
                rep.classified[kind] += 1
            if not holds:
                rep.add(COUNTEREXAMPLE, kind=kind, vertex=_vertex_json(v), indices=[i, j])
    return rep


def _vertex_json(v):
    return {"w": list(v.w.images), "part": _part_json(v.part)}


def is_bd_base(x, i, j):
    """x carries a broken diamond for the pair (i, j)."""
    return (e_plain(x, i) is not None and e_plain(x, j) is not None
            and _simple_zero(x, (i, j)) and _simple_zero(x, (j, i)))


def hexagon_paths(alpha, i, ki, kj):
    """The two e-paths of the hexagon for (i, i+1) as lists of step labels (first step first)."""
    return ([i] * ki + [i + 1] * (ki + kj) + [i] * kj,
            [i + 1] * kj + [i] * (ki + kj) + [i + 1] * ki)


def check_conj_hexagon_bd(lam, mu, n, graph=None):
    """No step along the hexagon paths starts from a broken-diamond configuration."""
    g = graph or build_graph(lam, mu, n)
    rep = CheckReport("conj_hexagon_bd", _instance(g))
    for v in g.vertices:
        ks = g.k(v)
        for i in range(1, n - 1):
            ki, kj = ks[i - 1], ks[i]
            if ki <= 0 or kj <= 0 or g.phi(v, i) is None or g.phi(v, i + 1) is None:
                continue
            for path in hexagon_paths(v.part, i, ki, kj):
                rep.counts["paths"] += 1
                x, trace = v.part, []
                for step in path:
                    if is_bd_base(x, i, i + 1):
                        rep.add(COUNTEREXAMPLE, vertex=_vertex_json(v), indices=[i, i + 1],
                                path=path, trace=trace + [_part_json(x)])
                        break
                    trace.append(_part_json(x))
                    x = e_plain(x, step)
                    if x is None:
                        break
    return rep


def broken_pairs(g, v):
    ks = g.k(v)
    return [(i, j) for i in range(1, g.n) for j in (i - 1, i + 1)
            if 1 <= j < g.n and is_broken_by_after(v.part, i, j, ks)]


def check_conj_propagation(lam, mu, n, graph=None):
    """Broken hexagons anywhere in a component are witnessed at its source.

    Any partner j is accepted at the source; ``counts["same_j_misses"]``
    records how often the original j would not have worked.
    """
    g = graph or build_graph(lam, mu, n)
    rep = CheckReport("conj_propagation", _instance(g))
    for comp in g.components:
        at_source = set(broken_pairs(g, comp.source))
        source_i = {i for i, _ in at_source}
        for v in comp.vertices:
            for i, j in broken_pairs(g, v):
                rep.counts["broken"] += 1
                if i not in source_i:
                    rep.add(COUNTEREXAMPLE, vertex=_vertex_json(v), indices=[i, j],
                            source=_vertex_json(comp.source),
                            component=[_vertex_json(u) for u in comp.vertices])
                elif (i, j) not in at_source:
                    rep.counts["same_j_misses"] += 1
    return rep


def check_cayley(g):
    """Component structure against the Cayley graph of S_n."""
    rep = CheckReport("cayley", _instance(g))
    try:
        comps = g.components
    except Falsification as exc:
        rep.add(COUNTEREXAMPLE, kind="source", detail=exc.report["witness"])
        return rep
    for comp in comps:
        rep.counts["components"] += 1
        ws = [v.w for v in comp.vertices]
        wset = set(ws)
        src = _vertex_json(comp.source)
        if len(wset) != len(ws):
            rep.add(COUNTEREXAMPLE, kind="repeated-w", source=src)
        for w in ws:
            for i in range(1, g.n):
                if w.has_left_descent(i) and w.left_simple(i) not in wset:
                    rep.add(COUNTEREXAMPLE, kind="not-downward-closed", source=src,
                            w=list(w.images), missing=list(w.left_simple(i).images))
            if not set(w.reduced_word) <= set(comp.labels):
                rep.add(COUNTEREXAMPLE, kind="outside-parabolic", source=src, w=list(w.images),
                        labels=list(comp.labels))
        for a, i, b in comp.edges:
            rep.counts["edges"] += 1
            if b.w != a.w.left_simple(i):
                rep.add(COUNTEREXAMPLE, kind="not-cayley-edge", source=src, edge=[_vertex_json(a), i, _vertex_json(b)])
            if i not in comp.labels:
                rep.add(COUNTEREXAMPLE, kind="label-not-at-source", source=src, label=i,
                        labels=list(comp.labels))
    return rep


def check_psi(g):
    """psi is a sign-reversing involution whose fixed points are id-vertices."""
    rep = CheckReport("psi", _instance(g))
    try:
        table = psi_map(g)
        fixed = fixed_points(g)
    except Falsification as exc:
        rep.add(COUNTEREXAMPLE, kind=exc.report["kind"], detail=exc.report["witness"])
        return rep
    rep.counts["vertices"] = len(table)
    rep.counts["fixed"] = len(fixed)
    for a in g.anomalies:
        rep.add(COUNTEREXAMPLE, kind="phi-not-inverse", detail=a)
    return rep


# --- sweeps --------------------------------------------------------------

def partitions_with_parts(total, parts, largest=None):
    """Partitions of ``total`` as weakly decreasing ``parts``-tuples, padded with zeros."""
    largest = total if largest is None else largest
    if parts == 0:
        if total == 0:
            yield ()
        return
    for first in range(min(total, largest), -1, -1):
        for rest in partitions_with_parts(total - first, parts - 1, first):
            yield (first,) + rest


def dominates(lam, mu):
    a = b = 0
    for x, y in zip(lam, mu):
        a, b = a + x, b + y
        if a < b:
            return False
    return a == b


def dominant_pairs(n, size_bound):
    """``(lam, mu)`` partitions of the same size <= size_bound with lam - mu in the root cone."""
    for s in range(size_bound + 1):
        shapes = list(partitions_with_parts(s, n))
        for lam in shapes:
            for mu in shapes:
                if dominates(lam, mu):
                    yield lam, mu


def method_table(lam, mu, n):
    """Every formula for K_{lam,mu}(t), keyed by method name."""
    return {
        "alternating": kf_alternating(lam, mu, n),
        "involution": Poly.from_degrees([len(v.part) for v in fixed_points(build_graph(lam, mu, n))]),
        "admissible": kf_admissible(lam, mu, n, check=False),
        "charge": kf_charge(lam, mu),
    }


def sweep_consistency(n, size_bound):
    rep = CheckReport("sweep_consistency", {"n": n, "size_bound": size_bound})
    for lam, mu in dominant_pairs(n, size_bound):
        rep.counts["instances"] += 1
        inst = {"lambda": list(lam), "mu": list(mu), "n": n}
        try:
            table = method_table(lam, mu, n)
        except Falsification as exc:
            rep.add(COUNTEREXAMPLE, instance=inst, kind=exc.report["kind"], detail=exc.report["witness"])
            continue
        kostka = len(enumerate_ssyt(lam, mu))
        if len(set(table.values())) != 1 or table["alternating"](1) != kostka:
            rep.add(COUNTEREXAMPLE, instance=inst, kostka=kostka,
                    values={k: p.to_json() for k, p in table.items()})
        if not table["alternating"].is_nonnegative():
            rep.add(COUNTEREXAMPLE, instance=inst, kind="negative-coefficient",
                    values={"alternating": table["alternating"].to_json()})
    return rep


GRAPH_CHECKS = {
    "braid": lambda g: check_braid(None, None, g.n, graph=g),
    "conj_hexagon_bd": lambda g: check_conj_hexagon_bd(None, None, g.n, graph=g),
    "conj_propagation": lambda g: check_conj_propagation(None, None, g.n, graph=g),
    "cayley": check_cayley,
    "psi": check_psi,
}


def sweep_instances(n_values=(2, 3, 4), size_bound=6):
    """``(lam, mu, n)`` for every dominant pair in range, in a fixed order."""
    return [(lam, mu, n) for n in n_values for lam, mu in dominant_pairs(n, size_bound)]


def sweep_graph_checks(names, n_values=(2, 3, 4), size_bound=6, instances=None):
    """Run the named per-instance graph checks over every dominant pair; one merged report each.

    ``instances`` overrides the range with an explicit list of ``(lam, mu, n)``.
    """
    params = {"n": list(n_values), "size_bound": size_bound}
    if instances is None:
        instances = sweep_instances(n_values, size_bound)
    else:
        params["instances"] = len(instances)
    merged = {name: CheckReport(name, dict(params)) for name in names}
    for lam, mu, n in instances:
        g = build_graph(lam, mu, n)
        for name in names:
            sub = GRAPH_CHECKS[name](g)
            for w in sub.witnesses:
                w.setdefault("instance", g.instance())
            merged[name].counts["instances"] += 1
            merged[name].merge(sub)
    return merged


def replay(check, witness, params=None):
    """Re-run the check that produced ``witness`` on that witness alone.

    Returns the status the witness would be given now.
    """
    if check == "stembridge":
        x = _part_from_json(witness["partition"])
        i, j = witness["indices"]
        for axiom, outcome, _ in stembridge_events(x, i, j):
            if axiom == witness["axiom"] and outcome != "ok":
                return COUNTEREXAMPLE if outcome == "violation" else CLASSIFIED
        return PASS
    inst = witness.get("instance") or params
    g = build_graph(inst["lambda"], inst["mu"], inst["n"])
    if check in GRAPH_CHECKS:
        return GRAPH_CHECKS[check](g).status
    if check == "sweep_consistency":
        table = method_table(inst["lambda"], inst["mu"], inst["n"])
        return PASS if len(set(table.values())) == 1 else COUNTEREXAMPLE
    raise ValueError(f"unknown check {check!r}")
