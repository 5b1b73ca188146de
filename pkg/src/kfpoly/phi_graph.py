"""The phi_i operators on S_{lambda,mu}, their graph, and the involution psi.

A vertex ``(w, a)`` with ``k_i = <w(lambda+rho), alpha_i^vee>`` is sent by
``phi_i`` to ``(s_i w, f_i^{-k_i} a)`` when ``k_i < 0`` and to
``(s_i w, e_i^{k_i} a)`` when ``k_i > 0``.  Every component of the resulting
graph has a single vertex with ``w = id`` (its source); psi matches the
remaining vertices along one label chosen at the source, and the fixed points
give a positive formula for K_{lambda,mu}(t).
"""
from __future__ import annotations

import json
from dataclasses import dataclass, field
from functools import cached_property

from .crystal import MINUS, Zero, build_word, e_power, f_power
from .errors import DomainError, Falsification, InvariantViolation
from .kostant import (
    SignedTerm,
    build_S,
    enumerate_partitions,
    evaluate,
    kf_alternating,
    render_tableau_notation,
)
from .poly import Poly
from .roots import Permutation, WeightVector, rho, weyl_act


def _weight(v, n, name):
    w = v if isinstance(v, WeightVector) else WeightVector(v)
    if len(w) != n:
        raise DomainError(f"{name} has {len(w)} coordinates, expected n={n}")
    return w


def k_values(w, lam):
    """``k_i = <w(lam+rho), alpha_i^vee>`` for i = 1..n-1; never zero for dominant lam."""
    lam = lam if isinstance(lam, WeightVector) else WeightVector(lam)
    v = weyl_act(w, lam + rho(len(lam))).coords
    ks = tuple(v[i] - v[i + 1] for i in range(len(v) - 1))
    if 0 in ks:
        raise InvariantViolation(f"k_i = 0 for w={w.label()}, lambda={lam.coords}; lambda is not dominant")
    return ks


def phi(v, i, lam):
    """``phi_i`` on a signed term; None stands for 0.

    A chain that stops on ``e_i(.) ~ 0`` counts as 0.
    """
    k = k_values(v.w, lam)[i - 1]
    if k < 0:
        beta = f_power(v.part, i, -k)
        if beta is None:
            return None
    else:
        beta = e_power(v.part, i, k)
        if isinstance(beta, Zero):
            return None
    return SignedTerm(v.w.left_simple(i), beta)


@dataclass
class Component:
    vertices: list
    source: SignedTerm
    labels: tuple  # arrow labels at the source, increasing
    edges: list = field(default_factory=list)

    @property
    def blocks(self):
        """Maximal runs of consecutive source labels, smallest first (ties: leftmost)."""
        runs = []
        for i in self.labels:
            if runs and runs[-1][-1] == i - 1:
                runs[-1].append(i)
            else:
                runs.append([i])
        return sorted((tuple(r) for r in runs), key=lambda r: (len(r), r[0]))

    @property
    def is_singleton(self):
        return len(self.vertices) == 1


class PhiGraph:
    """The graph induced on S_{lambda,mu} by the phi operators.

    Edges are kept in the f-direction, ``(v, i, v')`` with ``k_i(v) < 0``.
    ``phi_table`` caches ``phi_i`` at every vertex in both directions.
    """

    def __init__(self, lam, mu, n):
        self.n = n
        self.lam = _weight(lam, n, "lambda")
        self.mu = _weight(mu, n, "mu")
        if not self.lam.is_dominant():
            raise DomainError(f"lambda={self.lam.coords} is not dominant")
        self.vertices = build_S(self.lam, self.mu, n)
        self.index = {v: k for k, v in enumerate(self.vertices)}
        self.phi_table = {}
        self.edges = []
        self.anomalies = []
        r = rho(n)
        for v in self.vertices:
            for i in range(1, n):
                out = phi(v, i, self.lam)
                if out is not None:
                    target = weyl_act(out.w, self.lam + r) - (self.mu + r)
                    if WeightVector(evaluate(out.part, n)) != target:
                        raise InvariantViolation(f"phi_{i}({v}) = {out} has the wrong evaluation")
                    if out not in self.index:
                        raise InvariantViolation(f"phi_{i}({v}) = {out} left S_lambda,mu")
                self.phi_table[v, i] = out
        for v in self.vertices:
            for i in range(1, n):
                out = self.phi_table[v, i]
                if out is not None and self.phi_table[out, i] != v:
                    self.anomalies.append({"vertex": str(v), "label": i, "image": str(out),
                                           "back": str(self.phi_table[out, i])})
                if out is not None and self.k(v)[i - 1] < 0:
                    self.edges.append((v, i, out))

    def k(self, v):
        return k_values(v.w, self.lam)

    def phi(self, v, i):
        return self.phi_table[v, i]

    def instance(self):
        return {"lambda": list(self.lam.coords), "mu": list(self.mu.coords), "n": self.n}

    def _adjacency(self):
        adj = {v: [] for v in self.vertices}
        for a, i, b in self.edges:
            adj[a].append((i, b))
            adj[b].append((i, a))
        return adj

    @cached_property
    def components(self):
        return components(self)

    def component_of(self, v):
        return self._component_index[v]

    @cached_property
    def _component_index(self):
        return {v: c for c in self.components for v in c.vertices}


def build_graph(lam, mu, n):
    return PhiGraph(lam, mu, n)


def components(g):
    """Weakly connected components, each with its unique ``w = id`` source.

    Raises ``Falsification`` if a component has no source or more than one.
    """
    adj = g._adjacency()
    seen, out = set(), []
    for start in g.vertices:
        if start in seen:
            continue
        comp, stack = [], [start]
        seen.add(start)
        while stack:
            v = stack.pop()
            comp.append(v)
            for _, u in adj[v]:
                if u not in seen:
                    seen.add(u)
                    stack.append(u)
        comp.sort(key=g.index.get)
        sources = [v for v in comp if v.w.is_identity()]
        if len(sources) != 1:
            raise Falsification("component-source", g.instance(),
                                {"component": [str(v) for v in comp], "sources": len(sources)})
        src = sources[0]
        labels = tuple(i for i in range(1, g.n) if g.phi(src, i) is not None)
        members = set(comp)
        edges = [(a, i, b) for a, i, b in g.edges if a in members]
        out.append(Component(comp, src, labels, edges))
    return out


def is_broken_by_after(alpha, i, j, kvals):
    """True iff ``alpha`` is broken by phi_i after phi_j (a broken hexagon).

    Needs ``|i-j| = 1``, ``k_i, k_j > 0`` and both ``e_i^{k_i}``,
    ``e_j^{k_j}`` nonzero; otherwise False.  Broken means
    ``epsilon_i(e_j^{k_j} alpha) < k_i + k_j``.
    """
    if abs(i - j) != 1:
        return False
    ki, kj = kvals[i - 1], kvals[j - 1]
    if ki <= 0 or kj <= 0:
        return False
    if isinstance(e_power(alpha, i, ki), Zero):
        return False
    beta = e_power(alpha, j, kj)
    if isinstance(beta, Zero):
        return False
    return isinstance(e_power(beta, i, ki + kj), Zero)


def psi_label(comp, g):
    """The label i with ``psi = phi_i`` on ``comp``; None for singletons."""
    if comp.is_singleton:
        return None
    block = comp.blocks[0]
    alpha, kv = comp.source.part, g.k(comp.source)
    p, m = block[0], len(block)
    # relabelled index l corresponds to actual label p + l - 1
    if m == 1 or not is_broken_by_after(alpha, p, p + 1, kv):
        return p
    j = 2
    while j + 1 <= m and is_broken_by_after(alpha, p + j - 1, p + j, kv):
        j += 1
    return p + j - 1


def psi(v, g):
    comp = g.component_of(v)
    i = psi_label(comp, g)
    if i is None:
        return v
    out = g.phi(v, i)
    if out is None or out not in comp.vertices:
        raise Falsification("psi-undefined", g.instance(),
                            {"vertex": str(v), "label": i, "source": str(comp.source)})
    return out


def psi_map(g):
    """psi on every vertex, checked to be a sign-reversing, size-preserving involution."""
    table = {v: psi(v, g) for v in g.vertices}
    for v, u in table.items():
        bad = None
        if table[u] != v:
            bad = "not an involution"
        elif u != v and (u.sign == v.sign or len(u.part) != len(v.part)):
            bad = "not sign-reversing and size-preserving"
        if bad:
            raise Falsification("psi-involution", g.instance(),
                                {"vertex": str(v), "image": str(u), "problem": bad})
    return table


def fixed_points(g):
    """Fixed points of psi; cross-checked against the vertices killed by every phi_i."""
    table = psi_map(g)
    fixed = [v for v in g.vertices if table[v] == v]
    killed = [v for v in g.vertices
              if v.w.is_identity() and all(g.phi(v, i) is None for i in range(1, g.n))]
    for v in fixed:
        if not v.w.is_identity():
            raise Falsification("fixed-point-not-id", g.instance(), {"vertex": str(v)})
    if fixed != killed:
        raise Falsification("fixed-points-vs-phi-kill", g.instance(),
                            {"fixed": [str(v) for v in fixed], "killed": [str(v) for v in killed]})
    return fixed


def kf_positive(lam, mu, n, check=True):
    """Sum of ``t^size`` over the psi fixed points."""
    g = build_graph(lam, mu, n)
    result = Poly.from_degrees([len(v.part) for v in fixed_points(g)])
    if check:
        alt = kf_alternating(lam, mu, n)
        if alt != result:
            raise Falsification("kf-positive-mismatch", g.instance(),
                                {"positive": result.to_json(), "alternating": alt.to_json()})
    return result


def _concatenated_word(alpha, i):
    return build_word(alpha, i, True).entries + build_word(alpha, i, False).entries


def is_admissible(alpha, kvals, reading="unmatched"):
    """Admissibility of ``alpha`` for the positive integers ``kvals``.

    For each i, scan the unreduced word W_i^* W_i from the right keeping
    (#minus - #plus).  If it reaches ``k_i``, one of the ``k_i`` left-most
    minuses must sit under the simple root (i, i+1).

    ``reading="unmatched"`` takes the left-most minuses that survive the
    i-pairing of the whole concatenation; ``reading="all"`` takes the
    left-most minuses of the word regardless of pairing.
    """
    if any(k <= 0 for k in kvals):
        raise DomainError("admissibility needs all k_i > 0")
    for i, k in enumerate(kvals, 1):
        entries = _concatenated_word(alpha, i)
        excess, peak = 0, 0
        for s, _ in reversed(entries):
            excess += 1 if s == MINUS else -1
            peak = max(peak, excess)
        if peak < k:
            continue
        if reading == "all":
            minus_roots = [r for s, r in entries if s == MINUS]
        elif reading == "unmatched":
            minus_roots = _unmatched_minus_roots(entries)
        else:
            raise ValueError(f"unknown reading {reading!r}")
        if (i, i + 1) not in minus_roots[:k]:
            return False
    return True


def _unmatched_minus_roots(entries):
    open_minus = []
    for k, (s, r) in enumerate(entries):
        if s == MINUS:
            open_minus.append(r)
        elif open_minus:
            open_minus.pop()
    return open_minus


def kf_admissible(lam, mu, n, reading="unmatched", check=True):
    lam_w = _weight(lam, n, "lambda")
    mu_w = _weight(mu, n, "mu")
    if not lam_w.is_dominant():
        raise DomainError(f"lambda={lam_w.coords} is not dominant")
    kv = k_values(Permutation.identity(n), lam_w)
    parts = enumerate_partitions(lam_w - mu_w, n)
    result = Poly.from_degrees([len(a) for a in parts if is_admissible(a, kv, reading)])
    if check:
        alt = kf_alternating(lam_w, mu_w, n)
        if alt != result:
            raise Falsification("kf-admissible-mismatch",
                                {"lambda": list(lam_w.coords), "mu": list(mu_w.coords), "n": n},
                                {"admissible": result.to_json(), "alternating": alt.to_json()})
    return result


def _vertex_label(v):
    rows = render_tableau_notation(v.part).split("\n")
    notation = " / ".join(row or "-" for row in rows) if v.part else "empty"
    return f"{v.w.label()} | {notation} | {len(v.part)}"


def to_dot(g):
    """Graphviz source; vertices in S_{lambda,mu} order, psi partner as an attribute."""
    table = psi_map(g)
    lines = [f'digraph phi {{', f'  label="lambda=({g.lam}) mu=({g.mu}) n={g.n}";']
    for k, v in enumerate(g.vertices):
        partner = table[v]
        attrs = [f'label="{_vertex_label(v)}"', f'psi="v{g.index[partner]}"']
        if partner == v:
            attrs.append("shape=box")
        lines.append(f"  v{k} [{', '.join(attrs)}];")
    for a, i, b in g.edges:
        lines.append(f'  v{g.index[a]} -> v{g.index[b]} [label="{i}"];')
    lines.append("}")
    return "\n".join(lines) + "\n"


def to_json(g):
    table = psi_map(g)
    payload = {
        **g.instance(),
        "vertices": [{"id": k, "w": list(v.w.images), "w_label": v.w.label(),
                      "part": [[list(r), m] for r, m in v.part.items],
                      "size": len(v.part), "psi": g.index[table[v]]}
                     for k, v in enumerate(g.vertices)],
        "edges": [[g.index[a], i, g.index[b]] for a, i, b in g.edges],
    }
    return json.dumps(payload, sort_keys=True)
