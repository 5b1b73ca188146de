"""Kostant partitions, the t-analogue partition function and the alternating formula."""
from __future__ import annotations

from dataclasses import dataclass
from functools import lru_cache

from .errors import DomainError
from .poly import Poly
from .roots import (
    Permutation,
    WeightVector,
    check_root,
    enumerate_weyl,
    positive_roots,
    rho,
    weyl_act,
)


class KostantPartition:
    """A finite multiset of positive roots.

    Stored as a sorted tuple of ``((i, j), multiplicity)`` pairs with positive
    multiplicities, so instances are hashable and compare as multisets.
    """

    __slots__ = ("items", "_hash")

    def __init__(self, mult=None):
        if mult is None:
            mult = {}
        elif not isinstance(mult, dict):
            mult = dict(mult)
        items = []
        for root, m in mult.items():
            if m < 0:
                raise DomainError(f"negative multiplicity {m} for root {root}")
            if m:
                items.append((check_root(tuple(root)), int(m)))
        items.sort()
        self.items = tuple(items)
        self._hash = hash(self.items)

    @classmethod
    def from_roots(cls, roots):
        mult = {}
        for r in roots:
            r = tuple(r)
            mult[r] = mult.get(r, 0) + 1
        return cls(mult)

    def mult(self, root):
        for r, m in self.items:
            if r == root:
                return m
        return 0

    def roots(self):
        """Roots with repetition, in lexicographic order."""
        return [r for r, m in self.items for _ in range(m)]

    def as_dict(self):
        return dict(self.items)

    def add(self, root, k=1):
        d = self.as_dict()
        d[root] = d.get(root, 0) + k
        return KostantPartition(d)

    def replace(self, old, new):
        """Swap one copy of ``old`` for one copy of ``new``."""
        d = self.as_dict()
        if d.get(old, 0) < 1:
            raise DomainError(f"root {old} not present in {self}")
        d[old] -= 1
        d[new] = d.get(new, 0) + 1
        return KostantPartition(d)

    def __len__(self):
        return sum(m for _, m in self.items)

    def __bool__(self):
        return bool(self.items)

    def __eq__(self, other):
        return isinstance(other, KostantPartition) and self.items == other.items

    def __hash__(self):
        return self._hash

    def __lt__(self, other):
        return self.items < other.items

    def __repr__(self):
        return f"KostantPartition({dict(self.items)})"

    def __str__(self):
        if not self.items:
            return "0"
        return " + ".join(f"{m if m > 1 else ''}({i},{j})" for (i, j), m in self.items)

    def max_index(self):
        return max((j for (_, j), _ in self.items), default=0)


def evaluate(a, n=None):
    """Sum of the roots of ``a`` as a coordinate tuple summing to zero."""
    n = n or max(a.max_index(), 2)
    out = [0] * n
    for (i, j), m in a.items:
        out[i - 1] += m
        out[j - 1] -= m
    return tuple(out)


def size(a):
    return len(a)


def _gamma_rep(gamma, n):
    if isinstance(gamma, WeightVector):
        rep = gamma.root_lattice_rep()
    else:
        rep = tuple(gamma)
        if sum(rep) != 0:
            rep = WeightVector(rep).root_lattice_rep()
    if rep is not None and len(rep) != n:
        raise DomainError(f"weight {tuple(gamma)} has length {len(rep)}, expected {n}")
    return rep


@lru_cache(maxsize=None)
def _partitions_of(rep, n):
    roots = positive_roots(n)
    # multiplicity vectors in lexicographic root order
    found = []
    mult = [0] * len(roots)
    row_start = {i: roots.index((i, i + 1)) for i in range(1, n)}

    def compositions(total, parts):
        if parts == 1:
            yield (total,)
            return
        for first in range(total + 1):
            for rest in compositions(total - first, parts - 1):
                yield (first,) + rest

    def descend(i, remaining):
        if i == n:
            if remaining[n - 1] == 0:
                found.append(tuple(mult))
            return
        need = remaining[i - 1]
        if need < 0:
            return
        start = row_start[i]
        for comp in compositions(need, n - i):
            nxt = list(remaining)
            nxt[i - 1] = 0
            for offset, m in enumerate(comp):
                nxt[i + offset] += m
            # what is left must stay in the nonnegative root cone
            acc, ok = 0, True
            for c in nxt[i:]:
                acc += c
                if acc < 0:
                    ok = False
                    break
            if not ok:
                continue
            mult[start:start + n - i] = comp
            descend(i + 1, nxt)
        mult[start:start + n - i] = [0] * (n - i)

    descend(1, list(rep))
    found.sort()
    return tuple(KostantPartition(dict(zip(roots, vec))) for vec in found)


def enumerate_partitions(gamma, n):
    """All Kostant partitions evaluating to ``gamma``.

    Returns an empty list when ``gamma`` is outside the nonnegative root cone.
    Ordered lexicographically by multiplicity vector in root order.
    """
    rep = _gamma_rep(gamma, n)
    if rep is None:
        return []
    return list(_partitions_of(rep, n))


def p_t(gamma, n):
    """Kostant's t-partition function: coefficient of t^l counts partitions into l roots."""
    return Poly.from_degrees([len(a) for a in enumerate_partitions(gamma, n)])


def _as_weight(v, n, name):
    w = v if isinstance(v, WeightVector) else WeightVector(v)
    if len(w) != n:
        raise DomainError(f"{name} has {len(w)} coordinates, expected n={n}")
    return w


def _shifted_target(w, lam, mu, n):
    r = rho(n)
    return weyl_act(w, lam + r) - (mu + r)


def kf_alternating(lam, mu, n):
    """Lusztig's t-analogue as the signed sum over S_n of ``P_t(w(lam+rho) - (mu+rho))``."""
    lam = _as_weight(lam, n, "lambda")
    mu = _as_weight(mu, n, "mu")
    if not lam.is_dominant():
        raise DomainError(f"lambda={lam.coords} is not dominant")
    total = Poly()
    for w in enumerate_weyl(n):
        total = total + p_t(_shifted_target(w, lam, mu, n), n).scale(w.sign())
    return total


@dataclass(frozen=True, order=True)
class SignedTerm:
    """A pair ``(w, part)`` in S_{lambda,mu}."""

    w: Permutation
    part: KostantPartition

    @property
    def sign(self):
        return self.w.sign()

    def __str__(self):
        return f"[{self.w.label()}, {self.part}]"


def build_S(lam, mu, n):
    """All ``(w, a)`` with ``evaluate(a) = w(lam+rho) - (mu+rho)``, grouped by w."""
    lam = _as_weight(lam, n, "lambda")
    mu = _as_weight(mu, n, "mu")
    if not lam.is_dominant():
        raise DomainError(f"lambda={lam.coords} is not dominant")
    terms = []
    for w in enumerate_weyl(n):
        for a in enumerate_partitions(_shifted_target(w, lam, mu, n), n):
            terms.append(SignedTerm(w, a))
    return terms


def signed_size_sum(terms):
    return Poly.from_degrees([len(t.part) for t in terms], [t.sign for t in terms])


def render_tableau_notation(a, n=None):
    """Row i lists the second coordinates j of the roots (i, j), weakly increasing.

    Returns one line per row from 1 to the last nonempty row, e.g. ``"3\\n4"``
    for (1,3)+(2,4).  Empty partition renders as the empty string.
    """
    rows = {}
    for (i, j) in a.roots():
        rows.setdefault(i, []).append(j)
    if not rows:
        return ""
    last = max(rows) if n is None else n - 1
    return "\n".join(" ".join(map(str, rows.get(i, []))) for i in range(1, last + 1))
