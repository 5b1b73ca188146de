"""Sign words on Kostant partitions and the crystal operators built from them.

``apply_tilde`` gives the B(inf) / B*(inf) operators.  ``f_op``, ``e_op`` and
``e_hat`` are the size-preserving hybrids obtained by reading the two reduced
words side by side (starred word first).
"""
from __future__ import annotations

import enum
from dataclasses import dataclass
from functools import lru_cache

from .errors import RankError
from .kostant import KostantPartition, evaluate
from .roots import coroot_pairing

PLUS, MINUS = "+", "-"


class Zero(enum.Enum):
    """Vanishing outcomes of ``e_op``.

    ``PLAIN`` is an honest zero.  ``SIMPLE`` ("~0") means the operator would
    have to remove the simple root (i, i+1); ``e_hat`` is nonzero there.
    """

    PLAIN = "0"
    SIMPLE = "~0"


@dataclass(frozen=True)
class SignWord:
    entries: tuple  # ((sign, root), ...) left to right
    matched: frozenset = frozenset()

    def unmatched(self):
        return [k for k in range(len(self.entries)) if k not in self.matched]

    def signs(self, only_unmatched=True):
        keep = self.unmatched() if only_unmatched else range(len(self.entries))
        return "".join(self.entries[k][0] for k in keep)

    def __str__(self):
        toks = []
        for k, (s, (i, j)) in enumerate(self.entries):
            tok = f"{s}({i},{j})"
            toks.append(f"[{tok}]" if k in self.matched else tok)
        return " ".join(toks)


@dataclass(frozen=True)
class StringData:
    a: int
    b: int
    a_star: int
    b_star: int

    @property
    def u(self):
        if self.b_star < self.a:
            return self.a_star + self.a - self.b_star
        return self.a_star

    @property
    def v(self):
        if self.b_star < self.a:
            return self.b
        return self.b_star - self.a + self.b


def _check(i, n=None):
    if i < 1 or (n is not None and i > n - 1):
        raise RankError(f"simple index {i} out of range")


def build_word(a, i, starred=False):
    """The unreduced word W_i (or W_i^*) of ``a``."""
    _check(i)
    roots = a.roots()
    entries = []
    if not starred:
        roots.sort(key=lambda r: (-r[0], r[1]))
        for r in roots:
            if r[1] == i:
                entries.append((PLUS, r))
            elif r[1] == i + 1:
                entries.append((MINUS, r))
    else:
        roots.sort(key=lambda r: (r[1], -r[0]))
        for r in roots:
            if r[0] == i + 1:
                entries.append((PLUS, r))
            elif r[0] == i:
                entries.append((MINUS, r))
    return SignWord(tuple(entries))


def reduce_word(word):
    """Cancel ``-+`` pairs, allowing already-cancelled symbols in between.

    A left-to-right scan: each ``+`` cancels the nearest open ``-`` to its left.
    """
    open_minus, matched = [], set(word.matched)
    for k, (s, _) in enumerate(word.entries):
        if k in matched:
            continue
        if s == MINUS:
            open_minus.append(k)
        elif open_minus:
            matched.add(open_minus.pop())
            matched.add(k)
    return SignWord(word.entries, frozenset(matched))


@lru_cache(maxsize=None)
def reduced_words(a, i):
    """``(W_i^{*,r}, W_i^r)``."""
    return reduce_word(build_word(a, i, True)), reduce_word(build_word(a, i, False))


@lru_cache(maxsize=None)
def string_data(a, i):
    star, plain = reduced_words(a, i)
    ss, ps = star.signs(), plain.signs()
    return StringData(a=ps.count(PLUS), b=ps.count(MINUS),
                      a_star=ss.count(PLUS), b_star=ss.count(MINUS))


def _rightmost_plus(word):
    ks = [k for k in word.unmatched() if word.entries[k][0] == PLUS]
    return word.entries[ks[-1]][1] if ks else None


def _leftmost_minus(word):
    ks = [k for k in word.unmatched() if word.entries[k][0] == MINUS]
    return word.entries[ks[0]][1] if ks else None


def apply_tilde(a, i, kind):
    """One of the operators ``"f"``, ``"e"``, ``"f*"``, ``"e*"``; None stands for 0."""
    star, plain = reduced_words(a, i)
    simple = (i, i + 1)
    if kind == "f":
        r = _rightmost_plus(plain)
        return a.add(simple) if r is None else a.replace(r, (r[0], i + 1))
    if kind == "f*":
        r = _rightmost_plus(star)
        return a.add(simple) if r is None else a.replace(r, (i, r[1]))
    if kind == "e":
        r = _leftmost_minus(plain)
    elif kind == "e*":
        r = _leftmost_minus(star)
    else:
        raise ValueError(f"unknown operator kind {kind!r}")
    if r is None:
        return None
    if r == simple:
        return a.add(simple, -1)
    return a.replace(r, (r[0], i) if kind == "e" else (i + 1, r[1]))


@lru_cache(maxsize=None)
def f_op(a, i):
    d = string_data(a, i)
    if d.b_star < d.a:
        return apply_tilde(a, i, "f")
    if d.a_star > 0:
        return apply_tilde(a, i, "f*")
    return None


def _e_case(a, i):
    """Which word e_i / e_hat_i act on: ``"e"``, ``"e*"`` or None."""
    d = string_data(a, i)
    if d.b_star <= d.a:
        return "e" if d.b > 0 else None
    return "e*"


@lru_cache(maxsize=None)
def e_op(a, i):
    """``e_i`` with the tri-state outcome: a partition, ``Zero.SIMPLE`` or ``Zero.PLAIN``."""
    kind = _e_case(a, i)
    if kind is None:
        return Zero.PLAIN
    star, plain = reduced_words(a, i)
    if _leftmost_minus(plain if kind == "e" else star) == (i, i + 1):
        return Zero.SIMPLE
    return apply_tilde(a, i, kind)


def e_plain(a, i):
    """``e_op`` with both kinds of zero collapsed to None."""
    out = e_op(a, i)
    return None if isinstance(out, Zero) else out


@lru_cache(maxsize=None)
def e_hat(a, i):
    kind = _e_case(a, i)
    return None if kind is None else apply_tilde(a, i, kind)


def _iterate(op, a, i):
    k = 0
    while True:
        a = op(a, i)
        if a is None:
            return k
        k += 1


@lru_cache(maxsize=None)
def varphi(a, i):
    return _iterate(f_op, a, i)


@lru_cache(maxsize=None)
def epsilon(a, i):
    return _iterate(e_plain, a, i)


@lru_cache(maxsize=None)
def epsilon_hat(a, i):
    return _iterate(e_hat, a, i)


def string_lengths(a, i):
    """``(varphi_i, epsilon_i, epsilon_hat_i)`` by explicit iteration."""
    return varphi(a, i), epsilon(a, i), epsilon_hat(a, i)


def wt_i(a, i):
    d = string_data(a, i)
    return d.u - d.v


def wt_pairing(a, i, n=None):
    """``<-evaluate(a), alpha_i^vee>``, the weight pairing computed from the roots."""
    n = n or max(a.max_index(), i + 1)
    return -coroot_pairing(evaluate(a, n), i)


def e_chain(a, word):
    """Apply ``e_op`` for each index in ``word`` right to left.

    Returns the final partition or the ``Zero`` that stopped the chain.
    """
    for i in reversed(word):
        a = e_op(a, i)
        if isinstance(a, Zero):
            return a
    return a


def e_power(a, i, k):
    """``e_i^k(a)`` with the tri-state outcome of the last attempted step."""
    return e_chain(a, (i,) * k)


def f_power(a, i, k):
    for _ in range(k):
        a = f_op(a, i)
        if a is None:
            return None
    return a


def render_word(a, i, starred=False):
    """Diagnostic dump: ``±(i,j)`` tokens with cancelled ones bracketed."""
    return str(reduce_word(build_word(a, i, starred)))


__all__ = [
    "KostantPartition", "SignWord", "StringData", "Zero", "apply_tilde", "build_word",
    "e_chain", "e_hat", "e_op", "e_plain", "e_power", "epsilon", "epsilon_hat", "f_op",
    "f_power", "reduce_word", "reduced_words", "render_word", "string_data",
    "string_lengths", "varphi", "wt_i", "wt_pairing",
]
