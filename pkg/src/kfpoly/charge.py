"""Semistandard tableaux and the Lascoux-Schutzenberger charge statistic.

This is the classical type A positive formula, kept independent of the
Kostant partition machinery so it can serve as ground truth.
"""
from __future__ import annotations

from collections import deque

from .errors import DomainError
from .poly import Poly


class Tableau(tuple):
    """Rows of a semistandard tableau in English notation (top row first)."""

    @property
    def shape(self):
        return tuple(len(r) for r in self)

    def content(self, n=None):
        n = n or max((max(r) for r in self if r), default=0)
        out = [0] * n
        for row in self:
            for x in row:
                out[x - 1] += 1
        return tuple(out)

    def is_semistandard(self):
        for r, row in enumerate(self):
            if any(a > b for a, b in zip(row, row[1:])):
                return False
            if r and any(row[c] <= self[r - 1][c] for c in range(len(row))):
                return False
        return True

    def reading_word(self):
        """Rows concatenated from the bottom row up, each read left to right."""
        return [x for row in reversed(self) for x in row]

    def __str__(self):
        return "\n".join(" ".join(map(str, row)) for row in self)


def _strip(p):
    return tuple(x for x in p if x)


def _is_partition(p):
    return all(a >= b for a, b in zip(p, p[1:])) and all(x >= 0 for x in p)


def _horizontal_strips(inner, outer_bound, k):
    """Shapes ``nu`` with ``nu / inner`` a horizontal strip of size k and nu <= outer_bound."""
    rows = len(outer_bound)
    inner = list(inner) + [0] * (rows - len(inner))
    out = []

    def go(r, left, cur):
        if r == rows:
            if left == 0:
                out.append(tuple(cur))
            return
        # horizontal strip: nu_r <= inner_{r-1}
        cap = outer_bound[r] if r == 0 else min(outer_bound[r], inner[r - 1])
        for add in range(min(left, cap - inner[r]) + 1):
            go(r + 1, left - add, cur + [inner[r] + add])

    go(0, k, [])
    return out


def enumerate_ssyt(lam, mu):
    """All SSYT of shape ``lam`` whose content is ``mu`` (entry r appears mu[r-1] times)."""
    lam, mu = _strip(lam), tuple(mu)
    if sum(lam) != sum(mu):
        raise DomainError(f"|lambda|={sum(lam)} differs from |mu|={sum(mu)}")
    if not _is_partition(lam):
        raise DomainError(f"shape {lam} is not a partition")
    if any(m < 0 for m in mu):
        raise DomainError(f"content {mu} has a negative entry")
    results = []

    def fill(r, shape, chain):
        if r == len(mu):
            if shape == list(lam):
                results.append(chain)
            return
        for nu in _horizontal_strips(shape, lam, mu[r]):
            fill(r + 1, list(nu), chain + [nu])

    fill(0, [0] * len(lam), [])
    tableaux = []
    for chain in results:
        rows = [[] for _ in lam]
        prev = [0] * len(lam)
        for value, nu in enumerate(chain, 1):
            for k in range(len(lam)):
                rows[k].extend([value] * (nu[k] - prev[k]))
            prev = list(nu)
        tableaux.append(Tableau(tuple(row) for row in rows if row))
    tableaux.sort()
    return tableaux


def _check_content(word):
    counts = {}
    for x in word:
        counts[x] = counts.get(x, 0) + 1
    top = max(counts, default=0)
    mu = [counts.get(x, 0) for x in range(1, top + 1)]
    if not _is_partition(mu):
        raise DomainError(f"content {tuple(mu)} is not a partition; charge is undefined")
    return mu


def standard_subwords(word):
    """Split a word of partition content into standard subwords.

    Repeatedly scan leftwards (cyclically) from the right end for 1, 2, ...;
    each pass extracts one subword, returned as ``(letter, position)`` lists.
    """
    _check_content(word)
    remaining = list(enumerate(word))
    subwords = []
    while remaining:
        letters = {x for _, x in remaining}
        top = 1
        while top + 1 in letters:
            top += 1
        picked = []
        pos = len(remaining)
        for letter in range(1, top + 1):
            # search leftwards from pos, wrapping around
            order = list(range(pos - 1, -1, -1)) + list(range(len(remaining) - 1, pos - 1, -1))
            pos = next(p for p in order if remaining[p][1] == letter)
            picked.append(remaining[pos])
        chosen = {id(item) for item in picked}
        subwords.append(sorted(picked))
        remaining = [item for item in remaining if id(item) not in chosen]
    return [[x for _, x in sw] for sw in subwords]


def _standard_charge(word):
    """Charge of a permutation word: index rises by one each time r+1 sits right of r."""
    where = {x: p for p, x in enumerate(word)}
    index = total = 0
    for r in range(2, len(word) + 1):
        if where[r] > where[r - 1]:
            index += 1
        total += index
    return total


def charge(t):
    """Charge of a tableau (or a word) with partition content."""
    word = t.reading_word() if isinstance(t, Tableau) else list(t)
    return sum(_standard_charge(sw) for sw in standard_subwords(word))


def charge_by_rotation(t):
    """Second computation of charge, used to cross-check ``charge``.

    Subwords are pulled out by literally rotating the word, and each standard
    piece uses the closed form sum over r of ``[r+1 right of r] * (k - r)``.
    """
    word = t.reading_word() if isinstance(t, Tableau) else list(t)
    _check_content(word)
    tagged = deque(enumerate(word))
    total = 0
    while tagged:
        letters = {x for _, x in tagged}
        k = 1
        while k + 1 in letters:
            k += 1
        # rotate so that the scan always moves leftwards from the right end
        picked = []
        for letter in range(1, k + 1):
            while tagged[-1][1] != letter:
                tagged.rotate(1)
            picked.append(tagged.pop())
        picked.sort()
        piece = [x for _, x in picked]
        where = {x: p for p, x in enumerate(piece)}
        total += sum(k - r for r in range(1, k) if where[r + 1] > where[r])
        tagged = deque(sorted(tagged))
    return total


def kf_charge(lam, mu):
    """Kostka-Foulkes polynomial as the charge generating function over SSYT(lam, mu)."""
    mu = tuple(mu)
    if not _is_partition(mu):
        raise DomainError(f"mu={mu} must be a partition for the charge formula")
    return Poly.from_degrees([charge(t) for t in enumerate_ssyt(lam, mu)])
