"""Type A_{n-1} root system: positive roots, rho, permutations and weights.

Positive roots are plain ``(i, j)`` tuples with ``1 <= i < j <= n`` standing
for ``e_i - e_j``.  Weights are integer n-tuples taken modulo the all-ones
vector.
"""
from __future__ import annotations

from functools import cached_property
from itertools import permutations

from .errors import DomainError, RankError


def _check_rank(n):
    if not isinstance(n, int) or n < 2:
        raise RankError(f"rank parameter n must be an integer >= 2, got {n!r}")


def _check_index(i, n):
    if not 1 <= i <= n - 1:
        raise RankError(f"simple index {i} out of range 1..{n - 1}")


def positive_roots(n):
    """All positive roots ``(i, j)`` in lexicographic order."""
    _check_rank(n)
    return [(i, j) for i in range(1, n + 1) for j in range(i + 1, n + 1)]


def is_simple(root):
    return root[1] == root[0] + 1


def check_root(root, n=None):
    i, j = root
    if not (1 <= i < j) or (n is not None and j > n):
        raise DomainError(f"({i},{j}) is not a positive root" + (f" for n={n}" if n else ""))
    return root


def rho(n):
    _check_rank(n)
    return WeightVector(tuple(range(n - 1, -1, -1)))


def coroot_pairing(v, i):
    """``<v, alpha_i^vee> = v[i] - v[i+1]`` (1-based)."""
    coords = v.coords if isinstance(v, WeightVector) else tuple(v)
    _check_index(i, len(coords))
    return coords[i - 1] - coords[i]


class WeightVector:
    """Element of Z^n / Z(1,...,1).

    ``coords`` keeps the representative it was built from; equality and
    hashing use the canonical representative whose last coordinate is 0.
    """

    __slots__ = ("coords",)

    def __init__(self, coords):
        self.coords = tuple(int(c) for c in coords)

    @classmethod
    def parse(cls, text):
        """Parse ``"2,2,0,0"``."""
        try:
            return cls(int(tok) for tok in text.split(","))
        except ValueError:
            raise DomainError(f"malformed weight {text!r}; expected comma-separated integers") from None

    def __len__(self):
        return len(self.coords)

    def __iter__(self):
        return iter(self.coords)

    def __getitem__(self, k):
        return self.coords[k]

    def canonical(self):
        last = self.coords[-1]
        return tuple(c - last for c in self.coords)

    def __eq__(self, other):
        if isinstance(other, WeightVector):
            return len(self) == len(other) and self.canonical() == other.canonical()
        return NotImplemented

    def __hash__(self):
        return hash(self.canonical())

    def __add__(self, other):
        return WeightVector(a + b for a, b in zip(self.coords, _coords(other), strict=True))

    def __sub__(self, other):
        return WeightVector(a - b for a, b in zip(self.coords, _coords(other), strict=True))

    def __neg__(self):
        return WeightVector(-c for c in self.coords)

    def __repr__(self):
        return f"WeightVector({self.coords})"

    def is_dominant(self):
        return all(a >= b for a, b in zip(self.coords, self.coords[1:]))

    def root_lattice_rep(self):
        """Representative with coordinate sum 0, or None outside the root lattice."""
        total, n = sum(self.coords), len(self.coords)
        if total % n:
            return None
        shift = total // n
        return tuple(c - shift for c in self.coords)

    def __str__(self):
        return ",".join(map(str, self.coords))


def _coords(v):
    return v.coords if isinstance(v, WeightVector) else tuple(v)


class Permutation:
    """Bijection of {1..n} stored by its one-line notation ``images``.

    Multiplication is composition: ``(u * v)(k) = u(v(k))``.
    """

    __slots__ = ("images", "__dict__")

    def __init__(self, images):
        images = tuple(images)
        if sorted(images) != list(range(1, len(images) + 1)):
            raise DomainError(f"{images} is not a permutation of 1..{len(images)}")
        self.images = images

    @classmethod
    def identity(cls, n):
        return cls(range(1, n + 1))

    @classmethod
    def simple(cls, i, n):
        _check_index(i, n)
        images = list(range(1, n + 1))
        images[i - 1], images[i] = images[i], images[i - 1]
        return cls(images)

    @classmethod
    def from_word(cls, word, n):
        """Product ``s_{word[0]} s_{word[1]} ...`` (rightmost factor acts first)."""
        w = cls.identity(n)
        for i in word:
            w = w * cls.simple(i, n)
        return w

    @property
    def n(self):
        return len(self.images)

    def __call__(self, k):
        return self.images[k - 1]

    def __mul__(self, other):
        if self.n != other.n:
            raise DomainError("cannot compose permutations of different degree")
        return Permutation(self.images[k - 1] for k in other.images)

    def inverse(self):
        inv = [0] * self.n
        for k, image in enumerate(self.images, 1):
            inv[image - 1] = k
        return Permutation(inv)

    def left_simple(self, i):
        """``s_i * self``: swap the values i and i+1 in one-line notation."""
        swap = {i: i + 1, i + 1: i}
        return Permutation(swap.get(v, v) for v in self.images)

    @cached_property
    def length(self):
        im = self.images
        return sum(1 for a in range(len(im)) for b in range(a + 1, len(im)) if im[a] > im[b])

    def sign(self):
        return -1 if self.length % 2 else 1

    def is_identity(self):
        return self.length == 0

    def has_left_descent(self, i):
        """True iff ``length(s_i * self) < length(self)``."""
        pos = self.inverse().images
        return pos[i] < pos[i - 1]

    @cached_property
    def reduced_word(self):
        """A reduced word ``(i1, i2, ...)`` with ``self = s_i1 s_i2 ...``; largest descent first."""
        word, w = [], self
        while not w.is_identity():
            i = max(i for i in range(1, self.n) if w.has_left_descent(i))
            word.append(i)
            w = w.left_simple(i)
        return tuple(word)

    def label(self):
        return "id" if self.is_identity() else "".join(f"s{i}" for i in self.reduced_word)

    def __eq__(self, other):
        return isinstance(other, Permutation) and self.images == other.images

    def __hash__(self):
        return hash(self.images)

    def __lt__(self, other):
        return (self.length, self.images) < (other.length, other.images)

    def __repr__(self):
        return f"Permutation({self.images})"


def sign(w):
    return w.sign()


def weyl_act(w, v):
    """Permute coordinates so that position k moves to position ``w(k)``."""
    coords = _coords(v)
    if len(coords) != w.n:
        raise DomainError(f"length mismatch: permutation of {w.n} acting on {len(coords)} coordinates")
    out = [0] * w.n
    for k, c in enumerate(coords, 1):
        out[w(k) - 1] = c
    return WeightVector(out)


def enumerate_weyl(n):
    """Yield every element of S_n once, ordered by length then one-line notation."""
    _check_rank(n)
    yield from sorted(Permutation(p) for p in permutations(range(1, n + 1)))
