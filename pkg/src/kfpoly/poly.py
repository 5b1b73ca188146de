"""Integer polynomials in t stored as dense ascending coefficient tuples."""
from __future__ import annotations


class Poly:
    __slots__ = ("coeffs",)

    def __init__(self, coeffs=()):
        coeffs = list(coeffs)
        while coeffs and coeffs[-1] == 0:
            coeffs.pop()
        self.coeffs = tuple(int(c) for c in coeffs)

    @classmethod
    def monomial(cls, degree, coeff=1):
        return cls([0] * degree + [coeff])

    @classmethod
    def from_degrees(cls, degrees, signs=None):
        """Sum of ``sign * t^d``; signs default to +1."""
        out = {}
        for k, d in enumerate(degrees):
            out[d] = out.get(d, 0) + (1 if signs is None else signs[k])
        top = max(out, default=-1)
        return cls(out.get(d, 0) for d in range(top + 1))

    def __add__(self, other):
        a, b = self.coeffs, other.coeffs
        m = max(len(a), len(b))
        return Poly((a[k] if k < len(a) else 0) + (b[k] if k < len(b) else 0) for k in range(m))

    def __neg__(self):
        return Poly(-c for c in self.coeffs)

    def __sub__(self, other):
        return self + (-other)

    def scale(self, c):
        return Poly(c * x for x in self.coeffs)

    def __call__(self, t):
        acc = 0
        for c in reversed(self.coeffs):
            acc = acc * t + c
        return acc

    @property
    def degree(self):
        return len(self.coeffs) - 1

    def is_zero(self):
        return not self.coeffs

    def is_nonnegative(self):
        return all(c >= 0 for c in self.coeffs)

    def __eq__(self, other):
        if isinstance(other, Poly):
            return self.coeffs == other.coeffs
        if isinstance(other, int):
            return self.coeffs == Poly([other]).coeffs
        return NotImplemented

    def __hash__(self):
        return hash(self.coeffs)

    def __repr__(self):
        return f"Poly({list(self.coeffs)})"

    def to_json(self):
        return list(self.coeffs)

    def __str__(self):
        terms = []
        for d in range(len(self.coeffs) - 1, -1, -1):
            c = self.coeffs[d]
            if c == 0:
                continue
            mag = abs(c)
            if d == 0:
                body = str(mag)
            else:
                body = ("" if mag == 1 else str(mag)) + ("t" if d == 1 else f"t^{d}")
            if not terms:
                terms.append(body if c > 0 else "-" + body)
            else:
                terms.append(("+ " if c > 0 else "- ") + body)
        return " ".join(terms) if terms else "0"
