"""Minimal commutative multivariate polynomials over Q.

Just enough for symbolic parameter computations (the multilinearization
determinant with indeterminate a, b, c): exponent-vector dicts with ring
operators and zero-testing, so they can stand in for scalars wherever the
code is duck-typed over coefficients.
"""

from __future__ import annotations

from fractions import Fraction


class CommPoly:
    """dict[exponent tuple] -> Fraction, zeros dropped, fixed arity."""

    __slots__ = ("nvars", "terms")

    def __init__(self, nvars: int, terms: dict | None = None):
        self.nvars = nvars
        self.terms = {e: Fraction(c) for e, c in (terms or {}).items() if c != 0}

    @classmethod
    def variable(cls, i: int, nvars: int) -> "CommPoly":
        e = [0] * nvars
        e[i] = 1
        return cls(nvars, {tuple(e): Fraction(1)})

    @classmethod
    def constant(cls, c, nvars: int) -> "CommPoly":
        return cls(nvars, {(0,) * nvars: Fraction(c)})

    def _coerce(self, other):
        if isinstance(other, CommPoly):
            assert other.nvars == self.nvars
            return other
        if isinstance(other, (int, Fraction)):
            return CommPoly.constant(other, self.nvars)
        return NotImplemented

    def __add__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return NotImplemented
        out = dict(self.terms)
        for e, c in other.terms.items():
            out[e] = out.get(e, Fraction(0)) + c
        return CommPoly(self.nvars, out)

    __radd__ = __add__

    def __neg__(self):
        return CommPoly(self.nvars, {e: -c for e, c in self.terms.items()})

    def __sub__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return NotImplemented
        return self + (-other)

    def __rsub__(self, other):
        return (-self) + other

    def __mul__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return NotImplemented
        out: dict = {}
        for e1, c1 in self.terms.items():
            for e2, c2 in other.terms.items():
                e = tuple(u + v for u, v in zip(e1, e2))
                out[e] = out.get(e, Fraction(0)) + c1 * c2
        return CommPoly(self.nvars, out)

    __rmul__ = __mul__

    def __pow__(self, n: int):
        out = CommPoly.constant(1, self.nvars)
        for _ in range(n):
            out = out * self
        return out

    def __eq__(self, other):
        if isinstance(other, CommPoly):
            return self.nvars == other.nvars and self.terms == other.terms
        if isinstance(other, (int, Fraction)):
            return self.terms == CommPoly.constant(other, self.nvars).terms
        return NotImplemented

    def __hash__(self):
        return hash(frozenset(self.terms.items()))

    def __bool__(self):
        return bool(self.terms)

    def __repr__(self):
        return f"CommPoly({self.nvars}, {self.terms})"


def variables(nvars: int) -> list[CommPoly]:
    return [CommPoly.variable(i, nvars) for i in range(nvars)]
