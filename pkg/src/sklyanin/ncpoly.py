"""The free algebra k{x,y,z}: words, noncommutative polynomials, the
superpotential machinery, and the standard generators of the
three-dimensional Sklyanin algebra S(a,b,c).

Words are plain strings over the alphabet ``xyz`` (the empty string is the
unit monomial); an :class:`NcPoly` is a finite coefficient map from words
to scalars with no stored zeros.  Coefficients are duck-typed: anything
with ring operators works, which is how the point-scheme code reuses these
polynomials with symbolic coefficients.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from itertools import product
from typing import Iterable

from ._linalg import mat_add, mat_identity, mat_mul, mat_scale
from .scalars import Field, common_field, field_of, format_scalar, parse_scalar

GENERATORS = "xyz"


def words_of_degree(d: int) -> list[str]:
    """All 3^d monomial words of degree d, in lexicographic order (x<y<z)."""
    return ["".join(w) for w in product(GENERATORS, repeat=d)]


class NcPoly:
    """A noncommutative polynomial: dict word -> coefficient, zeros dropped."""

    __slots__ = ("terms",)

    def __init__(self, terms: dict | None = None):
        cleaned = {}
        for w, c in (terms or {}).items():
            if any(g not in GENERATORS for g in w):
                raise ValueError(f"bad word {w!r}")
            if c != 0:
                cleaned[w] = c
        self.terms = cleaned

    @classmethod
    def monomial(cls, word: str, coeff=Fraction(1)) -> "NcPoly":
        return cls({word: coeff})

    @classmethod
    def zero(cls) -> "NcPoly":
        return cls({})

    def is_zero(self) -> bool:
        return not self.terms

    def degrees(self) -> set[int]:
        return {len(w) for w in self.terms}

    def is_homogeneous(self) -> bool:
        return len(self.degrees()) <= 1

    def degree(self) -> int:
        """Degree of a nonzero homogeneous polynomial."""
        degs = self.degrees()
        if len(degs) != 1:
            raise ValueError("not a nonzero homogeneous polynomial")
        return degs.pop()

    def homogeneous_part(self, d: int) -> "NcPoly":
        return NcPoly({w: c for w, c in self.terms.items() if len(w) == d})

    def coefficient(self, word: str):
        return self.terms.get(word, 0)

    def map_coefficients(self, f) -> "NcPoly":
        return NcPoly({w: f(c) for w, c in self.terms.items()})

    # -- ring operations

    def __add__(self, other: "NcPoly") -> "NcPoly":
        out = dict(self.terms)
        for w, c in other.terms.items():
            s = out.get(w, 0) + c
            if s == 0:
                out.pop(w, None)
            else:
                out[w] = s
        return NcPoly(out)

    def __sub__(self, other: "NcPoly") -> "NcPoly":
        return self + (-other)

    def __neg__(self) -> "NcPoly":
        return NcPoly({w: -c for w, c in self.terms.items()})

    def __mul__(self, other) -> "NcPoly":
        if isinstance(other, NcPoly):
            out: dict = {}
            for w1, c1 in self.terms.items():
                for w2, c2 in other.terms.items():
                    w = w1 + w2
                    s = out.get(w, 0) + c1 * c2
                    if s == 0:
                        out.pop(w, None)
                    else:
                        out[w] = s
            return NcPoly(out)
        return NcPoly({w: c * other for w, c in self.terms.items()})

    def __rmul__(self, other) -> "NcPoly":
        return NcPoly({w: other * c for w, c in self.terms.items()})

    def __eq__(self, other):
        return isinstance(other, NcPoly) and self.terms == other.terms

    def __hash__(self):
        return hash(frozenset(self.terms.items()))

    def __repr__(self):
        return f"NcPoly({format_ncpoly(self)})"

    def field(self) -> Field:
        return common_field(*self.terms.values())


def cyclic_derivative(phi: NcPoly, j: str) -> NcPoly:
    """Cyclic derivative of a superpotential with respect to generator j.

    Each occurrence of j inside a word contributes the cyclic rotation that
    starts just after that occurrence: the occurrence at position s of
    g_1...g_r yields g_{s+1}...g_r g_1...g_{s-1}.
    """
    if j not in GENERATORS:
        raise ValueError(f"unknown generator {j!r}")
    out = NcPoly.zero()
    for w, c in phi.terms.items():
        for s, g in enumerate(w):
            if g == j:
                out = out + NcPoly.monomial(w[s + 1 :] + w[:s], c)
    return out


# ---------------------------------------------------------------------------
# parameter triples and the standard elements of S(a,b,c)


@dataclass(frozen=True)
class ParameterTriple:
    """The (a,b,c) of S(a,b,c), treated projectively but stored as given.

    ``field`` defaults to the smallest field containing the three entries.
    The two Sklyanin admissibility conditions are exposed as properties:
    membership in the twelve-point degenerate set, and the smoothness
    condition abc != 0, (3abc)^3 != (a^3+b^3+c^3)^3.
    """

    a: object
    b: object
    c: object
    field: Field = None  # type: ignore[assignment]

    def __post_init__(self):
        field = self.field or common_field(self.a, self.b, self.c)
        object.__setattr__(self, "field", field)
        object.__setattr__(self, "a", field.coerce(self.a))
        object.__setattr__(self, "b", field.coerce(self.b))
        object.__setattr__(self, "c", field.coerce(self.c))
        if all(map(field.is_zero, (self.a, self.b, self.c))):
            raise ValueError("(a, b, c) must not be (0, 0, 0)")

    @property
    def in_degenerate_set(self) -> bool:
        """[a:b:c] in {[0:0:1],[0:1:0],[1:0:0]} or a^3 = b^3 = c^3 != 0."""
        f = self.field
        zeros = sum(1 for v in (self.a, self.b, self.c) if f.is_zero(v))
        if zeros == 2:
            return True
        a3, b3, c3 = self.a**3, self.b**3, self.c**3
        return f.eq(a3, b3) and f.eq(b3, c3) and not f.is_zero(a3)

    @property
    def satisfies_condition_2(self) -> bool:
        """abc != 0 and (3abc)^3 != (a^3+b^3+c^3)^3."""
        f = self.field
        mu = self.a * self.b * self.c
        if f.is_zero(mu):
            return False
        lam = self.a**3 + self.b**3 + self.c**3
        return not f.eq((3 * mu) ** 3, lam**3)

    @property
    def is_smooth(self) -> bool:
        """Both admissibility conditions: honest Sklyanin with smooth E."""
        return (not self.in_degenerate_set) and self.satisfies_condition_2

    def as_tuple(self):
        return (self.a, self.b, self.c)

    def promote(self, field: Field) -> "ParameterTriple":
        return ParameterTriple(field.coerce(self.a), field.coerce(self.b), field.coerce(self.c), field)


def _triple(params) -> ParameterTriple:
    if isinstance(params, ParameterTriple):
        return params
    return ParameterTriple(*params)


def build_phi_marg(params) -> NcPoly:
    """The cubic superpotential a*xyz + b*yxz + (c/3)*(x^3 + y^3 + z^3)."""
    p = _triple(params)
    if not p.field.is_exact:
        raise ValueError("the superpotential needs an exact field (coefficient c/3)")
    third = p.c / p.field.from_int(3)
    return NcPoly(
        {
            "xyz": p.a,
            "yxz": p.b,
            "xxx": third,
            "yyy": third,
            "zzz": third,
        }
    )


def sklyanin_relations(params) -> tuple[NcPoly, NcPoly, NcPoly]:
    """The three quadratic relations of S(a,b,c):
    a*yz + b*zy + c*x^2, a*zx + b*xz + c*y^2, a*xy + b*yx + c*z^2."""
    p = _triple(params)
    a, b, c = p.as_tuple()
    return (
        NcPoly({"yz": a, "zy": b, "xx": c}),
        NcPoly({"zx": a, "xz": b, "yy": c}),
        NcPoly({"xy": a, "yx": b, "zz": c}),
    )


def central_g(params) -> NcPoly:
    """The degree-3 central element
    c(a^3-c^3)x^3 + a(b^3-c^3)xyz + b(c^3-a^3)yxz + c(c^3-b^3)y^3."""
    p = _triple(params)
    a, b, c = p.as_tuple()
    a3, b3, c3 = a**3, b**3, c**3
    return NcPoly(
        {
            "xxx": c * (a3 - c3),
            "xyz": a * (b3 - c3),
            "yxz": b * (c3 - a3),
            "yyy": c * (c3 - b3),
        }
    )


def evaluate(p: NcPoly, rep):
    """Evaluate a noncommutative polynomial on a matrix triple.

    ``rep`` provides square matrices ``X``, ``Y``, ``Z`` of one size (lists
    of rows over an exact field, or numpy arrays for the complex path).  A
    word maps to the ordered matrix product, the empty word to the
    identity, and the whole polynomial extends linearly.
    """
    import numpy as np

    if isinstance(rep.X, np.ndarray):
        from .scalars import embed_complex

        d = rep.X.shape[0]
        mats = {"x": rep.X, "y": rep.Y, "z": rep.Z}
        acc = np.zeros((d, d), dtype=complex)
        for w, c in p.terms.items():
            m = np.eye(d, dtype=complex)
            for g in w:
                m = m @ mats[g]
            acc = acc + complex(embed_complex(c)) * m
        return acc

    mats = {"x": rep.X, "y": rep.Y, "z": rep.Z}
    d = len(mats["x"])
    for M in mats.values():
        if len(M) != d or any(len(row) != d for row in M):
            raise ValueError("X, Y, Z must be square matrices of equal size")
    coeffs = list(p.terms.values())
    field = common_field(*coeffs) if coeffs else None
    if field is None:
        field = common_field(*(x for M in mats.values() for row in M for x in row))
    ident = mat_identity(d, field)
    acc = None
    for w, c in p.terms.items():
        m = ident
        for g in w:
            m = mat_mul(m, mats[g])
        m = mat_scale(c, m)
        acc = m if acc is None else mat_add(acc, m)
    return acc if acc is not None else mat_scale(field.zero, ident)


# ---------------------------------------------------------------------------
# textual format: sum of "coeff*word" terms, e.g. "-2*xxx + 2*yxz".
# Non-atomic coefficients (cyclotomic polynomials in z) are parenthesized.


def format_ncpoly(p: NcPoly) -> str:
    if p.is_zero():
        return "0"
    parts = []
    for w in sorted(p.terms, key=lambda w: (len(w), w)):
        c = p.terms[w]
        text = format_scalar(c)
        if ("+" in text[1:]) or ("-" in text[1:]) or "*" in text:
            text = f"({text})"
        parts.append(f"{text}*{w}" if w else text)
    return " + ".join(parts)


def parse_ncpoly(text: str, field: Field) -> NcPoly:
    """Inverse of :func:`format_ncpoly` (also accepts bare words and "-" signs)."""
    out = NcPoly.zero()
    for chunk, sign in _split_top_level(text):
        chunk = chunk.strip()
        if not chunk:
            raise ValueError(f"empty term in {text!r}")
        coeff_text, word = _split_term(chunk)
        coeff = parse_scalar(coeff_text, field) if coeff_text else field.one
        if sign < 0:
            coeff = -coeff
        out = out + NcPoly.monomial(word, coeff)
    if any(not set(w) <= set(GENERATORS) for w in out.terms):
        raise ValueError(f"bad word in {text!r}")
    return out


def _split_top_level(text: str) -> Iterable[tuple[str, int]]:
    depth = 0
    sign = 1
    buf = ""
    for ch in text:
        if ch == "(":
            depth += 1
            buf += ch
        elif ch == ")":
            depth -= 1
            buf += ch
        elif ch in "+-" and depth == 0 and buf.strip():
            yield buf, sign
            sign = 1 if ch == "+" else -1
            buf = ""
        elif ch in "+-" and depth == 0:
            if ch == "-":
                sign = -sign
        else:
            buf += ch
    if buf.strip():
        yield buf, sign


def _split_term(chunk: str) -> tuple[str, str]:
    chunk = chunk.strip()
    if chunk.startswith("("):
        close = chunk.rindex(")")
        coeff = chunk[1:close]
        rest = chunk[close + 1 :].lstrip(" *")
        return coeff, rest
    if "*" in chunk:
        coeff, _, word = chunk.rpartition("*")
        if set(word) <= set(GENERATORS) and word:
            return coeff, word
    if set(chunk) <= set(GENERATORS) and chunk:
        return "", chunk
    return chunk, ""
