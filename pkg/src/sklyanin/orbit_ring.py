"""The twisted coordinate ring of a finite sigma-orbit of n points, built
abstractly from the orbit size alone.

As a graded vector space the ring C is a sum of n polynomial rings in one
variable: the degree-d piece has basis u_1^d, ..., u_n^d (coefficient l is
the value at the l-th orbit point).  The shift automorphism twists the
multiplication into

    (e_1, ..., e_n)_i * (f_1, ..., f_n)_j  =  (e_1 f_{1-i}, ..., e_n f_{n-i}),

with indices mod n in {1, ..., n}.  C is isomorphic, via the map phi built
here, to the graded matrix ring R whose degree-d elements have their only
nonzero entries at positions (l, l - d mod n), each a scalar times x^d --
entry (i, j) of R ranges over x^((i-j) mod n) k[x^n].  Inverting the
central diagonal s = diag(x^n) turns R into the full n x n matrix ring
over Laurent polynomials in x^n, so evaluating x^n at a nonzero scalar
yields an n-dimensional representation; those evaluations are produced in
matrix form and are irreducible for every nonzero evaluation point.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction

from .scalars import Field, QQ, common_field


@dataclass(frozen=True)
class OrbitElement:
    """Homogeneous element of degree d: coefficient tuple over the orbit."""

    n: int
    degree: int
    coeffs: tuple

    def __post_init__(self):
        if len(self.coeffs) != self.n:
            raise ValueError(f"expected {self.n} coefficients, got {len(self.coeffs)}")
        if self.degree < 0:
            raise ValueError("degree must be nonnegative")

    def field(self) -> Field:
        return common_field(*self.coeffs)


def orbit_unit(n: int, field: Field = QQ) -> OrbitElement:
    return OrbitElement(n, 0, (field.one,) * n)


def orbit_mul(e: OrbitElement, f: OrbitElement) -> OrbitElement:
    """Component l of the product of degree-i and degree-j elements is
    e_l * f_{(l - i) mod n} (1-based indices as displayed; the tuples here
    are 0-based, so component l0 picks f[(l0 - i) % n])."""
    if e.n != f.n:
        raise ValueError(f"orbit size mismatch: {e.n} vs {f.n}")
    i = e.degree
    coeffs = tuple(
        e.coeffs[l0] * f.coeffs[(l0 - i) % e.n] for l0 in range(e.n)
    )
    return OrbitElement(e.n, e.degree + f.degree, coeffs)


# ---------------------------------------------------------------------------
# the graded matrix ring picture


@dataclass(frozen=True)
class GradedMatrix:
    """n x n matrix of univariate polynomials (dicts degree -> coeff) with
    the orbit-ring support pattern: a homogeneous degree-d element is
    nonzero only at positions (l, l - d mod n), where the entry is a
    monomial of degree d; sums of homogeneous parts satisfy the pattern
    degree by degree."""

    n: int
    entries: tuple  # tuple of tuples of dicts {degree: coeff}
    degree: int | None = None  # set for homogeneous elements

    def entry(self, i: int, j: int) -> dict:
        return self.entries[i][j]

    def __add__(self, other: "GradedMatrix") -> "GradedMatrix":
        assert self.n == other.n
        rows = []
        for i in range(self.n):
            row = []
            for j in range(self.n):
                merged = dict(self.entries[i][j])
                for d, c in other.entries[i][j].items():
                    s = merged.get(d, 0) + c
                    if s == 0:
                        merged.pop(d, None)
                    else:
                        merged[d] = s
                row.append(merged)
            rows.append(tuple(row))
        deg = self.degree if self.degree == other.degree else None
        return GradedMatrix(self.n, tuple(rows), deg)

    def __mul__(self, other: "GradedMatrix") -> "GradedMatrix":
        assert self.n == other.n
        rows = []
        for i in range(self.n):
            row = []
            for j in range(self.n):
                acc: dict = {}
                for k in range(self.n):
                    for d1, c1 in self.entries[i][k].items():
                        for d2, c2 in other.entries[k][j].items():
                            d = d1 + d2
                            s = acc.get(d, 0) + c1 * c2
                            if s == 0:
                                acc.pop(d, None)
                            else:
                                acc[d] = s
                row.append(acc)
            rows.append(tuple(row))
        deg = (
            self.degree + other.degree
            if self.degree is not None and other.degree is not None
            else None
        )
        return GradedMatrix(self.n, tuple(rows), deg)

    def __eq__(self, other):
        return (
            isinstance(other, GradedMatrix)
            and self.n == other.n
            and self.entries == other.entries
        )

    def pattern_ok(self) -> bool:
        """Every monomial of degree d sits at a position (l, l - d mod n)."""
        for i in range(self.n):
            for j in range(self.n):
                for d in self.entries[i][j]:
                    if (i - d) % self.n != j:
                        return False
        return True


def phi_to_matrix(e: OrbitElement) -> GradedMatrix:
    """The graded-matrix image of a homogeneous orbit element: row l gets
    e_l * x^d in column (l - d) mod n (1-based; 0-based below)."""
    d = e.degree
    rows = []
    for l0 in range(e.n):
        row = [dict() for _ in range(e.n)]
        if e.coeffs[l0] != 0:
            row[(l0 - d) % e.n] = {d: e.coeffs[l0]}
        rows.append(tuple(row))
    return GradedMatrix(e.n, tuple(rows), d)


def phi_linear(elements) -> GradedMatrix:
    """phi extended linearly over degrees (sum of homogeneous images)."""
    out = None
    for e in elements:
        m = phi_to_matrix(e)
        out = m if out is None else out + m
    if out is None:
        raise ValueError("empty sum")
    return out


# ---------------------------------------------------------------------------
# evaluation representations


def evaluation_irrep(n: int, lam) -> list:
    """Images of the degree-1 spanning set of the graded matrix ring under
    inverting s = diag(x^n) and evaluating x^n at lam != 0.

    After conjugating by diag(1, x^{-1}, ..., x^{-(n-1)}) the degree-1
    basis element with entry x at (l, l-1) becomes the matrix unit
    E_{l,l-1}, except the wrap-around element, whose entry picks up the
    full power x^n and evaluates to lam * E_{1,n}.  The n images generate
    the full matrix algebra exactly when lam != 0.
    """
    field = common_field(lam, Fraction(1))
    lam = field.coerce(lam)
    if field.is_zero(lam):
        raise ValueError("the evaluation point must be nonzero (s is inverted)")
    mats = []
    for l0 in range(n):
        m = [[field.zero for _ in range(n)] for _ in range(n)]
        if l0 == 0:
            m[0][n - 1] = lam
        else:
            m[l0][l0 - 1] = field.one
        mats.append(m)
    return mats


def evaluation_irrep_is_irreducible(n: int, lam) -> bool:
    from .reps import burnside_dimension

    mats = evaluation_irrep(n, lam)
    field = common_field(lam, Fraction(1))
    return burnside_dimension(mats, field) == n * n
