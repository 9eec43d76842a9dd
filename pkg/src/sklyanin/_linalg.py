"""Generic dense linear algebra over the coefficient fields.

Vectors are lists of scalars, matrices lists of rows.  Everything here is
driven by a :class:`~sklyanin.scalars.Field` descriptor so the same code
row-reduces over Q, Q(zeta_m), and (with tolerance pivoting) complex
floats.  Matrix sizes in this package stay small -- quotient construction
keeps each elimination at a few hundred columns at most -- so plain
Gauss-Jordan with exact division is both fast enough and canonical.
"""

from __future__ import annotations

from .scalars import Field, embed_complex


def rref(rows: list[list], field: Field) -> tuple[list[int], list[list]]:
    """Reduced row echelon form; returns (pivot column indices, rows).

    Exact fields pick the first nonzero pivot in column order, which makes
    the result canonical; the complex field picks the largest-modulus
    entry for stability.
    """
    rows = [list(r) for r in rows if not all(field.is_zero(x) for x in r)]
    if not rows:
        return [], []
    ncols = len(rows[0])
    pivots: list[int] = []
    r = 0
    for c in range(ncols):
        if r == len(rows):
            break
        if field.is_exact:
            piv = next((i for i in range(r, len(rows)) if not field.is_zero(rows[i][c])), None)
        else:
            piv = max(range(r, len(rows)), key=lambda i: abs(rows[i][c]))
            if field.is_zero(rows[piv][c]):
                piv = None
        if piv is None:
            continue
        rows[r], rows[piv] = rows[piv], rows[r]
        inv = rows[r][c]
        rows[r] = [x / inv for x in rows[r]]
        for i in range(len(rows)):
            if i != r and not field.is_zero(rows[i][c]):
                f = rows[i][c]
                rows[i] = [x - f * y for x, y in zip(rows[i], rows[r])]
        pivots.append(c)
        r += 1
    rows = [row for row in rows[: len(pivots)]]
    return pivots, rows


def rank(rows: list[list], field: Field) -> int:
    return len(rref(rows, field)[0])


class Echelon:
    """Incrementally maintained echelon basis of a growing span."""

    def __init__(self, field: Field, ncols: int):
        self.field = field
        self.ncols = ncols
        self.rows: list[list] = []
        self.pivots: list[int] = []

    def reduce(self, vec: list) -> list:
        v = list(vec)
        f = self.field
        for row, p in zip(self.rows, self.pivots):
            if not f.is_zero(v[p]):
                coef = v[p]
                v = [x - coef * y for x, y in zip(v, row)]
        return v

    def insert(self, vec: list) -> bool:
        """Reduce ``vec`` against the basis; grow the span if independent."""
        f = self.field
        v = self.reduce(vec)
        p = next((i for i in range(self.ncols) if not f.is_zero(v[i])), None)
        if p is None:
            return False
        inv = v[p]
        v = [x / inv for x in v]
        for row in self.rows:
            if not f.is_zero(row[p]):
                coef = row[p]
                row[:] = [x - coef * y for x, y in zip(row, v)]
        self.rows.append(v)
        self.pivots.append(p)
        return True

    def contains(self, vec: list) -> bool:
        return all(self.field.is_zero(x) for x in self.reduce(vec))

    @property
    def dim(self) -> int:
        return len(self.rows)


# -- small dense matrices over exact fields (lists of rows) ----------------


def mat_mul(a: list[list], b: list[list]) -> list[list]:
    n, k, m = len(a), len(b), len(b[0])
    assert len(a[0]) == k, "dimension mismatch"
    out = []
    for i in range(n):
        row = []
        ai = a[i]
        for j in range(m):
            acc = ai[0] * b[0][j]
            for t in range(1, k):
                acc = acc + ai[t] * b[t][j]
            row.append(acc)
        out.append(row)
    return out


def mat_add(a, b):
    return [[x + y for x, y in zip(ra, rb)] for ra, rb in zip(a, b)]


def mat_scale(c, a):
    return [[c * x for x in row] for row in a]


def mat_identity(n: int, field: Field) -> list[list]:
    return [[field.one if i == j else field.zero for j in range(n)] for i in range(n)]


def mat_zero(n: int, field: Field) -> list[list]:
    return [[field.zero for _ in range(n)] for _ in range(n)]


def mat_max_abs(a) -> float:
    """Max entry magnitude after embedding into C (for residual reporting)."""
    return max((abs(embed_complex(x)) for row in a for x in row), default=0.0)
