"""Finite-dimensional representations of S(a,b,c): exact verification,
Burnside irreducibility, the action of the central cubic g, an exact
one-dimensional solver, the explicit 2-dimensional families of S(1,-1,-1),
the block families of the degenerate algebras, and a seeded numerical
least-squares search for matrix solutions of the defining relations.
"""

from __future__ import annotations

from dataclasses import dataclass, field as dataclass_field
from fractions import Fraction

import numpy as np

from ._linalg import Echelon, mat_identity, mat_mul, mat_max_abs
from .ncpoly import NcPoly, ParameterTriple, _triple, central_g, evaluate, sklyanin_relations
from .scalars import (
    CC,
    Field,
    CyclotomicField,
    common_field,
    cube_roots_of_unity,
    embed_complex,
    format_scalar,
    parse_field,
    parse_scalar,
    zeta,
)

SV_RANK_THRESHOLD = 1e-7  # singular values below this fraction of the largest count as zero
TRIVIAL_THRESHOLD = 1e-9


@dataclass
class MatRep:
    """A candidate representation: three square matrices over one field.

    Exact fields store lists of rows; the complex field stores numpy
    arrays.  ``provenance`` records where the triple came from
    (explicit_family | numerical_search | user_supplied).
    """

    X: object
    Y: object
    Z: object
    field: Field
    provenance: str = "user_supplied"

    @property
    def dimension(self) -> int:
        return len(self.X)

    def matrices(self):
        return (self.X, self.Y, self.Z)


@dataclass
class RepClassification:
    residual: object  # 0 for exact satisfied reps, a float otherwise
    irreducible: bool
    g_scalar: object | None  # None means the action is not scalar
    torsion_type: str  # g_torsion | g_torsionfree | not_applicable
    trivial: bool = False

    @property
    def g_is_scalar(self) -> bool:
        return self.g_scalar is not None


# ---------------------------------------------------------------------------
# verification


def _relation_values(params, rep: MatRep):
    p = _params_for_rep(params, rep)
    return [evaluate(r, rep) for r in sklyanin_relations(p)]


def _params_for_rep(params, rep: MatRep) -> ParameterTriple:
    p = _triple(params)
    return p if rep.field == p.field else p.promote(rep.field)


def verify_rep(params, rep: MatRep, tolerance: float = 0.0):
    """Max-entry residual of the three relations on the triple.

    Exact fields return the integer 0 when every entry vanishes exactly
    (tolerance must be 0 there); otherwise the max entry magnitude under
    the complex embedding is reported as a float.
    """
    if rep.field.is_exact and tolerance != 0:
        raise ValueError("exact fields use tolerance 0")
    values = _relation_values(params, rep)
    if rep.field.is_exact:
        if all(v == 0 for m in values for row in m for v in row):
            return 0
        return max(mat_max_abs(m) for m in values)
    return max(float(np.max(np.abs(np.asarray(m)))) for m in values)


def satisfies(params, rep: MatRep, tolerance: float = 0.0) -> bool:
    return verify_rep(params, rep, tolerance) <= tolerance


# ---------------------------------------------------------------------------
# Burnside irreducibility


def burnside_dimension(mats, field: Field) -> int:
    """Dimension of the span closure of {I} + mats under left multiplication
    by mats (= the unital algebra the matrices generate)."""
    if isinstance(mats[0], np.ndarray):
        return _burnside_dimension_numeric([np.asarray(m, dtype=complex) for m in mats])
    d = len(mats[0])
    ech = Echelon(field, d * d)

    def insert(M):
        return ech.insert([M[i][j] for i in range(d) for j in range(d)])

    insert(mat_identity(d, field))
    frontier = [M for M in mats if insert(M)]
    while frontier:
        fresh = []
        for G in mats:
            for M in frontier:
                P = mat_mul(G, M)
                if insert(P):
                    fresh.append(P)
        frontier = fresh
    return ech.dim


def _burnside_dimension_numeric(mats) -> int:
    d = mats[0].shape[0]
    rows = [np.eye(d, dtype=complex).ravel()]
    basis_mats = [np.eye(d, dtype=complex)]

    def insert(M):
        stacked = np.vstack(rows + [M.ravel()])
        sv = np.linalg.svd(stacked, compute_uv=False)
        if sv[-1] > SV_RANK_THRESHOLD * sv[0]:
            rows.append(M.ravel())
            basis_mats.append(M)
            return True
        return False

    frontier = [M for M in mats if insert(M)]
    while frontier and len(rows) < d * d:
        fresh = []
        for G in mats:
            for M in frontier:
                P = G @ M
                if insert(P):
                    fresh.append(P)
        frontier = fresh
    return len(rows)


def irreducible(rep: MatRep, tolerance: float | None = None) -> bool:
    """Burnside criterion: the images generate the full matrix algebra."""
    del tolerance  # rank decisions are by exact zero / the SVD threshold
    d = rep.dimension
    return burnside_dimension(list(rep.matrices()), rep.field) == d * d


def invariant_subspace_witness(rep: MatRep):
    """A basis of a proper nonzero invariant subspace of a reducible exact
    triple, or None.

    Searches the cyclic subspaces generated by the coordinate vectors: the
    span of the algebra orbit of e_i is always invariant, and for the
    reducible block families here at least one such orbit is proper.
    """
    if not rep.field.is_exact:
        raise ValueError("witness search is exact-only")
    d = rep.dimension
    f = rep.field
    mats = list(rep.matrices())
    for i in range(d):
        ech = Echelon(f, d)
        seed = [f.one if j == i else f.zero for j in range(d)]
        ech.insert(seed)
        vectors = [seed]
        frontier = [seed]
        while frontier:
            fresh = []
            for M in mats:
                for v in frontier:
                    w = [sum((M[r][c] * v[c] for c in range(d)), f.zero) for r in range(d)]
                    if ech.insert(w):
                        vectors.append(w)
                        fresh.append(w)
            frontier = fresh
        if ech.dim < d:
            return vectors
    return None


# ---------------------------------------------------------------------------
# g-action


def g_action(params, rep: MatRep, tolerance: float = 1e-9):
    """Evaluate the central cubic on the triple; (g_scalar, torsion_type).

    ``g_scalar`` is the scalar lambda with g -> lambda * I, or None when the
    action is not scalar; torsion_type is g_torsion exactly when lambda = 0.
    """
    p = _params_for_rep(params, rep)
    G = evaluate(central_g(p), rep)
    d = rep.dimension
    if rep.field.is_exact:
        lam = G[0][0]
        scalar = all(
            G[i][j] == (lam if i == j else 0) for i in range(d) for j in range(d)
        )
        if not scalar:
            return None, "not_applicable"
        return lam, ("g_torsion" if lam == 0 else "g_torsionfree")
    G = np.asarray(G, dtype=complex)
    lam = np.trace(G) / d
    scale = max(1.0, float(np.max(np.abs(G))))
    if float(np.max(np.abs(G - lam * np.eye(d)))) > tolerance * scale:
        return None, "not_applicable"
    if abs(lam) <= tolerance:
        return 0j, "g_torsion"
    return complex(lam), "g_torsionfree"


def classify_rep(params, rep: MatRep, tolerance: float = 1e-9) -> RepClassification:
    residual = verify_rep(params, rep, 0.0 if rep.field.is_exact else tolerance)
    irr = irreducible(rep)
    lam, torsion = g_action(params, rep, tolerance)
    trivial = _is_trivial(rep, lam)
    return RepClassification(residual, irr, lam, torsion, trivial)


def _is_trivial(rep: MatRep, g_scalar) -> bool:
    """Numerically negligible representation: nilpotent images and zero g."""
    if rep.field.is_exact:
        mats = [
            np.array([[complex(embed_complex(v)) for v in row] for row in m])
            for m in rep.matrices()
        ]
    else:
        mats = [np.asarray(m, dtype=complex) for m in rep.matrices()]
    spec = sum(float(np.max(np.abs(np.linalg.eigvals(m)))) for m in mats)
    lam_mag = abs(complex(embed_complex(g_scalar))) if g_scalar is not None else 1.0
    return lam_mag + spec <= TRIVIAL_THRESHOLD


# ---------------------------------------------------------------------------
# exact one-dimensional solutions


@dataclass(frozen=True)
class Dim1Solutions:
    """Solution set of the scalar system (a+b)yz + cx^2 = (a+b)zx + cy^2 =
    (a+b)xy + cz^2 = 0, up to the common scaling of (x, y, z).

    kind: trivial_only | coordinate_axes | everything | finite_families;
    ``families`` lists one direction vector per nontrivial line of
    solutions (for coordinate_axes the three axes; for finite_families the
    lines [1 : w : -c(a+b)^{-1} w^2] over the cube roots of unity w
    available in the field).
    """

    kind: str
    families: tuple = ()


def solve_dim1(params) -> Dim1Solutions:
    p = _triple(params)
    if not p.field.is_exact:
        raise ValueError("solve_dim1 is an exact case analysis")
    f = p.field
    a, b, c = p.as_tuple()
    s = a + b
    if f.is_zero(c) and f.is_zero(s):
        return Dim1Solutions("everything")
    if f.is_zero(c):
        axes = ((f.one, f.zero, f.zero), (f.zero, f.one, f.zero), (f.zero, f.zero, f.one))
        return Dim1Solutions("coordinate_axes", axes)
    if f.is_zero(s):
        return Dim1Solutions("trivial_only")
    if s**3 == -(c**3):
        fams = tuple(
            (f.one, w, -c * w**2 / s) for w in cube_roots_of_unity(f)
        )
        return Dim1Solutions("finite_families", fams)
    return Dim1Solutions("trivial_only")


# ---------------------------------------------------------------------------
# explicit families


def family_s1m1m1(which: int, z3, z4, field: Field | None = None, sign: int = +1) -> MatRep:
    """The two printed 2-dimensional families of S(1,-1,-1).

    Family 1 needs i (default field Q(zeta_4)); family 2 needs a primitive
    twelfth root of unity (default field Q(zeta_12)).  ``sign`` picks the
    +i / -i branch of family 1.  Requires z3 != 0; the result verifies the
    relations exactly and is irreducible precisely when z4 != 0.
    """
    if which not in (1, 2):
        raise ValueError("which must be 1 or 2")
    if field is None:
        field = CyclotomicField(4 if which == 1 else 12)
    z3 = field.coerce(z3)
    z4 = field.coerce(z4)
    if field.is_zero(z3):
        raise ValueError("z3 must be nonzero")
    zero = field.zero
    if which == 1:
        if not isinstance(field, CyclotomicField) or field.m % 4 != 0:
            raise ValueError("family 1 needs a field containing i")
        i = zeta(field.m, field.m // 4)
        if sign < 0:
            i = -i
        X = [[(i + 1) * z4, zero], [zero, -(i - 1) * z4]]
        Y = [[z4, i * z4**2 / z3], [i * z3, z4]]
    else:
        if not isinstance(field, CyclotomicField) or field.m % 12 != 0:
            raise ValueError("family 2 needs a primitive twelfth root of unity")
        xi = zeta(field.m, field.m // 12)
        X = [
            [xi * (xi**2 - xi - 1) * z4, zero],
            [zero, (xi**2 - xi + 1) * z4 / (xi - 1)],
        ]
        Y = [[(xi**2 - 1) * z4, xi * z4**2 / z3], [xi * z3, (xi**2 - 1) * z4]]
    Z = [[z4, -(z4**2) / z3], [z3, z4]]
    return MatRep(X, Y, Z, field, provenance="explicit_family")


def _identity_block(n, field, s):
    return [[s if i == j else field.zero for j in range(n)] for i in range(n)]


def _anti_identity_block(n, field, s):
    return [[s if i + j == n - 1 else field.zero for j in range(n)] for i in range(n)]


def _assemble_blocks(n, field, tl=None, tr=None, bl=None, br=None):
    zero_block = [[field.zero] * n for _ in range(n)]
    tl, tr = tl or zero_block, tr or zero_block
    bl, br = bl or zero_block, br or zero_block
    return [list(tl[r]) + list(tr[r]) for r in range(n)] + [
        list(bl[r]) + list(br[r]) for r in range(n)
    ]


def family_degenerate(params, n: int, scalars=(1, 1, 1), p=1) -> MatRep:
    """The 2n-dimensional block constructions for the degenerate algebras.

    One construction per case: S(1,0,0), S(0,1,0), S(0,0,1) (built from
    identity and anti-identity n x n blocks scaled by the given x, y, z),
    and S(1,b,c) with b^3 = c^3 = 1 (where p is an arbitrary nonzero
    scalar, y must be nonzero, and z is unused).  All verify the relations
    exactly; irreducibility is computed, never assumed.
    """
    t = _triple(params)
    if not t.in_degenerate_set:
        raise ValueError(f"{t.as_tuple()} is not a degenerate parameter triple")
    f = t.field
    x, y, z = (f.coerce(v) for v in scalars)
    a, b, c = t.as_tuple()
    if f.is_zero(b) and f.is_zero(c):  # [1:0:0]
        X = _assemble_blocks(n, f, tl=_identity_block(n, f, x))
        Y = _assemble_blocks(n, f, br=_identity_block(n, f, y))
        Z = _assemble_blocks(n, f, tr=_anti_identity_block(n, f, z))
    elif f.is_zero(a) and f.is_zero(c):  # [0:1:0]
        X = _assemble_blocks(n, f, tl=_identity_block(n, f, x))
        Y = _assemble_blocks(n, f, tr=_anti_identity_block(n, f, y))
        Z = _assemble_blocks(n, f, br=_identity_block(n, f, z))
    elif f.is_zero(a) and f.is_zero(b):  # [0:0:1]
        X = _assemble_blocks(n, f, tr=_anti_identity_block(n, f, x))
        Y = _assemble_blocks(n, f, bl=_anti_identity_block(n, f, y))
        Z = _assemble_blocks(n, f, tr=_anti_identity_block(n, f, z))
    else:  # a^3 = b^3 = c^3: normalize a to 1
        p = f.coerce(p)
        if f.is_zero(p):
            raise ValueError("p must be nonzero")
        if f.is_zero(y):
            raise ValueError("y must be nonzero for this family")
        b, c = b / a, c / a
        X = _assemble_blocks(
            n, f, tl=_identity_block(n, f, -b * x), br=_identity_block(n, f, x)
        )
        Y = _assemble_blocks(n, f, tr=_anti_identity_block(n, f, -(b**2) * c * y / p))
        Z = _assemble_blocks(n, f, bl=_anti_identity_block(n, f, p * x**2 / y))
    return MatRep(X, Y, Z, f, provenance="explicit_family")


# ---------------------------------------------------------------------------
# representation files


def rep_to_dict(rep: MatRep) -> dict:
    def encode(m):
        if isinstance(m, np.ndarray):
            return [[[v.real, v.imag] for v in row] for row in np.asarray(m, dtype=complex).tolist()]
        return [[format_scalar(v) for v in row] for row in m]

    return {
        "dimension": rep.dimension,
        "field": rep.field.tag,
        "X": encode(rep.X),
        "Y": encode(rep.Y),
        "Z": encode(rep.Z),
    }


def rep_from_dict(data: dict) -> MatRep:
    field = parse_field(data["field"])
    d = int(data["dimension"])

    def decode(rows):
        if len(rows) != d or any(len(r) != d for r in rows):
            raise ValueError("matrix shape does not match the declared dimension")
        if not field.is_exact:
            return np.array(
                [[complex(v[0], v[1]) if isinstance(v, (list, tuple)) else complex(v) for v in row] for row in rows]
            )
        return [
            [field.coerce(parse_scalar(v, field)) if isinstance(v, str) else field.coerce(v) for v in row]
            for row in rows
        ]

    return MatRep(decode(data["X"]), decode(data["Y"]), decode(data["Z"]), field,
                  provenance="user_supplied")


# ---------------------------------------------------------------------------
# numerical search


def _unpack(v: np.ndarray, d: int):
    k = d * d
    re, im = v[: 3 * k], v[3 * k :]
    w = re + 1j * im
    return w[:k].reshape(d, d), w[k : 2 * k].reshape(d, d), w[2 * k :].reshape(d, d)


def _pack(X, Y, Z) -> np.ndarray:
    w = np.concatenate([X.ravel(), Y.ravel(), Z.ravel()])
    return np.concatenate([w.real, w.imag])


def _relation_matrices(abc, X, Y, Z):
    a, b, c = abc
    return (
        a * Y @ Z + b * Z @ Y + c * X @ X,
        a * Z @ X + b * X @ Z + c * Y @ Y,
        a * X @ Y + b * Y @ X + c * Z @ Z,
    )


def residual_vector(v: np.ndarray, abc, d: int) -> np.ndarray:
    """Real residuals: the 3d^2 relation entries split into real and
    imaginary parts, plus the sphere constraint |X|^2+|Y|^2+|Z|^2 - 1."""
    X, Y, Z = _unpack(v, d)
    r = np.concatenate([m.ravel() for m in _relation_matrices(abc, X, Y, Z)])
    norm = float(np.linalg.norm(X) ** 2 + np.linalg.norm(Y) ** 2 + np.linalg.norm(Z) ** 2)
    return np.concatenate([r.real, r.imag, [norm - 1.0]])


def residual_jacobian(v: np.ndarray, abc, d: int) -> np.ndarray:
    """Analytic Jacobian of :func:`residual_vector` (the relations are
    holomorphic, so the complex Jacobian embeds as 2x2 real blocks)."""
    a, b, c = abc
    X, Y, Z = _unpack(v, d)
    eye = np.eye(d, dtype=complex)

    def left(A):  # M -> A M, row-major vec
        return np.kron(A, eye)

    def right(B):  # M -> M B
        return np.kron(eye, B.T)

    zero = np.zeros((d * d, d * d), dtype=complex)
    blocks = [
        [c * (left(X) + right(X)), a * right(Z) + b * left(Z), a * left(Y) + b * right(Y)],
        [a * left(Z) + b * right(Z), c * (left(Y) + right(Y)), a * right(X) + b * left(X)],
        [a * right(Y) + b * left(Y), a * left(X) + b * right(X), c * (left(Z) + right(Z))],
    ]
    J = np.block(blocks)  # complex Jacobian, rows = relations, cols = vec(X,Y,Z)
    Jr = np.block([[J.real, -J.imag], [J.imag, J.real]])
    w = np.concatenate([X.ravel(), Y.ravel(), Z.ravel()])
    norm_row = np.concatenate([2 * w.real, 2 * w.imag])[None, :]
    return np.vstack([Jr, norm_row])


def objective(v: np.ndarray, abc, d: int) -> float:
    """Sum of squared Frobenius norms of the three relation matrices."""
    X, Y, Z = _unpack(v, d)
    return float(sum(np.linalg.norm(m) ** 2 for m in _relation_matrices(abc, X, Y, Z)))


def objective_gradient(v: np.ndarray, abc, d: int) -> np.ndarray:
    """Analytic gradient of :func:`objective` in the real parameters."""
    r = residual_vector(v, abc, d)[:-1]
    J = residual_jacobian(v, abc, d)[:-1]
    return 2.0 * J.T @ r


@dataclass
class SearchResult:
    reps: list
    findings: list = dataclass_field(default_factory=list)
    seed: int = 0
    restarts: int = 0
    tolerance: float = 0.0


def search_numeric(params, d: int, restarts: int = 50, tol: float = 1e-8, seed: int = 0) -> SearchResult:
    """Seeded random-restart least-squares search for d-dimensional matrix
    solutions of the relations, normalized to the unit sphere.

    Accepted minima (objective < tol^2) are classified: Burnside
    irreducibility, g-action, and a triviality tag for solutions whose
    images are nilpotent with zero g (those are extensions of the trivial
    representation, not genuinely new).  Irreducible finds whose dimension
    escapes the |sigma| prediction band are reported in ``findings``.
    Deterministic for a fixed seed; duplicates (up to conjugation) are
    merged by spectral invariants.
    """
    from scipy.optimize import least_squares

    from .hesse import classify_params

    p = _triple(params)
    abc = tuple(complex(embed_complex(v)) for v in p.as_tuple())
    rng = np.random.default_rng(seed)
    found = []
    seen_invariants = []
    for restart in range(restarts):
        x0 = rng.standard_normal(6 * d * d)
        x0 /= np.linalg.norm(x0)
        res = least_squares(
            residual_vector,
            x0,
            jac=residual_jacobian,
            args=(abc, d),
            method="lm",
            xtol=1e-15,
            ftol=1e-15,
            gtol=1e-15,
            max_nfev=400,
        )
        f_val = objective(res.x, abc, d)
        if f_val >= tol * tol:
            continue
        X, Y, Z = _unpack(res.x, d)
        rep = MatRep(X, Y, Z, CC, provenance="numerical_search")
        cls = classify_rep(p, rep, tolerance=max(tol, 1e-9))
        inv = _conjugacy_invariants(p, rep)
        if any(np.allclose(inv, other, atol=1e-5) for other in seen_invariants):
            continue
        seen_invariants.append(inv)
        found.append((rep, cls, restart))

    report = classify_params(p)
    findings = []
    for rep, cls, restart in found:
        if cls.irreducible and not cls.trivial and report.sigma_order is not None:
            lo, hi = report.torsionfree_dim_bounds or (report.sigma_order, report.sigma_order)
            if cls.torsion_type == "g_torsion":
                lo = hi = report.torsion_dim
            if not (lo <= rep.dimension <= hi):
                findings.append(
                    {
                        "kind": "dimension_outside_band",
                        "dimension": rep.dimension,
                        "band": [lo, hi],
                        "restart": restart,
                    }
                )
    return SearchResult([(rep, cls) for rep, cls, _ in found], findings, seed, restarts, tol)


def _conjugacy_invariants(params, rep: MatRep) -> np.ndarray:
    """Spectral data invariant under simultaneous conjugation: sorted
    eigenvalues of X, of Y, and of the g-image."""
    p = _params_for_rep(params, rep)
    G = np.asarray(evaluate(central_g(p), rep), dtype=complex)
    X = np.asarray(rep.X, dtype=complex)
    Y = np.asarray(rep.Y, dtype=complex)

    def key(m):
        ev = np.linalg.eigvals(m)
        return sorted(ev, key=lambda z: (round(z.real, 6), round(z.imag, 6)))

    return np.array(key(X) + key(Y) + key(G))
