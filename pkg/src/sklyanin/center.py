"""Center computations at the degeneration limits, plus the PI-degree
report.

The skew ring S(1,q,0) has relations yz + q*zy = zx + q*xz = xy + q*yx = 0,
so every word rewrites to a unique normal form (scalar) * x^e1 y^e2 z^e3 via

    yx -> -q^{-1} xy,     zy -> -q^{-1} yz,     zx -> -q xz,

and centrality of a monomial is decided by its three commutation scalars.
The center's four distinguished elements x^m, y^m, z^m, xyz (with m the
computed order of sigma at (1,q,0)) are certified here, together with the
scalar kappa in (xyz)^m = kappa * x^m y^m z^m and whether the relation
(-g)^m + u1 u2 u3 = 0 holds verbatim with g = xyz.

The invariant-ring side verifies, degree by degree, that the monomial
invariants of Z_n x Z_n acting by diag(v,1,v^{-1}), diag(v,v^{-1},1) are
exactly the affine semigroup generated by x^n, y^n, z^n, xyz.
"""

from __future__ import annotations

from dataclasses import dataclass, field as dataclass_field
from fractions import Fraction
from itertools import product
from math import lcm

from .graded_quotient import sklyanin_truncation
from .ncpoly import NcPoly, ParameterTriple, _triple, central_g, parse_ncpoly
from .scalars import Field, QQ, ScalarError, field_of


@dataclass(frozen=True)
class SkewMonomial:
    """Normal form (coeff) * x^e1 y^e2 z^e3 in S(1,q,0)."""

    coeff: object
    exponents: tuple[int, int, int]
    q: object

    def degree(self) -> int:
        return sum(self.exponents)


def skew_normal_form(word: str, q) -> SkewMonomial:
    """Unique normal form of a word in S(1,q,0); rewriting is confluent
    because all adjacent-transposition scalars commute."""
    f = field_of(q)
    q = f.coerce(q)
    if f.is_zero(q):
        raise ScalarError("q must be nonzero (q = 0 is a degenerate triple)")
    coeff = f.one
    qinv = f.one / q
    letters = list(word)
    # insertion sort, accumulating one scalar per adjacent swap
    for i in range(1, len(letters)):
        j = i
        while j > 0 and letters[j - 1] > letters[j]:
            pair = letters[j - 1] + letters[j]
            if pair == "yx" or pair == "zy":
                coeff = coeff * (-qinv)
            elif pair == "zx":
                coeff = coeff * (-q)
            letters[j - 1], letters[j] = letters[j], letters[j - 1]
            j -= 1
    e = (letters.count("x"), letters.count("y"), letters.count("z"))
    return SkewMonomial(coeff, e, q)


def commutation_scalars(exponents: tuple[int, int, int], q):
    """Scalars (s_x, s_y, s_z) with m * g = s_g * g * m for the normal
    monomial m = x^e1 y^e2 z^e3; m is central iff all three equal 1."""
    f = field_of(q)
    q = f.coerce(q)
    e1, e2, e3 = exponents
    minus_q = -q
    minus_qinv = -(f.one / q)
    s_x = minus_q**e3 * minus_qinv**e2
    s_y = minus_qinv ** (e3 - e1)
    s_z = (minus_q**e1 * minus_qinv**e2) ** (-1)
    return s_x, s_y, s_z


def is_central_monomial(exponents, q) -> bool:
    return all(s == 1 for s in commutation_scalars(exponents, q))


def multiplicative_order(q, bound: int | None = None) -> int | None:
    """Order of q as a root of unity in its exact field, else None.

    Any root of unity in Q(zeta_m) has order dividing lcm(2, m), so the
    search space is finite.
    """
    f = field_of(q)
    if not f.is_exact:
        raise ScalarError("multiplicative order needs an exact field")
    q = f.coerce(q)
    limit = bound or lcm(2, getattr(f, "m", 1))
    acc = f.one
    for k in range(1, limit + 1):
        acc = acc * q
        if acc == 1:
            return k
    return None


@dataclass
class SkewCenterReport:
    q: object
    sigma_order: int  # computed order m of sigma_{1,q,0}
    q_multiplicative_order: int
    central_monomials: list[tuple[int, int, int]]
    kappa: object  # (xyz)^m = kappa * x^m y^m z^m
    relation_holds: bool  # (-g)^m + u1 u2 u3 = 0 with g = xyz
    g_scalar_computed: object  # normal form of the Eq-3 cubic at (1,q,0)
    g_scalar_expected_shape: object  # the (q^3 - 1) shape quoted for it
    g_scalar_discrepancy: bool


def skew_center_report(q, max_degree: int = 4) -> SkewCenterReport:
    """Certified description of the center of S(1,q,0) for q a root of
    unity: the computed sigma order m, all central monomials of degree <=
    max_degree, kappa, and the (-g)^m + u1 u2 u3 relation check.

    The exponent m is the computed |sigma_{1,q,0}|, not the multiplicative
    order of q (the two differ at q = 1, where |sigma| = 2); every claim
    here is keyed to the computed order.
    """
    from .hesse import sigma_order

    f = field_of(q)
    q = f.coerce(q)
    qord = multiplicative_order(q)
    if qord is None:
        raise ScalarError(f"q = {q!r} is not a root of unity")
    params = ParameterTriple(f.one, q, f.zero, f)
    m = sigma_order(params).order
    assert m is not None, "sigma at (1, q, 0) has finite order for q a root of unity"

    central = [
        e
        for e in _exponents_up_to(max_degree)
        if is_central_monomial(e, q)
    ]
    nf = skew_normal_form("xyz" * m, q)
    assert nf.exponents == (m, m, m)
    kappa = nf.coeff
    relation_holds = ((-f.one) ** m) * kappa + f.one == 0

    # Eq-3 cubic at (1,q,0) is q^3*xyz - q*yxz; its normal form is a
    # multiple of xyz whose scalar is reported, next to the (q^3-1) shape
    # quoted for it, without picking a side
    g = central_g(params)
    g_scalar = f.zero
    for w, c in g.terms.items():
        nfw = skew_normal_form(w, q)
        assert nfw.exponents == (1, 1, 1)
        g_scalar = g_scalar + c * nfw.coeff
    expected_shape = q**3 - 1
    return SkewCenterReport(
        q,
        m,
        qord,
        central,
        kappa,
        relation_holds,
        g_scalar,
        expected_shape,
        g_scalar != expected_shape,
    )


def _exponents_up_to(max_degree: int):
    for total in range(max_degree + 1):
        for e1 in range(total + 1):
            for e2 in range(total - e1 + 1):
                yield (e1, e2, total - e1 - e2)


# ---------------------------------------------------------------------------
# invariant ring of Z_n x Z_n


@dataclass
class InvariantRingReport:
    n: int
    max_degree: int
    holds: bool
    invariant_count: int
    witness: tuple[int, int, int] | None  # invariant monomial outside the semigroup


def _in_generator_semigroup(e: tuple[int, int, int], n: int) -> bool:
    """Membership of e in the semigroup generated by (n,0,0), (0,n,0),
    (0,0,n), (1,1,1).

    Any decomposition uses some number delta <= min(e) of copies of
    (1,1,1), after which each coordinate must be a multiple of n; the
    bounded search over delta decides membership outright.
    """
    return any(
        all((v - delta) % n == 0 for v in e) for delta in range(min(e), -1, -1)
    )


def invariant_ring_check(n: int, max_degree: int) -> InvariantRingReport:
    """Are the Z_n x Z_n-invariant monomials of degree <= max_degree exactly
    the semigroup generated by x^n, y^n, z^n, xyz?

    A monomial x^e1 y^e2 z^e3 is invariant under diag(v,1,v^{-1}) and
    diag(v,v^{-1},1) (v a primitive n-th root) iff e1 = e2 = e3 mod n.
    Returns a witness monomial on failure.
    """
    if n < 1:
        raise ValueError("n must be >= 1")
    invariants = [
        e
        for e in _exponents_up_to(max_degree)
        if (e[0] - e[2]) % n == 0 and (e[0] - e[1]) % n == 0
    ]
    for e in invariants:
        if not _in_generator_semigroup(e, n):
            return InvariantRingReport(n, max_degree, False, len(invariants), e)
    # and conversely: semigroup members are invariant by construction
    return InvariantRingReport(n, max_degree, True, len(invariants), None)


# ---------------------------------------------------------------------------
# the degree-3 and degree-6 center elements of S(1,-1,-1)


SHAT_G = "xxx - yxz"
SHAT_U1 = "yxxyxz + xyxyxz + xxyxyz + xxxyxx + xxxxyx"
SHAT_U2 = "yxxxxy - xyxxyx + xxyxyx - 2*xxyxxy - xxxyxy"
SHAT_U3 = "xxxyxz"


@dataclass
class ShatCenterReport:
    g_central: bool
    u1_central: bool
    u2_central: bool
    u3_central: bool

    @property
    def all_central(self) -> bool:
        return self.g_central and self.u1_central and self.u2_central and self.u3_central


def shat_center_check() -> ShatCenterReport:
    """Certify centrality in S(1,-1,-1) of the degree-3 element
    g = x^3 - yxz and the three degree-6 elements u1, u2, u3 (exact
    degree-7 truncation over Q)."""
    trunc = sklyanin_truncation((1, -1, -1), 7)
    results = [
        trunc.is_central(parse_ncpoly(text, QQ))
        for text in (SHAT_G, SHAT_U1, SHAT_U2, SHAT_U3)
    ]
    return ShatCenterReport(*results)


# ---------------------------------------------------------------------------
# PI degree report


@dataclass
class PiReport:
    params: ParameterTriple
    sigma_order: int | None
    max_order: int
    pi_degree: int | None  # None: not PI up to the bound (or degenerate)
    b_pi_degree: int | None  # PI degree of the twisted coordinate ring B
    torsionfree_dim_bounds: tuple[int, int] | None
    torsion_dim: int | None
    rank_over_center: int | None  # pi_degree^2, surfaced when a = b
    a_equals_b: bool = False
    degenerate: bool = False
    notes: list = dataclass_field(default_factory=list)


def pi_report(params, max_order: int = 200) -> PiReport:
    """PI degree of S(a,b,c) and of B: both equal |sigma| when finite.

    Dimension predictions follow the torsion split: g-torsionfree
    irreducibles have dimension in [|sigma|/3, |sigma|] (exactly |sigma|
    when 3 does not divide it), g-torsion ones exactly |sigma|.  The a = b
    special case ("rank 2^2 over the center") is called out.
    """
    from .hesse import classify_params

    t = _triple(params)
    report = classify_params(t, max_order)
    notes = []
    if t.in_degenerate_set:
        notes.append("degenerate Sklyanin algebra: PI-degree theory does not apply")
        return PiReport(
            t, report.sigma_order, max_order, None, None, None, None, None,
            a_equals_b=t.field.eq(t.a, t.b), degenerate=True, notes=notes,
        )
    n = report.sigma_order
    if n is None:
        notes.append(f"no sigma order found up to {max_order}: not PI up to the bound")
        return PiReport(t, None, max_order, None, None, None, None, None,
                        a_equals_b=t.field.eq(t.a, t.b), notes=notes)
    a_eq_b = t.field.eq(t.a, t.b)
    if a_eq_b:
        notes.append("a = b: the algebra has rank 2^2 = 4 over its center")
    return PiReport(
        t,
        n,
        max_order,
        n,
        n,
        report.torsionfree_dim_bounds,
        report.torsion_dim,
        n * n,
        a_equals_b=a_eq_b,
        notes=notes,
    )
