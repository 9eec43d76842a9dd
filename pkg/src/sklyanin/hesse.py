"""The geometry attached to S(a,b,c): the point-scheme cubic obtained by
multilinearizing the relations, the Hesse-form curve

    E_abc :  (a^3+b^3+c^3) xyz - abc (x^3+y^3+z^3) = 0,

the automorphism

    sigma([x:y:z]) = [acy^2 - b^2 xz : bcx^2 - a^2 yz : abz^2 - c^2 xy],

the chord-tangent group law with origin o = [1:-1:0] (an inflection point
of every member of the pencil), and order-of-sigma computations both exact
and floating.

On a smooth curve sigma acts as translation by t = sigma(o), so its order
is computed as the order of t under the group law; this sidesteps the base
points of the defining quadrics (sigma's formula vanishes identically at t
on E_{1,1,c}, for instance).  For degenerate parameters, where there is no
group law, the order is measured by direct iteration at integer sample
points.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from itertools import permutations
from math import lcm
import random

from .ncpoly import GENERATORS, ParameterTriple, _triple
from .scalars import CC, Field, embed_complex

ORIGIN_COORDS = (1, -1, 0)


class BasePointType:
    """Outcome of sigma at a base point of its defining quadrics (a value,
    not an error)."""

    _instance = None

    def __new__(cls):
        if cls._instance is None:
            cls._instance = super().__new__(cls)
        return cls._instance

    def __repr__(self):
        return "BasePoint"


BASE_POINT = BasePointType()


class SingularCurveError(ValueError):
    """Group-law operation attempted on a non-smooth cubic."""


class OffCurveError(ValueError):
    """Chord-tangent input does not lie on the curve."""


# ---------------------------------------------------------------------------
# projective points


class ProjPoint:
    """A point of P^2, canonically normalized.

    Exact fields scale so the first nonzero coordinate is 1 (two points are
    equal iff the normalized tuples are); the complex field scales by the
    largest-modulus coordinate and compares by cross products within the
    field tolerance.
    """

    __slots__ = ("coords", "field")

    def __init__(self, coords, field: Field | None = None):
        from .scalars import common_field

        coords = tuple(coords)
        if len(coords) != 3:
            raise ValueError("projective points have three coordinates")
        field = field or common_field(*coords)
        coords = tuple(field.coerce(v) for v in coords)
        if all(field.is_zero(v) for v in coords):
            raise ValueError("(0 : 0 : 0) is not a projective point")
        if field.is_exact:
            lead = next(v for v in coords if not field.is_zero(v))
        else:
            lead = max(coords, key=abs)
        self.coords = tuple(v / lead for v in coords)
        self.field = field

    def __iter__(self):
        return iter(self.coords)

    def __getitem__(self, k):
        return self.coords[k]

    def cross(self, other: "ProjPoint"):
        p, q = self.coords, other.coords
        return (
            p[1] * q[2] - p[2] * q[1],
            p[2] * q[0] - p[0] * q[2],
            p[0] * q[1] - p[1] * q[0],
        )

    def __eq__(self, other):
        if not isinstance(other, ProjPoint):
            return NotImplemented
        return all(self.field.is_zero(v) for v in self.cross(other))

    def __hash__(self):
        if not self.field.is_exact:
            raise TypeError("complex projective points are not hashable")
        return hash(self.coords)

    def distance(self, other: "ProjPoint") -> float:
        """Projective distance: max cross-product entry after embedding."""
        return max(abs(embed_complex(v)) for v in self.cross(other))

    def __repr__(self):
        from .scalars import format_scalar

        inner = " : ".join(format_scalar(v) for v in self.coords)
        return f"[{inner}]"


def origin(field: Field) -> ProjPoint:
    """The group-law origin o = [1:-1:0], an inflection point of E_abc."""
    return ProjPoint([field.one, -field.one, field.zero], field)


# ---------------------------------------------------------------------------
# the point-scheme cubic


def multilinearization_matrix(a, b, c):
    """Write relation k as sum_l m_kl(x,y,z) * x_l' (first tensor factor in
    the m's): a 3x3 matrix of linear forms, each a dict generator -> coeff."""
    rels = [
        {"yz": a, "zy": b, "xx": c},
        {"zx": a, "xz": b, "yy": c},
        {"xy": a, "yx": b, "zz": c},
    ]
    M = [[{} for _ in range(3)] for _ in range(3)]
    for k, rel in enumerate(rels):
        for w, coeff in rel.items():
            g, h = w[0], w[1]
            col = GENERATORS.index(h)
            form = M[k][col]
            form[g] = form.get(g, 0) + coeff
    return M


def point_scheme(a, b, c) -> dict:
    """Determinant of the multilinearized relation matrix, as a cubic form
    dict (ex, ey, ez) -> coefficient.

    With the row/column conventions above this equals
    (a^3+b^3+c^3) xyz - abc (x^3+y^3+z^3) exactly (no sign correction
    needed).  The arguments are duck-typed, so symbolic coefficient rings
    work too.
    """
    M = multilinearization_matrix(a, b, c)

    def accumulate(target, key, value):
        if key in target:
            target[key] = target[key] + value
        else:
            target[key] = value

    det: dict = {}
    for perm in permutations(range(3)):
        inversions = sum(
            1 for i in range(3) for j in range(i + 1, 3) if perm[i] > perm[j]
        )
        sign = -1 if inversions % 2 else 1
        # product of three linear forms -> cubic exponent vectors
        cubic = {(0, 0, 0): 1}
        first = True
        for row in range(3):
            form = M[row][perm[row]]
            nxt: dict = {}
            for e, cf in cubic.items():
                for g, coeff in form.items():
                    e2 = tuple(
                        v + (1 if GENERATORS[t] == g else 0) for t, v in enumerate(e)
                    )
                    accumulate(nxt, e2, coeff if first else cf * coeff)
            cubic = nxt
            first = False
        for e, cf in cubic.items():
            accumulate(det, e, cf if sign > 0 else -cf)
    return {e: c for e, c in det.items() if c != 0}


def eq2_cubic(a, b, c) -> dict:
    """The reference cubic lambda*xyz - mu*(x^3+y^3+z^3) as a form dict."""
    return eq2_cubic_from(a**3 + b**3 + c**3, a * b * c)


# ---------------------------------------------------------------------------
# curve data


@dataclass(frozen=True)
class CurveSpec:
    """The cubic lambda*xyz - mu*(x^3+y^3+z^3) with its classification."""

    lam: object
    mu: object
    classification: str  # smooth_cubic | singular_cubic | whole_plane
    field: Field

    @classmethod
    def from_params(cls, params) -> "CurveSpec":
        p = _triple(params)
        f = p.field
        lam = p.a**3 + p.b**3 + p.c**3
        mu = p.a * p.b * p.c
        if f.is_zero(lam) and f.is_zero(mu):
            kind = "whole_plane"
        elif not f.is_zero(mu) and not f.eq((3 * mu) ** 3, lam**3):
            kind = "smooth_cubic"
        else:
            kind = "singular_cubic"
        return cls(lam, mu, kind, f)

    def value(self, p: ProjPoint):
        x, y, z = p.coords
        return self.lam * x * y * z - self.mu * (x**3 + y**3 + z**3)

    def gradient(self, p: ProjPoint):
        x, y, z = p.coords
        return (
            self.lam * y * z - 3 * self.mu * x**2,
            self.lam * x * z - 3 * self.mu * y**2,
            self.lam * x * y - 3 * self.mu * z**2,
        )

    def contains(self, p: ProjPoint) -> bool:
        v = self.value(p)
        if self.field.is_exact:
            return self.field.is_zero(v)
        scale = max(abs(embed_complex(self.lam)), abs(embed_complex(self.mu)), 1.0)
        return abs(embed_complex(v)) <= self.field.tol * scale * 10

    def cubic_form(self) -> dict:
        return eq2_cubic_from(self.lam, self.mu)


def eq2_cubic_from(lam, mu) -> dict:
    out = {}
    for e, cf in [((1, 1, 1), lam), ((3, 0, 0), -mu), ((0, 3, 0), -mu), ((0, 0, 3), -mu)]:
        if cf != 0:
            out[e] = cf
    return out


# ---------------------------------------------------------------------------
# sigma and the group law


def sigma_apply(params, p: ProjPoint):
    """One application of sigma's defining quadrics; BASE_POINT when all
    three coordinates vanish."""
    t = _triple(params)
    a, b, c = t.as_tuple()
    f = t.field
    x, y, z = (f.coerce(v) for v in p.coords)
    coords = (
        a * c * y**2 - b**2 * x * z,
        b * c * x**2 - a**2 * y * z,
        a * b * z**2 - c**2 * x * y,
    )
    if all(f.is_zero(v) for v in coords):
        return BASE_POINT
    return ProjPoint(coords, f)


def _binary_cubic_coeff(curve: CurveSpec, p, q):
    """Coefficient of s^2 t in F(s*p + t*q) for the curve's cubic F."""
    lam, mu = curve.lam, curve.mu
    return lam * (
        p[0] * p[1] * q[2] + p[0] * q[1] * p[2] + q[0] * p[1] * p[2]
    ) - 3 * mu * (p[0] ** 2 * q[0] + p[1] ** 2 * q[1] + p[2] ** 2 * q[2])


def chord_third(curve: CurveSpec, p: ProjPoint, q: ProjPoint) -> ProjPoint:
    """Third intersection of the line through p and q (tangent when p = q)
    with the cubic, respecting intersection multiplicities."""
    if curve.classification != "smooth_cubic":
        raise SingularCurveError(f"chord-tangent needs a smooth cubic, got {curve.classification}")
    for pt in (p, q):
        if not curve.contains(pt):
            raise OffCurveError(f"{pt!r} is not on the curve")
    f = curve.field
    if p == q:
        n = curve.gradient(p)
        if all(f.is_zero(v) for v in n):
            raise SingularCurveError("vanishing gradient: singular point")
        # second point spanning the tangent line {r : n . r = 0}
        d = None
        for i in range(3):
            e = [f.zero] * 3
            e[i] = f.one
            cand = (
                n[1] * e[2] - n[2] * e[1],
                n[2] * e[0] - n[0] * e[2],
                n[0] * e[1] - n[1] * e[0],
            )
            if all(f.is_zero(v) for v in cand):
                continue
            cand_pt = ProjPoint(cand, f)
            if cand_pt != p:
                d = cand_pt
                break
        assert d is not None
        # F(s*p + t*d) = t^2 (gamma s + delta t): s^3 and s^2 t vanish by
        # tangency; gamma = 0 means p is an inflection point
        gamma = _binary_cubic_coeff(curve, d, p)
        delta = curve.value(d)
        if f.is_zero(gamma):
            return p
        return ProjPoint(
            tuple(delta * pv - gamma * dv for pv, dv in zip(p.coords, d.coords)), f
        )
    beta = _binary_cubic_coeff(curve, p, q)
    gamma = _binary_cubic_coeff(curve, q, p)
    if f.is_zero(beta) and f.is_zero(gamma):
        raise SingularCurveError("line lies on the cubic")
    return ProjPoint(
        tuple(gamma * pv - beta * qv for pv, qv in zip(p.coords, q.coords)), f
    )


def add_points(curve: CurveSpec, p: ProjPoint, q: ProjPoint) -> ProjPoint:
    """Group law with origin o = [1:-1:0]: p + q = third(o, third(p, q))."""
    o = origin(curve.field)
    return chord_third(curve, o, chord_third(curve, p, q))


def negate_point(curve: CurveSpec, p: ProjPoint) -> ProjPoint:
    """Inverse for the group law: the third point on the line through o and p."""
    return chord_third(curve, origin(curve.field), p)


# ---------------------------------------------------------------------------
# order of sigma


@dataclass(frozen=True)
class SigmaOrderResult:
    order: int | None  # None when no order <= max_order was found
    max_order: int
    path: str  # "translation" | "iteration"
    residual: float | None = None  # floating path: projective distance at closure
    translation_point: object = None

    @property
    def exceeds_bound(self) -> bool:
        return self.order is None


def sigma_order(params, max_order: int = 200, samples: int = 3, resample_budget: int = 20) -> SigmaOrderResult:
    """Order of sigma, or exceeds-bound.

    Smooth parameters: sigma is translation by t = sigma(o), so the order
    is the least n with n*t = o under the group law.  Degenerate
    parameters: least common period of direct iteration at integer sample
    points with nonzero coordinates, confirmed at independent samples.
    """
    t = _triple(params)
    curve = CurveSpec.from_params(t)
    if curve.classification == "smooth_cubic":
        return _order_by_translation(t, curve, max_order)
    return _order_by_iteration(t, max_order, samples, resample_budget)


def _order_by_translation(t: ParameterTriple, curve: CurveSpec, max_order: int) -> SigmaOrderResult:
    from .scalars import RationalField

    if isinstance(t.field, RationalField):
        return _order_by_translation_integer(t, max_order)
    f = t.field
    o = origin(f)
    trans = sigma_apply(t, o)
    if trans is BASE_POINT:
        raise SingularCurveError("sigma degenerates at the origin on a smooth curve")
    acc = trans
    for n in range(1, max_order + 1):
        if acc == o:
            residual = None if f.is_exact else acc.distance(o)
            return SigmaOrderResult(n, max_order, "translation", residual, trans)
        acc = add_points(curve, acc, trans)
    return SigmaOrderResult(None, max_order, "translation", None, trans)


def _order_by_translation_integer(t: ParameterTriple, max_order: int) -> SigmaOrderResult:
    """Exact fast path over Q: coprime integer coordinates instead of
    leading-1 fractions, so the quadratic height growth of the multiples
    n*t stays cheap even at the default bound of 200."""
    from math import gcd

    den = 1
    for v in t.as_tuple():
        den = den * Fraction(v).denominator // gcd(den, Fraction(v).denominator)
    a, b, c = (int(Fraction(v) * den) for v in t.as_tuple())
    g0 = gcd(gcd(abs(a), abs(b)), abs(c))
    a, b, c = a // g0, b // g0, c // g0  # same projective parameters
    lam = a**3 + b**3 + c**3
    mu = a * b * c

    def reduce(v):
        g = gcd(gcd(abs(v[0]), abs(v[1])), abs(v[2]))
        return (v[0] // g, v[1] // g, v[2] // g)

    def value(p):
        return lam * p[0] * p[1] * p[2] - mu * (p[0] ** 3 + p[1] ** 3 + p[2] ** 3)

    def beta(p, q):  # coefficient of s^2 t in F(sp + tq)
        return lam * (
            p[0] * p[1] * q[2] + p[0] * q[1] * p[2] + q[0] * p[1] * p[2]
        ) - 3 * mu * (p[0] ** 2 * q[0] + p[1] ** 2 * q[1] + p[2] ** 2 * q[2])

    def cross(p, q):
        return (
            p[1] * q[2] - p[2] * q[1],
            p[2] * q[0] - p[0] * q[2],
            p[0] * q[1] - p[1] * q[0],
        )

    def same(p, q):
        return cross(p, q) == (0, 0, 0)

    def chord(p, q):
        if same(p, q):
            n = (
                lam * p[1] * p[2] - 3 * mu * p[0] ** 2,
                lam * p[0] * p[2] - 3 * mu * p[1] ** 2,
                lam * p[0] * p[1] - 3 * mu * p[2] ** 2,
            )
            if n == (0, 0, 0):
                raise SingularCurveError("vanishing gradient: singular point")
            for i in range(3):
                e = [0, 0, 0]
                e[i] = 1
                d = cross(n, e)
                if d != (0, 0, 0) and not same(p, d):
                    break
            gamma = beta(d, p)
            delta = value(d)
            if gamma == 0:
                return p
            return reduce(tuple(delta * pv - gamma * dv for pv, dv in zip(p, d)))
        b_ = beta(p, q)
        g_ = beta(q, p)
        r = tuple(g_ * pv - b_ * qv for pv, qv in zip(p, q))
        if r == (0, 0, 0):
            raise SingularCurveError("line lies on the cubic")
        return reduce(r)

    o = (1, -1, 0)
    trans = (a, b, c)  # sigma(o) = c * (a, b, c); abc != 0 on the smooth locus
    acc = trans
    for n in range(1, max_order + 1):
        if same(acc, o):
            return SigmaOrderResult(n, max_order, "translation", None, ProjPoint(trans, t.field))
        acc = chord(o, chord(acc, trans))
    return SigmaOrderResult(None, max_order, "translation", None, ProjPoint(trans, t.field))


def _order_by_iteration(t: ParameterTriple, max_order: int, samples: int, resample_budget: int) -> SigmaOrderResult:
    f = t.field
    rng = random.Random(0x5157)
    periods = []
    budget = resample_budget
    while len(periods) < samples and budget > 0:
        coords = [
            f.coerce(Fraction(rng.randint(1, 10) * rng.choice((-1, 1))))
            for _ in range(3)
        ]
        start = ProjPoint(coords, f)
        period = _point_period(t, start, max_order)
        if period is None:
            budget -= 1
            continue
        if period == 0:
            return SigmaOrderResult(None, max_order, "iteration")
        periods.append(period)
    if len(periods) < samples:
        raise SingularCurveError(
            "persistent base-point degeneration while sampling sigma orbits"
        )
    n = lcm(*periods)
    if n > max_order:
        return SigmaOrderResult(None, max_order, "iteration")
    # confirm on two extra samples
    confirmed = 0
    while confirmed < 2 and budget > 0:
        coords = [
            f.coerce(Fraction(rng.randint(1, 10) * rng.choice((-1, 1))))
            for _ in range(3)
        ]
        start = ProjPoint(coords, f)
        q = start
        ok = True
        for _ in range(n):
            q = sigma_apply(t, q)
            if q is BASE_POINT:
                ok = False
                break
        if not ok:
            budget -= 1
            continue
        if q != start:
            return SigmaOrderResult(None, max_order, "iteration")
        confirmed += 1
    return SigmaOrderResult(n, max_order, "iteration")


def _point_period(t: ParameterTriple, start: ProjPoint, max_order: int) -> int | None:
    """Least k <= max_order with sigma^k(start) = start; 0 if none; None on
    base-point degeneration."""
    q = start
    for k in range(1, max_order + 1):
        q = sigma_apply(t, q)
        if q is BASE_POINT:
            return None
        if q == start:
            return k
    return 0


# ---------------------------------------------------------------------------
# parameter classification


@dataclass(frozen=True)
class ParamReport:
    params: ParameterTriple
    in_degenerate_set: bool
    classification: str
    sigma: SigmaOrderResult
    pi_degree: int | None
    torsionfree_dim_bounds: tuple[int, int] | None
    torsion_dim: int | None

    @property
    def sigma_order(self):
        return self.sigma.order


def classify_params(params, max_order: int = 200) -> ParamReport:
    """Assemble the curve classification, |sigma|, and the representation-
    dimension predictions it drives.

    For smooth parameters with |sigma| = n finite: PI degree n; a
    g-torsionfree irreducible has dimension exactly n when gcd(3, n) = 1
    and dimension in [n/3, n] when 3 | n; a g-torsion irreducible has
    dimension exactly n.  Degenerate parameters get no PI prediction.
    """
    t = _triple(params)
    curve = CurveSpec.from_params(t)
    result = sigma_order(t, max_order)
    pi_degree = None
    tf_bounds = None
    tors = None
    if t.is_smooth and result.order is not None:
        n = result.order
        pi_degree = n
        tf_bounds = ((n + 2) // 3, n) if n % 3 == 0 else (n, n)
        tors = n
    return ParamReport(
        t,
        t.in_degenerate_set,
        curve.classification,
        result,
        pi_degree,
        tf_bounds,
        tors,
    )
