"""Exact coefficient fields for the whole toolkit.

Three kinds of scalars are supported:

* rationals, represented by :class:`fractions.Fraction` (always reduced,
  positive denominator -- the stdlib guarantees canonical form);
* elements of a cyclotomic extension Q(zeta_m), represented by
  :class:`Cyclotomic` -- a polynomial in zeta_m of degree < phi(m) with
  rational coefficients, reduced modulo the m-th cyclotomic polynomial,
  so equality is decidable and exact;
* complex double-precision floats (plain ``complex``), used only by the
  numerical paths.

Arithmetic never silently mixes fields: a ``Cyclotomic`` combines with
rationals (the canonical subfield) and with elements of the *same*
Q(zeta_m), everything else must be promoted explicitly via
:func:`promote` or :func:`embed_complex`.
"""

from __future__ import annotations

import cmath
import math
import re
from fractions import Fraction
from functools import lru_cache
from typing import Union


class ScalarError(ValueError):
    """Illegal scalar operation: field mix-up, division by zero, bad syntax."""


# ---------------------------------------------------------------------------
# cyclotomic polynomials


def euler_phi(m: int) -> int:
    n, result, p = m, m, 2
    while p * p <= n:
        if n % p == 0:
            while n % p == 0:
                n //= p
            result -= result // p
        p += 1
    if n > 1:
        result -= result // n
    return result


def _poly_divmod(num: list, den: list) -> tuple[list, list]:
    # exact division of integer polynomials (low-to-high coefficients)
    num = list(num)
    q = [0] * (len(num) - len(den) + 1)
    for k in range(len(q) - 1, -1, -1):
        coef, rem = divmod(num[k + len(den) - 1], den[-1])
        assert rem == 0
        q[k] = coef
        for j, d in enumerate(den):
            num[k + j] -= coef * d
    while num and num[-1] == 0:
        num.pop()
    return q, num


@lru_cache(maxsize=None)
def cyclotomic_polynomial(m: int) -> tuple[int, ...]:
    """Integer coefficients of Phi_m, low degree first, computed by dividing
    x^m - 1 by the Phi_d for proper divisors d of m."""
    if m < 1:
        raise ScalarError("cyclotomic index must be >= 1")
    poly = [-1] + [0] * (m - 1) + [1]
    for d in range(1, m):
        if m % d == 0:
            poly, rem = _poly_divmod(poly, list(cyclotomic_polynomial(d)))
            assert not rem
    return tuple(poly)


@lru_cache(maxsize=None)
def _reduction_rows(m: int) -> tuple[tuple[Fraction, ...], ...]:
    # row k: coordinates of zeta^(deg+k) on the basis 1, zeta, ..., zeta^(deg-1);
    # enough rows to reduce both zeta^(m-1) and products of reduced elements
    phi = cyclotomic_polynomial(m)
    deg = len(phi) - 1
    top = [-Fraction(c, phi[-1]) for c in phi[:-1]]  # zeta^deg
    rows = [tuple(top)]
    for _ in range(max(deg - 1, m - deg)):
        prev = rows[-1]
        shifted = [Fraction(0)] + list(prev[:-1])
        lead = prev[-1]
        rows.append(tuple(s + lead * t for s, t in zip(shifted, top)))
    return tuple(rows)


_RatLike = Union[int, Fraction]


class Cyclotomic:
    """An element of Q(zeta_m), reduced modulo the m-th cyclotomic polynomial.

    ``coeffs`` has length exactly phi(m); ``Cyclotomic(12, (0,0,0,1))`` is
    zeta_12^3 = i.  Construction trims/pads and reduces, so values are
    always canonical and equality is literal tuple equality.
    """

    __slots__ = ("m", "coeffs")

    def __init__(self, m: int, coeffs=()):
        deg = euler_phi(m)
        cs = [Fraction(c) for c in coeffs]
        if len(cs) > deg:
            rows = _reduction_rows(m)
            red = cs[:deg] + [Fraction(0)] * (deg - len(cs))
            for k, c in enumerate(cs[deg:]):
                if c:
                    row = rows[k]
                    red = [r + c * t for r, t in zip(red, row)]
            cs = red
        else:
            cs = cs + [Fraction(0)] * (deg - len(cs))
        object.__setattr__(self, "m", m)
        object.__setattr__(self, "coeffs", tuple(cs))

    def __setattr__(self, *a):
        raise AttributeError("Cyclotomic values are immutable")

    # -- helpers

    def _lift(self, other):
        if isinstance(other, Cyclotomic):
            if other.m != self.m:
                if other.is_rational():
                    return Cyclotomic(self.m, (other.rational_value(),))
                if self.is_rational():
                    return NotImplemented  # let other side handle it
                raise ScalarError(
                    f"cannot mix Q(zeta_{self.m}) with Q(zeta_{other.m}); "
                    "promote explicitly"
                )
            return other
        if isinstance(other, (int, Fraction)):
            return Cyclotomic(self.m, (Fraction(other),))
        return NotImplemented

    def is_zero(self) -> bool:
        return all(c == 0 for c in self.coeffs)

    def is_rational(self) -> bool:
        return all(c == 0 for c in self.coeffs[1:])

    def rational_value(self) -> Fraction:
        if not self.is_rational():
            raise ScalarError(f"{self} is not rational")
        return self.coeffs[0] if self.coeffs else Fraction(0)

    # -- ring operations

    def __add__(self, other):
        other = self._lift(other)
        if other is NotImplemented:
            return NotImplemented
        return Cyclotomic(self.m, tuple(a + b for a, b in zip(self.coeffs, other.coeffs)))

    __radd__ = __add__

    def __neg__(self):
        return Cyclotomic(self.m, tuple(-a for a in self.coeffs))

    def __sub__(self, other):
        other = self._lift(other)
        if other is NotImplemented:
            return NotImplemented
        return Cyclotomic(self.m, tuple(a - b for a, b in zip(self.coeffs, other.coeffs)))

    def __rsub__(self, other):
        return (-self) + other

    def __mul__(self, other):
        other = self._lift(other)
        if other is NotImplemented:
            return NotImplemented
        a, b = self.coeffs, other.coeffs
        prod = [Fraction(0)] * (len(a) + len(b) - 1)
        for i, ai in enumerate(a):
            if ai:
                for j, bj in enumerate(b):
                    if bj:
                        prod[i + j] += ai * bj
        return Cyclotomic(self.m, prod)

    __rmul__ = __mul__

    def inverse(self) -> "Cyclotomic":
        """Inverse via the extended Euclidean algorithm in Q[x] mod Phi_m."""
        if self.is_zero():
            raise ScalarError("division by zero")
        if self.is_rational():
            return Cyclotomic(self.m, (1 / self.coeffs[0],))
        phi = [Fraction(c) for c in cyclotomic_polynomial(self.m)]
        r0, r1 = phi, list(self.coeffs)
        s0, s1 = [Fraction(0)], [Fraction(1)]
        while any(c != 0 for c in r1):
            q, rem = _frac_divmod(r0, r1)
            r0, r1 = r1, rem
            s0, s1 = s1, _frac_sub(s0, _frac_mul(q, s1))
        # r0 is the gcd: a nonzero constant since Phi_m is irreducible
        assert len(r0) == 1 and r0[0] != 0
        return Cyclotomic(self.m, [c / r0[0] for c in s0])

    def __truediv__(self, other):
        other = self._lift(other)
        if other is NotImplemented:
            return NotImplemented
        return self * other.inverse()

    def __rtruediv__(self, other):
        lifted = self._lift(other)
        if lifted is NotImplemented:
            return NotImplemented
        return lifted * self.inverse()

    def __pow__(self, n: int):
        if n < 0:
            return self.inverse() ** (-n)
        result = Cyclotomic(self.m, (1,))
        base = self
        while n:
            if n & 1:
                result = result * base
            base = base * base
            n >>= 1
        return result

    # -- comparisons

    def __eq__(self, other):
        if isinstance(other, Cyclotomic):
            if other.m == self.m:
                return self.coeffs == other.coeffs
            if self.is_rational() and other.is_rational():
                return self.rational_value() == other.rational_value()
            return False
        if isinstance(other, (int, Fraction)):
            return self.is_rational() and self.rational_value() == other
        return NotImplemented

    def __hash__(self):
        if self.is_rational():
            return hash(self.rational_value())
        return hash((self.m, self.coeffs))

    def __bool__(self):
        return not self.is_zero()

    # -- conversions

    def to_complex(self) -> complex:
        z = cmath.exp(2j * math.pi / self.m)
        return sum(float(c) * z**k for k, c in enumerate(self.coeffs))

    def __repr__(self):
        return f"Cyclotomic({self.m}, {format_scalar(self)!r})"

    def __str__(self):
        return format_scalar(self)


def _frac_divmod(num, den):
    num = list(num)
    while num and num[-1] == 0:
        num.pop()
    dn = list(den)
    while dn and dn[-1] == 0:
        dn.pop()
    if len(num) < len(dn):
        return [Fraction(0)], num
    q = [Fraction(0)] * (len(num) - len(dn) + 1)
    for k in range(len(q) - 1, -1, -1):
        coef = num[k + len(dn) - 1] / dn[-1]
        q[k] = coef
        for j, d in enumerate(dn):
            num[k + j] -= coef * d
    while num and num[-1] == 0:
        num.pop()
    return q, num


def _frac_mul(a, b):
    out = [Fraction(0)] * (len(a) + len(b) - 1)
    for i, ai in enumerate(a):
        if ai:
            for j, bj in enumerate(b):
                out[i + j] += ai * bj
    return out


def _frac_sub(a, b):
    n = max(len(a), len(b))
    a = list(a) + [Fraction(0)] * (n - len(a))
    b = list(b) + [Fraction(0)] * (n - len(b))
    return [x - y for x, y in zip(a, b)]


def zeta(m: int, k: int = 1) -> Cyclotomic:
    """The root of unity zeta_m^k as an element of Q(zeta_m)."""
    coeffs = [Fraction(0)] * (k % m) + [Fraction(1)]
    return Cyclotomic(m, coeffs)


# ---------------------------------------------------------------------------
# field descriptors

Scalar = Union[int, Fraction, Cyclotomic, complex]


class Field:
    """Common behaviour of the three coefficient fields.

    Generic code (row reduction, curve arithmetic, ...) only relies on the
    scalar operators plus ``is_zero``/``eq``  -- for exact fields those are
    literal, for the complex field they are tolerance-based.
    """

    is_exact = True

    @property
    def zero(self):
        return self.from_int(0)

    @property
    def one(self):
        return self.from_int(1)

    def is_zero(self, v) -> bool:
        return v == self.zero

    def eq(self, u, v) -> bool:
        return u == v

    def __repr__(self):
        return self.tag


class RationalField(Field):
    tag = "Q"

    def from_int(self, n: int) -> Fraction:
        return Fraction(n)

    def coerce(self, v) -> Fraction:
        if isinstance(v, (int, Fraction)):
            return Fraction(v)
        if isinstance(v, Cyclotomic) and v.is_rational():
            return v.rational_value()
        raise ScalarError(f"{v!r} is not rational")

    def __eq__(self, other):
        return isinstance(other, RationalField)

    def __hash__(self):
        return hash("Q")


class CyclotomicField(Field):
    def __init__(self, m: int):
        if m < 1:
            raise ScalarError("cyclotomic index must be >= 1")
        self.m = m

    @property
    def tag(self):
        return f"Q(zeta_{self.m})"

    @property
    def zeta(self) -> Cyclotomic:
        return zeta(self.m)

    def from_int(self, n: int) -> Cyclotomic:
        return Cyclotomic(self.m, (n,))

    def coerce(self, v) -> Cyclotomic:
        if isinstance(v, (int, Fraction)):
            return Cyclotomic(self.m, (Fraction(v),))
        if isinstance(v, Cyclotomic):
            if v.m == self.m:
                return v
            if v.is_rational():
                return Cyclotomic(self.m, (v.rational_value(),))
            if self.m % v.m == 0:
                # zeta_v.m = zeta_self.m ** (self.m // v.m)
                z = zeta(self.m, self.m // v.m)
                acc = self.from_int(0)
                for k, c in enumerate(v.coeffs):
                    if c:
                        acc = acc + c * z**k
                return acc
        raise ScalarError(f"cannot coerce {v!r} into {self.tag}")

    def __eq__(self, other):
        return isinstance(other, CyclotomicField) and other.m == self.m

    def __hash__(self):
        return hash(("zeta", self.m))


class ComplexField(Field):
    """Double-precision complex numbers with tolerance-based comparisons."""

    is_exact = False
    tag = "complex"

    def __init__(self, tol: float = 1e-9):
        self.tol = tol

    def from_int(self, n: int) -> complex:
        return complex(n)

    def coerce(self, v) -> complex:
        return embed_complex(v)

    def is_zero(self, v) -> bool:
        return abs(v) <= self.tol

    def eq(self, u, v) -> bool:
        return abs(u - v) <= self.tol * max(1.0, abs(u), abs(v))

    def __eq__(self, other):
        return isinstance(other, ComplexField)

    def __hash__(self):
        return hash("complex")


QQ = RationalField()
CC = ComplexField()


def field_of(v) -> Field:
    """The field a scalar value naturally lives in."""
    if isinstance(v, (int, Fraction)):
        return QQ
    if isinstance(v, Cyclotomic):
        return CyclotomicField(v.m)
    if isinstance(v, (float, complex)):
        return CC
    raise ScalarError(f"unknown scalar {v!r}")


def common_field(*values) -> Field:
    """Smallest supported field containing all values.

    Rationals sit inside everything; floats absorb rationals but refuse
    exact cyclotomics (embed those explicitly); two cyclotomic indices are
    only merged when one divides the other.
    """
    fields = [field_of(v) for v in values]
    if any(isinstance(f, ComplexField) for f in fields):
        if any(isinstance(f, CyclotomicField) for f in fields):
            raise ScalarError("mixing exact cyclotomics with floats; embed explicitly")
        return CC
    result: Field = QQ
    for f in fields:
        if isinstance(f, CyclotomicField):
            if isinstance(result, CyclotomicField) and result.m != f.m:
                if f.m % result.m == 0:
                    result = f
                elif result.m % f.m != 0:
                    raise ScalarError(
                        f"incompatible cyclotomic fields Q(zeta_{result.m}) "
                        f"and Q(zeta_{f.m})"
                    )
            else:
                result = f
    return result


def promote(v, field: Field):
    """Explicit promotion Q -> Q(zeta_m) -> complex (and zeta-index divisibility)."""
    return field.coerce(v)


def embed_complex(s) -> complex:
    """Canonical embedding into C, with zeta_m mapped to exp(2*pi*i/m)."""
    if isinstance(s, (int, Fraction)):
        return complex(s)
    if isinstance(s, Cyclotomic):
        return s.to_complex()
    if isinstance(s, (float, complex)):
        return complex(s)
    raise ScalarError(f"cannot embed {s!r}")


def field_arith(a, b, op: str):
    """Four-function field arithmetic with explicit tag discipline.

    ``op`` is one of ``add | sub | mul | div``.  Operands must live in the
    same field or one must be rational (the canonical subfield); anything
    else raises :class:`ScalarError`.
    """
    fa, fb = field_of(a), field_of(b)
    if fa != fb and not isinstance(fa, RationalField) and not isinstance(fb, RationalField):
        raise ScalarError(f"field tag mismatch: {fa.tag} vs {fb.tag}")
    if (fa.is_exact != fb.is_exact):
        raise ScalarError(f"field tag mismatch: {fa.tag} vs {fb.tag}")
    if op == "add":
        return a + b
    if op == "sub":
        return a - b
    if op == "mul":
        return a * b
    if op == "div":
        if b == 0:
            raise ScalarError("division by zero")
        return a / b
    raise ScalarError(f"unknown op {op!r}")


def cube_roots_of_unity(field: Field) -> list:
    """All solutions of w^3 = 1 in the given exact field."""
    roots = [field.one]
    if isinstance(field, CyclotomicField) and field.m % 3 == 0:
        roots += [zeta(field.m, field.m // 3), zeta(field.m, 2 * field.m // 3)]
    return roots


# ---------------------------------------------------------------------------
# textual scalar format: "p/q" for rationals, polynomials in "z" for
# cyclotomics ("1/2*z^2 - 1"), two-element [re, im] lists for complex.

_TERM_RE = re.compile(
    r"^(?P<coef>[+-]?\d+(?:/\d+)?)?(?P<star>\*)?(?P<z>z(?:\^(?P<exp>\d+))?)?$"
)


def format_scalar(v) -> str:
    if isinstance(v, (int, Fraction)):
        return str(Fraction(v))
    if isinstance(v, Cyclotomic):
        parts = []
        for k in range(len(v.coeffs) - 1, -1, -1):
            c = v.coeffs[k]
            if c == 0:
                continue
            mag = abs(c)
            body = "z" if k == 1 else f"z^{k}" if k else ""
            if body and mag == 1:
                text = body
            elif body:
                text = f"{mag}*{body}"
            else:
                text = str(mag)
            parts.append(("- " if c < 0 else "+ " if parts else "") + text)
        if not parts:
            return "0"
        head = parts[0]
        if head.startswith("- "):
            head = "-" + head[2:]
        return " ".join([head] + parts[1:])
    if isinstance(v, (float, complex)):
        v = complex(v)
        return f"[{v.real!r}, {v.imag!r}]"
    raise ScalarError(f"cannot format {v!r}")


def parse_scalar(text: str, field: Field):
    """Parse the textual scalar format into a value of ``field``."""
    text = text.strip()
    if isinstance(field, ComplexField):
        stripped = text.strip("[] ")
        parts = [p for p in re.split(r"[,\s]+", stripped) if p]
        if len(parts) == 2:
            return complex(float(parts[0]), float(parts[1]))
        try:
            return complex(text)
        except ValueError as exc:
            raise ScalarError(f"bad complex scalar {text!r}") from exc
    total = None
    for signed_term in _split_terms(text):
        sign, term = signed_term
        m = _TERM_RE.match(term.replace(" ", ""))
        if not m or (m.group("coef") is None and m.group("z") is None):
            raise ScalarError(f"bad scalar term {term!r} in {text!r}")
        coef = Fraction(m.group("coef")) if m.group("coef") else Fraction(1)
        if sign == "-":
            coef = -coef
        if m.group("z"):
            if not isinstance(field, CyclotomicField):
                raise ScalarError(f"'z' appears in {text!r} but the field is {field.tag}")
            exp = int(m.group("exp") or 1)
            value = coef * zeta(field.m, exp)
        else:
            value = field.coerce(coef)
        total = value if total is None else total + value
    if total is None:
        raise ScalarError(f"empty scalar {text!r}")
    return field.coerce(total)


def _split_terms(text: str):
    out = []
    sign = "+"
    buf = ""
    for ch in text:
        if ch in "+-" and buf.strip():
            out.append((sign, buf.strip()))
            sign, buf = ch, ""
        elif ch in "+-" and not buf.strip():
            sign = "-" if (sign == "-") != (ch == "-") else "+"
        else:
            buf += ch
    if buf.strip():
        out.append((sign, buf.strip()))
    return out


def parse_field(tag: str) -> Field:
    """Field from its textual tag: "Q", "Q(zeta_m)", or "complex"."""
    tag = tag.strip()
    if tag == "Q":
        return QQ
    if tag == "complex":
        return CC
    m = re.match(r"^Q\(zeta_(\d+)\)$", tag)
    if m:
        return CyclotomicField(int(m.group(1)))
    raise ScalarError(f"unknown field tag {tag!r}")
