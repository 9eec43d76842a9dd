import random
from fractions import Fraction

import pytest

from sklyanin.ncpoly import (
    GENERATORS,
    NcPoly,
    ParameterTriple,
    build_phi_marg,
    central_g,
    cyclic_derivative,
    evaluate,
    format_ncpoly,
    parse_ncpoly,
    sklyanin_relations,
    words_of_degree,
)
from sklyanin.scalars import QQ, CyclotomicField, zeta


def P(text):
    return parse_ncpoly(text, QQ)


def test_cyclic_derivative_of_commutative_superpotential():
    phi = P("xyz - xzy")
    assert cyclic_derivative(phi, "x") == P("yz - zy")
    assert cyclic_derivative(phi, "y") == P("zx - xz")
    assert cyclic_derivative(phi, "z") == P("xy - yx")


def test_cyclic_derivative_of_marginal_superpotential():
    a, b, c = Fraction(5), Fraction(-7), Fraction(9)
    phi = NcPoly({"xyz": a, "yxz": b, "xxx": c / 3, "yyy": c / 3, "zzz": c / 3})
    assert cyclic_derivative(phi, "x") == NcPoly({"yz": a, "zy": b, "xx": c})


def test_cyclic_derivative_no_occurrence():
    assert cyclic_derivative(P("xxx"), "y").is_zero()


def test_cyclic_derivative_is_cyclically_invariant():
    rng = random.Random(11)
    for _ in range(50):
        d = rng.randint(1, 6)
        w = "".join(rng.choice(GENERATORS) for _ in range(d))
        rot = rng.randrange(d)
        wrot = w[rot:] + w[:rot]
        for g in GENERATORS:
            assert cyclic_derivative(NcPoly.monomial(w), g) == cyclic_derivative(
                NcPoly.monomial(wrot), g
            )


def test_cyclic_derivative_term_count():
    rng = random.Random(12)
    for _ in range(30):
        w = "".join(rng.choice(GENERATORS) for _ in range(rng.randint(1, 6)))
        for g in GENERATORS:
            der = cyclic_derivative(NcPoly.monomial(w), g)
            # terms can merge, so compare total multiplicity via a
            # coefficient-sum count on a fresh generic word instead
            total = sum(1 for ch in w if ch == g)
            assert sum(der.terms.values()) == total


def test_build_phi_marg_examples():
    assert build_phi_marg((1, 1, 0)) == P("xyz + yxz")
    assert build_phi_marg((0, 0, 3)) == P("xxx + yyy + zzz")
    assert build_phi_marg((1, -1, 0)) == P("xyz - yxz")


def test_sklyanin_relations_examples():
    r = sklyanin_relations((1, 1, 0))
    assert r == (P("yz + zy"), P("zx + xz"), P("xy + yx"))
    assert sklyanin_relations((1, 0, 0)) == (P("yz"), P("zx"), P("xy"))


def test_relations_are_cyclic_derivatives_of_phi():
    rng = random.Random(13)
    for _ in range(10):
        triple = tuple(Fraction(rng.randint(-9, 9)) for _ in range(3))
        if triple == (0, 0, 0):
            continue
        phi = build_phi_marg(triple)
        rels = sklyanin_relations(triple)
        for g, rel in zip(GENERATORS, rels):
            assert cyclic_derivative(phi, g) == rel
    k3 = CyclotomicField(3)
    t = ParameterTriple(1, zeta(3), 2, k3)
    phi = build_phi_marg(t)
    for g, rel in zip(GENERATORS, sklyanin_relations(t)):
        assert cyclic_derivative(phi, g) == rel


def test_central_g_values():
    assert central_g((1, -1, -1)) == P("-2*xxx + 2*yxz")
    assert central_g((1, 2, 3)) == P("-78*xxx - 19*xyz + 52*yxz + 57*yyy")
    q = zeta(12)
    g = central_g(ParameterTriple(1, q, 0))
    assert g == NcPoly({"xyz": q**3, "yxz": -q})


def test_parameter_triple_flags():
    assert ParameterTriple(1, 1, 1).in_degenerate_set
    assert ParameterTriple(0, 0, 1).in_degenerate_set
    assert not ParameterTriple(1, 2, 3).in_degenerate_set
    assert ParameterTriple(1, 2, 3).satisfies_condition_2
    assert not ParameterTriple(1, -1, 0).satisfies_condition_2
    assert ParameterTriple(1, 2, 3).is_smooth
    # (1,1,-2): (a+b)^3 = -c^3 forces (3abc)^3 = lambda^3
    assert not ParameterTriple(1, 1, -2).satisfies_condition_2
    with pytest.raises(ValueError):
        ParameterTriple(0, 0, 0)


class Rep:
    def __init__(self, X, Y, Z):
        self.X, self.Y, self.Z = X, Y, Z


def test_evaluate_identity_commutator():
    one = [[Fraction(1), Fraction(0)], [Fraction(0), Fraction(1)]]
    out = evaluate(P("xy - yx"), Rep(one, one, one))
    assert all(v == 0 for row in out for v in row)


def test_evaluate_nilpotent_square():
    X = [[Fraction(0), Fraction(1)], [Fraction(0), Fraction(0)]]
    Z = [[Fraction(0), Fraction(0)], [Fraction(0), Fraction(0)]]
    out = evaluate(P("xx"), Rep(X, Z, Z))
    assert all(v == 0 for row in out for v in row)


def test_evaluate_matches_direct_product():
    # oracle: direct matrix multiplication, written out by hand
    k4 = CyclotomicField(4)
    i = zeta(4)
    one, zero = k4.one, k4.zero
    Y = [[one, i], [i, one]]
    Z = [[one, -one], [one, one]]

    def mul(A, B):
        return [
            [sum((A[r][k] * B[k] [c] for k in range(2)), zero) for c in range(2)]
            for r in range(2)
        ]

    def add(A, B):
        return [[A[r][c] + B[r][c] for c in range(2)] for r in range(2)]

    expected = add(mul(Y, Z), mul(Z, Y))
    got = evaluate(P("yz + zy"), Rep([[one, zero], [zero, one]], Y, Z))
    assert got == expected


def test_evaluate_is_ring_homomorphism():
    rng = random.Random(17)

    def rand_poly():
        return NcPoly(
            {
                "".join(rng.choice(GENERATORS) for _ in range(rng.randint(0, 3))): Fraction(
                    rng.randint(-4, 4)
                )
                for _ in range(3)
            }
        )

    def rand_mat():
        return [[Fraction(rng.randint(-3, 3)) for _ in range(2)] for _ in range(2)]

    for _ in range(20):
        p, q = rand_poly(), rand_poly()
        rep = Rep(rand_mat(), rand_mat(), rand_mat())
        from sklyanin._linalg import mat_mul

        lhs = evaluate(p * q, rep)
        rhs = mat_mul(evaluate(p, rep), evaluate(q, rep))
        assert lhs == rhs


def test_format_parse_roundtrip():
    p = P("-2*xxx + 2*yxz")
    assert format_ncpoly(p) == "-2*xxx + 2*yxz"
    assert parse_ncpoly(format_ncpoly(p), QQ) == p
    k12 = CyclotomicField(12)
    q = NcPoly({"xy": zeta(12) ** 2 - 1, "zz": Fraction(1, 3)})
    assert parse_ncpoly(format_ncpoly(q), k12) == q
    assert parse_ncpoly("xyz", QQ) == NcPoly.monomial("xyz", Fraction(1))


def test_words_of_degree():
    assert words_of_degree(0) == [""]
    assert len(words_of_degree(4)) == 81
    assert words_of_degree(1) == ["x", "y", "z"]
