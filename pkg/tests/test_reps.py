import random
from fractions import Fraction

import numpy as np
import pytest

from sklyanin._linalg import mat_identity, mat_mul
from sklyanin.ncpoly import NcPoly, ParameterTriple, central_g, evaluate, sklyanin_relations
from sklyanin.reps import (
    Dim1Solutions,
    MatRep,
    burnside_dimension,
    classify_rep,
    family_degenerate,
    family_s1m1m1,
    g_action,
    irreducible,
    objective,
    objective_gradient,
    rep_from_dict,
    rep_to_dict,
    search_numeric,
    solve_dim1,
    verify_rep,
)
from sklyanin.scalars import CC, QQ, CyclotomicField, zeta

K12 = CyclotomicField(12)
S_HAT = (1, -1, -1)


def frac_mat(rows):
    return [[Fraction(v) for v in row] for row in rows]


def zero_rep(d=2):
    z = [[Fraction(0)] * d for _ in range(d)]
    return MatRep(z, [r[:] for r in z], [r[:] for r in z], QQ)


# -- verify -----------------------------------------------------------------


def test_trivial_rep_verifies_everywhere():
    assert verify_rep((1, 2, 3), zero_rep()) == 0
    assert verify_rep(S_HAT, zero_rep(3)) == 0


def test_family1_verifies_over_zeta4_and_zeta12():
    rep = family_s1m1m1(1, 1, 1)
    assert rep.field == CyclotomicField(4)
    assert verify_rep(S_HAT, rep) == 0
    rep12 = family_s1m1m1(1, 1, 1, field=K12)
    assert verify_rep(S_HAT, rep12) == 0
    # independent numeric route: embed and multiply with numpy
    from sklyanin.scalars import embed_complex

    X, Y, Z = (
        np.array([[complex(embed_complex(v)) for v in row] for row in m])
        for m in rep.matrices()
    )
    r1 = Y @ Z - Z @ Y - X @ X
    assert np.max(np.abs(r1)) < 1e-12


def test_both_families_all_parameter_pairs():
    pairs = [(1, 1), (2, -1), (zeta(12), 3)]
    for which in (1, 2):
        for z3, z4 in pairs:
            rep = family_s1m1m1(which, z3, z4, field=K12)
            assert verify_rep(S_HAT, rep) == 0
            assert irreducible(rep)  # z3 * z4 != 0 here
            lam, torsion = g_action(S_HAT, rep)
            assert lam is not None and lam != 0
            assert torsion == "g_torsionfree"
            assert rep.dimension == 2  # inside the band [6/3, 6]


def test_family1_minus_branch_and_z4_zero():
    rep = family_s1m1m1(1, 1, 1, sign=-1)
    assert verify_rep(S_HAT, rep) == 0
    degenerate = family_s1m1m1(1, 1, 0)
    assert verify_rep(S_HAT, degenerate) == 0
    assert not irreducible(degenerate)


def test_family_requires_nonzero_z3():
    with pytest.raises(ValueError):
        family_s1m1m1(1, 0, 1)


def test_verify_rejects_nonzero_tolerance_on_exact_fields():
    with pytest.raises(ValueError):
        verify_rep(S_HAT, zero_rep(), tolerance=1e-9)


def test_residual_scale_covariance():
    # scaling the triple by t scales each quadratic relation by t^2
    one = Fraction(1)
    X = frac_mat([[1, 0], [0, 1]])
    rep = MatRep(X, X, X, QQ)
    base = verify_rep((1, 2, 3), rep)
    scaled = MatRep(
        [[2 * v for v in r] for r in X],
        [[2 * v for v in r] for r in X],
        [[2 * v for v in r] for r in X],
        QQ,
    )
    assert verify_rep((1, 2, 3), scaled) == 4 * base != 0


def test_residual_conjugation_invariance():
    rep = family_s1m1m1(1, 2, -1, field=K12)
    P = [[K12.one, K12.coerce(2)], [K12.zero, K12.one]]
    Pinv = [[K12.one, K12.coerce(-2)], [K12.zero, K12.one]]
    conj = MatRep(
        *(mat_mul(mat_mul(P, M), Pinv) for M in rep.matrices()), field=K12
    )
    assert verify_rep(S_HAT, rep) == 0 == verify_rep(S_HAT, conj)


# -- irreducibility ----------------------------------------------------------


def test_burnside_full_matrix_units():
    for d in (2, 3, 4):
        units = []
        for i in range(d):
            for j in range(d):
                m = [[Fraction(0)] * d for _ in range(d)]
                m[i][j] = Fraction(1)
                units.append(m)
        assert burnside_dimension(units, QQ) == d * d


def test_burnside_block_diagonal_reducible():
    X = frac_mat([[1, 0], [0, 2]])
    Y = frac_mat([[3, 0], [0, 4]])
    Z = frac_mat([[5, 0], [0, 6]])
    assert not irreducible(MatRep(X, Y, Z, QQ))


def test_schur_consistency_on_exact_irreducibles():
    rep = family_s1m1m1(2, 3, 5, field=K12)
    assert irreducible(rep)
    lam, _ = g_action(S_HAT, rep)
    assert lam is not None  # scalar by Schur; non-scalar would be a defect


# -- g action ----------------------------------------------------------------


def test_g_action_trivial_rep():
    lam, torsion = g_action((1, 2, 3), zero_rep())
    assert lam == 0 and torsion == "g_torsion"


def test_g_action_explicit_value():
    rep = family_s1m1m1(1, 1, 1)
    lam, torsion = g_action(S_HAT, rep)
    # hand value: with z3 = z4 = 1 the printed triple gives g = 8 * I for
    # g = -2x^3 + 2yxz
    assert lam == 8
    assert torsion == "g_torsionfree"


def test_g_action_degenerate_family_is_torsion():
    rep = family_degenerate((0, 0, 1), 1)
    lam, torsion = g_action((0, 0, 1), rep)
    assert lam == 0 and torsion == "g_torsion"


# -- one-dimensional solutions ------------------------------------------------


def sympy_dim1_nontrivial(a, b, c):
    """Oracle: solve the scalar system over C with sympy, x normalized to 1
    (solutions with x = 0 collapse to 0 whenever c != 0 and a + b != 0)."""
    import sympy

    x, y, z = sympy.symbols("x y z")
    s = a + b
    eqs = [s * y * z + c * x**2, s * z * x + c * y**2, s * x * y + c * z**2]
    return sympy.solve([e.subs(x, 1) for e in eqs], [y, z], dict=True)


def test_solve_dim1_trivial_cases():
    assert solve_dim1((1, 2, 3)).kind == "trivial_only"
    assert solve_dim1(S_HAT).kind == "trivial_only"
    assert sympy_dim1_nontrivial(1, 2, 3) == []


def test_solve_dim1_axes():
    sol = solve_dim1((1, 1, 0))
    assert sol.kind == "coordinate_axes"
    assert len(sol.families) == 3


def test_solve_dim1_everything():
    assert solve_dim1((1, -1, 0)).kind == "everything"


def test_solve_dim1_finite_families():
    sol = solve_dim1((1, 1, -2))
    assert sol.kind == "finite_families"
    # each family really solves the scalar system
    for x, y, z in sol.families:
        s = Fraction(2)
        c = Fraction(-2)
        assert s * y * z + c * x * x == 0
        assert s * z * x + c * y * y == 0
        assert s * x * y + c * z * z == 0
    assert len(sympy_dim1_nontrivial(1, 1, -2)) == 3
    k3 = CyclotomicField(3)
    sol3 = solve_dim1(ParameterTriple(1, 1, -2, k3))
    assert sol3.kind == "finite_families" and len(sol3.families) == 3


def test_smooth_parameters_have_only_trivial_dim1():
    rng = random.Random(31)
    checked = 0
    while checked < 10:
        try:
            t = ParameterTriple(
                Fraction(rng.randint(-9, 9)),
                Fraction(rng.randint(-9, 9)),
                Fraction(rng.randint(-9, 9)),
            )
        except ValueError:
            continue
        if not t.is_smooth:
            continue
        assert solve_dim1(t).kind == "trivial_only"
        checked += 1


# -- degenerate families -------------------------------------------------------


def test_degenerate_families_verify_and_irreducibility_is_computed():
    expectations = []
    for n in (1, 2, 3):
        for params in [(1, 0, 0), (0, 1, 0), (0, 0, 1)]:
            rep = family_degenerate(params, n)
            assert verify_rep(params, rep) == 0
            expectations.append((params, n, irreducible(rep)))
    # frozen from the span-closure computation: the first two cases carry a
    # coordinate invariant subspace for every n, the third only for n >= 2
    as_dict = {(p, n): irr for p, n, irr in expectations}
    assert as_dict[((1, 0, 0), 1)] is False
    assert as_dict[((0, 1, 0), 2)] is False
    assert as_dict[((0, 0, 1), 1)] is True
    assert as_dict[((0, 0, 1), 2)] is False


def test_degenerate_family_b3c3():
    k3 = CyclotomicField(3)
    params = ParameterTriple(1, zeta(3), zeta(3) ** 2, k3)
    for n in (1, 2, 3):
        rep = family_degenerate(params, n, scalars=(1, 1, 1), p=1)
        assert verify_rep(params, rep) == 0
    assert irreducible(family_degenerate(params, 1))


def test_family_degenerate_rejects_smooth_params():
    with pytest.raises(ValueError):
        family_degenerate((1, 2, 3), 1)


# -- rep files -----------------------------------------------------------------


def test_rep_dict_roundtrip_exact():
    rep = family_s1m1m1(2, zeta(12), 3)
    data = rep_to_dict(rep)
    back = rep_from_dict(data)
    assert back.field == rep.field
    assert back.matrices() == rep.matrices()


def test_rep_dict_roundtrip_complex():
    X = np.array([[1.0 + 2j, 0], [0, 1.0]])
    rep = MatRep(X, X, X, CC)
    back = rep_from_dict(rep_to_dict(rep))
    assert np.allclose(back.X, X)


# -- numerical search ------------------------------------------------------------


def test_gradient_matches_finite_differences():
    rng = np.random.default_rng(12345)
    abc = (1.0 + 0j, 1.0 + 0j, 5.0 + 0j)
    d = 2
    h = 1e-5
    for _ in range(20):
        v = rng.standard_normal(6 * d * d)
        grad = objective_gradient(v, abc, d)
        fd = np.zeros_like(v)
        for i in range(len(v)):
            e = np.zeros_like(v)
            e[i] = h
            fd[i] = (objective(v + e, abc, d) - objective(v - e, abc, d)) / (2 * h)
        denom = max(1.0, float(np.linalg.norm(fd)))
        assert np.linalg.norm(grad - fd) / denom < 1e-6


def test_search_finds_irreducible_at_115_dim2():
    result = search_numeric((1, 1, 5), 2, restarts=50, tol=1e-8, seed=7)
    winners = [
        (rep, cls)
        for rep, cls in result.reps
        if cls.irreducible and not cls.trivial
    ]
    assert winners
    rep, cls = winners[0]
    assert verify_rep((1, 1, 5), rep, 1e-9) < 1e-10
    assert not result.findings


def test_search_dim3_at_115_all_reducible():
    result = search_numeric((1, 1, 5), 3, restarts=30, tol=1e-8, seed=11)
    accepted = [(rep, cls) for rep, cls in result.reps if not cls.trivial]
    assert all(not cls.irreducible for _, cls in accepted)


def test_search_123_no_nontrivial_irreducible():
    for d in (1, 2):
        result = search_numeric((1, 2, 3), d, restarts=25, tol=1e-8, seed=3)
        assert all(
            cls.trivial or not cls.irreducible for _, cls in result.reps
        )


def test_search_determinism():
    r1 = search_numeric((1, 1, 5), 2, restarts=10, tol=1e-8, seed=42)
    r2 = search_numeric((1, 1, 5), 2, restarts=10, tol=1e-8, seed=42)
    assert len(r1.reps) == len(r2.reps)
    for (rep1, _), (rep2, _) in zip(r1.reps, r2.reps):
        assert np.allclose(rep1.X, rep2.X)


def test_classify_rep_assembles_fields():
    rep = family_s1m1m1(1, 1, 1)
    cls = classify_rep(S_HAT, rep)
    assert cls.residual == 0
    assert cls.irreducible
    assert cls.g_scalar == 8
    assert cls.torsion_type == "g_torsionfree"
    assert not cls.trivial
