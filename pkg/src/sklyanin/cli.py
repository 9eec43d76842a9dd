"""Batch command-line frontend: every command validates its flags, runs the
corresponding library operations, and writes one JSON report to stdout.

Exit codes: 0 on success, 2 on validation errors (bad flags, malformed
scalars or representation files), 3 when a consistency check the library
asserts is violated (a finding with a witness is included in the report).

Scalars on the command line use the textual format of the scalar layer
("3/4", "1/2*z^2 - 1", "[1.5, -0.25]"); --field selects the coefficient
field (default Q).  All randomness is seeded and the seed is echoed.
The environment variable SKLYANIN_TOL supplies the default numerical
tolerance; --tol overrides it.
"""

from __future__ import annotations

import argparse
import json
import os
import sys
import time
from fractions import Fraction

from . import __version__
from .ncpoly import NcPoly, ParameterTriple, central_g, format_ncpoly, sklyanin_relations
from .scalars import (
    CC,
    QQ,
    Cyclotomic,
    ScalarError,
    embed_complex,
    format_scalar,
    parse_field,
    parse_scalar,
)

TOL_ENV_VAR = "SKLYANIN_TOL"


class ValidationError(Exception):
    pass


def encode_scalar(v):
    if isinstance(v, (complex, float)):
        v = complex(v)
        return [v.real, v.imag]
    return format_scalar(v)


def _default_tol() -> float:
    raw = os.environ.get(TOL_ENV_VAR)
    return float(raw) if raw else 1e-8


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="sklyanin",
        description="Exact computations with three-dimensional Sklyanin algebras",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    def add_params(p):
        p.add_argument("--a", required=True, help="parameter a (scalar text)")
        p.add_argument("--b", required=True, help="parameter b (scalar text)")
        p.add_argument("--c", required=True, help="parameter c (scalar text)")
        p.add_argument("--field", default="Q", help="Q | Q(zeta_m) | complex")

    p = sub.add_parser("classify", help="curve class, |sigma|, PI degree, dimension bands")
    add_params(p)
    p.add_argument("--max-order", type=int, default=200)

    p = sub.add_parser("curve", help="point-scheme cubic and its classification")
    add_params(p)

    p = sub.add_parser("hilbert", help="graded dimensions of S and S/Sg")
    add_params(p)
    p.add_argument("--max-degree", type=int, default=6)

    p = sub.add_parser("center", help="center reports (skew ring, S(1,-1,-1), invariants)")
    p.add_argument("--mode", required=True, choices=["skew", "shat", "invariants"])
    p.add_argument("--q", help="skew mode: the parameter q (root of unity)")
    p.add_argument("--field", default="Q", help="field for --q")
    p.add_argument("--n", type=int, help="invariants mode: the group order n")
    p.add_argument("--max-degree", type=int, default=None)

    p = sub.add_parser("verify-rep", help="verify a representation file against S(a,b,c)")
    add_params(p)
    p.add_argument("--rep", required=True, help="path to a representation JSON file")
    p.add_argument("--tol", type=float, default=None)
    p.add_argument(
        "--claim-irreducible",
        action="store_true",
        help="treat reducibility as a flagged finding (exit code 3)",
    )

    p = sub.add_parser("search", help="numerical search for d-dimensional solutions")
    add_params(p)
    p.add_argument("--dim", type=int, required=True)
    p.add_argument("--restarts", type=int, default=50)
    p.add_argument("--seed", type=int, default=0)
    p.add_argument("--tol", type=float, default=None)

    p = sub.add_parser("orbit", help="finite-orbit ring demo: shift products and phi check")
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--demo", action="store_true")
    p.add_argument("--seed", type=int, default=0)

    return parser


def _params_from_args(args) -> ParameterTriple:
    field = parse_field(args.field)
    try:
        a = parse_scalar(args.a, field)
        b = parse_scalar(args.b, field)
        c = parse_scalar(args.c, field)
    except ScalarError as exc:
        raise ValidationError(str(exc)) from exc
    try:
        return ParameterTriple(a, b, c, field)
    except ValueError as exc:
        raise ValidationError(str(exc)) from exc


def _sigma_fields(report) -> dict:
    out = {}
    if report.order is not None:
        out["sigma_order"] = report.order
        if report.residual is not None:
            out["sigma_residual"] = report.residual
    else:
        out["sigma_order_exceeds"] = report.max_order
    out["sigma_path"] = report.path
    return out


def run_classify(args):
    from .center import pi_report
    from .hesse import classify_params

    t = _params_from_args(args)
    hreport = classify_params(t, args.max_order)
    preport = pi_report(t, args.max_order)
    results = {
        "in_degenerate_set": t.in_degenerate_set,
        "smooth": t.is_smooth,
        "classification": hreport.classification,
        **_sigma_fields(hreport.sigma),
        "pi_degree": preport.pi_degree,
        "b_pi_degree": preport.b_pi_degree,
        "dim_bounds": {
            "g_torsionfree": list(preport.torsionfree_dim_bounds)
            if preport.torsionfree_dim_bounds
            else None,
            "g_torsion": preport.torsion_dim,
        },
        "rank_over_center": preport.rank_over_center,
        "notes": preport.notes,
    }
    return results, []


def run_curve(args):
    from .hesse import CurveSpec, point_scheme

    t = _params_from_args(args)
    curve = CurveSpec.from_params(t)
    det = point_scheme(*t.as_tuple())
    cubic_text = " + ".join(
        f"({format_scalar(c)})*x^{e[0]}y^{e[1]}z^{e[2]}" for e, c in sorted(det.items())
    )
    results = {
        "lambda": encode_scalar(curve.lam),
        "mu": encode_scalar(curve.mu),
        "classification": curve.classification,
        "cubic": cubic_text or "0",
    }
    return results, []


def run_hilbert(args):
    from .graded_quotient import hilbert_function, quotient_dims_mod_g

    t = _params_from_args(args)
    if args.max_degree < 0 or args.max_degree > 8:
        raise ValidationError("--max-degree must be between 0 and 8")
    dims = hilbert_function(list(sklyanin_relations(t)), args.max_degree, t.field)
    mod_g = quotient_dims_mod_g(t, args.max_degree, t.field)
    polynomial = dims == [(d + 1) * (d + 2) // 2 for d in range(args.max_degree + 1)]
    results = {
        "dims": dims,
        "mod_g_dims": mod_g,
        "polynomial_profile": polynomial,
    }
    return results, []


def run_center(args):
    from .center import invariant_ring_check, shat_center_check, skew_center_report

    if args.mode == "skew":
        if args.q is None:
            raise ValidationError("--mode skew needs --q")
        field = parse_field(args.field)
        try:
            q = parse_scalar(args.q, field)
            report = skew_center_report(q, args.max_degree or 4)
        except ScalarError as exc:
            raise ValidationError(str(exc)) from exc
        results = {
            "q": encode_scalar(q),
            "sigma_order": report.sigma_order,
            "q_multiplicative_order": report.q_multiplicative_order,
            "central_monomials": [list(e) for e in report.central_monomials],
            "kappa": encode_scalar(report.kappa),
            "relation_holds": report.relation_holds,
            "g_scalar_computed": encode_scalar(report.g_scalar_computed),
            "g_scalar_expected_shape": encode_scalar(report.g_scalar_expected_shape),
            "g_scalar_discrepancy": report.g_scalar_discrepancy,
        }
        return results, []
    if args.mode == "shat":
        report = shat_center_check()
        results = {
            "algebra": "S(1,-1,-1)",
            "g_central": report.g_central,
            "u1_central": report.u1_central,
            "u2_central": report.u2_central,
            "u3_central": report.u3_central,
            "all_central": report.all_central,
        }
        findings = []
        if not report.all_central:
            findings.append({"kind": "centrality_failure", "report": results})
        return results, findings
    if args.n is None:
        raise ValidationError("--mode invariants needs --n")
    max_degree = args.max_degree or 3 * args.n
    report = invariant_ring_check(args.n, max_degree)
    results = {
        "n": args.n,
        "max_degree": max_degree,
        "holds": report.holds,
        "invariant_count": report.invariant_count,
        "witness": list(report.witness) if report.witness else None,
    }
    findings = []
    if not report.holds:
        findings.append({"kind": "invariant_ring_failure", "witness": results["witness"]})
    return results, findings


def run_verify_rep(args):
    from .reps import (
        classify_rep,
        invariant_subspace_witness,
        rep_from_dict,
    )

    t = _params_from_args(args)
    try:
        with open(args.rep, "r", encoding="utf-8") as fh:
            rep = rep_from_dict(json.load(fh))
    except (OSError, KeyError, ValueError, ScalarError) as exc:
        raise ValidationError(f"bad representation file: {exc}") from exc
    tol = args.tol if args.tol is not None else (0.0 if rep.field.is_exact else _default_tol())
    cls = classify_rep(t, rep, tolerance=tol or 1e-9)
    results = {
        "dimension": rep.dimension,
        "rep_field": rep.field.tag,
        "residual": encode_scalar(cls.residual) if cls.residual else "0",
        "satisfies": (cls.residual == 0) if rep.field.is_exact else (cls.residual <= tol),
        "irreducible": cls.irreducible,
        "g_scalar": encode_scalar(cls.g_scalar) if cls.g_scalar is not None else None,
        "g_is_scalar": cls.g_scalar is not None,
        "torsion": cls.torsion_type.replace("_", "-"),
        "trivial": cls.trivial,
    }
    findings = []
    if cls.irreducible and rep.field.is_exact and cls.g_scalar is None:
        findings.append({"kind": "non_scalar_g_on_exact_irreducible"})
    if args.claim_irreducible and not cls.irreducible:
        witness = invariant_subspace_witness(rep) if rep.field.is_exact else None
        findings.append(
            {
                "kind": "irreducibility_deviation",
                "witness_invariant_subspace": [
                    [encode_scalar(v) for v in vec] for vec in witness
                ]
                if witness
                else None,
            }
        )
    # dimension-band consistency for satisfied irreducibles
    if results["satisfies"] and cls.irreducible and not cls.trivial:
        from .hesse import classify_params

        band_report = classify_params(t)
        if band_report.sigma_order is not None:
            lo, hi = band_report.torsionfree_dim_bounds or (
                band_report.sigma_order,
                band_report.sigma_order,
            )
            if cls.torsion_type == "g_torsion":
                lo = hi = band_report.torsion_dim
            results["dim_band"] = [lo, hi]
            if not (lo <= rep.dimension <= hi):
                findings.append(
                    {
                        "kind": "dimension_outside_band",
                        "dimension": rep.dimension,
                        "band": [lo, hi],
                    }
                )
    return results, findings


def run_search(args):
    from .reps import rep_to_dict, search_numeric

    t = _params_from_args(args)
    if args.dim < 1:
        raise ValidationError("--dim must be >= 1")
    tol = args.tol if args.tol is not None else _default_tol()
    result = search_numeric(t, args.dim, restarts=args.restarts, tol=tol, seed=args.seed)
    reps_out = []
    for rep, cls in result.reps:
        reps_out.append(
            {
                "rep": rep_to_dict(rep),
                "residual": float(cls.residual),
                "irreducible": cls.irreducible,
                "g_scalar": encode_scalar(cls.g_scalar) if cls.g_scalar is not None else None,
                "torsion": cls.torsion_type.replace("_", "-"),
                "trivial": cls.trivial,
            }
        )
    results = {
        "dimension": args.dim,
        "restarts": args.restarts,
        "accepted": len(reps_out),
        "reps": reps_out,
    }
    return results, list(result.findings)


def run_orbit(args):
    from .orbit_ring import OrbitElement, orbit_mul, phi_to_matrix

    import random as _random

    if args.n < 1:
        raise ValidationError("--n must be >= 1")
    n = args.n
    # multiplication table of the indicator basis elements, total degree <= 2
    table = []
    for i, j in [(0, 0), (0, 1), (1, 0), (1, 1)]:
        for l in range(n):
            for k in range(n):
                left = OrbitElement(n, i, tuple(Fraction(int(t == l)) for t in range(n)))
                right = OrbitElement(n, j, tuple(Fraction(int(t == k)) for t in range(n)))
                prod = orbit_mul(left, right)
                nonzero = [t for t, c in enumerate(prod.coeffs) if c != 0]
                table.append(
                    {
                        "left": [i, l + 1],
                        "right": [j, k + 1],
                        "product": [prod.degree, nonzero[0] + 1] if nonzero else None,
                    }
                )
    rng = _random.Random(args.seed)
    checked = passed = 0
    for _ in range(50):
        i, j = rng.randint(0, 4), rng.randint(0, 4)
        e = OrbitElement(n, i, tuple(Fraction(rng.randint(-9, 9)) for _ in range(n)))
        f = OrbitElement(n, j, tuple(Fraction(rng.randint(-9, 9)) for _ in range(n)))
        lhs = phi_to_matrix(orbit_mul(e, f))
        rhs = phi_to_matrix(e) * phi_to_matrix(f)
        checked += 1
        passed += int(lhs.entries == rhs.entries)
    results = {
        "n": n,
        "multiplication_table_degree_le_2": table,
        "phi_check": {"pairs": checked, "passed": passed, "homomorphism": passed == checked},
    }
    findings = []
    if passed != checked:
        findings.append({"kind": "phi_homomorphism_failure"})
    return results, findings


RUNNERS = {
    "classify": run_classify,
    "curve": run_curve,
    "hilbert": run_hilbert,
    "center": run_center,
    "verify-rep": run_verify_rep,
    "search": run_search,
    "orbit": run_orbit,
}


def _input_echo(args) -> dict:
    skip = {"command"}
    return {k: v for k, v in vars(args).items() if k not in skip}


def dispatch(argv) -> tuple[dict, int]:
    """Parse, run, and assemble the JSON report; returns (report, exit code)."""
    parser = build_parser()
    args = parser.parse_args(argv)
    started = time.perf_counter()
    report = {
        "command": args.command,
        "inputs": _input_echo(args),
        "artifact_version": __version__,
    }
    try:
        results, findings = RUNNERS[args.command](args)
    except ValidationError as exc:
        report["error"] = str(exc)
        report["elapsed_seconds"] = round(time.perf_counter() - started, 6)
        return report, 2
    report["results"] = results
    if findings:
        report["findings"] = findings
    report["elapsed_seconds"] = round(time.perf_counter() - started, 6)
    return report, 3 if findings else 0


def main(argv=None) -> int:
    try:
        report, code = dispatch(argv if argv is not None else sys.argv[1:])
    except SystemExit as exc:  # argparse validation
        return 2 if exc.code else 0
    sys.stdout.write(json.dumps(report, indent=2, sort_keys=False) + "\n")
    return code


if __name__ == "__main__":
    sys.exit(main())
