import json
import subprocess
import sys

import pytest

from sklyanin.cli import dispatch, main


def run_cli(argv):
    return dispatch(argv)


def test_classify_115():
    report, code = run_cli(["classify", "--a", "1", "--b", "1", "--c", "5"])
    assert code == 0
    res = report["results"]
    assert res["sigma_order"] == 2
    assert res["pi_degree"] == 2
    assert res["dim_bounds"]["g_torsionfree"] == [2, 2]
    assert res["rank_over_center"] == 4
    assert report["command"] == "classify"
    assert "artifact_version" in report


def test_classify_exceeds():
    report, code = run_cli(["classify", "--a", "1", "--b", "2", "--c", "3", "--max-order", "60"])
    assert code == 0
    assert report["results"]["sigma_order_exceeds"] == 60
    assert report["results"]["pi_degree"] is None


def test_classify_cyclotomic_field():
    report, code = run_cli(
        ["classify", "--a", "1", "--b", "2", "--c", "z", "--field", "Q(zeta_3)"]
    )
    assert code == 0
    assert report["results"]["sigma_order"] == 6


def test_curve_123():
    report, code = run_cli(["curve", "--a", "1", "--b", "2", "--c", "3"])
    assert code == 0
    res = report["results"]
    assert res["lambda"] == "36" and res["mu"] == "6"
    assert res["classification"] == "smooth_cubic"


def test_hilbert_123():
    report, code = run_cli(["hilbert", "--a", "1", "--b", "2", "--c", "3", "--max-degree", "4"])
    assert code == 0
    res = report["results"]
    assert res["dims"] == [1, 3, 6, 10, 15]
    assert res["mod_g_dims"] == [1, 3, 6, 9, 12]
    assert res["polynomial_profile"] is True


def test_center_skew_q1():
    report, code = run_cli(["center", "--mode", "skew", "--q", "1", "--max-degree", "4"])
    assert code == 0
    res = report["results"]
    assert res["sigma_order"] == 2
    assert res["kappa"] == "-1"
    assert res["relation_holds"] is True
    assert res["g_scalar_discrepancy"] is True


def test_center_shat():
    report, code = run_cli(["center", "--mode", "shat"])
    assert code == 0
    assert report["results"]["all_central"] is True


def test_center_invariants():
    report, code = run_cli(["center", "--mode", "invariants", "--n", "2", "--max-degree", "8"])
    assert code == 0
    assert report["results"]["holds"] is True


def test_validation_errors_exit_2():
    report, code = run_cli(["center", "--mode", "skew", "--q", "2"])
    assert code == 2 and "error" in report
    report, code = run_cli(["classify", "--a", "0", "--b", "0", "--c", "0"])
    assert code == 2
    report, code = run_cli(["classify", "--a", "bogus(", "--b", "1", "--c", "1"])
    assert code == 2


def test_verify_rep_roundtrip(tmp_path):
    from sklyanin.reps import family_s1m1m1, rep_to_dict

    rep = family_s1m1m1(1, 1, 1, field=None)
    path = tmp_path / "rep.json"
    path.write_text(json.dumps(rep_to_dict(rep)))
    report, code = run_cli(
        ["verify-rep", "--a", "1", "--b", "-1", "--c", "-1", "--rep", str(path), "--field", "Q"]
    )
    assert code == 0
    res = report["results"]
    assert res["residual"] == "0"
    assert res["satisfies"] is True
    assert res["irreducible"] is True
    assert res["torsion"] == "g-torsionfree"
    assert res["dim_band"] == [2, 6]


def test_verify_rep_claim_irreducible_exit_3(tmp_path):
    from sklyanin.reps import family_degenerate, rep_to_dict

    rep = family_degenerate((1, 0, 0), 1)
    path = tmp_path / "deg.json"
    path.write_text(json.dumps(rep_to_dict(rep)))
    report, code = run_cli(
        [
            "verify-rep",
            "--a", "1", "--b", "0", "--c", "0",
            "--rep", str(path),
            "--claim-irreducible",
        ]
    )
    assert code == 3
    assert report["results"]["residual"] == "0"
    assert report["results"]["irreducible"] is False
    kinds = [f["kind"] for f in report["findings"]]
    assert "irreducibility_deviation" in kinds
    witness = report["findings"][kinds.index("irreducibility_deviation")][
        "witness_invariant_subspace"
    ]
    assert witness  # a nonzero proper invariant subspace is exhibited


def test_verify_rep_bad_file(tmp_path):
    path = tmp_path / "junk.json"
    path.write_text("{\"dimension\": 2}")
    report, code = run_cli(
        ["verify-rep", "--a", "1", "--b", "2", "--c", "3", "--rep", str(path)]
    )
    assert code == 2


def test_search_round_trip(tmp_path):
    report, code = run_cli(
        [
            "search",
            "--a", "1", "--b", "1", "--c", "5",
            "--dim", "2", "--restarts", "20", "--seed", "5", "--tol", "1e-8",
        ]
    )
    assert code == 0
    res = report["results"]
    assert res["accepted"] >= 1
    best = min(res["reps"], key=lambda r: r["residual"])
    assert best["residual"] < 1e-10
    # round-trip: re-verify the emitted representation file
    path = tmp_path / "found.json"
    path.write_text(json.dumps(best["rep"]))
    report2, code2 = run_cli(
        [
            "verify-rep",
            "--a", "1", "--b", "1", "--c", "5",
            "--rep", str(path),
            "--tol", "2e-8",
        ]
    )
    assert code2 == 0
    assert report2["results"]["satisfies"] is True
    assert report2["results"]["residual"] != "0"


def test_orbit_demo():
    report, code = run_cli(["orbit", "--n", "3", "--demo"])
    assert code == 0
    res = report["results"]
    assert res["phi_check"]["homomorphism"] is True
    assert len(res["multiplication_table_degree_le_2"]) == 4 * 9
    # the idempotent block: e_l * e_k = delta_{lk} e_l in degree 0
    deg0 = [t for t in res["multiplication_table_degree_le_2"] if t["left"][0] == 0 and t["right"][0] == 0]
    for entry in deg0:
        if entry["left"][1] == entry["right"][1]:
            assert entry["product"] == [0, entry["left"][1]]
        else:
            assert entry["product"] is None


def test_main_writes_json(capsys):
    code = main(["curve", "--a", "1", "--b", "1", "--c", "5"])
    captured = capsys.readouterr()
    assert code == 0
    payload = json.loads(captured.out)
    assert payload["results"]["classification"] == "smooth_cubic"


def test_console_entry_point():
    proc = subprocess.run(
        [sys.executable, "-m", "sklyanin.cli", "hilbert", "--a", "1", "--b", "1", "--c", "5",
         "--max-degree", "3"],
        capture_output=True,
        text=True,
    )
    assert proc.returncode == 0
    payload = json.loads(proc.stdout)
    assert payload["results"]["dims"] == [1, 3, 6, 10]


def test_unknown_command_exits_2():
    assert main(["frobnicate"]) == 2
