import os
import json
import shutil
import pytest

import carrycraft.carrycraft as cc
import carrycraft.core.scanner as sc
import carrycraft.core.valuation as va


@pytest.fixture
def tmp():

    os.mkdir("temp")
    yield "temp"
    shutil.rmtree("temp")


def _run(capsys, argv):

    status = cc.run(argv)
    return status, capsys.readouterr().out


def test_version(capsys):

    status, out = _run(capsys, ["--version"])

    assert status == 0
    assert out.strip() == cc.__version__


def test_no_mode(capsys):

    assert cc.run([]) == 1


def test_get_args_scan_defaults():

    args = cc.get_args(["scan", "--primes", "3,5,7", "--from", "1",
                        "--to", "1000"])

    assert args.jobs == 1
    assert args.leap
    assert args.verify_upto == 0
    assert cc.validate_format(args) == "bfile"


def test_scan_bfile(capsys):

    status, out = _run(capsys, ["scan", "--primes", "3,5,7", "--from", "1",
                                "--to", "1000"])

    assert status == 0
    assert out == "1 1\n2 10\n3 756\n4 757\n"


def test_scan_naive_csv(capsys):

    status, out = _run(capsys, ["scan", "--primes", "3,5,7", "--from", "1",
                                "--to", "10", "--naive", "--format", "csv"])

    assert status == 0
    assert out.splitlines() == ["n,maxdigit_3,maxdigit_5,maxdigit_7",
                                "1,1,1,1", "10,1,2,3"]


def test_scan_to_file(tmp, capsys):

    p = os.path.join(os.path.abspath(tmp), "hits.txt")
    status, out = _run(capsys, ["scan", "--primes", "3,5,7", "--from", "1",
                                "--to", "1000", "--out", p])

    assert status == 0
    assert out == ""
    with open(p) as fh:
        assert fh.read() == "1 1\n2 10\n3 756\n4 757\n"


def test_scan_invalid_prime(capsys):

    status, out = _run(capsys, ["scan", "--primes", "3,9", "--from", "1",
                                "--to", "10"])

    assert status == 1
    assert out == ""


def test_scan_rejects_text_format(capsys):

    status, _ = _run(capsys, ["scan", "--primes", "3,5", "--from", "1",
                              "--to", "10", "--format", "text"])

    assert status == 1


def test_density_json(capsys):

    status, out = _run(capsys, ["density", "--primes", "3,5,7", "--from",
                                "1", "--to", "1000", "--format", "json"])

    rep = json.loads(out)

    assert status == 0
    assert rep["hits"] == 4
    assert rep["density"] == "1/250"


def test_density_text(capsys):

    status, out = _run(capsys, ["density", "--primes", "3,5,7", "--from",
                                "1", "--to", "1000"])

    assert status == 0
    assert "Hits: 4" in out
    assert "Density: 1/250" in out


def test_expand(capsys):

    status, out = _run(capsys, ["expand", "756", "--base", "7"])

    assert status == 0
    assert out == "2 1 3 0\n"


def test_expand_json(capsys):

    status, out = _run(capsys, ["expand", "756", "--base", "7", "--format",
                                "json"])

    assert json.loads(out) == {"n": 756, "base": 7, "digits": [0, 3, 1, 2],
                               "order": "lsd-first"}


def test_expand_invalid_base(capsys):

    status, _ = _run(capsys, ["expand", "756", "--base", "1"])

    assert status == 1


def test_good(capsys):

    assert _run(capsys, ["good", "757", "--base", "7", "--bound", "3"]) == \
        (0, "true\n")
    assert _run(capsys, ["good", "14", "--base", "5", "--bound", "3"]) == \
        (0, "false\n")


def test_valuation_text(capsys):

    status, out = _run(capsys, ["valuation", "--n", "756", "--primes",
                                "3,5,7"])

    assert status == 0
    assert out.splitlines()[0] == "N = 756"
    assert out.splitlines()[-1] == "gcd(C(2N, N), 105) = 1: true"


def test_valuation_json(capsys):

    status, out = _run(capsys, ["valuation", "--n", "4", "--primes", "5,7",
                                "--format", "json"])

    rep = json.loads(out)

    assert rep["coprime"] is False
    assert [r["nu_binom"] for r in rep["reports"]] == [1, 1]


def test_theorem_verify(capsys):

    status, out = _run(capsys, ["theorem", "verify", "--n", "757",
                                "--primes", "3,5,7", "--bounds", "2,3,4"])

    rep = json.loads(out)

    assert status == 0
    assert rep["final_verdict"] is True
    assert rep["sums"]["pqr"] == "29/12"
    assert [c["status"] for c in rep["components"]] == \
        ["found", "empty_interval", "empty_interval"]


def test_theorem_verify_criterion_defaults(capsys):

    status, out = _run(capsys, ["theorem", "verify", "--n", "10",
                                "--primes", "3,5,7", "--mode", "criterion"])

    rep = json.loads(out)

    assert status == 0
    assert rep["bounds"] == [1, 2, 3]
    assert rep["mode"] == "criterion"


def test_theorem_verify_hypothesis(capsys):

    status, out = _run(capsys, ["theorem", "verify", "--n", "14",
                                "--primes", "3,5,7", "--bounds", "2,3,4"])

    assert status == 1
    assert out == ""


def test_theorem_descent(capsys):

    status, out = _run(capsys, ["theorem", "descent", "--n", "75",
                                "--primes", "5,7", "--bounds", "3,4"])

    step = json.loads(out)

    assert status == 0
    assert step["branch"] == "add"
    assert step["candidate"] == 77


def test_theorem_descent_text(capsys):

    status, out = _run(capsys, ["theorem", "descent", "--n", "14",
                                "--primes", "3,5", "--bounds", "2,3",
                                "--format", "text"])

    assert status == 0
    assert "13" in out


def test_lemma1(capsys):

    status, out = _run(capsys, ["lemma1", "--p", "3", "--q", "5", "--bound",
                                "3", "--max-exp", "2"])

    witnesses = json.loads(out)

    assert status == 0
    assert [w["exponents"] for w in witnesses] == [[1, 2], [2, 2]]
    assert witnesses[0]["centre"] == "9"


def test_lemma1_triple(capsys):

    status, out = _run(capsys, ["lemma1", "--triple", "3,5,7", "--bounds",
                                "2,3,4", "--max-exp", "3"])

    assert status == 0
    assert sorted(json.loads(out)) == ["pq", "pr", "qr"]


def test_lemma1_missing_options(capsys):

    status, _ = _run(capsys, ["lemma1", "--p", "3", "--max-exp", "2"])

    assert status == 1


def test_lemma2(capsys):

    status, out = _run(capsys, ["lemma2", "--a", "5", "--base", "5",
                                "--bound", "2"])

    rep = json.loads(out)

    assert status == 0
    assert rep["value"] == 5
    assert rep["upper"] == "10"


def test_lemma2_empty_interval(capsys):

    status, out = _run(capsys, ["lemma2", "--a", "7", "--base", "3",
                                "--bound", "2"])

    assert status == 1
    assert out == ""


def test_commensurable(capsys):

    _, out = _run(capsys, ["commensurable", "4", "8"])
    assert json.loads(out) == {"e1": 4, "e2": 8, "commensurable": True,
                               "ratio": "2/3"}

    _, out = _run(capsys, ["commensurable", "3", "5"])
    assert json.loads(out)["ratio"] is None


def test_an(capsys):

    assert _run(capsys, ["an", "--n", "10"]) == (0, "3\n")


def test_an_epsilon(capsys):

    status, out = _run(capsys, ["an", "--n", "756", "--epsilon", "1/2"])

    lines = out.splitlines()

    assert status == 0
    assert lines[0] == "3"
    assert lines[1].endswith(": true")


def test_an_cap(capsys):

    status, _ = _run(capsys, ["an", "--n", "10", "--cap", "2"])

    assert status == 1


def test_catalan_json(capsys):

    status, out = _run(capsys, ["catalan", "--n", "4", "--primes", "7",
                                "--format", "json"])

    rep = json.loads(out)

    assert status == 0
    assert rep["coprime"] is False
    assert rep["valuations"] == {"7": 1}


def test_stirling_json(capsys):

    status, out = _run(capsys, ["stirling", "--n", "10", "--format",
                                "json"])

    rep = json.loads(out)

    assert status == 0
    assert rep["digit_count_estimate"] == 6
    assert rep["low_n"] is True


def test_ellipsoid(capsys):

    status, out = _run(capsys, ["ellipsoid", "--primes", "3,5,7",
                                "--bounds", "2,3,4", "--format", "json"])

    rep = json.loads(out)

    assert status == 0
    assert rep["region"] is True
    assert rep["sum"] == "29/12"


def test_ellipsoid_trace(capsys):

    status, out = _run(capsys, ["ellipsoid", "--primes", "3,5,7",
                                "--bounds", "2,3,4", "--trace", "xy",
                                "--samples", "2"])

    assert status == 0
    assert out.splitlines() == ["x,y", "1.41421,0", "0,2"]


def test_ellipsoid_trace_rejects_json(capsys):

    status, _ = _run(capsys, ["ellipsoid", "--primes", "3,5,7",
                              "--bounds", "2,3,4", "--trace", "xy",
                              "--format", "json"])

    assert status == 1


def test_oracle_sequence(capsys):

    status, out = _run(capsys, ["oracle", "sequence", "--name", "catalan",
                                "--to", "4"])

    assert status == 0
    assert out == "0 1\n1 1\n2 2\n3 5\n4 14\n"


def test_oracle_verify(capsys):

    status, out = _run(capsys, ["oracle", "verify", "--from", "1", "--to",
                                "500", "--primes", "3,5,7"])

    assert status == 0
    assert json.loads(out) == {"mismatches": []}


def test_scan_naive_verify_upto(capsys):

    status, out = _run(capsys, ["scan", "--primes", "3,5,7", "--from", "1",
                                "--to", "100", "--naive", "--verify-upto",
                                "100", "--format", "json"])

    rep = json.loads(out)

    assert status == 0
    assert [(h["n"], h["verified"]) for h in rep["hits"]] == \
        [(1, True), (10, True)]


def test_oracle_verify_mismatch_exit_status(capsys, monkeypatch):

    monkeypatch.setattr(va, "nu_binom_central", lambda n, p: 1)

    status, out = _run(capsys, ["oracle", "verify", "--from", "1", "--to",
                                "20", "--primes", "3,5,7"])

    mismatches = json.loads(out)["mismatches"]

    assert status == 2
    assert mismatches
    assert {m["check"] for m in mismatches} == {"nu_3", "nu_5", "nu_7"}


def test_scan_verify_mismatch_exit_status(capsys, monkeypatch):

    monkeypatch.setattr(sc, "_verify", lambda n, primes: n != 10)

    status, out = _run(capsys, ["scan", "--primes", "3,5,7", "--from", "1",
                                "--to", "100", "--verify-upto", "100"])

    assert status == 2
    assert out == "1 1\n"


def test_bad_flag_value_exits_with_one(capsys):

    status, _ = _run(capsys, ["scan", "--primes", "3,5,7", "--from", "x",
                              "--to", "100"])

    assert status == 1


def test_unknown_mode_exits_with_one(capsys):

    assert cc.run(["frobnicate"]) == 1


def test_help_exits_with_zero(capsys):

    assert cc.run(["--help"]) == 0
