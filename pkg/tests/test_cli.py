"""CLI subcommands run in process through main(argv)."""

import json

import pytest

from copos.cli import main


def write_doc(tmp_path, name, order, dim, entries):
    path = tmp_path / name
    path.write_text(json.dumps({"order": order, "dim": dim, "entries": entries}),
                    encoding="utf-8")
    return str(path)


@pytest.fixture
def pair_doc(tmp_path):
    return write_doc(tmp_path, "pair.json", 3, 2, {"111": 1, "222": 1})


@pytest.fixture
def refuted_doc(tmp_path):
    return write_doc(tmp_path, "refuted.json", 3, 2, {"111": 1, "122": -1, "222": 1})


@pytest.fixture
def zero33_doc(tmp_path):
    return write_doc(tmp_path, "zero33.json", 3, 3, {})


def run(capsys, argv):
    code = main(argv)
    captured = capsys.readouterr()
    return code, captured.out, captured.err


# ---------------------------------------------------------------------------
# check

def test_check_certified(capsys, pair_doc):
    code, out, _ = run(capsys, ["check", pair_doc])
    assert code == 0
    assert "thm3.1: certified  [branch (1)]" in out
    assert out.rstrip().endswith("aggregate: certified")


def test_check_refuted(capsys, refuted_doc):
    code, out, _ = run(capsys, ["check", refuted_doc])
    assert code == 1
    assert "thm3.1: refuted" in out
    assert "aggregate: refuted" in out


def test_check_criterion_filter(capsys, pair_doc):
    code, out, _ = run(capsys, ["check", pair_doc, "--criterion", "thm3.2"])
    assert code == 0
    heads = [l for l in out.splitlines() if l and not l.startswith((" ", "aggregate"))]
    assert heads == ["thm3.2: certified"]
    # repeated flags keep the fixed criterion order, not the flag order
    code, out, _ = run(capsys, ["check", pair_doc,
                                "--criterion", "thm3.2", "--criterion", "diag"])
    heads = [l.split(":")[0] for l in out.splitlines()
             if l and not l.startswith((" ", "aggregate"))]
    assert heads == ["diag", "thm3.2"]


def test_check_rejects_inapplicable_criterion(capsys, pair_doc):
    code, _, err = run(capsys, ["check", pair_doc, "--criterion", "thm4.5"])
    assert code == 3
    assert "does not apply to order-3 dim-2" in err


def test_check_rejects_bad_document(capsys, tmp_path):
    bad = write_doc(tmp_path, "bad.json", 3, 2, {"121": 1})
    code, _, err = run(capsys, ["check", bad])
    assert code == 3
    assert "non-canonical entry key '121'" in err


def test_check_missing_file(capsys, tmp_path):
    code, _, err = run(capsys, ["check", str(tmp_path / "nope.json")])
    assert code == 3
    assert "copos: error:" in err


def test_check_json_shape(capsys, pair_doc):
    code, out, _ = run(capsys, ["check", pair_doc, "--json"])
    assert code == 0
    obj = json.loads(out)
    assert list(obj) == ["tool", "version", "command", "input", "config",
                         "certificates", "aggregate"]
    assert obj["command"] == "check"
    assert obj["aggregate"] == "certified"
    assert obj["config"]["criteria"] == ["diag", "thm3.1", "thm3.2", "thm3.3",
                                         "qi", "songqi"]
    assert [c["id"] for c in obj["certificates"]] == obj["config"]["criteria"]
    cert = obj["certificates"][1]
    assert list(cert) == ["id", "outcome", "branch", "conditions"]
    assert list(cert["conditions"][0]) == ["description", "value", "satisfied"]


# ---------------------------------------------------------------------------
# oracle

def test_oracle_refuted(capsys, refuted_doc):
    code, out, _ = run(capsys, ["oracle", refuted_doc])
    assert code == 1
    assert "not-copositive" in out
    assert "min=-0.15470053837925163" in out


def test_oracle_zero_tensor_band(capsys, zero33_doc):
    code, out, _ = run(capsys, ["oracle", zero33_doc])
    assert code == 0 and "copositive-up-to-band" in out
    # an exact zero minimum with no band cannot be called either way
    code, out, _ = run(capsys, ["oracle", zero33_doc, "--band", "0"])
    assert code == 2 and "indeterminate" in out


def test_oracle_band_environment(capsys, zero33_doc, monkeypatch):
    monkeypatch.setenv("COPOS_BAND", "0")
    code, _, _ = run(capsys, ["oracle", zero33_doc])
    assert code == 2
    code, _, _ = run(capsys, ["oracle", zero33_doc, "--band", "1e-8"])
    assert code == 0  # explicit flag wins
    monkeypatch.setenv("COPOS_BAND", "abc")
    code, _, err = run(capsys, ["oracle", zero33_doc])
    assert code == 3
    assert "COPOS_BAND must be a decimal float" in err


def test_oracle_json_knobs(capsys, refuted_doc):
    code, out, _ = run(capsys, ["oracle", refuted_doc, "--json", "--grid", "40",
                                "--refine", "1", "--samples", "8", "--seed", "3"])
    assert code == 1
    obj = json.loads(out)
    assert list(obj) == ["tool", "version", "command", "input", "config",
                         "certificates", "oracle", "aggregate"]
    assert obj["config"]["oracle"] == {"resolution": 40, "refine_rounds": 1,
                                       "band": 1e-8, "samples": 8, "seed": 3}
    assert list(obj["oracle"]) == ["min_value", "argmin", "resolution_used",
                                   "classification"]
    assert obj["certificates"] == []
    assert obj["aggregate"] == "not-copositive"


# ---------------------------------------------------------------------------
# vacuum

UNIT = ["--l1", "1", "--l2", "1", "--ls", "1"]


def test_vacuum_certified(capsys):
    code, out, _ = run(capsys, ["vacuum", *UNIT, "--rho", "1"])
    assert code == 0
    assert "theorem route: certified" in out
    assert "aggregate (theorem route): certified" in out


def test_vacuum_route_discrepancy(capsys):
    argv = ["vacuum", *UNIT, "--ls12", "0.8", "--rho", "1"]
    code, out, _ = run(capsys, argv)
    assert code == 2
    assert "theorem route: unknown" in out
    assert "printed route: certified" in out
    code, out, _ = run(capsys, argv + ["--as-printed"])
    assert code == 0
    assert "aggregate (printed route): certified" in out


def test_vacuum_oracle_refutes(capsys):
    code, out, _ = run(capsys, ["vacuum", *UNIT, "--ls12", "4", "--rho", "1",
                                "--oracle"])
    assert code == 1
    assert "not-copositive" in out
    assert "min=-0.016211437937827332" in out


def test_vacuum_scan(capsys):
    code, out, _ = run(capsys, ["vacuum", *UNIT, "--ls12", "0.4",
                                "--rho-scan", "10"])
    assert code == 0
    assert out.splitlines()[0] == "rho scan: 11 points on [0, 1]"
    assert "worst rho: 1.0" in out


def test_vacuum_strict(capsys):
    # zero cubic entries can never pass the strict theorem conditions
    code, _, _ = run(capsys, ["vacuum", *UNIT, "--strict"])
    assert code == 2
    code, _, _ = run(capsys, ["vacuum", *UNIT, "--strict", "--as-printed"])
    assert code == 0


def test_vacuum_rejects_bad_rho(capsys):
    code, _, err = run(capsys, ["vacuum", "--rho", "1.5"])
    assert code == 3
    assert "rho must lie in [0, 1]" in err


def test_vacuum_rho_flags_are_exclusive(capsys):
    with pytest.raises(SystemExit) as exc:
        main(["vacuum", "--rho", "0.5", "--rho-scan", "10"])
    assert exc.value.code == 3


def test_vacuum_json_shape(capsys):
    code, out, _ = run(capsys, ["vacuum", *UNIT, "--ls12", "0.4",
                                "--rho-scan", "10", "--json"])
    assert code == 0
    obj = json.loads(out)
    assert list(obj) == ["tool", "version", "command", "input", "config",
                         "certificates", "vacuum", "aggregate"]
    assert list(obj["vacuum"]) == ["worst_rho", "rho_values", "theorem_verdict",
                                   "printed_verdict"]
    assert obj["vacuum"]["worst_rho"] == 1.0
    assert len(obj["vacuum"]["rho_values"]) == 11
    assert [c["id"] for c in obj["certificates"]] == ["thm4.5", "z3-printed"]
    assert list(obj["input"]["params"]) == ["l1", "l2", "l3", "l4", "ls",
                                            "ls1", "ls2", "ls12", "rho"]


# ---------------------------------------------------------------------------
# report

def test_report_on_tensor_file(capsys, tmp_path):
    doc = write_doc(tmp_path, "diag.json", 4, 3,
                    {"1111": 1, "2222": 1, "3333": 1})
    code, out, _ = run(capsys, ["report", doc])
    assert code == 0
    obj = json.loads(out)
    assert list(obj) == ["tool", "version", "command", "input", "config",
                         "certificates", "oracle", "aggregate"]
    assert obj["aggregate"] == "certified"
    assert [c["id"] for c in obj["certificates"]] == [
        "diag", "thm4.3", "thm4.4", "thm4.5", "remark", "qi", "songqi"]
    # lattice point 40/120 hits the barycenter exactly
    assert obj["oracle"]["min_value"] == 0.037037037037037035
    assert obj["oracle"]["argmin"] == [0.3333333333333333] * 3
    code2, out2, _ = run(capsys, ["report", doc])
    assert out2 == out  # byte-identical rerun


def test_report_on_vacuum_params(capsys):
    code, out, _ = run(capsys, ["report", *UNIT, "--ls12", "0.8", "--rho", "1"])
    assert code == 0
    obj = json.loads(out)
    assert list(obj) == ["tool", "version", "command", "input", "config",
                         "certificates", "vacuum", "oracle", "aggregate"]
    ids = [c["id"] for c in obj["certificates"]]
    assert ids[-1] == "z3-printed"
    assert obj["vacuum"] == {"worst_rho": 1.0, "rho_values": [1.0],
                             "theorem_verdict": "unknown",
                             "printed_verdict": "certified"}
    # the aggregate is certify_all's; the printed row is informational
    assert obj["aggregate"] == "certified"
    outcomes = {c["id"]: c["outcome"] for c in obj["certificates"]}
    assert outcomes["thm4.5"] == "unknown"
    assert outcomes["z3-printed"] == "certified"


def test_report_requires_one_input_mode(capsys, pair_doc):
    code, _, err = run(capsys, ["report", pair_doc, "--l1", "1"])
    assert code == 3
    assert "not both" in err
    code, _, err = run(capsys, ["report"])
    assert code == 3
    assert "are required" in err


# ---------------------------------------------------------------------------
# top level

def test_version(capsys):
    with pytest.raises(SystemExit) as exc:
        main(["--version"])
    assert exc.value.code == 0
    assert capsys.readouterr().out.startswith("copos ")


def test_unknown_subcommand(capsys):
    with pytest.raises(SystemExit) as exc:
        main(["frobnicate"])
    assert exc.value.code == 3
