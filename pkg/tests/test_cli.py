import json
import subprocess
import sys

import pytest

from ckquant import serialize as ser
from ckquant.cli import main, read_config, BadInput
from ckquant.kinematics import (FAMILIES, derive_table, family_sigmas, kinematics_spec,
                                localized_rule_set, rule_set)


def run(capsys, *argv):
    code = main(list(argv))
    out, err = capsys.readouterr()
    return code, out, err


@pytest.mark.parametrize("argv,want", [
    (["--n", "5", "--sigma", "2,1,3,4,5", "--set", "j3=1,j4=1"], "j1^2 j2"),
    (["--n", "5", "--sigma", "1,2,3,4,5", "--minimal"], "j1 j2 j3 j4"),
    (["--n", "5", "--sigma", "3,1,5,2,4", "--set", "j3=1,j4=1"], "j1^2 j2^2"),
    (["--sigma", "sigma-ppp", "--set", "j2=1,j3=1"], "j1^2 j4"),
])
def test_multiplier(capsys, argv, want):
    code, out, _ = run(capsys, "multiplier", *argv)
    assert code == 0 and out.strip() == want


@pytest.mark.parametrize("argv", [
    ["multiplier", "--sigma", "1,2,2,4,5"],
    ["multiplier", "--n", "4", "--sigma", "1,2,3,4,5"],
    ["multiplier", "--sigma", "2,1,3,4,5", "--set", "j3=2"],
    ["relations", "--sigma", "2,1,3,4,5", "--sub", "j1=foo"],
    ["relations", "--sigma", "2,1,3,4,5", "--contract", "x1"],
    ["kinematics", "--family", "lorentz", "--sigma", "sigma-hat"],
    ["kinematics", "--family", "carroll", "--sigma", "sigma-I", "--catalog"],
    ["verify", "--family", "nowhere"],
    ["multiplier"],
])
def test_bad_input_exits_2(capsys, argv):
    code, _, err = run(capsys, *argv)
    assert code == 2 and err


def test_minimal_contraction_is_indefinite(capsys):
    code, out, err = run(capsys, "relations", "--n", "5", "--sigma", "sigma-tilde",
                         "--multiplier", "minimal", "--contract", "j1,j2")
    assert code == 3
    assert "indefinite" in err and "eps_j" in err and out == ""


def test_full_contraction_succeeds(capsys):
    code, out, _ = run(capsys, "contract", "--sigma", "sigma-tilde", "--contract", "j1,j2")
    assert code == 0 and "x4 x3 -> (-i*j4*v) x1 x1 + x3 x4" in out


def test_relations_with_substitution(capsys):
    code, out, _ = run(capsys, "relations", "--sigma", "2,1,3,4,5",
                       "--sub", "j1=jt/T,j2=i/c,j3=1,j4=1", "--format", "json")
    doc = json.loads(out)
    assert code == 0 and doc["kind"] == "relations" and doc["n"] == 5
    assert set(doc) == {"kind", "n", "sigma", "multiplier", "relations"}
    rel = doc["relations"]["relations"][0]
    assert set(rel) >= {"lhs", "rhs", "coefficients"}
    assert set(rel["coefficients"][0]) == {"word", "re", "im", "units", "params",
                                           "vPower", "sPower", "chPower"}


def test_identity_relations_text(capsys):
    code, out, _ = run(capsys, "relations", "--sigma", "1,2,3,4,5")
    assert code == 0
    assert "x1 x2 -> (1 + 2*s^2) x2 x1 + (-2i*j1*j2*j3*j4*s*ch) x2 x5" in out


@pytest.mark.parametrize("family,count", [("minkowski", 4), ("carroll", 3), ("newton", 4)])
def test_classify(capsys, family, count):
    code, out, _ = run(capsys, "classify", "--family", family, "--format", "json")
    doc = json.loads(out)
    assert code == 0 and doc["classes"]["count"] == count


def test_kinematics_derive_and_catalog(capsys):
    code, out, _ = run(capsys, "kinematics", "--family", "galilei", "--sigma", "sigma-hat")
    assert code == 0 and "[t,r3] = i*v" in out
    code, out, _ = run(capsys, "kinematics", "--family", "newton", "--sigma", "sigma-I", "--catalog")
    assert code == 0 and "[r1,r2] == i*v*(1 + (jt**2/T**2)*t**2)" in out


def test_de_sitter_sign(capsys):
    _, ds, _ = run(capsys, "kinematics", "--family", "ds", "--sigma", "sigma-hat")
    _, ads, _ = run(capsys, "kinematics", "--family", "ads", "--sigma", "sigma-hat")
    _, sym, _ = run(capsys, "kinematics", "--family", "desitter", "--sigma", "sigma-hat")
    assert "jt" in sym and "jt" not in ds and "jt" not in ads and ds != ads


def test_verify_exit_code(capsys):
    code, out, _ = run(capsys, "verify", "--family", "galilei")
    assert code == 4 and "summary:" in out
    code, out, _ = run(capsys, "verify", "--family", "carroll0", "--format", "json")
    doc = json.loads(out)
    assert doc["report"]["ok"] is False
    assert code == 4


def test_latex_standalone(capsys):
    code, out, _ = run(capsys, "kinematics", "--family", "carroll", "--sigma", "sigma-hat",
                       "--format", "latex", "--standalone")
    assert code == 0
    assert out.startswith("\\documentclass") and out.rstrip().endswith("\\end{document}")
    assert "\\hat{t}" in out and "\\begin{align*}" in out
    code, frag, _ = run(capsys, "relations", "--sigma", "sigma-hat", "--format", "latex")
    assert "\\xi_{1}" in frag and "\\documentclass" not in frag


def test_output_is_deterministic(capsys):
    argv = ["kinematics", "--family", "ds", "--sigma", "sigma-I", "--format", "json"]
    assert run(capsys, *argv)[1] == run(capsys, *argv)[1]


def test_config_file(tmp_path, capsys):
    cfg = tmp_path / "ck.conf"
    cfg.write_text("# settings\norder = 2\nstep_budget = 50000\n")
    assert read_config(str(cfg)) == {"order": 2, "step_budget": 50000}
    code, _, _ = run(capsys, "relations", "--sigma", "sigma-tilde", "--contract", "j1,j2",
                     "--config", str(cfg))
    assert code == 0
    bad = tmp_path / "bad.conf"
    bad.write_text("order: 2\n")
    with pytest.raises(BadInput):
        read_config(str(bad))
    code, _, err = run(capsys, "relations", "--sigma", "sigma-tilde", "--config", str(bad))
    assert code == 2


def test_order_flag_overrides_config(tmp_path, capsys):
    cfg = tmp_path / "ck.conf"
    cfg.write_text("order = 8\n")
    code, _, err = run(capsys, "relations", "--sigma", "sigma-tilde", "--contract", "j1,j2",
                       "--config", str(cfg), "--order", "0")
    assert code == 2 and "sufficiency bound" in err


def test_module_entry_point():
    proc = subprocess.run([sys.executable, "-m", "ckquant", "multiplier", "--sigma", "sigma-hat",
                           "--set", "j3=1,j4=1"], capture_output=True, text=True)
    assert proc.returncode == 0 and proc.stdout.strip() == "j1^2 j2"


# -- JSON round trip ---------------------------------------------------------------

CASES = [(f, s) for f in FAMILIES for s in family_sigmas(f)]


@pytest.mark.parametrize("family,sigma", CASES)
def test_table_round_trip(family, sigma):
    t = derive_table(kinematics_spec(family, sigma))
    doc = ser.loads(ser.dumps(ser.table_document(t)))
    assert ser.table_from_json(doc["table"], doc["sigma"]) == t


@pytest.mark.parametrize("family,sigma", CASES)
def test_rule_set_round_trip(family, sigma):
    spec = kinematics_spec(family, sigma)
    for R in (rule_set(spec), localized_rule_set(spec)):
        if R is not None:
            assert ser.rule_set_from_json(ser.loads(ser.dumps(ser.rule_set_to_json(R)))) == R
