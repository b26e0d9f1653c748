import json

from niljordan.cli import main
from niljordan.paperchecks import DATA_DIR


def alg(label):
    return str(DATA_DIR / "algebras" / f"{label}.alg")


def fam(name):
    return str(DATA_DIR / "families" / f"{name}.fam")


def test_classify_command(capsys):
    assert main(["classify", alg("J4_8")]) == 0
    assert capsys.readouterr().out.strip() == "J4_8"
    assert main(["classify", "--real", alg("R3_5")]) == 0
    assert capsys.readouterr().out.strip() == "R3_5"


def test_invariants_command(capsys):
    assert main(["invariants", alg("J3_1")]) == 0
    out = capsys.readouterr().out
    assert "s = (3,)" in out
    assert "orbit dim = 6" in out
    assert "center dim = 1" in out


def test_limit_command(capsys):
    assert main(["limit", alg("J3_1"), "--family", fam("j3_1_to_3__listed")]) == 0
    out = capsys.readouterr().out
    assert "e1*e1 = e2" in out and "# class: J3_3" in out


def test_verify_edge_command_pass_and_fail(capsys):
    code = main([
        "verify-edge", alg("J4_6"), "--family", fam("j4_6_to_8__listed"),
        "--target", "J4_8",
    ])
    assert code == 0
    assert "VERIFIED" in capsys.readouterr().out
    code = main([
        "verify-edge", alg("J4_4"), "--family", fam("j4_4_to_8__listed"),
        "--target", "J4_8",
    ])
    assert code == 1
    assert "SINGULAR" in capsys.readouterr().out


def test_deform_command(capsys):
    code = main([
        "deform", alg("J4_3"), "--direction", str(DATA_DIR / "directions" / "mu1.def"),
    ])
    assert code == 0
    out = capsys.readouterr().out
    assert "t=1 class = J4_2" in out


def test_squaring_command(capsys):
    assert main(["squaring", alg("A3_b4")]) == 0
    out = capsys.readouterr().out
    assert "# class: J3_ab" in out


def test_graph_command(tmp_path, capsys):
    dot_path = tmp_path / "j3.dot"
    assert main(["graph", "J3", "--dot", str(dot_path)]) == 0
    out = capsys.readouterr().out
    assert "J3_1 -> J3_2" in out
    text = dot_path.read_text()
    assert 'digraph contractions_J3' in text
    assert '"J3_1" -> "J3_2";' in text


def test_parse_error_exit_code(tmp_path, capsys):
    bad = tmp_path / "bad.alg"
    bad.write_text("dim 2\ne1*e1 = e9\n")
    assert main(["classify", str(bad)]) == 2
    assert "line 2" in capsys.readouterr().err
    assert main(["classify", str(tmp_path / "missing.alg")]) == 2


def test_non_jordan_input_exit_code(tmp_path, capsys):
    bad = tmp_path / "notjordan.alg"
    bad.write_text("dim 2\ne1*e1 = e2\ne1*e2 = e1\n")
    assert main(["classify", str(bad)]) == 1


def test_verify_paper_command(tmp_path, capsys):
    json_path = tmp_path / "report.json"
    code = main(["verify-paper", "--json", str(json_path)])
    out = capsys.readouterr().out
    assert code == 0
    assert "errata" in out
    assert "[FAIL]" not in out
    payload = json.loads(json_path.read_text())
    assert payload["summary"]["ok"] is True
    assert payload["summary"]["errata"] >= 10
    erratum_names = {e["name"] for e in payload["errata"]}
    assert "family/j4_3_to_6_exponent" in erratum_names
    assert "family/j4_4_to_8" in erratum_names
    assert "deformation/duplicate_entry" in erratum_names
    assert "real_remark/r4_collapses" in erratum_names


def test_verify_paper_deterministic(tmp_path, verification_report):
    # a fresh run must produce byte-identical JSON
    from niljordan.paperchecks import run_verification

    again = run_verification()
    assert again.to_json() == verification_report.to_json()
