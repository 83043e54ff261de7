import json


from ambc_cells.cli import main


def run(capsys, *argv):
    try:
        main(list(argv))
        code = 0
    except SystemExit as exc:
        code = exc.code or 0
    out = capsys.readouterr()
    return code, out.out, out.err


def test_phi_prints_json(capsys):
    code, out, _ = run(capsys, "phi", "[6,1,18,3,19,24,12,15,17,10]")
    assert code == 0
    assert json.loads(out) == {
        "p": [[1, 3, 10], [2, 5, 6], [4, 7, 9], [8]],
        "q": [[3, 5, 6], [7, 8, 9], [1, 4, 10], [2]],
        "rho": [2, 3, 2, 0],
    }


def test_psi_from_file(capsys, tmp_path):
    path = tmp_path / "t.json"
    path.write_text(json.dumps({"p": [[1, 3, 10], [2, 5, 6], [4, 7, 9], [8]], "q": [[3, 5, 6], [7, 8, 9], [1, 4, 10], [2]], "rho": [2, 4, 2, 0]}))
    assert run(capsys, "psi", str(path))[1].strip() == "[6,1,18,3,19,24,15,17,22,10]"


def test_parse_error_exit_code(capsys):
    code, _, err = run(capsys, "phi", "[1,1,3]")
    assert code == 1 and "residue" in err
    assert run(capsys, "gk", "oops")[0] == 1
    assert run(capsys, "nosuchcommand")[0] == 1


def test_gk_channels_rivers(capsys):
    w = "[8,1,19,14,16,2,25,13,10,27]"
    assert run(capsys, "gk", w)[1].strip() == "3,3,3,1"
    data = json.loads(run(capsys, "channels", w, "--json")[1])
    assert data["canonical"] == ["[_,1,_,_,_,2,_,_,10,_]", "[8,_,_,14,16,_,_,_,_,_]", "[_,_,19,_,_,_,25,_,_,27]"]
    assert len(json.loads(run(capsys, "rivers", w, "--json")[1])["rivers"]) == 3
    data = json.loads(run(capsys, "numbering", w, "--channel", "1", "--json")[1])
    assert data["increment"] == 3 and data["labels"]["7"] == 3


def test_group_commands(capsys):
    w = "[1,6,8,14,17,5,0,19,3,22]"
    assert run(capsys, "star", w, "--right", "10")[1].strip() == "[12,6,8,14,17,5,0,19,3,11]"
    assert run(capsys, "star", w, "--left", "2")[1].strip() == "[1,6,8,14,17,5,0,19,2,23]"
    assert run(capsys, "star", "[1,2,3]", "--right", "1")[1].strip() == "undefined"
    assert run(capsys, "star", w)[0] == 1
    assert run(capsys, "omega", w)[1].strip() == "[2,7,9,15,18,6,1,20,4,23]"
    assert run(capsys, "omega", w, "--right", "--inverse")[1].strip() == "[12,1,6,8,14,17,5,0,19,3]"
    assert run(capsys, "rotate-180", "[2,3,1]")[1].strip() == "[3,1,2]"
    assert run(capsys, "inverse", "[2,3,1]")[1].strip() == "[3,1,2]"
    assert run(capsys, "compose", "[2,3,4]", "[3,1,2]")[1].strip() == "[4,2,3]"


def test_rotate_and_diamond(capsys):
    w = "[6,1,18,3,19,24,12,15,17,10]"
    code, out, _ = run(capsys, "rotate", w, "--stream", "[_,_,_,_,_,_,12,15,17,_]", "--check-proper", "--json")
    assert json.loads(out) == {"window": "[6,1,18,3,19,24,15,17,22,10]", "proper": True}
    assert run(capsys, "rotate", w, "--stream", "[_,1,_,3,_,_,_,_,_,10]", "--inverse")[1].strip() == "[6,0,18,1,19,24,12,15,17,3]"
    data = json.loads(run(capsys, "diamond", w, "--p", "7", "--q", "2", "--json")[1])
    assert data["w_tilde_star"] == "[6,1,18,3,19,15,24,17,22,10]" and data["holds"]
    assert run(capsys, "diamond", w, "--p", "7", "--q", "1")[0] == 1


def test_sign(capsys):
    w = "[17,13,4,20,9,24]"
    data = json.loads(run(capsys, "sign", w, "--json")[1])
    assert data == {"sgn_p": [4, 9, 19, 26, 29, 36], "sgn_q": [1, 4, 6, 9, 10, 12]}
    lines = run(capsys, "sign", w, "--trace")[1].splitlines()
    assert len(lines) == 13 and lines[0] == "0|∅|∅|17,13,4,20,9,24"
    assert run(capsys, "sign", w, "--blasiak-convention")[0] == 0


def test_tableau_commands(capsys):
    data = json.loads(run(capsys, "rsk", "((2,3),(1),(4))", "--json")[1])
    assert data == {"p": [[1, 2, 3], [4]], "q": [[1, 3, 3], [2]]}
    assert run(capsys, "rsk-inverse", "((1,2,3),(4))", "((1,3,3),(2))")[1].strip() == "((2,3),(1),(4))"
    assert run(capsys, "rmatrix", "((1,4),(2,3))", "--i", "1")[1].strip() == "((1,4),(2,3))"
    out = run(capsys, "theta", "((1,3,3),(2))", "--target", "2,0,1,1")[1].strip()
    assert out == "((1,1,4),(3))"
    lines = run(capsys, "upsilon", "--n", "3")[1].splitlines()
    assert len(lines) == 6


def test_verify_exit_codes(capsys, monkeypatch):
    code, out, _ = run(capsys, "verify", "roundtrip", "--n", "3", "--bound", "1", "--json")
    assert code == 0 and json.loads(out)["failure_count"] == 0
    assert run(capsys, "verify", "golden")[0] == 0
    assert run(capsys, "verify", "nope")[0] == 1
    assert run(capsys, "verify", "roundtrip", "--n", "7")[0] == 1

    from ambc_cells import harness

    def failing(name, spec):
        report = harness.VerifyReport(name, {})
        report.fail(reason="injected")
        return report

    monkeypatch.setattr(harness, "run_suite", failing)
    code, out, _ = run(capsys, "verify", "roundtrip", "--n", "2")
    assert code == 2 and "injected" in out
