import pathlib
import io
import json

from braidkernel.cli import run
DATA_DIR = pathlib.Path(__file__).parent / "data"


def invoke(capsys, argv, stdin=None, monkeypatch=None):
    if stdin is not None:
        assert monkeypatch is not None
        monkeypatch.setattr("sys.stdin", io.StringIO(stdin))
    code = run(argv)
    captured = capsys.readouterr()
    return code, captured.out, captured.err


def build_rp2(capsys, n):
    code, out, _ = invoke(capsys, ["build", "--surface", "rp2", "--n", str(n)])
    assert code == 0
    return out


def test_build_then_order_pipeline(capsys, monkeypatch):
    pres = build_rp2(capsys, 2)
    code, out, _ = invoke(capsys, ["order"], stdin=pres, monkeypatch=monkeypatch)
    assert code == 0
    assert out.strip() == "8"


def test_build_surfaces(capsys):
    for spec in ["torus", "klein", "quaternion", "nonorientable:3"]:
        code, out, _ = invoke(capsys, ["build", "--surface", spec])
        assert code == 0 and out.startswith("group ")
    code, _, err = invoke(capsys, ["build", "--surface", "rp2"])
    assert code == 3 and "error:" in err
    code, _, err = invoke(capsys, ["build", "--surface", "mystery"])
    assert code == 3


def test_central_tau(capsys, tmp_path):
    pres = build_rp2(capsys, 2)
    path = tmp_path / "p2.pres"
    path.write_text(pres)
    code, out, _ = invoke(capsys, ["central", "--element", "tau",
                                   "--input", str(path)])
    assert code == 0 and "central" in out
    code, out, _ = invoke(capsys, ["central", "--element", "rho1",
                                   "--input", str(path)])
    assert code == 1 and "not central" in out


def test_central_tau_rejected_off_atlas(capsys, monkeypatch):
    text = "group custom\ngens a\nrel a^3\n"
    code, _, err = invoke(capsys, ["central", "--element", "tau"],
                          stdin=text, monkeypatch=monkeypatch)
    assert code == 3 and "error:" in err


def test_order_budget_exhaustion_exits_2(capsys, monkeypatch):
    text = "group T2\ngens a b\nrel a b a^-1 b^-1\n"
    code, _, err = invoke(capsys, ["order", "--max-cosets", "10"],
                          stdin=text, monkeypatch=monkeypatch)
    assert code == 2 and err.startswith("undecided:")


def test_env_var_budget(capsys, monkeypatch):
    text = "group T2\ngens a b\nrel a b a^-1 b^-1\n"
    monkeypatch.setenv("BRAIDKERNEL_MAX_COSETS", "10")
    code, _, err = invoke(capsys, ["order"], stdin=text, monkeypatch=monkeypatch)
    assert code == 2
    monkeypatch.setenv("BRAIDKERNEL_MAX_COSETS", "bogus")
    code, _, err = invoke(capsys, ["order"], stdin=text, monkeypatch=monkeypatch)
    assert code == 3


def test_abelianize(capsys, monkeypatch):
    text = "group K\ngens x y\nrel x^2 = y^2\n"
    code, out, _ = invoke(capsys, ["abelianize", "--json"],
                          stdin=text, monkeypatch=monkeypatch)
    assert code == 0
    assert json.loads(out)["result"] == {"rank": 1, "torsion": [2]}


def test_equal_table_modes(capsys, monkeypatch, tmp_path):
    pres = build_rp2(capsys, 2)
    path = tmp_path / "p2.pres"
    path.write_text(pres)
    base = ["equal", "--input", str(path)]
    code, out, _ = invoke(capsys, base + ["--lhs", "B12", "--rhs", "rho1^2"])
    assert code == 0 and out.strip() == "equal"
    code, out, _ = invoke(capsys, base + ["--lhs", "rho1", "--rhs", "rho2"])
    assert code == 1 and out.strip() == "not equal"
    code, out, _ = invoke(capsys, base + ["--lhs", "B12", "--rhs", "rho1^2",
                                          "--rewrite"])
    assert code == 0
    code, out, _ = invoke(capsys, base + ["--lhs", "rho1", "--rhs", "rho2",
                                          "--rewrite"])
    assert code == 1
    code, out, _ = invoke(capsys, base + ["--lhs", "B12",
                                          "--rhs", "rho2 rho1^-1 rho2^-1 rho1",
                                          "--search", "--max-word-len", "12"])
    assert code == 0 and "step" in out
    code, _, err = invoke(capsys, base + ["--lhs", "rho1", "--rhs", "rho2",
                                          "--search", "--max-nodes", "50"])
    assert code == 2 and err.startswith("undecided:")


def test_equal_parse_error(capsys, monkeypatch):
    text = "group K\ngens x y\nrel x^2 = y^2\n"
    code, _, err = invoke(capsys, ["equal", "--lhs", "z", "--rhs", "x"],
                          stdin=text, monkeypatch=monkeypatch)
    assert code == 3 and "error:" in err


def test_cover_exit_codes(capsys):
    code, out, _ = invoke(capsys, ["cover", "--from", "klein", "--to", "torus",
                                   "--sheets", "2"])
    assert code == 1 and "nonabelian-quotient" in out
    code, out, _ = invoke(capsys, ["cover", "--from", "S3", "--to", "S2",
                                   "--sheets", "2"])
    assert code == 0 and "not excluded" in out


def test_quotients_output(capsys):
    code, out, _ = invoke(capsys, ["quotients", "--surface", "S3", "--sheets", "2"])
    assert code == 0
    assert "S2" in out and "N4" in out
    code, out, _ = invoke(capsys, ["quotients", "--surface", "torus",
                                   "--sheets", "4"])
    assert code == 0 and "(q,r)" in out


def test_kernel_json_round_trip(capsys, tmp_path):
    out_file = tmp_path / "kernel.pres"
    code, out, _ = invoke(capsys, ["kernel", "--quotient", "rp2", "--n", "2",
                                   "--presentation-out", str(out_file), "--json"])
    assert code == 0
    payload = json.loads(out)
    assert payload["result"]["case"] == "mod-center"
    assert payload["result"]["presentation_file"] == str(out_file)
    assert out_file.exists()
    # byte-identical re-rendering
    assert json.dumps(json.loads(out), indent=2) + "\n" == out
    # the written file is a loadable presentation
    code, out2, _ = invoke(capsys, ["order", "--input", str(out_file)])
    assert code == 0 and out2.strip() == "4"


def test_kernel_full_braid(capsys):
    code, out, _ = invoke(capsys, ["kernel", "--quotient", "rp2", "--n", "2",
                                   "--full-braid", "--json"])
    assert code == 0
    payload = json.loads(out)["result"]
    assert payload["base"]["pure"] is False
    assert payload["case"] == "mod-center"
    assert "presentation_file" not in payload


def test_equal_rewrite_undecided_when_not_confluent(capsys, monkeypatch, tmp_path):
    pres = build_rp2(capsys, 2)
    path = tmp_path / "p2.pres"
    path.write_text(pres)
    code, _, err = invoke(capsys, ["equal", "--input", str(path),
                                   "--lhs", "rho1", "--rhs", "rho2",
                                   "--rewrite", "--max-rules", "3"])
    assert code == 2 and err.startswith("undecided:")


def test_kernel_usage_errors(capsys):
    code, _, err = invoke(capsys, ["kernel", "--quotient", "torus", "--n", "1"])
    assert code == 3
    code, _, err = invoke(capsys, ["kernel", "--quotient", "torus", "--n", "1",
                                   "--q", "2"])
    assert code == 3


def test_check_derivation_corpus(capsys, tmp_path, monkeypatch):
    pres = build_rp2(capsys, 2)
    chain_path = DATA_DIR / "b12_as_rho_n2.chain"
    code, out, _ = invoke(capsys, ["check-derivation", str(chain_path)],
                          stdin=pres, monkeypatch=monkeypatch)
    assert code == 0 and out.startswith("valid")
    # corrupt the declared endpoint
    bad = chain_path.read_text().replace("end rho2*rho1^-1*rho2^-1*rho1",
                                         "end rho1")
    bad_path = tmp_path / "bad.chain"
    bad_path.write_text(bad)
    code, out, _ = invoke(capsys, ["check-derivation", str(bad_path)],
                          stdin=pres, monkeypatch=monkeypatch)
    assert code == 1 and out.startswith("invalid")


def test_check_derivation_out_of_range_is_negative(capsys, tmp_path, monkeypatch):
    pres = build_rp2(capsys, 2)
    bad_path = tmp_path / "oob.chain"
    bad_path.write_text("start B12\nstep 99 0 1 0\nend B12\n")
    code, out, _ = invoke(capsys, ["check-derivation", str(bad_path)],
                          stdin=pres, monkeypatch=monkeypatch)
    assert code == 1 and out.startswith("invalid")


def test_hom_check_map_file(capsys, tmp_path):
    map_text = """hom klein-to-q8
begin source
group pi1(Klein)
gens x y
rel x^2 = y^2
end
begin target
group Q8
gens rho1 rho2
rel rho1^2 = rho2^2
rel rho1^4
rel rho1 rho2 rho1^-1 = rho2^-1
end
send x = rho1
send y = rho2
"""
    path = tmp_path / "map.hom"
    path.write_text(map_text)
    code, out, _ = invoke(capsys, ["hom-check", "--map", str(path)])
    assert code == 0 and out.strip() == "verified"
    # a failing map: torus generators onto non-commuting elements
    bad = """begin source
group T2
gens a b
rel a b a^-1 b^-1
end
begin target
group Q8
gens rho1 rho2
rel rho1^2 = rho2^2
rel rho1^4
rel rho1 rho2 rho1^-1 = rho2^-1
end
send a = rho1
send b = rho2
"""
    bad_path = tmp_path / "bad.hom"
    bad_path.write_text(bad)
    code, out, _ = invoke(capsys, ["hom-check", "--map", str(bad_path)])
    assert code == 1 and "failed" in out


def test_unknown_flag_is_usage_error(capsys):
    code, _, err = invoke(capsys, ["order", "--bogus"])
    assert code == 3 and "error:" in err


def test_missing_file_is_usage_error(capsys):
    code, _, err = invoke(capsys, ["order", "--input", "/nonexistent/x.pres"])
    assert code == 3 and "error:" in err


def test_json_envelope_everywhere(capsys, monkeypatch, tmp_path):
    pres = build_rp2(capsys, 2)
    path = tmp_path / "p2.pres"
    path.write_text(pres)
    for argv in (["order", "--input", str(path), "--json"],
                 ["central", "--element", "tau", "--input", str(path), "--json"],
                 ["cover", "--from", "torus", "--to", "sphere", "--sheets", "2",
                  "--json"],
                 ["quotients", "--surface", "S2", "--sheets", "2", "--json"]):
        code, out, _ = invoke(capsys, argv)
        payload = json.loads(out)
        assert "result" in payload
        assert json.dumps(payload, indent=2) + "\n" == out
