import io
import json
import subprocess
import sys


from symplie.cli import main


def run(*argv):
    out, err = io.StringIO(), io.StringIO()
    code = main(list(argv), out=out, err=err)
    return code, out.getvalue(), err.getvalue()


def run_json(*argv):
    code, out, _ = run(*argv, "--json")
    return code, json.loads(out)


RH3 = {"dim": 4, "brackets": [{"i": 1, "j": 2, "k": 3, "c": "1"}]}
BAD = {"dim": 4, "brackets": [{"i": 1, "j": 2, "k": 3, "c": "1"}, {"i": 4, "j": 1, "k": 1, "c": "1"},
                              {"i": 4, "j": 2, "k": 2, "c": "1"}]}


def write(tmp_path, name, data):
    p = tmp_path / name
    p.write_text(data if isinstance(data, str) else json.dumps(data))
    return str(p)


def test_catalog_list():
    code, rep = run_json("catalog", "list")
    assert code == 0
    assert len(rep["results"]["families"]) == 16


def test_catalog_show_n4():
    code, rep = run_json("catalog", "show", "n4")
    assert code == 0
    brackets = rep["results"]["algebra"]["brackets"]
    # [e1, e4] = -e2 and [e2, e4] = -e3
    assert {"c": "-1", "i": 1, "j": 4, "k": 2} in brackets
    assert {"c": "-1", "i": 2, "j": 4, "k": 3} in brackets


def test_catalog_show_invalid_parameter():
    code, _, err = run("catalog", "show", "rr3_lam:2")
    assert code == 2
    assert "InvalidParameter" in err


def test_catalog_unknown():
    assert run("catalog", "show", "so3")[0] == 2


def test_catalog_params_flag():
    code, rep = run_json("catalog", "show", "d4_lam", "--params", "lam=3/4")
    assert code == 0


def test_analyze_rh3(tmp_path):
    code, rep = run_json("analyze", write(tmp_path, "rh3.json", RH3))
    assert code == 0
    res = rep["results"]
    assert res["identification"] == "rh3"
    assert res["symplectic"] is True


def test_analyze_abelian(tmp_path):
    code, rep = run_json("analyze", write(tmp_path, "r4.json", {"dim": 4, "brackets": []}))
    assert code == 0
    assert rep["results"]["identification"] == "R4"
    assert rep["results"]["symplectic"] is True


def test_analyze_jacobi_failure(tmp_path):
    code, _, err = run("analyze", write(tmp_path, "bad.json", BAD))
    assert code == 3
    assert "Jacobi identity fails on basis triple" in err


def test_analyze_malformed(tmp_path):
    code, _, err = run("analyze", write(tmp_path, "m.json", '{"dim": 4,\n "brackets": [}'))
    assert code == 2
    assert "line 2" in err


def test_cohomology_rh3():
    code, rep = run_json("cohomology", "rh3")
    assert code == 0
    assert rep["results"]["betti"] == [1, 3, 4, 3, 1]


def test_symplectic_flags():
    code, rep = run_json("symplectic", "r2r2", "--witness", "--exact")
    assert code == 0
    assert rep["results"]["exact"]["symplectic"] is True
    assert rep["results"]["pfaffian"] == "a12*a34"


def test_construct_cotangent_rh3():
    code, rep = run_json("construct", "cotangent", "--h", "R2", "--rho", "[[[0,0],[0,0]],[[0,0],[0,0]]]",
                         "--alpha", '{"1,2": ["1", "0"]}')
    assert code == 0
    assert rep["results"]["identification"] == "rh3"
    assert rep["results"]["is_solution"] is True


def test_construct_double_ext_n4():
    code, rep = run_json("construct", "double-ext", "--B", "R2", "--omega", "e1^e2", "--delta", "[[0,1],[0,0]]", "--z", "[0,1]")
    assert code == 0
    assert rep["results"]["identification"] == "n4"


def test_construct_double_ext_incompatible():
    code, _, err = run("construct", "double-ext", "--B", "R2", "--omega", "e1^e2", "--delta", "[[1,0],[0,1]]", "--z", "[0,0]")
    assert code == 3


def test_reproduce_exit_codes():
    assert run("reproduce", "exact")[0] == 0
    assert run("reproduce", "obstructions", "--n", "2")[0] == 0
    assert run("reproduce", "obstructions", "--n", "3")[0] == 1


def test_reproduce_json_rows():
    code, rep = run_json("reproduce", "double-ext")
    assert code == 0
    assert rep["status"] == "PASS"
    assert all(r["status"] == "PASS" for r in rep["results"]["rows"])


def test_bad_subcommand():
    assert run("frobnicate")[0] == 2


def test_output_is_deterministic():
    cmd = [sys.executable, "-m", "symplie.cli", "symplectic", "d4p_del:1/2", "--witness", "--ideals", "--json"]
    a = subprocess.run(cmd, capture_output=True, check=False).stdout
    b = subprocess.run(cmd, capture_output=True, check=False).stdout
    assert a and a == b
