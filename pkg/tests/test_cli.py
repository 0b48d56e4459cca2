import json

import pytest

from chromaq.cli import main


def run(capsys, *argv):
    code = main(list(argv))
    out = capsys.readouterr()
    return code, out.out, out.err


def test_csp_json_example(capsys):
    code, out, _ = run(capsys, "csp", "--r", "0,0", "--m", "2", "--format", "json")
    assert code == 0
    data = json.loads(out)
    assert data["monomial"] == [
        {"weight": [1, 1], "poly": {"offset": 0, "coeffs": [1, 1]}}
    ]
    assert data["E_r"] == 1 and data["d_r"] == 1


def test_verify_pass_and_exit_codes(capsys):
    code, out, _ = run(capsys, "verify", "--r", "0,1,2", "--m", "3")
    assert code == 0
    assert "PASS" in out


def test_invalid_input_exit_2(capsys):
    code, _, err = run(capsys, "verify", "--r", "0,2,1", "--m", "3")
    assert code == 2
    assert "r(2)" in err
    code, _, err = run(capsys, "csp", "--r", "0,0", "--m", "0")
    assert code == 2
    code, _, err = run(capsys, "csp", "--r", "0,0")
    assert code == 2


def test_infeasible_is_warning_not_error(capsys):
    code, out, err = run(capsys, "csp", "--r", "0,0,0", "--m", "2",
                         "--format", "json")
    assert code == 0
    assert "warning" in err
    data = json.loads(out)
    assert data["monomial"] == [] and data["d_r"] is None


def test_sweep(capsys):
    code, out, _ = run(capsys, "sweep", "--n", "4", "--m", "4")
    assert code == 0
    assert "14 functions checked, 0 failures" in out


def test_sweep_m_max_flag(capsys):
    code, out, _ = run(capsys, "sweep", "--n", "3", "--m-max", "3")
    assert code == 0
    assert "5 functions checked, 0 failures" in out


def test_info(capsys):
    code, out, _ = run(capsys, "info", "--r", "0,0,1", "--m", "3",
                       "--format", "json")
    assert code == 0
    data = json.loads(out)
    assert data["E_r"] == 2
    assert data["edges"] == [[1, 2], [2, 3]]
    assert data["fibre_dims"] == [2, 1, 1]


def test_colourings_stream_and_limit(capsys):
    code, out, _ = run(capsys, "colourings", "--r", "0,0", "--m", "2")
    assert code == 0
    assert out.splitlines() == [
        "1 2 | asc=1 wt=1,1 d=0",
        "2 1 | asc=0 wt=1,1 d=1",
    ]
    code, out, _ = run(capsys, "colourings", "--r", "0,0", "--m", "2",
                       "--limit", "1")
    assert out.splitlines() == ["1 2 | asc=1 wt=1,1 d=0"]


def test_kostka_json(capsys):
    code, out, _ = run(capsys, "kostka", "--n", "2", "--m", "2",
                       "--format", "json")
    assert code == 0
    assert json.loads(out) == {"index": [[2], [1, 1]],
                               "matrix": [[1, 1], [0, 1]]}


def test_poincare(capsys):
    code, out, _ = run(capsys, "poincare", "--r", "0,0,1", "--m", "3",
                       "--format", "json")
    assert code == 0
    data = json.loads(out)
    assert data["poincare_product"] == data["poincare_bb"]
    assert data["identities_pass"]
    code, _, err = run(capsys, "poincare", "--r", "0,0,0", "--m", "2")
    assert code == 2


def test_schur_text_round_trip(capsys):
    # text form of r parses back to the same function
    from chromaq.hessenberg import parse

    r = parse("0,1,1,3")
    assert parse(r.to_text()) == r
    code, out, _ = run(capsys, "schur", "--r", "0,0", "--m", "2",
                       "--format", "json")
    data = json.loads(out)
    assert data["schur"] == [
        {"partition": [1, 1], "poly": {"offset": 0, "coeffs": [1, 1]}}
    ]


@pytest.mark.parametrize("command", ["csp", "schur", "verify"])
def test_parallel_output_identical(capsys, command):
    base = run(capsys, command, "--r", "0,0,1,1", "--m", "3", "--format", "json")
    par = run(capsys, command, "--r", "0,0,1,1", "--m", "3", "--format", "json",
              "--parallel")
    assert base == par
