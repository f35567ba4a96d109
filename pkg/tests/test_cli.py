"""End-to-end tests for the command-line interface.

Everything runs in-process through ``cli.main`` so exit codes and
stdout/stderr splits are observable without spawning subprocesses.
"""

import json

import pytest

from permpaths import cli, oracle


def run(capsys, *argv):
    code = cli.main(list(argv))
    captured = capsys.readouterr()
    return code, captured.out, captured.err


# -- count -------------------------------------------------------------------


def test_count_formula(capsys):
    code, out, err = run(capsys, "count", "--family", "p321-2", "--n", "6")
    assert code == 0
    assert out == "133\n"


def test_count_both(capsys):
    code, out, err = run(
        capsys, "count", "--family", "p321-2", "--n", "6", "--mode", "both"
    )
    assert code == 0
    assert out == "133 / 133 / match\n"


def test_count_unknown_family(capsys):
    code, out, err = run(capsys, "count", "--family", "p999", "--n", "6")
    assert code == 2
    assert "unknown family" in err
    assert "p321-1" in err  # the known list is offered


def test_count_oracle_over_cap(capsys):
    code, out, err = run(
        capsys, "count", "--family", "p321-1", "--n", "12", "--mode", "oracle"
    )
    assert code == 3
    assert "resource limit" in err


def test_count_bad_n(capsys):
    code, out, err = run(capsys, "count", "--family", "p321-1", "--n", "0")
    assert code == 2


def test_count_mismatch_exits_5(capsys, monkeypatch):
    monkeypatch.setattr(oracle, "oracle_count", lambda family, n: 999)
    code, out, err = run(
        capsys, "count", "--family", "p321-2", "--n", "6", "--mode", "both"
    )
    assert code == 5
    assert "MISMATCH" in out


# -- biject ------------------------------------------------------------------


def test_biject_records(capsys):
    code, out, err = run(
        capsys, "biject", "--name", "kratt", "--input", "2 1 4 7 3 5 6"
    )
    assert code == 0
    assert out == "UUDDUUDUUUDDDD\n"


def test_biject_records_inverse(capsys):
    code, out, err = run(
        capsys, "biject", "--name", "kratt-inv", "--input", "UUDDUUDUUUDDDD"
    )
    assert code == 0
    assert out == "2 1 4 7 3 5 6\n"


def test_biject_roundtrip_flag(capsys):
    code, out, err = run(
        capsys, "biject", "--name", "kratt", "--input", "2 1 4 7 3 5 6",
        "--roundtrip",
    )
    assert code == 0
    assert "roundtrip: ok" in err


def test_biject_domain_violation_names_predicate(capsys):
    code, out, err = run(capsys, "biject", "--name", "kratt", "--input", "3 2 1")
    assert code == 4
    assert "domain violation [avoids-321]" in err


def test_biject_phi_requires_width(capsys):
    code, out, err = run(capsys, "biject", "--name", "phi", "--input", "2 1 3 4 5")
    assert code == 2
    assert "--i" in err


def test_biject_phi(capsys):
    code, out, err = run(
        capsys, "biject", "--name", "phi", "--input", "2 1 3 4 5", "--i", "2",
        "--roundtrip",
    )
    assert code == 0
    assert out == "2 1 3 5 4\n"


def test_biject_width_rejected_elsewhere(capsys):
    code, out, err = run(
        capsys, "biject", "--name", "kratt", "--input", "1 2", "--i", "2"
    )
    assert code == 2


def test_biject_decomposition_json(capsys):
    code, out, err = run(capsys, "biject", "--name", "one321", "--input", "3 2 1")
    assert code == 0
    assert json.loads(out) == {"rho": [2, 1], "sigma": [2, 1]}


def test_biject_two321_distinct(capsys):
    code, out, err = run(
        capsys, "biject", "--name", "two321-k", "--input", "4 2 3 1"
    )
    assert code == 0
    assert json.loads(out) == {"rho": [3, 2, 1], "sigma": [2, 1]}


def test_biject_two321_shared(capsys):
    code, out, err = run(
        capsys, "biject", "--name", "two321-b", "--input", "3 4 2 1 5",
        "--roundtrip",
    )
    assert code == 0
    assert json.loads(out) == {"rho": [2, 3, 1], "sigma": [2, 3, 1, 4]}


def test_biject_adjacent_json_param(capsys):
    code, out, err = run(capsys, "biject", "--name", "lemma11", "--input", "2 4 3 1")
    assert code == 0
    assert json.loads(out) == {"rho": [2, 1], "param": 1}


# -- enumerate ---------------------------------------------------------------


def test_enumerate_one_inversion(capsys):
    code, out, err = run(
        capsys, "enumerate", "--n", "3", "--filter", "pattern(2 1)==1"
    )
    assert code == 0
    assert out.splitlines() == ["1 3 2", "2 1 3"]


def test_enumerate_preset(capsys):
    code, out, err = run(
        capsys, "enumerate", "--n", "4", "--filter-preset", "last2up"
    )
    assert code == 0
    lines = out.splitlines()
    assert len(lines) == 12
    assert all(int(l.split()[-2]) < int(l.split()[-1]) for l in lines)


def test_enumerate_preset_and_filter_conjoin(capsys):
    code, out, err = run(
        capsys, "enumerate", "--n", "4", "--filter-preset", "last2up",
        "--filter", "pattern(3 2 1)==1",
    )
    assert code == 0
    assert out.splitlines() == ["3 2 1 4", "4 2 1 3"]


def test_enumerate_dyck_bounded(capsys):
    code, out, err = run(
        capsys, "enumerate", "--n", "3", "--kind", "dyck",
        "--filter", "height<=2",
    )
    assert code == 0
    lines = out.splitlines()
    assert len(lines) == 4
    assert "UUUDDD" not in lines


def test_enumerate_kind_mismatch(capsys):
    code, out, err = run(
        capsys, "enumerate", "--n", "3", "--filter", "height<=2"
    )
    assert code == 2
    assert "use --kind dyck" in err
    code, out, err = run(
        capsys, "enumerate", "--n", "3", "--kind", "dyck",
        "--filter", "first>=2",
    )
    assert code == 2
    assert "use --kind perm" in err


def test_enumerate_parse_error_positions(capsys):
    code, out, err = run(capsys, "enumerate", "--n", "3", "--filter", "bogus")
    assert code == 2
    assert "position 0" in err
    code, out, err = run(
        capsys, "enumerate", "--n", "3",
        "--filter", "pattern(2 1)==1 && bogus",
    )
    assert code == 2
    assert "position 19" in err


# -- table -------------------------------------------------------------------


def test_table_csv(capsys, monkeypatch):
    monkeypatch.setattr(oracle, "MAX_PERM_N", 3)
    code, out, err = run(
        capsys, "table", "--family", "simion-schmidt", "--nmax", "5"
    )
    assert code == 0
    lines = out.splitlines()
    assert lines[0] == "n,family,formula,oracle,match"
    assert lines[1] == "1,simion-schmidt,1,1,true"
    assert lines[3] == "3,simion-schmidt,4,4,true"
    assert lines[4] == "4,simion-schmidt,8,,"
    assert lines[5] == "5,simion-schmidt,16,,"


def test_table_json(capsys, monkeypatch):
    monkeypatch.setattr(oracle, "MAX_PERM_N", 3)
    code, out, err = run(
        capsys, "table", "--family", "p321-1", "--nmax", "4", "--format", "json"
    )
    assert code == 0
    rows = json.loads(out)
    assert rows[2] == {
        "n": 3, "family": "p321-1", "formula": 1, "oracle": 1, "match": True
    }
    assert rows[3]["oracle"] is None and rows[3]["match"] is None


def test_table_mismatch_exits_5(capsys, monkeypatch):
    monkeypatch.setattr(oracle, "oracle_count", lambda family, n: 0)
    code, out, err = run(capsys, "table", "--family", "p132-1", "--nmax", "3")
    assert code == 5
    assert "false" in out


def test_table_unknown_family(capsys):
    code, out, err = run(capsys, "table", "--family", "nope", "--nmax", "3")
    assert code == 2


# -- verify ------------------------------------------------------------------


def test_verify_series_suite(capsys):
    code, out, err = run(capsys, "verify", "--suite", "series", "--nmax", "2")
    assert code == 0
    assert "[pass]" in out
    assert "0 failed" in out


def test_verify_reports_failures(capsys, monkeypatch):
    from permpaths import verify as verify_mod

    def broken(nmax):
        raise verify_mod.VerificationError("forced failure for the test")

    monkeypatch.setitem(
        verify_mod._CHECKS, "series", [("bounded-height", broken)]
    )
    code, out, err = run(capsys, "verify", "--suite", "series", "--nmax", "2")
    assert code == 5
    assert "[FAIL]" in out


# -- output redirection ------------------------------------------------------


def test_out_writes_file(tmp_path, capsys):
    target = tmp_path / "result.txt"
    code, out, err = run(
        capsys, "count", "--family", "p321-2", "--n", "6", "--out", str(target)
    )
    assert code == 0
    assert out == ""
    assert target.read_text() == "133\n"
