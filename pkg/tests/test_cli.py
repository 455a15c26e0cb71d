import json

import pytest

from jackcc.cli import Table, emit, main, run_suite
from jackcc.errors import UnknownSuite, UnsupportedFormat
from jackcc.jack import JackTable, jack_table


def run(capsys, argv):
    code = main(argv)
    return code, capsys.readouterr().out


def test_run_suite_matchings_jack():
    report = run_suite("matchings-jack", max_n=3)
    assert report.passed
    assert report.suite == "matchings-jack"
    descs = [c.description for c in report.checks]
    assert "3: 1 + 1*b + 2*b^2" in descs
    assert all(c.lhs == c.rhs for c in report.checks)


def test_run_suite_comb_rec_counts():
    report = run_suite("comb-rec", max_n=5)
    assert report.passed
    descs = {c.description for c in report.checks}
    assert "c(5) = 8" in descs
    assert "b~(3) = 4" in descs
    assert "bucket counts at 2,2,1" in descs


def test_run_suite_orthogonality():
    report = run_suite("orthogonality", max_n=2)
    assert report.passed
    by_desc = {c.description: c for c in report.checks}
    assert by_desc["<J_2, J_2>"].lhs == "2*a^2 + 2*a^3"


def test_run_suite_defaults_and_unknown():
    report = run_suite("i-indep", max_n=2)
    assert report.n_range == (2, 2)
    with pytest.raises(UnknownSuite):
        run_suite("spectral")


def test_run_suite_threads_agree():
    serial = run_suite("thm-rec", max_n=3)
    parallel = run_suite("thm-rec", max_n=3, threads=4)
    assert serial.checks == parallel.checks


def test_partitions_text(capsys):
    code, out = run(capsys, ["partitions", "4"])
    assert code == 0
    lines = out.splitlines()
    assert len(lines) == 5
    assert lines[0].split() == ["4", "4", "6"]
    assert lines[-1].split() == ["1,1,1,1", "24", "1"]


def test_connect_nn_table_csv(capsys):
    code, out = run(capsys, ["connect-nn", "--n", "3", "--format", "csv"])
    assert code == 0
    lines = out.splitlines()
    assert lines[0] == "lambda,alpha,beta"
    assert len(lines) == 4
    assert lines[1] == "3,2 - 3*a + 2*a^2,1 + 1*b + 2*b^2"


def test_connect_value(capsys):
    code, out = run(capsys, ["connect", "--lambda", "2",
                             "--with", "2", "--with", "2"])
    assert code == 0
    assert "-1 + 1*a" in out
    code, _ = run(capsys, ["connect", "--lambda", "2", "--with", "3"])
    assert code == 2


def test_jack_single_row_json(capsys):
    code, out = run(capsys, ["jack", "--lambda", "2", "--format", "json"])
    assert code == 0
    obj = json.loads(out)
    assert obj["degree"] == 2
    assert [t["mu"] for t in obj["terms"]] == ["2", "1,1"]


def test_jack_table_json_round_trip(capsys):
    code, out = run(capsys, ["jack", "--n", "2", "--format", "json"])
    assert code == 0
    rebuilt = JackTable.from_json(json.loads(out))
    table = jack_table(2)
    assert all(rebuilt.row(lam) == table.row(lam) for lam in table)


def test_jack_needs_exactly_one_selector(capsys):
    code, _ = run(capsys, ["jack"])
    assert code == 2
    code, _ = run(capsys, ["jack", "--lambda", "2", "--n", "2"])
    assert code == 2


def test_matchings_listing(capsys):
    code, out = run(capsys, ["matchings", "--lambda", "3",
                             "--weights", "--format", "csv"])
    assert code == 0
    lines = out.splitlines()
    assert lines[0] == "matching,weight,bipartite"
    assert len(lines) == 5
    assert sum(1 for l in lines[1:] if l.endswith("true")) == 1

    code, out = run(capsys, ["matchings", "--lambda", "3",
                             "--bipartite-only", "--format", "csv"])
    assert code == 0
    assert out.splitlines()[1:] == ['"1-2^,1^-3,2-3^",,true']

    code, out = run(capsys, ["matchings", "--lambda", "2,1", "--limit", "2",
                             "--format", "json"])
    assert len(json.loads(out)) == 2


def test_verify_exit_codes(capsys):
    code, out = run(capsys, ["verify", "--suite", "matchings-jack",
                             "--max-n", "2"])
    assert code == 0
    assert out.startswith("suite matchings-jack")
    code, _ = run(capsys, ["verify", "--suite", "nope"])
    assert code == 2


def test_verify_json_omits_timing(capsys):
    code, out = run(capsys, ["verify", "--suite", "i-indep", "--max-n", "3",
                             "--format", "json"])
    assert code == 0
    obj = json.loads(out)
    assert obj["passed"] is True
    assert "elapsed" not in json.dumps(obj)


def test_out_flag_byte_stable(tmp_path, capsys):
    a = tmp_path / "a.json"
    b = tmp_path / "b.json"
    for path in (a, b):
        code, out = run(capsys, ["verify", "--suite", "orthogonality",
                                 "--max-n", "2", "--format", "json",
                                 "--out", str(path)])
        assert code == 0
        assert out == ""
    assert a.read_bytes() == b.read_bytes()


def test_out_flag_bad_path(tmp_path, capsys):
    target = tmp_path / "missing" / "x.csv"
    code, _ = run(capsys, ["partitions", "3", "--format", "csv",
                           "--out", str(target)])
    assert code == 2


def test_emit_rejects_unknown_format():
    table = Table(("a",), (("1",),))
    with pytest.raises(UnsupportedFormat):
        emit(table, "yaml")


def test_bad_partition_text(capsys):
    code, _ = run(capsys, ["connect-nn", "--lambda", "2,x"])
    assert code == 2
    code, _ = run(capsys, ["matchings", "--lambda", "0"])
    assert code == 2
