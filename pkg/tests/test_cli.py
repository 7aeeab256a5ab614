import csv
import io
import json
import subprocess
import sys

import pytest

from lensfill.atlas import atlas
from lensfill.cli import main
from lensfill.records import CSV_HEADER, CatalogueRecord

FIELDS = [
    "p", "q", "k", "h", "b_string", "a_string", "fillings", "unique_up_to_blowup",
    "kollar_certified", "nrs_members", "filling_count_lower_bound", "tool_version", "convention",
]


def run(*args, env=None):
    return subprocess.run(
        [sys.executable, "-m", "lensfill", *args], capture_output=True, text=True, env=env
    )


def test_atlas_table(capsys):
    assert main(["atlas", "4", "1"]) == 0
    out = capsys.readouterr().out
    assert "L(4,1)" in out and "(1,2,1)" in out and "(2,1,2)" in out


def test_atlas_json(capsys):
    assert main(["atlas", "7", "6", "--format", "json"]) == 0
    d = json.loads(capsys.readouterr().out)
    assert list(d) == FIELDS
    assert d["fillings"] == [
        {"n": [0], "rank_h2": 6, "is_artin": True, "is_rational_homology_ball": False, "witness": []}
    ]
    assert d["convention"] == "greedy-ceiling-b-string"


def test_atlas_json_4_1(capsys):
    main(["atlas", "4", "1", "--format", "json"])
    d = json.loads(capsys.readouterr().out)
    assert [f["rank_h2"] for f in d["fillings"]] == [1, 0]


def test_atlas_csv(capsys):
    assert main(["atlas", "9", "2", "--format", "csv"]) == 0
    rows = list(csv.reader(io.StringIO(capsys.readouterr().out)))
    assert rows[0] == CSV_HEADER
    assert len(rows) == 3
    qhb = [r[CSV_HEADER.index("is_rational_homology_ball")] for r in rows[1:]]
    assert qhb == ["False", "True"]


@pytest.mark.parametrize("args", [["atlas", "4", "2"], ["atlas", "3", "5"], ["atlas", "x", "1"],
                                  ["verify", "nope"], ["sweep", "--max-p", "1"], []])
def test_usage_errors_exit_2(args):
    assert main(args) == 2


def test_subprocess_exit_codes(tmp_path):
    assert run("atlas", "4", "1").returncode == 0
    r = run("atlas", "6", "4")
    assert r.returncode == 2 and "coprime" in r.stderr
    assert run("sweep", "--max-p", "5", "--out", str(tmp_path / "no" / "such" / "f")).returncode == 2
    assert run("verify", "catalan", "--max-k", "6").returncode == 0
    assert run("verify", "bogus").returncode == 2
    assert run("verify", "lemma-zero-seq", "--max-k", "6", "--max-entry", "2", "--literal").returncode == 1


def test_sweep_count_and_determinism(tmp_path):
    a, b = tmp_path / "a.jsonl", tmp_path / "b.jsonl"
    assert main(["sweep", "--max-p", "10", "--out", str(a)]) == 0
    assert main(["sweep", "--max-p", "10", "--out", str(b), "--jobs", "2"]) == 0
    lines = a.read_text(encoding="utf-8").splitlines()
    assert len(lines) == 31
    assert a.read_bytes() == b.read_bytes()
    keys = [(json.loads(x)["p"], json.loads(x)["q"]) for x in lines]
    assert keys == sorted(keys)


def test_json_round_trip_bytes(tmp_path):
    out = tmp_path / "s.jsonl"
    main(["sweep", "--max-p", "30", "--out", str(out)])
    for line in out.read_text(encoding="utf-8").splitlines():
        rec = CatalogueRecord.from_json(line)
        assert rec.to_json() == line
        assert list(json.loads(line)) == FIELDS


def test_record_from_atlas_round_trip():
    rec = CatalogueRecord.from_atlas(atlas(144, 89))
    assert CatalogueRecord.from_dict(rec.to_dict()) == rec
    assert rec.nrs_members == ((1, 2, 3, 1, 2), (1, 3, 2, 1, 3))
    with pytest.raises(ValueError):
        CatalogueRecord.from_dict({"p": 1})


def test_sweep_filters(capsys):
    main(["sweep", "--max-p", "100", "--filter", "multiple"])
    recs = [json.loads(x) for x in capsys.readouterr().out.splitlines()]
    assert any((r["p"], r["q"]) == (4, 1) for r in recs)
    assert all(len(r["fillings"]) > 1 for r in recs)
    main(["sweep", "--max-p", "50", "--filter", "qhb-present"])
    recs = [json.loads(x) for x in capsys.readouterr().out.splitlines()]
    assert any((r["p"], r["q"]) == (9, 2) for r in recs)


def test_jobs_env_default(monkeypatch):
    from lensfill import cli

    monkeypatch.setenv(cli.JOBS_ENV, "3")
    args = cli.build_parser().parse_args(["sweep", "--max-p", "5"])
    assert args.jobs == 3
    monkeypatch.setenv(cli.JOBS_ENV, "junk")
    assert cli.build_parser().parse_args(["sweep", "--max-p", "5"]).jobs == 1


def test_large_integers_render_in_decimal():
    big = 2 ** 100 + 7
    rec = CatalogueRecord(big, 1, 1, 1, (big,), (big,), (), True, False, (), 1)
    line = rec.to_json()
    assert str(big) in line
    assert CatalogueRecord.from_json(line) == rec


def test_eval(capsys):
    assert main(["eval", "2,1,2"]) == 0
    out = capsys.readouterr().out
    assert "value:       0" in out and "S1xS2" in out
    assert main(["eval", "--", "0,0,0"]) == 0
    assert "S_3 = 0" in capsys.readouterr().out
    assert main(["eval", "2,x"]) == 2


@pytest.mark.parametrize("suite, extra", [
    ("kollar", ["--max-p", "60"]),
    ("rank-formula", ["--max-p", "80"]),
    ("oracle-equivalence", ["--max-p", "20"]),
    ("duality", ["--max-p", "60"]),
    ("s1s2", ["--max-p", "40"]),
    ("catalan", ["--max-k", "8"]),
    ("lemma-zero-seq", ["--max-k", "5", "--max-entry", "4"]),
])
def test_verify_suites_pass(suite, extra, capsys):
    assert main(["verify", suite, *extra]) == 0
    assert "PASS" in capsys.readouterr().out
