import csv
import io
import json
import subprocess
import sys

import pytest

from indcut.cli import BENCH_COLUMNS, main, write_atomic
from indcut.graph import parse_dimacs, write_dimacs
from shapes import complete, cycle, prism


@pytest.fixture
def files(tmp_path):
    paths = {}
    for name, g in (("c4", cycle(4)), ("k4", complete(4)), ("prism", prism())):
        p = tmp_path / f"{name}.col"
        p.write_text(write_dimacs(g))
        paths[name] = str(p)
    return paths


def run(capsys, *argv):
    code = main(list(argv))
    out, err = capsys.readouterr()
    return code, out, err


# --- solve ----------------------------------------------------------------------


def test_solve_yes(files, capsys):
    code, out, _ = run(capsys, "solve", files["c4"])
    verdict = json.loads(out)
    assert code == 0 and verdict["has_cut"] is True
    assert verdict["certificate"] == [2, 4]
    assert set(verdict) == {"has_cut", "certificate", "reason", "stats"}


def test_solve_no_has_distinct_code(files, capsys):
    code, out, _ = run(capsys, "solve", files["prism"])
    assert code == 10 and json.loads(out)["has_cut"] is False


def test_solve_plain_and_dump_cover(files, tmp_path, capsys):
    dump = tmp_path / "cover.txt"
    code, out, _ = run(capsys, "solve", "--format", "plain", "--dump-cover", str(dump), files["prism"])
    assert code == 10 and out.startswith("NO")
    assert dump.read_text() == "method windmill\n1 2 3\n4 5 6\n"


def test_solve_brute_refuses_large(tmp_path, capsys):
    p = tmp_path / "big.col"
    p.write_text(write_dimacs(cycle(30)))
    code, _, err = run(capsys, "solve", "--strategy", "brute", str(p))
    assert code == 2 and "refuses" in err


def test_solve_parse_error(tmp_path, capsys):
    p = tmp_path / "bad.col"
    p.write_text("p edge 2 1\ne 1 1\n")
    code, _, err = run(capsys, "solve", str(p))
    assert code == 2 and "line 2" in err


def test_solve_missing_file(capsys):
    code, _, _ = run(capsys, "solve", "/nonexistent/file.col")
    assert code == 2


def test_solve_bad_jobs(files, capsys):
    code, _, _ = run(capsys, "solve", "--jobs", "0", files["c4"])
    assert code == 2


def test_solve_internal_error_exit(files, capsys, monkeypatch):
    from indcut import cli
    from indcut.solver import CertificateError

    def broken(*a, **k):
        raise CertificateError("boom")
    monkeypatch.setattr(cli, "solve", broken)
    code, _, err = run(capsys, "solve", files["c4"])
    assert code == 3 and "boom" in err


def test_solve_reads_stdin(monkeypatch, capsys):
    monkeypatch.setattr(sys, "stdin", io.StringIO(write_dimacs(cycle(4))))
    code, out, _ = run(capsys, "solve", "-")
    assert code == 0


# --- verify ---------------------------------------------------------------------


@pytest.mark.parametrize("name, ids, code, message", [
    ("c4", ["1", "3"], 0, "independent cut"),
    ("k4", ["1"], 1, "removal leaves connected graph"),
    ("c4", ["1", "2"], 1, "set not independent"),
])
def test_verify(files, capsys, name, ids, code, message):
    got, out, _ = run(capsys, "verify", files[name], *ids)
    assert got == code and message in out


def test_verify_out_of_range(files, capsys):
    code, _, err = run(capsys, "verify", files["c4"], "5")
    assert code == 2 and "out of range" in err


# --- reduce ---------------------------------------------------------------------


def test_reduce_one_clause(tmp_path, capsys):
    cnf = tmp_path / "f.cnf"
    cnf.write_text("p cnf 3 1\n1 -2 3 0\n")
    out_path = tmp_path / "g.col"
    code, out, _ = run(capsys, "reduce", str(cnf), "-o", str(out_path))
    assert code == 0
    assert out.startswith("n'=7 m'=3 n''=17 m''=18 order=184 ")
    g = parse_dimacs(out_path.read_text())
    assert g.n == 184
    labels = (tmp_path / "g.col.labels").read_text().splitlines()
    assert len(labels) == 184


def test_reduce_is_deterministic(tmp_path, capsys):
    cnf = tmp_path / "f.cnf"
    cnf.write_text("p cnf 3 2\n1 -2 3 0\n-1 2 0\n")
    _, first, _ = run(capsys, "reduce", str(cnf))
    _, second, _ = run(capsys, "reduce", str(cnf))
    assert first == second and first.startswith("c ")


def test_reduce_empty_cnf(tmp_path, capsys):
    cnf = tmp_path / "f.cnf"
    cnf.write_text("p cnf 3 0\n")
    code, out, _ = run(capsys, "reduce", str(cnf), "-o", str(tmp_path / "g.col"))
    assert code == 0 and "order=8" in out


def test_reduce_rejects_long_clause(tmp_path, capsys):
    cnf = tmp_path / "f.cnf"
    cnf.write_text("p cnf 4 1\n1 2 3 4 0\n")
    out_path = tmp_path / "g.col"
    code, _, _ = run(capsys, "reduce", str(cnf), "-o", str(out_path))
    assert code == 2 and not out_path.exists()


# --- gen ------------------------------------------------------------------------


def test_gen_windmill(capsys):
    code, out, _ = run(capsys, "gen", "windmill", "2")
    g = parse_dimacs(out)
    assert code == 0 and (g.n, g.m) == (5, 6)


def test_gen_windmill_connected(capsys):
    _, out, _ = run(capsys, "gen", "windmill", "1", "2", "--connect")
    g = parse_dimacs(out)
    assert (g.n, g.m) == (8, 10)


def test_gen_maxdeg_is_reproducible(capsys):
    _, a, _ = run(capsys, "gen", "maxdeg", "40", "4", "0.5", "--seed", "7")
    _, b, _ = run(capsys, "gen", "maxdeg", "40", "4", "0.5", "--seed", "7")
    _, c, _ = run(capsys, "gen", "maxdeg", "40", "4", "0.5", "--seed", "8")
    assert a == b != c
    assert parse_dimacs(a).max_degree() <= 4


def test_gen_dense_min_degree(capsys):
    _, out, _ = run(capsys, "gen", "dense", "20", "0.6", "--seed", "1")
    assert parse_dimacs(out).min_degree() >= 12


@pytest.mark.parametrize("argv", [["dense", "20", "1.0"], ["dense", "20", "-0.1"],
                                  ["prismlike", "0"], ["windmill", "0"],
                                  ["maxdeg", "10", "3", "1.5"]])
def test_gen_infeasible(capsys, argv):
    code, _, _ = run(capsys, "gen", *argv)
    assert code == 2


def test_gen_to_file(tmp_path, capsys):
    out = tmp_path / "p.col"
    code, stdout, _ = run(capsys, "gen", "-o", str(out), "prismlike", "2")
    assert code == 0 and stdout == "" and parse_dimacs(out.read_text()) == prism()


# --- bench ----------------------------------------------------------------------


def read_csv(text):
    rows = list(csv.reader(io.StringIO(text)))
    assert rows[0] == BENCH_COLUMNS
    return [dict(zip(rows[0], r)) for r in rows[1:]]


def test_bench_generated(capsys):
    code, out, _ = run(capsys, "bench", "--sizes", "20,30,40", "--delta", "4")
    rows = read_csv(out)
    assert code == 0 and len(rows) == 3
    for row in rows:
        assert int(row["cover_size"]) <= 0.4 * int(row["n"])
        assert int(row["max_deg"]) <= 4


def test_bench_directory(tmp_path, files, capsys):
    d = tmp_path / "inst"
    d.mkdir()
    (d / "prism.col").write_text(write_dimacs(prism()))
    (d / "broken.col").write_text("nonsense\n")
    code, out, err = run(capsys, "bench", str(d))
    rows = {r["instance"]: r for r in read_csv(out)}
    assert code == 0
    assert rows["prism.col"]["partitions"] == "1" and rows["prism.col"]["has_cut"] == "0"
    assert rows["broken.col"]["n"] == "error"


def test_bench_empty_directory(tmp_path, capsys):
    d = tmp_path / "empty"
    d.mkdir()
    code, out, _ = run(capsys, "bench", str(d))
    assert code == 0 and out == ",".join(BENCH_COLUMNS) + "\n"


# --- plumbing -------------------------------------------------------------------


def test_write_atomic_leaves_no_partial_file(tmp_path):
    target = tmp_path / "out.txt"
    write_atomic(target, "hello")
    assert target.read_text() == "hello"

    with pytest.raises(TypeError):
        write_atomic(target, 42)
    assert target.read_text() == "hello"
    assert [p.name for p in tmp_path.iterdir()] == ["out.txt"]


def test_module_entry_point(files):
    proc = subprocess.run([sys.executable, "-m", "indcut", "solve", files["prism"]],
                          capture_output=True, text=True)
    assert proc.returncode == 10
