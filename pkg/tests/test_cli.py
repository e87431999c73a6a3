import csv
import json
import math
import subprocess
import sys

import numpy as np
import pytest

from lrdcor import cli
from lrdcor.cli import EXIT_ERROR, EXIT_OK, EXIT_REJECT, atomic_write, main, read_paired_csv
from lrdcor.pipeline import fixture_path


def run(argv, capsys):
    code = main(argv)
    out, err = capsys.readouterr()
    return code, out, err


def data_rows(path):
    with open(path, encoding="utf-8") as fh:
        return list(csv.reader(ln for ln in fh if not ln.startswith("#")))


class TestGen:
    def test_rows_and_header(self, tmp_path, capsys):
        out = tmp_path / "s.csv"
        assert run(["gen", "--hurst", "0.7", "--n", "500", "--seed", "1", "--out", str(out)],
                   capsys)[0] == EXIT_OK
        first = out.read_text().splitlines()[0]
        assert first.startswith("# ")
        meta = json.loads(first[2:])
        assert meta["schema_version"] == 1 and meta["hurst"] == 0.7 and meta["n"] == 500
        rows = data_rows(out)
        assert rows[0] == ["value"] and len(rows) == 501

    def test_determinism(self, tmp_path, capsys):
        paths = [tmp_path / "a.csv", tmp_path / "b.csv"]
        for p in paths:
            run(["gen", "--hurst", "0.7", "--n", "200", "--seed", "5", "--cross-corr", "0.4",
                 "--transform", "uniform", "--out", str(p)], capsys)
        assert paths[0].read_bytes() == paths[1].read_bytes()

    def test_stdout(self, capsys):
        code, out, _ = run(["gen", "--hurst", "0.6", "--n", "10", "--seed", "2"], capsys)
        assert code == EXIT_OK and len(out.strip().splitlines()) == 12

    @pytest.mark.parametrize("flag,value", [("--hurst", "1.2"), ("--hurst", "abc"),
                                            ("--n", "1"), ("--seed", "-3")])
    def test_validation(self, flag, value, capsys):
        argv = {"--hurst": "0.7", "--n": "50", "--seed": "1"}
        argv[flag] = value
        with pytest.raises(SystemExit) as exc:
            main(["gen"] + [t for kv in argv.items() for t in kv])
        assert exc.value.code == 2
        assert flag in capsys.readouterr().err

    def test_transform_needs_v(self, capsys):
        code, _, err = run(["gen", "--hurst", "0.7", "--n", "50", "--seed", "1",
                            "--transform", "parabolic"], capsys)
        assert code == EXIT_ERROR and "--v" in err
        code, _, err = run(["gen", "--hurst", "0.7", "--n", "50", "--seed", "1",
                            "--transform", "parabolic", "--v", "3"], capsys)
        assert code == EXIT_ERROR and "--v" in err

    @pytest.mark.parametrize("transform,v", [("parabolic", "1"), ("wavy", "2"),
                                             ("rotation", "3")])
    def test_pairs(self, tmp_path, capsys, transform, v):
        out = tmp_path / "p.csv"
        assert run(["gen", "--hurst", "0.7", "--n", "40", "--seed", "1", "--transform",
                    transform, "--v", v, "--out", str(out)], capsys)[0] == EXIT_OK
        x, y = read_paired_csv(out)
        assert x.size == y.size == 40

    def test_monthly_round_trip(self, tmp_path, capsys):
        for name, seed in (("a", "1"), ("b", "2")):
            run(["gen", "--hurst", "0.7", "--n", "96", "--seed", seed, "--monthly",
                 "--start", "2000-01", "--out", str(tmp_path / f"{name}.csv")], capsys)
        code, out, err = run(["test", "--x", str(tmp_path / "a.csv"), "--y",
                              str(tmp_path / "b.csv"), "--deseasonalize"], capsys)
        assert code in (EXIT_OK, EXIT_REJECT) and err == ""
        assert json.loads(out)["config"]["block_len"] == 9


class TestTestCommand:
    def gen_pair(self, tmp_path, capsys, n="300"):
        p = tmp_path / "pair.csv"
        run(["gen", "--hurst", "0.6", "--n", n, "--seed", "3", "--cross-corr", "0",
             "--out", str(p)], capsys)
        return p

    def test_round_trip(self, tmp_path, capsys):
        p = self.gen_pair(tmp_path, capsys)
        code, out, err = run(["test", "--pair", str(p)], capsys)
        doc = json.loads(out)
        assert err == "" and doc["schema_version"] == 1
        assert set(doc) >= {"statistic", "threshold", "p_analogue", "reject", "config"}
        assert code == (EXIT_REJECT if doc["reject"] else EXIT_OK)
        assert doc["config"]["block_len"] == 17 and doc["config"]["lag"] == 30

    def test_self_pair_rejects(self, tmp_path, capsys):
        x = np.random.default_rng(0).standard_normal(200)
        p = tmp_path / "self.csv"
        p.write_text("x,y\n" + "".join(f"{v},{v}\n" for v in x.tolist()))
        code, out, _ = run(["test", "--pair", str(p)], capsys)
        assert code == EXIT_REJECT and json.loads(out)["reject"] is True

    def test_constant_y(self, tmp_path, capsys):
        p = tmp_path / "c.csv"
        p.write_text("x,y\n" + "".join(f"{i * 0.37 % 1},1.5\n" for i in range(60)))
        code, out, _ = run(["test", "--pair", str(p)], capsys)
        doc = json.loads(out)
        assert code == EXIT_OK and doc["statistic"] == 0.0 and doc["reject"] is False

    def test_fixture_defaults(self, capsys):
        code, out, _ = run(["test", "--x", str(fixture_path("amazon")), "--y",
                            str(fixture_path("jutai")), "--deseasonalize"], capsys)
        doc = json.loads(out)
        assert doc["n"] == 96 and doc["config"]["block_len"] == 9 and doc["config"]["lag"] == 9
        assert code == EXIT_REJECT

    def test_options(self, tmp_path, capsys):
        p = self.gen_pair(tmp_path, capsys)
        out_file = tmp_path / "r.json"
        code, out, _ = run(["test", "--pair", str(p), "--block-len", "20", "--lag", "5",
                            "--statistic", "dcov_n_pow_D", "--lrd-param", "0.3",
                            "--level", "0.1", "--out", str(out_file)], capsys)
        assert out == ""
        cfg = json.loads(out_file.read_text())["config"]
        assert cfg == {"block_len": 20, "lag": 5, "statistic": "dcov_n_pow_D",
                       "level": 0.1, "lrd_param": 0.3}

    @pytest.mark.parametrize("argv,msg", [
        (["test"], "provide"),
        (["test", "--pair", "MISSING.csv"], "cannot read"),
        (["test", "--pair", "{pair}", "--block-len", "290"], "no blocks"),
        (["test", "--pair", "{pair}", "--statistic", "dcov_n_pow_D"], "lrd"),
        (["test", "--pair", "{pair}", "--x", "{pair}"], "either"),
    ])
    def test_errors(self, tmp_path, capsys, argv, msg):
        p = self.gen_pair(tmp_path, capsys)
        code, _, err = run([a.format(pair=p) for a in argv], capsys)
        assert code == EXIT_ERROR and msg in err

    def test_ingest_error_exit(self, tmp_path, capsys):
        bad = tmp_path / "bad.csv"
        bad.write_text("year,month,value\n2000,1,1\n2000,3,2\n")
        code, _, err = run(["test", "--x", str(bad), "--y", str(bad)], capsys)
        assert code == EXIT_ERROR and "row 3" in err

    def test_malformed_pair(self, tmp_path, capsys):
        p = tmp_path / "m.csv"
        p.write_text("x,y\n1,2\n3,oops\n")
        code, _, err = run(["test", "--pair", str(p)], capsys)
        assert code == EXIT_ERROR and "row 3" in err


class TestMc:
    def test_table_csv(self, tmp_path, capsys):
        out = tmp_path / "t1.csv"
        code, _, _ = run(["mc", "--table", "1", "--reps", "4", "--ns", "300",
                          "--hursts", "0.6", "--out", str(out)], capsys)
        assert code == EXIT_OK
        rows = data_rows(out)
        assert rows[0] == cli.MC_COLUMNS
        cells = {(r[4], r[5], r[6]): r for r in rows[1:]}
        assert len(cells) == 3
        assert float(cells[("300", "0.6", "0.0")][9]) == 0.089

    def test_reps_one(self, capsys):
        code, out, _ = run(["mc", "--table", "7", "--reps", "1", "--ns", "100",
                            "--format", "json"], capsys)
        doc = json.loads(out)
        assert code == EXIT_OK and doc["schema_version"] == 1
        assert len(doc["rows"]) == 12
        assert all(r["rate"] in (0.0, 1.0) for r in doc["rows"])

    def test_thread_determinism(self, capsys):
        argv = ["mc", "--kind", "linear", "--params", "0.25", "--reps", "6", "--ns", "120",
                "--hursts", "0.7"]
        _, serial, _ = run(argv, capsys)
        _, threaded, _ = run(argv + ["--threads", "3"], capsys)
        assert serial == threaded

    def test_scatter(self, tmp_path, capsys):
        sc = tmp_path / "scatter.csv"
        run(["mc", "--kind", "parabolic", "--params", "1", "--reps", "1", "--ns", "100",
             "--hursts", "0.7", "--scatter-out", str(sc), "--scatter-n", "50"], capsys)
        rows = data_rows(sc)
        assert rows[0] == ["H", "param", "i", "x", "y"] and len(rows) == 51

    def test_invalid_table(self, capsys):
        with pytest.raises(SystemExit) as exc:
            main(["mc", "--table", "9"])
        assert exc.value.code == 2
        assert "1..8" in capsys.readouterr().err

    @pytest.mark.parametrize("argv", [["mc"], ["mc", "--kind", "linear"],
                                      ["mc", "--kind", "parabolic", "--params", "3"]])
    def test_errors(self, argv, capsys):
        assert run(argv, capsys)[0] == EXIT_ERROR


class TestDiag:
    def test_sigma_iid(self, capsys):
        code, out, _ = run(["diag", "sigma", "--iid"], capsys)
        doc = json.loads(out)
        assert code == EXIT_OK and doc["value"] == 1.0 and doc["schema_version"] == 1

    def test_gamma_iid(self, capsys):
        _, out, _ = run(["diag", "gamma", "--iid", "--s", "1", "--t", "1"], capsys)
        assert json.loads(out)["value"] == pytest.approx((1 - math.exp(-1)) ** 2, abs=1e-12)

    def test_cparam_fgn(self, capsys):
        _, out, _ = run(["diag", "cparam", "--hurst", "0.6", "--kmax", "10000"], capsys)
        doc = json.loads(out)
        assert doc["model"] == "fgn" and doc["hurst_y"] == 0.6
        assert doc["value"] == pytest.approx(0.06419, abs=1e-4)

    def test_reduction(self, capsys):
        _, out, _ = run(["diag", "reduction", "--hurst", "0.8", "--ns", "64,128",
                         "--reps", "2"], capsys)
        doc = json.loads(out)
        assert len(doc["scaled_medians"]) == 2
        assert doc["status"] == ("pass" if doc["monotone_decreasing"] else "fail")

    def test_errors(self, capsys):
        assert run(["diag", "gamma"], capsys)[0] == EXIT_ERROR
        with pytest.raises(SystemExit):
            main(["diag", "entropy"])


class TestPlumbing:
    def test_atomic_write(self, tmp_path):
        target = tmp_path / "out.txt"
        target.write_text("old")
        atomic_write(str(target), "new")
        assert target.read_text() == "new"
        assert [p.name for p in tmp_path.iterdir()] == ["out.txt"]

    def test_atomic_write_failure_keeps_old(self, tmp_path, monkeypatch):
        target = tmp_path / "out.txt"
        target.write_text("old")

        def boom(*a, **k):
            raise OSError("disk full")

        monkeypatch.setattr(cli.os, "replace", boom)
        with pytest.raises(OSError):
            atomic_write(str(target), "new")
        assert target.read_text() == "old"
        assert [p.name for p in tmp_path.iterdir()] == ["out.txt"]

    def test_help_lists_ranges(self, capsys):
        with pytest.raises(SystemExit):
            main(["gen", "--help"])
        text = capsys.readouterr().out
        assert "(0, 1)" in text and "--cross-corr" in text

    def test_console_entry(self, tmp_path):
        res = subprocess.run([sys.executable, "-m", "lrdcor", "diag", "sigma", "--iid"],
                             capture_output=True, text=True, check=False)
        assert res.returncode == 0 and json.loads(res.stdout)["value"] == 1.0
