import json

import numpy as np
import pytest

import dawnsp.verify
from dawnsp.bench import CSV_HEADER
from dawnsp.cli import main
from dawnsp.engine import sssp_sovm
from dawnsp.generators import cycle_graph, disjoint_union, erdos_renyi, path_graph
from dawnsp.io import load_csr, load_graph, save_csr
from dawnsp.oracle import bfs_baseline

MM_PATH4 = "%%MatrixMarket matrix coordinate pattern general\n4 4 3\n1 2\n2 3\n3 4\n"


@pytest.fixture
def path_mtx(tmp_path):
    p = tmp_path / "path.mtx"
    p.write_text(MM_PATH4)
    return p


def cache(tmp_path, g, name="g.csr"):
    p = tmp_path / name
    save_csr(g, p)
    return p


def test_convert(tmp_path, path_mtx, capsys):
    out = tmp_path / "p.csr"
    assert main(["convert", str(path_mtx), str(out)]) == 0
    assert out.exists()
    assert load_csr(out) == load_graph(path_mtx)
    text = capsys.readouterr().out
    assert "n: 4" in text and "m: 3" in text and "eta:" in text


def test_convert_bad_banner(tmp_path, capsys):
    bad = tmp_path / "bad.mtx"
    bad.write_text("%%MatrixMarket matrix coordinate pattern sideways\n1 1 0\n")
    assert main(["convert", str(bad), str(tmp_path / "o.csr")]) == 2
    assert "error" in capsys.readouterr().err
    assert not (tmp_path / "o.csr").exists()


def test_sssp_path(path_mtx, capsys):
    assert main(["sssp", str(path_mtx), "--source", "0"]) == 0
    cap = capsys.readouterr()
    assert cap.out.splitlines() == ["node,distance", "1,1", "2,2", "3,3"]
    assert "iterations=3" in cap.err and "edge_inspections=3" in cap.err


def test_sssp_unreachable_only(path_mtx, capsys):
    assert main(["sssp", str(path_mtx), "--source", "3"]) == 0
    assert capsys.readouterr().out == "node,distance\n"
    assert main(["sssp", str(path_mtx), "--source", "3", "--unreached", "inf"]) == 0
    assert capsys.readouterr().out.splitlines()[1:] == ["0,inf", "1,inf", "2,inf"]


def test_sssp_bad_source(path_mtx):
    assert main(["sssp", str(path_mtx), "--source", "9"]) != 0


@pytest.mark.parametrize("variant", ["sovm", "bovm", "auto"])
def test_sssp_matches_oracle(tmp_path, capsys, variant):
    g = erdos_renyi(60, 0.05, seed=6)
    p = cache(tmp_path, g)
    for s in (0, 17, 59):
        out = tmp_path / "d.csv"
        assert main(["sssp", str(p), "--source", str(s), "--variant", variant, "--output", str(out)]) == 0
        rows = [tuple(map(int, line.split(","))) for line in out.read_text().splitlines()[1:]]
        ref = bfs_baseline(g, s).distance
        assert rows == [(v, int(d)) for v, d in enumerate(ref) if d]


def test_apsp(tmp_path, capsys):
    p = cache(tmp_path, cycle_graph(3))
    assert main(["apsp", str(p), "--threads", "2"]) == 0
    lines = capsys.readouterr().out.splitlines()
    assert lines[0] == "source,node,distance"
    assert sorted(lines[1:]) == sorted(["0,1,1", "0,2,2", "1,2,1", "1,0,2", "2,0,1", "2,1,2"])


def test_stats_two_components(tmp_path, capsys):
    p = cache(tmp_path, disjoint_union(path_graph(3), path_graph(2)))
    assert main(["stats", str(p)]) == 0
    out = capsys.readouterr().out
    assert "s_wcc: 3" in out and "e_wcc: 2" in out and "components: 2" in out


def test_stats_eccentricity(tmp_path, capsys):
    p = cache(tmp_path, cycle_graph(3))
    assert main(["stats", str(p), "--eccentricity", "0"]) == 0
    assert "eccentricity[0]: 2" in capsys.readouterr().out
    assert main(["stats", str(p), "--eccentricity", "5"]) == 1


def test_stats_diameter_sample_full(tmp_path, capsys):
    g = erdos_renyi(50, 0.05, seed=10)
    p = cache(tmp_path, g)
    exact = max(int(bfs_baseline(g, s).distance.max()) for s in range(g.n))
    assert main(["stats", str(p), "--diameter-sample", "50"]) == 0
    assert f"max_eccentricity_lower_bound[k=50]: {exact}" in capsys.readouterr().out


def test_bench_json(tmp_path, capsys):
    p = cache(tmp_path, erdos_renyi(30, 0.1, seed=1))
    assert main(["bench", str(p), "--sources", "4", "--runs", "2", "--threads", "1"]) == 0
    rep = json.loads(capsys.readouterr().out)
    assert rep["timings"][0]["efficiency"] == 1.0
    assert len(rep["sources"]) == 4


def test_bench_csv_to_file(tmp_path):
    p = cache(tmp_path, erdos_renyi(30, 0.1, seed=1))
    out = tmp_path / "r.csv"
    assert main(["bench", str(p), "--sources", "3", "--runs", "1", "--threads", "1,2", "--format", "csv", "--output", str(out)]) == 0
    assert out.read_text().splitlines()[0] == ",".join(CSV_HEADER)


def test_bench_config_errors(tmp_path):
    p = cache(tmp_path, erdos_renyi(10, 0.1, seed=1))
    assert main(["bench", str(p), "--sources", "11", "--runs", "1"]) == 1
    assert main(["bench", str(p), "--threads", "4,2"]) == 1
    # flags are rejected before the (missing) file is touched
    assert main(["bench", str(tmp_path / "missing"), "--runs", "0"]) == 1
    assert main(["bench", str(tmp_path / "missing"), "--runs", "1"]) == 2


def test_bench_same_seed_same_sources(tmp_path, capsys):
    p = cache(tmp_path, erdos_renyi(40, 0.1, seed=1))
    reports = []
    for _ in range(2):
        assert main(["bench", str(p), "--sources", "10", "--runs", "1", "--seed", "42"]) == 0
        reports.append(json.loads(capsys.readouterr().out))
    assert reports[0]["sources"] == reports[1]["sources"]


def test_verify_fixture(tmp_path, capsys):
    p = cache(tmp_path, erdos_renyi(40, 0.08, seed=3))
    assert main(["verify", str(p)]) == 0
    out = capsys.readouterr().out
    assert "oracle_equality: PASS" in out and "sources=40" in out


def test_verify_detects_corruption(tmp_path, monkeypatch, capsys):
    g = path_graph(6)
    p = cache(tmp_path, g)

    def broken(csr, s):
        r = sssp_sovm(csr, s)
        if r.distance[4]:
            r.distance[4] += 1
        return r

    monkeypatch.setattr(dawnsp.verify, "sssp_sovm", broken)
    assert main(["verify", str(p)]) == 3
    err = capsys.readouterr().err
    assert "oracle_equality failed" in err and "node 4" in err and "source 0" in err


def test_verify_random_sweep(capsys):
    assert main(["verify", "--random", "100", "--max-n", "256", "--seed", "1"]) == 0
    assert "graphs=100" in capsys.readouterr().out


def test_usage_errors(capsys):
    assert main(["verify"]) == 1
    assert main(["frobnicate"]) == 1
    assert main(["sssp", "g.mtx"]) == 1  # --source is required
    assert main(["--version"]) == 0
