import json

import pytest

from planarbox import Point, make_score_function
from planarbox.cli import main as cli_main
from planarbox.diagonal import build_dstar, count_peels
from planarbox.measures import runs, stripes
import planarbox.generators as gen
import planarbox.io as pio


# --- generators ---------------------------------------------------------


PARAMS = {"stripes": {"delta": 3}, "windmill": {"sigma": 2}}


def test_generators_basic_postconditions():
    for kind in gen.GENERATORS:
        pts = gen.generate(kind, 32, 0, **PARAMS.get(kind, {}))
        assert len(pts) == 32
        assert len({p.id for p in pts}) == 32
        assert len({p.x for p in pts}) == 32  # distinct x coordinates
        assert len({p.y for p in pts}) == 32  # distinct y coordinates


def test_generators_are_seeded():
    for kind in gen.GENERATORS:
        kw = PARAMS.get(kind, {})
        assert gen.generate(kind, 16, 5, **kw) == gen.generate(kind, 16, 5, **kw)
        assert gen.generate(kind, 16, 5, **kw) != gen.generate(kind, 16, 6, **kw)


def test_windmill_chain_peel_depth():
    for sigma in (1, 2, 3):
        pts = gen.windmill_chain(48, sigma, 1)
        assert count_peels(build_dstar(pts)) == sigma


def test_aligned_run_count():
    for rho in (1, 2, 8):
        pts = gen.aligned(64, 0, mode="co", rho=rho)
        seq = [p.x for p in sorted(pts, key=lambda p: p.y)]
        assert runs(seq)[0] == rho


def test_aligned_anti_is_reversed():
    pts = gen.aligned(32, 0, mode="anti")
    seq = [p.x for p in sorted(pts, key=lambda p: p.y)]
    assert seq == sorted(seq, reverse=True)


def test_stripe_instance_has_few_stripes():
    f = make_score_function("sum")
    for delta in (2, 4):
        pts = gen.stripe_instance(128, delta, 0)
        assert len(stripes(pts, f).stripes) <= delta


# --- file formats -------------------------------------------------------


def test_csv_roundtrip(tmp_path):
    pts = [Point(1, 2, 5, "blue", 0), Point(3, 4, -2, "red", 1)]
    path = tmp_path / "pts.csv"
    pio.write_points(pts, path, fmt="csv")
    assert pio.read_points(path) == pts
    header = path.read_text().splitlines()[0]
    assert header == "x,y,weight,color"


def test_csv_roundtrip_without_colors(tmp_path):
    pts = [Point(1, 2, 5, None, 0), Point(3, 4, -2, None, 1)]
    path = tmp_path / "pts.csv"
    pio.write_points(pts, path, fmt="csv")
    assert pio.read_points(path) == pts
    assert path.read_text().splitlines()[0] == "x,y,weight"


def test_json_roundtrip(tmp_path):
    pts = gen.uniform_random(10, 3)
    path = tmp_path / "pts.json"
    pio.write_points(pts, path, fmt="json")
    assert pio.read_points(path) == pts
    json.loads(path.read_text())  # well-formed JSON


def test_read_points_scale():
    import tempfile, os

    pts = [Point(1, 2, 5, None, 0)]
    with tempfile.TemporaryDirectory() as d:
        path = os.path.join(d, "p.csv")
        pio.write_points(pts, path)
        scaled = pio.read_points(path, scale=10)
    assert scaled[0].x == 10 and scaled[0].y == 20


# --- command line -------------------------------------------------------


def test_cli_gen_solve_measure(tmp_path, capsys):
    infile = tmp_path / "in.csv"
    assert cli_main(["gen", "--kind", "uniform", "--n", "20", "--seed", "1", "--out", str(infile)]) == 0
    assert len(pio.read_points(infile)) == 20

    out = tmp_path / "result.json"
    assert cli_main(["solve", "--algo", "baseline", "--score", "sum", "--out", str(out), str(infile)]) == 0
    result = json.loads(out.read_text())
    assert {"score", "box", "ids", "counters"} <= set(result)
    capsys.readouterr()

    assert cli_main(["measure", str(infile)]) == 0
    report = json.loads(capsys.readouterr().out)
    assert {"lam", "inv", "delta", "rho", "run_entropy"} <= set(report)


def test_cli_solve_agrees_across_algos(tmp_path, capsys):
    infile = tmp_path / "in.csv"
    cli_main(["gen", "--kind", "uniform", "--n", "15", "--seed", "4", "--out", str(infile)])
    capsys.readouterr()
    scores = []
    for algo in ("baseline", "stripes", "finger", "combined", "dstar"):
        cli_main(["solve", "--algo", algo, "--score", "sum", str(infile)])
        scores.append(json.loads(capsys.readouterr().out)["score"])
    assert len(set(scores)) == 1


def test_cli_verify(capsys):
    assert cli_main(["verify", "--algo", "all", "--score", "sum", "--n", "10", "--trials", "5", "--seed", "3"]) == 0
    assert "ok" in capsys.readouterr().out.lower()


def test_cli_bench(tmp_path):
    out = tmp_path / "bench.csv"
    rc = cli_main(
        [
            "bench",
            "--kind",
            "uniform",
            "--ns",
            "16,32",
            "--algo",
            "baseline,stripes",
            "--score",
            "sum",
            "--seed",
            "2",
            "--out",
            str(out),
        ]
    )
    assert rc == 0
    lines = out.read_text().splitlines()
    assert lines[0] == "n,algo,coord_cmps,score_compositions,score_cmps,wall_ns"
    assert len(lines) == 1 + 2 * 2


def test_cli_rejects_bad_input(tmp_path):
    with pytest.raises(SystemExit):
        cli_main(["solve", "--algo", "nope", str(tmp_path / "missing.csv")])
