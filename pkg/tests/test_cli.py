import csv
import json

import pytest

from swlab.cli import main


def run(capsys, *argv):
    code = main([str(a) for a in argv])
    out = capsys.readouterr()
    return code, out.out, out.err


@pytest.fixture
def write(tmp_path):
    def _write(name, obj):
        path = tmp_path / name
        path.write_text(obj if isinstance(obj, str) else json.dumps(obj))
        return path
    return _write


class TestGenerate:
    def test_star(self, capsys, tmp_path):
        out = tmp_path / "g.json"
        code, _, err = run(capsys, "generate", "--family", "star", "--n", 100, "--output", out)
        data = json.loads(out.read_text())
        assert code == 0 and data["n"] == 100 and len(data["edges"]) == 99
        assert "edges=99" in err

    def test_chain_star(self, capsys):
        code, out, _ = run(capsys, "generate", "--family", "chain-star", "--p", 4, "--q", 12)
        assert code == 0 and len(json.loads(out)["edges"]) == 15

    def test_layered(self, capsys):
        code, out, _ = run(capsys, "generate", "--family", "layered", "--seq", "geometric:2", "--steps", 5)
        assert code == 0 and json.loads(out)["n"] == 63

    def test_edges_canonical(self, capsys):
        _, out, _ = run(capsys, "generate", "--family", "ba", "--steps", 30, "--seed", 3)
        edges = json.loads(out)["edges"]
        assert all(u < v for u, v in edges) and edges == sorted(edges)

    def test_random_is_deterministic(self, capsys):
        args = ("generate", "--family", "er", "--n", 300, "--z", 4, "--seed", 11)
        assert run(capsys, *args)[1] == run(capsys, *args)[1]

    @pytest.mark.parametrize("argv", [
        ("--family", "star", "--n", 1),
        ("--family", "chain-star", "--p", 3),
        ("--family", "layered", "--seq", "explicit:2,1", "--steps", 2),
        ("--family", "layered", "--seq", "zigzag:2", "--steps", 2),
    ])
    def test_invalid_params(self, capsys, argv):
        code, _, err = run(capsys, "generate", *argv)
        assert code == 2 and "error" in err


class TestStats:
    def test_star(self, capsys, write):
        path = write("s.json", {"n": 4, "edges": [[0, 1], [0, 2], [0, 3]]})
        code, out, _ = run(capsys, "stats", path)
        data = json.loads(out)
        assert code == 0
        assert data["diameter"] == 2 and data["mean"] == {"num": 3, "den": 2}
        assert data["median"] == 1.5 and data["mean_float"] == 1.5
        assert data["alpha"] == [3, 3, 0]

    def test_complete(self, capsys, tmp_path):
        g = tmp_path / "k5.json"
        run(capsys, "generate", "--family", "complete", "--n", 5, "-o", g)
        assert json.loads(run(capsys, "stats", g)[1])["diameter"] == 1

    def test_chain_star(self, capsys, tmp_path):
        g = tmp_path / "cs.json"
        run(capsys, "generate", "--family", "chain-star", "--p", 2, "--q", 2, "-o", g)
        assert json.loads(run(capsys, "stats", g)[1])["mean"] == {"num": 3, "den": 2}

    def test_exit_codes(self, capsys, write):
        bad_json = write("bad.json", "{\"n\": 4,")
        bad_schema = write("schema.json", {"n": 3, "edges": [[0, 0]]})
        split = write("split.json", {"n": 4, "edges": [[0, 1], [2, 3]]})
        assert run(capsys, "stats", bad_json)[0] == 3
        assert run(capsys, "stats", bad_schema)[0] == 3
        assert run(capsys, "stats", write("missing.json", {"edges": []}))[0] == 3
        code, _, err = run(capsys, "stats", split)
        assert code == 5 and "node 2" in err


class TestOracle:
    def test_chain_mean(self, capsys):
        code, out, _ = run(capsys, "oracle", "--family", "chain", "--n", 100, "--stat", "mean")
        data = json.loads(out)
        assert code == 0 and data["match"] is True
        assert data["oracle"] == data["computed"] == {"num": 101, "den": 3}

    def test_star_median(self, capsys):
        code, out, _ = run(capsys, "oracle", "--family", "star", "--n", 4, "--stat", "median")
        data = json.loads(out)
        assert code == 0 and data["oracle"] == data["computed"] == 1.5

    def test_layered_diameter(self, capsys):
        code, out, _ = run(capsys, "oracle", "--family", "layered", "--steps", 6, "--stat", "diameter")
        data = json.loads(out)
        assert code == 0 and data["oracle"] == data["computed"] == 12

    def test_all_stats(self, capsys):
        code, out, _ = run(capsys, "oracle", "--family", "chain-star", "--p", 5, "--q", 7)
        assert code == 0 and set(json.loads(out)["oracle"]) == {"mean"}

    def test_mismatch_exit_code(self, capsys, monkeypatch):
        from fractions import Fraction

        from swlab import closed_forms

        monkeypatch.setattr(closed_forms, "star_mean", lambda n: Fraction(1))
        code, out, _ = run(capsys, "oracle", "--family", "star", "--n", 5, "--stat", "mean")
        assert code == 4 and json.loads(out)["match"] is False

    def test_missing_oracle(self, capsys):
        code, _, _ = run(capsys, "oracle", "--family", "chain-star", "--p", 2, "--q", 2, "--stat", "median")
        assert code == 2


class TestMajorize:
    def test_figure_pair(self, capsys, write, tmp_path):
        a = write("a.json", {"n": 6, "alpha": [6, 4, 3, 2, 0]})
        b = write("b.json", {"n": 6, "alpha": [5, 6, 4, 0, 0]})
        lz = tmp_path / "lz.csv"
        code, out, err = run(capsys, "majorize", a, b, "--csv", lz)
        data = json.loads(out)
        assert code == 0 and data["verdict"] == "Incomparable"
        assert data["lorenz_a"][0] == [0.0, 0.0] and data["lorenz_a"][-1] == [1.0, 1.0]
        rows = list(csv.reader(lz.open()))
        assert rows[0] == ["k", "x", "y_a", "y_b"] and len(rows) == 7
        assert "Incomparable" in err

    def test_identical(self, capsys, write):
        a = write("a.json", {"n": 6, "alpha": [6, 4, 3, 2, 0]})
        assert json.loads(run(capsys, "majorize", a, a)[1])["verdict"] == "Equal"

    def test_graph_files(self, capsys, tmp_path):
        c, s = tmp_path / "c.json", tmp_path / "s.json"
        run(capsys, "generate", "--family", "chain", "--n", 4, "-o", c)
        run(capsys, "generate", "--family", "star", "--n", 4, "-o", s)
        data = json.loads(run(capsys, "majorize", c, s)[1])
        assert data["verdict"] == "Less" and "B is the smaller world" in data["note"]

    def test_mismatched_n(self, capsys, write):
        a = write("a.json", {"n": 6, "alpha": [6, 4, 3, 2, 0]})
        b = write("b.json", {"n": 4, "alpha": [3, 3, 0]})
        assert run(capsys, "majorize", a, b)[0] == 3


class TestClassify:
    def test_chain_diameter(self, capsys, tmp_path):
        series = tmp_path / "s.csv"
        code, out, _ = run(capsys, "classify", "--family", "chain", "--stat", "diam", "--csv", series)
        data = json.loads(out)
        assert code == 0 and data["verdict"] == "NotSmall"
        assert set(data) >= {"family", "stat", "points", "verdict", "C_estimate", "policy"}
        rows = list(csv.reader(series.open()))
        assert rows[0] == ["n", "stat", "ratio"] and len(rows) == len(data["points"]) + 1

    def test_complete_median(self, capsys):
        code, out, _ = run(capsys, "classify", "--family", "complete", "--stat", "med")
        assert code == 0 and json.loads(out)["verdict"] == "UltraSmall"

    def test_er_average(self, capsys):
        code, out, _ = run(capsys, "classify", "--family", "er", "--z", 6, "--stat", "avg",
                           "--sizes", "512x2^4", "--seeds", 3)
        data = json.loads(out)
        assert code == 0 and data["verdict"] == "Small"
        assert data["C_estimate"] == pytest.approx(1 / 1.791759, rel=0.2)

    def test_layered_steps(self, capsys):
        code, out, _ = run(capsys, "classify", "--family", "layered", "--seq", "constant:2",
                           "--stat", "diameter", "--sizes", "2,4,8,16,32")
        assert code == 0 and json.loads(out)["verdict"] == "NotSmall"

    def test_deterministic_output(self, capsys):
        args = ("classify", "--family", "ba", "--stat", "avg", "--sizes", "64x2^4", "--seeds", "1,2")
        assert run(capsys, *args)[1] == run(capsys, *args)[1]

    def test_bad_schedule(self, capsys):
        assert run(capsys, "classify", "--family", "chain", "--stat", "avg", "--sizes", "16,8,32,64")[0] == 2
        assert run(capsys, "classify", "--family", "chain", "--stat", "avg", "--sizes", "abc")[0] == 2
        assert run(capsys, "classify", "--family", "chain", "--stat", "avg", "--window", 10)[0] == 2
        assert run(capsys, "classify", "--family", "chain", "--stat", "radius")[0] == 2

    def test_usage_error(self, capsys):
        with pytest.raises(SystemExit) as info:
            main(["classify", "--family", "chain"])
        assert info.value.code == 2
