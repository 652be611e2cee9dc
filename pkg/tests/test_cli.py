import json

import pytest

from spiralcover.cli import main
from spiralcover.serialize import dumps, load_function_spec

EXAMPLE_SPEC = {
    "mu": 1.0,
    "beta": 0.6,
    "factors": [
        {"node": [0.9, 0.4], "exponent": [0.2, 0.0]},
        {"node": [0.9, -0.4], "exponent": [0.2, 0.0]},
    ],
}

CORE_SPEC = {"mu": 1.0, "beta": 0.6, "prefactor": [0.6, 0.0], "factors": []}


@pytest.fixture()
def example_path(tmp_path):
    path = tmp_path / "example.json"
    path.write_text(dumps(EXAMPLE_SPEC))
    return str(path)


class TestLoadSpec:
    def test_factors_form(self):
        f, params = load_function_spec(EXAMPLE_SPEC)
        assert params.mu == 1.0
        assert len(f.factors) == 2

    def test_measure_form(self):
        spec = {
            "mu": [1.0, 0.2],
            "beta": 0.3,
            "measure": {"atoms": [{"angle": 0.5, "weight": 0.4}, {"angle": -2.0, "weight": 0.6}]},
        }
        f, params = load_function_spec(spec)
        assert len(f.factors) == 2
        assert f.prefactor == params.mu

    def test_missing_body_rejected(self):
        with pytest.raises(ValueError):
            load_function_spec({"mu": 1.0, "beta": 0.0})


class TestConstruct:
    def test_canonicalizes_measure_spec(self, tmp_path):
        src = tmp_path / "in.json"
        out = tmp_path / "out.json"
        src.write_text(
            dumps({"mu": 1.0, "beta": 0.5, "measure": {"atoms": [{"angle": 0.0, "weight": 1.0}]}})
        )
        assert main(["construct", "-i", str(src), "-o", str(out)]) == 0
        data = json.loads(out.read_text())
        assert data["factors"][0]["node"] == [1.0, 0.0]

    def test_random_measure_generation(self, tmp_path):
        out = tmp_path / "m.json"
        assert main(["construct", "--seed", "7", "--samples", "4", "-o", str(out)]) == 0
        data = json.loads(out.read_text())
        assert len(data["atoms"]) == 4
        assert sum(a["weight"] for a in data["atoms"]) == pytest.approx(1.0)

    def test_needs_input_or_seed(self, capsys):
        assert main(["construct"]) == 2


class TestCheck:
    def test_example_passes_all(self, example_path, tmp_path):
        out = tmp_path / "report.json"
        assert main(["check", "-i", example_path, "-o", str(out), "--checks", "all"]) == 0
        data = json.loads(out.read_text())
        assert data["passed"] is True
        names = [c["check"] for c in data["checks"]]
        assert "membership" in names
        assert "derivative-bounds" in names  # real mu in (0, 2]

    def test_example_with_higher_order_fails(self, tmp_path):
        spec = dict(EXAMPLE_SPEC, beta=0.9)
        path = tmp_path / "bad.json"
        path.write_text(dumps(spec))
        out = tmp_path / "report.json"
        assert main(["check", "-i", str(path), "-o", str(out)]) == 1
        data = json.loads(out.read_text())
        assert data["passed"] is False
        assert data["checks"][0]["worst_margin"] < 0

    def test_truncated_json_is_a_usage_error(self, tmp_path):
        path = tmp_path / "trunc.json"
        path.write_text('{"mu": 1.0, "beta"')
        assert main(["check", "-i", str(path)]) == 2

    def test_missing_input_flag(self):
        assert main(["check"]) == 2

    def test_unknown_check_name(self, example_path):
        assert main(["check", "-i", example_path, "--checks", "nonsense"]) == 2

    def test_byte_identical_reports(self, example_path, tmp_path):
        a, b = tmp_path / "a.json", tmp_path / "b.json"
        main(["check", "-i", example_path, "-o", str(a)])
        main(["check", "-i", example_path, "-o", str(b)])
        assert a.read_bytes() == b.read_bytes()


class TestDistort:
    def test_example(self, example_path, tmp_path):
        out = tmp_path / "d.json"
        assert main(["distort", "-i", example_path, "-o", str(out)]) == 0
        data = json.loads(out.read_text())
        names = [c["check"] for c in data["checks"]]
        assert names == ["distortion-coefficient", "derivative-disk"]


class TestCover:
    def test_example_covering(self, example_path, tmp_path):
        out = tmp_path / "c.json"
        code = main(
            ["cover", "-i", example_path, "--r-inner", "0.95", "--rho", "0.999",
             "--samples", "128", "-o", str(out)]
        )
        assert code == 0
        data = json.loads(out.read_text())
        assert data["passed"] is True
        assert data["samples"] == 128

    def test_threaded_covering(self, example_path, tmp_path, monkeypatch):
        monkeypatch.setenv("SPIRALCOVER_THREADS", "2")
        out = tmp_path / "c.json"
        code = main(["cover", "-i", example_path, "--samples", "64", "-o", str(out)])
        assert code == 0
        assert json.loads(out.read_text())["passed"] is True


class TestRadiusTable:
    def test_table_rows(self, tmp_path):
        out = tmp_path / "t.csv"
        assert main(["radius-table", "-o", str(out), "--samples", "64"]) == 0
        lines = out.read_text().strip().split("\n")
        assert lines[0] == "s,r_closed,r_numeric,chen_owa,ratio"
        assert len(lines) == 65
        rows = {ln.split(",")[0]: ln.split(",") for ln in lines[1:]}
        s1 = rows["1"]
        assert float(s1[1]) == 1.0
        assert float(s1[3]) == 0.25
        assert float(s1[4]) == 4.0
        s_half = rows["0.5"]
        assert float(s_half[1]) == pytest.approx(0.41421356237309515)
        s2 = rows["2"]
        assert float(s2[1]) == 1.0

    def test_byte_identical(self, tmp_path):
        a, b = tmp_path / "a.csv", tmp_path / "b.csv"
        main(["radius-table", "-o", str(a), "--samples", "16"])
        main(["radius-table", "-o", str(b), "--samples", "16"])
        assert a.read_bytes() == b.read_bytes()


class TestRender:
    def test_two_curve_overlay(self, tmp_path):
        path = tmp_path / "overlay.json"
        path.write_text(dumps({"functions": [EXAMPLE_SPEC, CORE_SPEC], "labels": ["f", "core"]}))
        out = tmp_path / "fig.svg"
        assert main(["render", "-i", str(path), "-o", str(out), "--rho", "0.99"]) == 0
        svg = out.read_text()
        assert svg.count("<path") == 2
        assert svg.startswith("<?xml")

    def test_covering_disk_circle(self, tmp_path):
        path = tmp_path / "one.json"
        path.write_text(dumps({"functions": [CORE_SPEC], "covering_disk": True}))
        out = tmp_path / "fig.svg"
        assert main(["render", "-i", str(path), "-o", str(out)]) == 0
        assert "<circle" in out.read_text()

    def test_wedge_overlay(self, tmp_path):
        path = tmp_path / "w.json"
        path.write_text(dumps({"functions": [EXAMPLE_SPEC], "wedge": True}))
        out = tmp_path / "fig.svg"
        assert main(["render", "-i", str(path), "-o", str(out)]) == 0
        assert out.read_text().count("<path") == 3  # one curve + two spirals

    def test_empty_function_list(self, tmp_path):
        path = tmp_path / "empty.json"
        path.write_text(dumps({"functions": []}))
        assert main(["render", "-i", str(path), "-o", str(tmp_path / "x.svg")]) == 2

    def test_deterministic_output(self, tmp_path):
        path = tmp_path / "one.json"
        path.write_text(dumps({"functions": [EXAMPLE_SPEC]}))
        a, b = tmp_path / "a.svg", tmp_path / "b.svg"
        main(["render", "-i", str(path), "-o", str(a)])
        main(["render", "-i", str(path), "-o", str(b)])
        assert a.read_bytes() == b.read_bytes()

    def test_unwritable_output(self, tmp_path):
        path = tmp_path / "one.json"
        path.write_text(dumps({"functions": [EXAMPLE_SPEC]}))
        assert main(["render", "-i", str(path), "-o", str(tmp_path / "no" / "dir.svg")]) == 2

    def test_curve_csv_output(self, tmp_path):
        path = tmp_path / "one.json"
        path.write_text(dumps(EXAMPLE_SPEC))
        out = tmp_path / "curve.csv"
        assert main(["render", "-i", str(path), "-o", str(out)]) == 0
        lines = out.read_text().strip().split("\n")
        assert lines[0] == "re,im"
        assert len(lines) >= 257

    def test_curve_csv_rejects_multiple(self, tmp_path):
        path = tmp_path / "two.json"
        path.write_text(dumps({"functions": [EXAMPLE_SPEC, CORE_SPEC]}))
        assert main(["render", "-i", str(path), "-o", str(tmp_path / "x.csv")]) == 2
