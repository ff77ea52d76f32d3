import json
import xml.etree.ElementTree as ET

import pytest

from conftest import HOPF, TREFOIL
from fourpage.cli import batch_rows, batch_summary, main
from fourpage.fixtures import fixture_path

SVG_NS = "{http://www.w3.org/2000/svg}"
TWO_TREFOILS = TREFOIL + "; X 11 14 12 15; X 13 16 14 11; X 15 12 16 13"


@pytest.fixture
def pd_file(tmp_path):
    def write(text, name="k.pd"):
        p = tmp_path / name
        p.write_text(text)
        return str(p)

    return write


def stderr_error(capsys):
    err = capsys.readouterr().err.strip().splitlines()[-1]
    return json.loads(err)


def binding_points(svg_text):
    root = ET.fromstring(svg_text)
    return [c for c in root.iter(SVG_NS + "circle") if c.get("class") == "binding-point"]


class TestAnalyze:
    def test_trefoil(self, pd_file, capsys):
        assert main(["analyze", pd_file(TREFOIL)]) == 0
        out = capsys.readouterr().out
        assert "arcs           6" in out
        assert "verified       True" in out

    def test_json_stdout(self, pd_file, capsys):
        assert main(["analyze", pd_file(TREFOIL), "--json", "-"]) == 0
        info = json.loads(capsys.readouterr().out)
        assert info["arcs"] == 6 and info["two_c"] == 6 and info["verified"]

    def test_json_deterministic(self, pd_file, tmp_path):
        path = pd_file(TREFOIL)
        a, b = tmp_path / "a.json", tmp_path / "b.json"
        assert main(["analyze", path, "--json", str(a)]) == 0
        assert main(["analyze", path, "--json", str(b)]) == 0
        assert a.read_bytes() == b.read_bytes()

    def test_fixture_by_name(self, capsys):
        assert main(["analyze", "8_19", "--json", "-"]) == 0
        info = json.loads(capsys.readouterr().out)
        assert info["arcs"] == 13 and info["strict"] and info["arc_index"] == 7

    def test_fixture_file(self, capsys):
        assert main(["analyze", str(fixture_path("4_1")), "--json", "-"]) == 0
        assert json.loads(capsys.readouterr().out)["arcs"] == 8

    def test_split(self, pd_file, capsys):
        path = pd_file(TWO_TREFOILS)
        assert main(["analyze", path]) == 3
        assert stderr_error(capsys)["error"] == "SplitDiagram"
        assert main(["analyze", path, "--componentwise", "--json", "-"]) == 0
        assert json.loads(capsys.readouterr().out)["arcs"] == 12

    def test_not_reduced(self, pd_file, capsys):
        assert main(["analyze", pd_file("X 9 4 2 5; X 3 6 4 1; X 5 2 6 3; X 1 8 8 9")]) == 4
        err = stderr_error(capsys)
        assert err["error"] == "NotReduced" and err["crossings"] == [3]

    @pytest.mark.parametrize(
        "text,category",
        [("X 1 2 3", "ParseError"), ("X 1 4 2 5; X 3 6 4 1; X 5 2 6 9", "ParseError"),
         ("", "EmptyDiagram"), ("{not json", "ParseError")],
    )
    def test_parse_errors(self, pd_file, capsys, text, category):
        assert main(["analyze", pd_file(text)]) == 2
        assert stderr_error(capsys)["error"] == category

    def test_missing_input(self, capsys):
        assert main(["analyze", "/nonexistent/file.pd"]) == 2
        assert stderr_error(capsys)["error"] == "InputError"

    def test_bad_tree_option(self, pd_file):
        with pytest.raises(SystemExit):
            main(["analyze", pd_file(TREFOIL), "--tree", "spiral"])

    def test_random_seed_env(self, pd_file, capsys, monkeypatch, tmp_path):
        path = pd_file(TREFOIL)
        monkeypatch.setenv("FOURPAGE_TREE_SEED", "5")
        a, b = tmp_path / "a.json", tmp_path / "b.json"
        assert main(["analyze", path, "--tree", "random", "--json", str(a)]) == 0
        assert main(["analyze", path, "--tree", "random:5", "--json", str(b)]) == 0
        assert a.read_bytes() == b.read_bytes()


class TestRender:
    @pytest.mark.parametrize("text,n", [(TREFOIL, 6), (HOPF, 4)])
    def test_binding_points(self, pd_file, tmp_path, text, n, capsys):
        base = tmp_path / "fig"
        assert main(["render", pd_file(text), "--out", str(base)]) == 0
        circle = (tmp_path / "fig.svg").read_text()
        assert len(binding_points(circle)) == n
        ribbon = ET.fromstring((tmp_path / "fig-ribbon.svg").read_text())
        assert ribbon.tag == SVG_NS + "svg"

    def test_analyze_svg(self, pd_file, tmp_path, capsys):
        base = tmp_path / "out"
        assert main(["analyze", pd_file(TREFOIL), "--svg", str(base)]) == 0
        assert (tmp_path / "out.svg").exists() and (tmp_path / "out-ribbon.svg").exists()


class TestVerifyCmd:
    def test_trefoil(self, pd_file, capsys):
        assert main(["verify", pd_file(TREFOIL)]) == 0
        out = capsys.readouterr().out
        assert "FAIL" not in out and out.count("PASS") == 6


class TestBatch:
    def test_empty_dir(self, tmp_path, capsys):
        assert main(["batch", str(tmp_path)]) == 0
        assert "rows=0" in capsys.readouterr().out

    def test_bundled(self, tmp_path, capsys):
        out = tmp_path / "b.json"
        assert main(["batch", "--json", str(out)]) == 0
        info = json.loads(out.read_text())
        s = info["summary"]
        assert s["errors"] == 0 and s["bound_holds"] and s["strict_holds"]
        assert s["arc_index_holds"] and s["all_verified"]
        names = [r["name"] for r in info["rows"]]
        assert names == sorted(names)

    def test_rows_carry_errors(self, pd_file, tmp_path):
        pd_file(TREFOIL, "a.pd")
        pd_file("X 1 2 3", "b.pd")
        rows = batch_rows(sorted(str(p) for p in tmp_path.iterdir()))
        assert rows[0]["arcs"] == 6 and rows[1]["error"] == "ParseError"
        assert batch_summary(rows)["errors"] == 1

    def test_not_a_dir(self, capsys):
        assert main(["batch", "/nonexistent"]) == 2


class TestOracleCmd:
    def test_trefoil(self, pd_file, capsys):
        assert main(["oracle", pd_file(TREFOIL)]) == 0
        assert "3/3 spanning trees pass" in capsys.readouterr().out

    def test_hopf_states(self, pd_file, capsys, tmp_path):
        out = tmp_path / "o.json"
        assert main(["oracle", pd_file(HOPF), "--mode", "states", "--json", str(out)]) == 0
        info = json.loads(out.read_text())
        assert info["states_traced"] == 4 and info["single_circle_states"] == 2

    def test_cap_exit(self, capsys):
        assert main(["oracle", "K12a1", "--cap", "5"]) == 6
        assert stderr_error(capsys)["error"] == "CapExceeded"
