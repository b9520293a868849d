from pathlib import Path

import orjson
import pytest
from click.testing import CliRunner

from src.cli import cli

GOLDEN = Path(__file__).parent / "golden"

E2_EDGES = "0 1\n0 2\n0 3\n1 2\n1 3\n2 3\n0 4\n4 5\n5 6\n0 6\n"


@pytest.fixture
def runner(config):
    return CliRunner()


def _invoke(runner, *args, **kwargs):
    return runner.invoke(cli, ["--threads", "1", *args], **kwargs)


def _json(result):
    return orjson.loads(result.stdout)


class TestAnalyze:
    def test_c7_golden(self, runner):
        result = _invoke(runner, "analyze", str(GOLDEN / "c7.txt"), "--json")
        assert result.exit_code == 0
        report = _json(result)
        assert report["schema_version"] == "1.0"
        assert report["payload"] == orjson.loads((GOLDEN / "analyze_c7.json").read_bytes())
        echo = report["input"]["graphs"][0]
        assert echo["format"] == "auto"
        assert echo["canonical_form"]

    def test_c4_from_stdin(self, runner):
        result = _invoke(runner, "analyze", "-", "--json", input="0 1\n1 2\n2 3\n3 0\n")
        payload = _json(result)["payload"]
        assert payload["dim"] == 1
        assert payload["m_components"] == 2

    def test_star(self, runner, write_graph):
        result = _invoke(runner, "analyze", write_graph("c a\nc b\nc d\nc e\nc f\n"), "--json")
        assert _json(result)["payload"]["dim"] == 0

    def test_several_graph6_lines(self, runner, write_graph):
        result = _invoke(runner, "analyze", write_graph("C~\nCr\n"), "--json")
        assert result.exit_code == 0
        assert [p["n"] for p in _json(result)["payload"]] == [4, 4]

    def test_parse_error(self, runner, write_graph):
        result = _invoke(runner, "analyze", write_graph("0 1\n1 2 3\n"))
        assert result.exit_code == 2

    def test_missing_file(self, runner, tmp_path):
        assert _invoke(runner, "analyze", str(tmp_path / "absent.txt")).exit_code == 2

    def test_non_utf8_file_is_an_input_error(self, runner, tmp_path):
        path = tmp_path / "latin1.txt"
        path.write_bytes(b"0 1\n1 \xff\n")
        result = _invoke(runner, "analyze", str(path))
        assert result.exit_code == 2
        assert not isinstance(result.exception, UnicodeDecodeError)

    def test_text_output(self, runner):
        result = _invoke(runner, "analyze", str(GOLDEN / "c7.txt"))
        assert result.exit_code == 0
        assert "f_vector: [7, 14, 7]" in result.stdout


class TestClassify:
    def test_bowtie(self, runner, write_graph):
        result = _invoke(runner, "classify", write_graph("0 1\n1 2\n0 2\n2 3\n3 4\n2 4\n"), "--json")
        payload = _json(result)["payload"]
        assert result.exit_code == 0
        assert payload["dim"] == 1 and payload["cm"] is True
        assert payload["families"] == ["BOWTIE"]

    def test_e2(self, runner, write_graph):
        payload = _json(_invoke(runner, "classify", write_graph(E2_EDGES), "--json"))["payload"]
        assert payload["buchsbaum"] is True
        assert "E2" in payload["families"]

    def test_bad_chord(self, runner, write_graph):
        content = (GOLDEN / "c7.txt").read_text(encoding="utf-8") + "0 2\n"
        payload = _json(_invoke(runner, "classify", write_graph(content), "--json"))["payload"]
        assert payload["buchsbaum"] is False
        assert payload["certificate"]["kind"] == "failing_edge"
        assert payload["certificate"]["failing_edge_label"]


class TestVerify:
    def test_exhaustive(self, runner):
        result = _invoke(runner, "verify", "exhaustive", "--max-n", "4", "--json")
        assert result.exit_code == 0
        assert _json(result)["payload"]["discrepancies"] == []

    def test_exhaustive_capability(self, runner):
        assert _invoke(runner, "verify", "exhaustive", "--max-n", "9").exit_code == 3

    def test_random_is_deterministic(self, runner):
        args = ("verify", "random", "--n", "8", "--count", "20", "--seed", "7", "--json")
        first, second = _invoke(runner, *args), _invoke(runner, *args)
        assert first.exit_code == 0
        assert _json(first)["payload"] == _json(second)["payload"]
        assert _json(first)["input"]["seed"] == 7

    def test_random_capability(self, runner):
        assert _invoke(runner, "verify", "random", "--n", "13", "--count", "1").exit_code == 3

    @pytest.mark.slow
    def test_exhaustive_five(self, runner):
        assert _invoke(runner, "verify", "exhaustive", "--max-n", "5").exit_code == 0


class TestKmnAndExport:
    def test_kmn(self, runner):
        result = _invoke(runner, "kmn", "--max-m", "2", "--max-n", "5", "--json")
        assert result.exit_code == 0
        assert all(row["agrees"] for row in _json(result)["payload"])

    def test_kmn_capability(self, runner):
        assert _invoke(runner, "kmn", "--max-m", "4").exit_code == 3

    def test_export_graph6(self, runner, write_graph):
        result = _invoke(runner, "export", "graph6", write_graph("0 1\n0 2\n0 3\n1 2\n1 3\n2 3\n"))
        assert result.stdout == "C~\n"

    def test_export_facets(self, runner, write_graph):
        result = _invoke(runner, "export", "facets", write_graph("0 1\n1 2\n2 3\n3 0\n"))
        assert result.stdout.splitlines() == ["0-1,2-3", "0-3,1-2"]

    def test_export_dot_to_file(self, runner, tmp_path):
        out = tmp_path / "m.dot"
        result = _invoke(runner, "export", "dot", str(GOLDEN / "c7.txt"), "--out", str(out))
        assert result.exit_code == 0
        assert out.read_text(encoding="utf-8").count("--") == 14


@pytest.mark.slow
def test_scan_c7_golden(runner, tmp_path):
    out = tmp_path / "table.csv"
    result = _invoke(runner, "scan-c7", "--out", str(out))
    assert result.exit_code == 0
    expected = (GOLDEN / "table_c7.csv").read_text(encoding="utf-8").splitlines()
    assert out.read_text(encoding="utf-8").splitlines() == expected
