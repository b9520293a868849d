import io

import pytest

from src.errors import GraphInputError, GraphParseError
from src.graphs.graph import complete_graph
from src.ingestion.graph_loader import GraphLoader


@pytest.fixture
def loader(config):
    return GraphLoader(config)


class TestEdgeList:
    def test_labels_compacted_in_first_appearance_order(self, loader):
        g = loader.parse_edge_list("# triangle\nb a\na c  # commentaire\n\nc b\n")
        assert g.labels == ("b", "a", "c")
        assert g.edges == ((0, 1), (0, 2), (1, 2))

    def test_wrong_token_count(self, loader):
        with pytest.raises(GraphParseError) as excinfo:
            loader.parse_edge_list("0 1\na b c\n")
        assert (excinfo.value.line, excinfo.value.column) == (2, 5)

    def test_single_token(self, loader):
        with pytest.raises(GraphParseError) as excinfo:
            loader.parse_edge_list("0 1\n\n7\n")
        assert excinfo.value.line == 3

    def test_loop(self, loader):
        with pytest.raises(GraphParseError) as excinfo:
            loader.parse_edge_list("x x\n")
        assert excinfo.value.line == 1

    def test_duplicate_edges_skipped(self, loader, caplog):
        g = loader.parse_edge_list("a b\nb a\n")
        assert g.edge_count == 1
        assert "dupliquée" in caplog.text


class TestFormats:
    def test_detect(self, loader):
        assert loader.detect_format("C~\nBw\n") == "graph6"
        assert loader.detect_format("0 1\n1 2\n") == "edgelist"
        assert loader.detect_format("# rien\n") == "edgelist"

    def test_load_graph6_file(self, loader, write_graph):
        graphs = loader.load_graphs(write_graph(">>graph6<<C~\nBw\n"))
        assert graphs[0] == complete_graph(4)
        assert graphs[1] == complete_graph(3)

    def test_graph6_error_keeps_line_numbers(self, loader, write_graph):
        with pytest.raises(GraphParseError) as excinfo:
            loader.load_graphs(write_graph("# entête\nC~\nC!\n"), "graph6")
        assert excinfo.value.line == 3

    def test_stdin(self, loader, monkeypatch):
        monkeypatch.setattr("sys.stdin", io.StringIO("0 1\n1 2\n"))
        g = loader.load_graph("-")
        assert g.n == 3

    def test_missing_file(self, loader, tmp_path):
        with pytest.raises(GraphInputError):
            loader.load_graphs(str(tmp_path / "absent.txt"))

    def test_unknown_format(self, loader, write_graph):
        with pytest.raises(GraphInputError):
            loader.load_graphs(write_graph("0 1\n"), "dimacs")

    def test_invalid_utf8_reports_position(self, loader, tmp_path):
        path = tmp_path / "latin1.txt"
        path.write_bytes(b"0 1\n1 \xff\n")
        with pytest.raises(GraphParseError) as excinfo:
            loader.load_graphs(str(path))
        assert (excinfo.value.line, excinfo.value.column) == (2, 3)

    def test_invalid_utf8_on_stdin(self, loader, monkeypatch):
        monkeypatch.setattr("sys.stdin", io.TextIOWrapper(io.BytesIO(b"\xfe 1\n")))
        with pytest.raises(GraphParseError) as excinfo:
            loader.load_graph("-")
        assert (excinfo.value.line, excinfo.value.column) == (1, 1)
