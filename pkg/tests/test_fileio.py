import pytest

from tonelab.coloring import ToneColoring
from tonelab.fileio import (
    FormatError,
    read_coloring,
    read_degree_file,
    read_edge_list,
    write_coloring,
    write_edge_list,
)
from tonelab.graph import Graph, path_graph


def test_edge_list_round_trip(tmp_path):
    g = Graph(5, [(0, 1), (1, 2), (3, 4), (0, 4)])
    path = tmp_path / "g.edges"
    write_edge_list(g, path)
    assert read_edge_list(path) == g


def test_edge_list_comments_and_whitespace(tmp_path):
    path = tmp_path / "g.edges"
    path.write_text("# header comment\n3 2\n0 1\n# middle\n  1   2  \n")
    g = read_edge_list(path)
    assert g.n == 3 and g.m == 2


@pytest.mark.parametrize(
    "content",
    [
        "",  # empty
        "3\n",  # bad header
        "3 1\n0 0\n",  # loop
        "3 2\n0 1\n1 0\n",  # duplicate
        "3 1\n0 5\n",  # out of range
        "3 2\n0 1\n",  # edge count mismatch
        "3 1\nx y\n",  # non-integer
    ],
)
def test_edge_list_rejects(tmp_path, content):
    path = tmp_path / "bad.edges"
    path.write_text(content)
    with pytest.raises(FormatError):
        read_edge_list(path)


def test_coloring_round_trip(tmp_path):
    col = ToneColoring(2, 5, [(1, 3), (2, 5), (1, 2)])
    path = tmp_path / "c.col"
    write_coloring(col, path)
    back = read_coloring(path)
    assert back == col


def test_coloring_partial_round_trip(tmp_path):
    col = ToneColoring(2, 4, [(1, 2), None, (3, 4)])
    path = tmp_path / "c.col"
    write_coloring(col, path)
    assert read_coloring(path).labels == [(1, 2), None, (3, 4)]


@pytest.mark.parametrize(
    "content",
    [
        "",  # empty
        "2 4\n",  # bad header
        "2 4 2\n0: 1 2\n0: 1 3\n",  # duplicate vertex
        "2 4 1\n0: 2 1\n",  # not increasing
        "2 4 1\n0: 1 1\n",  # repeated color
        "2 4 1\n0: 1 5\n",  # outside palette
        "2 4 1\n0: 1\n",  # wrong arity
        "2 4 1\n5: 1 2\n",  # vertex out of range
        "0 4 1\n",  # t < 1
    ],
)
def test_coloring_rejects(tmp_path, content):
    path = tmp_path / "bad.col"
    path.write_text(content)
    with pytest.raises(FormatError):
        read_coloring(path)


def test_degree_file(tmp_path):
    path = tmp_path / "d.txt"
    path.write_text("# degrees\n3\n2\n\n2\n1\n")
    assert read_degree_file(path) == [3, 2, 2, 1]
    path.write_text("-1\n")
    with pytest.raises(FormatError):
        read_degree_file(path)


def test_writer_bytes_stable(tmp_path):
    g = path_graph(6)
    a, b = tmp_path / "a.edges", tmp_path / "b.edges"
    write_edge_list(g, a)
    write_edge_list(g, b)
    assert a.read_bytes() == b.read_bytes()
