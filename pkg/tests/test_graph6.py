import networkx as nx
import pytest
from hypothesis import given

from ceigraph import graph6
from ceigraph.graph import Graph, complete_graph, cycle_graph, empty_graph, path_graph
from ceigraph.graph6 import Graph6Error
from ceigraph.search import enumerate_connected

from test_graph import graphs


def to_nx(g):
    h = nx.Graph()
    h.add_nodes_from(range(g.n))
    h.add_edges_from(g.edges())
    return h


def test_known_encodings():
    assert graph6.encode(complete_graph(3)) == "Bw"
    assert graph6.encode(complete_graph(4)) == "C~"
    assert graph6.decode("@") == complete_graph(1)
    assert graph6.decode("?") == empty_graph(0)


def test_header_and_whitespace():
    assert graph6.decode(">>graph6<<Bw\n") == complete_graph(3)


@pytest.mark.parametrize(
    "text, msg",
    [
        ("", "empty"),
        ("C", "expected 1 edge bytes"),
        ("Bww", "trailing garbage"),
        ("B\x7f", "outside"),
        ("B ", "expected 1 edge bytes"),
        ("Bx", "padding"),
    ],
)
def test_malformed(text, msg):
    with pytest.raises(Graph6Error, match=msg):
        graph6.decode(text)


@given(graphs(min_n=1, max_n=12))
def test_matches_networkx(g):
    ours = graph6.encode(g)
    assert ours == nx.to_graph6_bytes(to_nx(g), header=False).decode().strip()
    assert graph6.decode(ours) == g


@pytest.mark.parametrize("n", [62, 63, 100])
def test_long_size_field_matches_networkx(n):
    g = cycle_graph(n)
    ours = graph6.encode(g)
    assert ours == nx.to_graph6_bytes(to_nx(g), header=False).decode().strip()
    assert graph6.decode(ours) == g


def test_roundtrip_large():
    g = path_graph(300)
    assert graph6.decode(graph6.encode(g)) == g


def test_roundtrip_connected_corpus_up_to_6():
    for n in range(1, 7):
        for g in enumerate_connected(n):
            assert graph6.decode(graph6.encode(g)) == g


def test_read_lines_skips_blanks():
    assert list(graph6.read_lines(["Bw", "", "  ", "@\n"])) == [complete_graph(3), Graph(1, (0,))]
