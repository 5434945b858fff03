"""Simple graphs over GF(2): adjacency coranks, pivots, four-term images."""

import pytest

from wsys.errors import DomainError, ParseError
from wsys.graphs import (
    Graph,
    adjacency_matrix,
    all_graphs,
    complete_graph,
    cycle_graph,
    delete_vertex,
    diamond_graph,
    four_term_images,
    gf2_corank,
    gf2_rank,
    graph_format,
    graph_parse,
    graph_pivot,
    induced_corank,
    induced_subgraph,
    is_nondegenerate,
    path_graph,
)


def test_construction_and_edges():
    g = Graph.from_edges(4, [(1, 2), (2, 3)])
    assert g.n == 4
    assert g.has_edge(1, 2) and g.has_edge(2, 1)
    assert not g.has_edge(1, 3)
    assert g.edges() == [(1, 2), (2, 3)]
    assert g.neighbors(2) == {1, 3}
    assert Graph.empty(3).edges() == []
    with pytest.raises(DomainError):
        Graph.from_edges(2, [(1, 1)])
    with pytest.raises(DomainError):
        Graph.from_edges(2, [(1, 3)])


def test_toggle_edge():
    g = Graph.empty(2)
    h = g.toggle_edge(1, 2)
    assert h.has_edge(1, 2)
    assert h.toggle_edge(1, 2) == g


def test_parse_and_format_round_trip():
    g = graph_parse("n=3; edges=1-2,1-3,2-3")
    assert g == complete_graph(3)
    assert graph_parse("n=3; edges=") == Graph.empty(3)
    assert graph_parse(graph_format(g)) == g
    for n in range(0, 4):
        for g in all_graphs(n):
            assert graph_parse(graph_format(g)) == g
    for bad in ["", "n=x; edges=", "n=2; edges=1-1", "n=2; edges=1-3", "edges=1-2"]:
        with pytest.raises(ParseError):
            graph_parse(bad)


def test_gf2_rank_bitsets():
    # rows are int bitsets, bit i = column i
    assert gf2_rank([]) == 0
    assert gf2_rank([0b1, 0b10, 0b11]) == 2
    assert gf2_rank([0b101, 0b011, 0b110]) == 2
    assert gf2_corank([0b101, 0b011, 0b110], 3) == 1


def test_adjacency_corank_known_graphs():
    # K_2 is nondegenerate; K_3 has corank 1; P_3 is nondegenerate
    assert induced_corank(complete_graph(2), [1, 2]) == 0
    assert induced_corank(complete_graph(3), [1, 2, 3]) == 1
    # odd-order graphs are always degenerate: GF(2) skew rank is even
    assert induced_corank(path_graph(3), [1, 2, 3]) == 1
    # a single vertex is degenerate (zero 1x1 matrix)
    assert induced_corank(complete_graph(3), [2]) == 1
    assert induced_corank(complete_graph(3), []) == 0
    assert adjacency_matrix(complete_graph(2)) == [0b10, 0b01]


def test_nondegeneracy():
    assert is_nondegenerate(Graph.empty(0))
    assert not is_nondegenerate(Graph.empty(1))
    assert is_nondegenerate(complete_graph(2))
    assert not is_nondegenerate(complete_graph(3))
    # nondegenerate induced subgraphs always have even order
    for g in all_graphs(4):
        if is_nondegenerate(g):
            assert g.n % 2 == 0


def test_induced_subgraph_and_delete():
    g = complete_graph(3)
    h = induced_subgraph(g, [1, 3])
    assert h == complete_graph(2)
    assert delete_vertex(g, 2) == complete_graph(2)
    with pytest.raises(DomainError):
        induced_subgraph(g, [1, 4])


def test_graph_pivot_requires_edge():
    with pytest.raises(DomainError):
        graph_pivot(Graph.empty(2), 1, 2)
    with pytest.raises(DomainError):
        graph_pivot(complete_graph(2), 1, 1)


def test_graph_pivot_small_cases():
    # pivoting the middle edge of P_4 toggles the cross pairs
    p4 = path_graph(4)  # edges 1-2, 2-3, 3-4
    piv = graph_pivot(p4, 2, 3)
    # classes for edge 2-3: N(2) only = {1}, N(3) only = {4}; toggle 1-4
    assert piv == p4.toggle_edge(1, 4)
    # pivot is an involution
    assert graph_pivot(piv, 2, 3) == p4
    # pivot is symmetric in its arguments
    for g in all_graphs(4):
        for a, b in g.edges():
            assert graph_pivot(g, a, b) == graph_pivot(g, b, a)


def test_four_term_images_shapes():
    g = complete_graph(3)
    gp, gt, gtp = four_term_images(g, 1, 2)
    # g' toggles the edge ab
    assert gp == g.toggle_edge(1, 2)
    # g~ toggles {a,c} for every c adjacent to b (other than a)
    assert gt == g.toggle_edge(1, 3)
    # g~' additionally toggles ab
    assert gtp == g.toggle_edge(1, 3).toggle_edge(1, 2)
    with pytest.raises(DomainError):
        four_term_images(g, 2, 2)


def test_named_graphs():
    assert complete_graph(4).edges() == [(1, 2), (1, 3), (1, 4), (2, 3), (2, 4), (3, 4)]
    assert path_graph(1) == Graph.empty(1)
    assert cycle_graph(3) == complete_graph(3)
    d = diamond_graph()
    assert d.n == 4 and len(d.edges()) == 5
    assert sum(1 for _ in all_graphs(3)) == 8
    assert sum(1 for _ in all_graphs(4)) == 64
