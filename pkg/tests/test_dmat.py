"""Delta-matroids: admissible sets, exchange axiom, distance, partial duality."""

import pytest

from wsys.dmat import (
    DMat,
    check_symmetric_exchange,
    distance,
    dmat_delete,
    dmat_format,
    dmat_from_chord_diagram,
    dmat_from_graph,
    dmat_parse,
    is_coloop,
    is_loop,
    mask_to_set,
    partial_dual,
    set_to_mask,
)
from wsys.errors import DomainError, ParseError
from wsys.graphs import Graph, all_graphs, complete_graph, path_graph
from wsys.perm import all_chord_diagrams, face_count, perm_parse, subperm


def test_masks():
    assert set_to_mask([1, 3], 3) == 0b101
    assert set_to_mask([], 3) == 0
    assert mask_to_set(0b101) == (1, 3)
    assert mask_to_set(0) == ()
    with pytest.raises(DomainError):
        set_to_mask([4], 3)
    with pytest.raises(DomainError):
        set_to_mask([0], 3)


def test_dmat_validation():
    d = DMat(2, frozenset({0b00, 0b11}))
    assert d.is_admissible([1, 2])
    assert not d.is_admissible([1])
    assert d.admissible_sorted() == [0b00, 0b11]
    with pytest.raises(DomainError):
        DMat(2, frozenset())  # proper set systems are nonempty
    with pytest.raises(DomainError):
        DMat(1, frozenset({0b10}))  # admissible set outside the ground set


def test_dmat_from_graph_feasible_sets():
    # subsets with nondegenerate induced adjacency matrix
    d = dmat_from_graph(complete_graph(3))
    assert d.admissible_sorted() == [0b000, 0b011, 0b101, 0b110]
    d = dmat_from_graph(Graph.empty(2))
    assert d.admissible_sorted() == [0b00]
    assert dmat_format(dmat_from_graph(complete_graph(3))) == "E=3; phi={},{1,2},{1,3},{2,3}"


def test_dmat_from_chord_diagram_matches_intersection_graph():
    for n in range(1, 5):
        for b in all_chord_diagrams(n):
            from wsys.perm import intersection_graph

            assert dmat_from_chord_diagram(b) == dmat_from_graph(intersection_graph(b))


def test_symmetric_exchange_axiom():
    for n in range(0, 5):
        for g in all_graphs(n):
            assert check_symmetric_exchange(dmat_from_graph(g))
    # a non-example: {(), {1,2}} with witness sets missing
    bad = DMat(2, frozenset({0b00, 0b01, 0b11}))
    # still a delta-matroid: exchanges exist for every pair
    assert check_symmetric_exchange(bad)
    not_dm = DMat(3, frozenset({0b000, 0b111}))
    assert not check_symmetric_exchange(not_dm)


def test_distance():
    d = dmat_from_graph(complete_graph(3))
    assert distance(d, []) == 0
    assert distance(d, [1]) == 1
    assert distance(d, [1, 2]) == 0
    assert distance(d, [1, 2, 3]) == 1
    # on chord-diagram delta-matroids, distance equals faces - 1 of the
    # diagram restricted to the chosen chords
    for b in all_chord_diagrams(3):
        dd = dmat_from_chord_diagram(b)
        from wsys.perm import chords

        ch = chords(b)
        for mask in range(1 << len(ch)):
            subset = [k + 1 for k in range(len(ch)) if mask >> k & 1]
            pts = sorted(p for k in subset for p in ch[k - 1])
            assert distance(dd, subset) == face_count(subperm(b, pts)) - 1


def test_partial_dual():
    d = dmat_from_graph(path_graph(3))
    full = list(range(1, 4))
    # duality is an involution and composes by symmetric difference
    assert partial_dual(partial_dual(d, [1]), [1]) == d
    assert partial_dual(partial_dual(d, [1]), [2]) == partial_dual(d, [1, 2])
    # dualizing the full ground set XORs every admissible set
    dd = partial_dual(d, full)
    assert sorted(a ^ 0b111 for a in dd.admissible_sorted()) == d.admissible_sorted()


def test_loop_coloop():
    # P_3 has admissible sets {}, {1,2}, {2,3}: element 3 is in some but
    # not all of them, hence neither loop nor coloop
    d = dmat_from_graph(path_graph(3))
    assert not is_loop(d, 3) and not is_coloop(d, 3)
    # element in no admissible set is a loop
    iso = dmat_from_graph(Graph.empty(1))
    assert is_loop(iso, 1)
    assert not is_coloop(iso, 1)
    # element in every admissible set is a coloop
    co = DMat(1, frozenset({0b1}))
    assert is_coloop(co, 1)
    assert not is_loop(co, 1)


def test_dmat_delete():
    d = dmat_from_graph(complete_graph(3))
    d2 = dmat_delete(d, 3)
    assert d2.ground == 2
    assert d2.admissible_sorted() == [0b00, 0b11]
    co = DMat(1, frozenset({0b1}))
    with pytest.raises(DomainError):
        dmat_delete(co, 1)  # deleting a coloop empties the system


def test_parse_format_round_trip():
    d = dmat_from_graph(complete_graph(3))
    assert dmat_parse(dmat_format(d)) == d
    assert dmat_parse("E=2; phi={}") == DMat(2, frozenset({0}))
    assert dmat_parse("E=0; phi={}") == DMat(0, frozenset({0}))
    for bad in ["", "E=2; phi=", "E=x; phi={}", "E=1; phi={2}", "phi={}"]:
        with pytest.raises(ParseError):
            dmat_parse(bad)
