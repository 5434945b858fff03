"""
Graphs, set systems, and subset-sum polynomials
===============================================

Three polynomial invariants live on simple graphs: the skew
characteristic polynomial (a sum over induced subgraphs whose GF(2)
adjacency matrix is nondegenerate), its refinement tracking coranks,
and the interlace polynomial.  All of them factor through the set
system of nondegenerate subsets, which is a delta-matroid: it satisfies
the symmetric exchange axiom, carries a distance function, and admits
partial duality.
"""

from wsys import (
    check_symmetric_exchange,
    distance,
    dmat_format,
    dmat_from_chord_diagram,
    dmat_from_graph,
    face_count,
    graph_format,
    graph_parse,
    graph_pivot,
    interlace_dmat,
    interlace_graph,
    partial_dual,
    perm_parse,
    refined_skew_char_graph,
    skew_char,
    subperm,
)

# The triangle: three vertices, all edges.
k3 = graph_parse("n=3; edges=1-2,1-3,2-3")
print("skew characteristic of K3:", skew_char(k3))
print("refined (corank in w):    ", refined_skew_char_graph(k3))
print("interlace polynomial:     ", interlace_graph(k3))

# The nondegenerate subsets of K3 form its set system.
d = dmat_from_graph(k3)
print("set system of K3:", dmat_format(d))
assert check_symmetric_exchange(d)
print("symmetric exchange axiom holds")

# The interlace polynomial is the generating function of the distance
# function: sum over ALL subsets of x^(distance to the system).
assert interlace_dmat(d) == interlace_graph(k3)
for mask in range(8):
    members = {i + 1 for i in range(3) if mask >> i & 1}
    print(f"  distance({members or '{}'}) = {distance(d, mask)}")

# For the system of a chord diagram, distance recovers face counts of
# subdiagrams: d(U) = faces(diagram restricted to U) - 1.
b = perm_parse("(1 4)(2 5)(3 6)")
db = dmat_from_chord_diagram(b)
chord_points = [(1, 4), (2, 5), (3, 6)]
for mask in range(8):
    pts = [p for i in range(3) if mask >> i & 1 for p in chord_points[i]]
    assert distance(db, mask) == face_count(subperm(b, pts)) - 1
print("distance = faces - 1 on every chord subset of (1 4)(2 5)(3 6)")

# Partial duality XORs every admissible set with a fixed subset; the
# interlace polynomial does not notice.
dual = partial_dual(d, 0b001)
print("partial dual w.r.t. {1}:", dmat_format(dual))
assert interlace_dmat(dual) == interlace_dmat(d)
print("interlace polynomial unchanged under partial duality")

# On graphs, duality with respect to an edge pair is the pivot.
p4 = graph_parse("n=4; edges=1-2,2-3,3-4")
print("P4 pivoted along 2-3:", graph_format(graph_pivot(p4, 2, 3)))
assert interlace_graph(graph_pivot(p4, 2, 3)) == interlace_graph(p4)
print("interlace polynomial unchanged under pivot")
