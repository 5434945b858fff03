"""
The two-parameter family F(N, eps)
==================================

Substituting C_k = (1/N) * ((N + eps)^k - (1 - N^2) * eps^k) into the
weight system produces a polynomial in N and eps with a direct
combinatorial description: a sum over subsets of the permutation's
points, graded by face counts of the subpermutations.  At eps = 0 only
the full subset survives and the family collapses to N^(faces - 1).
"""

from wsys import (
    Poly,
    face_count,
    feps,
    feps_direct,
    feps_in_v,
    perm_parse,
    poly_subst,
    spec_standard,
    standard_cycle,
)

# Two routes to the same polynomial: push the substitution through the
# recurrence, or sum N^(...) * eps^(...) over all point subsets directly.
p = perm_parse("(1 4)(2 5)(3 6)")
value = feps(p)
print("recurrence route: ", value)
assert value == feps_direct(p)
print("subset-sum route agrees")

# Setting eps = 0 keeps only the leading face-counting term.
at_zero = poly_subst(value, {"eps": Poly.zero()})
print("at eps = 0:", at_zero, "   faces:", face_count(p))
assert at_zero == spec_standard(p) == Poly.var("N", face_count(p) - 1)

# The same collapse holds for every standard cycle: m faces, value N^(m-1).
for m in range(1, 6):
    cyc = standard_cycle(m)
    assert spec_standard(cyc) == Poly.var("N", m - 1)
    print(f"standard {m}-cycle: faces = {face_count(cyc)},",
          f"eps = 0 value = {spec_standard(cyc)}")

# A 3-cycle and its inverse share a cycle type but not a face count, and
# the family separates them.
print("F((1 2 3)) =", feps(perm_parse("(1 2 3)")))
print("F((1 3 2)) =", feps(perm_parse("(1 3 2)")))

# On chord diagrams (all cycles of length 2) the family is, after the
# change of variable v = 2*eps + N*eps^2, a polynomial in v and N whose
# coefficients count induced subgraphs of the intersection graph by
# GF(2) corank.
crossing = perm_parse("(1 3)(2 4)")
print("F((1 3)(2 4)) in (N, eps):", feps(crossing))
print("F((1 3)(2 4)) in (v, N):  ", feps_in_v(crossing))
eps = Poly.var("eps")
v_expanded = poly_subst(feps_in_v(crossing), {"v": 2 * eps + Poly.var("N") * eps**2})
assert v_expanded == feps(crossing)
print("expanding v back recovers the (N, eps) form")
