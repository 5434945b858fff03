"""
Interlace rational functions of permutations
============================================

Substituting N = z^2 - 1 and eps = 1/(1 - z) into the two-parameter
family turns each permutation into a rational function in z with
denominator a power of (1 - z).  On chord diagrams the denominator
cancels entirely and the result is the interlace polynomial of the
intersection graph evaluated at x = z^2 - 1.
"""

from wsys import (
    interlace_graph,
    interlace_perm,
    intersection_graph,
    perm_format,
    perm_parse,
    perm_pivot,
    Poly,
)

# A 3-cycle and its inverse: genuinely rational values.
for text in ("(1 2 3)", "(1 3 2)"):
    rf = interlace_perm(perm_parse(text))
    print(f"L({text}) =", rf)

# The series coefficients at z = 0 are where the combinatorics shows
# (coefficients of z^0, z^1, z^2, ...):
rf = interlace_perm(perm_parse("(1 2 3)"))
print("series of L((1 2 3)):", [int(c) for c in rf.series(7)])   # 2z^2 + 5z^3 + ...
rf = interlace_perm(perm_parse("(1 3 2)"))
print("series of L((1 3 2)):", [int(c) for c in rf.series(7)])   # 4z^2 + 5z^3 + ...

# A fixed point contributes the factor 1 + N*eps = -z, so permutations
# with fixed points can have negative coefficients:
print("L(identity on 1 point) =", interlace_perm(perm_parse("1")))

# On chord diagrams the function is a polynomial, and it matches the
# graph interlace polynomial of the intersection graph at x = z^2 - 1.
z = Poly.var("z")
for text in ("(1 2)", "(1 3)(2 4)", "(1 4)(2 5)(3 6)"):
    b = perm_parse(text)
    rf = interlace_perm(b)
    assert rf.is_polynomial()
    graph_value = interlace_graph(intersection_graph(b)).subs({"x": z**2 - Poly.one()})
    assert rf.num == graph_value
    print(f"L({text}) =", rf, "  (polynomial; matches the graph value)")

# Pivoting two interlaced 2-cycles relabels the permutation but not its
# interlace function.
p = perm_parse("3,5,6,7,2,8,4,9,1")
q = perm_pivot(p, (2, 5), (4, 7))
print("pivot of 3,5,6,7,2,8,4,9,1 at (2,5),(4,7):", perm_format(q))
lp, lq = interlace_perm(p), interlace_perm(q)
assert lp == lq
print("shared interlace function:", lp)
print("shared series:", [int(c) for c in lp.series(8)])
