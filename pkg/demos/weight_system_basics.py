"""
The universal weight system on permutations
===========================================

A permutation of {1, ..., m} is stored in one-line notation.  The weight
system wgl assigns to each permutation a polynomial in N and the variables
C1, C2, ...; the value on the standard m-cycle is the single variable Cm,
the value on a disjoint (concatenated) union is the product of the values,
and everything else reduces to those by a two-term rewriting rule.
"""

from wsys import (
    concat,
    perm_format,
    perm_parse,
    rule_apply,
    rule_terms,
    standard_cycle,
    state_value,
    wgl,
)

# Parse either cycle notation or a comma-separated one-line image.
p = perm_parse("(1 3 2)")
print("one-line form:", perm_format(p))        # 3,1,2
print("cycles:", p.cycles())                   # [(1, 3, 2)]

# Standard cycles are the atoms: their values are the variables C1, C2, ...
for m in range(1, 5):
    print(f"wgl(standard {m}-cycle) =", wgl(standard_cycle(m)))

# The 3-cycle traversed the other way is NOT an atom; the rewriting rule
# expresses it through smaller states.
print("wgl((1 3 2)) =", wgl(p))                # C3 + C1^2 - N*C2

# The rule itself is exposed.  At position l it trades the permutation for
# one of the same size with two neighbouring values swapped, plus two
# smaller ones obtained by merging, each carrying a power of N:
#     wgl(p) = wgl(swap) + N^n1 * wgl(merge1) - N^n2 * wgl(merge2)
swap, n1, merge1, n2, merge2 = rule_terms(p, 1)
print("swap:  ", perm_format(swap))
print("merge1:", f"N^{n1} *", perm_format(merge1))
print("merge2:", f"N^{n2} *", perm_format(merge2))

# Applying the rule never changes the final value.
state = rule_apply(p, 1)
print("value through the rule:", state_value(state))
assert state_value(state) == wgl(p)

# Multiplicativity: placing two permutations side by side multiplies values.
a, b = standard_cycle(2), perm_parse("(1 3 2)")
side_by_side = concat(a, b)
print("concat one-line form:", perm_format(side_by_side))
print("product value:", wgl(side_by_side))
assert wgl(side_by_side) == wgl(a) * wgl(b)

# A fully interlaced triple of 2-cycles: the smallest value where all three
# kinds of term (pure C, mixed, and N-carrying) appear together.
triple = perm_parse("(1 4)(2 5)(3 6)")
print("wgl((1 4)(2 5)(3 6)) =", wgl(triple))
