"""The universal gl-weight system on permutations and its specializations.

``wgl`` assigns to every permutation a polynomial in N and the Casimir
variables C1, C2, ...; it is 1 on the empty permutation, multiplicative
under concatenation, and takes the standard m-cycle to C_m.  Everything
else is forced by a recurrence that relates the value at a permutation to
the values at the conjugate by an adjacent transposition (same number of
points) and at two contractions (one point fewer).

The recurrence is implemented through an index-class calculus on the
positions l, l+1: each variant merges the two affected factors of the
permutation's edge word into one and identifies one pair of index classes.
When the identification is trivial (the two classes already coincide) an
index is freed, which contributes a factor of N; when the merged factor
closes on itself it becomes an ordinary fixed point of the contracted
permutation.  The degenerate configurations (fixed points at l or l+1,
the descending edge alpha(l+1) = l, the ascending edge alpha(l) = l+1)
are all instances of the same calculus and need no special casing.

Reduction strategy: strip leading standard-cycle blocks (each contributes
a Casimir factor); otherwise locate the first element of the cycle through
1 that is out of place and bubble it one position left per step.  Each
swap strictly decreases the position of that element, each contraction
decreases the number of points, so the reduction terminates.  All
intermediate states of a bubbling chain are memoized on the way out.
"""

from __future__ import annotations

from fractions import Fraction
from functools import lru_cache
from math import comb
from typing import MutableMapping

from .algebra import Poly, RatFunc, casimir, poly_subst_rat
from .errors import DomainError
from .perm import Perm, cycle_count, face_count, intersection_graph, is_chord_diagram, subperm

DEFAULT_CAP = 10

# One linear combination of permutations, as (coefficient, permutation) pairs.
WglState = list[tuple[Poly, Perm]]

# Shared memo table: one-line image tuple -> value.  Reads are concurrent-
# safe under the GIL; pass a private dict to isolate (e.g. cold timing).
_MEMO: dict[tuple[int, ...], Poly] = {(): Poly.one()}

_N = Poly.var("N")


def _scan(img: tuple[int, ...]):
    """Walk the cycle through 1 while it sits in standard ascending position.

    Returns ("strip", k) when the cycle closes as the standard k-cycle on
    points 1..k, or ("dev", t) where t = the image that breaks the ascent
    (t is then > position+1, and must be bubbled left).
    """
    x = 1
    while True:
        y = img[x - 1]
        if y == x + 1:
            x += 1
        elif y == 1:
            return ("strip", x)
        else:
            return ("dev", y)


def _conj_swap(img: tuple[int, ...], l: int) -> tuple[int, ...]:
    """Conjugate by the transposition (l, l+1)."""

    def t(x: int) -> int:
        return l + 1 if x == l else (l if x == l + 1 else x)

    return tuple(t(img[t(i) - 1]) for i in range(1, len(img) + 1))


def _contract(img: tuple[int, ...], l: int, variant: int) -> tuple[int, tuple[int, ...]]:
    """One contraction of the recurrence at positions l, l+1.

    Variant 1 merges the factors into (first = class of l, second = class
    of alpha(l+1)) and identifies the classes of alpha(l) and l+1; variant
    2 merges into (first = class of l+1, second = class of alpha(l)) and
    identifies the classes of alpha(l+1) and l.  Returns (npower, image)
    where npower is 1 exactly when the identification was trivial and an
    index class got freed (a factor of N).
    """
    m = len(img)
    c, d = img[l - 1], img[l]
    if variant == 1:
        fst, snd = l, d
        glue = (c, l + 1)
    else:
        fst, snd = l + 1, c
        glue = (d, l)
    trivial = glue[0] == glue[1]
    if trivial:
        def cls(x: int):
            return x
    else:
        def cls(x: int):
            return 0 if x in glue else x  # 0 = the merged class token

    # Remaining factors in position order; the merged factor takes slot l.
    slots: list[tuple[object, object]] = []
    for q in range(1, m + 1):
        if q == l:
            slots.append((cls(fst), cls(snd)))
        elif q == l + 1:
            continue
        else:
            slots.append((cls(q), cls(img[q - 1])))
    carrier: dict[object, int] = {}
    for idx, (fc, _) in enumerate(slots):
        assert fc not in carrier, "index class carried by two factors"
        carrier[fc] = idx + 1
    npow = 0
    if trivial:
        freed = [x for x in range(1, m + 1) if x not in carrier]
        assert len(freed) == 1, "trivial identification must free one class"
        used = {cl for pair in slots for cl in pair}
        assert freed[0] not in used, "freed class may not occur in any factor"
        npow = 1
    return npow, tuple(carrier[sc] for _, sc in slots)


def _wgl_tuple(img: tuple[int, ...], memo: MutableMapping[tuple[int, ...], Poly]) -> Poly:
    val = memo.get(img)
    if val is not None:
        return val
    chain: list[tuple[tuple[int, ...], Poly]] = []
    cur = img
    while True:
        val = memo.get(cur)
        if val is not None:
            break
        kind, v = _scan(cur)
        if kind == "strip":
            rest = tuple(w - v for w in cur[v:])
            val = Poly.var(casimir(v)) * _wgl_tuple(rest, memo)
            memo[cur] = val
            break
        l = v - 1
        n1, m1 = _contract(cur, l, 1)
        n2, m2 = _contract(cur, l, 2)
        p1 = _wgl_tuple(m1, memo)
        p2 = _wgl_tuple(m2, memo)
        if n1:
            p1 = _N * p1
        if n2:
            p2 = _N * p2
        chain.append((cur, p1 - p2))
        cur = _conj_swap(cur, l)
    for cimg, corr in reversed(chain):
        val = val + corr
        memo[cimg] = val
    return val


def wgl(
    p: Perm,
    cap: int = DEFAULT_CAP,
    memo: MutableMapping[tuple[int, ...], Poly] | None = None,
) -> Poly:
    """Value of the universal gl-weight system, a polynomial in N, C1, C2, ..."""
    if p.m > cap:
        raise DomainError(f"permutation has {p.m} points, exceeding the cap {cap}")
    table = _MEMO if memo is None else memo
    if () not in table:
        table[()] = Poly.one()
    return _wgl_tuple(p.img, table)


def rule_terms(p: Perm, l: int) -> tuple[Perm, int, Perm, int, Perm]:
    """The right-hand side of the recurrence at position l.

    Returns (swap, n1, merge1, n2, merge2) with
    wgl(p) = wgl(swap) + N^n1 * wgl(merge1) - N^n2 * wgl(merge2).
    """
    if not 1 <= l < p.m:
        raise DomainError(f"rule position {l} out of range 1..{p.m - 1}")
    n1, m1 = _contract(p.img, l, 1)
    n2, m2 = _contract(p.img, l, 2)
    return Perm(_conj_swap(p.img, l)), n1, Perm(m1), n2, Perm(m2)


def rule_apply(p: Perm, l: int) -> WglState:
    """The recurrence right-hand side as a formal linear combination."""
    swap, n1, m1, n2, m2 = rule_terms(p, l)
    return [(Poly.one(), swap), (_N ** n1, m1), (-(_N ** n2), m2)]


def state_value(
    state: WglState,
    cap: int = DEFAULT_CAP,
    memo: MutableMapping[tuple[int, ...], Poly] | None = None,
) -> Poly:
    """Evaluate a formal linear combination under wgl."""
    total = Poly.zero()
    for coef, perm in state:
        total = total + coef * wgl(perm, cap=cap, memo=memo)
    return total


# -- specializations ---------------------------------------------------------


def _casimir_indices(p: Poly) -> set[int]:
    return {int(v[1:]) for v in p.variables() if v.startswith("C")}


@lru_cache(maxsize=None)
def feps_casimir_binding(k: int) -> Poly:
    """Image of C_k in the two-parameter family:
    N*eps^k + sum_{i=1..k} binom(k, i) N^(i-1) eps^(k-i)."""
    terms: dict = {(("N", 1), ("eps", k)): Fraction(1)}
    for i in range(1, k + 1):
        mono = []
        if i >= 2:
            mono.append(("N", i - 1))
        if k - i >= 1:
            mono.append(("eps", k - i))
        key = tuple(mono)
        terms[key] = terms.get(key, Fraction(0)) + comb(k, i)
    return Poly(terms)


def feps(p: Perm, cap: int = DEFAULT_CAP) -> Poly:
    """Two-parameter specialization of wgl: C_k bound as in
    :func:`feps_casimir_binding`; a polynomial in N and eps."""
    w = wgl(p, cap=cap)
    return w.subs({casimir(k): feps_casimir_binding(k) for k in _casimir_indices(w)})


def feps_direct(p: Perm) -> Poly:
    """The same family computed as a sum over all point subsets:
    sum_U N^(c(p) - c(p|U) + f(p|U) - 1) * eps^(m - |U|)."""
    m = p.m
    c_full = cycle_count(p)
    points = list(range(1, m + 1))
    terms: dict = {}
    for mask in range(1 << m):
        subset = [points[i] for i in range(m) if mask >> i & 1]
        sub = subperm(p, subset)
        npow = c_full - cycle_count(sub) + face_count(sub) - 1
        epow = m - len(subset)
        mono = []
        if npow:
            mono.append(("N", npow))
        if epow:
            mono.append(("eps", epow))
        key = tuple(mono)
        terms[key] = terms.get(key, Fraction(0)) + 1
    return Poly(terms)


def spec_standard(p: Perm, cap: int = DEFAULT_CAP) -> Poly:
    """Standard-representation specialization C_k -> N^(k-1); always the
    monomial N^(f(p) - 1)."""
    w = wgl(p, cap=cap)
    result = w.subs({casimir(k): Poly.var("N", k - 1) for k in _casimir_indices(w)})
    assert result == Poly.var("N", face_count(p) - 1), (
        f"standard specialization of {p.img} is not N^(f-1): {result}"
    )
    return result


def casimir_to_N(p: Perm, cap: int = DEFAULT_CAP) -> Poly:
    """Specialization C_k -> N for every k; always the monomial N^(c(p))."""
    w = wgl(p, cap=cap)
    result = w.subs({casimir(k): Poly.var("N") for k in _casimir_indices(w)})
    assert result == Poly.var("N", cycle_count(p)), (
        f"C_k -> N specialization of {p.img} is not N^c: {result}"
    )
    return result


def gl11_skewchar(p: Perm, cap: int = DEFAULT_CAP) -> Poly:
    """gl(1|1) specialization: N -> 0, C_k -> k (u/2)^(k-1); on chord
    diagrams this equals the skew characteristic polynomial of the
    intersection graph."""
    w = wgl(p, cap=cap)
    bindings: dict[str, Poly] = {"N": Poly.zero()}
    for k in _casimir_indices(w):
        bindings[casimir(k)] = Poly(
            {(("u", k - 1),) if k > 1 else (): Fraction(k, 2 ** (k - 1))}
        )
    return w.subs(bindings)


def feps_in_v(b: Perm, cap: int = DEFAULT_CAP) -> Poly:
    """The two-parameter family of a chord diagram written in (v, N): the
    refined skew characteristic polynomial of the intersection graph with
    u := v, w := N.  Internally re-expanded through v = 2*eps + N*eps^2
    and checked against :func:`feps`; a mismatch would signal a convention
    bug, not bad input."""
    if not is_chord_diagram(b):
        raise DomainError("feps_in_v needs a chord diagram")
    from .invariants import refined_skew_char_graph

    qbar = refined_skew_char_graph(intersection_graph(b))
    result = qbar.subs({"u": Poly.var("v"), "w": Poly.var("N")})
    v_expansion = Poly.const(2) * Poly.var("eps") + Poly.var("N") * Poly.var("eps", 2)
    assert result.subs({"v": v_expansion}) == feps(b, cap=cap), (
        f"(v, N) form of {b.img} does not expand to the eps form"
    )
    return result


_INTERLACE_BINDINGS = {
    "N": RatFunc.from_poly(Poly.var("z", 2) - Poly.one()),
    "eps": RatFunc.make(Poly.one(), 1),
}


def interlace_perm(p: Perm, cap: int = DEFAULT_CAP) -> RatFunc:
    """Interlace rational function of a permutation: the two-parameter
    family at N = z^2 - 1, eps = 1/(1-z).  A polynomial (dpow = 0) on
    chord diagrams."""
    return poly_subst_rat(feps(p, cap=cap), _INTERLACE_BINDINGS)
