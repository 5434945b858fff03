"""Projection onto primitives as the logarithm of the identity.

For a multiplicative invariant f (f of a disjoint union is the product of
the values, f(empty) = 1), the composition with the projection pi onto
primitive elements is computable without ever materializing pi:

    (f o pi)(B) = sum_{k>=1} (-1)^(k-1)/k *
                  sum_{ordered partitions of the ground set into k
                       nonempty blocks} prod_j f(B restricted to block j)

The inverse expansion (exponential against the same partitions) rebuilds f
from f o pi and is used as the structural sanity check of the pair.
"""

from __future__ import annotations

from fractions import Fraction
from math import factorial
from typing import Callable, Iterator, Sequence, TypeVar

from .algebra import Poly
from .errors import DomainError
from .glws import feps, spec_standard
from .graphs import Graph, induced_subgraph
from .perm import Perm, chords, subperm

T = TypeVar("T")

Blocks = tuple[tuple[int, ...], ...]


def _set_partitions(items: Sequence[int]) -> Iterator[list[list[int]]]:
    """Unordered partitions into nonempty blocks (each block ascending)."""
    if not items:
        yield []
        return
    first, rest = items[0], items[1:]
    for tail in _set_partitions(rest):
        for i in range(len(tail)):
            yield tail[:i] + [[first] + tail[i]] + tail[i + 1 :]
        yield [[first]] + tail


def ordered_partitions(items: Sequence[int], k: int | None = None) -> Iterator[Blocks]:
    """Ordered partitions of items into nonempty blocks; k restricts the
    block count, otherwise all k = 1..len(items) are produced."""
    from itertools import permutations

    for part in _set_partitions(list(items)):
        if k is not None and len(part) != k:
            continue
        if not part:
            continue
        for arrangement in permutations(part):
            yield tuple(tuple(block) for block in arrangement)


def primitive_eval(
    f: Callable[[T], Poly],
    obj: T,
    ground: Sequence[int],
    restrict: Callable[[T, Sequence[int]], T],
) -> Poly:
    """(f o pi)(obj) via the logarithm expansion over ordered partitions."""
    cache: dict[frozenset[int], Poly] = {}

    def value(block: Sequence[int]) -> Poly:
        key = frozenset(block)
        got = cache.get(key)
        if got is None:
            got = f(restrict(obj, block))
            cache[key] = got
        return got

    total = Poly.zero()
    for blocks in ordered_partitions(ground):
        k = len(blocks)
        prod = Poly.const(Fraction((-1) ** (k - 1), k))
        for block in blocks:
            prod = prod * value(block)
        total = total + prod
    return total


def reconstruct_from_primitives(
    f: Callable[[T], Poly],
    obj: T,
    ground: Sequence[int],
    restrict: Callable[[T, Sequence[int]], T],
) -> Poly:
    """The exponential expansion: sum_k 1/k! sum_{ordered k-partitions}
    prod_j (f o pi)(obj restricted to block j), the k = 0 term being the
    empty product 1 on the empty ground set.  Equals f(obj) for
    multiplicative f with f(empty) = 1."""
    if not ground:
        return Poly.one()
    cache: dict[frozenset[int], Poly] = {}

    def projected(block: Sequence[int]) -> Poly:
        key = frozenset(block)
        got = cache.get(key)
        if got is None:
            sub = restrict(obj, block)
            got = primitive_eval(f, sub, range(1, len(block) + 1), restrict)
            cache[key] = got
        return got

    total = Poly.zero()
    for blocks in ordered_partitions(ground):
        prod = Poly.const(Fraction(1, factorial(len(blocks))))
        for block in blocks:
            prod = prod * projected(block)
        total = total + prod
    return total


# -- concrete ground sets -----------------------------------------------------


def restrict_graph(g: Graph, vertices: Sequence[int]) -> Graph:
    return induced_subgraph(g, vertices)


def restrict_diagram(b: Perm, chord_indices: Sequence[int]) -> Perm:
    """Subdiagram on the chords with the given (1-based) indices."""
    ch = chords(b)
    points = [pt for i in chord_indices for pt in ch[i - 1]]
    return subperm(b, points)


def primitive_eval_graph(f: Callable[[Graph], Poly], g: Graph) -> Poly:
    return primitive_eval(f, g, range(1, g.n + 1), restrict_graph)


def primitive_eval_diagram(f: Callable[[Perm], Poly], b: Perm) -> Poly:
    n = len(chords(b))
    return primitive_eval(f, b, range(1, n + 1), restrict_diagram)


def eps_independence_check(b: Perm) -> tuple[bool, Poly]:
    """Project the two-parameter family of a diagram onto primitives.

    Returns (eps_free, value).  The value is also recomputed with the
    one-parameter standard specialization N^(f-1) in place of the family;
    the two projections must agree, which is what makes eps-freeness
    possible in the first place.
    """
    n = len(chords(b))
    if n < 2:
        raise DomainError("eps-independence needs at least two chords")
    value = primitive_eval_diagram(feps, b)
    eps_free = "eps" not in value.variables()
    assert value == primitive_eval_diagram(spec_standard, b), (
        f"projected family and projected standard specialization disagree on {b.img}"
    )
    return eps_free, value
