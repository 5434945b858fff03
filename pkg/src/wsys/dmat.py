"""Set systems and delta-matroids.

A set system is a ground set {1..E} together with a nonempty family of
admissible subsets, stored as bitmasks (bit e-1 represents element e).
The systems arising from graphs (admissible = induces a mod-2
nondegenerate subgraph) satisfy the Symmetric Exchange Axiom and are the
delta-matroids this package works with; :func:`check_symmetric_exchange`
verifies the axiom by brute force for anything else.

Text format: ``"E=3; phi={},{1,2},{1,3},{2,3}"`` (subsets sorted by size,
then lexicographically; members ascending).
"""

from __future__ import annotations

import re
from dataclasses import dataclass
from typing import Iterable, Union

from . import graphs, perm
from .errors import DomainError, ParseError

MAX_GROUND = 20

Subsetlike = Union[int, Iterable[int]]


def set_to_mask(points: Iterable[int], ground: int) -> int:
    mask = 0
    for p in points:
        if not 1 <= p <= ground:
            raise DomainError(f"element {p} out of range 1..{ground}")
        mask |= 1 << (p - 1)
    return mask


def mask_to_set(mask: int) -> tuple[int, ...]:
    out = []
    e = 1
    while mask:
        if mask & 1:
            out.append(e)
        mask >>= 1
        e += 1
    return tuple(out)


@dataclass(frozen=True)
class DMat:
    """Proper set system: ground set {1..ground}, admissible sets as masks."""

    ground: int
    phi: frozenset[int]

    def __post_init__(self):
        if not 0 <= self.ground <= MAX_GROUND:
            raise DomainError(f"ground size {self.ground} outside 0..{MAX_GROUND}")
        if not self.phi:
            raise DomainError("a proper set system needs at least one admissible set")
        for mask in self.phi:
            if mask < 0 or mask >> self.ground:
                raise DomainError(f"admissible set {mask:#x} outside the ground set")

    def coerce_subset(self, subset: Subsetlike) -> int:
        if isinstance(subset, int):
            if subset < 0 or subset >> self.ground:
                raise DomainError(f"subset mask {subset:#x} outside the ground set")
            return subset
        return set_to_mask(subset, self.ground)

    def is_admissible(self, subset: Subsetlike) -> bool:
        return self.coerce_subset(subset) in self.phi

    def admissible_sorted(self) -> list[int]:
        return sorted(self.phi, key=lambda m: (m.bit_count(), mask_to_set(m)))


# -- construction ------------------------------------------------------------


def dmat_from_graph(g: graphs.Graph) -> DMat:
    """Admissible = vertex subsets inducing a mod-2 nondegenerate subgraph."""
    phi = {
        mask
        for mask in range(1 << g.n)
        if graphs.is_nondegenerate(
            graphs.induced_subgraph(g, (v + 1 for v in range(g.n) if mask >> v & 1))
        )
    }
    return DMat(g.n, frozenset(phi))


def dmat_from_chord_diagram(b: perm.Perm) -> DMat:
    """Delta-matroid of a chord diagram; ground set = chords.

    Computed from the intersection graph, and independently cross-checked
    against the face characterization (a chord subset is admissible iff
    the corresponding subdiagram has exactly one face); a mismatch would
    signal a convention bug.
    """
    d = dmat_from_graph(perm.intersection_graph(b))
    ch = perm.chords(b)
    by_faces = frozenset(
        mask
        for mask in range(1 << len(ch))
        if perm.face_count(
            perm.subperm(
                b, [pt for i in range(len(ch)) if mask >> i & 1 for pt in ch[i]]
            )
        )
        == 1
    )
    assert d.phi == by_faces, f"graph and face admissibility disagree for {b.img}"
    return d


# -- the axiom ----------------------------------------------------------------


def check_symmetric_exchange(d: DMat) -> bool:
    """Brute-force Symmetric Exchange Axiom: for admissible phi, psi and
    x in their symmetric difference, some y in the difference (y = x
    allowed) keeps phi ^ {x, y} admissible."""
    phi_list = list(d.phi)
    for f in phi_list:
        for g in phi_list:
            diff = f ^ g
            if not diff:
                continue
            for x in mask_to_set(diff):
                xbit = 1 << (x - 1)
                if f ^ xbit in d.phi:  # y = x
                    continue
                if not any(
                    f ^ xbit ^ (1 << (y - 1)) in d.phi
                    for y in mask_to_set(diff)
                    if y != x
                ):
                    return False
    return True


# -- metrics and duality --------------------------------------------------------


def distance(d: DMat, subset: Subsetlike) -> int:
    """Minimal size of the symmetric difference to an admissible set."""
    mask = d.coerce_subset(subset)
    return min((mask ^ f).bit_count() for f in d.phi)


def partial_dual(d: DMat, subset: Subsetlike) -> DMat:
    """XOR every admissible set with the given subset."""
    mask = d.coerce_subset(subset)
    return DMat(d.ground, frozenset(f ^ mask for f in d.phi))


# -- elements -------------------------------------------------------------------


def _element_bit(d: DMat, e: int) -> int:
    if not 1 <= e <= d.ground:
        raise DomainError(f"element {e} out of range 1..{d.ground}")
    return 1 << (e - 1)


def is_loop(d: DMat, e: int) -> bool:
    """True iff e lies in no admissible set."""
    bit = _element_bit(d, e)
    return all(not f & bit for f in d.phi)


def is_coloop(d: DMat, e: int) -> bool:
    """True iff e lies in every admissible set."""
    bit = _element_bit(d, e)
    return all(f & bit for f in d.phi)


def dmat_delete(d: DMat, e: int) -> DMat:
    """Remove e, keeping the admissible sets avoiding it (renumbered)."""
    bit = _element_bit(d, e)
    if is_coloop(d, e):
        raise DomainError(f"cannot delete the coloop {e}")
    low = bit - 1
    kept = frozenset(
        (f & low) | ((f >> 1) & ~low) for f in d.phi if not f & bit
    )
    return DMat(d.ground - 1, kept)


# -- text form --------------------------------------------------------------------

_DMAT_RE = re.compile(r"^\s*E\s*=\s*(\d+)\s*;\s*phi\s*=\s*(.*?)\s*$")


def dmat_parse(text: str) -> DMat:
    match = _DMAT_RE.match(text)
    if not match:
        raise ParseError(f"malformed set-system text: {text!r}")
    ground = int(match.group(1))
    body = match.group(2)
    if not body:
        raise ParseError("a proper set system needs at least one admissible set")
    masks: set[int] = set()
    for piece in re.findall(r"\{([^{}]*)\}", body):
        members = [s for s in re.split(r"[\s,]+", piece.strip()) if s]
        if not all(s.isdigit() for s in members):
            raise ParseError(f"malformed admissible set {{{piece}}}")
        pts = [int(s) for s in members]
        for p in pts:
            if not 1 <= p <= ground:
                raise ParseError(f"element {p} out of range 1..{ground}")
        if len(set(pts)) != len(pts):
            raise ParseError(f"repeated element in {{{piece}}}")
        mask = set_to_mask(pts, ground)
        if mask in masks:
            raise ParseError(f"duplicate admissible set {{{piece}}}")
        masks.add(mask)
    leftover = re.sub(r"\{[^{}]*\}", "", body).replace(",", "").strip()
    if leftover:
        raise ParseError(f"stray text {leftover!r} in set-system text")
    return DMat(ground, frozenset(masks))


def dmat_format(d: DMat) -> str:
    blocks = ",".join(
        "{" + ",".join(str(p) for p in mask_to_set(mask)) + "}"
        for mask in d.admissible_sorted()
    )
    return f"E={d.ground}; phi={blocks}"
