"""Reducibility of graph hypersurfaces.

Two independent routes: ``classify_graph`` reads the answer off the block
structure (reducible iff at least two blocks contain a cycle), while
``classify_poly`` searches Psi directly for a variable-disjoint
factorization.
"""

from __future__ import annotations

import enum
from dataclasses import dataclass

from .embedding import RotationSystem, dual
from .errors import DefectError, GraphMotiveError
from .graph import Multigraph, blocks, edges_in, is_cyclic_block
from .kirchhoff import block_polynomial, psi
from .multipoly import SubsetPoly, find_disjoint_factorization, is_homogeneous, mul_disjoint


class Kind(str, enum.Enum):
    EMPTY = "EmptyHypersurface"
    IRREDUCIBLE = "Irreducible"
    REDUCIBLE = "Reducible"


@dataclass(frozen=True)
class Witness:
    separating_vertex: int | None
    components: tuple[int, int] | None
    factors: tuple[SubsetPoly, SubsetPoly]

    def to_json(self) -> dict:
        return {
            "separating_vertex": self.separating_vertex,
            "components": None if self.components is None else [list(edges_in(c)) for c in self.components],
            "factors": [str(f) for f in self.factors],
        }


@dataclass(frozen=True)
class Verdict:
    kind: Kind
    witness: Witness | None = None
    note: str = ""

    def to_json(self) -> dict:
        return {
            "kind": self.kind.value,
            "witness": None if self.witness is None else self.witness.to_json(),
            "note": self.note,
        }


_EMPTY = Verdict(Kind.EMPTY, note="Psi is the constant 1")


def _branches(g: Multigraph, block_list, v: int) -> list[int]:
    """Edge masks of the pieces of g hanging off cut vertex ``v``.

    Blocks are glued along shared vertices other than ``v``.
    """
    parent = list(range(len(block_list)))

    def find(x):
        while parent[x] != x:
            x = parent[x]
        return x

    verts = [g.vertices_of(b) - {v} for b in block_list]
    for i in range(len(block_list)):
        for j in range(i + 1, len(block_list)):
            if verts[i] & verts[j]:
                parent[find(i)] = find(j)
    groups: dict[int, int] = {}
    for i, b in enumerate(block_list):
        groups[find(i)] = groups.get(find(i), 0) | b
    return sorted(groups.values())


def classify_graph(g: Multigraph) -> Verdict:
    """Verdict from the block decomposition.

    With two or more cyclic blocks, the witness splits at the lowest cut
    vertex having cyclic blocks on two sides: one side is the
    lowest-numbered branch there containing a cycle, the other is the rest
    of the graph.
    """
    bd = blocks(g)
    cyclic = [b for b in bd.blocks if is_cyclic_block(b, g)]
    if not cyclic:
        return _EMPTY
    if len(cyclic) == 1:
        return Verdict(Kind.IRREDUCIBLE)
    cyclic_mask = 0
    for b in cyclic:
        cyclic_mask |= b
    for v in sorted(bd.cut_vertices):
        parts = _branches(g, bd.blocks, v)
        with_cycle = [b for b in parts if b & cyclic_mask]
        if len(with_cycle) >= 2:
            side = with_cycle[0]
            rest = g.full_mask ^ side
            factors = (block_polynomial(g, side), block_polynomial(g, rest))
            if mul_disjoint(*factors) != psi(g):
                raise DefectError("witness factors do not multiply to Psi")
            return Verdict(Kind.REDUCIBLE, Witness(v, (side, rest), factors))
    raise DefectError("two cyclic blocks but no separating vertex between them")


def classify_poly(p: SubsetPoly) -> Verdict:
    """Verdict from an exhaustive variable-disjoint factor search on Psi."""
    if p.is_zero or any(c != 1 for _, c in p) or not is_homogeneous(p):
        raise GraphMotiveError("expected a graph polynomial: nonzero, homogeneous, all coefficients 1")
    if p.is_constant:
        return _EMPTY
    split = find_disjoint_factorization(p)
    if split is None:
        return Verdict(Kind.IRREDUCIBLE)
    return Verdict(Kind.REDUCIBLE, Witness(None, None, split))


def is_degenerate_pair(r: RotationSystem) -> bool:
    """True when Psi of the graph or of its dual is constant."""
    return psi(r.graph).is_constant or psi(dual(r).graph).is_constant


def duality_irreducibility_check(r: RotationSystem) -> bool:
    """Graph and dual agree on reducibility; pairs with a constant Psi on
    either side are exempt and pass."""
    if is_degenerate_pair(r):
        return True
    return classify_poly(psi(r.graph)).kind == classify_poly(psi(dual(r).graph)).kind
