"""Kirchhoff graph polynomials and the identities they satisfy."""

from __future__ import annotations

from itertools import combinations

from .embedding import RotationSystem, dual
from .errors import GraphMotiveError
from .graph import FAMILIES, Multigraph, blocks, spanning_trees, subgraph
from .multipoly import SubsetPoly, mul_disjoint, reciprocal_transform


def psi(g: Multigraph) -> SubsetPoly:
    """Sum over spanning trees T of the product of t_e for e outside T."""
    full = g.full_mask
    return SubsetPoly(g.n, {full ^ t: 1 for t in spanning_trees(g)})


def psi_family(kind: str, n: int) -> SubsetPoly:
    """Closed forms for the four families, built without enumerating trees."""
    if kind not in FAMILIES:
        raise GraphMotiveError(f"unknown family {kind!r}")
    lowest = 2 if kind in ("polygon", "banana") else 1
    if n < lowest:
        raise GraphMotiveError(f"{kind} requires n >= {lowest}")
    if kind == "star":
        return SubsetPoly.constant(n)
    if kind == "flower":
        return SubsetPoly.monomial(n, range(1, n + 1))
    if kind == "polygon":
        return elementary_symmetric(n, 1)
    return elementary_symmetric(n, n - 1)


def elementary_symmetric(n: int, k: int) -> SubsetPoly:
    return SubsetPoly(n, {sum(1 << i for i in c): 1 for c in combinations(range(1, n + 1), k)})


def cremona_identity_check(r: RotationSystem) -> bool:
    """Psi of the graph equals the reciprocal transform of Psi of its dual."""
    return psi(r.graph) == reciprocal_transform(psi(dual(r).graph))


def block_polynomial(g: Multigraph, mask: int) -> SubsetPoly:
    """Psi of the subgraph on the edges in ``mask``, in g's variables."""
    sub, ids = subgraph(g, mask)
    return psi(sub).relabel(ids, g.n)


def psi_block_product_check(g: Multigraph) -> bool:
    product = SubsetPoly.constant(g.n)
    for b in blocks(g).blocks:
        product = mul_disjoint(product, block_polynomial(g, b))
    return product == psi(g)
