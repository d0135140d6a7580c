"""Multilinear integer polynomials keyed by variable subsets.

A monomial is an int bitmask with bit ``i`` set when ``t_i`` divides it
(``1 <= i <= n``), so exponents are 0/1 by construction. Coefficients are
Python ints and never overflow.
"""

from __future__ import annotations

from itertools import combinations
from math import gcd
from typing import Mapping

from .errors import GraphMotiveError
from .graph import edges_in, mask_of


def is_prime(q: int) -> bool:
    if q < 2:
        return False
    if q % 2 == 0:
        return q == 2
    f = 3
    while f * f <= q:
        if q % f == 0:
            return False
        f += 2
    return True


def _require_prime(q: int) -> None:
    if not is_prime(q):
        raise GraphMotiveError(f"{q} is not prime")


class SubsetPoly:
    __slots__ = ("var_count", "_terms")

    def __init__(self, var_count: int, terms: Mapping[int, int] | None = None):
        if var_count < 0:
            raise GraphMotiveError("var_count must be non-negative")
        allowed = ((1 << var_count) - 1) << 1
        clean = {}
        for mask, c in (terms or {}).items():
            if mask & ~allowed:
                raise GraphMotiveError(f"monomial {mask:#b} uses variables outside 1..{var_count}")
            if c:
                clean[mask] = int(c)
        self.var_count = var_count
        self._terms = dict(sorted(clean.items()))

    @classmethod
    def constant(cls, var_count: int, c: int = 1) -> SubsetPoly:
        return cls(var_count, {0: c})

    @classmethod
    def monomial(cls, var_count: int, variables, c: int = 1) -> SubsetPoly:
        return cls(var_count, {mask_of(variables): c})

    @property
    def terms(self) -> dict[int, int]:
        return dict(self._terms)

    def __len__(self) -> int:
        return len(self._terms)

    def __iter__(self):
        return iter(self._terms.items())

    def __eq__(self, other) -> bool:
        if not isinstance(other, SubsetPoly):
            return NotImplemented
        return self.var_count == other.var_count and self._terms == other._terms

    def __hash__(self) -> int:
        return hash((self.var_count, tuple(self._terms.items())))

    def __add__(self, other: SubsetPoly) -> SubsetPoly:
        return add(self, other)

    def __mul__(self, other: SubsetPoly) -> SubsetPoly:
        return mul_disjoint(self, other)

    def __neg__(self) -> SubsetPoly:
        return SubsetPoly(self.var_count, {m: -c for m, c in self._terms.items()})

    def __repr__(self) -> str:
        return f"SubsetPoly({self.var_count}, {str(self)!r})"

    def __str__(self) -> str:
        return render(self)

    @property
    def is_zero(self) -> bool:
        return not self._terms

    @property
    def is_constant(self) -> bool:
        return all(m == 0 for m in self._terms)

    @property
    def support(self) -> int:
        """Mask of the variables that occur in some term."""
        s = 0
        for m in self._terms:
            s |= m
        return s

    def relabel(self, id_map, var_count: int) -> SubsetPoly:
        """Rename variable ``i`` to ``id_map[i - 1]`` in a ring of ``var_count`` variables."""
        out = {}
        for m, c in self._terms.items():
            out[mask_of(id_map[i - 1] for i in edges_in(m))] = c
        return SubsetPoly(var_count, out)

    def to_json(self) -> dict:
        return {
            "n": self.var_count,
            "terms": [{"vars": list(edges_in(m)), "coeff": c} for m, c in self._terms.items()],
        }

    @classmethod
    def from_json(cls, data: dict) -> SubsetPoly:
        try:
            return cls(int(data["n"]), {mask_of(t["vars"]): int(t["coeff"]) for t in data["terms"]})
        except (KeyError, TypeError) as exc:
            raise GraphMotiveError(f"malformed polynomial JSON: {exc!r}") from exc


def render(p: SubsetPoly) -> str:
    """Canonical text: ascending monomial masks, ``t3`` variables, ``*`` products."""
    if p.is_zero:
        return "0"
    out = []
    for m, c in p:
        names = [f"t{i}" for i in edges_in(m)]
        mag = abs(c)
        if not names:
            body = str(mag)
        elif mag == 1:
            body = "*".join(names)
        else:
            body = "*".join([str(mag)] + names)
        if not out:
            out.append(body if c > 0 else f"-{body}")
        else:
            out.append(f"{'+' if c > 0 else '-'} {body}")
    return " ".join(out)


def _check_same_ring(p: SubsetPoly, q: SubsetPoly) -> None:
    if p.var_count != q.var_count:
        raise GraphMotiveError(f"var_count mismatch: {p.var_count} != {q.var_count}")


def add(p: SubsetPoly, q: SubsetPoly) -> SubsetPoly:
    _check_same_ring(p, q)
    out = p.terms
    for m, c in q:
        out[m] = out.get(m, 0) + c
    return SubsetPoly(p.var_count, out)


def mul_disjoint(p: SubsetPoly, q: SubsetPoly) -> SubsetPoly:
    """Product of two polynomials in disjoint sets of variables.

    Disjointness keeps the result multilinear and makes every product of
    monomials distinct, so no terms combine.
    """
    _check_same_ring(p, q)
    if p.support & q.support:
        raise GraphMotiveError("not variable-disjoint")
    return SubsetPoly(p.var_count, {a | b: c * d for a, c in p for b, d in q})


def evaluate_mod(p: SubsetPoly, point, q: int) -> int:
    """Value of ``p`` at ``point`` (``point[i-1]`` is ``t_i``) modulo prime ``q``."""
    _require_prime(q)
    if len(point) != p.var_count:
        raise GraphMotiveError(f"point has {len(point)} coordinates, need {p.var_count}")
    total = 0
    for m, c in p:
        v = c % q
        for i in edges_in(m):
            v = v * point[i - 1] % q
        total += v
    return total % q


def reciprocal_transform(p: SubsetPoly) -> SubsetPoly:
    """``(t_1 ... t_n) * p(1/t_1, ..., 1/t_n)``: complement every monomial."""
    full = ((1 << p.var_count) - 1) << 1
    return SubsetPoly(p.var_count, {full ^ m: c for m, c in p})


def degree(p: SubsetPoly) -> int:
    if p.is_zero:
        raise GraphMotiveError("degree of the zero polynomial")
    return max(m.bit_count() for m in p.terms)


def is_homogeneous(p: SubsetPoly) -> bool:
    return len({m.bit_count() for m in p.terms}) <= 1


def _split(p: SubsetPoly, left: int, right: int) -> tuple[SubsetPoly, SubsetPoly] | None:
    """Try ``p = f(left vars) * g(right vars)``; this holds iff the matrix of
    coefficients indexed by (left part, right part) of each monomial has
    rank one."""
    rows: dict[int, dict[int, int]] = {}
    for m, c in p:
        rows.setdefault(m & left, {})[m & right] = c
    cols = {b for row in rows.values() for b in row}
    if len(rows) * len(cols) != len(p):
        return None
    a0 = next(iter(rows))
    ref = rows[a0]
    content = 0
    for c in ref.values():
        content = gcd(content, c)
    b0, c0 = next(iter(ref.items()))
    if c0 < 0:
        content = -content
    g = {b: c // content for b, c in ref.items()}
    f = {}
    for a, row in rows.items():
        fa, rem = divmod(row[b0], g[b0])
        if rem:
            return None
        if any(row[b] != fa * g[b] for b in cols):
            return None
        f[a] = fa
    return SubsetPoly(p.var_count, f), SubsetPoly(p.var_count, g)


def find_disjoint_factorization(p: SubsetPoly) -> tuple[SubsetPoly, SubsetPoly] | None:
    """Split ``p`` into two nonconstant variable-disjoint factors, or None.

    Tries every bipartition of the support with the lowest variable on the
    left, smaller left parts first; exponential in the support size.
    """
    if p.is_zero or p.is_constant:
        raise GraphMotiveError("factorization needs a nonconstant polynomial")
    variables = list(edges_in(p.support))
    first, rest = variables[0], variables[1:]
    support = p.support
    for k in range(len(rest)):
        for extra in combinations(rest, k):
            left = mask_of((first, *extra))
            found = _split(p, left, support ^ left)
            if found is not None:
                return found
    return None
