"""Brute-force point counts of graph hypersurfaces over prime fields.

Points of P^(n-1)(F_q) are enumerated by their normalized representative:
zeros up to the first nonzero coordinate, which is 1, then anything. The
representatives with leading one in position ``i`` form stratum ``i``;
strata are evaluated independently and summed, so the totals do not
depend on how the work is split.
"""

from __future__ import annotations

import math
from dataclasses import asdict, dataclass
from typing import Iterator

import numpy as np

from .embedding import RotationSystem, dual
from .errors import DomainTooLargeError, GraphMotiveError
from .graph import edges_in
from .kirchhoff import psi
from .motive import ClassPoly, evaluate_at_q
from .multipoly import SubsetPoly, _require_prime

DEFAULT_MAX_WORK = 24.0
_CHUNK = 1 << 18


def _guard(n: int, q: int, max_work: float) -> None:
    _require_prime(q)
    if n < 1:
        raise GraphMotiveError("need at least one coordinate")
    if n * math.log2(q) > max_work:
        raise DomainTooLargeError(
            f"domain too large: n*log2(q) = {n * math.log2(q):.2f} exceeds {max_work}"
        )


def stratum_blocks(n: int, q: int, lead: int) -> Iterator[np.ndarray]:
    """Chunks of the stratum with leading one at position ``lead``, as
    int64 arrays of shape (rows, n), in lexicographic order."""
    free = n - 1 - lead
    size = q ** free
    for start in range(0, size, _CHUNK):
        idx = np.arange(start, min(start + _CHUNK, size), dtype=np.int64)
        pts = np.zeros((idx.size, n), dtype=np.int64)
        pts[:, lead] = 1
        for col in range(n - 1, lead, -1):
            idx, pts[:, col] = np.divmod(idx, q)
        yield pts


def projective_points(n: int, q: int, max_work: float = DEFAULT_MAX_WORK) -> Iterator[np.ndarray]:
    _guard(n, q, max_work)
    for lead in range(n):
        yield from stratum_blocks(n, q, lead)


def evaluate_points(p: SubsetPoly, pts: np.ndarray, q: int) -> np.ndarray:
    """Residues of ``p`` at each row of ``pts`` modulo ``q``."""
    if q >= 1 << 31:
        raise GraphMotiveError("modulus too large for int64 evaluation")
    acc = np.zeros(pts.shape[0], dtype=np.int64)
    for mask, c in p:
        term = np.full(pts.shape[0], c % q, dtype=np.int64)
        for i in edges_in(mask):
            term = term * pts[:, i - 1] % q
        acc = (acc + term) % q
    return acc


@dataclass(frozen=True)
class StrataCount:
    total: int
    off_sigma: int
    on_sigma: int

    def __post_init__(self):
        if self.total != self.off_sigma + self.on_sigma:
            raise GraphMotiveError("strata do not add up")


def _count_stratum(p: SubsetPoly, q: int, lead: int) -> tuple[int, int]:
    zeros = off = 0
    for pts in stratum_blocks(p.var_count, q, lead):
        hit = evaluate_points(p, pts, q) == 0
        zeros += int(hit.sum())
        off += int((hit & (pts != 0).all(axis=1)).sum())
    return zeros, off


def count_zeros(p: SubsetPoly, q: int, max_work: float = DEFAULT_MAX_WORK) -> StrataCount:
    """Zeros of ``p`` in P^(n-1)(F_q), split by whether a coordinate vanishes."""
    n = p.var_count
    _guard(n, q, max_work)
    total = off = 0
    for lead in range(n):
        z, o = _count_stratum(p, q, lead)
        total += z
        off += o
    return StrataCount(total, off, total - off)


def count_multi_vanishing(n: int, k: int, q: int, max_work: float = DEFAULT_MAX_WORK) -> int:
    """Points of P^(n-1)(F_q) with at least ``k`` zero coordinates."""
    if not 1 <= k <= n:
        raise GraphMotiveError("need 1 <= k <= n")
    total = 0
    for pts in projective_points(n, q, max_work):
        total += int(((pts == 0).sum(axis=1) >= k).sum())
    return total


def normalize(point, q: int) -> tuple[int, ...]:
    """Scale a nonzero vector so its first nonzero entry is 1."""
    lead = next(x for x in point if x % q)
    inv = pow(lead, -1, q)
    return tuple(x * inv % q for x in point)


def off_sigma_zeros(p: SubsetPoly, q: int, max_work: float = DEFAULT_MAX_WORK) -> set[tuple[int, ...]]:
    """Normalized zeros of ``p`` with every coordinate nonzero."""
    _guard(p.var_count, q, max_work)
    out = set()
    # off sigma forces the first coordinate to be the leading one
    for pts in stratum_blocks(p.var_count, q, 0):
        hit = (evaluate_points(p, pts, q) == 0) & (pts != 0).all(axis=1)
        out.update(map(tuple, pts[hit].tolist()))
    return out


def reciprocal_point(point, q: int) -> tuple[int, ...]:
    return normalize([pow(x, -1, q) for x in point], q)


@dataclass(frozen=True)
class CremonaReport:
    q: int
    primal_off_sigma: int
    dual_off_sigma: int
    injective: bool
    image_matches: bool

    @property
    def passed(self) -> bool:
        return self.injective and self.image_matches

    def to_json(self) -> dict:
        return {**asdict(self), "pass": self.passed}


def cremona_point_check(r: RotationSystem, q: int, max_work: float = DEFAULT_MAX_WORK) -> CremonaReport:
    """Invert coordinates of every off-sigma zero of Psi and compare the
    image with the off-sigma zeros of the dual's Psi."""
    primal = off_sigma_zeros(psi(r.graph), q, max_work)
    dual_zeros = off_sigma_zeros(psi(dual(r).graph), q, max_work)
    image = {reciprocal_point(x, q) for x in primal}
    return CremonaReport(
        q=q,
        primal_off_sigma=len(primal),
        dual_off_sigma=len(dual_zeros),
        injective=len(image) == len(primal),
        image_matches=image == dual_zeros,
    )


@dataclass(frozen=True)
class VerifyReport:
    q: int
    total: int
    off_sigma: int
    on_sigma: int
    class_value: int
    passed: bool

    def to_json(self) -> dict:
        d = asdict(self)
        d["pass"] = d.pop("passed")
        return d


def verify_class(c: ClassPoly, p: SubsetPoly, q: int, max_work: float = DEFAULT_MAX_WORK) -> VerifyReport:
    counts = count_zeros(p, q, max_work)
    value = evaluate_at_q(c, q)
    return VerifyReport(q, counts.total, counts.off_sigma, counts.on_sigma, value, value == counts.total)
