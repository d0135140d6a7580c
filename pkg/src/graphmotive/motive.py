"""Grothendieck classes as integer polynomials in the torus class T = L - 1.

Every class handled here is a polynomial in T; the affine line is
``L = T + 1`` and a point is the constant 1. Divisions are exact synthetic
divisions that raise on a nonzero remainder.
"""

from __future__ import annotations

from fractions import Fraction
from math import comb

from .errors import DefectError, GraphMotiveError
from .graph import FAMILIES


class ClassPoly:
    """Integer polynomial in T; ``coeffs[i]`` multiplies ``T**i``."""

    __slots__ = ("coeffs",)

    def __init__(self, coeffs=()):
        c = [int(x) for x in coeffs]
        while c and c[-1] == 0:
            c.pop()
        self.coeffs = tuple(c)

    @classmethod
    def T(cls, power: int = 1) -> ClassPoly:
        return cls([0] * power + [1])

    def __eq__(self, other):
        if isinstance(other, int):
            other = ClassPoly([other])
        if not isinstance(other, ClassPoly):
            return NotImplemented
        return self.coeffs == other.coeffs

    def __hash__(self):
        return hash(self.coeffs)

    def _coerce(self, other) -> ClassPoly:
        return ClassPoly([other]) if isinstance(other, int) else other

    def __add__(self, other):
        other = self._coerce(other)
        size = max(len(self.coeffs), len(other.coeffs))
        a = self.coeffs + (0,) * (size - len(self.coeffs))
        b = other.coeffs + (0,) * (size - len(other.coeffs))
        return ClassPoly([x + y for x, y in zip(a, b)])

    __radd__ = __add__

    def __neg__(self):
        return ClassPoly([-x for x in self.coeffs])

    def __sub__(self, other):
        return self + (-self._coerce(other))

    def __rsub__(self, other):
        return self._coerce(other) - self

    def __mul__(self, other):
        other = self._coerce(other)
        if not self.coeffs or not other.coeffs:
            return ClassPoly()
        out = [0] * (len(self.coeffs) + len(other.coeffs) - 1)
        for i, x in enumerate(self.coeffs):
            for j, y in enumerate(other.coeffs):
                out[i + j] += x * y
        return ClassPoly(out)

    __rmul__ = __mul__

    def __pow__(self, k: int):
        out = ClassPoly([1])
        for _ in range(k):
            out = out * self
        return out

    def __call__(self, t):
        """Horner evaluation at ``T = t`` (any ring element)."""
        acc = 0
        for c in reversed(self.coeffs):
            acc = acc * t + c
        return acc

    @property
    def degree(self) -> int:
        return len(self.coeffs) - 1

    def divide_linear(self, root: int) -> ClassPoly:
        """Exact quotient by ``T - root``."""
        if not self.coeffs:
            return ClassPoly()
        quotient = []
        acc = 0
        for c in reversed(self.coeffs):
            acc = acc * root + c
            quotient.append(acc)
        remainder = quotient.pop()
        if remainder:
            raise DefectError(f"{self} is not divisible by T - ({root}); remainder {remainder}")
        return ClassPoly(reversed(quotient))

    def in_L(self) -> list[int]:
        """Coefficients in the basis of powers of L, via T = L - 1."""
        out = ClassPoly()
        shift = ClassPoly([-1, 1])
        for c in reversed(self.coeffs):
            out = out * shift + c
        return list(out.coeffs)

    def __str__(self):
        return _render(self.coeffs, "T")

    def __repr__(self):
        return f"ClassPoly({list(self.coeffs)})"

    def render_L(self) -> str:
        return _render(self.in_L(), "L")


def _render(coeffs, var: str) -> str:
    if not any(coeffs):
        return "0"
    parts = []
    for i in range(len(coeffs) - 1, -1, -1):
        c = coeffs[i]
        if c == 0:
            continue
        mag = abs(c)
        mono = "" if i == 0 else (var if i == 1 else f"{var}^{i}")
        body = str(mag) if not mono else (mono if mag == 1 else f"{mag}{mono}")
        if not parts:
            parts.append(body if c > 0 else f"-{body}")
        else:
            parts.append(f"{'+' if c > 0 else '-'} {body}")
    return " ".join(parts)


def _over_T(p: ClassPoly) -> ClassPoly:
    return p.divide_linear(0)


def _over_T_plus_1(p: ClassPoly) -> ClassPoly:
    return p.divide_linear(-1)


L = ClassPoly([1, 1])
T = ClassPoly.T()


def affine_class(n: int) -> ClassPoly:
    if n < 0:
        raise GraphMotiveError("n must be non-negative")
    return L ** n


def projective_class(n: int) -> ClassPoly:
    """1 + L + ... + L^n."""
    if n < 0:
        raise GraphMotiveError("n must be non-negative")
    return sum((L ** i for i in range(n + 1)), ClassPoly())


def sigma_class(n: int) -> ClassPoly:
    """Union of the coordinate hyperplanes of P^(n-1)."""
    if n < 1:
        raise GraphMotiveError("n must be positive")
    coeffs = [0] * max(n - 1, 0)
    for i in range(1, n):
        coeffs[n - 1 - i] = comb(n, i)
    out = ClassPoly(coeffs)
    if out != _over_T(L ** n - 1 - T ** n):
        raise DefectError(f"sigma class disagrees with its closed form at n={n}")
    return out


def hyperplane_section(g: ClassPoly) -> ClassPoly:
    """(g(T) - g(-1)) / (T + 1)."""
    return _over_T_plus_1(g - g(-1))


def line_sigma_class(n: int) -> ClassPoly:
    """Points of the hyperplane t_1 + ... + t_n = 0 with some t_i = 0."""
    if n < 2:
        raise GraphMotiveError("n must be at least 2")
    out = hyperplane_section(sigma_class(n))
    sign = (-1) ** (n - 1)
    expected = _over_T(L ** (n - 1) - 1) - _over_T_plus_1(T ** (n - 1) - sign)
    if out != expected:
        raise DefectError(f"hyperplane section of sigma disagrees with closed form at n={n}")
    return out


def banana_off_sigma_class(n: int) -> ClassPoly:
    """Banana hypersurface with all coordinates nonzero; matches the
    hyperplane t_1 + ... + t_n = 0 off the coordinate hyperplanes."""
    if n < 2:
        raise GraphMotiveError("n must be at least 2")
    out = projective_class(n - 2) - line_sigma_class(n)
    if out != _over_T_plus_1(T ** (n - 1) - (-1) ** (n - 1)):
        raise DefectError(f"off-sigma banana class disagrees with closed form at n={n}")
    return out


def sn_class(n: int) -> ClassPoly:
    """Points of P^(n-1) with at least two vanishing coordinates."""
    if n < 2:
        raise GraphMotiveError("n must be at least 2")
    return sigma_class(n) - n * T ** (n - 2)


def family_class(kind: str, n: int) -> ClassPoly:
    if kind not in FAMILIES:
        raise GraphMotiveError(f"unknown family {kind!r}")
    lowest = 2 if kind in ("polygon", "banana") else 1
    if n < lowest:
        raise GraphMotiveError(f"{kind} requires n >= {lowest}")
    if kind == "star":
        return ClassPoly()
    if kind == "flower":
        return sigma_class(n)
    if kind == "polygon":
        return projective_class(n - 2)
    return banana_off_sigma_class(n) + sn_class(n)


def banana_displayed_value(n: int, q: int) -> Fraction:
    """The banana class as the rational expression
    ((T+1)^n - 1)/T - (T^n - (-1)^n)/T - n T^(n-2) at T = q - 1.

    Kept only as the rejected variant: the middle quotient is not a
    polynomial and the value disagrees with point counts.
    """
    t = Fraction(q - 1)
    return ((t + 1) ** n - 1) / t - (t ** n - (-1) ** n) / t - n * t ** (n - 2)


def evaluate_at_q(c: ClassPoly, q: int) -> int:
    """Point count predicted over a field with q elements (T = q - 1)."""
    if q < 2:
        raise GraphMotiveError("q must be at least 2")
    return c(q - 1)
