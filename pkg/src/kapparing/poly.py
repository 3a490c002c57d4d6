"""Exact univariate polynomials over the rationals and small integer helpers."""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache
from math import factorial
from typing import Iterable, Sequence


@lru_cache(maxsize=None)
def double_factorial(k: int) -> int:
    """k!! for odd k >= -1; (-1)!! = 1."""
    if k <= 0:
        if k < -1:
            raise ValueError(f"double factorial undefined for {k}")
        return 1
    return k * double_factorial(k - 2)


def binom(x: int | Fraction, p: int) -> Fraction:
    """Falling-factorial binomial x(x-1)...(x-p+1)/p!, valid for any rational x."""
    if p < 0:
        return Fraction(0)
    num = Fraction(1)
    for i in range(p):
        num *= x - i
    return num / factorial(p)


def binom_frac_lower(h: int, k: Fraction) -> Fraction:
    """binom(h, k) that is zero for non-integral or negative lower index."""
    if k.denominator != 1 or k < 0:
        return Fraction(0)
    return binom(h, int(k))


@dataclass(frozen=True)
class UniPoly:
    """Dense polynomial; ``coeffs[i]`` is the coefficient of x**i.

    The zero polynomial has an empty coefficient tuple.
    """

    coeffs: tuple[Fraction, ...] = ()

    def __post_init__(self):
        c = [Fraction(a) for a in self.coeffs]
        while c and c[-1] == 0:
            c.pop()
        object.__setattr__(self, "coeffs", tuple(c))

    @classmethod
    def from_roots(cls, roots: Iterable[int | Fraction], lead=1) -> "UniPoly":
        p = cls((Fraction(lead),))
        for r in roots:
            p = p * cls((-Fraction(r), Fraction(1)))
        return p

    @property
    def degree(self) -> int:
        return len(self.coeffs) - 1

    @property
    def leading(self) -> Fraction:
        return self.coeffs[-1] if self.coeffs else Fraction(0)

    def __call__(self, x) -> Fraction:
        acc = Fraction(0)
        for a in reversed(self.coeffs):
            acc = acc * x + a
        return acc

    def __add__(self, other: "UniPoly") -> "UniPoly":
        n = max(len(self.coeffs), len(other.coeffs))
        a = self.coeffs + (Fraction(0),) * (n - len(self.coeffs))
        b = other.coeffs + (Fraction(0),) * (n - len(other.coeffs))
        return UniPoly(tuple(x + y for x, y in zip(a, b)))

    def __neg__(self) -> "UniPoly":
        return UniPoly(tuple(-a for a in self.coeffs))

    def __sub__(self, other: "UniPoly") -> "UniPoly":
        return self + (-other)

    def __mul__(self, other) -> "UniPoly":
        if not isinstance(other, UniPoly):
            return UniPoly(tuple(a * other for a in self.coeffs))
        if not self.coeffs or not other.coeffs:
            return UniPoly()
        out = [Fraction(0)] * (len(self.coeffs) + len(other.coeffs) - 1)
        for i, a in enumerate(self.coeffs):
            if a:
                for j, b in enumerate(other.coeffs):
                    out[i + j] += a * b
        return UniPoly(tuple(out))

    __rmul__ = __mul__

    def __str__(self) -> str:
        if not self.coeffs:
            return "0"
        terms = []
        for i in range(len(self.coeffs) - 1, -1, -1):
            a = self.coeffs[i]
            if a:
                mono = "" if i == 0 else ("m" if i == 1 else f"m^{i}")
                terms.append(f"({a})*{mono}" if mono else f"({a})")
        return " + ".join(terms)


def interpolate(xs: Sequence[int | Fraction], ys: Sequence[int | Fraction]) -> UniPoly:
    """Lagrange interpolation through the points (xs[i], ys[i]), exact."""
    if len(xs) != len(ys):
        raise ValueError("node and value counts differ")
    if len(set(xs)) != len(xs):
        raise ValueError("interpolation nodes must be distinct")
    result = UniPoly()
    for i, (xi, yi) in enumerate(zip(xs, ys)):
        if yi == 0:
            continue
        basis = UniPoly((Fraction(1),))
        denom = Fraction(1)
        for k, xk in enumerate(xs):
            if k != i:
                basis = basis * UniPoly((-Fraction(xk), Fraction(1)))
                denom *= Fraction(xi) - xk
        result = result + basis * (Fraction(yi) / denom)
    return result
