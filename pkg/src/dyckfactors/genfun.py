"""Truncated power series in x, y, z and the functional equation for W.

A series is a sparse map ``(n, k, m) -> coefficient`` of ``x^n y^k z^m``,
cut off above ``x^N``.  The y and z degrees never exceed the x degree for
anything built here, so truncating in x alone keeps every series finite.
"""
from __future__ import annotations

from collections import defaultdict
from typing import Iterator, Mapping

from .errors import OrderMismatch

Key = tuple[int, int, int]


class TriSeries:
    __slots__ = ("coeffs", "order")

    def __init__(self, coeffs: Mapping[Key, int] | None = None, order: int = 0):
        if order < 0:
            raise ValueError("truncation order must be nonnegative")
        self.order = order
        self.coeffs = {key: c for key, c in (coeffs or {}).items() if c and key[0] <= order}

    @classmethod
    def one(cls, order: int) -> "TriSeries":
        return cls({(0, 0, 0): 1}, order)

    @classmethod
    def monomial(cls, n: int, k: int, m: int, order: int, c: int = 1) -> "TriSeries":
        return cls({(n, k, m): c}, order)

    def __getitem__(self, key: Key) -> int:
        return self.coeffs.get(key, 0)

    def __eq__(self, other) -> bool:
        if not isinstance(other, TriSeries):
            return NotImplemented
        return self.order == other.order and self.coeffs == other.coeffs

    def __iter__(self) -> Iterator[tuple[Key, int]]:
        return iter(sorted(self.coeffs.items()))

    def __len__(self) -> int:
        return len(self.coeffs)

    def is_zero(self) -> bool:
        return not self.coeffs

    def __add__(self, other: "TriSeries") -> "TriSeries":
        return series_add(self, other)

    def __sub__(self, other: "TriSeries") -> "TriSeries":
        return series_add(self, other.scale(-1))

    def __mul__(self, other: "TriSeries") -> "TriSeries":
        return series_mul(self, other)

    def scale(self, c: int) -> "TriSeries":
        return TriSeries({key: c * v for key, v in self.coeffs.items()}, self.order)

    def __repr__(self) -> str:
        terms = " + ".join(f"{c}*x^{n}y^{k}z^{m}" for (n, k, m), c in self)
        return f"TriSeries({terms or '0'}; O(x^{self.order + 1}))"


def _same_order(a: TriSeries, b: TriSeries) -> int:
    if a.order != b.order:
        raise OrderMismatch(f"truncation orders differ: {a.order} vs {b.order}")
    return a.order


def series_add(a: TriSeries, b: TriSeries) -> TriSeries:
    order = _same_order(a, b)
    out = dict(a.coeffs)
    for key, c in b.coeffs.items():
        out[key] = out.get(key, 0) + c
    return TriSeries(out, order)


def series_mul(a: TriSeries, b: TriSeries) -> TriSeries:
    order = _same_order(a, b)
    out: dict[Key, int] = defaultdict(int)
    for (n1, k1, m1), c1 in a.coeffs.items():
        for (n2, k2, m2), c2 in b.coeffs.items():
            if n1 + n2 <= order:
                out[(n1 + n2, k1 + k2, m1 + m2)] += c1 * c2
    return TriSeries(out, order)


def series_scale_monomial(a: TriSeries, n: int, k: int, m: int, c: int = 1) -> TriSeries:
    """Multiply by ``c x^n y^k z^m``."""
    return TriSeries({(n + a_n, k + a_k, m + a_m): c * v for (a_n, a_k, a_m), v in a.coeffs.items()}, a.order)


def solve_functional_equation(order: int) -> TriSeries:
    """Iterate ``W <- 1 + V W`` with ``V = xy + x^2yzW + x(W - 1 - xyW)`` from ``W = 1``.

    Every term of ``V`` carries a factor of x, so each pass fixes at least
    one more x-degree; iteration stops as soon as nothing changes.
    """
    one = TriSeries.one(order)
    w = one
    for _ in range(order + 2):
        v = (TriSeries.monomial(1, 1, 0, order)
             + series_scale_monomial(w, 2, 1, 1)
             + series_scale_monomial(w - one - series_scale_monomial(w, 1, 1, 0), 1, 0, 0))
        nxt = one + v * w
        if nxt == w:
            return w
        w = nxt
    raise AssertionError("fixed point iteration did not settle")


def residual(w: TriSeries) -> TriSeries:
    """``u W^2 - v W + 1`` with ``u = x - x^2y + x^2yz`` and ``v = 1 + x - xy``."""
    order = w.order
    u = TriSeries({(1, 0, 0): 1, (2, 1, 0): -1, (2, 1, 1): 1}, order)
    v = TriSeries({(0, 0, 0): 1, (1, 0, 0): 1, (1, 1, 0): -1}, order)
    return u * w * w - v * w + TriSeries.one(order)


def series_from_counts(order: int, count) -> TriSeries:
    """Series with coefficient ``count(n, k, m)`` over the box ``m <= k <= n <= order``."""
    return TriSeries({(n, k, m): count(n, k, m)
                      for n in range(order + 1) for k in range(n + 1) for m in range(k + 1)}, order)
