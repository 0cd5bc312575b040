"""Exact univariate polynomials and the real-root toolkit used on W_{n,k}(t).

Nothing here touches floating point.  Root counting goes through Sturm
chains over the rationals; interlacing is decided by isolating the distinct
real roots of both polynomials in disjoint rational intervals.
"""
from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from math import gcd, lcm
from typing import Iterable, Sequence

from .counting import binomial, exact_div, gen_narayana, narayana, w_formula
from .errors import DecompositionBug, DyckFactorsError, NotRealRooted, NotSymmetric


def _norm(c):
    if isinstance(c, Fraction) and c.denominator == 1:
        return int(c)
    return c


class Poly:
    """Dense polynomial, ``coeffs[i]`` is the coefficient of ``t^i``."""

    __slots__ = ("coeffs",)

    def __init__(self, coeffs: Iterable = ()):
        cs = [_norm(c) for c in coeffs]
        while cs and cs[-1] == 0:
            cs.pop()
        self.coeffs = tuple(cs)

    @classmethod
    def t(cls) -> "Poly":
        return cls((0, 1))

    @classmethod
    def const(cls, c) -> "Poly":
        return cls((c,))

    @classmethod
    def from_roots(cls, roots: Iterable, lead=1) -> "Poly":
        p = cls((lead,))
        for r in roots:
            p = p * cls((-r, 1))
        return p

    @property
    def degree(self) -> int:
        """Degree, with -1 for the zero polynomial."""
        return len(self.coeffs) - 1

    def is_zero(self) -> bool:
        return not self.coeffs

    def is_constant(self) -> bool:
        return len(self.coeffs) <= 1

    @property
    def lead(self):
        return self.coeffs[-1] if self.coeffs else 0

    def __getitem__(self, i: int):
        return self.coeffs[i] if 0 <= i < len(self.coeffs) else 0

    def __eq__(self, other) -> bool:
        if isinstance(other, (int, Fraction)):
            other = Poly.const(other)
        if not isinstance(other, Poly):
            return NotImplemented
        return self.coeffs == other.coeffs

    def __hash__(self) -> int:
        return hash(self.coeffs)

    def __add__(self, other) -> "Poly":
        other = _lift(other)
        n = max(len(self.coeffs), len(other.coeffs))
        return Poly(self[i] + other[i] for i in range(n))

    __radd__ = __add__

    def __neg__(self) -> "Poly":
        return Poly(-c for c in self.coeffs)

    def __sub__(self, other) -> "Poly":
        return self + (-_lift(other))

    def __rsub__(self, other) -> "Poly":
        return _lift(other) - self

    def __mul__(self, other) -> "Poly":
        other = _lift(other)
        if self.is_zero() or other.is_zero():
            return Poly()
        out = [0] * (len(self.coeffs) + len(other.coeffs) - 1)
        for i, a in enumerate(self.coeffs):
            if a:
                for j, b in enumerate(other.coeffs):
                    out[i + j] += a * b
        return Poly(out)

    __rmul__ = __mul__

    def __pow__(self, e: int) -> "Poly":
        out = Poly.const(1)
        for _ in range(e):
            out = out * self
        return out

    def shift(self, k: int) -> "Poly":
        """Multiply by ``t^k``."""
        return Poly((0,) * k + self.coeffs) if self.coeffs else Poly()

    def __divmod__(self, other: "Poly") -> tuple["Poly", "Poly"]:
        if other.is_zero():
            raise ZeroDivisionError("polynomial division by zero")
        rem = [Fraction(c) for c in self.coeffs]
        q = [Fraction(0)] * max(len(rem) - other.degree, 1)
        lead = Fraction(other.lead)
        for i in range(len(rem) - len(other.coeffs), -1, -1):
            c = rem[i + other.degree] / lead
            q[i] = c
            if c:
                for j, b in enumerate(other.coeffs):
                    rem[i + j] -= c * b
        return Poly(q), Poly(rem)

    def __floordiv__(self, other: "Poly") -> "Poly":
        return divmod(self, other)[0]

    def __mod__(self, other: "Poly") -> "Poly":
        return divmod(self, other)[1]

    def __call__(self, x):
        acc = 0
        for c in reversed(self.coeffs):
            acc = acc * x + c
        return acc

    def derivative(self) -> "Poly":
        return Poly(i * c for i, c in enumerate(self.coeffs) if i)

    def monic(self) -> "Poly":
        if self.is_zero():
            return self
        lead = Fraction(self.lead)
        return Poly(Fraction(c) / lead for c in self.coeffs)

    def primitive(self) -> "Poly":
        """Positive rational multiple with coprime integer coefficients."""
        if self.is_zero():
            return self
        den = lcm(*(Fraction(c).denominator for c in self.coeffs))
        ints = [int(Fraction(c) * den) for c in self.coeffs]
        g = 0
        for c in ints:
            g = gcd(g, c)
        return Poly(c // g for c in ints)

    def is_symmetric(self, d: int | None = None) -> bool:
        d = self.degree if d is None else d
        if self.degree > d:
            return False
        return all(self[i] == self[d - i] for i in range(d + 1))

    def __repr__(self) -> str:
        if not self.coeffs:
            return "Poly(0)"
        terms = []
        for i, c in enumerate(self.coeffs):
            if c:
                terms.append(f"{c}" if i == 0 else f"{c}*t" if i == 1 else f"{c}*t^{i}")
        return "Poly(" + " + ".join(terms) + ")"

    def to_list(self) -> list:
        return [c if isinstance(c, int) else str(c) for c in self.coeffs]


def _lift(x) -> Poly:
    return x if isinstance(x, Poly) else Poly.const(x)


def poly_gcd(a: Poly, b: Poly) -> Poly:
    """Monic gcd (the zero polynomial only if both inputs are zero)."""
    while not b.is_zero():
        a, b = b, a % b
    return a.monic()


def squarefree(f: Poly) -> Poly:
    if f.is_zero():
        raise DyckFactorsError("the zero polynomial has no squarefree part")
    if f.is_constant():
        return Poly.const(1)
    return (f // poly_gcd(f, f.derivative())).primitive()


# ------------------------------------------------------------ families


def w_poly(n: int, k: int) -> Poly:
    return Poly(w_formula(n, k, m) for m in range(k + 1))


def narayana_poly(k: int) -> Poly:
    return Poly(narayana(k, m) for m in range(k + 1))


def gen_narayana_poly(k: int, r: int) -> Poly:
    return Poly(gen_narayana(k, m, r) for m in range(k - r + 1))


def bar_narayana_poly(k: int, j: int) -> Poly:
    """``sum_i (j+1)/(k+1) C(k+1, i) C(k+1, i+j+1) t^i`` for ``0 <= i <= k - j``."""
    return Poly(exact_div((j + 1) * binomial(k + 1, i) * binomial(k + 1, i + j + 1), k + 1)
                for i in range(k - j + 1))


def hadamard(f: Poly, g: Poly) -> Poly:
    return Poly(f[i] * g[i] for i in range(min(len(f.coeffs), len(g.coeffs))))


# ------------------------------------------------------------ Sturm


def sturm_chain(f: Poly) -> list[Poly]:
    chain = [f.primitive(), f.derivative().primitive()]
    while not chain[-1].is_zero() and not chain[-1].is_constant():
        chain.append((-(chain[-2] % chain[-1])).primitive())
    return [p for p in chain if not p.is_zero()]


def _sign_changes(chain: Sequence[Poly], x) -> int:
    signs = [s for s in ((p(x) > 0) - (p(x) < 0) for p in chain) if s]
    return sum(1 for a, b in zip(signs, signs[1:]) if a != b)


def cauchy_bound(f: Poly) -> Fraction:
    lead = Fraction(f.lead)
    return 1 + max((abs(Fraction(c) / lead) for c in f.coeffs[:-1]), default=Fraction(0))


def sturm_distinct_real_roots(f: Poly) -> int:
    if f.is_zero():
        raise DyckFactorsError("the zero polynomial has infinitely many roots")
    if f.is_constant():
        return 0
    chain = sturm_chain(f)
    b = cauchy_bound(f)
    return _sign_changes(chain, -b) - _sign_changes(chain, b)


def is_real_rooted(f: Poly) -> bool:
    if f.is_zero():
        raise DyckFactorsError("real-rootedness of the zero polynomial is undefined")
    sq = squarefree(f)
    return sturm_distinct_real_roots(sq) == sq.degree


def same_root_set(f: Poly, g: Poly) -> bool:
    if f.is_zero() or g.is_zero():
        raise DyckFactorsError("zero polynomial")
    return squarefree(f).monic() == squarefree(g).monic()


def isolate_roots(f: Poly) -> list[tuple[Fraction, Fraction]]:
    """Disjoint intervals ``(a, b]``, increasing, each holding one distinct real root."""
    sq = squarefree(f)
    if sq.is_constant():
        return []
    chain = sturm_chain(sq)
    b = cauchy_bound(sq)
    out = []
    todo = [(-b, b)]
    while todo:
        lo, hi = todo.pop()
        count = _sign_changes(chain, lo) - _sign_changes(chain, hi)
        if count == 0:
            continue
        if count == 1:
            out.append((lo, hi))
            continue
        # split away from roots so endpoints stay off the zero set
        for frac in (Fraction(1, 2), Fraction(1, 3), Fraction(2, 3), Fraction(2, 5), Fraction(3, 5)):
            mid = lo + (hi - lo) * frac
            if sq(mid) != 0:
                break
        todo += [(lo, mid), (mid, hi)]
    return sorted(out)


def _multiplicity(p: Poly, h: Poly, interval) -> int:
    lo, hi = interval
    m, q = 0, p
    while not q.is_constant():
        common = poly_gcd(q, h)
        if common.is_constant():
            break
        chain = sturm_chain(common)
        if _sign_changes(chain, lo) - _sign_changes(chain, hi) == 0:
            break
        m += 1
        q = q.derivative()
    return m


def _descending_roots(p: Poly, h: Poly, intervals) -> list[int]:
    """Roots of ``p`` with multiplicity, as interval indices, largest first."""
    out = []
    for idx in range(len(intervals) - 1, -1, -1):
        out += [idx] * _multiplicity(p, h, intervals[idx])
    return out


def interlaces(g: Poly, f: Poly) -> bool:
    """Whether ``g -> f``: the roots of ``g`` sit weakly between consecutive roots of ``f``."""
    for p in (f, g):
        if not p.is_zero() and not p.is_constant() and not is_real_rooted(p):
            raise NotRealRooted(f"{p} is not real-rooted")
    if g.is_constant():
        return True
    if f.is_constant():
        return False
    if f.degree not in (g.degree, g.degree + 1):
        return False
    h = squarefree(f * g)
    intervals = isolate_roots(h)
    us = _descending_roots(f, h, intervals)
    vs = _descending_roots(g, h, intervals)
    assert len(us) == f.degree and len(vs) == g.degree
    merged = []
    for i, u in enumerate(us):
        merged.append(u)
        if i < len(vs):
            merged.append(vs[i])
    return all(a >= b for a, b in zip(merged, merged[1:]))


# ------------------------------------------------------- gamma expansion


@dataclass(frozen=True)
class GammaExpansion:
    d: int
    gammas: tuple

    def reconstruct(self) -> Poly:
        one_plus_t = Poly((1, 1))
        total = Poly()
        for j, g in enumerate(self.gammas):
            if g:
                total = total + (one_plus_t ** (self.d - 2 * j)).shift(j) * g
        return total

    @property
    def is_positive(self) -> bool:
        return all(g >= 0 for g in self.gammas)


def gamma_expansion(f: Poly, d: int) -> GammaExpansion:
    """Coefficients of ``f`` in the basis ``t^j (1+t)^{d-2j}``, peeled from the outside in."""
    if d < 0 or not f.is_symmetric(d):
        raise NotSymmetric(f"{f} is not symmetric about degree {d}")
    rem = f
    one_plus_t = Poly((1, 1))
    gammas = []
    for j in range(d // 2 + 1):
        g = rem[j]
        gammas.append(g)
        if g:
            rem = rem - (one_plus_t ** (d - 2 * j)).shift(j) * g
    if not rem.is_zero():
        raise NotSymmetric(f"{f} left a remainder {rem} in the gamma basis")
    return GammaExpansion(d, tuple(gammas))


# ---------------------------------------------------- symmetric decomposition


@dataclass(frozen=True)
class Decomposition:
    n: int
    k: int
    case: str
    plus: Poly
    minus: Poly
    raw_plus: tuple
    raw_minus: tuple

    def recompose(self) -> Poly:
        tm = self.minus.shift(1)
        if self.case == "a":
            return self.plus - tm
        if self.case == "b":
            return self.plus + tm
        return -self.plus + tm


def symmetric_decomposition(n: int, k: int) -> Decomposition:
    """Split ``W_{n,k}`` into two symmetric nonnegative parts ``W^+`` (about ``k``)
    and ``W^-`` (about ``k - 1``) built from running partial sums."""
    if not 1 <= k <= n:
        raise DyckFactorsError("need 1 <= k <= n")
    w = [w_formula(n, k, m) for m in range(k + 1)]
    W = Poly(w)
    head = [sum(w[: i + 1]) for i in range(k + 1)]           # w_0 + ... + w_i
    tail = [sum(w[k - i:]) for i in range(k + 1)]            # w_k + ... + w_{k-i}
    plus = [1 if k == n else 0] + [head[i + 1] - tail[i] for i in range(k)]
    minus = [tail[i] - head[i] for i in range(k)]

    mt = W.degree
    if n == mt + k:
        case = "b" if mt == k else "a"
    elif n > mt + k:
        case = "c"
    else:
        raise DecompositionBug(f"degree {mt} too large for n={n}, k={k}")

    ok_sign = {
        "a": all(x >= 0 for x in plus) and all(x <= 0 for x in minus),
        "b": all(x >= 0 for x in plus) and all(x >= 0 for x in minus),
        "c": all(x <= 0 for x in plus) and all(x >= 0 for x in minus),
    }[case]
    if not ok_sign:
        raise DecompositionBug(f"sign pattern broken for n={n}, k={k}: {plus} {minus}")
    dec = Decomposition(n, k, case, Poly(abs(x) for x in plus), Poly(abs(x) for x in minus),
                        tuple(plus), tuple(minus))
    if not dec.plus.is_symmetric(k) or not dec.minus.is_symmetric(k - 1):
        raise DecompositionBug(f"parts not symmetric for n={n}, k={k}")
    if dec.recompose() != W:
        raise DecompositionBug(f"recomposition failed for n={n}, k={k}")
    return dec
