"""Closed-form counts in exact integer arithmetic.

Products of binomials are formed first and divided last; every division
checks that it is exact, so a transcription slip in a formula shows up as an
:class:`InexactDivision` rather than a silently wrong number.
"""
from __future__ import annotations

from fractions import Fraction
from math import comb, factorial, gcd
from typing import Sequence

from .combinatorics import enumerate_cyclic_compositions
from .errors import DyckFactorsError, InexactDivision


def binomial(n: int, k: int) -> int:
    """Binomial coefficient, zero outside ``0 <= k <= n`` except ``C(-1, -1) = 1``."""
    if n == -1 and k == -1:
        return 1
    if k < 0 or n < 0 or k > n:
        return 0
    return comb(n, k)


def exact_div(a: int, b: int) -> int:
    q, r = divmod(a, b)
    if r:
        raise InexactDivision(f"{a} / {b} is not an integer")
    return q


def catalan(n: int) -> int:
    if n < 0:
        return 0
    return exact_div(comb(2 * n, n), n + 1)


def narayana(n: int, k: int) -> int:
    if n == 0 and k == 0:
        return 1
    if not 1 <= k <= n:
        return 0
    return exact_div(binomial(n, k) * binomial(n, k - 1), n)


def gen_narayana(n: int, k: int, r: int) -> int:
    """Paths with ``n`` up steps ending at height ``r`` with ``k`` peaks."""
    if not 0 <= r <= n or not 0 <= k <= n - r:
        return 0
    return exact_div((r + 1) * binomial(n + 1, k) * binomial(n - r - 1, k - 1), n + 1)


def multinomial(parts: Sequence[int]) -> int:
    if any(p < 0 for p in parts):
        return 0
    out = factorial(sum(parts))
    for p in parts:
        out = exact_div(out, factorial(p))
    return out


def w_formula(n: int, k: int, m: int) -> int:
    """Dyck paths of semilength ``n`` with ``k`` UD-factors and ``m`` UUD-factors."""
    if m == 0:
        return 1 if n == k and k >= 0 else 0
    if m < 0 or m > k or k + m > n:
        return 0
    return exact_div(binomial(n, k - 1) * binomial(n - k - 1, m - 1) * binomial(k, m), k)


def w_formula_multi(n: int, ks: Sequence[int]) -> int:
    """Dyck paths of semilength ``n`` with ``ks[i-1]`` factors ``U^i D`` for each ``i``."""
    ks = list(ks)
    if not ks:
        raise DyckFactorsError("need at least one factor count")
    if any(a < b for a, b in zip(ks, ks[1:])) or ks[-1] < 0 or n < sum(ks):
        return 0
    k1, kr = ks[0], ks[-1]
    if k1 == 0:
        # only the empty path has no peaks
        return 1 if n == 0 else 0
    khat = sum(ks[:-1])
    multi = multinomial([a - b for a, b in zip(ks, ks[1:])] + [kr])
    if kr > 0:
        return exact_div(binomial(n, k1 - 1) * binomial(n - khat - 1, kr - 1) * multi, k1)
    if n == khat:
        return exact_div(binomial(n, k1 - 1) * multi, k1)
    return 0


def w_identities(k: int, m: int, j: int = 1, sign: str = "plus") -> dict:
    """Both sides of ``w_{2k+-j,k,m} = (1/j) C(2k+-j, k-1) N^{(j-1)}_{., m}``.

    ``j = 1`` gives the Narayana forms for ``2k+1`` and ``2k-1``.
    """
    if sign == "plus":
        n = 2 * k + j
        rhs = Fraction(binomial(n, k - 1) * gen_narayana(k + j - 1, m, j - 1), j)
    elif sign == "minus":
        if not 1 <= j <= k:
            raise DyckFactorsError("need 1 <= j <= k")
        n = 2 * k - j
        rhs = Fraction(binomial(n, k - 1) * gen_narayana(k - 1, m, j - 1), j)
    else:
        raise DyckFactorsError(f"unknown sign {sign!r}")
    lhs = w_formula(n, k, m)
    return {"n": n, "k": k, "m": m, "j": j, "sign": sign, "lhs": lhs, "rhs": rhs, "equal": lhs == rhs}


# ------------------------------------------------------- number theory


def divisors(n: int) -> list[int]:
    return [d for d in range(1, n + 1) if n % d == 0]


def _factor(n: int) -> dict[int, int]:
    out: dict[int, int] = {}
    p = 2
    while p * p <= n:
        while n % p == 0:
            out[p] = out.get(p, 0) + 1
            n //= p
        p += 1
    if n > 1:
        out[n] = out.get(n, 0) + 1
    return out


def totient(n: int) -> int:
    result = n
    for p in _factor(n):
        result = result // p * (p - 1)
    return result


def mobius(n: int) -> int:
    f = _factor(n)
    if any(e > 1 for e in f.values()):
        return 0
    return -1 if len(f) % 2 else 1


def _gcd_nonzero(*xs: int) -> int:
    g = 0
    for x in xs:
        if x:
            g = gcd(g, x)
    return g


def ccomp_count(k: int, m: int, j: int, sign: str = "plus") -> int:
    """Number of cyclic compositions of ``2k + j`` (``sign='plus'``), ``2k``
    (``'zero'``) or ``2k - j`` (``'minus'``) into ``k`` parts with ``m`` parts >= 2."""
    if k < 1 or m < 0 or j < 0:
        raise DyckFactorsError("need k >= 1 and m, j >= 0")
    if sign == "zero" or j == 0:
        d = _gcd_nonzero(k, m)
        total = sum(totient(s) * binomial(k // s - 1, m // s - 1) * binomial(k // s, m // s)
                    for s in divisors(d) if m % s == 0)
        return exact_div(total, k)
    d = _gcd_nonzero(k, m, j)
    if sign == "plus":
        total = sum(totient(s) * gen_narayana((k + j) // s - 1, m // s, j // s - 1) for s in divisors(d))
    elif sign == "minus":
        if j > k:
            raise DyckFactorsError("need j <= k")
        total = sum(totient(s) * gen_narayana(k // s - 1, m // s, j // s - 1) for s in divisors(d))
    else:
        raise DyckFactorsError(f"unknown sign {sign!r}")
    return exact_div(total, j)


def catalan_via_primitive(n: int) -> int:
    """Catalan number assembled from primitive cyclic compositions of each ``n/d``."""
    if n < 1:
        raise DyckFactorsError("need n >= 1")
    total = Fraction(0)
    for d in divisors(n):
        for parts in range(1, n // d + 1):
            for cc in enumerate_cyclic_compositions(n // d, parts):
                if cc.is_primitive:
                    total += Fraction(binomial(n, cc.order * d - 1), d)
    if total.denominator != 1:
        raise InexactDivision(f"sum is {total}")
    return int(total)
