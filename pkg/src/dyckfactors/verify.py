"""Invariant suites behind ``dyckfactors verify``.

Each suite returns a JSON-ready summary.  The first failing instance of any
check is kept as a counterexample.
"""
from __future__ import annotations

import itertools
import random
import time
from collections import Counter, defaultdict
from math import factorial

from .combinatorics import (
    count_factor,
    cyclic_of,
    enumerate_cyclic_compositions,
    enumerate_dyck,
    factor_table,
    rise_composition,
    w_oracle,
)
from .counting import (
    binomial,
    catalan,
    catalan_via_primitive,
    ccomp_count,
    w_formula,
    w_formula_multi,
    w_identities,
)
from .genfun import residual, series_from_counts, solve_functional_equation
from .polynomials import (
    gamma_expansion,
    gen_narayana_poly,
    hadamard,
    is_real_rooted,
    Poly,
    same_root_set,
    symmetric_decomposition,
    w_poly,
)
from .trees import (
    enumerate_markings,
    enumerate_trees,
    extended_leaf_decomposition,
    leaf_stats,
    marked_necklace_from_tree,
    phi,
    phi_inv,
    symmetry_bijection,
    tree_from_marked_necklace,
)


class _Suite:
    def __init__(self, name: str, n_max: int):
        self.name, self.n_max = name, n_max
        self.checks: dict[str, list] = defaultdict(lambda: [0, 0])
        self.counterexample = None

    def check(self, label: str, ok: bool, **detail) -> None:
        tally = self.checks[label]
        tally[0] += 1
        if not ok:
            tally[1] += 1
            if self.counterexample is None:
                self.counterexample = {"check": label, **{k: repr(v) for k, v in detail.items()}}

    def summary(self, start: float) -> dict:
        return {
            "suite": self.name,
            "n_max": self.n_max,
            "passed": all(bad == 0 for _, bad in self.checks.values()),
            "checks": {k: {"instances": n, "failures": bad} for k, (n, bad) in self.checks.items()},
            "counterexample": self.counterexample,
            "seconds": round(time.perf_counter() - start, 3),
        }


def suite_oracle(n_max: int) -> dict:
    start, s = time.perf_counter(), _Suite("oracle", n_max)
    for n in range(n_max + 1):
        for k in range(n + 1):
            for m in range(k + 1):
                s.check("w_formula = enumeration", w_formula(n, k, m) == w_oracle(n, k, m), n=n, k=k, m=m)
    for n in range(min(n_max, 10) + 1):
        for r in range(1, 5):
            table = factor_table(n, r)
            for ks in itertools.product(range(n + 1), repeat=r):
                if sum(ks) <= n:
                    s.check("w_formula_multi = enumeration", w_formula_multi(n, ks) == table.get(ks, 0), n=n, ks=ks)
    return s.summary(start)


def suite_bijections(n_max: int) -> dict:
    start, s = time.perf_counter(), _Suite("bijections", n_max)
    for n in range(n_max + 1):
        for w in enumerate_dyck(n):
            t = phi(w)
            s.check("phi_inv(phi(w)) = w", phi_inv(t) == w, w=w)
            s.check("phi(phi_inv(t)) = t", phi(phi_inv(t)) == t, w=w)
            s.check("statistics preserved",
                    (t.size, *leaf_stats(t)) == (n, count_factor(w, 1), count_factor(w, 2)), w=w)
            if n:
                lengths = extended_leaf_decomposition(t)
                s.check("long extended leaves = good leaves",
                        sum(1 for a in lengths if a >= 2) == leaf_stats(t)[1], w=w)
                s.check("extended leaves = rise composition", lengths == rise_composition(w), w=w)
                s.check("marked necklace round trip",
                        tree_from_marked_necklace(marked_necklace_from_tree(t)) == t, w=w)
    for k in range(1, (n_max - 1) // 2 + 1):
        fibers = Counter()
        trees = [t for t in enumerate_trees(2 * k + 1) if leaf_stats(t)[0] == k]
        for t in trees:
            fibers[cyclic_of(extended_leaf_decomposition(t))] += 1
        for cc, size in fibers.items():
            s.check("trees per necklace", size == binomial(2 * k + 1, k - 1), cc=cc, size=size)
        images = [symmetry_bijection(t) for t in trees]
        s.check("symmetry map injective", len(set(images)) == len(trees), k=k)
        for t, u in zip(trees, images):
            s.check("symmetry map swaps good leaves",
                    leaf_stats(u) == (k, k + 1 - leaf_stats(t)[1]) and u.size == t.size, t=t)
    # markings and rise compositions, grouped by necklace
    for n in range(1, n_max + 1):
        by_class = Counter(cyclic_of(rise_composition(w)) for w in enumerate_dyck(n))
        for k in range(1, n + 1):
            for cc in enumerate_cyclic_compositions(n, k):
                expected = cc.order * binomial(n, k - 1)
                marks = len(enumerate_markings(cc))
                s.check("marked necklaces", marks * k == expected, cc=cc, marks=marks)
                s.check("words per necklace", by_class[cc] * k == expected, cc=cc, words=by_class[cc])
    return s.summary(start)


def suite_identities(n_max: int) -> dict:
    start, s = time.perf_counter(), _Suite("identities", n_max)
    for k in range(1, n_max + 1):
        for j in range(1, n_max + 1):
            for m in range(k + 1):
                if 2 * k + j <= n_max:
                    rec = w_identities(k, m, j, "plus")
                    s.check("w_{2k+j} identity", rec["equal"], **rec)
                if j <= k and 2 * k - j <= n_max:
                    rec = w_identities(k, m, j, "minus")
                    s.check("w_{2k-j} identity", rec["equal"], **rec)
    for n in range(1, n_max + 1):
        s.check("Catalan from primitive classes", catalan_via_primitive(n) == catalan(n), n=n)
    for k in range(1, n_max + 1):
        for j in range(0, n_max + 1):
            for sign, total in (("plus", 2 * k + j), ("minus", 2 * k - j)):
                if total > n_max or (sign == "minus" and not 1 <= j <= k):
                    continue
                for m in range(k + 1):
                    direct = sum(1 for _ in enumerate_cyclic_compositions(total, k, m))
                    s.check("cyclic composition count", ccomp_count(k, m, j, sign) == direct,
                            k=k, m=m, j=j, sign=sign)
    for n in range(1, n_max + 1):
        for m in range(1, n + 1):
            s.check("Narayana symmetry", w_formula_multi(n, [m]) == w_formula_multi(n, [n + 1 - m]), n=n, m=m)
    for r in range(2, 5):
        for k in range(1, 7):
            head = [k] * (r - 1)
            for m in range(1, k + 1):
                s.check("r-fold symmetry (+1)", w_formula_multi(r * k + 1, head + [m])
                        == w_formula_multi(r * k + 1, head + [k + 1 - m]), r=r, k=k, m=m)
                # k = m = 1 pits an empty count against the lone peakless path
                if (k, m) != (1, 1):
                    s.check("r-fold symmetry (-1)", w_formula_multi(r * k - 1, head + [m])
                            == w_formula_multi(r * k - 1, head + [k - m]), r=r, k=k, m=m)
    return s.summary(start)


def suite_series(n_max: int) -> dict:
    start, s = time.perf_counter(), _Suite("series", n_max)
    w = solve_functional_equation(n_max)
    s.check("series = formula", w == series_from_counts(n_max, w_formula), order=n_max)
    s.check("residual vanishes", residual(w).is_zero(), order=n_max)
    for n in range(min(n_max, 12) + 1):
        for k in range(n + 1):
            for m in range(k + 1):
                s.check("series = enumeration", w[(n, k, m)] == w_oracle(n, k, m), n=n, k=k, m=m)
    return s.summary(start)


def random_malo_pair(rng: random.Random) -> tuple[Poly, Poly]:
    """A real-rooted ``f`` and a ``g`` whose roots are all nonpositive."""
    f_roots = [rng.randint(-9, 9) for _ in range(rng.randint(1, 7))]
    g_roots = [-rng.randint(0, 9) for _ in range(rng.randint(1, 7))]
    if rng.random() < 0.5:
        g_roots = [-r for r in g_roots]
    return Poly.from_roots(f_roots, rng.randint(1, 5)), Poly.from_roots(g_roots, rng.choice([-3, -1, 1, 2]))


def malo_trials(seed: int, trials: int = 200) -> tuple[int, tuple | None]:
    """Hadamard products of random pairs; returns (failures, first failing pair)."""
    rng = random.Random(seed)
    bad, first = 0, None
    for _ in range(trials):
        f, g = random_malo_pair(rng)
        h = hadamard(f, g)
        if h.is_zero() or h.is_constant():
            continue
        if not is_real_rooted(h):
            bad += 1
            first = first or (f, g)
    return bad, first


def suite_polys(n_max: int, seed: int = 2024) -> dict:
    start, s = time.perf_counter(), _Suite("polys", n_max)
    bad, pair = malo_trials(seed)
    s.check("Hadamard product of real-rooted pair", bad == 0, seed=seed, pair=pair)
    for n in range(1, n_max + 1):
        for k in range(1, n + 1):
            s.check("W real-rooted", is_real_rooted(w_poly(n, k)), n=n, k=k)
            if k < n:
                s.check("reflected roots", same_root_set(w_poly(n, k), w_poly(n, n - k)), n=n, k=k)
            dec = symmetric_decomposition(n, k)  # raises on any broken invariant
            s.check("decomposition", dec.recompose() == w_poly(n, k), n=n, k=k)
    for k in range(1, n_max // 2 + 1):
        for j in range(1, 4):
            lhs = w_poly(2 * k + j, k) * j
            s.check("W_{2k+j} via Nar^(j-1)",
                    lhs == gen_narayana_poly(k + j - 1, j - 1) * binomial(2 * k + j, k - 1), k=k, j=j)
        for j in range(1, k + 1):
            lhs = w_poly(2 * k - j, k) * j
            s.check("W_{2k-j} via Nar^(j-1)",
                    lhs == gen_narayana_poly(k - 1, j - 1) * binomial(2 * k - j, k - 1), k=k, j=j)
        s.check("W_{2k,k}", w_poly(2 * k, k) == Poly(
            [0] + [catalan(k) * binomial(k - 1, m - 1) * binomial(k, m) for m in range(1, k + 1)]), k=k)
        g = gamma_expansion(w_poly(2 * k + 1, k), k + 1)
        s.check("gamma W_{2k+1,k}", g.is_positive and list(g.gammas) == gamma_plus(k), k=k)
        if k >= 2:
            g = gamma_expansion(w_poly(2 * k - 1, k), k)
            s.check("gamma W_{2k-1,k}", g.is_positive and list(g.gammas) == gamma_minus(k), k=k)
    return s.summary(start)


def gamma_plus(k: int) -> list[int]:
    """Gamma vector of ``W_{2k+1,k}`` about degree ``k+1`` from the closed form."""
    out = [0] * ((k + 1) // 2 + 1)
    for j in range(1, (k + 1) // 2 + 1):
        out[j] = binomial(2 * k + 1, k - 1) * factorial(k - 1) // (
            factorial(k - 2 * j + 1) * factorial(j - 1) * factorial(j))
    return out


def gamma_minus(k: int) -> list[int]:
    """Gamma vector of ``W_{2k-1,k}`` about degree ``k`` (exponent ``k - 2j``)."""
    out = [0] * (k // 2 + 1)
    for j in range(1, k // 2 + 1):
        out[j] = binomial(2 * k - 1, k - 1) * factorial(k - 2) // (
            factorial(k - 2 * j) * factorial(j - 1) * factorial(j))
    return out


SUITES = {
    "oracle": suite_oracle,
    "bijections": suite_bijections,
    "identities": suite_identities,
    "series": suite_series,
    "polys": suite_polys,
}


def run_suite(name: str, n_max: int, seed: int = 2024) -> dict:
    if name == "all":
        parts = [run_suite(key, n_max, seed) for key in SUITES]
        return {"suite": "all", "n_max": n_max, "passed": all(p["passed"] for p in parts), "suites": parts}
    if name not in SUITES:
        raise KeyError(f"unknown suite {name!r}")
    if name == "polys":
        return suite_polys(n_max, seed)
    return SUITES[name](n_max)
