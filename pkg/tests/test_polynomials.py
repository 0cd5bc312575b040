import random
from math import factorial

import pytest
import sympy
from hypothesis import given, settings, strategies as st

from dyckfactors.counting import binomial, catalan
from dyckfactors.errors import NotRealRooted, NotSymmetric
from dyckfactors.polynomials import (
    Poly,
    bar_narayana_poly,
    gamma_expansion,
    gen_narayana_poly,
    hadamard,
    interlaces,
    is_real_rooted,
    isolate_roots,
    narayana_poly,
    poly_gcd,
    same_root_set,
    squarefree,
    sturm_distinct_real_roots,
    symmetric_decomposition,
    w_poly,
)
from dyckfactors.verify import gamma_minus, gamma_plus, malo_trials, random_malo_pair

T = sympy.Symbol("t")


def to_sympy(p: Poly):
    return sympy.Poly(list(reversed([sympy.Rational(str(c)) for c in p.coeffs])), T)


def sympy_real_rooted(p: Poly) -> bool:
    sp = to_sympy(p)
    return len(sympy.real_roots(sp)) == sp.degree()


def sympy_interlaces(g: Poly, f: Poly) -> bool:
    """Same definition as the library, evaluated on sympy's exact real roots."""
    if g.degree <= 0:
        return True
    if f.degree <= 0 or f.degree not in (g.degree, g.degree + 1):
        return False
    us = sorted(sympy.real_roots(to_sympy(f)), reverse=True)
    vs = sorted(sympy.real_roots(to_sympy(g)), reverse=True)
    merged = []
    for i, u in enumerate(us):
        merged.append(u)
        if i < len(vs):
            merged.append(vs[i])
    return all(a >= b for a, b in zip(merged, merged[1:]))


def test_w_poly_examples():
    assert w_poly(5, 2) == Poly([0, 5, 5])
    for k in range(1, 8):
        assert w_poly(k, k) == Poly([1])
    assert w_poly(6, 3) == Poly([0, 15, 30, 5])


def test_families():
    assert narayana_poly(3) == Poly([0, 1, 3, 1])
    for k in range(8):
        assert gen_narayana_poly(k, 0) == narayana_poly(k)
    for k in range(1, 9):
        assert w_poly(2 * k + 1, k) == narayana_poly(k) * binomial(2 * k + 1, k - 1)
    for k in range(14):
        for j in range(k + 1):
            assert all(isinstance(c, int) for c in bar_narayana_poly(k, j).coeffs)


def test_poly_arithmetic_against_sympy():
    rnd = random.Random(11)
    for _ in range(100):
        a = Poly([rnd.randint(-5, 5) for _ in range(rnd.randint(1, 6))])
        b = Poly([rnd.randint(-5, 5) for _ in range(rnd.randint(1, 5))])
        if b.is_zero():
            continue
        q, r = divmod(a, b)
        sq, sr = sympy.div(to_sympy(a), to_sympy(b))
        assert to_sympy(q).as_expr() == sq.as_expr() and to_sympy(r).as_expr() == sr.as_expr()
        assert q * b + r == a
        if not a.is_zero():
            assert to_sympy(poly_gcd(a, b)).as_expr() == sympy.gcd(to_sympy(a), to_sympy(b)).monic().as_expr()


def test_hadamard():
    f = Poly([3, 1, 4, 1])
    assert hadamard(f, Poly([1])) == Poly([3])
    # t(t-1)^2 * (t-1)^3, coefficientwise, against a direct expansion
    f = Poly([0, 1]) * Poly([-1, 1]) ** 2
    g = Poly([-1, 1]) ** 3
    expected = Poly([sympy.expand(T * (T - 1) ** 2).coeff(T, i) * sympy.expand((T - 1) ** 3).coeff(T, i)
                     for i in range(4)])
    assert hadamard(f, g) == expected


def test_sturm_counts():
    assert sturm_distinct_real_roots(Poly([-1, 0, 1])) == 2
    assert sturm_distinct_real_roots(Poly([1, 0, 1])) == 0
    assert sturm_distinct_real_roots(Poly([0, 15, 30, 5])) == 3


def test_is_real_rooted_examples():
    assert is_real_rooted(Poly([1, 3, 3, 1]))
    assert not is_real_rooted(Poly([1, 1, 1]))
    assert is_real_rooted(Poly([7]))


def test_w_poly_real_rooted_matches_sympy():
    for n in range(1, 15):
        for k in range(1, n + 1):
            assert is_real_rooted(w_poly(n, k))
            assert sympy_real_rooted(w_poly(n, k))


@settings(max_examples=150, deadline=None)
@given(st.lists(st.integers(-6, 6), min_size=1, max_size=7))
def test_is_real_rooted_against_sympy(coeffs):
    p = Poly(coeffs)
    if p.is_zero():
        return
    assert is_real_rooted(p) == sympy_real_rooted(p)


@settings(max_examples=100, deadline=None)
@given(st.lists(st.integers(-4, 4), min_size=1, max_size=5), st.integers(1, 3))
def test_real_rooted_with_repeated_roots(roots, lead):
    p = Poly.from_roots(roots, lead) * Poly.from_roots(roots[:1])
    assert is_real_rooted(p)
    assert len(isolate_roots(p)) == len(set(roots))


def test_isolate_roots_brackets_roots():
    p = Poly.from_roots([-3, -1, 0, 2, 5])
    ivs = isolate_roots(p)
    assert len(ivs) == 5
    for (lo, hi), r in zip(ivs, [-3, -1, 0, 2, 5]):
        assert lo < r <= hi


def test_interlacing_examples():
    assert interlaces(Poly([1]), narayana_poly(3))
    assert interlaces(Poly([1, 1]), Poly([0, 2, 1]))
    assert not interlaces(Poly([0, 1]), Poly([1, 1]) * Poly([2, 1]) * Poly([-3, 1]))
    with pytest.raises(NotRealRooted):
        interlaces(Poly([1, 0, 1]), Poly([0, 1]))


def test_interlacing_against_sympy():
    rnd = random.Random(5)
    for _ in range(150):
        f = Poly.from_roots([rnd.randint(-6, 6) for _ in range(rnd.randint(1, 4))])
        g = Poly.from_roots([rnd.randint(-6, 6) for _ in range(rnd.randint(0, f.degree))])
        assert interlaces(g, f) == sympy_interlaces(g, f), (g, f)
    for k in range(1, 5):
        for n in range(k, 10):
            assert interlaces(w_poly(n, k), w_poly(n + 1, k)) == sympy_interlaces(w_poly(n, k), w_poly(n + 1, k))


def test_narayana_3_vs_4_recorded():
    assert interlaces(narayana_poly(3), narayana_poly(4))


def test_same_root_set():
    f = Poly([1, 2, 1])
    assert same_root_set(f, f * 3)
    assert same_root_set(w_poly(7, 2), w_poly(7, 5))
    assert not same_root_set(Poly([0, 1]), Poly([1, 1]))
    for n in range(2, 16):
        for k in range(1, n):
            assert same_root_set(w_poly(n, k), w_poly(n, n - k))


def test_squarefree():
    p = Poly.from_roots([1, 1, 2, 2, 2, 3])
    assert squarefree(p) == Poly.from_roots([1, 2, 3])


def test_gamma_examples():
    assert gamma_expansion(w_poly(5, 2), 3).gammas == (0, 5)
    for k in range(2, 9):
        g = gamma_expansion(narayana_poly(k), k + 1)
        want = [0] + [factorial(k - 1) // (factorial(k - 2 * j + 1) * factorial(j - 1) * factorial(j))
                      for j in range(1, (k + 1) // 2 + 1)]
        assert list(g.gammas) == want
        assert g.reconstruct() == narayana_poly(k)
    with pytest.raises(NotSymmetric):
        gamma_expansion(w_poly(6, 2), 3)


def test_gamma_closed_forms():
    for k in range(1, 11):
        g = gamma_expansion(w_poly(2 * k + 1, k), k + 1)
        assert list(g.gammas) == gamma_plus(k) and g.is_positive
        if k >= 2:
            g = gamma_expansion(w_poly(2 * k - 1, k), k)
            assert list(g.gammas) == gamma_minus(k) and g.is_positive


def test_decomposition_examples():
    d = symmetric_decomposition(4, 2)
    assert (d.case, d.plus, d.minus) == ("b", Poly([0, 2]), Poly([2, 2]))
    d = symmetric_decomposition(5, 2)
    assert (d.case, d.plus, d.minus) == ("c", Poly(), Poly([5, 5]))
    d = symmetric_decomposition(5, 3)
    assert (d.case, d.plus, d.minus) == ("a", Poly([0, 10, 10]), Poly())
    d = symmetric_decomposition(5, 4)
    assert (d.case, d.plus, d.minus) == ("a", Poly([0, 10, 10, 10]), Poly([0, 10, 10]))
    d = symmetric_decomposition(1, 1)
    assert (d.plus, d.minus) == (Poly([1, 1]), Poly([1]))


def test_decomposition_invariants():
    for n in range(1, 21):
        for k in range(1, n + 1):
            d = symmetric_decomposition(n, k)
            assert d.plus.is_symmetric(k) and d.minus.is_symmetric(k - 1)
            assert all(c >= 0 for c in d.plus.coeffs + d.minus.coeffs)
            assert d.recompose() == w_poly(n, k)


def test_w2k_middle_matches_catalan_form():
    for k in range(1, 10):
        assert w_poly(2 * k, k) == Poly([0] + [catalan(k) * binomial(k - 1, m - 1) * binomial(k, m)
                                              for m in range(1, k + 1)])


def test_malo_seeded_200():
    bad, pair = malo_trials(seed=2024, trials=200)
    assert bad == 0, pair


@settings(max_examples=200, deadline=None)
@given(st.randoms(use_true_random=False))
def test_malo_property(rnd):
    f, g = random_malo_pair(rnd)
    h = hadamard(f, g)
    if h.degree >= 1:
        assert is_real_rooted(h)
        assert sympy_real_rooted(h)


def test_malo_needs_same_sign_roots():
    # g with roots of both signs: (t^2 - 1) * (t^2 + 2t - 3) coefficientwise is t^2 + 3
    f = Poly.from_roots([-1, 1])
    g = Poly.from_roots([-3, 1])
    assert hadamard(f, g) == Poly([3, 0, 1])
    assert not is_real_rooted(hadamard(f, g))
