import itertools
import random

import pytest
from hypothesis import given, settings, strategies as st

from dyckfactors.combinatorics import (
    DyckWord,
    composition_word,
    compositions,
    count_factor,
    cyclic_of,
    distinct_dominating_rotations,
    dominating_shifts,
    enumerate_compositions,
    enumerate_cyclic_compositions,
    enumerate_dyck,
    enumerate_generalized,
    factor_profile,
    is_dominating,
    primitive_root,
    rise_composition,
    unique_balanced_shift,
    w_oracle,
    w_oracle_multi,
)
from dyckfactors.counting import catalan, gen_narayana
from dyckfactors.errors import BadCounts, DyckFactorsError, EmptyWord


def brute_dyck(n):
    """Filter all 2^(2n) words; independent of the DFS enumerator."""
    out = []
    for bits in itertools.product("UD", repeat=2 * n):
        level = 0
        for c in bits:
            level += 1 if c == "U" else -1
            if level < 0:
                break
        else:
            if level == 0:
                out.append("".join(bits))
    return out


def test_enumerate_small():
    assert [w.steps for w in enumerate_dyck(0)] == [""]
    assert len(list(enumerate_dyck(3))) == 5
    assert sum(1 for _ in enumerate_dyck(10)) == 16796


@pytest.mark.parametrize("n", range(8))
def test_enumerate_matches_brute_force_in_order(n):
    assert [w.steps for w in enumerate_dyck(n)] == brute_dyck(n)


def test_dyck_word_validation():
    assert DyckWord.from_string("UUDD").semilength == 2
    with pytest.raises(DyckFactorsError):
        DyckWord.from_string("DU")
    with pytest.raises(DyckFactorsError):
        DyckWord.from_string("UUD")
    assert DyckWord.from_string("UUD", height=1).height == 1
    with pytest.raises(DyckFactorsError):
        DyckWord.from_string("UXD")


def test_generalized_paths_counted_by_generalized_narayana():
    for n in range(1, 8):
        for r in range(0, n + 1):
            words = list(enumerate_generalized(n, r))
            assert all(w.height == r and w.semilength == n for w in words)
            by_peaks = {}
            for w in words:
                by_peaks[count_factor(w, 1)] = by_peaks.get(count_factor(w, 1), 0) + 1
            for k, c in by_peaks.items():
                assert c == gen_narayana(n, k, r)


def test_count_factor_examples():
    w = "UDUUDUUDDD"
    assert count_factor(w, 1) == 3
    assert count_factor(w, 2) == 2
    assert count_factor("", 1) == 0 and count_factor("", 3) == 0
    assert [count_factor("UUUDDD", r) for r in (1, 2, 3)] == [1, 1, 1]
    assert factor_profile(w, 2) == (3, 2)


def test_count_factor_against_substring_scan():
    for n in range(7):
        for w in enumerate_dyck(n):
            s = w.steps
            for r in (1, 2, 3):
                pat = "U" * r + "D"
                scan = sum(1 for i in range(len(s)) if s.startswith(pat, i))
                assert count_factor(w, r) == scan


def test_rise_composition():
    assert rise_composition("UUDDUD") == (2, 1)
    assert rise_composition("U" * 6 + "D" * 6) == (6,)
    assert rise_composition("UDUUDUUDDD") == (1, 2, 2)
    with pytest.raises(EmptyWord):
        rise_composition("")


def test_dominating_shifts_examples():
    assert len(dominating_shifts("UUUDD", 1)) == 1
    assert dominating_shifts("UDUD", 1) == []
    assert is_dominating("UUD", 1) and not is_dominating("UD", 1)


@settings(max_examples=1000, deadline=None)
@given(st.integers(1, 6), st.integers(1, 6), st.integers(1, 3), st.randoms(use_true_random=False))
def test_cycle_lemma(k, j, r, rnd):
    # r*k + j U's against k D's: exactly j rotations are r-dominating
    letters = ["U"] * (r * k + j) + ["D"] * k
    rnd.shuffle(letters)
    s = "".join(letters)
    assert len(dominating_shifts(s, r)) == j


def test_distinct_rotations_collapse_for_periodic_words():
    s = "UUD" * 3
    assert len(dominating_shifts(s, 1)) == 3
    assert distinct_dominating_rotations(s, 1) == {"UUD" * 3}


def test_unique_balanced_shift():
    assert unique_balanced_shift("S") == 0
    assert unique_balanced_shift("OSS") == 0
    seq = "SOSOS"
    i = unique_balanced_shift(seq)
    good = []
    for t in range(5):
        rot = seq[t:] + seq[:t]
        level = 0
        ok = True
        for c in rot[:-1]:
            level += 1 if c == "O" else -1
            ok &= level >= 0
        if ok:
            good.append(t)
    assert good == [i]
    with pytest.raises(BadCounts):
        unique_balanced_shift("OS")


@settings(max_examples=300, deadline=None)
@given(st.integers(0, 8), st.randoms(use_true_random=False))
def test_unique_balanced_shift_lands_on_balanced_word(k, rnd):
    seq = ["O"] * k + ["S"] * (k + 1)
    rnd.shuffle(seq)
    i = unique_balanced_shift(seq)
    rot = seq[i:] + seq[:i]
    assert rot[-1] == "S"
    level = 0
    for x in rot[:-1]:
        level += 1 if x == "O" else -1
        assert level >= 0
    assert level == 0


def test_cyclic_composition_examples():
    assert cyclic_of((1, 2, 1, 1, 2, 1)).order == 3
    assert cyclic_of((1, 1, 1)).order == 1
    cc = cyclic_of((4, 1))
    assert cc.canonical == (1, 4) and cc.order == 2
    assert cyclic_of((2, 3, 1)) == cyclic_of((3, 1, 2))
    with pytest.raises(DyckFactorsError):
        cyclic_of(())
    with pytest.raises(DyckFactorsError):
        cyclic_of((1, 0))


def test_primitive_root():
    assert primitive_root((1, 2, 1, 1, 2, 1)) == (cyclic_of((1, 2, 1)), 2)
    assert primitive_root((1, 3)) == (cyclic_of((1, 3)), 1)
    assert primitive_root((2, 2, 2, 2)) == (cyclic_of((2,)), 4)


@settings(max_examples=200, deadline=None)
@given(st.lists(st.integers(1, 4), min_size=1, max_size=8))
def test_order_is_number_of_distinct_rotations(parts):
    rots = {tuple(parts[i:] + parts[:i]) for i in range(len(parts))}
    cc = cyclic_of(parts)
    assert cc.order == len(rots)
    assert set(cc.representatives()) == rots
    assert cc.canonical == min(rots)


def test_enumerate_compositions():
    assert set(enumerate_compositions(5, 2, 1)) == {(1, 4), (4, 1)}
    assert list(enumerate_compositions(4, 4, 0)) == [(1, 1, 1, 1)]
    assert len(list(enumerate_compositions(7, 3, 2))) == 9
    for n in range(1, 9):
        for k in range(1, n + 1):
            every = list(compositions(n, k))
            assert len(every) == len(set(every))
            assert sorted(every) == sorted(c for c in itertools.product(range(1, n + 1), repeat=k) if sum(c) == n)


def test_enumerate_cyclic_compositions_partition_the_compositions():
    for n in range(1, 10):
        for k in range(1, n + 1):
            classes = list(enumerate_cyclic_compositions(n, k))
            assert sum(cc.order for cc in classes) == len(list(compositions(n, k)))


def test_w_oracle_examples(golden_table):
    assert w_oracle(5, 2, 1) == 5
    assert w_oracle(6, 3, 2) == 30
    assert w_oracle(0, 0, 0) == 1
    for (n, k, m), w in golden_table.items():
        assert w_oracle(n, k, m) == w


def test_w_oracle_multi_examples():
    assert w_oracle_multi(4, [2]) == 6
    for n in range(6):
        assert w_oracle_multi(n, [n]) == 1
    # summing out the last statistic recovers the two-statistic count
    assert sum(w_oracle_multi(7, [3, 3, m]) for m in range(4)) == w_oracle(7, 3, 3)
    assert sum(w_oracle_multi(7, [3, m]) for m in range(4)) == w_oracle_multi(7, [3])


def test_oracle_rows_sum_to_catalan():
    for n in range(10):
        assert sum(w_oracle(n, k, m) for k in range(n + 1) for m in range(k + 1)) == catalan(n)


def test_composition_word_roundtrip():
    rnd = random.Random(7)
    for _ in range(100):
        parts = [rnd.randint(1, 4) for _ in range(rnd.randint(1, 6))]
        word = composition_word(parts)
        assert word.count("D") == len(parts)
        assert [len(seg) + 1 for seg in word.split("D")[:-1]] == parts
