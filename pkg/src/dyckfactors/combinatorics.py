"""Dyck words, compositions, cyclic compositions and the cycle lemma.

Everything here is brute force on purpose: the enumerations in this module
are the ground truth the closed formulas in :mod:`dyckfactors.counting` are
checked against.
"""
from __future__ import annotations

from collections import Counter
from dataclasses import dataclass
from functools import lru_cache
from typing import Iterable, Iterator, Sequence

from .errors import BadCounts, DyckFactorsError, EmptyWord

_BITS_TO_STEPS = str.maketrans("10", "UD")
_STEPS_TO_BITS = str.maketrans("UD", "10")


class DyckWord:
    """A word over ``{U, D}`` whose prefixes never dip below height zero.

    Steps are packed into an integer, first step in the most significant
    bit, ``U = 1`` and ``D = 0``.  ``height`` is the final height; an
    ordinary Dyck word has height 0, a generalized path ending at height
    ``r`` (the ``D^{(r)}`` family) has height ``r``.
    """

    __slots__ = ("bits", "length")

    def __init__(self, bits: int, length: int, height: int = 0):
        if length < 0 or bits < 0 or bits >> length:
            raise DyckFactorsError(f"bit pattern {bits} does not fit in {length} steps")
        level = 0
        for i in range(length - 1, -1, -1):
            level += 1 if (bits >> i) & 1 else -1
            if level < 0:
                raise DyckFactorsError("prefix with more D than U")
        if level != height:
            raise DyckFactorsError(f"word ends at height {level}, expected {height}")
        self.bits = bits
        self.length = length

    @classmethod
    def _unchecked(cls, bits: int, length: int) -> "DyckWord":
        w = object.__new__(cls)
        w.bits = bits
        w.length = length
        return w

    @classmethod
    def from_string(cls, steps: str, height: int = 0) -> "DyckWord":
        steps = steps.strip().upper()
        if set(steps) - {"U", "D"}:
            raise DyckFactorsError(f"not a word over U/D: {steps!r}")
        bits = int(steps.translate(_STEPS_TO_BITS), 2) if steps else 0
        return cls(bits, len(steps), height)

    @property
    def steps(self) -> str:
        if not self.length:
            return ""
        return format(self.bits, f"0{self.length}b").translate(_BITS_TO_STEPS)

    @property
    def semilength(self) -> int:
        """Number of up steps."""
        return bin(self.bits).count("1")

    @property
    def height(self) -> int:
        return 2 * self.semilength - self.length

    def runs(self) -> tuple[int, ...]:
        """Lengths of the maximal U-runs, left to right."""
        return tuple(len(seg) for seg in self.steps.split("D") if seg)

    def __len__(self) -> int:
        return self.length

    def __str__(self) -> str:
        return self.steps

    def __repr__(self) -> str:
        return f"DyckWord({self.steps!r})"

    def __eq__(self, other) -> bool:
        if isinstance(other, DyckWord):
            return self.bits == other.bits and self.length == other.length
        return NotImplemented

    def __hash__(self) -> int:
        return hash((self.bits, self.length))


def _as_steps(w) -> str:
    return w.steps if isinstance(w, DyckWord) else str(w)


def _walk(n_up: int, n_down: int) -> Iterator[DyckWord]:
    # explicit stack; pushing D before U makes U pop first, i.e. lex order U < D
    length = n_up + n_down
    stack = [(0, 0, 0)]
    while stack:
        bits, u, d = stack.pop()
        if u == n_up and d == n_down:
            yield DyckWord._unchecked(bits, length)
            continue
        if d < n_down and d < u:
            stack.append((bits << 1, u, d + 1))
        if u < n_up:
            stack.append(((bits << 1) | 1, u + 1, d))


def enumerate_dyck(n: int) -> Iterator[DyckWord]:
    """All Dyck words of semilength ``n`` in lexicographic order (U < D)."""
    if n < 0:
        raise DyckFactorsError("semilength must be nonnegative")
    return _walk(n, n)


def enumerate_generalized(n: int, r: int) -> Iterator[DyckWord]:
    """Paths with ``n`` up steps and ``n - r`` down steps that stay weakly above the axis."""
    if not 0 <= r <= n:
        raise DyckFactorsError("need 0 <= r <= n")
    return _walk(n, n - r)


def count_factor(w, r: int) -> int:
    """Number of contiguous occurrences of ``U^r D`` in ``w``."""
    if r < 1:
        raise DyckFactorsError("r must be positive")
    # every segment but the last is a U-run closed by a D
    segments = _as_steps(w).split("D")
    return sum(1 for seg in segments[:-1] if len(seg) >= r)


def factor_profile(w, r: int) -> tuple[int, ...]:
    """``(k_1, ..., k_r)`` where ``k_i`` counts ``U^i D`` factors."""
    return tuple(count_factor(w, i) for i in range(1, r + 1))


def rise_composition(w) -> tuple[int, ...]:
    steps = _as_steps(w)
    if not steps:
        raise EmptyWord("the empty word has no rise composition")
    return tuple(len(seg) for seg in steps.split("D") if seg)


def composition_word(parts: Sequence[int]) -> str:
    """The word ``U^{a_1 - 1} D U^{a_2 - 1} D ... U^{a_k - 1} D``."""
    return "".join("U" * (a - 1) + "D" for a in parts)


# ---------------------------------------------------------------- cycle lemma


def _rotations(seq):
    return (seq[i:] + seq[:i] for i in range(len(seq)))


def is_dominating(s: str, k: int) -> bool:
    """Every nonempty prefix has more U than ``k`` times its number of D."""
    ups = downs = 0
    for c in s:
        if c == "U":
            ups += 1
        else:
            downs += 1
        if ups <= k * downs:
            return False
    return True


def dominating_shifts(s, k: int) -> list[int]:
    """Start indices of the rotations of ``s`` that are ``k``-dominating.

    Indices refer to positions in ``s``, so a rotation that appears several
    times because ``s`` is periodic is reported once per start position.
    """
    s = _as_steps(s)
    return [i for i, rot in enumerate(_rotations(s)) if is_dominating(rot, k)]


def distinct_dominating_rotations(s, k: int) -> set[str]:
    s = _as_steps(s)
    return {s[i:] + s[:i] for i in dominating_shifts(s, k)}


def unique_balanced_shift(seq: Sequence, circle="O", square="S") -> int:
    """Start index of the only rotation whose proper prefixes never have more squares than circles.

    ``seq`` must hold ``k`` circles and ``k + 1`` squares.
    """
    n_circle = sum(1 for x in seq if x == circle)
    n_square = sum(1 for x in seq if x == square)
    if n_circle + n_square != len(seq) or n_square != n_circle + 1:
        raise BadCounts(f"need k {circle!r} and k+1 {square!r}, got {n_circle} and {n_square}")
    seq = list(seq)
    found = []
    for i in range(len(seq)):
        rot = seq[i:] + seq[:i]
        level, ok = 0, True
        for x in rot[:-1]:
            level += 1 if x == circle else -1
            if level < 0:
                ok = False
                break
        if ok:
            found.append(i)
    assert len(found) == 1, found
    return found[0]


# ------------------------------------------------------------- compositions


def check_composition(parts: Iterable[int]) -> tuple[int, ...]:
    parts = tuple(int(a) for a in parts)
    if not parts or min(parts) < 1:
        raise DyckFactorsError(f"not a composition: {parts}")
    return parts


@dataclass(frozen=True)
class CyclicComposition:
    """Rotation class of a composition, keyed by its least rotation."""

    canonical: tuple[int, ...]
    order: int

    @property
    def k(self) -> int:
        return len(self.canonical)

    @property
    def n(self) -> int:
        return sum(self.canonical)

    @property
    def is_primitive(self) -> bool:
        return self.order == self.k

    def big_parts(self, at_least: int = 2) -> int:
        return sum(1 for a in self.canonical if a >= at_least)

    def representatives(self) -> list[tuple[int, ...]]:
        """The ``order`` distinct compositions in the class."""
        c = self.canonical
        return [c[i:] + c[:i] for i in range(self.order)]

    def __str__(self) -> str:
        return "[" + ",".join(map(str, self.canonical)) + "]"


def cyclic_of(c: Iterable[int]) -> CyclicComposition:
    c = check_composition(c)
    k = len(c)
    order = next(p for p in range(1, k + 1) if k % p == 0 and c[p:] + c[:p] == c)
    return CyclicComposition(min(_rotations(c)), order)


def primitive_root(cc) -> tuple[CyclicComposition, int]:
    if not isinstance(cc, CyclicComposition):
        cc = cyclic_of(cc)
    return cyclic_of(cc.canonical[: cc.order]), cc.k // cc.order


def compositions(n: int, k: int) -> Iterator[tuple[int, ...]]:
    """All compositions of ``n`` into ``k`` parts, lexicographic."""
    if k == 0:
        if n == 0:
            yield ()
        return
    for first in range(1, n - k + 2):
        for rest in compositions(n - first, k - 1):
            yield (first,) + rest


def enumerate_compositions(n: int, k: int, m: int) -> Iterator[tuple[int, ...]]:
    """Compositions of ``n`` into ``k`` parts with exactly ``m`` parts at least 2."""

    def rec(remaining, parts_left, big_left):
        if parts_left == 0:
            if remaining == 0 and big_left == 0:
                yield ()
            return
        for p in range(1, remaining - parts_left + 2):
            nb = big_left - (p >= 2)
            rest = remaining - p
            if nb < 0 or nb > parts_left - 1:
                continue
            # the other parts need at least one each, plus one more per big part,
            # and with no big parts left they are all exactly one
            if rest < parts_left - 1 + nb or (nb == 0 and rest != parts_left - 1):
                continue
            for tail in rec(rest, parts_left - 1, nb):
                yield (p,) + tail

    if k < 1 or m < 0 or m > k or n < k:
        return iter(())
    return rec(n, k, m)


def enumerate_cyclic_compositions(n: int, k: int, m: int | None = None) -> Iterator[CyclicComposition]:
    """Each cyclic composition of ``n`` into ``k`` parts once (optionally with ``m`` big parts)."""
    source = compositions(n, k) if m is None else enumerate_compositions(n, k, m)
    for c in source:
        if c == min(_rotations(c)):
            yield cyclic_of(c)


# ------------------------------------------------------------------ oracles


@lru_cache(maxsize=None)
def factor_table(n: int, r: int) -> Counter:
    """Histogram of ``factor_profile(w, r)`` over all Dyck words of semilength ``n``."""
    return Counter(factor_profile(w, r) for w in enumerate_dyck(n))


def w_oracle(n: int, k: int, m: int) -> int:
    """Brute-force count of semilength-``n`` Dyck paths with ``k`` UD and ``m`` UUD factors."""
    if n < 0 or m < 0 or k < 0 or m > k or k + m > n:
        return 0
    return factor_table(n, 2)[(k, m)]


def w_oracle_multi(n: int, ks: Sequence[int]) -> int:
    ks = tuple(ks)
    if not ks:
        raise DyckFactorsError("need at least one factor count")
    if n < 0 or sum(ks) > n or min(ks) < 0:
        return 0
    return factor_table(n, len(ks))[ks]


def oracle_records(n_max: int) -> Iterator[dict]:
    """JSON-ready ``{"n", "k", "m", "count"}`` rows of the nonzero oracle values."""
    for n in range(n_max + 1):
        table = factor_table(n, 2)
        for (k, m) in sorted(table):
            yield {"n": n, "k": k, "m": m, "count": table[(k, m)]}
