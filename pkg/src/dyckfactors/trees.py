"""Plane trees and the bijections between trees, necklaces and Dyck words.

Trees are unlabeled and ordered; a vertex is identified by its preorder
index when one is needed.  The tree/word correspondence is first-return
decomposition one way and a preorder walk the other way, so a round trip
exercises two separate descriptions of the same map.
"""
from __future__ import annotations

import itertools
from dataclasses import dataclass
from typing import Callable, Iterator, Sequence

from .combinatorics import (
    CyclicComposition,
    DyckWord,
    _as_steps,
    check_composition,
    composition_word,
    cyclic_of,
    dominating_shifts,
    enumerate_dyck,
    unique_balanced_shift,
)
from .errors import BadMarking, BadProfile, BadShape, DyckFactorsError, EmptyWord, NoLeaves


class PlaneTree:
    """Rooted ordered tree given by the tuple of its root's subtrees."""

    __slots__ = ("children", "_hash")

    def __init__(self, children: Sequence["PlaneTree"] = ()):
        self.children = tuple(children)
        self._hash = hash(self.children)

    def __eq__(self, other) -> bool:
        if not isinstance(other, PlaneTree):
            return NotImplemented
        return self is other or (self._hash == other._hash and self.children == other.children)

    def __hash__(self) -> int:
        return self._hash

    def __repr__(self) -> str:
        return f"PlaneTree({self.to_parens()!r})"

    @property
    def size(self) -> int:
        """Number of non-root vertices (equivalently, edges)."""
        return sum(1 + c.size for c in self.children)

    def to_parens(self) -> str:
        return "".join("(" + c.to_parens() + ")" for c in self.children)

    @classmethod
    def from_parens(cls, s: str) -> "PlaneTree":
        stack: list[list] = [[]]
        for ch in s.strip():
            if ch == "(":
                stack.append([])
            elif ch == ")":
                if len(stack) < 2:
                    raise DyckFactorsError(f"unbalanced parentheses: {s!r}")
                node = cls(stack.pop())
                stack[-1].append(node)
            else:
                raise DyckFactorsError(f"unexpected character {ch!r}")
        if len(stack) != 1:
            raise DyckFactorsError(f"unbalanced parentheses: {s!r}")
        return cls(stack[0])

    @classmethod
    def path(cls, n: int) -> "PlaneTree":
        t = cls()
        for _ in range(n):
            t = cls((t,))
        return t

    @classmethod
    def star(cls, k: int) -> "PlaneTree":
        return cls([cls()] * k)


def enumerate_trees(n: int) -> Iterator[PlaneTree]:
    """All plane trees with ``n`` non-root vertices."""
    for w in enumerate_dyck(n):
        yield phi(w)


# ------------------------------------------------------------------ Phi


def _check_dyck(s: str) -> None:
    level = 0
    for c in s:
        if c not in "UD":
            raise DyckFactorsError(f"not a word over U/D: {s!r}")
        level += 1 if c == "U" else -1
        if level < 0:
            raise DyckFactorsError(f"not a Dyck word: {s!r}")
    if level:
        raise DyckFactorsError(f"not a Dyck word: {s!r}")


def phi(w) -> PlaneTree:
    """Tree of a Dyck word by first-return decomposition ``U p_1 D U p_2 D ...``."""
    s = _as_steps(w)
    _check_dyck(s)

    def build(lo: int, hi: int) -> PlaneTree:
        children = []
        level, start = 0, lo
        for i in range(lo, hi):
            level += 1 if s[i] == "U" else -1
            if level == 0:
                children.append(build(start + 1, i))
                start = i + 1
        return PlaneTree(children)

    return build(0, len(s))


def phi_inv(t: PlaneTree) -> DyckWord:
    """Walk the tree in preorder: U going down an edge, D coming back up."""
    steps = []
    stack = [iter(t.children)]
    while stack:
        child = next(stack[-1], None)
        if child is None:
            stack.pop()
            if stack:
                steps.append("D")
        else:
            steps.append("U")
            stack.append(iter(child.children))
    return DyckWord.from_string("".join(steps))


def leaf_stats(t: PlaneTree) -> tuple[int, int]:
    """``(leaves, good leaves)``; the root is never a leaf, and a good leaf is
    a leaf that is the first child of a non-root vertex."""
    leaves = good = 0
    stack = [(t, True)]
    while stack:
        node, is_root = stack.pop()
        for i, c in enumerate(node.children):
            if not c.children:
                leaves += 1
                if i == 0 and not is_root:
                    good += 1
            else:
                stack.append((c, False))
    return leaves, good


# ------------------------------------------------------- extended leaves


def _extended_leaves(t: PlaneTree) -> list[list[int]]:
    """For each leaf, left to right, the preorder ids of its extended leaf, top first.

    Walking up from a leaf, the path continues through first children and
    stops at the parent of the first non-first child (or at the root).
    """
    result: list[list[int]] = []
    ids = itertools.count(1)

    def visit(node: PlaneTree, vid: int, path: list[int]) -> None:
        if not node.children:
            if vid:
                result.append(path)
            return
        for i, c in enumerate(node.children):
            cid = next(ids)
            visit(c, cid, (path if i == 0 else [vid]) + [cid])

    visit(t, 0, [0])
    return result


def extended_leaf_decomposition(t: PlaneTree) -> tuple[int, ...]:
    """Lengths of the extended leaves, left to right."""
    paths = _extended_leaves(t)
    if not paths:
        raise NoLeaves("a single vertex has no extended leaves")
    return tuple(len(p) - 1 for p in paths)


# -------------------------------------------------------- marked necklaces


@dataclass(frozen=True, eq=False)
class MarkedNecklace:
    """Cyclic sequence of extended leaves with some non-leaf vertices marked.

    ``marks[i]`` holds positions on the ``i``-th extended leaf, numbered
    ``1..lengths[i]`` from its top vertex towards its leaf.  Equality and
    hashing ignore rotation.
    """

    lengths: tuple[int, ...]
    marks: tuple[frozenset, ...]

    def __post_init__(self):
        lengths = check_composition(self.lengths)
        marks = tuple(frozenset(int(p) for p in m) for m in self.marks)
        if len(marks) != len(lengths):
            raise BadMarking("one mark set per extended leaf is required")
        for ell, m in zip(lengths, marks):
            if any(not 1 <= p <= ell for p in m):
                raise BadMarking(f"mark outside 1..{ell}: {sorted(m)}")
        object.__setattr__(self, "lengths", lengths)
        object.__setattr__(self, "marks", marks)

    @property
    def k(self) -> int:
        return len(self.lengths)

    @property
    def n(self) -> int:
        return sum(self.lengths)

    @property
    def mark_count(self) -> int:
        return sum(len(m) for m in self.marks)

    def necklace(self) -> CyclicComposition:
        return cyclic_of(self.lengths)

    def key(self) -> tuple:
        beads = [(ell, sum(1 << (p - 1) for p in m)) for ell, m in zip(self.lengths, self.marks)]
        return min(tuple(beads[i:] + beads[:i]) for i in range(len(beads)))

    def rotate(self, i: int) -> "MarkedNecklace":
        return MarkedNecklace(self.lengths[i:] + self.lengths[:i], self.marks[i:] + self.marks[:i])

    def __eq__(self, other) -> bool:
        if not isinstance(other, MarkedNecklace):
            return NotImplemented
        return self.key() == other.key()

    def __hash__(self) -> int:
        return hash(self.key())

    def __str__(self) -> str:
        beads = []
        for ell, m in zip(self.lengths, self.marks):
            beads.append(f"{ell}" + ("{" + ",".join(map(str, sorted(m))) + "}" if m else ""))
        return "[" + " ".join(beads) + "]"


def enumerate_markings(cc) -> set[MarkedNecklace]:
    """Every distinct marking of the necklace ``cc`` with ``k - 1`` marked vertices."""
    if not isinstance(cc, CyclicComposition):
        cc = cyclic_of(cc)
    lengths = cc.canonical
    slots = [(i, p) for i, ell in enumerate(lengths) for p in range(1, ell + 1)]
    out = set()
    for chosen in itertools.combinations(slots, cc.k - 1):
        marks = [set() for _ in lengths]
        for i, p in chosen:
            marks[i].add(p)
        out.add(MarkedNecklace(lengths, tuple(frozenset(m) for m in marks)))
    return out


def marked_necklace_from_tree(t: PlaneTree) -> MarkedNecklace:
    """Detach extended leaves right to left, marking where each one hung."""
    paths = _extended_leaves(t)
    if not paths:
        raise NoLeaves("a single vertex has no extended leaves")
    marks = [set() for _ in paths]
    for i in range(len(paths) - 1, 0, -1):
        top = paths[i][0]
        # the top of E_i sits on an earlier extended leaf as a non-leaf vertex;
        # the latest such leaf is the one it is detached from
        j = next(j for j in range(i - 1, -1, -1) if top in paths[j][:-1])
        marks[j].add(paths[j].index(top) + 1)
    return MarkedNecklace(tuple(len(p) - 1 for p in paths), tuple(frozenset(m) for m in marks))


class _Node:
    __slots__ = ("children",)

    def __init__(self):
        self.children: list[_Node] = []

    def freeze(self) -> PlaneTree:
        return PlaneTree([c.freeze() for c in self.children])


def tree_from_marked_necklace(mn: MarkedNecklace) -> PlaneTree:
    """Rebuild the tree: start from the leaf picked out by the balanced shift, then
    hang each following extended leaf on the deepest unused mark."""
    k = mn.k
    if mn.mark_count != k - 1:
        raise BadMarking(f"need {k - 1} marks for {k} extended leaves, got {mn.mark_count}")
    symbols, owner = [], []
    for i, m in enumerate(mn.marks):
        symbols += ["O"] * len(m) + ["S"]
        owner += [i] * (len(m) + 1)
    first = owner[unique_balanced_shift(symbols, "O", "S")]
    order = [(first + i) % k for i in range(k)]

    root = _Node()
    available: list[tuple[int, _Node]] = []  # (depth, vertex), one entry per unused mark

    def hang(top: _Node, depth: int, idx: int) -> None:
        ell, marks = mn.lengths[idx], mn.marks[idx]
        node = top
        if 1 in marks:
            available.append((depth, top))
        for pos in range(2, ell + 2):
            child = _Node()
            node.children.append(child)
            node = child
            if pos in marks:
                available.append((depth + pos - 1, node))

    hang(root, 0, order[0])
    for idx in order[1:]:
        if not available:
            raise BadMarking("ran out of marked vertices")
        best = max(range(len(available)), key=lambda a: available[a][0])
        depth, top = available.pop(best)
        hang(top, depth, idx)
    return root.freeze()


# --------------------------------------------- necklaces and Dyck words


def _as_cyclic(cc) -> CyclicComposition:
    return cc if isinstance(cc, CyclicComposition) else cyclic_of(cc)


def labeling_rotation(lengths: Sequence[int]) -> tuple[int, ...]:
    """The rotation whose word ``U^{l_1 - 1} D ... U^{l_k - 1} D`` is 1-dominating.

    Needs ``sum(lengths) = 2k + 1`` so that exactly one such rotation exists.
    """
    lengths = check_composition(lengths)
    k = len(lengths)
    if sum(lengths) != 2 * k + 1:
        raise BadShape(f"need {2 * k + 1} = 2k+1, got sum {sum(lengths)}")
    word = composition_word(lengths)
    (start,) = dominating_shifts(word, 1)
    # a dominating word ends in D, so the start is at a group boundary
    group = word[:start].count("D")
    return lengths[group:] + lengths[:group]


def comp_to_dyck_plus(cc) -> DyckWord:
    """Dyck word of semilength ``k`` from a cyclic composition of ``2k+1`` into ``k`` parts."""
    cc = _as_cyclic(cc)
    if cc.n != 2 * cc.k + 1:
        raise BadShape(f"need sum 2k+1 = {2 * cc.k + 1}, got {cc.n}")
    word = composition_word(labeling_rotation(cc.canonical))
    return DyckWord.from_string(word[1:])


def _preceding_ups(s: str) -> list[int]:
    return [len(seg) for seg in s.split("D")[:-1]]


def comp_from_dyck_plus(w) -> CyclicComposition:
    s = _as_steps(w)
    if not s:
        raise EmptyWord("need a nonempty Dyck word")
    _check_dyck(s)
    a = _preceding_ups(s)
    a[0] += 2
    return cyclic_of([a[0]] + [x + 1 for x in a[1:]])


def comp_to_dyck_minus(cc) -> DyckWord:
    """Dyck word of semilength ``k - 1`` from a cyclic composition of ``2k-1`` into ``k`` parts."""
    cc = _as_cyclic(cc)
    if cc.n != 2 * cc.k - 1:
        raise BadShape(f"need sum 2k-1 = {2 * cc.k - 1}, got {cc.n}")
    word = composition_word(cc.canonical)
    i = unique_balanced_shift(word, "U", "D")
    rotated = word[i:] + word[:i]
    return DyckWord.from_string(rotated[:-1])


def comp_from_dyck_minus(w) -> CyclicComposition:
    s = _as_steps(w)
    _check_dyck(s)
    return cyclic_of([x + 1 for x in _preceding_ups(s + "D")])


# ---------------------------------------------------- Narayana involution


def lalanne_kreweras(w) -> DyckWord:
    """Lalanne-Kreweras involution, swapping ``j`` peaks for ``n + 1 - j``.

    Read the word left to right.  At each double fall ``DD`` record how many
    D have been seen (counting the first D of the pair), and at each double
    rise ``UU`` record how many U have been seen.  Pairing the i-th values
    ``(x_i, y_i)``, the image is the path whose i-th valley comes after
    ``x_i`` up steps and ``y_i`` down steps.
    """
    s = _as_steps(w)
    _check_dyck(s)
    n = len(s) // 2
    rises, falls = [], []
    ups = downs = 0
    for i, c in enumerate(s):
        nxt = s[i + 1] if i + 1 < len(s) else ""
        if c == "U":
            ups += 1
            if nxt == "U":
                rises.append(ups)
        else:
            downs += 1
            if nxt == "D":
                falls.append(downs)
    assert len(rises) == len(falls)
    xs, ys = [0] + falls + [n], [0] + rises + [n]
    out = []
    for i in range(1, len(xs)):
        out.append("U" * (xs[i] - xs[i - 1]) + "D" * (ys[i] - ys[i - 1]))
    return DyckWord.from_string("".join(out))


# ------------------------------------------------------- symmetry bijection


def necklace_labels(mn: MarkedNecklace) -> tuple[tuple[int, ...], frozenset]:
    """Split a marked necklace into its lengths in labeling order and the set of
    marked labels, numbering non-leaf vertices ``1..n`` leaf by leaf from the top."""
    rot = labeling_rotation(mn.lengths)
    for i in range(mn.k):
        if mn.lengths[i:] + mn.lengths[:i] == rot:
            mn = mn.rotate(i)
            break
    labels, offset = set(), 0
    for ell, m in zip(mn.lengths, mn.marks):
        labels.update(offset + p for p in m)
        offset += ell
    return mn.lengths, frozenset(labels)


def necklace_from_labels(cc, labels) -> MarkedNecklace:
    lengths = labeling_rotation(_as_cyclic(cc).canonical)
    labels = set(labels)
    if any(not 1 <= p <= sum(lengths) for p in labels):
        raise BadMarking(f"labels outside 1..{sum(lengths)}")
    marks, offset = [], 0
    for ell in lengths:
        marks.append(frozenset(p - offset for p in labels if offset < p <= offset + ell))
        offset += ell
    return MarkedNecklace(lengths, tuple(marks))


def _check_symmetric_profile(t: PlaneTree) -> int:
    leaves, _ = leaf_stats(t)
    if leaves < 1 or t.size != 2 * leaves + 1:
        raise BadProfile(f"need 2k+1 non-root vertices and k leaves, got {t.size} and {leaves}")
    return leaves


def symmetry_trace(t: PlaneTree, involution: Callable = lalanne_kreweras) -> dict:
    """Every intermediate object of the good-leaf symmetry on ``t``, as strings."""
    _check_symmetric_profile(t)
    m = marked_necklace_from_tree(t)
    lengths, labels = necklace_labels(m)
    p = comp_to_dyck_plus(cyclic_of(lengths))
    p2 = involution(p)
    n2 = comp_from_dyck_plus(p2)
    m2 = necklace_from_labels(n2, labels)
    t2 = tree_from_marked_necklace(m2)
    return {
        "T": t.to_parens(),
        "M": str(m),
        "N": list(lengths),
        "S": sorted(labels),
        "P": str(p),
        "P'": str(p2),
        "N'": list(labeling_rotation(n2.canonical)),
        "M'": str(m2),
        "T'": t2.to_parens(),
    }


def symmetry_bijection(t: PlaneTree, involution: Callable = lalanne_kreweras) -> PlaneTree:
    """Map a tree with ``m`` good leaves to one with ``k + 1 - m`` good leaves.

    ``involution`` is any Narayana-symmetry bijection on Dyck words; the
    default is :func:`lalanne_kreweras`.
    """
    return PlaneTree.from_parens(symmetry_trace(t, involution)["T'"])


# ------------------------------------------------------------- phi_{j,k}


def _lex_key(s: str) -> str:
    return s.translate(str.maketrans("UD", "01"))


@dataclass(frozen=True)
class PathClass:
    """Rotation-related set of generalized paths produced by :func:`phi_jk`."""

    members: frozenset

    @property
    def representative(self) -> str:
        return min(self.members, key=_lex_key)

    @property
    def order(self) -> int:
        return len(self.members)

    def __str__(self) -> str:
        return self.representative


def phi_jk(cc, j: int) -> PathClass:
    """Class of ``nu_2 ... nu_{2k+j}`` over the 1-dominating rotations ``nu`` of
    ``U^{a_1 - 1} D ... U^{a_k - 1} D``, for a composition of ``2k + j``."""
    cc = _as_cyclic(cc)
    if j < 1 or cc.n != 2 * cc.k + j:
        raise BadShape(f"need j >= 1 and sum 2k+j, got k={cc.k}, sum={cc.n}, j={j}")
    word = composition_word(cc.canonical)
    return PathClass(frozenset((word[i:] + word[:i])[1:] for i in dominating_shifts(word, 1)))
