"""Additive, multiplicative, and power types of chain embeddings.

Each calculus compresses an embedding into the finite data that survives
order isomorphism of the ambient chain:

* additive: which tail positions of a SumTail codomain are hit,
* multiplicative: per-level counts plus the total quasiorder that the raw
  values induce across levels of a Leveled codomain,
* power: the ordered rooted tree of shared tuple suffixes in a Power
  codomain, with leaves at uniform depth m.

For the latter two the extracted (type, value) pair determines the
embedding, and the reconstruction procedures here invert extraction
exactly.  Enumeration orders are pinned and documented per function; the
witness colorings index their palettes by these orders.
"""

from __future__ import annotations

import itertools
import math
from dataclasses import dataclass
from functools import lru_cache
from operator import itemgetter
from typing import Dict, Iterator, Optional, Tuple

from .chains import Chain, Embedding, Leveled, Power, SumTail, _as_chain

Tree = tuple  # nested tuples; a leaf is ()
ValTuple = Tuple[Chain, ...]


# -- counters --------------------------------------------------------


def binom(m: int, j: int) -> int:
    """C(m, j), zero when j exceeds m."""
    if j < 0:
        return 0
    return math.comb(m, j)


@lru_cache(maxsize=None)
def stirling2(n: int, j: int) -> int:
    """Stirling numbers of the second kind S(n, j)."""
    if n < 0 or j < 0:
        return 0
    if n == 0:
        return 1 if j == 0 else 0
    if j == 0:
        return 0
    return j * stirling2(n - 1, j) + stirling2(n - 1, j - 1)


def fubini(n: int) -> int:
    """Ordered set partitions of an n-set into >= 1 blocks: sum j! S(n, j)."""
    return sum(math.factorial(j) * stirling2(n, j) for j in range(1, n + 1))


# -- type records ----------------------------------------------------


@dataclass(frozen=True)
class AdditiveType:
    """Tail positions of a SumTail codomain hit by an embedding."""

    m: int
    tau: Tuple[int, ...]

    def __post_init__(self):
        tau = tuple(sorted(set(self.tau)))
        if tau and not (0 <= tau[0] and tau[-1] < self.m):
            raise ValueError("tail positions must lie in range(m)")
        object.__setattr__(self, "tau", tau)

    def as_json(self) -> dict:
        return {"m": self.m, "tau": list(self.tau)}


@dataclass(frozen=True)
class MultiplicativeType:
    """Per-level counts p plus the value quasiorder as an ordered partition.

    ``p[l]`` counts domain indices landing on level l; index i therefore
    sits on the level whose window of cumulative counts contains i.
    ``blocks`` lists the classes of equal value in increasing value order.
    """

    p: Tuple[int, ...]
    blocks: Tuple[Tuple[int, ...], ...]

    def __post_init__(self):
        object.__setattr__(self, "p", tuple(int(x) for x in self.p))
        object.__setattr__(
            self, "blocks", tuple(tuple(sorted(b)) for b in self.blocks)
        )

    @property
    def n(self) -> int:
        return sum(self.p)

    @property
    def m(self) -> int:
        return len(self.p)

    @property
    def rank(self) -> int:
        return len(self.blocks)

    @property
    def is_strict(self) -> bool:
        return all(len(b) == 1 for b in self.blocks)

    def level_of(self, i: int) -> int:
        upper = 0
        for level, count in enumerate(self.p):
            upper += count
            if i < upper:
                return level
        raise IndexError(i)

    def check(self) -> "MultiplicativeType":
        """Raise ValueError unless this is a well-formed realizable type."""
        seen = sorted(i for b in self.blocks for i in b)
        if seen != list(range(self.n)) or any(not b for b in self.blocks):
            raise ValueError("blocks must partition range(n) into nonempty parts")
        position = {i: j for j, b in enumerate(self.blocks) for i in b}
        start = 0
        for count in self.p:
            level = range(start, start + count)
            # same level means distinct values in index order, so the block
            # positions along a level must be strictly increasing
            if any(position[i] >= position[j] for i, j in zip(level, level[1:])):
                raise ValueError("type is not realizable by any embedding")
            start += count
        return self

    def as_json(self) -> dict:
        return {"p": list(self.p), "blocks": [list(b) for b in self.blocks]}


# -- additive calculus -----------------------------------------------


def additive_type(f: Embedding) -> AdditiveType:
    """Which tail positions an embedding into SumTail hits."""
    codomain = f.codomain
    if not isinstance(codomain, SumTail):
        raise TypeError("additive_type expects an embedding into SumTail")
    tau = tuple(v for v, part in f.images if part == 1)
    return AdditiveType(codomain.m, tau)


def enum_additive(n: int, m: int) -> tuple:
    """All sum binom(m, j), j <= n, additive types.

    Pinned order: by tail-set size, lexicographic within a size, so the
    empty pattern sits at index 0.
    """
    if n < 0 or m < 0:
        raise ValueError("n and m must be >= 0")
    out = []
    for j in range(min(n, m) + 1):
        for tau in itertools.combinations(range(m), j):
            out.append(AdditiveType(m, tau))
    return tuple(out)


# -- multiplicative calculus -----------------------------------------


def mult_type(f: Embedding) -> MultiplicativeType:
    """Level counts and value quasiorder of an embedding into Leveled."""
    if not isinstance(f.codomain, Leveled):
        raise TypeError("mult_type expects an embedding into Leveled")
    p = [0] * f.codomain.m
    for _, level in f.images:
        p[level] += 1
    by_value: Dict[int, list] = {}
    for i, (value, _) in enumerate(f.images):
        by_value.setdefault(value, []).append(i)
    blocks = tuple(tuple(by_value[v]) for v in sorted(by_value))
    return MultiplicativeType(tuple(p), blocks)


def mult_val(f: Embedding) -> Chain:
    """The distinct raw values of an embedding into Leveled, as a chain."""
    if not isinstance(f.codomain, Leveled):
        raise TypeError("mult_val expects an embedding into Leveled")
    return tuple(sorted({value for value, _ in f.images}))


def mult_points(t: MultiplicativeType, v: Chain) -> tuple:
    """The literal (value, level) assignment determined by (t, v).

    Index i takes the level its position in p dictates and the value of
    its block.  This is the reconstruction procedure itself; it is total
    even for type data that no embedding realizes.
    """
    v = _as_chain(v)
    if len(v) != t.rank:
        raise ValueError(f"value chain has {len(v)} points, type has rank {t.rank}")
    value_of = {}
    for value, block in zip(v, t.blocks):
        for i in block:
            value_of[i] = value
    level_of = [lvl for lvl, count in enumerate(t.p) for _ in range(count)]
    return tuple((value_of[i], level_of[i]) for i in range(t.n))


def reconstruct_mult(
    t: MultiplicativeType, v: Chain, codomain: Optional[Leveled] = None
) -> Embedding:
    """The embedding with multiplicative type t and value chain v.

    Default codomain puts the whole value chain on every level; pass the
    original codomain to land round trips on identical records.
    """
    images = mult_points(t, v)
    if codomain is None:
        codomain = Leveled((tuple(v),) * t.m)
    return Embedding(codomain, images)


def _compositions(n: int, m: int) -> Iterator[Tuple[int, ...]]:
    """Weak compositions of n into m parts, lexicographic."""
    if m == 0:
        if n == 0:
            yield ()
        return
    for first in range(n + 1):
        for rest in _compositions(n - first, m - 1):
            yield (first, *rest)


def _block_sequences(p: Tuple[int, ...]) -> Iterator[Tuple[Tuple[int, ...], ...]]:
    """Realizable ordered partitions for level counts p.

    A block holds at most one index per level, so a type is a sequence of
    nonempty level sets using level l exactly p[l] times; blocks then name
    their indices by how often each level was used before.  Level sets are
    tried in ascending bitmask order, which pins the output order.
    """
    m = len(p)
    starts = [sum(p[:l]) for l in range(m)]
    masks = [
        tuple(l for l in range(m) if mask >> l & 1) for mask in range(1, 1 << m)
    ]

    def rec(remaining, used, acc):
        if all(r == 0 for r in remaining):
            yield tuple(acc)
            return
        for levels in masks:
            if any(remaining[l] == 0 for l in levels):
                continue
            block = tuple(starts[l] + used[l] for l in levels)
            for l in levels:
                remaining[l] -= 1
                used[l] += 1
            acc.append(tuple(sorted(block)))
            yield from rec(remaining, used, acc)
            acc.pop()
            for l in levels:
                remaining[l] += 1
                used[l] -= 1

    yield from rec(list(p), [0] * m, [])


@lru_cache(maxsize=None)
def enum_mult(n: int, m: int) -> tuple:
    """All realizable multiplicative types with |domain| = n over m levels.

    Pinned order: level counts lexicographically, then block sequences in
    the :func:`_block_sequences` order.
    """
    if n < 0 or m < 0:
        raise ValueError("n and m must be >= 0")
    out = []
    for p in _compositions(n, m):
        for blocks in _block_sequences(p):
            out.append(MultiplicativeType(p, blocks))
    return tuple(out)


def _strict_from_letters(letters: Tuple[int, ...], m: int) -> MultiplicativeType:
    p = [0] * m
    for letter in letters:
        p[letter] += 1
    starts = [sum(p[:l]) for l in range(m)]
    used = [0] * m
    chain = []
    for letter in letters:
        chain.append(starts[letter] + used[letter])
        used[letter] += 1
    return MultiplicativeType(tuple(p), tuple((i,) for i in chain))


@lru_cache(maxsize=None)
def enum_strict(n: int, m: int) -> tuple:
    """The m^n strict types, in lexicographic order of their words."""
    if n < 0 or m < 1:
        raise ValueError("need n >= 0 and m >= 1")
    return tuple(
        _strict_from_letters(w, m) for w in itertools.product(range(m), repeat=n)
    )


def enum_product_types(parts: Tuple[int, ...]) -> tuple:
    """Realizable types whose level counts equal ``parts`` exactly."""
    parts = tuple(int(x) for x in parts)
    if not parts or any(x < 1 for x in parts):
        raise ValueError("parts must be a nonempty tuple of positive sizes")
    return tuple(MultiplicativeType(parts, blocks) for blocks in _block_sequences(parts))


@lru_cache(maxsize=None)
def rank_counts(parts: Tuple[int, ...]) -> Tuple[Tuple[int, int], ...]:
    """How many realizable types with level counts ``parts`` have each rank.

    Counted in closed form: a rank-r type is a sequence of r nonempty
    level sets using level l exactly parts[l] times, and by inclusion and
    exclusion over empty blocks there are
    sum_i (-1)^i C(r, i) prod_l C(r - i, parts[l]) of them.  Agreement
    with the explicit enumeration is enforced in the verify module.
    """
    parts = tuple(sorted(parts))
    total = sum(parts)
    if total == 0:
        return ((0, 1),)
    out = []
    for r in range(1, total + 1):
        count = 0
        for i in range(r + 1):
            product = (-1) ** i * binom(r, i)
            for x in parts:
                product *= binom(r - i, x)
            count += product
        if count:
            out.append((r, count))
    return tuple(out)


def strict_to_word(t: MultiplicativeType) -> str:
    """The word of a strict type: levels read along the value order."""
    if not t.is_strict:
        raise ValueError("only strict types have words")
    if t.m > 10:
        raise ValueError("digit words need at most 10 levels")
    return "".join(str(t.level_of(block[0])) for block in t.blocks)


def word_to_strict(word: str, m: int) -> MultiplicativeType:
    """Inverse of :func:`strict_to_word` for words over alphabet m."""
    if m < 1 or m > 10:
        raise ValueError("alphabet size must be between 1 and 10")
    letters = tuple(int(ch) for ch in word)
    if any(letter >= m for letter in letters):
        raise ValueError("word letter out of range")
    return _strict_from_letters(letters, m)


# -- power calculus --------------------------------------------------


def _labeled_tree(images: tuple, depth: int) -> tuple:
    """Children of a suffix-group node as (label, subtree) pairs."""
    if depth == 0:
        return ()
    kids = []
    for label, group in itertools.groupby(images, key=itemgetter(depth - 1)):
        kids.append((label, _labeled_tree(tuple(group), depth - 1)))
    return tuple(kids)


def _require_power(f: Embedding) -> Power:
    if not isinstance(f.codomain, Power):
        raise TypeError("expected an embedding into Power")
    return f.codomain


def power_type(f: Embedding) -> Tree:
    """The suffix tree shape of an embedding into Power.

    Vertices at depth d group images sharing their last d coordinates;
    out-degree-1 vertices are kept, so every leaf sits at depth m.
    """
    codomain = _require_power(f)
    labeled = _labeled_tree(f.images, codomain.m)
    return _shape(labeled)


def _shape(labeled: tuple) -> Tree:
    return tuple(_shape(child) for _, child in labeled)


def power_val(f: Embedding) -> ValTuple:
    """Child label chains of every internal vertex, top to bottom then left
    to right."""
    codomain = _require_power(f)
    labeled = _labeled_tree(f.images, codomain.m)
    out = []
    queue = [labeled]
    while queue:
        node = queue.pop(0)
        out.append(tuple(label for label, _ in node))
        queue.extend(child for _, child in node if child != ())
    return tuple(out)


def internal_nodes(tree: Tree) -> tuple:
    """Internal vertices in the same top-to-bottom, left-to-right order
    that :func:`power_val` uses, each as (path, node)."""
    if tree == ():
        return ()
    out = []
    queue = [((), tree)]
    while queue:
        path, node = queue.pop(0)
        out.append((path, node))
        queue.extend(
            (path + (i,), child) for i, child in enumerate(node) if child != ()
        )
    return tuple(out)


def out_degrees(tree: Tree) -> Tuple[int, ...]:
    """Out-degree sequence over the internal vertices of a power type."""
    return tuple(len(node) for _, node in internal_nodes(tree))


def tree_leaf_count(tree: Tree) -> int:
    if tree == ():
        return 1
    return sum(tree_leaf_count(child) for child in tree)


def tree_height(tree: Tree) -> int:
    if tree == ():
        return 0
    return 1 + tree_height(tree[0])


def reconstruct_power(
    t: Tree, v: ValTuple, codomain: Optional[Power] = None
) -> Embedding:
    """The embedding into Power with suffix tree t and label chains v.

    The i-th chain labels the children of the i-th internal vertex in
    :func:`internal_nodes` order and must match its out-degree.  Default
    codomain uses all labels as the base and the tree height.
    """
    nodes = internal_nodes(t)
    if len(v) != len(nodes):
        raise ValueError(
            f"got {len(v)} chains for {len(nodes)} internal vertices"
        )
    chain_at = {}
    for (path, node), chain in zip(nodes, v):
        chain = _as_chain(chain)
        if len(chain) != len(node):
            raise ValueError(
                f"chain {chain} does not fit out-degree {len(node)} at {path}"
            )
        chain_at[path] = chain

    images = []

    def walk(node: Tree, path: tuple, above: tuple):
        chain = chain_at[path]
        for i, (label, child) in enumerate(zip(chain, node)):
            if child == ():
                images.append((label, *above))
            else:
                walk(child, path + (i,), (label, *above))

    walk(t, (), ())
    if codomain is None:
        base = tuple(sorted({x for img in images for x in img}))
        codomain = Power(base, tree_height(t))
    return Embedding(codomain, tuple(images))


@lru_cache(maxsize=None)
def _positive_compositions(n: int) -> tuple:
    if n == 0:
        return ((),)
    out = []
    for first in range(1, n + 1):
        out.extend((first, *rest) for rest in _positive_compositions(n - first))
    return tuple(out)


@lru_cache(maxsize=None)
def enum_power(n: int, m: int) -> tuple:
    """Ordered trees of height m with n leaves, all at depth m.

    Pinned order: leaf counts of the root's children in composition
    order (first part ascending), recursively.
    """
    if n < 1 or m < 0:
        raise ValueError("need n >= 1 and m >= 0")
    if m == 0:
        return ((),) if n == 1 else ()
    out = []
    for comp in _positive_compositions(n):
        for kids in itertools.product(*(enum_power(c, m - 1) for c in comp)):
            out.append(tuple(kids))
    return tuple(out)
