"""Noncrossing partitions of {1, ..., n}: enumeration, refinement order, Moebius function,
even-block strata and nesting forests.
"""
from __future__ import annotations

import functools
import math
import re
from collections import defaultdict
from dataclasses import dataclass, field
from typing import Optional

MAX_N = 14


def catalan(n: int) -> int:
    """
    >>> [catalan(n) for n in range(8)]
    [1, 1, 2, 5, 14, 42, 132, 429]
    """
    return math.comb(2 * n, n) // (n + 1)


@dataclass(frozen=True)
class NCPartition:
    n: int
    blocks: tuple[tuple[int, ...], ...]
    labels: tuple[int, ...] = field(init=False, repr=False, compare=False, hash=False)

    def __post_init__(self):
        blocks = tuple(sorted(tuple(sorted(b)) for b in self.blocks))
        object.__setattr__(self, "blocks", blocks)
        labels = [-1] * self.n
        for i, b in enumerate(blocks):
            for x in b:
                if not 1 <= x <= self.n or labels[x - 1] != -1:
                    raise ValueError(f"blocks {blocks} do not partition 1..{self.n}")
                labels[x - 1] = i
        if -1 in labels:
            raise ValueError(f"blocks {blocks} do not cover 1..{self.n}")
        object.__setattr__(self, "labels", tuple(labels))

    @classmethod
    def from_string(cls, s: str) -> "NCPartition":
        """Parse "{(1,2),(3,4,5,6)}"."""
        blocks = [tuple(int(x) for x in g.split(",")) for g in re.findall(r"\(([\d,\s]+)\)", s)]
        n = sum(len(b) for b in blocks)
        p = cls(n, tuple(blocks))
        if not p.is_noncrossing():
            raise ValueError(f"{s} is crossing")
        return p

    @classmethod
    def zero(cls, n: int) -> "NCPartition":
        return cls(n, tuple((i,) for i in range(1, n + 1)))

    @classmethod
    def one(cls, n: int) -> "NCPartition":
        return cls(n, (tuple(range(1, n + 1)),))

    def __str__(self) -> str:
        return "{" + ",".join("(" + ",".join(map(str, b)) + ")" for b in self.blocks) + "}"

    def __len__(self) -> int:
        return len(self.blocks)

    @property
    def sizes(self) -> tuple[int, ...]:
        return tuple(sorted(len(b) for b in self.blocks))

    def is_even(self) -> bool:
        return all(len(b) % 2 == 0 for b in self.blocks)

    def is_noncrossing(self) -> bool:
        lab = self.labels
        n = self.n
        # a < b < c < d with a,c in one block and b,d in another
        for a in range(n):
            for b in range(a + 1, n):
                if lab[b] == lab[a]:
                    continue
                for c in range(b + 1, n):
                    if lab[c] != lab[a]:
                        continue
                    for d in range(c + 1, n):
                        if lab[d] == lab[b]:
                            return False
        return True


def _shift(p: tuple[tuple[int, ...], ...], k: int) -> tuple[tuple[int, ...], ...]:
    return tuple(tuple(x + k for x in b) for b in p)


@functools.lru_cache(maxsize=None)
def _nc_blocks(n: int) -> tuple[tuple[tuple[int, ...], ...], ...]:
    # Choose the block of 1; the runs between its elements and after its last
    # element are filled independently by noncrossing partitions.
    if n == 0:
        return ((),)
    out = []

    def build(block: list[int], pos: int, acc: tuple):
        # pos: last element placed in the block of 1; try closing or extending
        tail = n - pos
        for tp in _nc_blocks(tail):
            out.append((tuple(block),) + acc + _shift(tp, pos))
        for nxt in range(pos + 1, n + 1):
            gap = nxt - pos - 1
            for gp in _nc_blocks(gap):
                block.append(nxt)
                build(block, nxt, acc + _shift(gp, pos))
                block.pop()

    build([1], 1, ())
    return tuple(out)


@functools.lru_cache(maxsize=None)
def enumerate_nc(n: int) -> tuple[NCPartition, ...]:
    """All noncrossing partitions of 1..n; Catalan(n) of them."""
    if not 1 <= n <= MAX_N:
        raise ValueError(f"n must be in 1..{MAX_N}")
    return tuple(NCPartition(n, b) for b in _nc_blocks(n))


def leq(p: NCPartition, q: NCPartition) -> bool:
    """Refinement order: every block of p sits inside a block of q."""
    if p.n != q.n:
        raise ValueError("partitions of different sets")
    ql = q.labels
    for b in p.blocks:
        t = ql[b[0] - 1]
        for x in b[1:]:
            if ql[x - 1] != t:
                return False
    return True


@functools.lru_cache(maxsize=None)
def _upper_mobius(p: NCPartition) -> dict[NCPartition, int]:
    # mu(p, s) for every s >= p, by mu(p, s) = -sum_{p <= t < s} mu(p, t)
    ups = sorted((s for s in enumerate_nc(p.n) if leq(p, s)), key=len, reverse=True)
    mu: dict[NCPartition, int] = {}
    for s in ups:
        if s == p:
            mu[s] = 1
            continue
        total = 0
        for t, m in mu.items():
            if m and len(t) > len(s) and leq(t, s):
                total += m
        mu[s] = -total
    return mu


def mobius(p: NCPartition, q: NCPartition) -> int:
    """Moebius function of the interval [p, q] in NC(n)."""
    if not leq(p, q):
        raise ValueError(f"{p} is not below {q}")
    return _upper_mobius(p)[q]


def interval(p: NCPartition, q: NCPartition) -> list[NCPartition]:
    return [s for s in enumerate_nc(p.n) if leq(p, s) and leq(s, q)]


def even_partitions(n: int) -> tuple[NCPartition, ...]:
    return tuple(p for p in enumerate_nc(n) if p.is_even())


def even_strata(n: int) -> dict[tuple[int, ...], list[NCPartition]]:
    """Even noncrossing partitions of 1..n grouped by sorted block sizes."""
    if n % 2 or n < 2 or n > 12:
        raise ValueError("need an even size between 2 and 12")
    strata: dict[tuple[int, ...], list[NCPartition]] = defaultdict(list)
    for p in even_partitions(n):
        strata[p.sizes].append(p)
    return dict(sorted(strata.items(), key=lambda kv: (-len(kv[0]), kv[0])))


def stratum_label(sizes: tuple[int, ...]) -> str:
    return ",".join(map(str, sizes))


@dataclass
class BlockNode:
    block: tuple[int, ...]
    parent: Optional[tuple[int, ...]]
    children: list[tuple[int, ...]]
    gaps: tuple[int, ...]  # own elements before, between and after the children


@dataclass
class NestingForest:
    partition: NCPartition
    nodes: dict[tuple[int, ...], BlockNode]
    roots: list[tuple[int, ...]]

    def deepest(self) -> list[tuple[int, ...]]:
        return [b for b, node in self.nodes.items() if not node.children]

    def to_partition(self) -> NCPartition:
        """Rebuild the partition by laying out gaps and children left to right."""
        blocks: list[list[int]] = []
        pos = [0]

        def lay(b):
            mine: list[int] = []
            blocks.append(mine)
            node = self.nodes[b]
            for i, g in enumerate(node.gaps):
                mine.extend(range(pos[0] + 1, pos[0] + g + 1))
                pos[0] += g
                if i < len(node.children):
                    lay(node.children[i])

        for r in self.roots:
            lay(r)
        return NCPartition(pos[0], tuple(tuple(b) for b in blocks))


def nesting_forest(p: NCPartition) -> NestingForest:
    """Parent of a block is the innermost block with elements on both sides of it."""
    blocks = sorted(p.blocks, key=lambda b: b[0])
    parent: dict[tuple[int, ...], Optional[tuple[int, ...]]] = {}
    for b in blocks:
        best = None
        for c in blocks:
            if c is b or c[0] > b[0]:
                continue
            if any(x > b[-1] for x in c):
                if best is None or c[0] > best[0]:
                    best = c
        parent[b] = best
    children: dict[tuple[int, ...], list] = {b: [] for b in blocks}
    for b in blocks:
        if parent[b] is not None:
            children[parent[b]].append(b)
    nodes = {}
    for b in blocks:
        kids = children[b]
        cuts = [k[0] for k in kids] + [p.n + 1]
        gaps = []
        lo = 0
        for k, cut in zip(kids + [None], cuts):
            gaps.append(sum(1 for x in b if lo < x < cut))
            lo = k[-1] if k is not None else lo
        nodes[b] = BlockNode(b, parent[b], kids, tuple(gaps))
    roots = [b for b in blocks if parent[b] is None]
    return NestingForest(p, nodes, roots)
