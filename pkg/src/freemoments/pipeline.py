"""Partition-indexed moments and cumulants of x, y and x + y.

Two independent evaluators of nested B-valued moments are provided:

* `psi` / `phi_eval` work on the numbering expression of an even partition,
  expanding every x^g in sphere sums (`radial`) and evaluating the resulting
  sandwiches E(X_m1 h^d1 X_m2 ...) in the free group algebra (`algebra`).
* `partition_moment` works directly in the amalgamated group algebra
  (`amalgam`), collapsing innermost blocks first.

Cumulants come from Moebius inversion over NC(n).
"""
from __future__ import annotations

import functools
import itertools
from dataclasses import dataclass
from typing import Sequence, Union

from . import amalgam, radial
from .algebra import DEFAULT_CAP, BudgetError, sandwich_expect
from .amalgam import AmalgamAlgebraElement, amul, expect_product
from .laurent import HLaurent
from .partitions import (
    NCPartition,
    enumerate_nc,
    even_partitions,
    even_strata,
    interval,
    leq,
    mobius,
    nesting_forest,
    stratum_label,
)


@dataclass(frozen=True)
class Deep:
    """A child block with no children of its own, of the given size."""

    size: int

    def __str__(self) -> str:
        return f"[{self.size}]"


@dataclass(frozen=True)
class BlockExpr:
    """(g0, C1, g1, ..., Cr, gr): own legs between the children of a block."""

    gaps: tuple[int, ...]
    children: tuple[Union[Deep, "BlockExpr"], ...] = ()

    def __post_init__(self):
        if len(self.gaps) != len(self.children) + 1:
            raise ValueError("a block expression needs one more gap than children")
        if any(g < 0 for g in self.gaps):
            raise ValueError("gaps must be nonnegative")

    @property
    def size(self) -> int:
        return sum(self.gaps)

    @property
    def degree(self) -> int:
        return self.size + sum(c.size if isinstance(c, Deep) else c.degree for c in self.children)

    def __str__(self) -> str:
        parts = [str(self.gaps[0])]
        for c, g in zip(self.children, self.gaps[1:]):
            parts += [str(c), str(g)]
        return "(" + ",".join(parts) + ")"


NestedExpression = tuple  # tuple[BlockExpr, ...], one per outer block


def render_expression(expr: NestedExpression) -> str:
    return " x ".join(str(b) for b in expr)


def _block_expr(forest, block) -> BlockExpr:
    node = forest.nodes[block]
    kids = []
    for c in node.children:
        if forest.nodes[c].children:
            kids.append(_block_expr(forest, c))
        else:
            kids.append(Deep(len(c)))
    return BlockExpr(node.gaps, tuple(kids))


def numbering_map(p: NCPartition) -> NestedExpression:
    """Nesting structure of an even partition as gap/bracket expressions."""
    if not p.is_even():
        raise ValueError(f"{p} has an odd block")
    forest = nesting_forest(p)
    return tuple(_block_expr(forest, r) for r in forest.roots)


def expression_to_partition(expr: NestedExpression) -> NCPartition:
    """Inverse of `numbering_map`."""
    blocks: list[list[int]] = []
    pos = 0

    def lay(e):
        nonlocal pos
        mine: list[int] = []
        blocks.append(mine)
        if isinstance(e, Deep):
            mine.extend(range(pos + 1, pos + e.size + 1))
            pos += e.size
            return
        for i, g in enumerate(e.gaps):
            mine.extend(range(pos + 1, pos + g + 1))
            pos += g
            if i < len(e.children):
                lay(e.children[i])

    for b in expr:
        lay(b)
    return NCPartition(pos, tuple(tuple(b) for b in blocks))


def _child_value(c, cap: int) -> HLaurent:
    if isinstance(c, Deep):
        return radial.expect_power(c.size)
    return phi_eval(c, cap)


@functools.lru_cache(maxsize=None)
def phi_eval(expr: BlockExpr, cap: int = DEFAULT_CAP) -> HLaurent:
    """E(x^g0 v(C1) x^g1 ... v(Cr) x^gr) with v([l]) = E(x^l).

    Each x^g is expanded in sphere sums and each inserted B-value in powers of h;
    the resulting sandwiches are evaluated exactly in the group algebra of F_2.
    """
    if expr.degree > cap:
        raise BudgetError(f"expression of degree {expr.degree} exceeds cap {cap}")
    inserts = [_child_value(c, cap) for c in expr.children]
    legs = [radial.radial_power(g, 2).coeffs for g in expr.gaps]
    total = HLaurent.zero()
    for ms in itertools.product(*(leg.items() for leg in legs)):
        beta = 1
        for _, c in ms:
            beta *= c
        m = [n for n, _ in ms]
        for ds in itertools.product(*(b.items() for b in inserts)):
            coeff = beta
            for _, t in ds:
                coeff *= t
            total = total + sandwich_expect(m, [d for d, _ in ds], cap=cap) * coeff
    return total


@functools.lru_cache(maxsize=None)
def psi(p: NCPartition, cap: int = DEFAULT_CAP) -> HLaurent:
    """Product over outer blocks of `phi_eval` of their numbering expressions."""
    if p.n > cap:
        raise BudgetError(f"partition of {p.n} exceeds cap {cap}")
    out = HLaurent.one()
    for b in numbering_map(p):
        out = out * phi_eval(b, cap)
    return out


@functools.lru_cache(maxsize=None)
def _expect_of_product(factors: tuple[AmalgamAlgebraElement, ...]) -> HLaurent:
    half = len(factors) // 2
    left = AmalgamAlgebraElement.identity()
    for f in factors[:half]:
        left = amul(left, f)
    right = AmalgamAlgebraElement.identity()
    for f in factors[half:]:
        right = amul(right, f)
    return expect_product(left, right)


def partition_moment(
    p: NCPartition,
    z: Union[AmalgamAlgebraElement, Sequence[AmalgamAlgebraElement]],
    cap: int = DEFAULT_CAP,
) -> HLaurent:
    """Nested B-valued moment of `p` in the amalgamated algebra.

    `z` is either one element used in every slot or a sequence of n arguments.
    Innermost blocks are collapsed first and their values multiplied back in as
    powers of h.
    """
    if p.n > cap:
        raise BudgetError(f"partition of {p.n} exceeds cap {cap}")
    args = [z] * p.n if isinstance(z, AmalgamAlgebraElement) else list(z)
    if len(args) != p.n:
        raise ValueError(f"need {p.n} arguments, got {len(args)}")
    forest = nesting_forest(p)

    def value(block) -> HLaurent:
        node = forest.nodes[block]
        slots: list[tuple[int, object]] = [(x, args[x - 1]) for x in block]
        slots += [(c[0], value(c)) for c in node.children]
        slots.sort(key=lambda s: s[0])
        factors = tuple(
            s if isinstance(s, AmalgamAlgebraElement) else AmalgamAlgebraElement.from_laurent(s)
            for _, s in slots
        )
        return _expect_of_product(factors)

    out = HLaurent.one()
    for r in forest.roots:
        out = out * value(r)
    return out


def trivial_cumulant(
    n: int,
    z: Union[AmalgamAlgebraElement, Sequence[AmalgamAlgebraElement]],
    cap: int = DEFAULT_CAP,
) -> HLaurent:
    """sum over NC(n) of partition_moment(pi, z) * mu(pi, 1_n)."""
    if n > cap:
        raise BudgetError(f"order {n} exceeds cap {cap}")
    top = NCPartition.one(n)
    total = HLaurent.zero()
    for p in enumerate_nc(n):
        mu = mobius(p, top)
        if mu:
            total = total + partition_moment(p, z, cap) * mu
    return total


def nested_cumulant(p: NCPartition, z: AmalgamAlgebraElement, cap: int = DEFAULT_CAP) -> HLaurent:
    """Multiplicative cumulant of `p`: sum over s <= p of partition_moment(s) * mu(s, p)."""
    total = HLaurent.zero()
    for s in interval(NCPartition.zero(p.n), p):
        total = total + partition_moment(s, z, cap) * mobius(s, p)
    return total


def _check_even_degree(n: int, cap: int) -> None:
    if n < 2 or n % 2:
        raise ValueError(f"degree must be a positive even number, got {n}")
    if n > cap:
        raise BudgetError(f"degree {n} exceeds cap {cap}")


@functools.lru_cache(maxsize=None)
def cumulant_xy(n: int, cap: int = DEFAULT_CAP) -> HLaurent:
    """Trivial n-th B-valued cumulant of x + y, i.e. twice that of x."""
    _check_even_degree(n, cap)
    top = NCPartition.one(n)
    total = HLaurent.zero()
    for p in even_partitions(n):
        total = total + psi(p, cap) * mobius(p, top)
    return total * 2


@dataclass(frozen=True)
class MomentBreakdown:
    degree: int
    value: HLaurent
    strata: dict  # stratum label -> HLaurent contribution

    def stratum_traces(self) -> dict[str, int]:
        return {k: v.trace() for k, v in self.strata.items()}


@functools.lru_cache(maxsize=None)
def moment_xy(n: int, cap: int = DEFAULT_CAP) -> MomentBreakdown:
    """E((x+y)^n) = sum over even theta of 2^|theta| sum_{pi <= theta} mu(pi, theta) Psi(pi)."""
    _check_even_degree(n, cap)
    evens = even_partitions(n)
    strata = {}
    total = HLaurent.zero()
    for sizes, thetas in even_strata(n).items():
        part = HLaurent.zero()
        for theta in thetas:
            inner = HLaurent.zero()
            for p in evens:
                if leq(p, theta):
                    inner = inner + psi(p, cap) * mobius(p, theta)
            part = part + inner * (2 ** len(theta))
        strata[stratum_label(sizes)] = part
        total = total + part
    return MomentBreakdown(n, total, strata)


def scalar_moment(n: int, cap: int = DEFAULT_CAP) -> int:
    """tau((x+y)^n): zero for odd n."""
    if n < 1:
        raise ValueError("degree must be positive")
    if n > cap:
        raise BudgetError(f"degree {n} exceeds cap {cap}")
    if n % 2:
        return 0
    return moment_xy(n, cap).value.trace()


def expect_xy(n: int, cap: int = DEFAULT_CAP) -> HLaurent:
    """E((x+y)^n) through the partition pipeline, zero for odd n."""
    if n % 2:
        if n > cap:
            raise BudgetError(f"degree {n} exceeds cap {cap}")
        return HLaurent.zero()
    return moment_xy(n, cap).value


def mixed_cumulant(pattern: str, cap: int = DEFAULT_CAP) -> HLaurent:
    """Trivial cumulant with arguments spelled by `pattern`, e.g. "xyxy"."""
    table = {"x": amalgam.x_element(), "y": amalgam.y_element()}
    try:
        args = [table[ch] for ch in pattern]
    except KeyError as exc:
        raise ValueError(f"pattern may only contain x and y: {pattern!r}") from exc
    return trivial_cumulant(len(args), args, cap)


def amalgam_moment(n: int, cap: int = DEFAULT_CAP) -> HLaurent:
    """E((x+y)^n) from the normal-form oracle."""
    return amalgam.oracle_moments(n, cap)[n][0]
