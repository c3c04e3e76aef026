"""Exact group-algebra arithmetic over a single free factor.

Elements are finite integer combinations of reduced words.  The conditional
expectation keeps the terms that are powers of h = aba^-1b^-1 (or cdc^-1d^-1
in factor 2) and returns them as an `HLaurent`.
"""
from __future__ import annotations

import functools
from collections import defaultdict
from typing import Mapping, Optional, Sequence

from . import words
from .laurent import HLaurent
from .words import Word

DEFAULT_CAP = 10


class BudgetError(ValueError):
    """A requested computation exceeds the configured degree budget."""


class GroupAlgebraElement:
    """Finite map reduced word -> nonzero int, tagged with its factor."""

    __slots__ = ("terms", "factor")

    def __init__(self, terms: Optional[Mapping[Word, int]] = None, factor: int = 1):
        self.factor = factor
        self.terms: dict[Word, int] = {w: c for w, c in (terms or {}).items() if c}

    @classmethod
    def identity(cls, factor: int = 1) -> "GroupAlgebraElement":
        return cls({words.EMPTY: 1}, factor)

    @classmethod
    def word(cls, w: Word, factor: int = 1, coeff: int = 1) -> "GroupAlgebraElement":
        return cls({tuple(w): coeff}, factor)

    def _check(self, other: "GroupAlgebraElement") -> None:
        if self.factor != other.factor:
            raise ValueError(f"factor mismatch: {self.factor} vs {other.factor}")

    def __add__(self, other: "GroupAlgebraElement") -> "GroupAlgebraElement":
        return gadd(self, other)

    def __sub__(self, other: "GroupAlgebraElement") -> "GroupAlgebraElement":
        return gadd(self, gscale(other, -1))

    def __mul__(self, other):
        if isinstance(other, int):
            return gscale(self, other)
        return gmul(self, other)

    def __rmul__(self, k: int) -> "GroupAlgebraElement":
        return gscale(self, k)

    def __pow__(self, n: int) -> "GroupAlgebraElement":
        out = GroupAlgebraElement.identity(self.factor)
        for _ in range(n):
            out = gmul(out, self)
        return out

    def __eq__(self, other) -> bool:
        if not isinstance(other, GroupAlgebraElement):
            return NotImplemented
        return self.factor == other.factor and self.terms == other.terms

    def __len__(self) -> int:
        return len(self.terms)

    def __getitem__(self, w: Word) -> int:
        return self.terms.get(w, 0)

    def __repr__(self) -> str:
        body = " + ".join(f"{c}*[{words.render(w)}]" for w, c in sorted(self.terms.items()))
        return f"GroupAlgebraElement(factor={self.factor}, {body or '0'})"

    def to_json(self) -> dict[str, str]:
        return {words.render(w): str(c) for w, c in sorted(self.terms.items())}

    @classmethod
    def from_json(cls, data: Mapping[str, str], factor: int = 1) -> "GroupAlgebraElement":
        return cls({words.parse(k): int(v) for k, v in data.items()}, factor)


def gadd(f: GroupAlgebraElement, g: GroupAlgebraElement) -> GroupAlgebraElement:
    f._check(g)
    out = dict(f.terms)
    for w, c in g.terms.items():
        out[w] = out.get(w, 0) + c
    return GroupAlgebraElement(out, f.factor)


def gscale(f: GroupAlgebraElement, k: int) -> GroupAlgebraElement:
    return GroupAlgebraElement({w: c * k for w, c in f.terms.items()}, f.factor)


def gmul(f: GroupAlgebraElement, g: GroupAlgebraElement) -> GroupAlgebraElement:
    """Convolution product."""
    f._check(g)
    out: dict[Word, int] = defaultdict(int)
    mul = words.multiply
    gitems = list(g.terms.items())
    for u, cu in f.terms.items():
        for v, cv in gitems:
            out[mul(u, v)] += cu * cv
    return GroupAlgebraElement(out, f.factor)


@functools.lru_cache(maxsize=None)
def _sphere(n: int, factor: int) -> tuple[Word, ...]:
    return tuple(words.sphere_words(n, factor))


def sphere_sum(n: int, factor: int = 1) -> GroupAlgebraElement:
    """X_n: the sum of all reduced words of length n."""
    if n < 0:
        raise ValueError("sphere radius must be nonnegative")
    return GroupAlgebraElement(dict.fromkeys(_sphere(n, factor), 1), factor)


def embed_laurent(b: HLaurent, factor: int = 1) -> GroupAlgebraElement:
    """Substitute h -> commutator word of `factor`."""
    return GroupAlgebraElement({words.h_word(k, factor): c for k, c in b.items()}, factor)


def cond_expect(f: GroupAlgebraElement) -> HLaurent:
    """Keep the h-power terms of `f`."""
    if f.factor == words.AMBIENT:
        raise ValueError("the conditional expectation is defined on factor 1 or 2")
    out = {}
    for w, c in f.terms.items():
        k = words.h_power_of(w, f.factor)
        if k is not None:
            out[k] = c
    return HLaurent(out)


def phi_trace(b: HLaurent) -> int:
    return b.trace()


def tau_trace(f: GroupAlgebraElement) -> int:
    """Coefficient of the identity word."""
    return f.terms.get(words.EMPTY, 0)


def constrained_sphere_sum(
    n: int, factor: int = 1, first: Optional[int] = None, last: Optional[int] = None
) -> GroupAlgebraElement:
    return GroupAlgebraElement(
        dict.fromkeys(words.sphere_words(n, factor, first=first, last=last), 1), factor
    )


@functools.lru_cache(maxsize=None)
def f_pq(k: int, l: int, p: int, q: int, cap: int = 9) -> HLaurent:
    """E of (sum of length-k words ending in p) times (sum of length-l words starting with q).

    Computed by enumerating both constrained spheres; `p` and `q` are factor-1
    letters.
    """
    if k < 1 or l < 1:
        raise ValueError("k and l must be positive")
    if k > cap or l > cap:
        raise BudgetError(f"f_pq({k}, {l}) exceeds the cap {cap}")
    left = constrained_sphere_sum(k, 1, last=p)
    right = constrained_sphere_sum(l, 1, first=q)
    return cond_expect(gmul(left, right))


@functools.lru_cache(maxsize=None)
def _sandwich(m: tuple[int, ...], d: tuple[int, ...], factor: int) -> HLaurent:
    prod = sphere_sum(m[0], factor)
    for dj, mj in zip(d, m[1:]):
        if dj:
            prod = gmul(prod, GroupAlgebraElement.word(words.h_word(dj, factor), factor))
        if mj:
            prod = gmul(prod, sphere_sum(mj, factor))
    return cond_expect(prod)


def sandwich_expect(
    m: Sequence[int], d: Sequence[int], factor: int = 1, cap: int = DEFAULT_CAP
) -> HLaurent:
    """E(X_{m1} h^{d1} X_{m2} ... h^{d_{r}} X_{m_{r+1}}) by direct convolution.

    The degree budget counts word length: sum(m) + 4*sum(|d|) must not exceed `cap`.
    """
    m, d = tuple(m), tuple(d)
    if len(m) != len(d) + 1:
        raise ValueError("need exactly one more sphere index than h exponent")
    if any(x < 0 for x in m):
        raise ValueError("sphere indices must be nonnegative")
    budget = sum(m) + 4 * sum(abs(x) for x in d)
    if budget > cap:
        raise BudgetError(f"sandwich degree {budget} exceeds cap {cap}")
    return _sandwich(m, d, factor)
