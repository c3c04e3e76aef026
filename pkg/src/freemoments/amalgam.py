"""Normal forms and exact algebra in G = F(a,b) *_<h> F(c,d).

An element of G is written h^k s_1 ... s_r where consecutive syllables s_i
come from different factors and each s_i is the canonical representative of
its right coset <h> s_i, i.e. the shortest (then lexicographically least)
element of that coset.  The representation is unique, so normal forms can be
used as dictionary keys for the group algebra of G.
"""
from __future__ import annotations

import functools
import math
from collections import defaultdict
from typing import Iterable, Mapping, NamedTuple, Optional, Sequence

from . import words
from .algebra import DEFAULT_CAP, BudgetError, GroupAlgebraElement
from .laurent import HLaurent
from .words import Word

Syllable = tuple  # (factor, Word)

# Term-count guard for the power iteration.
DEFAULT_MAX_TERMS = 5_000_000


class MemoryBudgetError(BudgetError):
    def __init__(self, message: str, degree_reached: int):
        super().__init__(message)
        self.degree_reached = degree_reached


class NormalForm(NamedTuple):
    h: int
    syllables: tuple = ()

    def __str__(self) -> str:
        parts = [f"h^{self.h}"]
        parts += [f"f{f}:{words.render(w).replace(' ', '')}" for f, w in self.syllables]
        return " | ".join(parts)


IDENTITY = NormalForm(0, ())


@functools.lru_cache(maxsize=1 << 20)
def coset_rep(w: Word, factor: int) -> tuple[int, Word]:
    """Split `w` as h^e * rep with rep minimal in the coset <h> w.

    Minimal means shortest, ties broken by the canonical letter order.  Since
    |h^m w| >= 4|m| - |w|, no shift with |m| > |w|/2 can beat m = 0.
    """
    if not w:
        return 0, words.EMPTY
    bound = math.ceil(len(w) / 2) + 1
    best_m, best = 0, w
    for m in range(-bound, bound + 1):
        if m == 0:
            continue
        cand = words.multiply(words.h_word(m, factor), w)
        if (len(cand), cand) < (len(best), best):
            best_m, best = m, cand
    return -best_m, best


def parse_form(s: str) -> NormalForm:
    """Read the "h^k | f1:word | f2:word" rendering back (the result is normalized)."""
    head, *rest = [p.strip() for p in s.split("|")]
    if not head.startswith("h^"):
        raise ValueError(f"bad normal form {s!r}")
    raw = []
    for part in rest:
        tag, _, body = part.partition(":")
        raw.append((int(tag.lstrip("f")), words.parse(body)))
    return normalize(raw, int(head[2:]))


def _merge(syllables: Iterable[Syllable]) -> list[list]:
    out: list[list] = []
    for f, w in syllables:
        if not w:
            continue
        if out and out[-1][0] == f:
            merged = words.multiply(out[-1][1], w)
            if merged:
                out[-1][1] = merged
            else:
                out.pop()
        else:
            out.append([f, w])
    return out


def normalize(raw: Sequence[Syllable], h: int = 0) -> NormalForm:
    """Normal form of h^h * w_1 * w_2 * ... for (factor, reduced word) pairs w_i."""
    for f, w in raw:
        if f not in (1, 2):
            raise ValueError(f"syllable factor must be 1 or 2, not {f!r}")
    syl = _merge(raw)
    while True:
        carry = 0
        out: list[list] = []
        dissolved = False
        for f, w in reversed(syl):
            if carry:
                w = words.multiply(w, words.h_word(carry, f))
            carry, rep = coset_rep(w, f)
            if rep:
                out.append([f, rep])
            else:
                dissolved = True
        h += carry
        out.reverse()
        if not dissolved:
            return NormalForm(h, tuple((f, w) for f, w in out))
        syl = _merge(out)


def _mul_forms(u: NormalForm, v: NormalForm) -> NormalForm:
    if not v.syllables:
        if not v.h:
            return u
        return normalize(u.syllables + ((1, words.h_word(v.h, 1)),), u.h)
    if not u.syllables:
        return NormalForm(u.h + v.h, v.syllables)
    mid = ((1, words.h_word(v.h, 1)),) if v.h else ()
    return normalize(u.syllables + mid + v.syllables, u.h)


def _mul_letter(u: NormalForm, x: int) -> NormalForm:
    f = 1 if x < 4 else 2
    syl = u.syllables
    if syl and syl[-1][0] == f:
        w = words.multiply(syl[-1][1], (x,))
        if not w:
            return NormalForm(u.h, syl[:-1])
        e, rep = coset_rep(w, f)
        if e == 0:
            return NormalForm(u.h, syl[:-1] + ((f, rep),))
        return normalize(syl[:-1] + ((f, w),), u.h)
    # a single letter is its own coset representative
    return NormalForm(u.h, syl + ((f, (x,)),))


def form_inverse(u: NormalForm) -> NormalForm:
    raw = tuple((f, words.inverse(w)) for f, w in reversed(u.syllables))
    if u.h:
        raw += ((1, words.h_word(-u.h, 1)),)
    return normalize(raw)


class AmalgamAlgebraElement:
    """Finite map NormalForm -> nonzero int.  Treated as immutable."""

    __slots__ = ("terms", "_hash")

    def __init__(self, terms: Optional[Mapping[NormalForm, int]] = None):
        self.terms: dict[NormalForm, int] = {k: c for k, c in (terms or {}).items() if c}
        self._hash = None

    @classmethod
    def identity(cls) -> "AmalgamAlgebraElement":
        return cls({IDENTITY: 1})

    @classmethod
    def from_laurent(cls, b: HLaurent) -> "AmalgamAlgebraElement":
        return cls({NormalForm(k, ()): c for k, c in b.items()})

    @classmethod
    def embed(cls, f: GroupAlgebraElement) -> "AmalgamAlgebraElement":
        """Image of a factor-1 or factor-2 group-algebra element."""
        out: dict[NormalForm, int] = defaultdict(int)
        for w, c in f.terms.items():
            out[normalize(((f.factor, w),))] += c
        return cls(out)

    def __add__(self, other: "AmalgamAlgebraElement") -> "AmalgamAlgebraElement":
        out = dict(self.terms)
        for k, c in other.terms.items():
            out[k] = out.get(k, 0) + c
        return AmalgamAlgebraElement(out)

    def __sub__(self, other: "AmalgamAlgebraElement") -> "AmalgamAlgebraElement":
        return self + other * -1

    def __mul__(self, other):
        if isinstance(other, int):
            return AmalgamAlgebraElement({k: c * other for k, c in self.terms.items()})
        return amul(self, other)

    def __rmul__(self, k: int) -> "AmalgamAlgebraElement":
        return self * k

    def __pow__(self, n: int) -> "AmalgamAlgebraElement":
        return power(self, n)

    def __eq__(self, other) -> bool:
        if not isinstance(other, AmalgamAlgebraElement):
            return NotImplemented
        return self.terms == other.terms

    def __hash__(self) -> int:
        if self._hash is None:
            self._hash = hash(frozenset(self.terms.items()))
        return self._hash

    def __len__(self) -> int:
        return len(self.terms)

    def __getitem__(self, k: NormalForm) -> int:
        return self.terms.get(k, 0)

    def __repr__(self) -> str:
        body = " + ".join(f"{c}*[{k}]" for k, c in sorted(self.terms.items()))
        return f"AmalgamAlgebraElement({body or '0'})"

    def to_json(self) -> dict[str, str]:
        return {str(k): str(c) for k, c in sorted(self.terms.items())}


def amul(f: AmalgamAlgebraElement, g: AmalgamAlgebraElement) -> AmalgamAlgebraElement:
    out: dict[NormalForm, int] = defaultdict(int)
    gitems = list(g.terms.items())
    single = all(not v.h and len(v.syllables) == 1 and len(v.syllables[0][1]) == 1 for v, _ in gitems)
    for u, cu in f.terms.items():
        for v, cv in gitems:
            if single:
                k = _mul_letter(u, v.syllables[0][1][0])
            else:
                k = _mul_forms(u, v)
            out[k] += cu * cv
    return AmalgamAlgebraElement(out)


def power(z: AmalgamAlgebraElement, n: int) -> AmalgamAlgebraElement:
    out = AmalgamAlgebraElement.identity()
    for _ in range(n):
        out = amul(out, z)
    return out


def amalgam_expect(f: AmalgamAlgebraElement) -> HLaurent:
    """The expectation onto <h>: collect the pure h-power terms."""
    return HLaurent({k.h: c for k, c in f.terms.items() if not k.syllables})


def tau(f: AmalgamAlgebraElement) -> int:
    return f.terms.get(IDENTITY, 0)


def expect_product(f: AmalgamAlgebraElement, g: AmalgamAlgebraElement) -> HLaurent:
    """amalgam_expect(f * g) without forming the product.

    u * v lies in <h> exactly when u and v^-1 share their syllables, i.e. lie in
    the same right coset of <h>; then u * v = h^(u.h - (v^-1).h).
    """
    left: dict[tuple, list] = defaultdict(list)
    for u, c in f.terms.items():
        left[u.syllables].append((u.h, c))
    out: dict[int, int] = defaultdict(int)
    for v, c in g.terms.items():
        vi = form_inverse(v)
        for e, cu in left.get(vi.syllables, ()):
            out[e - vi.h] += cu * c
    return HLaurent(out)


def generating_element() -> AmalgamAlgebraElement:
    """x + y = a + b + a^-1 + b^-1 + c + d + c^-1 + d^-1."""
    return AmalgamAlgebraElement({NormalForm(0, ((words.Letter(x).factor, (x,)),)): 1 for x in range(8)})


def x_element() -> AmalgamAlgebraElement:
    return AmalgamAlgebraElement({NormalForm(0, ((1, (x,)),)): 1 for x in range(4)})


def y_element() -> AmalgamAlgebraElement:
    return AmalgamAlgebraElement({NormalForm(0, ((2, (x,)),)): 1 for x in range(4, 8)})


def oracle_moments(
    max_degree: int,
    cap: int = DEFAULT_CAP,
    z: Optional[AmalgamAlgebraElement] = None,
    max_terms: int = DEFAULT_MAX_TERMS,
) -> dict[int, tuple[HLaurent, int]]:
    """E(z^n) and tau(z^n) for n = 1..max_degree, z = x + y by default.

    Powers z^j are built by repeated multiplication up to j = ceil(max_degree/2);
    degree n is then read off as expect_product(z^ceil(n/2), z^floor(n/2)).
    """
    if max_degree > cap:
        raise BudgetError(f"degree {max_degree} exceeds cap {cap}")
    z = generating_element() if z is None else z
    half = (max_degree + 1) // 2
    powers = [AmalgamAlgebraElement.identity()]
    for j in range(1, half + 1):
        nxt = amul(powers[-1], z)
        if len(nxt) > max_terms:
            raise MemoryBudgetError(
                f"z^{j} has {len(nxt)} terms, over the limit {max_terms}", degree_reached=2 * (j - 1)
            )
        powers.append(nxt)
    out = {}
    for n in range(1, max_degree + 1):
        a = (n + 1) // 2
        e = expect_product(powers[a], powers[n - a])
        out[n] = (e, e.trace())
    return out
