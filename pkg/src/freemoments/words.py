"""Reduced words in free groups on the letters a, b, c, d.

Words are plain tuples of integer letter codes, so they hash and compare
cheaply and can be used directly as dictionary keys.  The code of a letter
fixes the canonical order a < A < b < B < c < C < d < D, where an uppercase
letter is the inverse of the lowercase one.  Inversion flips the low bit.

Two "factors" are distinguished: factor 1 uses a, b and factor 2 uses c, d.
Factor 0 is the ambient free group of rank 4 on all four generators.
"""
from __future__ import annotations

import enum
import functools
from typing import Iterator, Optional, Sequence

Word = tuple  # tuple[int, ...] of letter codes; always freely reduced

EMPTY: Word = ()

AMBIENT = 0


class Letter(enum.IntEnum):
    a = 0
    A = 1
    b = 2
    B = 3
    c = 4
    C = 5
    d = 6
    D = 7

    @property
    def base(self) -> str:
        return "abcd"[self >> 1]

    @property
    def sign(self) -> int:
        return -1 if self & 1 else 1

    @property
    def factor(self) -> int:
        return 1 if self < 4 else 2

    @property
    def inverse(self) -> "Letter":
        return Letter(self ^ 1)


_SYMBOLS = "aAbBcCdD"


def letters_of(factor: int) -> tuple[int, ...]:
    """Letter codes available in `factor` (0 is the rank-4 ambient group)."""
    if factor == 1:
        return (0, 1, 2, 3)
    if factor == 2:
        return (4, 5, 6, 7)
    if factor == AMBIENT:
        return tuple(range(8))
    raise ValueError(f"unknown factor {factor!r}")


def factor_of(w: Sequence[int]) -> Optional[int]:
    """Return 1 or 2 if every letter of `w` lies in that factor, None for the empty word.

    Raises ValueError if the word mixes letters of both factors.
    """
    if not w:
        return None
    f = 1 if w[0] < 4 else 2
    for x in w:
        if (x < 4) != (f == 1):
            raise ValueError(f"word {render(w)!r} mixes letters of both factors")
    return f


def reduce(letters: Sequence[int]) -> Word:
    """Freely reduce a sequence of letter codes.

    >>> render(reduce(parse("a b B a")))
    'a a'
    >>> reduce(parse("a A"))
    ()
    """
    stack: list[int] = []
    for x in letters:
        x = int(x)
        if stack and stack[-1] == x ^ 1:
            stack.pop()
        else:
            stack.append(x)
    return tuple(stack)


def multiply(w1: Word, w2: Word) -> Word:
    """Product of two reduced words, cancelling only at the seam."""
    n = min(len(w1), len(w2))
    i = 0
    while i < n and w1[-1 - i] == w2[i] ^ 1:
        i += 1
    if i == 0:
        return w1 + w2
    return w1[: len(w1) - i] + w2[i:]


def inverse(w: Word) -> Word:
    return tuple(x ^ 1 for x in reversed(w))


def commutator(factor: int) -> Word:
    """The amalgamating element h, spelled in the letters of `factor`."""
    if factor == 1:
        return (0, 2, 1, 3)  # a b A B
    if factor == 2:
        return (4, 6, 5, 7)  # c d C D
    raise ValueError(f"h is only defined in factor 1 or 2, not {factor!r}")


@functools.lru_cache(maxsize=None)
def h_word(k: int, factor: int) -> Word:
    """Reduced spelling of h**k in `factor`; its length is 4|k|."""
    base = commutator(factor)
    if k < 0:
        base = inverse(base)
    return base * abs(k)


def h_power_of(w: Word, factor: int) -> Optional[int]:
    """Return k if `w` equals h**k in `factor`, otherwise None."""
    f = factor_of(w)
    if f is None:
        return 0
    if f != factor:
        raise ValueError(f"word {render(w)!r} is not in factor {factor}")
    n, r = divmod(len(w), 4)
    if r:
        return None
    if w == h_word(n, factor):
        return n
    if w == h_word(-n, factor):
        return -n
    return None


def sphere_words(
    n: int,
    factor: int,
    first: Optional[int] = None,
    last: Optional[int] = None,
) -> Iterator[Word]:
    """Yield the reduced words of length `n` over `factor`, in canonical lex order.

    `first` and `last` optionally pin the initial and final letter.
    """
    alphabet = letters_of(factor)
    for pinned in (first, last):
        if pinned is not None and int(pinned) not in alphabet:
            raise ValueError(f"letter {pinned!r} is not in factor {factor}")
    if n == 0:
        if first is None and last is None:
            yield EMPTY
        return

    def extend(prefix: list[int]) -> Iterator[Word]:
        if len(prefix) == n:
            if last is None or prefix[-1] == last:
                yield tuple(prefix)
            return
        for x in alphabet:
            if prefix and x == prefix[-1] ^ 1:
                continue
            prefix.append(x)
            yield from extend(prefix)
            prefix.pop()

    starts = alphabet if first is None else (int(first),)
    for x in starts:
        yield from extend([x])


def render(w: Sequence[int]) -> str:
    """Space-separated letters, uppercase for inverses, "e" for the identity."""
    if not w:
        return "e"
    return " ".join(_SYMBOLS[x] for x in w)


def parse(s: str) -> Word:
    """Inverse of `render`; spaces are optional.  The result is reduced."""
    s = s.strip()
    if s in ("", "e"):
        return EMPTY
    codes = []
    for ch in s.replace(" ", ""):
        try:
            codes.append(_SYMBOLS.index(ch))
        except ValueError:
            raise ValueError(f"bad letter {ch!r} in word {s!r}") from None
    return reduce(codes)
