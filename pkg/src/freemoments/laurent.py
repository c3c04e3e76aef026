"""Finite Laurent polynomials in h with integer coefficients.

These are the values taken by the conditional expectation: elements
sum_k t_k h^k of the group algebra of the cyclic group generated by h.
"""
from __future__ import annotations

from typing import Iterable, Mapping, Union


class HLaurent:
    """Immutable map exponent -> nonzero integer coefficient."""

    __slots__ = ("_c", "_hash")

    def __init__(self, coeffs: Union[Mapping[int, int], Iterable[tuple[int, int]], None] = None):
        c: dict[int, int] = {}
        if coeffs is not None:
            items = coeffs.items() if isinstance(coeffs, Mapping) else coeffs
            for k, v in items:
                if v:
                    k = int(k)
                    c[k] = c.get(k, 0) + int(v)
            c = {k: v for k, v in c.items() if v}
        self._c = c
        self._hash = None

    @classmethod
    def h(cls, k: int = 1, coeff: int = 1) -> "HLaurent":
        return cls({k: coeff})

    @classmethod
    def zero(cls) -> "HLaurent":
        return cls()

    @classmethod
    def one(cls) -> "HLaurent":
        return cls({0: 1})

    @property
    def coeffs(self) -> dict[int, int]:
        return dict(self._c)

    def items(self):
        return sorted(self._c.items())

    def __getitem__(self, k: int) -> int:
        return self._c.get(k, 0)

    def __iter__(self):
        return iter(sorted(self._c))

    def __len__(self) -> int:
        return len(self._c)

    def __bool__(self) -> bool:
        return bool(self._c)

    def trace(self) -> int:
        """Coefficient of h^0."""
        return self._c.get(0, 0)

    def __add__(self, other: "HLaurent") -> "HLaurent":
        if not isinstance(other, HLaurent):
            return NotImplemented
        out = dict(self._c)
        for k, v in other._c.items():
            out[k] = out.get(k, 0) + v
        return HLaurent(out)

    def __neg__(self) -> "HLaurent":
        return HLaurent({k: -v for k, v in self._c.items()})

    def __sub__(self, other: "HLaurent") -> "HLaurent":
        if not isinstance(other, HLaurent):
            return NotImplemented
        return self + (-other)

    def __mul__(self, other):
        if isinstance(other, int):
            return HLaurent({k: v * other for k, v in self._c.items()})
        if not isinstance(other, HLaurent):
            return NotImplemented
        out: dict[int, int] = {}
        for k1, v1 in self._c.items():
            for k2, v2 in other._c.items():
                out[k1 + k2] = out.get(k1 + k2, 0) + v1 * v2
        return HLaurent(out)

    def __rmul__(self, other):
        if isinstance(other, int):
            return self * other
        return NotImplemented

    def __eq__(self, other) -> bool:
        if isinstance(other, HLaurent):
            return self._c == other._c
        if isinstance(other, int):
            return self._c == ({0: other} if other else {})
        return NotImplemented

    def __hash__(self) -> int:
        if self._hash is None:
            self._hash = hash(frozenset(self._c.items()))
        return self._hash

    def __repr__(self) -> str:
        return f"HLaurent({self})"

    def __str__(self) -> str:
        if not self._c:
            return "0"
        parts = []
        for k in sorted(self._c, reverse=True):
            v = self._c[k]
            mono = "" if k == 0 else ("h" if k == 1 else f"h^{k}")
            if not mono:
                body = str(abs(v))
            elif abs(v) == 1:
                body = mono
            else:
                body = f"{abs(v)}*{mono}"
            sign = "-" if v < 0 else "+"
            parts.append((sign, body))
        head = ("-" if parts[0][0] == "-" else "") + parts[0][1]
        return " ".join([head] + [f"{s} {b}" for s, b in parts[1:]])

    def to_json(self) -> dict[str, str]:
        """Exponents and coefficients as decimal strings."""
        return {str(k): str(v) for k, v in sorted(self._c.items())}

    @classmethod
    def from_json(cls, data: Mapping[str, str]) -> "HLaurent":
        return cls({int(k): int(v) for k, v in data.items()})
