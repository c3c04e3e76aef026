"""Powers of the radial element X_1 in the free group of rank N.

In the group algebra of F_N the sphere sums satisfy

    X_1 X_0 = X_1,   X_1 X_1 = X_2 + 2N e,   X_1 X_n = X_{n+1} + (2N-1) X_{n-1}  (n >= 2),

so X_1^m = sum_n beta[m][n] X_n with integer coefficients supported on
n = m (mod 2).  For N = 2 the even-degree coefficients are usually called p and
the odd-degree ones q.
"""
from __future__ import annotations

import functools
from dataclasses import dataclass, field

from .laurent import HLaurent


@dataclass(frozen=True)
class RadialPolynomial:
    N: int
    degree: int
    coeffs: dict[int, int] = field(hash=False)

    def __getitem__(self, n: int) -> int:
        return self.coeffs.get(n, 0)

    def p(self, j: int) -> int:
        """Coefficient of X_j in an even power."""
        if self.degree % 2:
            raise ValueError("p coefficients belong to even powers")
        return self[j]

    def q(self, i: int) -> int:
        """Coefficient of X_i in an odd power."""
        if not self.degree % 2:
            raise ValueError("q coefficients belong to odd powers")
        return self[i]

    def rows(self) -> list[tuple[int, int]]:
        """(n, beta_n) pairs in decreasing n."""
        return sorted(self.coeffs.items(), reverse=True)


def _step(prev: dict[int, int], N: int) -> dict[int, int]:
    out: dict[int, int] = {}
    for n, c in prev.items():
        if n == 0:
            out[1] = out.get(1, 0) + c
        elif n == 1:
            out[2] = out.get(2, 0) + c
            out[0] = out.get(0, 0) + 2 * N * c
        else:
            out[n + 1] = out.get(n + 1, 0) + c
            out[n - 1] = out.get(n - 1, 0) + (2 * N - 1) * c
    return {n: c for n, c in out.items() if c}


@functools.lru_cache(maxsize=None)
def _coeffs(m: int, N: int) -> tuple[tuple[int, int], ...]:
    if m == 0:
        return ((0, 1),)
    return tuple(sorted(_step(dict(_coeffs(m - 1, N)), N).items()))


def radial_power(m: int, N: int = 2) -> RadialPolynomial:
    """Expansion of X_1^m in sphere sums of F_N."""
    if m < 0:
        raise ValueError("m must be nonnegative")
    if N < 1:
        raise ValueError("rank must be positive")
    return RadialPolynomial(N, m, dict(_coeffs(m, N)))


def sphere_expect(n: int) -> HLaurent:
    """E(X_n) in F_2: h^{n/4} + h^{-n/4} when 4 | n > 0, e for n = 0, else 0."""
    if n == 0:
        return HLaurent.one()
    if n % 4:
        return HLaurent.zero()
    return HLaurent({n // 4: 1, -n // 4: 1})


@functools.lru_cache(maxsize=None)
def expect_power(m: int) -> HLaurent:
    """E(x^m) for x = a + b + a^-1 + b^-1."""
    out = HLaurent.zero()
    for n, beta in radial_power(m, 2).coeffs.items():
        if n % 4 == 0:
            out = out + sphere_expect(n) * beta
    return out


def tau_free(n: int, N: int) -> int:
    """Trace of X_1^n in the group algebra of F_N (number of closed walks of length n)."""
    return radial_power(n, N)[0]
