"""Exact closed forms for h_s and the square-root recursion b(n).

Everything here is integer arithmetic; floor square roots go through
:func:`math.isqrt`.
"""

from __future__ import annotations

import enum
import math
from dataclasses import dataclass


def isqrt(m: int) -> int:
    """Largest t with t*t <= m."""
    if m < 0:
        raise ValueError(f"isqrt of negative number {m}")
    return math.isqrt(m)


def h0(n: int) -> int:
    if n < 1:
        raise ValueError(f"index must be positive, got {n}")
    return (n + 1) // 2


class RegimeKind(enum.Enum):
    RAMP = "ramp"
    PLATEAU = "plateau"


@dataclass(frozen=True)
class PiecewiseRegime:
    k: int
    kind: RegimeKind


def regime(s: int, n: int) -> PiecewiseRegime:
    """Which branch of the piecewise formula covers index n.

    Ramp k:    2**k + s*k     <= n < 2**(k+1) + s*k
    Plateau k: 2**(k+1) + s*k <= n < 2**(k+1) + s*(k+1)
    """
    if n < 1:
        raise ValueError(f"index must be positive, got {n}")
    for k in range(0, 128):
        top = 2 ** (k + 1) + s * k
        if n < top:
            return PiecewiseRegime(k, RegimeKind.RAMP)
        if n < top + s:
            return PiecewiseRegime(k, RegimeKind.PLATEAU)
    raise ValueError(f"index {n} too large")


def hs_piecewise(s: int, n: int) -> int:
    r = regime(s, n)
    if r.kind is RegimeKind.PLATEAU:
        return 2**r.k
    return h0(n - s * r.k)


def b_recursive(n: int) -> int:
    """b(0) = 1, b(n) = b(n-1) + isqrt(b(n-1))."""
    if n < 0:
        raise ValueError(f"index must be nonnegative, got {n}")
    return b_sequence(n)[n]


def b_sequence(n_max: int) -> list[int]:
    """b(0..n_max) by iterating the recursion."""
    out = [1]
    b = 1
    for _ in range(n_max):
        b += math.isqrt(b)
        out.append(b)
    return out


def _witty_k(n: int) -> int:
    # unique k with 2**k + k <= n < 2**(k+1) + k + 1
    k = 0
    while n >= 2 ** (k + 1) + k + 1:
        k += 1
    return k


def b_witty(n_minus_1: int) -> int:
    """Closed form for b(n-1): 2**k + floor((n-k)**2 / 4)."""
    if n_minus_1 < 0:
        raise ValueError(f"index must be nonnegative, got {n_minus_1}")
    n = n_minus_1 + 1
    k = _witty_k(n)
    return 2**k + (n - k) ** 2 // 4


def h1_closed(n: int) -> int:
    if n < 1:
        raise ValueError(f"index must be positive, got {n}")
    k = _witty_k(n)
    return isqrt(2**k + (n - k) ** 2 // 4)


def predicted_multiplicity(s: int, v: int) -> int:
    """How often h_s takes the value v: s+2 times for powers of 2, else twice."""
    if v < 1:
        raise ValueError(f"value must be positive, got {v}")
    return s + 2 if v & (v - 1) == 0 else 2


def last_index_of_power(s: int, k: int) -> int:
    """Index of the last n with h_s(n) == 2**(k-1)."""
    if k < 1:
        raise ValueError(f"exponent must be >= 1, got {k}")
    return 2**k + s * k
