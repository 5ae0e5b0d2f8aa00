"""Truncated power series with exact integer coefficients.

Only what the leaf generating functions need: addition, scaling,
multiplication, closed-form geometric series 1/(1 - z**m), and the two
series built from them.
"""

from __future__ import annotations

import numpy as np


class PowerSeries:
    """Coefficients of z**0 .. z**order, immutable.

    Coefficients are int64; products are computed by integer convolution so
    the result is exact as long as no coefficient overflows 64 bits.
    """

    __slots__ = ("_c",)

    def __init__(self, coefficients, order: int | None = None):
        c = np.asarray(coefficients, dtype=np.int64)
        if c.ndim != 1:
            raise ValueError("coefficients must be one-dimensional")
        if order is not None:
            if order < 0:
                raise ValueError(f"order must be nonnegative, got {order}")
            out = np.zeros(order + 1, dtype=np.int64)
            m = min(order + 1, len(c))
            out[:m] = c[:m]
            c = out
        elif len(c) == 0:
            raise ValueError("empty coefficient list needs an explicit order")
        c = c.copy() if c.flags.writeable else c
        c.setflags(write=False)
        self._c = c

    @property
    def order(self) -> int:
        return len(self._c) - 1

    @property
    def coefficients(self) -> np.ndarray:
        return self._c

    def __getitem__(self, j: int) -> int:
        if not 0 <= j <= self.order:
            raise IndexError(f"coefficient z^{j} beyond truncation order {self.order}")
        return int(self._c[j])

    def tolist(self) -> list[int]:
        return [int(x) for x in self._c]

    def __len__(self):
        return len(self._c)

    def _check(self, other: PowerSeries):
        if not isinstance(other, PowerSeries):
            return NotImplemented
        if other.order != self.order:
            raise ValueError(f"truncation orders differ: {self.order} vs {other.order}")
        return None

    def __add__(self, other):
        if (bad := self._check(other)) is not None:
            return bad
        return PowerSeries(self._c + other._c)

    def __sub__(self, other):
        if (bad := self._check(other)) is not None:
            return bad
        return PowerSeries(self._c - other._c)

    def __mul__(self, other):
        if isinstance(other, (int, np.integer)):
            return series_scale(self, int(other))
        if (bad := self._check(other)) is not None:
            return bad
        return series_mul(self, other)

    __rmul__ = __mul__

    def __eq__(self, other):
        if not isinstance(other, PowerSeries):
            return NotImplemented
        return self.order == other.order and bool(np.array_equal(self._c, other._c))

    def __repr__(self):
        return f"PowerSeries({self.tolist()!r})"


def _same_order(a: PowerSeries, b: PowerSeries):
    if a.order != b.order:
        raise ValueError(f"truncation orders differ: {a.order} vs {b.order}")


def series_add(a: PowerSeries, b: PowerSeries) -> PowerSeries:
    _same_order(a, b)
    return PowerSeries(a.coefficients + b.coefficients)


def series_scale(a: PowerSeries, c: int) -> PowerSeries:
    return PowerSeries(a.coefficients * c)


def series_mul(a: PowerSeries, b: PowerSeries) -> PowerSeries:
    _same_order(a, b)
    n = a.order + 1
    return PowerSeries(np.convolve(a.coefficients, b.coefficients)[:n])


def monomial(j: int, order: int, c: int = 1) -> PowerSeries:
    out = np.zeros(order + 1, dtype=np.int64)
    if 0 <= j <= order:
        out[j] = c
    return PowerSeries(out)


def geometric(m: int, order: int) -> PowerSeries:
    """1/(1 - z**m) = sum_j z**(j*m), truncated."""
    if m < 1:
        raise ValueError(f"exponent must be positive, got {m}")
    out = np.zeros(order + 1, dtype=np.int64)
    out[::m] = 1
    return PowerSeries(out)


def c_series(n: int, order: int) -> PowerSeries:
    """Generating polynomial of the block C_n: z for n = 0, else z^2 + z^4 + ... + z^(2^n)."""
    if n < 0:
        raise ValueError(f"block index must be nonnegative, got {n}")
    if n == 0:
        return monomial(1, order)
    out = np.zeros(order + 1, dtype=np.int64)
    top = min(2**n, order)
    out[2 : top + 1 : 2] = 1
    return PowerSeries(out)


def c_block(n: int) -> list[int]:
    """The 0/1 word C_n: C_0 = 1, C_1 = 01, C_n = C_{n-1} C_{n-1}."""
    if n == 0:
        return [1]
    word = [0, 1]
    for _ in range(n - 1):
        word = word + word
    return word


def d_series(s: int, order: int) -> PowerSeries:
    """Leaf indicator series z + z^2/(1-z^2) * sum_i z^(s*i + 2^i - 1) (1 - z^(2^i))."""
    total = np.zeros(order + 1, dtype=np.int64)
    i = 1
    # later terms only touch exponents above the truncation order
    while (e := s * i + 2**i - 1) <= order:
        total[e] += 1
        if e + 2**i <= order:
            total[e + 2**i] -= 1
        i += 1
    inner = PowerSeries(total)
    return monomial(1, order) + monomial(2, order) * geometric(2, order) * inner


def a_series(s: int, order: int) -> PowerSeries:
    """Leaf count series: d_series(s) / (1 - z)."""
    return d_series(s, order) * geometric(1, order)
