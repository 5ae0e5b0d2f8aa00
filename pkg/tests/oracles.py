"""Independent reference computations used only by the tests."""

from functools import lru_cache
from pathlib import Path

DATA = Path(__file__).parent / "data"


def table1():
    """Published first 50 rows of h_0..h_6, as {(n, s): value}."""
    cells = {}
    for line in (DATA / "table1.txt").read_text().splitlines():
        if line.startswith("#") or not line.strip():
            continue
        n, *vals = map(int, line.split())
        for s, v in enumerate(vals):
            cells[(n, s)] = v
    return cells


def naive_h(s, n_max):
    """h_s by plain memoized recursion on the two-term formula."""

    @lru_cache(maxsize=None)
    def h(n):
        if n <= s + 2:
            return 1
        if n == s + 3:
            return 2
        return h(n - s - h(n - 1)) + h(n - 2 - s - h(n - 3))

    return [h(n) for n in range(1, n_max + 1)]


def standard_walk(s, n_max):
    """(kind, i, r) for labels 1..n_max, by walking the labeling procedure."""
    out = [("I", 0, 0)]
    i = 1
    while len(out) < n_max:
        out.extend(("S", i, slot) for slot in range(1, s + 1))
        for r in range(1, 2 ** (i - 1) + 1):
            out.append(("C", i, r))
            out.append(("L", i, r))
        i += 1
    return out[:n_max]


def prime_walk(s, n_max):
    out = []
    i = 1
    while len(out) < n_max:
        out.append(("L", i, 1))
        out.append(("C", i, 1))
        out.extend(("S", i, slot) for slot in range(1, s + 1))
        for r in range(2, 2 ** (i - 1) + 1):
            out.append(("L", i, r))
            out.append(("C", i, r))
        i += 1
    return out[:n_max]


def leaf_bits(walk):
    return [1 if kind in ("I", "L") else 0 for kind, _, _ in walk]


def running_sum(bits):
    out, t = [], 0
    for b in bits:
        t += b
        out.append(t)
    return out


def naive_mul(a, b):
    n = len(a)
    out = [0] * n
    for i, x in enumerate(a):
        for j in range(n - i):
            out[i + j] += x * b[j]
    return out


def bottomley(n_max):
    """A109964(0..n_max): a(0)=1, a(n) = floor(sqrt(sum of earlier terms)).

    The root is found by stepping up from the previous one (the sums only grow).
    """
    terms = [1]
    total = 1
    t = 0
    for _ in range(n_max):
        while (t + 1) * (t + 1) <= total:
            t += 1
        terms.append(t)
        total += t
    return terms
