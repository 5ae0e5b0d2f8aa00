"""Regenerate the bundled OEIS b-files from their defining formulas.

Run from the repository root; writes into src/conolly_kit/data/.  Kept
independent of the package on purpose: these files are the external
reference the recursion engine is checked against.
"""

import math
from pathlib import Path

OUT = Path(__file__).resolve().parents[1] / "src" / "conolly_kit" / "data"
LAST = 10000


def a008619(last):
    # a(n) = floor(n/2) + 1, offset 0
    return [(n, n // 2 + 1) for n in range(last + 1)]


def a109964(last):
    # a(0) = 1, a(n) = floor(sqrt(a(0) + ... + a(n-1))), offset 0
    terms = [1]
    total = 1
    for _ in range(last):
        t = math.isqrt(total)
        terms.append(t)
        total += t
    return list(enumerate(terms))


def write(name, title, formula, records):
    lines = [f"# {title}", f"# {formula}", "# offset 0; regenerated locally from the defining formula"]
    lines += [f"{n} {v}" for n, v in records]
    (OUT / name).write_text("\n".join(lines) + "\n")


if __name__ == "__main__":
    OUT.mkdir(parents=True, exist_ok=True)
    write("b008619.txt", "A008619", "a(n) = floor(n/2) + 1", a008619(LAST))
    write("b109964.txt", "A109964", "a(0) = 1, a(n) = floor(sqrt(Sum_{k=0..n-1} a(k)))",
          a109964(LAST))
