"""Forward evaluation of self-referencing (meta-Fibonacci) recursions.

Every family handled here has the shape

    a(n) = sum_j a(n - outer_j - a(n - inner_j))

so a spec reduces to a list of ``(outer_j, inner_j)`` offsets plus initial
values.  Terms are computed left to right into a dense list; the first time
an argument would leave the already-computed window ``[1, n-1]`` the
sequence is declared dead at ``n``.
"""

from __future__ import annotations

import enum
from dataclasses import dataclass
from typing import Sequence

MAX_LENGTH = 2**40


class Family(enum.Enum):
    CONOLLY = "conolly"
    GENERALIZED_CONOLLY = "generalized_conolly"
    EVEN_PART = "even_part"
    ODD_PART = "odd_part"


@dataclass(frozen=True)
class SequenceSpec:
    family: Family
    s: int
    k: int
    initials: tuple[int, ...]

    def __post_init__(self):
        object.__setattr__(self, "initials", tuple(int(v) for v in self.initials))
        if self.s < 0:
            raise ValueError(f"shift s must be nonnegative, got {self.s}")
        if self.family is not Family.CONOLLY and self.k < 2:
            raise ValueError(f"term count k must be >= 2, got {self.k}")
        if not self.initials:
            raise ValueError("initials must be nonempty")
        if any(v < 0 for v in self.initials):
            raise ValueError("initial values must be nonnegative")
        need = self.min_initials
        if len(self.initials) < need:
            raise ValueError(
                f"{self.family.value} with s={self.s}, k={self.k} needs at least "
                f"{need} initial values, got {len(self.initials)}"
            )

    @property
    def min_initials(self) -> int:
        """Smallest number of initial values before the recursion may fire."""
        if self.family is Family.CONOLLY:
            return 2
        if self.family is Family.GENERALIZED_CONOLLY:
            return self.s + self.k
        if self.family is Family.EVEN_PART:
            # h_s = h_{s,2} fires from n = s+4, i.e. after s+2k-1 initial terms
            return self.s + 2 * self.k - 1
        return self.s + 2 * self.k

    def offsets(self) -> list[tuple[int, int]]:
        """The ``(outer, inner)`` offset pairs of the summands."""
        s, k = self.s, self.k
        if self.family is Family.CONOLLY:
            return [(0, 1), (1, 2)]
        if self.family is Family.GENERALIZED_CONOLLY:
            return [(i + s, i + 1) for i in range(k)]
        if self.family is Family.EVEN_PART:
            return [(2 * j + s, 2 * j + 1) for j in range(k)]
        return [(2 * j + 1 + s, 2 * j + 2) for j in range(k)]


@dataclass(frozen=True)
class DeathReport:
    died_at: int
    offending_argument: int

    def __str__(self):
        return (
            f"sequence died at n={self.died_at}: argument {self.offending_argument} "
            f"lies outside [1, {self.died_at - 1}]"
        )


@dataclass(frozen=True, eq=False)
class SequenceTable:
    """Immutable computed prefix a(1..N) of one sequence.

    ``values`` is stored 0-based (``values[0]`` is a(1)); use ``table[n]`` or
    :func:`value` for 1-based access.
    """

    spec: SequenceSpec
    values: tuple[int, ...]
    death: DeathReport | None = None

    @property
    def alive(self) -> bool:
        return self.death is None

    def __len__(self):
        return len(self.values)

    def __getitem__(self, n: int) -> int:
        return value(self, n)

    def __eq__(self, other):
        if not isinstance(other, SequenceTable):
            return NotImplemented
        return (self.spec, self.values, self.death) == (other.spec, other.values, other.death)

    def __hash__(self):
        return hash((self.spec, self.values, self.death))


def canonical_h_spec(s: int) -> SequenceSpec:
    """h_s: even-part recursion with k=2, s+2 ones followed by a 2."""
    return SequenceSpec(Family.EVEN_PART, s, 2, (1,) * (s + 2) + (2,))


def jackson_ruskey_spec(s: int, k: int) -> SequenceSpec:
    """T_{s,k} with T(j)=1 for j <= s+1 and T(j)=j-s for s+2 <= j <= s+k."""
    if k < 2:
        raise ValueError(f"term count k must be >= 2, got {k}")
    initials = [1] * (s + 1) + [j - s for j in range(s + 2, s + k + 1)]
    return SequenceSpec(Family.GENERALIZED_CONOLLY, s, k, tuple(initials))


def conolly_spec(first: int = 1) -> SequenceSpec:
    """Conolly's F with F(1) = ``first`` (0 or 1) and F(2) = 1."""
    return SequenceSpec(Family.CONOLLY, 0, 2, (first, 1))


def custom_spec(family: Family, s: int, k: int, initials: Sequence[int]) -> SequenceSpec:
    return SequenceSpec(family, s, k, tuple(initials))


def evaluate(spec: SequenceSpec, n_max: int) -> SequenceTable:
    if n_max < 1:
        raise ValueError(f"length must be positive, got {n_max}")
    if n_max > MAX_LENGTH:
        raise ValueError(f"length {n_max} exceeds the supported maximum 2**40")

    a = [0]
    a.extend(spec.initials[:n_max])
    start = len(a)
    terms = spec.offsets()
    if len(terms) == 2:
        death = _run2(a, start, n_max, terms)
    else:
        death = _run(a, start, n_max, terms)
    return SequenceTable(spec, tuple(a[1:]), death)


def _run2(a, start, n_max, terms):
    (o1, i1), (o2, i2) = terms
    append = a.append
    for n in range(start, n_max + 1):
        p = n - i1
        q = n - i2
        if q < 1:
            return DeathReport(n, q)
        x = n - o1 - a[p]
        if x < 1 or x >= n:
            return DeathReport(n, x)
        y = n - o2 - a[q]
        if y < 1 or y >= n:
            return DeathReport(n, y)
        append(a[x] + a[y])
    return None


def _run(a, start, n_max, terms):
    for n in range(start, n_max + 1):
        total = 0
        for outer, inner in terms:
            p = n - inner
            if p < 1:
                return DeathReport(n, p)
            x = n - outer - a[p]
            if x < 1 or x >= n:
                return DeathReport(n, x)
            total += a[x]
        a.append(total)
    return None


def value(table: SequenceTable, n: int) -> int:
    if not 1 <= n <= len(table.values):
        raise IndexError(f"index {n} outside computed range 1..{len(table.values)}")
    return table.values[n - 1]
