"""Cross-engine comparison and checks of the structural claims about h_s."""

from __future__ import annotations

from collections import Counter
from dataclasses import dataclass, field
from typing import Sequence

from . import closedform, genfunc, tree
from .bfile import parse_bfile
from .recurrence import Family, SequenceTable, canonical_h_spec, evaluate, jackson_ruskey_spec


def check_slow_growing(table: SequenceTable | Sequence[int]) -> int | None:
    """First n with a(n+1) - a(n) not in {0, 1}, or None.

    Accepts a table or a plain 0-based list of a(1), a(2), ...
    """
    v = table.values if isinstance(table, SequenceTable) else table
    for n in range(1, len(v)):
        d = v[n] - v[n - 1]
        if d != 0 and d != 1:
            return n
    return None


@dataclass
class FrequencyReport:
    s: int
    complete_up_to: int
    counts: dict[int, int]
    violations: list[tuple[int, int, int]] = field(default_factory=list)

    @property
    def ok(self) -> bool:
        return not self.violations


def _is_canonical_shape(table: SequenceTable) -> bool:
    spec = table.spec
    return spec.family is Family.EVEN_PART and spec.k == 2


def frequency_report(table: SequenceTable, predict: bool | None = None) -> FrequencyReport:
    """Occurrence counts of every value that can no longer reappear.

    A value v is complete once the last computed term exceeds v.  Counts are
    compared with the predicted multiplicity (s+2 for powers of two, 2
    otherwise) when ``predict`` is true; by default only for h_s tables.
    """
    bad = check_slow_growing(table)
    if bad is not None:
        raise ValueError(f"table is not slowly growing (step at n={bad}); counts would be incomplete")
    s = table.spec.s
    if predict is None:
        predict = _is_canonical_shape(table)
    values = table.values
    last = values[-1] if values else 0
    counts = {v: c for v, c in sorted(Counter(values).items()) if v < last}
    violations = []
    if predict:
        for v, c in counts.items():
            if v < 1:
                continue
            want = closedform.predicted_multiplicity(s, v)
            if c != want:
                violations.append((v, want, c))
    return FrequencyReport(s, last - 1, counts, violations)


@dataclass
class Mismatch:
    n: int
    values: dict[str, int]


@dataclass
class CrossCheckReport:
    s: int
    n_max: int
    engines: tuple[str, ...]
    coverage: dict[str, int]
    first_mismatch: Mismatch | None = None

    @property
    def ok(self) -> bool:
        return self.first_mismatch is None


def closed_form_value(s: int, n: int) -> list[tuple[str, int]]:
    """Every closed form applicable at this s, as (name, value) pairs."""
    if s == 0:
        return [("h0", closedform.h0(n))]
    out = [("piecewise", closedform.hs_piecewise(s, n))]
    if s == 1:
        out.append(("h1_closed", closedform.h1_closed(n)))
    return out


def engine_columns(s: int, n_max: int, genfunc_max: int | None = None) -> dict[str, list[int]]:
    """h_s(1..m) from each engine; genfunc is truncated at ``genfunc_max``."""
    gmax = n_max if genfunc_max is None else min(genfunc_max, n_max)
    cols: dict[str, list[int]] = {}
    table = evaluate(canonical_h_spec(s), n_max)
    if not table.alive:
        raise RuntimeError(f"h_{s} died: {table.death}")
    cols["recursion"] = list(table.values)
    cols["tree"] = [tree.leaf_count(s, n) for n in range(1, n_max + 1)]
    names = [name for name, _ in closed_form_value(s, 1)]
    per_n = [closed_form_value(s, n) for n in range(1, n_max + 1)]
    for j, name in enumerate(names):
        cols[name] = [row[j][1] for row in per_n]
    cols["genfunc"] = genfunc.a_series(s, gmax).tolist()[1:]
    return cols


def cross_check(s: int, n_max: int, genfunc_max: int | None = None) -> CrossCheckReport:
    """Compare h_s(1..n_max) across recursion, tree, closed forms and a_series."""
    if n_max < 1:
        raise ValueError(f"length must be positive, got {n_max}")
    cols = engine_columns(s, n_max, genfunc_max)
    coverage = {name: len(col) for name, col in cols.items()}
    report = CrossCheckReport(s, n_max, tuple(cols), coverage)
    for n in range(1, n_max + 1):
        vals = {name: col[n - 1] for name, col in cols.items() if n <= len(col)}
        if len(set(vals.values())) > 1:
            report.first_mismatch = Mismatch(n, vals)
            break
    return report


def _complete_table(spec, threshold: int, start: int = 64) -> SequenceTable:
    # grow until the last term exceeds threshold, so counts of threshold are final
    n = start
    while True:
        table = evaluate(spec, n)
        if not table.alive:
            raise RuntimeError(f"sequence died: {table.death}")
        if table.values[-1] > threshold:
            return table
        n *= 2


def tsk_power_frequency(s: int, k: int, r_max: int) -> list[tuple[int, int, int, int]]:
    """(r, count in T_{s,k}, count in T_{0,k}, difference) for r = 1..r_max."""
    if k < 2:
        raise ValueError(f"term count k must be >= 2, got {k}")
    if r_max < 1:
        raise ValueError(f"r_max must be >= 1, got {r_max}")
    top = k**r_max
    ts = _complete_table(jackson_ruskey_spec(s, k), top)
    t0 = _complete_table(jackson_ruskey_spec(0, k), top)
    cs, c0 = Counter(ts.values), Counter(t0.values)
    return [(r, cs[k**r], c0[k**r], cs[k**r] - c0[k**r]) for r in range(1, r_max + 1)]


@dataclass
class BFileMismatch:
    n: int
    expected: int
    actual: int


def compare_bfile(table: SequenceTable, fixture: str | list[tuple[int, int]],
                  offset_shift: int = 0) -> BFileMismatch | None:
    """Check ``table[n] == fixture[n + offset_shift]`` for every fixture record.

    Records that map to n < 1 (such as an extra leading term) are skipped;
    records beyond the table raise, so the caller must compute far enough.
    """
    records = parse_bfile(fixture) if isinstance(fixture, str) else fixture
    for index, expected in records:
        n = index - offset_shift
        if n < 1:
            continue
        if n > len(table):
            raise ValueError(f"fixture index {index} maps to n={n}, beyond table length {len(table)}")
        actual = table[n]
        if actual != expected:
            return BFileMismatch(n, expected, actual)
    return None


def fixture_span(fixture: str | list[tuple[int, int]], offset_shift: int = 0) -> int:
    """Largest n the fixture reaches after alignment (0 if none)."""
    records = parse_bfile(fixture) if isinstance(fixture, str) else fixture
    return max((i - offset_shift for i, _ in records), default=0)


def last_index_of_value(values, v: int) -> int | None:
    """1-based index of the last occurrence of v, or None."""
    for n in range(len(values), 0, -1):
        if values[n - 1] == v:
            return n
    return None
