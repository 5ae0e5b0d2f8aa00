"""Command-line front end: ``conolly-kit <command> [flags]``.

Settings come from, in increasing priority: built-in defaults, a plain
``key=value`` config file (``--config`` or the ``CONOLLY_KIT_CONFIG``
environment variable), and command-line flags.
"""

from __future__ import annotations

import argparse
import csv
import enum
import io
import json
import os
import random
import sys
from dataclasses import dataclass, fields
from typing import Iterable, Sequence

from . import analysis, genfunc, tree
from .bfile import BFileError, emit_bfile, format_bfile, parse_bfile, read_fixture
from .recurrence import (
    Family,
    SequenceSpec,
    SequenceTable,
    canonical_h_spec,
    conolly_spec,
    evaluate,
    jackson_ruskey_spec,
)

CONFIG_ENV = "CONOLLY_KIT_CONFIG"

EXIT_OK = 0
EXIT_FAIL = 1
EXIT_USAGE = 2


class OutputFormat(enum.Enum):
    PLAIN = "plain"
    CSV = "csv"
    BFILE = "bfile"
    DOT = "dot"
    JSONL = "jsonl"


SEQUENCE_FORMATS = (OutputFormat.PLAIN, OutputFormat.CSV, OutputFormat.BFILE, OutputFormat.JSONL)
TREE_FORMATS = (OutputFormat.DOT, OutputFormat.PLAIN)

FAMILIES = {
    "h": Family.EVEN_PART,
    "f": Family.CONOLLY,
    "t": Family.GENERALIZED_CONOLLY,
    "g": Family.ODD_PART,
}


class UsageError(Exception):
    pass


@dataclass
class RunConfig:
    s: int = 0
    k: int | None = None
    n_max: int = 50
    n: int | None = None
    s_max: int = 6
    family: str = "h"
    initials: tuple[int, ...] | None = None
    variant: str = "standard"
    format: str | None = None
    fixture: str | None = None
    offset_shift: int = 0
    which: str = "a"
    show_labels: bool = False
    samples: int = 20


_INT_KEYS = {"s", "k", "n_max", "n", "s_max", "offset_shift", "samples"}


def _coerce(key: str, raw):
    if raw is None:
        return None
    if key in _INT_KEYS:
        return int(raw)
    if key == "show_labels":
        if isinstance(raw, bool):
            return raw
        return str(raw).strip().lower() in ("1", "true", "yes", "on")
    if key == "initials":
        if isinstance(raw, (list, tuple)):
            return tuple(int(v) for v in raw)
        return tuple(int(v) for v in str(raw).replace(",", " ").split())
    return str(raw)


def parse_config_file(text: str) -> dict[str, object]:
    """``key=value`` lines; ``#`` starts a comment; keys may use - or _."""
    known = {f.name for f in fields(RunConfig)}
    out: dict[str, object] = {}
    for lineno, raw in enumerate(text.splitlines(), start=1):
        line = raw.split("#", 1)[0].strip()
        if not line:
            continue
        if "=" not in line:
            raise UsageError(f"config line {lineno}: expected key=value, got {raw!r}")
        key, val = (part.strip() for part in line.split("=", 1))
        key = key.replace("-", "_")
        if key not in known:
            raise UsageError(f"config line {lineno}: unknown key {key!r}")
        try:
            out[key] = _coerce(key, val)
        except ValueError as exc:
            raise UsageError(f"config line {lineno}: {exc}") from None
    return out


def build_config(args: argparse.Namespace, environ=os.environ) -> RunConfig:
    cfg = RunConfig()
    path = getattr(args, "config", None) or environ.get(CONFIG_ENV)
    if path:
        try:
            with open(path) as fh:
                text = fh.read()
        except OSError as exc:
            raise UsageError(f"cannot read config {path}: {exc}") from None
        for key, val in parse_config_file(text).items():
            setattr(cfg, key, val)
    for f in fields(RunConfig):
        val = getattr(args, f.name, None)
        if val is not None:
            setattr(cfg, f.name, _coerce(f.name, val))
    return cfg


def _format(cfg: RunConfig, allowed: Sequence[OutputFormat], default: OutputFormat) -> OutputFormat:
    if cfg.format is None:
        return default
    try:
        fmt = OutputFormat(cfg.format)
    except ValueError:
        raise UsageError(f"unknown format {cfg.format!r}") from None
    if fmt not in allowed:
        names = ", ".join(f.value for f in allowed)
        raise UsageError(f"format {fmt.value!r} not supported here (choose from {names})")
    return fmt


def spec_from_config(cfg: RunConfig) -> SequenceSpec:
    if cfg.family not in FAMILIES:
        raise UsageError(f"unknown family {cfg.family!r} (choose from {', '.join(FAMILIES)})")
    family = FAMILIES[cfg.family]
    try:
        if family is Family.CONOLLY:
            if cfg.initials:
                return SequenceSpec(family, 0, 2, cfg.initials)
            return conolly_spec()
        k = cfg.k if cfg.k is not None else 2
        if cfg.initials:
            return SequenceSpec(family, cfg.s, k, cfg.initials)
        if family is Family.EVEN_PART and k == 2:
            return canonical_h_spec(cfg.s)
        if family is Family.GENERALIZED_CONOLLY:
            return jackson_ruskey_spec(cfg.s, k)
    except ValueError as exc:
        raise UsageError(str(exc)) from None
    raise UsageError(f"family {cfg.family!r} with k={k} has no default initials; pass --initials")


def _records(pairs: Iterable[tuple[int, int]], fmt: OutputFormat, header: Sequence[str] = ()) -> str:
    pairs = list(pairs)
    if fmt is OutputFormat.CSV:
        buf = io.StringIO()
        w = csv.writer(buf, lineterminator="\n")
        w.writerow(["n", "value"])
        w.writerows(pairs)
        return buf.getvalue()
    if fmt is OutputFormat.JSONL:
        return "".join(json.dumps({"n": n, "value": v}) + "\n" for n, v in pairs)
    if fmt is OutputFormat.BFILE:
        return format_bfile(pairs, header)
    return "".join(f"{n} {v}\n" for n, v in pairs)


def describe(spec: SequenceSpec) -> str:
    init = ",".join(map(str, spec.initials))
    return f"{spec.family.value} s={spec.s} k={spec.k} initials={init}"


def cmd_gen(cfg: RunConfig, out, err) -> int:
    fmt = _format(cfg, SEQUENCE_FORMATS, OutputFormat.PLAIN)
    spec = spec_from_config(cfg)
    table = _evaluate(spec, cfg.n_max)
    out.write(_records(enumerate(table.values, start=1), fmt, [describe(spec)]))
    if not table.alive:
        err.write(f"error: {table.death}\n")
        return EXIT_FAIL
    return EXIT_OK


def _evaluate(spec: SequenceSpec, n_max: int) -> SequenceTable:
    try:
        return evaluate(spec, n_max)
    except ValueError as exc:
        raise UsageError(str(exc)) from None


def cmd_bfile_export(cfg: RunConfig, out, err) -> int:
    spec = spec_from_config(cfg)
    table = _evaluate(spec, cfg.n_max)
    out.write(emit_bfile(table, [describe(spec)]))
    if not table.alive:
        err.write(f"error: {table.death}\n")
        return EXIT_FAIL
    return EXIT_OK


def render_table(n_max: int, s_max: int) -> list[list[int]]:
    """Rows n = 1..n_max of h_0(n) .. h_{s_max}(n)."""
    cols = [evaluate(canonical_h_spec(s), n_max).values for s in range(s_max + 1)]
    return [[col[n] for col in cols] for n in range(n_max)]


def cmd_table(cfg: RunConfig, out, err) -> int:
    fmt = _format(cfg, (OutputFormat.PLAIN, OutputFormat.CSV), OutputFormat.PLAIN)
    if cfg.n_max < 1 or cfg.s_max < 0:
        raise UsageError("table needs n_max >= 1 and s_max >= 0")
    rows = render_table(cfg.n_max, cfg.s_max)
    if fmt is OutputFormat.CSV:
        w = csv.writer(out, lineterminator="\n")
        w.writerow(["n"] + [f"s={s}" for s in range(cfg.s_max + 1)])
        for n, row in enumerate(rows, start=1):
            w.writerow([n, *row])
        return EXIT_OK
    width = max(3, len(str(cfg.n_max)), len(str(rows[-1][0])) if rows else 1)
    head = "n\\s".rjust(width) + " |" + "".join(str(s).rjust(width + 1) for s in range(cfg.s_max + 1))
    out.write(head + "\n")
    out.write("-" * len(head) + "\n")
    for n, row in enumerate(rows, start=1):
        out.write(str(n).rjust(width) + " |" + "".join(str(v).rjust(width + 1) for v in row) + "\n")
    return EXIT_OK


def _chop_samples(s: int, n_hi: int, count: int) -> list[int]:
    lo = s + 4
    if n_hi < lo:
        return []
    rng = random.Random(f"chop-{s}-{n_hi}")
    pool = range(lo, n_hi + 1)
    return sorted(rng.sample(pool, min(count, len(pool))))


def cmd_verify(cfg: RunConfig, out, err) -> int:
    s, n_max = cfg.s, cfg.n_max
    if n_max < 1:
        raise UsageError("n_max must be positive")
    results: list[tuple[bool, str]] = []

    records = None
    if cfg.fixture:
        try:
            records = parse_bfile(read_fixture(cfg.fixture))
        except FileNotFoundError as exc:
            raise UsageError(str(exc)) from None
        except BFileError as exc:
            results.append((False, f"fixture {cfg.fixture}: {exc}"))
    length = n_max
    if records:
        length = max(length, analysis.fixture_span(records, cfg.offset_shift))

    rep = analysis.cross_check(s, n_max)
    if rep.ok:
        results.append((True, f"engines agree on n=1..{n_max} ({', '.join(rep.engines)})"))
    else:
        mm = rep.first_mismatch
        vals = ", ".join(f"{k}={v}" for k, v in mm.values.items())
        results.append((False, f"engines disagree first at n={mm.n}: {vals}"))

    table = evaluate(canonical_h_spec(s), length)
    bad = analysis.check_slow_growing(table)
    results.append((bad is None,
                    f"slow growth to n={length}" if bad is None else f"slow growth broken at n={bad}"))

    if bad is None:
        freq = analysis.frequency_report(table)
        if freq.ok:
            results.append((True, f"multiplicities match for values 1..{freq.complete_up_to}"))
        else:
            v, want, got = freq.violations[0]
            results.append((False, f"value {v} occurs {got} times, expected {want}"))

    failed_chop = None
    samples = _chop_samples(s, min(n_max, 10**4), cfg.samples)
    for n in samples:
        reduced = tree.chop(tree.build_snapshot(s, n))
        if reduced != tree.build_snapshot(s, n - s - tree.leaf_count(s, n)):
            failed_chop = n
            break
    if samples:
        results.append((failed_chop is None,
                        f"chop reduces T_{s}(n) as expected for {len(samples)} sampled n"
                        if failed_chop is None else f"chop mismatch at n={failed_chop}"))

    if records is not None:
        mm = analysis.compare_bfile(table, records, cfg.offset_shift)
        used = sum(1 for i, _ in records if i - cfg.offset_shift >= 1)
        results.append((mm is None,
                        f"fixture {cfg.fixture}: {used} terms match (offset shift {cfg.offset_shift})"
                        if mm is None else
                        f"fixture {cfg.fixture}: n={mm.n} expected {mm.expected}, got {mm.actual}"))

    for ok, msg in results:
        out.write(f"{'PASS' if ok else 'FAIL'}  {msg}\n")
    failures = sum(1 for ok, _ in results if not ok)
    out.write(f"verify s={s}: {len(results) - failures}/{len(results)} checks passed\n")
    return EXIT_OK if failures == 0 else EXIT_FAIL


def _variant(cfg: RunConfig) -> tree.Variant:
    try:
        return tree.Variant(cfg.variant)
    except ValueError:
        raise UsageError(f"unknown variant {cfg.variant!r} (standard or prime)") from None


def _tree_n(cfg: RunConfig) -> int:
    n = cfg.n if cfg.n is not None else cfg.n_max
    if n < 1:
        raise UsageError("tree size n must be positive")
    return n


def _render_tree(snap: tree.TreeSnapshot, cfg: RunConfig) -> str:
    fmt = _format(cfg, TREE_FORMATS, OutputFormat.DOT)
    if fmt is OutputFormat.DOT:
        return tree.export_dot(snap, show_labels=cfg.show_labels)
    lines = []
    for x in snap.nodes:
        labels = str(x.first) if x.first == x.last else f"{x.first}-{x.last}"
        parent = "-" if x.parent is None else str(x.parent)
        lines.append(f"{labels} {x.node} {parent}")
    return "\n".join(lines) + "\n"


def cmd_tree(cfg: RunConfig, out, err) -> int:
    try:
        snap = tree.build_snapshot(cfg.s, _tree_n(cfg), _variant(cfg))
    except ValueError as exc:
        raise UsageError(str(exc)) from None
    out.write(_render_tree(snap, cfg))
    return EXIT_OK


def cmd_chop(cfg: RunConfig, out, err) -> int:
    try:
        snap = tree.build_snapshot(cfg.s, _tree_n(cfg), _variant(cfg))
        reduced = tree.chop(snap)
    except tree.ChopError as exc:
        err.write(f"error: {exc}\n")
        return EXIT_FAIL
    except ValueError as exc:
        raise UsageError(str(exc)) from None
    out.write(_render_tree(reduced, cfg))
    return EXIT_OK


def cmd_gf(cfg: RunConfig, out, err) -> int:
    fmt = _format(cfg, (OutputFormat.PLAIN, OutputFormat.CSV, OutputFormat.JSONL), OutputFormat.PLAIN)
    if cfg.n_max < 0:
        raise UsageError("n_max must be nonnegative")
    if cfg.which == "d":
        series = genfunc.d_series(cfg.s, cfg.n_max)
    elif cfg.which == "a":
        series = genfunc.a_series(cfg.s, cfg.n_max)
    else:
        raise UsageError(f"--which must be 'a' or 'd', got {cfg.which!r}")
    out.write(_records(enumerate(series.tolist()), fmt))
    return EXIT_OK


COMMANDS = {
    "gen": cmd_gen,
    "table": cmd_table,
    "verify": cmd_verify,
    "tree": cmd_tree,
    "chop": cmd_chop,
    "gf": cmd_gf,
    "bfile-export": cmd_bfile_export,
}


def build_parser() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--config", help=f"key=value settings file (default: ${CONFIG_ENV})")
    common.add_argument("--s", type=int, help="shift parameter s (default 0)")
    common.add_argument("--k", type=int, help="number of terms k (default 2)")
    common.add_argument("--n-max", dest="n_max", type=int, help="number of terms (default 50)")
    common.add_argument("--format", choices=[f.value for f in OutputFormat])

    seq = argparse.ArgumentParser(add_help=False)
    seq.add_argument("--family", choices=sorted(FAMILIES),
                     help="h: h_{s,k} (canonical h_s for k=2), f: Conolly, t: T_{s,k}, g: g_{s,k}")
    seq.add_argument("--initials", help="comma-separated initial values a(1), a(2), ...")

    shape = argparse.ArgumentParser(add_help=False)
    shape.add_argument("--n", type=int, help="last label of the snapshot")
    shape.add_argument("--variant", choices=[v.value for v in tree.Variant])
    shape.add_argument("--show-labels", dest="show_labels", action="store_const", const=True,
                       help="annotate nodes with their labels")

    parser = argparse.ArgumentParser(prog="conolly-kit", description=__doc__.splitlines()[0])
    sub = parser.add_subparsers(dest="command", required=True)
    sub.add_parser("gen", parents=[common, seq], help="emit a sequence")
    sub.add_parser("bfile-export", parents=[common, seq], help="emit a sequence as an OEIS b-file")
    p = sub.add_parser("table", parents=[common], help="h_s(n) for n <= n_max, s <= s_max")
    p.add_argument("--s-max", dest="s_max", type=int, help="largest s column (default 6)")
    p = sub.add_parser("verify", parents=[common], help="cross-check every engine for one s")
    p.add_argument("--fixture", help="b-file to compare against (path or bundled name)")
    p.add_argument("--offset-shift", dest="offset_shift", type=int,
                   help="compare h_s(n) with fixture index n + shift (default 0)")
    p.add_argument("--samples", type=int, help="number of chop samples (default 20)")
    sub.add_parser("tree", parents=[common, shape], help="DOT of the labeled tree on labels 1..n")
    sub.add_parser("chop", parents=[common, shape], help="DOT of the chopped tree")
    p = sub.add_parser("gf", parents=[common], help="generating function coefficients")
    p.add_argument("--which", choices=["a", "d"], help="a: leaf counts, d: leaf indicators (default a)")
    return parser


def main(argv: Sequence[str] | None = None, out=None, err=None, environ=None) -> int:
    out = sys.stdout if out is None else out
    err = sys.stderr if err is None else err
    environ = os.environ if environ is None else environ
    args = build_parser().parse_args(argv)
    try:
        cfg = build_config(args, environ)
        return COMMANDS[args.command](cfg, out, err)
    except UsageError as exc:
        err.write(f"error: {exc}\n")
        return EXIT_USAGE


if __name__ == "__main__":
    sys.exit(main())
