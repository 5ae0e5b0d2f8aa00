"""OEIS b-file reading and writing.

A b-file is one ``index value`` record per line, separated by a single
space, with strictly increasing indices.  Lines starting with ``#`` are
comments; blank lines are ignored.
"""

from __future__ import annotations

import re
from importlib import resources
from pathlib import Path
from typing import Iterable

from .recurrence import SequenceTable

_RECORD = re.compile(r"(-?\d+) (-?\d+)")


class BFileError(ValueError):
    def __init__(self, lineno: int, message: str):
        super().__init__(f"line {lineno}: {message}")
        self.lineno = lineno


def parse_bfile(text: str) -> list[tuple[int, int]]:
    records: list[tuple[int, int]] = []
    for lineno, raw in enumerate(text.splitlines(), start=1):
        line = raw.rstrip("\r")
        if not line.strip() or line.startswith("#"):
            continue
        m = _RECORD.fullmatch(line.rstrip())
        if m is None:
            raise BFileError(lineno, f"malformed record {line!r}")
        index, val = int(m.group(1)), int(m.group(2))
        if records and index <= records[-1][0]:
            raise BFileError(lineno, f"index {index} does not increase (previous {records[-1][0]})")
        records.append((index, val))
    return records


def format_bfile(records: Iterable[tuple[int, int]], header: Iterable[str] = ()) -> str:
    lines = [f"# {h}" for h in header]
    lines.extend(f"{i} {v}" for i, v in records)
    return "\n".join(lines) + "\n" if lines else ""


def emit_bfile(table: SequenceTable, header: Iterable[str] = ()) -> str:
    return format_bfile(enumerate(table.values, start=1), header)


def bundled_fixture(name: str) -> str:
    """Text of a b-file shipped in ``conolly_kit/data``."""
    return resources.files("conolly_kit").joinpath("data").joinpath(name).read_text()


def bundled_names() -> list[str]:
    return sorted(p.name for p in resources.files("conolly_kit").joinpath("data").iterdir()
                  if p.name.endswith(".txt"))


def read_fixture(path_or_name: str) -> str:
    """Read a b-file from disk, falling back to the bundled fixtures.

    A name such as ``a109964.bfile`` or ``A109964`` that is not an existing
    path resolves to the bundled ``b109964.txt``.
    """
    p = Path(path_or_name)
    if p.is_file():
        return p.read_text()
    m = re.search(r"(\d{6})", p.name)
    if m and f"b{m.group(1)}.txt" in bundled_names():
        return bundled_fixture(f"b{m.group(1)}.txt")
    raise FileNotFoundError(f"no such b-file: {path_or_name}")
