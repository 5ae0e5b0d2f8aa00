"""Meta-Fibonacci sequences h_s(n) computed four independent ways."""

from .recurrence import (
    DeathReport,
    Family,
    SequenceSpec,
    SequenceTable,
    canonical_h_spec,
    conolly_spec,
    evaluate,
    jackson_ruskey_spec,
    value,
)

__all__ = [
    "DeathReport",
    "Family",
    "SequenceSpec",
    "SequenceTable",
    "canonical_h_spec",
    "conolly_spec",
    "evaluate",
    "jackson_ruskey_spec",
    "value",
]
__version__ = "0.1.0"
