"""Diagonalization over bit tables and the injection-extension process.

An :class:`Enumeration` is a table queried as ``bit_at(row, col)``.  The
diagonal string flips the table's diagonal, so it differs from row ``i`` at
column ``i`` for every ``i`` read.

:func:`extend_injection` uses the same construction to give each new source
label a binary string distinct from all strings assigned so far.  Finite
strings read as ``0`` past their end.  Step ``n`` assigns a string of
length ``n + 1`` whose final bit is the flipped pad bit, ``1``.  Starting
from the empty state the assignments are ``1, 01, 001, ...``.  The process
never completes: there is always a further step.
"""
from __future__ import annotations

import itertools
from dataclasses import dataclass
from typing import Callable, Hashable, Iterable, Iterator, NamedTuple, Sequence

from .errors import (
    DuplicateSourceError,
    InsufficientInputError,
    OutOfRangeError,
    TableFormatError,
)
from .numeration import BINARY, SymbolString


@dataclass(frozen=True)
class Enumeration:
    """A deterministic bit table.

    ``rows`` is the row count for finite tables and ``None`` for unbounded
    ones.  ``bit_at`` must be a pure function of its arguments.
    """

    bit_at_fn: Callable[[int, int], int]
    rows: int | None = None

    def bit_at(self, row: int, col: int) -> int:
        if row < 0 or col < 0:
            raise OutOfRangeError(f"negative table coordinate ({row}, {col})")
        if self.rows is not None and row >= self.rows:
            raise OutOfRangeError(f"row {row} beyond table of {self.rows} rows")
        return self.bit_at_fn(row, col)

    @classmethod
    def from_rows(cls, rows: Sequence[str]) -> Enumeration:
        """Finite table from equal-length 0/1 strings. Columns past the end read 0."""
        rows = [str(r) for r in rows]
        width = len(rows[0]) if rows else 0
        for lineno, r in enumerate(rows, start=1):
            if len(r) != width:
                raise TableFormatError(f"row has length {len(r)}, expected {width}", lineno)
            bad = set(r) - {"0", "1"}
            if bad:
                raise TableFormatError(f"non-binary character {sorted(bad)[0]!r}", lineno)
        return cls._padded(rows)

    @classmethod
    def _padded(cls, rows: Sequence[str]) -> Enumeration:
        frozen = tuple(rows)

        def bit_at(i: int, j: int) -> int:
            r = frozen[i]
            return 1 if j < len(r) and r[j] == "1" else 0

        return cls(bit_at, len(frozen))


def load_table(text: str) -> Enumeration:
    """One row per line, characters 0/1, all rows the same length."""
    return Enumeration.from_rows(text.splitlines())


def _flip(bit: int) -> int:
    return 1 - bit


def diagonal_prefix(e: Enumeration, n: int) -> SymbolString:
    if e.rows is not None and n > e.rows:
        raise OutOfRangeError(f"n = {n} exceeds table of {e.rows} rows")
    return SymbolString(BINARY, tuple(str(_flip(e.bit_at(j, j))) for j in range(n)))


class Witness(NamedTuple):
    row: int
    position: int
    row_bit: int
    diagonal_bit: int


def verify_diagonal(e: Enumeration, n: int) -> list[Witness]:
    """Evidence that the diagonal string differs from each of the first n rows."""
    d = diagonal_prefix(e, n)
    return [Witness(i, i, e.bit_at(i, i), int(d[i])) for i in range(n)]


@dataclass(frozen=True)
class InjectionState:
    steps: int = 0
    assignments: tuple[tuple[Hashable, SymbolString], ...] = ()
    completed: bool = False

    def __post_init__(self):
        if self.completed:
            raise ValueError("an injection-extension process never completes")
        if self.steps != len(self.assignments):
            raise ValueError("steps must equal the number of assignments")

    def labels(self) -> list[Hashable]:
        return [label for label, _ in self.assignments]

    def strings(self) -> list[SymbolString]:
        return [s for _, s in self.assignments]

    def as_enumeration(self) -> Enumeration:
        return Enumeration._padded([str(s) for s in self.strings()])


def extend_injection(state: InjectionState, next_label: Hashable) -> InjectionState:
    if next_label in set(state.labels()):
        raise DuplicateSourceError(f"label {next_label!r} already assigned")
    fresh = diagonal_prefix(state.as_enumeration(), state.steps) + BINARY.string("1")
    return InjectionState(
        steps=state.steps + 1,
        assignments=state.assignments + ((next_label, fresh),),
    )


def default_labels() -> Iterator[str]:
    """q0, q1, q2, ..."""
    return (f"q{i}" for i in itertools.count())


def extension_process(labels: Iterable[Hashable] | None = None) -> Iterator[InjectionState]:
    """Successive states, one per label. Unbounded with the default labels."""
    state = InjectionState()
    for label in default_labels() if labels is None else labels:
        state = extend_injection(state, label)
        yield state


def run_extension(labels: Iterable[Hashable] | None, steps: int) -> InjectionState:
    state = InjectionState()
    for state in itertools.islice(extension_process(labels), steps):
        pass
    if state.steps < steps:
        raise InsufficientInputError(f"label stream ended after {state.steps} of {steps} steps")
    return state
